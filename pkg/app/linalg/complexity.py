"""
Closed-form operation counts of every inversion method, evaluated exactly.

Each formula is evaluated over Fractions and must come out integral.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

from app.linalg.errors import InvalidArgument


class Method(str, Enum):
    CHOLESKY = "cholesky"
    LDL = "ldl"
    KM = "km"
    V1 = "v1"
    V1_STAGE1 = "v1_stage1"
    V1_STAGE2 = "v1_stage2"
    V2 = "v2"
    MODGAUSS_FULL = "modgauss_full"
    MODGAUSS_P = "modgauss_p"


@dataclass(frozen=True)
class CountFormula:
    method: Method
    muldiv: Callable[[Fraction, Fraction], Fraction]
    sqrt: Callable[[Fraction], Fraction]
    text: str


_F = Fraction


def _NO_ROOTS(n: Fraction) -> Fraction:
    return _F(0)


def _N_ROOTS(n: Fraction) -> Fraction:
    return n


FORMULAS: dict[Method, CountFormula] = {
    f.method: f
    for f in (
        CountFormula(Method.CHOLESKY, lambda n, p: n ** 3 / 2 + 3 * n ** 2 / 2, _N_ROOTS, "n³/2 + 3n²/2"),
        CountFormula(Method.LDL, lambda n, p: 2 * n ** 3 / 3 + n ** 2 / 2 - n / 6, _NO_ROOTS, "2n³/3 + n²/2 − n/6"),
        CountFormula(Method.KM, lambda n, p: n ** 3 / 2 + n ** 2 / 2, _N_ROOTS, "n³/2 + n²/2"),
        CountFormula(Method.V1, lambda n, p: n ** 3 / 2 + n ** 2 - n / 2, _NO_ROOTS, "n³/2 + n² − n/2"),
        CountFormula(Method.V1_STAGE1, lambda n, p: n ** 3 / 3 + n ** 2 / 2 + n / 6, _NO_ROOTS,
                     "n³/3 + n²/2 + n/6"),
        CountFormula(Method.V1_STAGE2, lambda n, p: n ** 3 / 6 + n ** 2 / 2 - 2 * n / 3, _NO_ROOTS,
                     "n³/6 + n²/2 − 2n/3"),
        CountFormula(Method.V2, lambda n, p: n ** 3 / 2 + n ** 2 / 2, _NO_ROOTS, "n³/2 + n²/2"),
        CountFormula(Method.MODGAUSS_FULL, lambda n, p: n ** 3, _NO_ROOTS, "n³"),
        CountFormula(
            Method.MODGAUSS_P,
            lambda n, p: (n ** 3 / 3 + n ** 2 / 2 + n / 6 + p ** 2 * n - p * n
                          - p ** 3 / 3 + p ** 2 / 2 - p / 6),
            _NO_ROOTS,
            "n³/3 + n²/2 + n/6 + p²n − pn − p³/3 + p²/2 − p/6",
        ),
    )
}


def _integral(value: Fraction) -> int:
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"Count formula produced {value}, expected a nonnegative integer")
    return int(value)


def _method(method: Method | str) -> Method:
    try:
        return Method(method)
    except ValueError:
        raise InvalidArgument(f"Unknown method '{method}'") from None


def q_theor(method: Method | str, n: int, p: int | None = None) -> int:
    """
    Theoretical multiplications plus divisions.
    :param method: Method or its name
    :param n: matrix order, n >= 1
    :param p: number of trailing required variables, only for modgauss_p
    :return: exact count
    """
    method = _method(method)
    if n < 1:
        raise InvalidArgument(f"n must be at least 1, got {n}")
    if method is Method.MODGAUSS_P:
        if p is None or not 0 <= p <= n:
            raise InvalidArgument(f"modgauss_p needs 0 <= p <= {n}, got {p}")
    elif p is not None:
        raise InvalidArgument(f"p only applies to modgauss_p, not {method.value}")
    return _integral(FORMULAS[method].muldiv(_F(n), _F(p or 0)))


def s_theor(method: Method | str, n: int) -> int:
    """Theoretical square root evaluations."""
    method = _method(method)
    if n < 1:
        raise InvalidArgument(f"n must be at least 1, got {n}")
    return _integral(FORMULAS[method].sqrt(_F(n)))


def count_table(sizes: Iterable[int], p: int = 1) -> list[dict]:
    """
    Theoretical counts of every method at each order, one record per (method, n).
    The modgauss_p row uses p trailing required variables (capped at n).
    """
    records = []
    for n in sizes:
        for method in Method:
            pp = min(p, n) if method is Method.MODGAUSS_P else None
            records.append({
                "method": method.value,
                "n": n,
                "p": pp,
                "formula": FORMULAS[method].text,
                "q_theor": q_theor(method, n, pp),
                "s_theor": s_theor(method, n),
            })
    return records
