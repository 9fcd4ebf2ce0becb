"""
Invariant suite behind `syminv verify`: exact counts, cross-method agreement, the
elimination lemmas and the zero-minor fallback, on seeded matrices.
"""
import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from app.genbench.generators import diag_dominant, non_dominant, zero_leading_minor
from app.genbench.harness import ALL_METHODS, INVERTERS, THEORY
from app.linalg import modgauss, syminv
from app.linalg.complexity import Method, q_theor, s_theor
from app.linalg.errors import ZeroPivot
from app.linalg.matcore import OpCounter, RequiredSet, frobenius_norm, relative_distance, residual_fro

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""


def _counts_exact(max_n: int, seed: int) -> tuple[bool, str]:
    for n in range(2, max_n + 1):
        a = diag_dominant(n, seed + n)
        for method in (*ALL_METHODS, "gauss"):
            counter = OpCounter()
            INVERTERS[method](a, counter)
            expected = (q_theor(THEORY[method], n), s_theor(THEORY[method], n))
            if (counter.muldiv, counter.sqrt) != expected:
                return False, f"{method} n={n}: counted {(counter.muldiv, counter.sqrt)}, expected {expected}"
        counter = OpCounter()
        modgauss.run_elimination(a, [n], counter)
        if counter.muldiv != q_theor(Method.MODGAUSS_P, n, 1):
            return False, f"p=1 elimination n={n}: counted {counter.muldiv}"
    return True, f"n = 2..{max_n}"


def _formula_relations(max_n: int, seed: int) -> tuple[bool, str]:
    for n in range(2, max_n + 1):
        if q_theor(Method.V1_STAGE1, n) + q_theor(Method.V1_STAGE2, n) != q_theor(Method.V1, n):
            return False, f"stage counts do not add up at n={n}"
        if n >= 3:
            q = {m: q_theor(m, n) for m in (Method.V2, Method.KM, Method.V1, Method.CHOLESKY, Method.LDL)}
            ordered = q[Method.V2] == q[Method.KM] < q[Method.V1] < q[Method.CHOLESKY] and q[Method.V1] < q[Method.LDL]
            # LDLᵀ needs fewer operations than Cholesky up to n = 6
            if n >= 7:
                ordered = ordered and q[Method.CHOLESKY] < q[Method.LDL]
            if not ordered:
                return False, f"ordering broken at n={n}: {q}"
    return True, ""


def _agreement(max_n: int, seed: int) -> tuple[bool, str]:
    worst = 0.0
    for n in range(1, min(max_n, 50) + 1):
        a = diag_dominant(n, seed + n)
        reference = modgauss.invert(a)
        for inverse in (syminv.invert_v1(a), syminv.invert_v2(a), syminv.invert_v2_reference(a)):
            if not np.array_equal(inverse, inverse.T):
                return False, f"non-symmetric output at n={n}"
            worst = max(worst, relative_distance(inverse, reference))
    return worst <= 1e-11, f"max relative distance {worst:.2e}"


def _reference_equivalence(max_n: int, seed: int) -> tuple[bool, str]:
    worst = 0.0
    for n in range(1, min(max_n, 20) + 1):
        a = diag_dominant(n, seed + n)
        worst = max(worst, relative_distance(syminv.invert_v2_reference(a), syminv.invert_v2(a)))
    return worst <= 1e-13, f"max relative distance {worst:.2e}"


def _lemmas(max_n: int, seed: int) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    for n in range(1, min(max_n, 12) + 1):
        symmetric = diag_dominant(n, seed + n)
        general = symmetric + np.triu(rng.uniform(-0.5, 0.5, size=(n, n)), 1) / n
        for a in (symmetric, general):
            for m in range(n):
                if not syminv.lemma1_check(a, m):
                    return False, f"block inverse property fails at n={n}, m={m}"
                if not syminv.lemma2_check(a, m):
                    return False, f"rank-1 update property fails at n={n}, m={m}"
    return True, ""


def _stage_one_structure(max_n: int, seed: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        a = diag_dominant(n, seed + n)
        lower = syminv.v1_stage1(a).f
        if np.abs(np.triu(lower, 1)).max(initial=0.0) != 0.0:
            return False, f"stage 1 output not lower triangular at n={n}"
        f = syminv.v1_lower(a).f
        if not np.array_equal(syminv.invert_v1(a), f + (f - np.diag(np.diag(f))).T):
            return False, f"reconstruction differs at n={n}"
        state = modgauss.run_elimination(a)
        if not modgauss.row_identities_check(a, state.f, RequiredSet.all(n)):
            return False, f"row identities fail at n={n}"
    return True, ""


def _indefinite(max_n: int, seed: int) -> tuple[bool, str]:
    for n in range(2, max_n + 1):
        a = non_dominant(n, seed + n)
        bound = 1e-8 * frobenius_norm(a)
        for method in ("v1", "v2"):
            if residual_fro(a, INVERTERS[method](a, None)) > bound:
                return False, f"{method} residual too large on non-dominant n={n}"
    return True, ""


def _zero_minor(max_n: int, seed: int) -> tuple[bool, str]:
    for n in range(2, max_n + 1):
        a = zero_leading_minor(n, seed + n)
        for method in (syminv.invert_v1, syminv.invert_v2):
            try:
                method(a)
                return False, f"{method.__name__} accepted a zero leading minor at n={n}"
            except ZeroPivot as exc:
                if exc.step != 0:
                    return False, f"{method.__name__} reported step {exc.step} at n={n}"
        if residual_fro(a, syminv.invert_symmetric_robust(a)) > 1e-8 * frobenius_norm(a):
            return False, f"fallback residual too large at n={n}"
    return True, ""


CHECKS: dict[str, Callable[[int, int], tuple[bool, str]]] = {
    "count exactness": _counts_exact,
    "formula relations": _formula_relations,
    "method agreement": _agreement,
    "sweep vs scalar reference": _reference_equivalence,
    "elimination lemmas": _lemmas,
    "two-stage structure": _stage_one_structure,
    "indefinite inputs": _indefinite,
    "zero leading minor": _zero_minor,
}


def run_verification(max_n: int = 40, seed: int = 42) -> list[CheckOutcome]:
    """
    Runs every check; an exception inside a check counts as a failure of that check only.
    :param max_n: largest matrix order exercised
    :param seed: base seed of the generated matrices
    :return: list of CheckOutcome, in CHECKS order
    """
    outcomes = []
    for name, check in CHECKS.items():
        try:
            passed, detail = check(max_n, seed)
        except Exception as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        level = logging.INFO if passed else logging.ERROR
        logger.log(level, "%s: %s %s", name, "passed" if passed else "FAILED", detail)
        outcomes.append(CheckOutcome(name, passed, detail))
    return outcomes
