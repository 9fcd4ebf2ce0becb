"""
Benchmark harness.

Experiment 1 validates operation counts on diagonally dominant matrices, experiment 2 adds
timings and the spectral distance to a reference inverse, and experiment 3 repeats
experiment 2 on matrices without diagonal dominance. Every (n, method) cell becomes one
InversionReport; a failing method never aborts the other cells.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from app.genbench.generators import FamilyKind, MatrixFamily, generate
from app.linalg import baselines, modgauss, syminv
from app.linalg.complexity import Method, q_theor, s_theor
from app.linalg.errors import InvalidArgument, NotPositiveDefinite, ZeroPivot
from app.linalg.matcore import Matrix, OpCounter, norm2_estimate, residual_fro
from app.utils.config import Settings, load_settings

logger = logging.getLogger(__name__)

Inverter = Callable[[Matrix, OpCounter | None], Matrix]

INVERTERS: dict[str, Inverter] = {
    "cholesky": baselines.invert_cholesky,
    "ldl": baselines.invert_ldl,
    "km": baselines.invert_km,
    "km_elementwise": baselines.invert_km_elementwise,
    "v1": syminv.invert_v1,
    "v2": syminv.invert_v2,
    "gauss": modgauss.invert,
    "robust": syminv.invert_symmetric_robust,
}

# the methods behind 'all', in table order; km_elementwise runs only when named
ALL_METHODS = ("cholesky", "ldl", "km", "v1", "v2")

THEORY: dict[str, Method] = {
    "cholesky": Method.CHOLESKY,
    "ldl": Method.LDL,
    "km": Method.KM,
    "km_elementwise": Method.KM,
    "v1": Method.V1,
    "v2": Method.V2,
    "gauss": Method.MODGAUSS_FULL,
    "robust": Method.V2,
}

EXPERIMENT_FAMILY = {
    1: FamilyKind.DIAG_DOMINANT,
    2: FamilyKind.DIAG_DOMINANT,
    3: FamilyKind.NON_DOMINANT,
}


class Status(str, Enum):
    OK = "ok"
    INAPPLICABLE = "inapplicable"
    FAILED = "failed"


@dataclass(frozen=True)
class InversionReport:
    method: str
    n: int
    family: MatrixFamily
    q_theor: int
    s_theor: int
    q_pract: int | None = None
    s_pract: int | None = None
    residual_fro: float | None = None
    dist2: float | None = None
    seconds: float | None = None
    status: Status = Status.OK
    error: str | None = None

    @property
    def counts_match(self) -> bool:
        return self.q_pract == self.q_theor and self.s_pract == self.s_theor

    def as_record(self) -> dict:
        return {
            "method": self.method,
            "n": self.n,
            "family": self.family.kind.value,
            "seed": self.family.seed,
            "q_theor": self.q_theor,
            "q_pract": self.q_pract,
            "s_theor": self.s_theor,
            "s_pract": self.s_pract,
            "residual_fro": self.residual_fro,
            "dist2": self.dist2,
            "seconds": self.seconds,
            "status": self.status.value,
            "error": self.error,
        }


def parse_methods(methods: str | Iterable[str]) -> list[str]:
    """
    Expands 'all' and validates method names.
    :param methods: 'all', a comma separated string or an iterable of names
    :return: list of method names
    """
    if isinstance(methods, str):
        methods = [m.strip() for m in methods.split(",") if m.strip()]
    names = []
    for name in methods:
        if name == "all":
            names.extend(m for m in ALL_METHODS if m not in names)
        elif name not in INVERTERS:
            raise InvalidArgument(f"Unknown method '{name}', choose from {sorted(INVERTERS)} or 'all'")
        elif name not in names:
            names.append(name)
    if not names:
        raise InvalidArgument("No methods given")
    return names


def parse_sizes(sizes: str | Iterable[int]) -> list[int]:
    try:
        if isinstance(sizes, str):
            sizes = [int(s) for s in sizes.split(",") if s.strip()]
        sizes = [int(n) for n in sizes]
    except ValueError:
        raise InvalidArgument(f"Sizes must be comma separated integers, got {sizes!r}") from None
    if not sizes or min(sizes) < 1:
        raise InvalidArgument(f"Sizes must be a nonempty list of positive integers, got {sizes}")
    return sizes


def median_seconds(fn: Callable[[], object], repeats: int, warmup: int) -> float:
    """Median wall time of repeats calls after warmup discarded calls, on the monotonic clock."""
    for _ in range(warmup):
        fn()
    samples = []
    for _ in range(max(repeats, 1)):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return float(np.median(samples))


@dataclass(frozen=True)
class _Case:
    family: MatrixFamily
    a: Matrix
    reference: Matrix | None


def _count_cell(case: _Case, method: str, settings: Settings) -> InversionReport:
    n = case.family.n
    report = InversionReport(
        method=method,
        n=n,
        family=case.family,
        q_theor=q_theor(THEORY[method], n),
        s_theor=s_theor(THEORY[method], n),
    )
    counter = OpCounter()
    try:
        inverse = INVERTERS[method](case.a, counter)
    except (NotPositiveDefinite, ZeroPivot) as exc:
        logger.warning("%s is inapplicable to %s n=%d: %s", method, case.family.kind.value, n, exc)
        return replace(report, status=Status.INAPPLICABLE, error=str(exc))
    except Exception as exc:
        logger.warning("%s failed on %s n=%d: %s", method, case.family.kind.value, n, exc)
        return replace(report, status=Status.FAILED, error=f"{type(exc).__name__}: {exc}")

    dist2 = None
    if case.reference is not None:
        dist2 = norm2_estimate(inverse - case.reference, settings.norm_iters, settings.norm_tol).spectral
    logger.info("%s n=%d: muldiv=%d sqrt=%d", method, n, counter.muldiv, counter.sqrt)
    return replace(
        report,
        q_pract=counter.muldiv,
        s_pract=counter.sqrt,
        residual_fro=residual_fro(case.a, inverse),
        dist2=dist2,
    )


def _time_cell(case: _Case, report: InversionReport, settings: Settings) -> InversionReport:
    inverter = INVERTERS[report.method]
    seconds = median_seconds(lambda: inverter(case.a, None), settings.timing_repeats, settings.timing_warmup)
    logger.info("%s n=%d: %.6f s", report.method, report.n, seconds)
    return replace(report, seconds=seconds)


def run_experiment(exp_id: int, sizes: Iterable[int], methods: str | Iterable[str] = "all",
                   seed: int | None = None, family: FamilyKind | str | None = None,
                   workers: int | None = None, settings: Settings | None = None) -> list[InversionReport]:
    """
    Runs one experiment over every (n, method) cell.
    :param exp_id: 1 (counts), 2 (time and distance, dominant) or 3 (time and distance, non-dominant)
    :param sizes: matrix orders
    :param methods: method names or 'all'
    :param seed: base seed, the matrix of order n uses seed + n
    :param family: overrides the experiment's matrix family
    :param workers: thread pool size for the count/accuracy cells; timing always runs serially
    :param settings: configuration, load_settings() by default
    :return: reports ordered by n, then by method
    """
    if exp_id not in EXPERIMENT_FAMILY:
        raise InvalidArgument(f"Experiment must be 1, 2 or 3, got {exp_id}")
    settings = settings or load_settings()
    sizes = parse_sizes(sizes)
    methods = parse_methods(methods)
    seed = settings.default_seed if seed is None else seed
    kind = FamilyKind(family) if family is not None else EXPERIMENT_FAMILY[exp_id]
    workers = settings.workers if workers is None else workers

    cases = []
    for n in sizes:
        fam = MatrixFamily(kind, n, seed + n)
        a = generate(fam, settings.max_reseeds)
        reference = modgauss.invert(a) if exp_id != 1 else None
        cases.append(_Case(fam, a, reference))
    cells = [(case, method) for case in cases for method in methods]
    logger.info("Experiment %d: %d cells on %s matrices", exp_id, len(cells), kind.value)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda cell: _count_cell(*cell, settings), cells))
    else:
        reports = [_count_cell(case, method, settings) for case, method in cells]

    if exp_id != 1:
        reports = [
            _time_cell(case, report, settings) if report.status is Status.OK else report
            for (case, _), report in zip(cells, reports)
        ]
    return reports
