"""
Seeded test-matrix families. Every family is symmetric; entries are drawn from numpy's
default_rng so a (kind, n, seed) triple always produces the same matrix.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from app.linalg.baselines import ldl_factor
from app.linalg.errors import GenerationFailed, InvalidArgument, ZeroPivot
from app.linalg.matcore import Matrix

logger = logging.getLogger(__name__)

MAX_RESEEDS = 100


class FamilyKind(str, Enum):
    DIAG_DOMINANT = "diag_dominant"
    NON_DOMINANT = "non_dominant"
    ZERO_LEADING_MINOR = "zero_leading_minor"


@dataclass(frozen=True)
class MatrixFamily:
    kind: FamilyKind
    n: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        if self.n < 1:
            raise InvalidArgument(f"Matrix order must be at least 1, got {self.n}")
        if self.kind is FamilyKind.ZERO_LEADING_MINOR and self.n < 2:
            raise InvalidArgument("zero_leading_minor needs n >= 2")


def _symmetric_uniform(n: int, rng: np.random.Generator, with_diagonal: bool) -> Matrix:
    upper = np.triu(rng.uniform(-1.0, 1.0, size=(n, n)), 0 if with_diagonal else 1)
    return upper + np.triu(upper, 1).T


def _make_dominant(m: Matrix, rng: np.random.Generator, rows: slice = slice(None)):
    off = np.abs(m).sum(axis=1) - np.abs(np.diag(m))
    idx = np.arange(m.shape[0])[rows]
    m[idx, idx] = off[idx] + rng.uniform(1.0, 2.0, size=idx.size)


def diag_dominant(n: int, seed: int) -> Matrix:
    rng = np.random.default_rng(seed)
    m = _symmetric_uniform(n, rng, with_diagonal=False)
    _make_dominant(m, rng)
    return m


def violates_dominance(m: Matrix) -> bool:
    off = np.abs(m).sum(axis=1) - np.abs(np.diag(m))
    return bool(np.any(np.abs(np.diag(m)) <= off))


def non_dominant(n: int, seed: int, max_reseeds: int = MAX_RESEEDS) -> Matrix:
    """
    Symmetric uniform [-1, 1] matrix with no dominance enforced. Candidates with a
    vanishing leading principal minor, or (for n > 1) without a single non-dominant row,
    are discarded and the seed is incremented.
    """
    for attempt in range(max_reseeds):
        m = _symmetric_uniform(n, np.random.default_rng(seed + attempt), with_diagonal=True)
        if n > 1 and not violates_dominance(m):
            continue
        try:
            ldl_factor(m)
        except ZeroPivot:
            continue
        if attempt:
            logger.debug("non_dominant n=%d: seed %d accepted after %d reseeds", n, seed + attempt, attempt)
        return m
    raise GenerationFailed(f"No pivot-free non-dominant matrix of order {n} after {max_reseeds} seeds from {seed}")


def zero_leading_minor(n: int, seed: int) -> Matrix:
    """
    [[0, 1], [1, 0]] in the top-left corner, weakly coupled to a diagonally dominant bulk.
    a₁₁ = 0 while the matrix stays nonsingular.
    """
    if n < 2:
        raise InvalidArgument("zero_leading_minor needs n >= 2")
    rng = np.random.default_rng(seed)
    m = _symmetric_uniform(n, rng, with_diagonal=False)
    m[:2, :2] = [[0.0, 1.0], [1.0, 0.0]]
    m[:2, 2:] *= 0.1 / n
    m[2:, :2] *= 0.1 / n
    _make_dominant(m, rng, slice(2, None))
    return m


def generate(family: MatrixFamily, max_reseeds: int = MAX_RESEEDS) -> Matrix:
    """
    Deterministic matrix of the given family.
    :param family: kind, order and seed
    :param max_reseeds: reseed budget of the non_dominant family
    :return: Matrix
    """
    if family.kind is FamilyKind.DIAG_DOMINANT:
        return diag_dominant(family.n, family.seed)
    if family.kind is FamilyKind.NON_DOMINANT:
        return non_dominant(family.n, family.seed, max_reseeds)
    return zero_leading_minor(family.n, family.seed)
