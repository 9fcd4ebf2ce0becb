"""
Shared matrix and counting types for every inversion kernel.

A Matrix is a float64 numpy array of shape (n, n). Kernels validate their input with
as_matrix and never write into it.
"""
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np
import numpy.typing as npt

from app.linalg.errors import DimensionMismatch, IndexOutOfRange, InvalidArgument, NotSymmetric

Matrix = npt.NDArray[np.float64]

PIVOT_REL_TOL = 1e-12
NORM_ITERS = 200
NORM_TOL = 1e-12


def as_matrix(data) -> Matrix:
    """
    Validates data as a square, finite, real matrix and returns it as a float64 array.
    :param data: anything numpy can turn into a 2-D array
    :return: Matrix (a copy when a dtype/layout conversion was needed, otherwise the input itself)
    """
    m = np.ascontiguousarray(data, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"Expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise DimensionMismatch("Matrix order must be at least 1")
    if not np.all(np.isfinite(m)):
        raise InvalidArgument("Matrix contains NaN or Inf entries")
    return m


def pivot_tol(a: Matrix, rel: float = PIVOT_REL_TOL) -> float:
    # rel * (1 + max absolute row sum)
    return rel * (1.0 + float(np.abs(a).sum(axis=1).max()))


@dataclass(frozen=True)
class SymmetryCheck:
    tolerance: float = 0.0

    def __post_init__(self):
        if self.tolerance < 0:
            raise InvalidArgument("Symmetry tolerance must be nonnegative")

    def passes(self, a: Matrix) -> bool:
        gap = np.abs(a - a.T)
        return bool(np.all(gap <= self.tolerance * np.maximum(1.0, np.abs(a))))

    def require(self, a: Matrix):
        if not self.passes(a):
            worst = float(np.abs(a - a.T).max())
            raise NotSymmetric(f"Matrix is not symmetric (max |a_ij - a_ji| = {worst:.3e})")


@dataclass
class OpCounter:
    """Tallies of multiplications+divisions and square roots for one algorithm run."""
    muldiv: int = 0
    sqrt: int = 0

    def mul(self, count: int = 1):
        self.muldiv += count

    def root(self, count: int = 1):
        self.sqrt += count


class _NoCount(OpCounter):
    def mul(self, count: int = 1):
        pass

    def root(self, count: int = 1):
        pass


_NO_COUNT = _NoCount()


def counting(counter: OpCounter | None) -> OpCounter:
    return _NO_COUNT if counter is None else counter


@dataclass(frozen=True)
class RequiredSet:
    """1-based indices of the solution components the caller needs."""
    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise InvalidArgument("RequiredSet must not be empty")
        if list(self.indices) != sorted(set(self.indices)):
            raise InvalidArgument("RequiredSet indices must be sorted and distinct")
        if self.indices[0] < 1 or self.indices[-1] > self.n:
            raise IndexOutOfRange(f"Required indices must lie in [1, {self.n}], got {list(self.indices)}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "RequiredSet":
        return cls(n=n, indices=tuple(sorted(set(int(i) for i in indices))))

    @classmethod
    def all(cls, n: int) -> "RequiredSet":
        return cls(n=n, indices=tuple(range(1, n + 1)))

    @classmethod
    def trailing(cls, n: int, p: int) -> "RequiredSet":
        if not 1 <= p <= n:
            raise InvalidArgument(f"p must lie in [1, {n}], got {p}")
        return cls(n=n, indices=tuple(range(n - p + 1, n + 1)))

    def __len__(self):
        return len(self.indices)

    def __contains__(self, index: int):
        return index in self.indices

    def mask(self) -> npt.NDArray[np.bool_]:
        # 0-based
        flags = np.zeros(self.n, dtype=bool)
        flags[np.asarray(self.indices) - 1] = True
        return flags


class NormEstimate(NamedTuple):
    spectral: float
    frobenius: float


def matmul(a: Matrix, b: Matrix, counter: OpCounter | None = None) -> Matrix:
    if a.ndim != 2 or a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"Cannot multiply shapes {a.shape} and {b.shape}")
    n = a.shape[0]
    counting(counter).mul(n ** 3)
    return a @ b


def frobenius_norm(m: Matrix) -> float:
    return math.sqrt(float(np.sum(m * m)))


def norm2_estimate(m: Matrix, iters: int = NORM_ITERS, tol: float = NORM_TOL) -> NormEstimate:
    """
    Estimates the spectral norm by power iteration on mᵀm from a fixed start vector.
    The Frobenius norm comes along as an upper bound (spectral <= Frobenius).
    """
    if iters < 1:
        raise InvalidArgument("iters must be positive")
    fro = frobenius_norm(m)
    if fro == 0.0:
        return NormEstimate(0.0, 0.0)

    v = np.random.default_rng(0).standard_normal(m.shape[1])
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(iters):
        w = m @ v
        sigma_next = float(np.linalg.norm(w))
        u = m.T @ w
        u_norm = float(np.linalg.norm(u))
        if u_norm == 0.0:
            sigma = max(sigma, sigma_next)
            break
        v = u / u_norm
        converged = abs(sigma_next - sigma) <= tol * sigma_next
        sigma = sigma_next
        if converged:
            break

    return NormEstimate(min(sigma, fro), fro)


def residual_fro(a: Matrix, inverse: Matrix) -> float:
    """‖A·X − I‖_F"""
    return frobenius_norm(a @ inverse - np.eye(a.shape[0]))


def relative_distance(x: Matrix, reference: Matrix) -> float:
    scale = frobenius_norm(reference)
    return frobenius_norm(x - reference) / (scale if scale > 0 else 1.0)
