"""
Factorization-based inversions used as baselines: Cholesky (LLᵀ), LDLᵀ, and the
Krishnamoorthy–Menon in-place scheme.

Counters tally multiplications and divisions on structurally nonzero operands, so
products with known zeros and with unit diagonals are not counted.
"""
import math
from dataclasses import dataclass

import numpy as np

from app.linalg.errors import NotPositiveDefinite, ZeroPivot
from app.linalg.matcore import Matrix, OpCounter, SymmetryCheck, as_matrix, counting, pivot_tol


def _symmetric_input(a, symmetry: SymmetryCheck | None) -> Matrix:
    a = as_matrix(a)
    (symmetry or SymmetryCheck()).require(a)
    return a


def _mirror_lower(x: Matrix) -> Matrix:
    return np.tril(x) + np.tril(x, -1).T


@dataclass(frozen=True)
class CholFactor:
    l: Matrix


@dataclass(frozen=True)
class LdlFactor:
    l: Matrix
    d: np.ndarray


@dataclass(frozen=True)
class KmFactor:
    """Unit lower multipliers, pivot reciprocals and the square roots of the pivots."""
    l: Matrix
    q: np.ndarray
    delta: np.ndarray

    def cholesky(self) -> Matrix:
        return self.l * self.delta[np.newaxis, :]


def cholesky_factor(a: Matrix, counter: OpCounter | None = None,
                    symmetry: SymmetryCheck | None = None) -> CholFactor:
    """
    Left-looking Cholesky factorization A = LLᵀ.
    :param a: symmetric positive definite matrix
    :param counter: optional operation counter
    :param symmetry: symmetry test applied to a
    :return: CholFactor with lower-triangular l
    """
    a = _symmetric_input(a, symmetry)
    n = a.shape[0]
    floor = pivot_tol(a) ** 2
    ops = counting(counter)
    l = np.zeros_like(a)

    for j in range(n):
        s = float(a[j, j] - l[j, :j] @ l[j, :j])
        if s <= floor:
            raise NotPositiveDefinite(j, s)
        l[j, j] = math.sqrt(s)
        ops.root()
        l[j + 1:, j] = (a[j + 1:, j] - l[j + 1:, :j] @ l[j, :j]) / l[j, j]
        ops.mul(j + (n - 1 - j) * (j + 1))

    return CholFactor(l)


def invert_cholesky(a: Matrix, counter: OpCounter | None = None,
                    symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    A⁻¹ from A = LLᵀ by solving L B = I and then Lᵀ A⁻¹ = B.
    Only the lower triangle of either solve is computed.
    """
    l = cholesky_factor(a, counter, symmetry).l
    n = l.shape[0]
    ops = counting(counter)

    b = np.zeros_like(l)
    for i in range(n):
        rhs = np.zeros(i + 1)
        rhs[i] = 1.0
        b[i, :i + 1] = (rhs - l[i, :i] @ b[:i, :i + 1]) / l[i, i]
        ops.mul(i * (i + 1) // 2 + i + 1)

    x = np.zeros_like(l)
    for i in range(n - 1, -1, -1):
        x[i, :i + 1] = (b[i, :i + 1] - l[i + 1:, i] @ x[i + 1:, :i + 1]) / l[i, i]
        ops.mul((n - 1 - i) * (i + 1) + i + 1)

    return _mirror_lower(x)


def ldl_factor(a: Matrix, counter: OpCounter | None = None,
               symmetry: SymmetryCheck | None = None) -> LdlFactor:
    """
    A = L̃DL̃ᵀ without pivoting, in the textbook form
    d_j = a_jj − Σ l_jk·l_jk·d_k and l_ij = (a_ij − Σ l_ik·l_jk·d_k) / d_j.
    """
    a = _symmetric_input(a, symmetry)
    n = a.shape[0]
    tol = pivot_tol(a)
    ops = counting(counter)
    l = np.eye(n)
    d = np.zeros(n)

    for j in range(n):
        d[j] = a[j, j] - (l[j, :j] * l[j, :j]) @ d[:j]
        if abs(d[j]) <= tol:
            raise ZeroPivot(j, float(d[j]))
        l[j + 1:, j] = (a[j + 1:, j] - (l[j + 1:, :j] * l[j, :j]) @ d[:j]) / d[j]
        ops.mul(2 * j + (n - 1 - j) * (2 * j + 1))

    return LdlFactor(l, d)


def invert_ldl(a: Matrix, counter: OpCounter | None = None,
               symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    A⁻¹ from A = L̃DL̃ᵀ by solving L̃X = I, D B̃ = X and L̃ᵀ A⁻¹ = B̃ on lower triangles.
    """
    factor = ldl_factor(a, counter, symmetry)
    l, d = factor.l, factor.d
    n = l.shape[0]
    ops = counting(counter)

    x = np.eye(n)
    for i in range(1, n):
        x[i, :i] = -l[i, :i] @ x[:i, :i]
        ops.mul(i * (i - 1) // 2)

    b = np.tril(x) / d[:, np.newaxis]
    ops.mul(n * (n + 1) // 2)

    inv = np.zeros_like(l)
    for i in range(n - 1, -1, -1):
        inv[i, :i + 1] = b[i, :i + 1] - l[i + 1:, i] @ inv[i + 1:, :i + 1]
        ops.mul((n - 1 - i) * (i + 1))

    return _mirror_lower(inv)


def km_factor(a: Matrix, counter: OpCounter | None = None,
              symmetry: SymmetryCheck | None = None) -> KmFactor:
    """
    Right-looking factorization done in place on a work copy of a. Each step takes the
    square root of the pivot for the Cholesky diagonal, keeps its reciprocal for the
    multipliers and updates the lower trailing block. The inversion reads only the
    multipliers and the reciprocals; the roots go to KmFactor.cholesky().
    """
    a = _symmetric_input(a, symmetry)
    n = a.shape[0]
    floor = pivot_tol(a) ** 2
    ops = counting(counter)
    w = a.copy()
    q = np.zeros(n)
    delta = np.zeros(n)

    for k in range(n):
        piv = float(w[k, k])
        if piv <= floor:
            raise NotPositiveDefinite(k, piv)
        delta[k] = math.sqrt(piv)
        ops.root()
        q[k] = 1.0 / piv
        col = w[k + 1:, k].copy()
        w[k + 1:, k] = col * q[k]
        w[k + 1:, k + 1:] -= np.outer(w[k + 1:, k], col)
        below = n - 1 - k
        ops.mul(1 + below + below * (below + 1) // 2)

    l = np.tril(w, -1) + np.eye(n)
    return KmFactor(l, q, delta)


def invert_km(a: Matrix, counter: OpCounter | None = None,
              symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    In-place scheme: factor, invert the unit lower triangle in place, then form
    A⁻¹ = L̃⁻ᵀ·D⁻¹·L̃⁻¹ on the lower triangle and mirror it.
    :param a: symmetric positive definite matrix
    :param counter: optional operation counter, n³/2 + n²/2 mul/div and n square roots
    :param symmetry: symmetry test applied to a
    :return: A⁻¹
    """
    factor = km_factor(a, counter, symmetry)
    n = factor.l.shape[0]
    ops = counting(counter)

    z = factor.l.copy()
    for i in range(1, n):
        z[i, :i] = -z[i, :i] @ z[:i, :i]
        ops.mul(i * (i - 1) // 2)

    y = z * factor.q[:, np.newaxis]
    ops.mul(n * (n - 1) // 2)

    x = np.zeros_like(z)
    for i in range(n):
        x[i, :i + 1] = z[i:, i] @ y[i:, :i + 1]
        ops.mul((n - 1 - i) * (i + 1))

    return _mirror_lower(x)


def invert_km_elementwise(a: Matrix, counter: OpCounter | None = None,
                          symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    The in-place scheme of invert_km with scalar element access on nested lists and no
    vector operations. The pivot roots overwrite the diagonal of the work copy. Same
    operations and counts as invert_km.
    :param a: symmetric positive definite matrix
    :param counter: optional operation counter, n³/2 + n²/2 mul/div and n square roots
    :param symmetry: symmetry test applied to a
    :return: A⁻¹
    """
    a = _symmetric_input(a, symmetry)
    n = a.shape[0]
    floor = pivot_tol(a) ** 2
    ops = counting(counter)
    w = a.tolist()
    q = [0.0] * n

    for k in range(n):
        piv = w[k][k]
        if piv <= floor:
            raise NotPositiveDefinite(k, piv)
        w[k][k] = math.sqrt(piv)
        q[k] = 1.0 / piv
        col = [w[i][k] for i in range(k + 1, n)]
        for i in range(k + 1, n):
            li = col[i - k - 1] * q[k]
            w[i][k] = li
            row = w[i]
            for j in range(k + 1, i + 1):
                row[j] -= li * col[j - k - 1]
        below = n - 1 - k
        ops.root()
        ops.mul(1 + below + below * (below + 1) // 2)

    # unit lower inverse, overwriting the multipliers row by row
    for i in range(1, n):
        row = w[i]
        for j in range(i):
            s = row[j]
            for r in range(j + 1, i):
                s += row[r] * w[r][j]
            row[j] = -s
        ops.mul(i * (i - 1) // 2)

    y = [[w[i][j] * q[i] for j in range(i)] for i in range(n)]
    ops.mul(n * (n - 1) // 2)

    x = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = y[i][j] if j < i else q[i]
            for r in range(i + 1, n):
                s += w[r][i] * y[r][j]
            x[i][j] = x[j][i] = s
        ops.mul((n - 1 - i) * (i + 1))

    return np.array(x, dtype=np.float64)
