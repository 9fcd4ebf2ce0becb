"""
Square-root-free inversion of symmetric matrices built on modified Gaussian elimination.

invert_v1 runs in two stages: an elimination that only requires the last variable (F ends
up lower triangular) followed by a rank-1 completion of the leading blocks. invert_v2 does
a single sweep that keeps the growing leading inverse up to date, a panel of steps at a
time.
Neither variant interchanges rows, so a vanishing leading principal minor raises ZeroPivot;
invert_symmetric_robust falls back to the pivoting elimination in that case.
"""
import logging
from dataclasses import dataclass

import numpy as np

from app.linalg import modgauss
from app.linalg.errors import IndexOutOfRange, InvalidArgument, ZeroPivot
from app.linalg.matcore import (
    Matrix,
    OpCounter,
    SymmetryCheck,
    as_matrix,
    counting,
    frobenius_norm,
    pivot_tol,
)

logger = logging.getLogger(__name__)

# steps per panel of the blocked sweep
V2_PANEL = 64


def _symmetric_input(a, symmetry: SymmetryCheck | None) -> Matrix:
    a = as_matrix(a)
    (symmetry or SymmetryCheck()).require(a)
    return a


def _mirror_lower(f: Matrix) -> Matrix:
    return np.tril(f) + np.tril(f, -1).T


@dataclass
class LowerStageState:
    f: Matrix
    k: int = 0

    @property
    def n(self) -> int:
        return self.f.shape[0]


def v1_stage1(a: Matrix, counter: OpCounter | None = None) -> LowerStageState:
    """
    Elimination with only the last variable required. Every row is frozen once it has
    served as pivot row, which leaves F lower triangular.
    """
    n = a.shape[0]
    state = modgauss.run_elimination(a, [n], counter, allow_pivoting=False)
    return LowerStageState(f=state.f, k=1)


def v1_stage2_step(state: LowerStageState, counter: OpCounter | None = None) -> LowerStageState:
    """
    Adds f_ki·f_kj / f_kk to every f_ij, j <= i < k. Row k and everything below it stay put.
    """
    f, k = state.f, state.k
    row = f[k, :k]
    t = row / f[k, k]
    f[:k, :k] += np.tril(np.outer(t, row))
    counting(counter).mul(k + k * (k + 1) // 2)
    state.k += 1
    return state


def v1_lower(a: Matrix, counter: OpCounter | None = None) -> LowerStageState:
    """Both stages of variant 1, returning Fⁿ before the symmetric reconstruction."""
    state = v1_stage1(a, counter)
    while state.k < state.n:
        v1_stage2_step(state, counter)
    return state


def reconstruct_symmetric(f: Matrix) -> Matrix:
    """Fⁿ + (Fⁿ − D)ᵀ with D the diagonal of Fⁿ."""
    return f + (f - np.diag(np.diag(f))).T


def invert_v1(a: Matrix, counter: OpCounter | None = None, symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    Two-stage square-root-free inversion of a symmetric matrix.
    :param a: symmetric matrix with nonzero leading principal minors
    :param counter: optional operation counter, n³/2 + n² − n/2 mul/div in total
    :param symmetry: symmetry test applied to a (exact by default)
    :return: A⁻¹, symmetric bit for bit
    """
    a = _symmetric_input(a, symmetry)
    return reconstruct_symmetric(v1_lower(a, counter).f)


@dataclass
class V2State:
    f: Matrix
    a: Matrix
    tol: float
    m: int = 0

    @property
    def n(self) -> int:
        return self.a.shape[0]


def _v2_step_count(n: int, k: int) -> int:
    return k + (k + 1) + (n - 1 - k) * (2 * k + 1) + k * (k + 1) // 2


def v2_step(state: V2State, counter: OpCounter | None = None) -> V2State:
    """
    One sweep step: normalize the pivot row, fill the pivot column and apply both rank-1
    block updates. The leading block is kept whole; its part above the diagonal mirrors
    the part below, and only the lower triangle is counted.
    """
    f, a, n, k = state.f, state.a, state.n, state.m
    ops = counting(counter)

    row_old = f[k, :k].copy()
    piv = float(row_old @ a[:k, k] + a[k, k])
    ops.mul(k)
    if abs(piv) <= state.tol:
        raise ZeroPivot(k, piv)

    r = 1.0 / piv
    f[k, :k] = row_old * r
    f[:k, k] = f[k, :k]
    f[k, k] = r
    ops.mul(1 + k)

    below = n - 1 - k
    if below:
        c = f[k + 1:, :k] @ a[:k, k] + a[k + 1:, k]
        col = -c * r
        f[k + 1:, k] = col
        f[k + 1:, :k] += np.outer(col, row_old)
        ops.mul(below * (2 * k + 1))

    f[:k, :k] += np.outer(f[k, :k], row_old)
    ops.mul(k * (k + 1) // 2)

    state.m += 1
    return state


def v2_block_step(state: V2State, width: int = V2_PANEL, counter: OpCounter | None = None) -> V2State:
    """
    Advances the sweep by up to width steps at once. The pivots of the panel come from
    single steps on its Schur complement S; the leading block, the panel rows and the
    rows below are then brought up to date with matrix products. The counter receives
    the counts of the single steps it replaces.
    :param state: sweep state after state.m steps
    :param width: panel width, at least 1
    :param counter: optional operation counter
    :return: the same state, advanced
    """
    if width < 1:
        raise InvalidArgument(f"Panel width must be at least 1, got {width}")
    f, a, n, k = state.f, state.a, state.n, state.m
    e = min(k + width, n)
    if e <= k:
        return state
    p = slice(k, e)
    w_p = f[p, :k].copy()
    a_up = a[:k, p]

    panel = V2State(f=np.eye(e - k), a=a[p, p] + w_p @ a_up, tol=state.tol)
    try:
        while panel.m < panel.n:
            v2_step(panel)
    except ZeroPivot as exc:
        raise ZeroPivot(k + exc.step, exc.pivot) from None
    s_inv = panel.f

    if e < n:
        h = (a[e:, p] + f[e:, :k] @ a_up) @ s_inv
        f[e:, :k] -= h @ w_p
        f[e:, p] = -h

    g = s_inv @ w_p
    f[:k, :k] += w_p.T @ g
    f[p, :k] = g
    f[:k, p] = g.T
    f[p, p] = s_inv

    counting(counter).mul(sum(_v2_step_count(n, j) for j in range(k, e)))
    state.m = e
    return state


def invert_v2(a: Matrix, counter: OpCounter | None = None, symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    Single-sweep square-root-free inversion of a symmetric matrix, run a panel of
    V2_PANEL steps at a time.
    :param a: symmetric matrix with nonzero leading principal minors
    :param counter: optional operation counter, n³/2 + n²/2 mul/div in total
    :param symmetry: symmetry test applied to a (exact by default)
    :return: A⁻¹ with the upper triangle mirrored from the lower one
    """
    a = _symmetric_input(a, symmetry)
    state = V2State(f=np.eye(a.shape[0]), a=a, tol=pivot_tol(a))
    while state.m < state.n:
        v2_block_step(state, V2_PANEL, counter)
    return _mirror_lower(state.f)


def invert_v2_reference(a: Matrix, symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    Scalar-loop form of the single-sweep method using full-row dot products, kept as an
    independent cross-check of invert_v2.
    """
    a = _symmetric_input(a, symmetry)
    n = a.shape[0]
    tol = pivot_tol(a)
    av = a.tolist()
    f = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]

    for k in range(n):
        old_row = f[k][:]
        piv = sum(old_row[j] * av[j][k] for j in range(n))
        if abs(piv) <= tol:
            raise ZeroPivot(k, piv)
        r = 1.0 / piv
        dots = {i: sum(f[i][j] * av[j][k] for j in range(n)) for i in range(k + 1, n)}

        for i in range(k + 1):
            f[i][k] = old_row[i] * r
        for i in range(k + 1, n):
            f[i][k] = -dots[i] * f[k][k]
        for j in range(k):
            for i in range(j, n):
                if i != k:
                    f[i][j] += f[i][k] * old_row[j]
        for j in range(k):
            f[k][j] = f[j][k]

    return _mirror_lower(np.array(f, dtype=np.float64))


def invert_symmetric_robust(a: Matrix, counter: OpCounter | None = None,
                            symmetry: SymmetryCheck | None = None) -> Matrix:
    """
    invert_v2, falling back to the pivoting elimination when a leading principal minor
    vanishes. The counter accumulates both attempts.
    """
    a = _symmetric_input(a, symmetry)
    try:
        return invert_v2(a, counter, symmetry)
    except ZeroPivot as exc:
        logger.info("Zero pivot at step %d, falling back to pivoting elimination", exc.step)
        r = modgauss.invert(a, counter)
        return (r + r.T) / 2


def _check_step(a: Matrix, m: int):
    if not 0 <= m < a.shape[0]:
        raise IndexOutOfRange(f"Step must lie in [0, {a.shape[0] - 1}], got {m}")


def _advance(a: Matrix, steps: int) -> modgauss.EliminationState:
    state = modgauss.start_elimination(a, allow_pivoting=False)
    for _ in range(steps):
        modgauss.eliminate_step(state)
    return state


def lemma1_check(a: Matrix, m: int) -> bool:
    """
    After m+1 full-required elimination steps the leading (m+1)-block of F inverts the
    leading (m+1) principal submatrix of a, and is symmetric whenever a is.
    """
    a = as_matrix(a)
    _check_step(a, m)
    s = m + 1
    block = _advance(a, s).f[:s, :s]
    sub = a[:s, :s]

    tol = 1e-9 * (1.0 + frobenius_norm(sub))
    ok = bool(np.all(np.abs(block @ sub - np.eye(s)) <= tol))
    if SymmetryCheck().passes(a):
        sym_tol = 1e-9 * (1.0 + float(np.abs(block).max()))
        ok = ok and bool(np.all(np.abs(block - block.T) <= sym_tol))
    return ok


def lemma2_check(a: Matrix, m: int) -> bool:
    """
    F^{m+1} − F^m_c (F^m with row m zeroed) is the outer product of column m of F^{m+1}
    with row m of F^m.
    """
    a = as_matrix(a)
    _check_step(a, m)
    state = _advance(a, m)
    before = state.f.copy()
    after = modgauss.eliminate_step(state).f

    f_c = before.copy()
    f_c[m, :] = 0.0
    delta = after - f_c
    rank1 = np.outer(after[:, m], before[m, :])
    tol = 1e-10 * (1.0 + float(np.abs(before).max()) + float(np.abs(after).max()))
    return bool(np.all(np.abs(delta - rank1) <= tol))
