"""
Modified Gaussian elimination.

Instead of reducing A, the elimination evolves an auxiliary matrix F starting from the
identity. After step m every active row f_i satisfies f_i·a_j = δ_ij for the columns
j <= m that have been processed, so once all n steps ran with every variable required,
F = A⁻¹. Rows whose solution component is not required are frozen as soon as they have
served as a pivot row, which is where the savings of a partial solve come from.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from app.linalg.errors import DimensionMismatch, InvalidArgument, SingularMatrix, ZeroPivot
from app.linalg.matcore import Matrix, OpCounter, RequiredSet, as_matrix, counting, frobenius_norm, pivot_tol

logger = logging.getLogger(__name__)


@dataclass
class EliminationState:
    f: Matrix
    a: Matrix
    required: RequiredSet
    tol: float
    step: int = 0
    perm: list[tuple[int, int]] = field(default_factory=list)
    allow_pivoting: bool = True
    # set after the first row interchange, from then on every row is counted as dense
    dense: bool = False

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def done(self) -> bool:
        return self.step >= self.n


def _required_set(n: int, required: RequiredSet | Iterable[int] | None) -> RequiredSet:
    if required is None:
        return RequiredSet.all(n)
    if isinstance(required, RequiredSet):
        if required.n != n:
            raise DimensionMismatch(f"RequiredSet is for order {required.n}, matrix has order {n}")
        return required
    return RequiredSet.of(n, required)


def start_elimination(a: Matrix, required: RequiredSet | Iterable[int] | None = None,
                      allow_pivoting: bool = True) -> EliminationState:
    """
    Builds the initial state F⁰ = I for the matrix a.
    :param a: square matrix, never modified
    :param required: 1-based indices of the required variables (all of them by default)
    :param allow_pivoting: when False a vanishing pivot raises ZeroPivot instead of swapping rows
    :return: EliminationState at step 0
    """
    a = as_matrix(a)
    n = a.shape[0]
    return EliminationState(
        f=np.eye(n),
        a=a,
        required=_required_set(n, required),
        tol=pivot_tol(a),
        allow_pivoting=allow_pivoting,
    )


def _interchange(state: EliminationState, k: int, ops: OpCounter) -> float:
    f, a, n = state.f, state.a, state.n
    candidates = f[k + 1:] @ a[:, k]
    ops.mul((n - 1 - k) * n)
    if candidates.size == 0 or np.abs(candidates).max() <= state.tol:
        raise SingularMatrix(k)

    j = k + 1 + int(np.argmax(np.abs(candidates)))
    f[[k, j]] = f[[j, k]]
    state.perm.append((k, j))
    state.dense = True
    logger.debug("Interchanged rows %d and %d of F at step %d", k, j, k)
    return float(candidates[j - k - 1])


def eliminate_step(state: EliminationState, counter: OpCounter | None = None) -> EliminationState:
    """
    Runs one elimination step in place on state.f and advances state.step.
    :param state: single-owner elimination state
    :param counter: optional operation counter
    :return: the same state, advanced by one step
    """
    if state.done:
        raise InvalidArgument(f"Elimination already finished after {state.n} steps")

    ops = counting(counter)
    f, a, n, k = state.f, state.a, state.n, state.step

    piv = float(f[k] @ a[:, k])
    ops.mul(n if state.dense else k)
    if abs(piv) <= state.tol:
        if not state.allow_pivoting:
            raise ZeroPivot(k, piv)
        piv = _interchange(state, k, ops)

    r = 1.0 / piv
    f[k] *= r

    active = np.ones(n, dtype=bool)
    active[:k] = state.required.mask()[:k]
    active[k] = False
    rows = np.flatnonzero(active)
    if rows.size:
        c = f[rows] @ a[:, k]
        f[rows] -= np.outer(c, f[k])

    if state.dense:
        ops.mul(1 + n + rows.size * 2 * n)
    else:
        ops.mul(1 + k + rows.size * (2 * k + 1))

    state.step += 1
    return state


def run_elimination(a: Matrix, required: RequiredSet | Iterable[int] | None = None,
                    counter: OpCounter | None = None, allow_pivoting: bool = True) -> EliminationState:
    state = start_elimination(a, required, allow_pivoting)
    while not state.done:
        eliminate_step(state, counter)
    return state


def invert(a: Matrix, counter: OpCounter | None = None) -> Matrix:
    """
    Inverts a nonsingular (not necessarily symmetric) matrix, interchanging rows of F
    when a pivot vanishes.
    :param a: square nonsingular matrix
    :param counter: optional operation counter; n³ mul/div when no interchange occurs
    :return: A⁻¹
    """
    return run_elimination(a, None, counter).f


def solve(a: Matrix, b, required: RequiredSet | Iterable[int], counter: OpCounter | None = None) -> dict[int, float]:
    """
    Solves Ax = b for the required components only.
    :param a: square nonsingular matrix
    :param b: right-hand side of length n
    :param required: 1-based indices of the wanted components
    :param counter: optional operation counter; includes n multiplications per returned component
    :return: {index: x_index} over the required indices
    """
    a = as_matrix(a)
    n = a.shape[0]
    b = np.asarray(b, dtype=np.float64)
    if b.shape != (n,):
        raise DimensionMismatch(f"Right-hand side must have length {n}, got shape {b.shape}")

    state = run_elimination(a, required, counter)
    counting(counter).mul(n * len(state.required))
    return {i: float(state.f[i - 1] @ b) for i in state.required.indices}


def row_identities_check(a: Matrix, f_final: Matrix, required: RequiredSet | Iterable[int]) -> bool:
    """True iff f_i·a_i = 1 and f_i·a_j = 0 (j ≠ i) hold for every required row i."""
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    rows = np.asarray(_required_set(n, required).indices) - 1
    tol = 1e-10 * (1.0 + frobenius_norm(a))
    products = np.asarray(f_final, dtype=np.float64)[rows] @ a
    return bool(np.all(np.abs(products - np.eye(n)[rows]) <= tol))
