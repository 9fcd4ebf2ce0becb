import numpy as np
import pytest

from app.genbench.generators import (
    FamilyKind,
    MatrixFamily,
    generate,
    non_dominant,
    violates_dominance,
)
from app.linalg.errors import GenerationFailed, InvalidArgument
from tests.oracles import det


def _strictly_dominant(a):
    off = np.abs(a).sum(axis=1) - np.abs(np.diag(a))
    return bool(np.all(np.diag(a) > off))


@pytest.mark.parametrize("n", [1, 3, 10, 50])
def test_diag_dominant_family(n):
    a = generate(MatrixFamily(FamilyKind.DIAG_DOMINANT, n, seed=1))
    assert np.array_equal(a, a.T)
    assert _strictly_dominant(a)
    off = a[~np.eye(n, dtype=bool)]
    assert np.all(np.abs(off) <= 1.0)


def test_generation_is_deterministic():
    family = MatrixFamily("non_dominant", 6, seed=9)
    assert np.array_equal(generate(family), generate(family))
    assert not np.array_equal(
        generate(MatrixFamily("diag_dominant", 6, 1)), generate(MatrixFamily("diag_dominant", 6, 2))
    )


@pytest.mark.parametrize("seed", range(5))
def test_non_dominant_family(seed):
    a = generate(MatrixFamily(FamilyKind.NON_DOMINANT, 2, seed))
    assert np.array_equal(a, a.T)
    assert violates_dominance(a)
    assert np.all(np.abs(a) <= 1.0)


def test_non_dominant_single_entry():
    a = generate(MatrixFamily(FamilyKind.NON_DOMINANT, 1, 3))
    assert a.shape == (1, 1) and a[0, 0] != 0.0


def test_non_dominant_gives_up():
    with pytest.raises(GenerationFailed):
        non_dominant(5, seed=0, max_reseeds=0)


@pytest.mark.parametrize("n", [2, 4, 7])
def test_zero_leading_minor_family(n):
    a = generate(MatrixFamily(FamilyKind.ZERO_LEADING_MINOR, n, seed=123))
    assert np.array_equal(a, a.T)
    assert a[0, 0] == 0.0
    assert abs(det(a)) > 1e-6


def test_family_validation():
    with pytest.raises(InvalidArgument):
        MatrixFamily(FamilyKind.DIAG_DOMINANT, 0, 1)
    with pytest.raises(InvalidArgument):
        MatrixFamily(FamilyKind.ZERO_LEADING_MINOR, 1, 1)
    with pytest.raises(ValueError):
        MatrixFamily("banded", 3, 1)
