import pytest
from hypothesis import given, strategies as st

from app.linalg.complexity import Method, count_table, q_theor, s_theor
from app.linalg.errors import InvalidArgument

TABLE = {
    100: {"cholesky": 515_000, "ldl": 671_650, "km": 505_000, "v1": 509_950, "v2": 505_000},
    500: {"cholesky": 62_875_000, "ldl": 83_458_250, "km": 62_625_000, "v1": 62_749_750, "v2": 62_625_000},
}


@pytest.mark.parametrize("n", sorted(TABLE))
def test_published_counts(n):
    for method, expected in TABLE[n].items():
        assert q_theor(method, n) == expected


def test_small_examples():
    assert q_theor(Method.V1, 1) == 1
    assert q_theor(Method.MODGAUSS_P, 100, 1) == 338_350
    assert q_theor(Method.MODGAUSS_FULL, 7) == 343
    assert s_theor(Method.KM, 100) == 100
    assert s_theor(Method.V1, 500) == 0
    assert s_theor(Method.LDL, 1) == 0
    assert s_theor(Method.CHOLESKY, 3) == 3


@given(st.integers(min_value=1, max_value=2000))
def test_every_formula_is_a_nonnegative_integer(n):
    for method in Method:
        p = n // 2 if method is Method.MODGAUSS_P else None
        value = q_theor(method, n, p)
        assert isinstance(value, int) and value >= 0


@given(st.integers(min_value=2, max_value=5000))
def test_stage_additivity(n):
    assert q_theor(Method.V1_STAGE1, n) + q_theor(Method.V1_STAGE2, n) == q_theor(Method.V1, n)


@given(st.integers(min_value=3, max_value=5000))
def test_dominance_ordering(n):
    v2, km, v1 = q_theor(Method.V2, n), q_theor(Method.KM, n), q_theor(Method.V1, n)
    assert v2 == km < v1 < q_theor(Method.CHOLESKY, n)
    assert v1 < q_theor(Method.LDL, n)
    if n >= 7:
        assert q_theor(Method.CHOLESKY, n) < q_theor(Method.LDL, n)


@pytest.mark.parametrize("n,cholesky,ldl", [(3, 27, 22), (6, 162, 161), (7, 245, 252)])
def test_cholesky_ldl_crossover(n, cholesky, ldl):
    assert q_theor(Method.CHOLESKY, n) == cholesky
    assert q_theor(Method.LDL, n) == ldl


@given(st.integers(min_value=1, max_value=300))
def test_general_p_endpoints(n):
    assert q_theor(Method.MODGAUSS_P, n, n) == n ** 3
    assert q_theor(Method.MODGAUSS_P, n, 1) == q_theor(Method.V1_STAGE1, n)


def test_invalid_arguments():
    with pytest.raises(InvalidArgument):
        q_theor(Method.MODGAUSS_P, 5)
    with pytest.raises(InvalidArgument):
        q_theor(Method.MODGAUSS_P, 5, 6)
    with pytest.raises(InvalidArgument):
        q_theor(Method.V2, 5, 1)
    with pytest.raises(InvalidArgument):
        q_theor("qr", 5)
    with pytest.raises(InvalidArgument):
        q_theor(Method.V2, 0)


def test_count_table_rows():
    rows = count_table([10, 100], p=3)
    assert len(rows) == 2 * len(Method)
    by_key = {(r["method"], r["n"]): r for r in rows}
    assert by_key[("v2", 100)]["q_theor"] == 505_000
    assert by_key[("km", 10)]["s_theor"] == 10
    assert by_key[("modgauss_p", 10)]["p"] == 3
    assert by_key[("v1", 10)]["p"] is None
