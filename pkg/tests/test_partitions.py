import pytest
from hypothesis import given, settings, strategies as st

from rank3.partitions import (check_partition, frobenius_symbol, is_js_partition,
                              is_mullineux_fixed, is_p_regular, mullineux_map,
                              mullineux_map_frobenius, mullineux_symbol,
                              p_regular_partitions, parse_partition,
                              partition_from_symbol, partitions_of)

TABLE = [
    ((4, 2), (2, 2, 1, 1)),
    ((5, 2), (3, 2, 1, 1)),
    ((5, 1, 1), (3, 2, 2)),
    ((7, 1), (4, 3, 1)),
    ((6, 2), (3, 3, 1, 1)),
    ((6, 1, 1), (3, 3, 2)),
    ((7, 1, 1), (4, 3, 2)),
    ((8, 1), (4, 4, 1)),
]


def test_partition_validation():
    check_partition((4, 2, 1))
    for bad in [(2, 3), (1, 0), (-1,), ()]:
        with pytest.raises(ValueError):
            check_partition(bad)


def test_p_regularity():
    assert is_p_regular((4, 2))
    assert is_p_regular((2, 2))
    assert not is_p_regular((2, 2, 2))
    assert not is_p_regular((1, 1, 1))
    assert is_p_regular((5, 5, 4, 4))


def test_partition_generators():
    assert len(list(partitions_of(6))) == 11
    # 3-regular partition numbers of n = 1..8: 1,2,2,4,5,7,9,13
    assert [len(list(p_regular_partitions(n))) for n in range(1, 9)] == \
        [1, 2, 2, 4, 5, 7, 9, 13]


def test_published_pairs():
    for lam, mu in TABLE:
        assert mullineux_map(lam) == mu
        assert mullineux_map(mu) == lam


def test_m4_image():
    # image of the single row (4): symbol route gives (2,2)
    assert mullineux_map((4,)) == (2, 2)
    assert not is_mullineux_fixed((4,))


def test_involution_and_weight_exhaustive():
    for n in range(1, 18):
        for lam in p_regular_partitions(n):
            mu = mullineux_map(lam)
            assert is_p_regular(mu)
            assert sum(mu) == n
            assert mullineux_map(mu) == lam


def test_symbol_roundtrip():
    for n in range(1, 16):
        for lam in p_regular_partitions(n):
            assert partition_from_symbol(mullineux_symbol(lam)) == lam


def test_frobenius_route_agrees():
    for n in range(1, 16):
        for lam in p_regular_partitions(n):
            assert mullineux_map_frobenius(lam) == mullineux_map(lam)


def test_fixed_points_are_involution_fixed():
    for n in range(1, 15):
        for lam in p_regular_partitions(n):
            assert is_mullineux_fixed(lam) == (mullineux_map(lam) == lam)


def test_hook_fixed_window():
    # (n-2, 1, 1) is a fixed point exactly for n in {5, 6}
    hits = [n for n in range(5, 61) if is_mullineux_fixed((n - 2, 1, 1))]
    assert hits == [5, 6]


def test_js_examples():
    with pytest.raises(ValueError):
        is_js_partition((3, 3, 3))  # not 3-regular
    # single rows: (n) is JS for every n (no consecutive pair to violate)
    for n in range(1, 10):
        assert is_js_partition((n,))
    # block rule: (4,2) has 4-2+1+1 = 4, not divisible by 3
    assert is_js_partition((4, 2)) == ((4 - 2 + 1 + 1) % 3 == 0)
    # (3,1): 3-1+1+1 = 4 -> False; (4,1): 4-1+1+1 = 5 -> False; (5,1): 6 -> True
    assert is_js_partition((5, 1))


def test_js_implies_weight_consistency():
    # every JS partition is 3-regular by construction of the predicate's domain
    for n in range(1, 14):
        for lam in p_regular_partitions(n):
            is_js_partition(lam)  # total function on 3-regular partitions


def test_parse_partition():
    assert parse_partition("8,1") == (8, 1)
    assert parse_partition("4") == (4,)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a,b")


@settings(max_examples=30)
@given(st.integers(1, 30))
def test_symbol_row_sums(n):
    # the h-row of the symbol sums to n (rim strips exhaust the diagram)
    for lam in list(p_regular_partitions(n))[:5]:
        hs, rs = mullineux_symbol(lam)
        assert sum(hs) == n
        assert all(r >= 1 for r in rs)
