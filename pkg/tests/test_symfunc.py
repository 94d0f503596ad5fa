import pytest

from paraplactic.combinat.partitions import Partition, partitions_of
from paraplactic.exact.series import TruncatedSeries
from paraplactic.symfunc import (
    VariableSplit,
    classical_product,
    hook_product,
    hook_schur,
    hook_sum,
    ps_character,
    schur,
    schur_bialternant,
    skew_schur,
)


def _series(nvars, cap, terms):
    return TruncatedSeries(nvars, cap, dict(terms))


def test_variable_split():
    with pytest.raises(ValueError, match="at least one variable"):
        VariableSplit(0, 0, 3)
    with pytest.raises(ValueError, match="nonnegative"):
        VariableSplit(1, 0, -1)
    vs = VariableSplit(2, 1, 3)
    assert vs.nvars == 3
    assert vs.is_odd(2)
    assert not vs.is_odd(1)


def test_small_schur():
    assert schur(Partition((1,)), 2, 2) == _series(2, 2, {(1, 0): 1, (0, 1): 1})
    assert schur(Partition((1, 1)), 2, 2) == _series(2, 2, {(1, 1): 1})
    assert schur(Partition((2,)), 2, 2) == _series(
        2, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    )
    assert schur(Partition((1, 1, 1)), 2, 3).is_zero()
    assert schur(Partition((3,)), 2, 2).is_zero()
    with pytest.raises(ValueError, match="at least one variable"):
        schur(Partition((1,)), 0, 2)


def test_odd_variables():
    odd = VariableSplit(0, 1, 3)
    assert hook_schur(Partition((1, 1)), odd) == _series(1, 3, {(2,): 1})
    assert hook_schur(Partition((2,)), odd).is_zero()
    mixed = VariableSplit(1, 1, 3)
    # x^2 y + x y^2
    assert hook_schur(Partition((2, 1)), mixed) == _series(2, 3, {(2, 1): 1, (1, 2): 1})


def test_skew_schur():
    assert skew_schur(Partition((2, 1)), Partition((1,)), 2, 2) == schur(
        Partition((1,)), 2, 2
    ) * schur(Partition((1,)), 2, 2)


@pytest.mark.parametrize(("m", "n"), [(1, 1), (2, 1), (1, 2), (0, 2), (2, 0)])
def test_hook_schur_methods_agree(m, n):
    vs = VariableSplit(m, n, 4)
    for r in range(5):
        for lam in partitions_of(r):
            assert hook_schur(lam, vs, "comb") == hook_schur(lam, vs, "factor"), lam


@pytest.mark.slow
@pytest.mark.parametrize(("m", "n"), [(m, n) for m in range(4) for n in range(4) if m + n])
def test_hook_schur_methods_agree_to_size_six(m, n):
    vs = VariableSplit(m, n, 6)
    for r in range(7):
        for lam in partitions_of(r):
            assert hook_schur(lam, vs, "comb") == hook_schur(lam, vs, "factor"), lam


def test_unknown_method():
    with pytest.raises(ValueError, match="Unknown hook Schur method"):
        hook_schur(Partition((1,)), VariableSplit(1, 1, 2), "other")  # type: ignore[arg-type]


@pytest.mark.parametrize("k", range(1, 5))
def test_bialternant(k):
    for r in range(4):
        for lam in partitions_of(r):
            assert schur_bialternant(lam, k, 3) == schur(lam, k, 3), lam
    with pytest.raises(ValueError, match="1 <= k <= 4"):
        schur_bialternant(Partition((1,)), 5)


@pytest.mark.slow
@pytest.mark.parametrize("k", range(1, 5))
def test_bialternant_to_size_six(k):
    for r in range(7):
        for lam in partitions_of(r):
            assert schur_bialternant(lam, k, r) == schur(lam, k, r), lam


def test_products():
    vs = VariableSplit(1, 0, 4)
    geometric = _series(1, 4, {(d,): 1 for d in range(5)})
    assert hook_product(vs) == geometric
    assert classical_product(1, 4) * geometric == TruncatedSeries.one(1, 4)
    # one odd variable: (1 + y) / (1 - y^2) = 1 / (1 - y)
    assert ps_character(VariableSplit(0, 1, 4)) == geometric


def test_restricted_hook_sum():
    vs = VariableSplit(1, 1, 3)
    unrestricted = hook_sum(vs)
    restricted = hook_sum(vs, 1)
    assert restricted.first_discrepancy(unrestricted) is not None
    assert hook_sum(vs, 3) == unrestricted
    # first rows of length 1 leave only the columns
    columns = [hook_schur(Partition((1,) * r), vs) for r in range(4)]
    total = columns[0]
    for s in columns[1:]:
        total = total + s
    assert restricted == total
