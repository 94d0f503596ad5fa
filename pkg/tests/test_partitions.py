import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paraplactic.combinat.partitions import (
    EMPTY,
    EpsilonConfig,
    FrobeniusCoords,
    Partition,
    closed_form_sign,
    enumerate_hook,
    epsilon_configs,
    epsilon_to_partition,
    f0_sign,
    fp_sign,
    from_frobenius,
    in_hook,
    is_p_augmented,
    p_augment,
    p_augmented,
    partitions_of,
    self_conjugate,
    to_frobenius,
    weight_vector,
)


@st.composite
def partition_strategy(draw, max_size=12):
    size = draw(st.integers(min_value=0, max_value=max_size))
    return draw(st.sampled_from(partitions_of(size)))


def test_validation():
    with pytest.raises(ValueError, match="weakly decreasing"):
        Partition((1, 2))
    with pytest.raises(ValueError, match="positive"):
        Partition((2, 0))
    assert Partition.parse("2,1") == Partition((2, 1))
    assert Partition.parse("") == EMPTY
    with pytest.raises(ValueError, match="Cannot parse"):
        Partition.parse("2,x")


@pytest.mark.parametrize(
    ("lam", "conj"),
    [((3, 1), (2, 1, 1)), ((2, 1), (2, 1)), ((), ()), ((4, 2), (2, 2, 1, 1))],
)
def test_conjugate(lam, conj):
    assert Partition(lam).conjugate() == Partition(conj)


@pytest.mark.parametrize(
    ("lam", "arms", "legs"),
    [((2, 2), (1, 0), (1, 0)), ((2, 1), (1,), (1,)), ((1,), (0,), (0,)), ((), (), ())],
)
def test_frobenius(lam, arms, legs):
    coords = to_frobenius(Partition(lam))
    assert coords == FrobeniusCoords(arms, legs)
    assert from_frobenius(coords) == Partition(lam)


def test_frobenius_validation():
    with pytest.raises(ValueError, match="differ in length"):
        FrobeniusCoords((1,), ())
    with pytest.raises(ValueError, match="strictly decreasing"):
        FrobeniusCoords((0, 1), (1, 0))


@settings(deadline=None, max_examples=80)
@given(partition_strategy())
def test_involutions(lam):
    assert lam.conjugate().conjugate() == lam
    assert from_frobenius(to_frobenius(lam)) == lam
    assert to_frobenius(lam.conjugate()) == FrobeniusCoords(
        to_frobenius(lam).legs, to_frobenius(lam).arms
    )


@pytest.mark.parametrize(
    ("eta", "p", "expected"),
    [((1,), 1, (2,)), ((2, 1), 1, (3, 1)), ((), 3, ()), ((2, 2), 2, (4, 4))],
)
def test_p_augment(eta, p, expected):
    lam = p_augment(Partition(eta), p)
    assert lam == Partition(expected)
    assert is_p_augmented(lam, p)


def test_p_augment_needs_self_conjugate():
    with pytest.raises(ValueError, match="self-conjugate"):
        p_augment(Partition((2,)), 1)


def test_hook():
    assert not in_hook(Partition((3, 3, 3)), 2, 2)
    assert in_hook(Partition((5, 4)), 2, 0)
    assert in_hook(Partition((1, 1, 1, 1)), 0, 1)
    assert enumerate_hook(1, 0, 3) == [Partition((3,))]
    assert enumerate_hook(1, 1, 2) == [Partition((2,)), Partition((1, 1))]
    assert enumerate_hook(1, 0, 2, p=1) == []


def test_families():
    assert [lam.parts for lam in self_conjugate(6)] == [
        (),
        (1,),
        (2, 1),
        (2, 2),
        (3, 1, 1),
        (3, 2, 1),
    ]
    assert [lam.parts for lam in p_augmented(1, 6)] == [
        (),
        (2,),
        (3, 1),
        (4, 1, 1),
        (3, 3),
    ]
    for lam in p_augmented(2, 10):
        assert is_p_augmented(lam, 2)


def test_sign_transport():
    for p in range(1, 4):
        for eta in self_conjugate(10):
            lam = p_augment(eta, p)
            r = to_frobenius(eta).rank
            assert lam.size == eta.size + p * r
            assert f0_sign(eta) == fp_sign(lam, p)


@pytest.mark.parametrize(
    ("signs", "lam", "r", "sign"),
    [
        ((1, 1), (), 0, 1),
        ((-1, 1), (2, 1), 1, -1),
        ((-1, -1), (2, 2), 2, -1),
    ],
)
def test_epsilon_examples(signs, lam, r, sign):
    assert epsilon_to_partition(EpsilonConfig(signs)) == (Partition(lam), r, sign)


def test_weight_vector_is_doubled():
    assert weight_vector(EpsilonConfig((1, 1))) == [1, -1]
    assert weight_vector(EpsilonConfig((-1,), p=1)) == [4]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("p", range(4))
def test_epsilon_bijection(n, p):
    images = set()
    for cfg in epsilon_configs(n, p):
        lam, r, sign = epsilon_to_partition(cfg)
        images.add(lam)
        assert is_p_augmented(lam, p)
        assert to_frobenius(lam).rank == r
        assert sign == closed_form_sign(lam, p, r)
        if p == 0:
            assert lam.is_self_conjugate()
    assert len(images) == 2**n


def test_epsilon_validation():
    with pytest.raises(ValueError, match="at least one sign"):
        EpsilonConfig(())
    with pytest.raises(ValueError, match="must be"):
        EpsilonConfig((1, 0))
