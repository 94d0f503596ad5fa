from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paraplactic.combinat.partitions import Partition, partitions_of
from paraplactic.combinat.tableaux import (
    SignedLetter,
    SuperTableau,
    alphabet,
    count_ssyt,
    enumerate_ssyt,
    from_reading_word,
    is_valid,
    row_reading_word,
    skew_ssyt_weights,
    ssyt_weights,
    weight,
)


def _standard_count(shape: Partition) -> int:
    conj = shape.conjugate()
    hooks = 1
    for i, j in shape.cells():
        hooks *= shape.part(i) - j + conj.part(j) - i - 1
    return factorial(shape.size) // hooks


def test_letters():
    assert SignedLetter.parse("3b") == SignedLetter(3, odd=True)
    assert str(SignedLetter(2)) == "2"
    assert SignedLetter(5) < SignedLetter(1, odd=True)
    assert SignedLetter(1, odd=True).position(2) == 3
    assert SignedLetter.from_position(3, 2) == SignedLetter(1, odd=True)
    assert SignedLetter(2, odd=True).to_json() == {"i": 2, "bar": True}
    assert not SignedLetter(2, odd=True).fits(3, 1)
    with pytest.raises(ValueError, match="Cannot parse"):
        SignedLetter.parse("b")
    assert [str(x) for x in alphabet(2, 1)] == ["1", "2", "1b"]


def test_parse_and_shape():
    t = SuperTableau.parse("1,3/2")
    assert t.shape == Partition((2, 1))
    assert t.size == 3
    assert str(t) == "1,3/2"
    with pytest.raises(ValueError, match="weakly decreasing"):
        SuperTableau.parse("1/2,3")


@pytest.mark.parametrize(
    ("text", "m", "n", "valid"),
    [
        ("1,1/2", 2, 0, True),
        ("1,1/1", 2, 0, False),
        ("1b,1b", 0, 1, False),
        ("1b/1b", 0, 1, True),
        ("1,1b/1b", 1, 1, True),
        ("1,2", 1, 0, False),
    ],
)
def test_is_valid(text, m, n, valid):
    assert is_valid(SuperTableau.parse(text), m, n) is valid


@pytest.mark.parametrize(
    ("shape", "m", "n", "count"),
    [
        ((2, 1), 2, 0, 2),
        ((2, 1), 3, 0, 8),
        ((1, 1), 0, 2, 3),
        ((2,), 0, 2, 1),
        ((2, 1), 1, 1, 2),
        ((3, 3, 3), 2, 2, 0),
        ((), 1, 1, 1),
    ],
)
def test_counts(shape, m, n, count):
    lam = Partition(shape)
    tableaux = enumerate_ssyt(lam, m, n)
    assert len(tableaux) == count == count_ssyt(lam, m, n)
    assert all(is_valid(t, m, n) and t.shape == lam for t in tableaux)
    assert len(set(tableaux)) == count


@pytest.mark.parametrize(("m", "n"), [(1, 1), (2, 1), (1, 2), (0, 2)])
@pytest.mark.parametrize("r", range(1, 5))
def test_tensor_power_dimension(m, n, r):
    # (m+n)^r = sum over hook partitions of #SSYT * #SYT
    total = sum(count_ssyt(lam, m, n) * _standard_count(lam) for lam in partitions_of(r))
    assert total == (m + n) ** r


def test_weights():
    lam = Partition((2, 1))
    weights = sorted(ssyt_weights(lam, 2, 1))
    assert weights == sorted(weight(t, 2, 1) for t in enumerate_ssyt(lam, 2, 1))
    assert all(sum(w) == 3 for w in weights)
    assert len(list(skew_ssyt_weights(lam, Partition((1,)), 2, 0))) == 4
    with pytest.raises(ValueError, match="not contained"):
        list(skew_ssyt_weights(lam, Partition((3,)), 2, 0))


def test_reading_word():
    t = SuperTableau.parse("1,3/2")
    word = row_reading_word(t)
    assert [str(x) for x in word] == ["2", "1", "3"]
    assert from_reading_word(word, 3, 0) == t
    odd = (SignedLetter(1, odd=True),) * 2
    assert from_reading_word(odd, 0, 1) == SuperTableau.parse("1b/1b")
    assert from_reading_word((), 1, 1) == SuperTableau(())
    # 1,2,1 would need a row of length 1 above one of length 2
    assert from_reading_word(tuple(SignedLetter(i) for i in (1, 2, 1)), 2, 0) is None


@settings(deadline=None, max_examples=40)
@given(
    st.sampled_from([(2, 1), (3, 1), (2, 2), (1, 1, 1), (3,)]),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
)
def test_reading_word_inverts(shape, m, n):
    for t in enumerate_ssyt(Partition(shape), m, n):
        assert from_reading_word(row_reading_word(t), m, n) == t
