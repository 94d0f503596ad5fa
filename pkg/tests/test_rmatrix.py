import itertools
from fractions import Fraction

import pytest

from paraplactic.combinat.partitions import Partition
from paraplactic.combinat.tableaux import SuperTableau, count_ssyt, enumerate_ssyt
from paraplactic.exact.laurent import ONE, Q, QINV, ZERO, LaurentPoly
from paraplactic.exact.linalg import rank_laurent
from paraplactic.quantum.hecke import HeckeElement, eulerian_idempotent, gamma_basis
from paraplactic.quantum.rmatrix import (
    C,
    TensorVector,
    apply_generator,
    build_rmatrix,
    compute_I3,
    eigen_multiplicities,
    expected_multiplicities,
    gamma_element,
    gamma_elements,
    knuth_binomials,
    local_basis_limit,
    matches_binomials,
    pi_q_apply,
    verify_I3,
    verify_representation,
    verify_ybe_hecke,
)

SPLITS = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]


def test_one_dimensional():
    assert build_rmatrix(1, 0).matrix()[0, 0] == Q
    assert build_rmatrix(0, 1).matrix()[0, 0] == LaurentPoly.q(-1, -1)
    with pytest.raises(ValueError, match="m \\+ n >= 1"):
        build_rmatrix(0, 0)


def test_mixed_matrix():
    # basis order (1,1), (1,2), (2,1), (2,2)
    r = build_rmatrix(1, 1).matrix()
    expected = [
        [Q, ZERO, ZERO, ZERO],
        [ZERO, C, ONE, ZERO],
        [ZERO, ONE, ZERO, ZERO],
        [ZERO, ZERO, ZERO, -QINV],
    ]
    assert [list(row) for row in r] == expected


def test_odd_swap_sign():
    op = build_rmatrix(0, 2)
    assert op.action((2, 1)) == [((1, 2), LaurentPoly.constant(-1))]


@pytest.mark.parametrize(("m", "n"), SPLITS)
def test_ybe_and_hecke(m, n):
    report = verify_ybe_hecke(m, n)
    assert report.passed, report.to_json()


def test_ybe_size_limit():
    with pytest.raises(ValueError, match="m \\+ n <= 4"):
        verify_ybe_hecke(3, 2)


@pytest.mark.parametrize(
    ("m", "n", "expected"),
    [(1, 1, (2, 2)), (2, 0, (3, 1)), (0, 1, (0, 1)), (2, 1, (5, 4)), (1, 2, (4, 5))],
)
def test_eigen_multiplicities(m, n, expected):
    assert expected_multiplicities(m, n) == expected
    assert eigen_multiplicities(m, n, 2) == expected
    assert eigen_multiplicities(m, n, Fraction(3, 2)) == expected


def test_eigen_needs_generic_q():
    with pytest.raises(ValueError, match="generic"):
        eigen_multiplicities(1, 1, 1)


def test_generator_action():
    op = build_rmatrix(2, 0)
    v = TensorVector.basis((1, 1))
    assert apply_generator(v, 1, op) == v * Q
    assert apply_generator(TensorVector.basis((2, 1)), 1, op) == TensorVector.basis((1, 2))
    assert apply_generator(TensorVector.basis((1, 2)), 1, op) == TensorVector.basis(
        (2, 1)
    ) + TensorVector.basis((1, 2)) * C
    with pytest.raises(ValueError, match="No generator"):
        apply_generator(v, 2, op)


def test_pi_q():
    v = TensorVector.basis((2, 1, 3))
    assert pi_q_apply(HeckeElement.identity(3), v, 3, 0) == v
    g1 = HeckeElement.generator(3, 1)
    assert pi_q_apply(g1 * g1, v, 3, 0) == v + pi_q_apply(g1, v, 3, 0) * C
    with pytest.raises(ValueError, match="Rank mismatch"):
        pi_q_apply(HeckeElement.identity(2), v, 3, 0)


def test_pi_q_is_multiplicative():
    a = HeckeElement.from_terms(3, [("231", Q), ("132", 1)])
    b = HeckeElement.from_terms(3, [("312", 1), ("213", QINV)])
    v = TensorVector.basis((1, 3, 2))
    assert pi_q_apply(a * b, v, 2, 1) == pi_q_apply(a, pi_q_apply(b, v, 2, 1), 2, 1)


@pytest.mark.parametrize(("m", "n"), [(1, 1), (2, 0), (0, 2), (2, 1), (1, 2)])
def test_representation(m, n):
    assert verify_representation(m, n)


def test_idempotent_acts_as_projection():
    e = eulerian_idempotent()
    v = TensorVector.basis((1, 2, 1))
    once = pi_q_apply(e, v, 1, 1)
    assert pi_q_apply(e, once, 1, 1) == once


@pytest.mark.parametrize(("m", "n", "dim"), [(2, 0, 2), (1, 1, 2), (1, 0, 0), (3, 0, 8)])
def test_I3_dimension(m, n, dim):
    assert len(compute_I3(m, n)) == dim == count_ssyt(Partition((2, 1)), m, n)
    assert len(gamma_elements(m, n)) == dim


def test_I3_size_limit():
    with pytest.raises(ValueError, match="m \\+ n <= 3"):
        compute_I3(2, 2)


@pytest.mark.parametrize(("m", "n"), SPLITS)
def test_verify_I3(m, n):
    report = verify_I3(m, n)
    assert report.passed, report.to_json()
    assert report.dimensions["I3"] == report.dimensions["ssyt"]


def test_gamma_element_needs_shape():
    with pytest.raises(ValueError, match="shape \\(2,1\\)"):
        gamma_element(SuperTableau.parse("1,1/1"), 1)


def test_local_basis_classical():
    limits = local_basis_limit(gamma_elements(2, 0))
    supports = sorted(tuple(sorted(v.coeffs)) for v in limits)
    assert supports == [((1, 2, 1), (2, 1, 1)), ((2, 1, 2), (2, 2, 1))]


def test_odd_binomials_carry_sign():
    binomials = knuth_binomials(0, 2)
    assert {(1, 2, 2): 1, (2, 1, 2): 1} in binomials
    assert all(len(b) == 2 for b in binomials)


def test_limit_of_constant_vector():
    v = TensorVector.basis((1, 2, 1), 3)
    assert local_basis_limit([v]) == [v]


@pytest.mark.parametrize(("m", "n"), [(3, 0), (2, 1), (1, 2), (0, 3)])
def test_every_gamma_element_lies_in_I3(m, n):
    basis = compute_I3(m, n)
    all_words = list(itertools.product(range(1, m + n + 1), repeat=3))

    def rows(vectors):
        return [[v.coefficient(w) for w in all_words] for v in vectors]

    rank = rank_laurent(rows(basis))
    for tableau in enumerate_ssyt(Partition((2, 1)), m, n):
        gamma = gamma_element(tableau, m)
        assert rank_laurent(rows([*basis, gamma])) == rank, str(tableau)


@pytest.mark.parametrize(
    ("text", "word", "scale"),
    [("1,2b/1b", (1, 2, 3), QINV), ("1,1b/2b", (3, 1, 2), QINV * QINV)],
)
def test_mixed_parity_gamma_is_an_ideal_image(text, word, scale):
    image = pi_q_apply(gamma_basis()[0], TensorVector.basis(word), 1, 2)
    assert gamma_element(SuperTableau.parse(text), 1) == image * scale


def test_binomial_match_allows_only_a_sign():
    binomial = {(1, 2, 1): 1, (2, 1, 1): -1}
    v = TensorVector(3, {(1, 2, 1): 1, (2, 1, 1): -1})
    assert matches_binomials([v], [binomial])
    assert matches_binomials([-v], [binomial])
    assert not matches_binomials([v * 2], [binomial])
