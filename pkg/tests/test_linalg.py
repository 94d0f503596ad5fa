from fractions import Fraction

import numpy as np
import pytest

from paraplactic.exact.laurent import ONE, Q, QINV, ZERO, LaurentFraction
from paraplactic.exact.linalg import (
    clear_denominators,
    kernel_dimension,
    pivot_rows_laurent,
    rank_laurent,
    rank_rational,
    row_echelon_rational,
)


def test_rank_rational():
    assert rank_rational([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2
    assert rank_rational([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == 2
    assert rank_rational([]) == 0
    assert kernel_dimension([[1, 1, 1]]) == 2


def test_row_echelon_free_columns():
    matrix, free = row_echelon_rational([[0, 1, 2], [0, 2, 4]])
    assert free == [0, 2]
    assert matrix[1, 2] == 0


def test_object_matrix_input():
    matrix = np.array([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], dtype=object)
    assert rank_rational(matrix) == 1


def test_clear_denominators():
    row = [LaurentFraction(ONE, Q + 1), LaurentFraction(Q, Q * Q + 1), LaurentFraction(ZERO)]
    cleared = clear_denominators(row)
    assert cleared[0] == Q * Q + 1
    assert cleared[1] == Q * (Q + 1)
    assert cleared[2] == ZERO


def test_rank_laurent():
    # (1, q) and (q^-1, 1) are proportional; (1, q^-1) is not unless q^2 = 1
    assert rank_laurent([[ONE, Q], [QINV, ONE]]) == 1
    assert rank_laurent([[ONE, Q], [ONE, QINV]]) == 2
    assert rank_laurent([[LaurentFraction(ONE, Q + 1), ONE], [ONE, Q + 1]]) == 1


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[ONE, ZERO], [ONE, ZERO], [ZERO, Q]], [0, 2]),
        ([[ZERO, ZERO], [Q, ONE]], [1]),
        ([[Q, ONE, ZERO], [Q * Q, Q, ZERO], [ZERO, ONE, ONE]], [0, 2]),
    ],
)
def test_pivot_rows(rows, expected):
    assert pivot_rows_laurent(rows) == expected
