"""Exact rank computations over Q and over Q(q).

Matrices are numpy object arrays so that entries keep their exact type
(``Fraction`` or ``LaurentPoly``) through row operations.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Union

import numpy as np

from paraplactic.exact.laurent import ONE, ZERO, LaurentFraction, LaurentPoly

MatrixLike = Union[np.ndarray, Sequence[Sequence[Any]]]


def as_object_matrix(rows: MatrixLike, ncols: int = 0) -> np.ndarray:
    """Copy rows into a 2-d object array; ``ncols`` sizes an empty matrix."""
    matrix = np.empty((len(rows), len(rows[0]) if len(rows) else ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = value
    return matrix


def row_echelon_rational(rows: MatrixLike) -> tuple[np.ndarray, list[int]]:
    """Reduce a rational matrix to row echelon form.

    Returns the reduced matrix and the list of free (non-pivot) columns.
    """
    matrix = as_object_matrix(rows)
    for index, value in np.ndenumerate(matrix):
        matrix[index] = Fraction(value)
    nrows, ncols = matrix.shape
    free_cols: list[int] = []
    piv_r = 0
    for piv_c in range(ncols):
        pivot = next((i for i in range(piv_r, nrows) if matrix[i, piv_c] != 0), None)
        if pivot is None:
            free_cols.append(piv_c)
            continue
        if pivot != piv_r:
            matrix[[piv_r, pivot]] = matrix[[pivot, piv_r]]
        fp = matrix[piv_r, piv_c]
        for r in range(piv_r + 1, nrows):
            fr = matrix[r, piv_c]
            if fr == 0:
                continue
            matrix[r, piv_c:] -= matrix[piv_r, piv_c:] * (fr / fp)
        piv_r += 1
        if piv_r == nrows:
            free_cols.extend(range(piv_c + 1, ncols))
            break
    return matrix, free_cols


def rank_rational(rows: MatrixLike) -> int:
    """Rank over Q of a matrix with integer or Fraction entries."""
    if len(rows) == 0:
        return 0
    matrix, free_cols = row_echelon_rational(rows)
    return matrix.shape[1] - len(free_cols)


def kernel_dimension(rows: MatrixLike) -> int:
    """Dimension of the right kernel over Q."""
    matrix = as_object_matrix(rows)
    return matrix.shape[1] - rank_rational(matrix)


def clear_denominators(row: Sequence[LaurentFraction]) -> list[LaurentPoly]:
    """Scale a row of fractions by the product of its distinct denominators."""
    dens: list[LaurentPoly] = []
    for value in row:
        if value.den != ONE and value.den not in dens:
            dens.append(value.den)
    common = ONE
    for den in dens:
        common = common * den
    return [(value.num * common).exact_div(value.den) for value in row]


def pivot_rows_laurent(rows: Sequence[Sequence[LaurentPoly]]) -> list[int]:
    """Indices of a maximal set of rows independent over Q(q).

    Fraction-free (Bareiss) elimination: every intermediate entry is a minor
    of the input, so each division by the previous pivot is exact.
    """
    if not rows:
        return []
    matrix = [[LaurentPoly.coerce(v) for v in row] for row in rows]
    order = list(range(len(matrix)))
    nrows, ncols = len(matrix), len(matrix[0])
    prev = ONE
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        order[rank], order[pivot] = order[pivot], order[rank]
        head = matrix[rank]
        for i in range(rank + 1, nrows):
            row = matrix[i]
            factor = row[col]
            for j in range(col + 1, ncols):
                row[j] = (head[col] * row[j] - factor * head[j]).exact_div(prev)
            row[col] = ZERO
        prev = head[col]
        rank += 1
        if rank == nrows:
            break
    return sorted(order[:rank])


def rank_laurent(rows: Sequence[Sequence[Union[LaurentPoly, LaurentFraction]]]) -> int:
    """Rank over the fraction field Q(q)."""
    cleared = [
        clear_denominators([LaurentFraction.coerce(v) for v in row]) for row in rows
    ]
    return len(pivot_rows_laurent(cleared))
