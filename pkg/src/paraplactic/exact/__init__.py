from paraplactic.exact.laurent import (
    ONE,
    Q,
    QINV,
    ZERO,
    LaurentFraction,
    LaurentPoly,
    balanced_q_integer,
    frac_eq,
    laurent_mul,
    standard_q_integer,
)
from paraplactic.exact.linalg import (
    kernel_dimension,
    pivot_rows_laurent,
    rank_laurent,
    rank_rational,
)
from paraplactic.exact.series import (
    Discrepancy,
    TruncatedSeries,
    series_inverse,
    series_mul,
)

__all__ = [
    "ONE",
    "QINV",
    "ZERO",
    "Discrepancy",
    "LaurentFraction",
    "LaurentPoly",
    "Q",
    "TruncatedSeries",
    "balanced_q_integer",
    "frac_eq",
    "kernel_dimension",
    "laurent_mul",
    "pivot_rows_laurent",
    "rank_laurent",
    "rank_rational",
    "series_inverse",
    "series_mul",
    "standard_q_integer",
]
