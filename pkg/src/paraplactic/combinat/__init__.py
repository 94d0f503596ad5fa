from paraplactic.combinat.partitions import (
    EpsilonConfig,
    FrobeniusCoords,
    Partition,
    conjugate,
    enumerate_hook,
    epsilon_to_partition,
    in_hook,
    p_augment,
    to_frobenius,
)
from paraplactic.combinat.plactic import (
    CanonicalForm,
    PlacticSignError,
    PlacticUniquenessError,
    SignedWord,
    WordParseError,
    canonicalize,
    knuth_moves,
    p_restrict,
    product,
)
from paraplactic.combinat.tableaux import (
    SignedLetter,
    SuperTableau,
    enumerate_ssyt,
    is_valid,
    row_reading_word,
    weight,
)

__all__ = [
    "CanonicalForm",
    "EpsilonConfig",
    "FrobeniusCoords",
    "Partition",
    "PlacticSignError",
    "PlacticUniquenessError",
    "SignedLetter",
    "SignedWord",
    "SuperTableau",
    "WordParseError",
    "canonicalize",
    "conjugate",
    "enumerate_hook",
    "enumerate_ssyt",
    "epsilon_to_partition",
    "in_hook",
    "is_valid",
    "knuth_moves",
    "p_augment",
    "p_restrict",
    "product",
    "row_reading_word",
    "to_frobenius",
    "weight",
]
