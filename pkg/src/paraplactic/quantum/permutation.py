"""
Permutations of ``{1, ..., r}`` in one-line notation.

Products compose left to right, ``(rho * sigma)(i) = sigma(rho(i))``, so
right multiplication by the simple transposition ``s_i`` exchanges the
values ``i`` and ``i+1`` in the one-line notation.

>>> Permutation.simple(3, 1) * Permutation.simple(3, 2)
Permutation(312)
"""

import dataclasses
import itertools
from functools import lru_cache


@dataclasses.dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..r} in one-line notation."""

    images: tuple[int, ...]
    """images[k-1] is the image of k."""

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            msg = f"{images} is not a permutation of 1..{len(images)}"
            raise ValueError(msg)
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def simple(cls, r: int, i: int) -> "Permutation":
        """The simple transposition s_i, 1 <= i < r."""
        if not 1 <= i < r:
            msg = f"No simple transposition s_{i} in rank {r}"
            raise ValueError(msg)
        return cls.identity(r).swap_values(i)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``231`` or ``2,3,1``."""
        tokens = text.split(",") if "," in text else list(text)
        return cls(tuple(int(tok) for tok in tokens))

    @property
    def rank(self) -> int:
        return len(self.images)

    @property
    def length(self) -> int:
        """Number of inversions."""
        r = self.rank
        return sum(
            1
            for a in range(r)
            for b in range(a + 1, r)
            if self.images[a] > self.images[b]
        )

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.rank != other.rank:
            msg = f"Cannot compose permutations of rank {self.rank} and {other.rank}"
            raise ValueError(msg)
        return Permutation(tuple(other(k) for k in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.rank
        for k, image in enumerate(self.images, start=1):
            out[image - 1] = k
        return Permutation(tuple(out))

    def swap_values(self, i: int) -> "Permutation":
        """self * s_i: exchange the values i and i+1."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.images))

    def has_right_descent(self, i: int) -> bool:
        """True if length(self * s_i) < length(self), i.e. i+1 stands left of i."""
        return self.images.index(i + 1) < self.images.index(i)

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word (i_1, ..., i_k) with self = s_{i_1} * ... * s_{i_k}."""
        return _reduced_word(self)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __str__(self) -> str:
        sep = "," if self.rank > 9 else ""
        return sep.join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({self})"


@lru_cache(maxsize=None)
def _reduced_word(perm: Permutation) -> tuple[int, ...]:
    word: list[int] = []
    current = perm
    while True:
        descent = next(
            (i for i in range(1, current.rank) if current.has_right_descent(i)), None
        )
        if descent is None:
            break
        word.append(descent)
        current = current.swap_values(descent)
    return tuple(reversed(word))


def all_permutations(r: int) -> list[Permutation]:
    """All permutations of rank r in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, r + 1))]
