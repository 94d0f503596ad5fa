import dataclasses
import itertools
from collections.abc import Iterator
from functools import lru_cache
from typing import Optional


@dataclasses.dataclass(frozen=True)
class Partition:
    """An integer partition, stored as weakly decreasing positive parts."""

    parts: tuple[int, ...] = ()
    """Row lengths of the Young diagram, top row first."""

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            msg = f"Partition parts must be positive, got {parts}"
            raise ValueError(msg)
        if any(a < b for a, b in zip(parts, parts[1:])):
            msg = f"Partition parts must be weakly decreasing, got {parts}"
            raise ValueError(msg)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma-separated list of parts; an empty string is the empty partition."""
        text = text.strip()
        if not text or text in ("0", "()", "[]"):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.strip("()[]").split(","))
        except ValueError:
            msg = f"Cannot parse partition from {text!r}"
            raise ValueError(msg) from None
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def contains(self, other: "Partition") -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        return len(other) <= len(self) and all(
            b <= self.part(i) for i, b in enumerate(other.parts)
        )

    def is_self_conjugate(self) -> bool:
        return self == self.conjugate()

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.parts) for j in range(row)]

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition(())


@dataclasses.dataclass(frozen=True)
class FrobeniusCoords:
    """Frobenius coordinates (arms | legs) of a partition."""

    arms: tuple[int, ...]
    """Row lengths to the right of each diagonal box, strictly decreasing."""
    legs: tuple[int, ...]
    """Column lengths below each diagonal box, strictly decreasing."""

    def __post_init__(self) -> None:
        arms, legs = tuple(self.arms), tuple(self.legs)
        if len(arms) != len(legs):
            msg = f"Frobenius arms {arms} and legs {legs} differ in length"
            raise ValueError(msg)
        for name, seq in (("arms", arms), ("legs", legs)):
            if any(a <= b for a, b in zip(seq, seq[1:])) or any(a < 0 for a in seq):
                msg = f"Frobenius {name} must be strictly decreasing and nonnegative, got {seq}"
                raise ValueError(msg)
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)

    @property
    def rank(self) -> int:
        """Number of diagonal boxes."""
        return len(self.arms)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.arms))}|{','.join(map(str, self.legs))})"


@dataclasses.dataclass(frozen=True)
class EpsilonConfig:
    """A choice of signs (eps_1..eps_n) together with the order p."""

    signs: tuple[int, ...]
    """eps_1..eps_n, each +1 or -1."""
    p: int = 0
    """Order of the parastatistics, zero for the self-conjugate family."""

    def __post_init__(self) -> None:
        signs = tuple(self.signs)
        if not signs:
            msg = "An epsilon configuration needs at least one sign"
            raise ValueError(msg)
        if any(s not in (1, -1) for s in signs):
            msg = f"Epsilon signs must be +1 or -1, got {signs}"
            raise ValueError(msg)
        if self.p < 0:
            msg = f"p must be nonnegative, got {self.p}"
            raise ValueError(msg)
        object.__setattr__(self, "signs", signs)

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def flipped(self) -> int:
        """Number of negative signs."""
        return sum(1 for s in self.signs if s < 0)


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def to_frobenius(lam: Partition) -> FrobeniusCoords:
    rank = sum(1 for i, part in enumerate(lam.parts) if part > i)
    conj = lam.conjugate()
    return FrobeniusCoords(
        tuple(lam.parts[i] - i - 1 for i in range(rank)),
        tuple(conj.parts[i] - i - 1 for i in range(rank)),
    )


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    rank = coords.rank
    rows = [coords.arms[i] + i + 1 for i in range(rank)]
    # below the diagonal block, row i meets column j <= rank iff legs[j] + j >= i
    depth = coords.legs[0] + 1 if rank else 0
    for i in range(rank + 1, depth + 1):
        rows.append(sum(1 for j in range(rank) if coords.legs[j] + j + 1 >= i))
    return Partition(tuple(rows))


def p_augment(eta: Partition, p: int) -> Partition:
    """Shift every Frobenius arm of a self-conjugate partition by p."""
    if not eta.is_self_conjugate():
        msg = f"p_augment needs a self-conjugate partition, got {eta}"
        raise ValueError(msg)
    if p < 0:
        msg = f"p must be nonnegative, got {p}"
        raise ValueError(msg)
    coords = to_frobenius(eta)
    return from_frobenius(
        FrobeniusCoords(tuple(a + p for a in coords.arms), coords.legs)
    )


def is_p_augmented(lam: Partition, p: int) -> bool:
    """True if every Frobenius arm exceeds its leg by exactly p."""
    coords = to_frobenius(lam)
    return all(a == b + p for a, b in zip(coords.arms, coords.legs))


def in_hook(lam: Partition, m: int, n: int) -> bool:
    """True if lam_j <= n for every row j > m."""
    return all(part <= n for part in lam.parts[m:])


@lru_cache(maxsize=None)
def _partitions(r: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if r == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(r, largest), 0, -1):
        out.extend((first, *rest) for rest in _partitions(r - first, first))
    return tuple(out)


def partitions_of(r: int) -> list[Partition]:
    """All partitions of r, lexicographically descending."""
    if r < 0:
        msg = f"Cannot partition a negative number {r}"
        raise ValueError(msg)
    return [Partition(parts) for parts in _partitions(r, r)]


def enumerate_hook(m: int, n: int, r: int, p: Optional[int] = None) -> list[Partition]:
    """Partitions of r inside the (m,n)-hook, optionally with first row at most p."""
    return [
        lam
        for lam in partitions_of(r)
        if in_hook(lam, m, n) and (p is None or lam.part(0) <= p)
    ]


def _strict_sequences(budget: int, below: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing a_1 > a_2 > ... >= 0 with sum(2a+1) <= budget, a_1 < below."""
    yield ()
    for first in range(min(below, (budget + 1) // 2) - 1, -1, -1):
        for rest in _strict_sequences(budget - 2 * first - 1, first):
            yield (first, *rest)


def _by_size(partitions: list[Partition]) -> list[Partition]:
    return sorted(partitions, key=lambda lam: (lam.size, [-x for x in lam.parts]))


def self_conjugate(max_size: int) -> list[Partition]:
    """The family F_0 of self-conjugate partitions of size <= max_size.

    Ordered by size, then lexicographically descending.
    """
    return _by_size(
        [
            from_frobenius(FrobeniusCoords(arms, arms))
            for arms in _strict_sequences(max_size, max_size + 1)
        ]
    )


def p_augmented(p: int, max_size: int) -> list[Partition]:
    """The family F_p (arms = legs + p) truncated to size <= max_size."""
    out = []
    for legs in _strict_sequences(max_size, max_size + 1):
        arms = tuple(b + p for b in legs)
        lam = from_frobenius(FrobeniusCoords(arms, legs))
        if lam.size <= max_size:
            out.append(lam)
    return _by_size(out)


def f0_sign(eta: Partition) -> int:
    """(-1)^((|eta| + r)/2) for eta in F_0 with r diagonal boxes."""
    r = to_frobenius(eta).rank
    return -1 if ((eta.size + r) // 2) % 2 else 1


def fp_sign(lam: Partition, p: int) -> int:
    """(-1)^((|lam| - (p-1) r)/2) for lam in F_p with r diagonal boxes."""
    r = to_frobenius(lam).rank
    return -1 if ((lam.size - (p - 1) * r) // 2) % 2 else 1


def epsilon_configs(n: int, p: int = 0) -> list[EpsilonConfig]:
    """All 2^n sign configurations, all-positive first."""
    return [EpsilonConfig(signs, p) for signs in itertools.product((1, -1), repeat=n)]


def weight_vector(cfg: EpsilonConfig) -> list[int]:
    """Doubled components 2*nu_i of the reflected weight.

    nu_i = rho0_i + (1 - eps_i')(rho_i' + p/2) with i' = n + 1 - i,
    rho0_i = n/2 + 1/2 - i and rho_i = n + 1/2 - i.
    """
    n = cfg.n
    out = []
    for i in range(1, n + 1):
        ip = n + 1 - i
        value = n + 1 - 2 * i
        if cfg.signs[ip - 1] < 0:
            value += 2 * (2 * n + 1 - 2 * ip + cfg.p)
        out.append(value)
    return out


def epsilon_to_partition(cfg: EpsilonConfig) -> tuple[Partition, int, int]:
    """Map a sign configuration to (lam, r, sign).

    lam = sort(nu) - rho0, r counts the negative signs and sign is the
    signature of the sorting permutation.
    """
    n = cfg.n
    doubled = weight_vector(cfg)
    inversions = sum(
        1 for i in range(n) for j in range(i + 1, n) if doubled[i] < doubled[j]
    )
    ordered = sorted(doubled, reverse=True)
    parts = [(ordered[i - 1] - (n + 1 - 2 * i)) // 2 for i in range(1, n + 1)]
    lam = Partition(tuple(x for x in parts if x))
    return lam, cfg.flipped, -1 if inversions % 2 else 1


def closed_form_sign(lam: Partition, p: int, r: int) -> int:
    """(-1)^((|lam| - (p+1) r)/2)."""
    return -1 if ((lam.size - (p + 1) * r) // 2) % 2 else 1
