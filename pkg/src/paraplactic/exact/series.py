import dataclasses
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from typing import Optional, Union

from typing_extensions import Self

Monomial = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class Discrepancy:
    """The first monomial at which two series differ."""

    monomial: Monomial
    """Exponent vector."""
    lhs: int
    """Coefficient on the left-hand side."""
    rhs: int
    """Coefficient on the right-hand side."""

    def to_json(self) -> dict[str, object]:
        return {"monomial": list(self.monomial), "lhs": self.lhs, "rhs": self.rhs}


@dataclasses.dataclass(frozen=True)
class TruncatedSeries:
    """A multivariate power series with integer coefficients, truncated by total degree.

    All terms of total degree above ``cap`` are discarded on construction and
    after every operation.
    """

    nvars: int
    """Number of variables x_1..x_nvars."""
    cap: int
    """Largest total degree kept."""
    terms: Mapping[Monomial, int] = dataclasses.field(
        default_factory=dict, hash=False
    )
    """Exponent vector to coefficient, no zero coefficients."""

    def __post_init__(self) -> None:
        if self.nvars < 0 or self.cap < 0:
            msg = f"Invalid series parameters nvars={self.nvars}, cap={self.cap}"
            raise ValueError(msg)
        clean: dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            if len(mono) != self.nvars:
                msg = f"Monomial {mono} does not have {self.nvars} exponents"
                raise ValueError(msg)
            if any(e < 0 for e in mono):
                msg = f"Monomial {mono} has a negative exponent"
                raise ValueError(msg)
            if coeff and sum(mono) <= self.cap:
                clean[tuple(mono)] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int, cap: int) -> Self:
        return cls(nvars, cap, {})

    @classmethod
    def one(cls, nvars: int, cap: int) -> Self:
        return cls(nvars, cap, {(0,) * nvars: 1})

    @classmethod
    def monomial(
        cls, nvars: int, cap: int, exponents: Sequence[int], coeff: int = 1
    ) -> Self:
        return cls(nvars, cap, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, nvars: int, cap: int, index: int) -> Self:
        """The series x_index, with 0-based index."""
        exps = [0] * nvars
        exps[index] = 1
        return cls.monomial(nvars, cap, exps)

    @classmethod
    def from_terms(
        cls, nvars: int, cap: int, terms: Iterable[tuple[Monomial, int]]
    ) -> Self:
        """Build a series from possibly repeated (monomial, coefficient) pairs."""
        acc: dict[Monomial, int] = defaultdict(int)
        for mono, coeff in terms:
            if sum(mono) <= cap:
                acc[tuple(mono)] += coeff
        return cls(nvars, cap, acc)

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if (self.nvars, self.cap) != (other.nvars, other.cap):
            msg = (
                f"Incompatible series: nvars/cap {self.nvars}/{self.cap}"
                f" vs {other.nvars}/{other.cap}"
            )
            raise ValueError(msg)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.nvars, self.cap, {k: -v for k, v in self.terms.items()}
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return TruncatedSeries(self.nvars, self.cap, out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, factor: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.nvars, self.cap, {k: factor * v for k, v in self.terms.items()}
        )

    def graded(self) -> dict[int, list[tuple[Monomial, int]]]:
        """Terms grouped by total degree."""
        out: dict[int, list[tuple[Monomial, int]]] = defaultdict(list)
        for mono, coeff in self.terms.items():
            out[sum(mono)].append((mono, coeff))
        return dict(out)

    def degree_part(self, degree: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.nvars,
            self.cap,
            {k: v for k, v in self.terms.items() if sum(k) == degree},
        )

    def __mul__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        by_degree = other.graded()
        out: dict[Monomial, int] = defaultdict(int)
        for mono, coeff in self.terms.items():
            room = self.cap - sum(mono)
            for degree in range(room + 1):
                for mono2, coeff2 in by_degree.get(degree, ()):
                    key = tuple(a + b for a, b in zip(mono, mono2))
                    out[key] += coeff * coeff2
        return TruncatedSeries(self.nvars, self.cap, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """The multiplicative inverse, computed one degree at a time.

        With a = c + a' where c = +-1, b_0 = c and
        b_d = -c * sum_{j=1..d} (a_j * b_{d-j}) for the graded pieces.
        """
        const = self.constant_term()
        if const not in (1, -1):
            msg = f"Series with constant term {const} is not invertible over the integers"
            raise ValueError(msg)
        agraded = self.graded()
        bgraded: dict[int, dict[Monomial, int]] = {0: {(0,) * self.nvars: const}}
        for degree in range(1, self.cap + 1):
            acc: dict[Monomial, int] = defaultdict(int)
            for j in range(1, degree + 1):
                for mono, coeff in agraded.get(j, ()):
                    for mono2, coeff2 in bgraded[degree - j].items():
                        key = tuple(a + b for a, b in zip(mono, mono2))
                        acc[key] += coeff * coeff2
            bgraded[degree] = {k: -const * v for k, v in acc.items() if v}
        return TruncatedSeries(
            self.nvars,
            self.cap,
            {k: v for part in bgraded.values() for k, v in part.items()},
        )

    def first_discrepancy(self, other: "TruncatedSeries") -> Optional[Discrepancy]:
        """The lexicographically smallest monomial whose coefficients differ."""
        self._check_compatible(other)
        differing = [
            mono
            for mono in set(self.terms) | set(other.terms)
            if self.terms.get(mono, 0) != other.terms.get(mono, 0)
        ]
        if not differing:
            return None
        mono = min(differing)
        return Discrepancy(mono, self.terms.get(mono, 0), other.terms.get(mono, 0))

    def collapse(self) -> list[int]:
        """Coefficients of t^0..t^cap after substituting x_i -> t."""
        out = [0] * (self.cap + 1)
        for mono, coeff in self.terms.items():
            out[sum(mono)] += coeff
        return out

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def to_json(self) -> list[dict[str, object]]:
        return [
            {"monomial": list(mono), "coeff": coeff} for mono, coeff in self.sorted_terms()
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors)
            if not body:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(body)
            elif coeff == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{coeff}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact truncated product."""
    return a * b


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term +1 or -1."""
    return a.inverse()


def product(
    factors: Iterable[TruncatedSeries], nvars: int, cap: int
) -> TruncatedSeries:
    out = TruncatedSeries.one(nvars, cap)
    for factor in factors:
        out = out * factor
    return out


def total(terms: Iterable[TruncatedSeries], nvars: int, cap: int) -> TruncatedSeries:
    out = TruncatedSeries.zero(nvars, cap)
    for term in terms:
        out = out + term
    return out
