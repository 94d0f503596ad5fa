"""The Hecke algebra H_r(q) in the basis T_w over the field Q(q).

The generators g_i = T_{s_i} satisfy g_i^2 = 1 + (q - q^-1) g_i and
T_u T_v = T_{uv} whenever the lengths add.
"""

import dataclasses
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from paraplactic.exact.laurent import (
    ONE,
    Q,
    QINV,
    ZERO,
    LaurentFraction,
    LaurentPoly,
    Scalar,
    balanced_q_integer,
)
from paraplactic.exact.linalg import rank_laurent
from paraplactic.quantum.permutation import Permutation, all_permutations

C = Q - QINV
"""q - q^-1"""


@dataclasses.dataclass(frozen=True)
class HeckeElement:
    """A finite linear combination of the basis elements T_w of H_r(q)."""

    r: int
    """Rank."""
    coeffs: Mapping[Permutation, LaurentFraction] = dataclasses.field(
        default_factory=dict, hash=False
    )
    """Coefficient of each T_w; zero coefficients are not stored."""

    def __post_init__(self) -> None:
        clean: dict[Permutation, LaurentFraction] = {}
        for perm, value in self.coeffs.items():
            if perm.rank != self.r:
                msg = f"Permutation {perm} does not have rank {self.r}"
                raise ValueError(msg)
            frac = LaurentFraction.coerce(value)
            if frac:
                clean[perm] = frac
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, r: int) -> "HeckeElement":
        return cls(r, {})

    @classmethod
    def identity(cls, r: int) -> "HeckeElement":
        return cls.basis(Permutation.identity(r))

    @classmethod
    def basis(cls, perm: Permutation, coeff: Scalar = 1) -> "HeckeElement":
        return cls(perm.rank, {perm: LaurentFraction.coerce(coeff)})

    @classmethod
    def generator(cls, r: int, i: int) -> "HeckeElement":
        """g_i = T_{s_i}."""
        return cls.basis(Permutation.simple(r, i))

    @classmethod
    def from_terms(
        cls, r: int, terms: Iterable[tuple[Union[str, Permutation], Scalar]]
    ) -> "HeckeElement":
        """Sum of coeff * T_w, with w given in one-line notation."""
        acc: dict[Permutation, LaurentFraction] = {}
        for perm, coeff in terms:
            key = Permutation.parse(perm) if isinstance(perm, str) else perm
            acc[key] = acc.get(key, LaurentFraction(ZERO)) + coeff
        return cls(r, acc)

    @classmethod
    def from_generator_word(
        cls, r: int, terms: Iterable[tuple[Sequence[int], Scalar]]
    ) -> "HeckeElement":
        """Sum of coeff * g_{i_1} ... g_{i_k}; the empty word is the unit."""
        out = cls.zero(r)
        for word, coeff in terms:
            term = cls.identity(r) * coeff
            for i in word:
                term = term * cls.generator(r, i)
            out = out + term
        return out

    def coefficient(self, perm: Union[str, Permutation]) -> LaurentFraction:
        key = Permutation.parse(perm) if isinstance(perm, str) else perm
        return self.coeffs.get(key, LaurentFraction(ZERO))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_rank(self, other: "HeckeElement") -> None:
        if self.r != other.r:
            msg = f"Hecke algebra rank mismatch: {self.r} vs {other.r}"
            raise ValueError(msg)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.r == other.r and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.r, {k: -v for k, v in self.coeffs.items()})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_rank(other)
        out = dict(self.coeffs)
        for perm, value in other.coeffs.items():
            out[perm] = out[perm] + value if perm in out else value
        return HeckeElement(self.r, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other: Union["HeckeElement", Scalar]) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return HeckeElement(self.r, {k: v * other for k, v in self.coeffs.items()})

    def __rmul__(self, other: Scalar) -> "HeckeElement":
        return self * other

    def specialize(self, q0: Union[Fraction, int]) -> dict[Permutation, Fraction]:
        """Evaluate every coefficient at q = q0."""
        return {k: v.evaluate(q0) for k, v in sorted(self.coeffs.items())}

    def vector(self) -> list[LaurentFraction]:
        """Coefficients on all permutations of the rank, in lexicographic order."""
        return [self.coefficient(p) for p in all_permutations(self.r)]

    def to_json(self) -> list[list[str]]:
        return [[str(k), str(v)] for k, v in sorted(self.coeffs.items())]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*T{k}" for k, v in sorted(self.coeffs.items()))


@lru_cache(maxsize=None)
def _times_generator(perm: Permutation, i: int) -> tuple[tuple[Permutation, LaurentPoly], ...]:
    """T_w * g_i in the T basis."""
    swapped = perm.swap_values(i)
    if swapped.length > perm.length:
        return ((swapped, ONE),)
    return ((swapped, ONE), (perm, C))


@lru_cache(maxsize=None)
def basis_product(left: Permutation, right: Permutation) -> tuple[tuple[Permutation, LaurentPoly], ...]:
    """T_left * T_right in the T basis, applied generator by generator along a reduced word of right."""
    current: dict[Permutation, LaurentPoly] = {left: ONE}
    for i in right.reduced_word():
        nxt: dict[Permutation, LaurentPoly] = {}
        for perm, coeff in current.items():
            for target, factor in _times_generator(perm, i):
                nxt[target] = nxt.get(target, ZERO) + coeff * factor
        current = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(current.items()))


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear product in H_r(q)."""
    a._check_rank(b)
    acc: dict[Permutation, LaurentFraction] = {}
    for u, cu in a.coeffs.items():
        for v, cv in b.coeffs.items():
            scale = cu * cv
            for w, coeff in basis_product(u, v):
                term = scale * coeff
                acc[w] = acc[w] + term if w in acc else term
    return HeckeElement(a.r, acc)


def longest_element(r: int) -> HeckeElement:
    """T_{w0}, e.g. omega = g_1 g_2 g_1 in rank 3."""
    return HeckeElement.basis(Permutation(tuple(range(r, 0, -1))))


def eulerian_idempotent(qnum3: Optional[LaurentPoly] = None) -> HeckeElement:
    """The deformed Eulerian idempotent e(q) in H_3(q).

    e(q) = (1/[3]) (T123 - (T231 + T213 + T132 + T312)/2 + T321)
           + ((q - q^-1)/(2[3])) (T213 - T312 - T231 + T132)
    """
    three = balanced_q_integer(3) if qnum3 is None else qnum3
    den = three * 2
    return HeckeElement.from_terms(
        3,
        [
            ("123", LaurentFraction(LaurentPoly.constant(2), den)),
            ("321", LaurentFraction(LaurentPoly.constant(2), den)),
            ("231", LaurentFraction(-1 - C, den)),
            ("312", LaurentFraction(-1 - C, den)),
            ("213", LaurentFraction(C - 1, den)),
            ("132", LaurentFraction(C - 1, den)),
        ],
    )


def gamma_basis() -> tuple[HeckeElement, HeckeElement]:
    """(Gamma^12_3, Gamma^13_2) spanning the right ideal e(q) H_3(q)."""
    g123 = HeckeElement.from_terms(
        3,
        [
            ("132", Q),
            ("312", -Q),
            ("123", 1),
            ("213", -1),
            ("312", -1),
            ("321", 1),
            ("231", QINV),
            ("213", -QINV),
        ],
    )
    g132 = HeckeElement.from_terms(
        3,
        [
            ("213", Q),
            ("231", -Q),
            ("123", 1),
            ("132", -1),
            ("231", -1),
            ("321", 1),
            ("312", QINV),
            ("132", -QINV),
        ],
    )
    return g123, g132


def gamma_basis_from_generators() -> tuple[HeckeElement, HeckeElement]:
    """The same two elements written as polynomials in g_1, g_2."""
    g123 = HeckeElement.from_generator_word(
        3,
        [
            ((), 1),
            ((2,), Q),
            ((1,), -(ONE + QINV)),
            ((1, 2), -(ONE + Q)),
            ((2, 1), QINV),
            ((1, 2, 1), 1),
        ],
    )
    g132 = HeckeElement.from_generator_word(
        3,
        [
            ((), 1),
            ((1,), Q),
            ((2,), -(ONE + QINV)),
            ((2, 1), -(ONE + Q)),
            ((1, 2), QINV),
            ((2, 1, 2), 1),
        ],
    )
    return g123, g132


@dataclasses.dataclass(frozen=True)
class HeckeReport:
    """Named boolean checks plus the dimensions they produced."""

    checks: dict[str, bool] = dataclasses.field(hash=False)
    """Outcome of each check."""
    dimensions: dict[str, int] = dataclasses.field(default_factory=dict, hash=False)
    """Ranks computed along the way."""

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, object]:
        return {"checks": self.checks, "dimensions": self.dimensions, "passed": self.passed}


EULERIAN_AT_ONE = {
    "123": Fraction(1, 3),
    "231": Fraction(-1, 6),
    "213": Fraction(-1, 6),
    "132": Fraction(-1, 6),
    "312": Fraction(-1, 6),
    "321": Fraction(1, 3),
}
"""Classical Eulerian idempotent coefficients."""


def verify_idempotent(qnum3: Optional[LaurentPoly] = None) -> HeckeReport:
    """Check e^2 = e, omega e = e = e omega, integrality of 2[3] e and the q = 1 limit."""
    three = balanced_q_integer(3) if qnum3 is None else qnum3
    e = eulerian_idempotent(three)
    omega = longest_element(3)
    at_one = e.specialize(1)
    checks = {
        "idempotent": e * e == e,
        "omega_left": omega * e == e,
        "omega_right": e * omega == e,
        "integral": all(v.is_integral() for v in (e * (three * 2)).coeffs.values()),
        "classical_limit": {str(k): v for k, v in at_one.items()} == EULERIAN_AT_ONE,
    }
    return HeckeReport(checks)


def ideal_dimension(qnum3: Optional[LaurentPoly] = None) -> tuple[int, int]:
    """Ranks over Q(q) of {e T_w} and of {e T_w} together with both Gamma elements."""
    e = eulerian_idempotent(qnum3)
    rows = [(e * HeckeElement.basis(w)).vector() for w in all_permutations(3)]
    gammas = [g.vector() for g in gamma_basis()]
    return rank_laurent(rows), rank_laurent(rows + gammas)


def verify_ideal_action(qnum3: Optional[LaurentPoly] = None) -> HeckeReport:
    """Check the right action of g_1, g_2 on the Gamma elements and dim e(q)H_3(q) = 2."""
    g123, g132 = gamma_basis()
    g1, g2 = HeckeElement.generator(3, 1), HeckeElement.generator(3, 2)
    e = eulerian_idempotent(qnum3)
    ideal, with_gammas = ideal_dimension(qnum3)
    alt123, alt132 = gamma_basis_from_generators()
    checks = {
        "gamma123_g1": g123 * g1 == -(g123 * QINV) - g132,
        "gamma132_g1": g132 * g1 == g132 * Q,
        "gamma123_g2": g123 * g2 == g123 * Q,
        "gamma132_g2": g132 * g2 == -(g132 * QINV) - g123,
        "generator_form": alt123 == g123 and alt132 == g132,
        "in_ideal": e * g123 == g123 and e * g132 == g132,
        "dimension": ideal == 2 and with_gammas == 2,
    }
    return HeckeReport(
        checks, {"ideal": ideal, "ideal_with_gammas": with_gammas}
    )


def verify_braid_relations(r: int) -> bool:
    """g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}, far generators commute, and the quadratic relation."""
    gens = [HeckeElement.generator(r, i) for i in range(1, r)]
    one = HeckeElement.identity(r)
    for k, g in enumerate(gens):
        if g * g != one + g * C:
            return False
        for k2 in range(k + 1, len(gens)):
            h = gens[k2]
            if k2 == k + 1:
                if g * h * g != h * g * h:
                    return False
            elif g * h != h * g:
                return False
    return True
