import dataclasses
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Union


@dataclasses.dataclass(frozen=True, eq=False)
class LaurentPoly:
    """A Laurent polynomial in a single variable q with integer coefficients.

    Instances are immutable and kept in canonical form, so structural
    equality is mathematical equality.
    """

    terms: tuple[tuple[int, int], ...] = ()
    """(exponent, coefficient) pairs sorted by exponent, no zero coefficient."""

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c != 0)))

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls(((0, value),)) if value else cls()

    @classmethod
    def q(cls, power: int = 1, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q**power."""
        return cls(((power, coeff),)) if coeff else cls()

    @classmethod
    def coerce(cls, value: "Union[LaurentPoly, int]") -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        msg = f"Cannot interpret {value!r} as a Laurent polynomial"
        raise TypeError(msg)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def max_degree(self) -> int:
        if not self.terms:
            msg = "The zero polynomial has no degree"
            raise ValueError(msg)
        return self.terms[-1][0]

    @property
    def min_degree(self) -> int:
        if not self.terms:
            msg = "The zero polynomial has no degree"
            raise ValueError(msg)
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    @property
    def trailing_coefficient(self) -> int:
        return self.terms[0][1] if self.terms else 0

    def coefficient(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if not self.terms:
            return hash(0)
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return hash(self.terms[0][1])
        return hash(self.terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __add__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        out = self.coeffs
        for e, c in LaurentPoly.coerce(other).terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        rhs = LaurentPoly.coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in rhs.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial() or abs(self.terms[0][1]) != 1:
                msg = f"Only unit monomials have negative powers, got {self}"
                raise ArithmeticError(msg)
            (e, c), = self.terms
            return LaurentPoly.q(e * exponent, c ** (-exponent))
        out = LaurentPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def shift(self, power: int) -> "LaurentPoly":
        """Multiply by q**power."""
        return LaurentPoly(tuple((e + power, c) for e, c in self.terms))

    def bar(self) -> "LaurentPoly":
        """The involution q -> q**-1."""
        return LaurentPoly.from_dict({-e: c for e, c in self.terms})

    def exact_div(self, other: "Union[LaurentPoly, int]") -> "LaurentPoly":
        """Divide exactly, raising ArithmeticError if a remainder is left.

        q is a unit, so after stripping the lowest powers of q both operands
        are ordinary polynomials with nonzero constant term and long division
        from the top decides divisibility.
        """
        divisor = LaurentPoly.coerce(other)
        if divisor.is_zero():
            msg = "Division of a Laurent polynomial by zero"
            raise ZeroDivisionError(msg)
        if self.is_zero():
            return LaurentPoly()
        shift = self.min_degree - divisor.min_degree
        rem = self.shift(-self.min_degree).coeffs
        den = divisor.shift(-divisor.min_degree)
        dtop, dlead = den.max_degree, den.leading_coefficient
        quotient: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < dtop or rem[top] % dlead:
                msg = f"{self} is not divisible by {divisor}"
                raise ArithmeticError(msg)
            factor = rem[top] // dlead
            quotient[top - dtop] = factor
            for e, c in den.terms:
                key = e + top - dtop
                value = rem.get(key, 0) - factor * c
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
        return LaurentPoly.from_dict(quotient).shift(shift)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def evaluate(self, q0: Union[Fraction, int]) -> Fraction:
        value = Fraction(q0)
        if value == 0 and self.terms and self.min_degree < 0:
            msg = f"{self} has a pole at q=0"
            raise ValueError(msg)
        return sum((c * value**e for e, c in self.terms), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in reversed(self.terms):
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(f" {s} {b}" for s, b in pieces[1:])

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
Q = LaurentPoly.q(1)
QINV = LaurentPoly.q(-1)


@dataclasses.dataclass(frozen=True, eq=False)
class LaurentFraction:
    """An element num/den of the fraction field Q(q) with integer Laurent parts.

    Fractions are not reduced. The denominator is normalized to have a
    positive lowest-order coefficient, and equality is decided by
    cross-multiplication.
    """

    num: LaurentPoly
    """Numerator."""
    den: LaurentPoly = ONE
    """Denominator, never zero."""

    def __post_init__(self) -> None:
        num = LaurentPoly.coerce(self.num)
        den = LaurentPoly.coerce(self.den)
        if den.is_zero():
            msg = f"Zero denominator in fraction with numerator {num}"
            raise ZeroDivisionError(msg)
        if num.is_zero():
            den = ONE
        elif den.is_monomial():
            (e, c), = den.terms
            if all(coeff % c == 0 for _, coeff in num.terms):
                num = LaurentPoly(tuple((k, coeff // c) for k, coeff in num.terms))
                num, den = num.shift(-e), ONE
        if den.trailing_coefficient < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(
        cls, value: "Union[LaurentFraction, LaurentPoly, int]"
    ) -> "LaurentFraction":
        if isinstance(value, LaurentFraction):
            return value
        return cls(LaurentPoly.coerce(value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        rhs = LaurentFraction.coerce(other)
        return self.num * rhs.den == rhs.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "LaurentFraction":
        return LaurentFraction(-self.num, self.den)

    def __add__(self, other: object) -> "LaurentFraction":
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        rhs = LaurentFraction.coerce(other)
        if rhs.is_zero():
            return self
        if self.is_zero():
            return rhs
        if self.den == rhs.den:
            return LaurentFraction(self.num + rhs.num, self.den)
        return LaurentFraction(
            self.num * rhs.den + rhs.num * self.den, self.den * rhs.den
        )

    __radd__ = __add__

    def __sub__(self, other: object) -> "LaurentFraction":
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        return self + (-LaurentFraction.coerce(other))

    def __rsub__(self, other: object) -> "LaurentFraction":
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        return LaurentFraction.coerce(other) - self

    def __mul__(self, other: object) -> "LaurentFraction":
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        rhs = LaurentFraction.coerce(other)
        if self.is_zero() or rhs.is_zero():
            return LaurentFraction(ZERO)
        return LaurentFraction(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "LaurentFraction":
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        rhs = LaurentFraction.coerce(other)
        if rhs.is_zero():
            msg = f"Division of {self} by zero"
            raise ZeroDivisionError(msg)
        return LaurentFraction(self.num * rhs.den, self.den * rhs.num)

    def __rtruediv__(self, other: object) -> "LaurentFraction":
        if not isinstance(other, (LaurentFraction, LaurentPoly, int)):
            return NotImplemented
        return LaurentFraction.coerce(other) / self

    def is_integral(self) -> bool:
        """True if the denominator divides the numerator in Z[q, q^-1]."""
        return self.den.divides(self.num)

    def to_poly(self) -> LaurentPoly:
        return self.num.exact_div(self.den)

    def evaluate(self, q0: Union[Fraction, int]) -> Fraction:
        den = self.den.evaluate(q0)
        if den == 0:
            msg = f"Denominator {self.den} vanishes at q={q0}"
            raise ValueError(msg)
        return self.num.evaluate(q0) / den

    def limit_q_inverse_zero(self) -> Fraction:
        """The value at q^-1 = 0, i.e. the limit q -> infinity."""
        if self.is_zero():
            return Fraction(0)
        top, bottom = self.num.max_degree, self.den.max_degree
        if top > bottom:
            msg = f"{self} has a pole at q^-1 = 0"
            raise ValueError(msg)
        if top < bottom:
            return Fraction(0)
        return Fraction(self.num.leading_coefficient, self.den.leading_coefficient)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"LaurentFraction({self})"


Scalar = Union[LaurentFraction, LaurentPoly, int]


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    return a * b


def frac_eq(a: LaurentFraction, b: LaurentFraction) -> bool:
    """Equality of fractions by cross-multiplication."""
    return a.num * b.den == b.num * a.den


def lsum(values: Iterable[Scalar]) -> LaurentFraction:
    """Sum of scalars as a fraction."""
    out = LaurentFraction(ZERO)
    for value in values:
        out = out + value
    return out


def standard_q_integer(k: int) -> LaurentPoly:
    """[k] = 1 + q + ... + q^(k-1)."""
    return LaurentPoly.from_dict(dict.fromkeys(range(k), 1))


def balanced_q_integer(k: int) -> LaurentPoly:
    """[k] = q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    return LaurentPoly.from_dict(dict.fromkeys(range(1 - k, k, 2), 1))
