"""Schur, skew Schur and hook Schur polynomials, and the character identities they satisfy.

Every function returns a :class:`~paraplactic.exact.series.TruncatedSeries`.
Sums over infinite families of partitions are cut at ``|lambda| <= cap``;
each summand starts in degree ``|lambda|`` so nothing below the cap is lost.
"""

import dataclasses
import itertools
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from functools import lru_cache
from typing import Callable, Literal, Optional

from paraplactic.combinat.partitions import (
    Partition,
    enumerate_hook,
    epsilon_configs,
    f0_sign,
    fp_sign,
    is_p_augmented,
    p_augment,
    p_augmented,
    partitions_of,
    self_conjugate,
    to_frobenius,
    weight_vector,
)
from paraplactic.combinat.tableaux import skew_ssyt_weights, ssyt_weights
from paraplactic.exact.series import Discrepancy, Monomial, TruncatedSeries, product, total

HookMethod = Literal["comb", "factor"]


@dataclasses.dataclass(frozen=True)
class VariableSplit:
    """m even variables x_1..x_m followed by n odd variables, truncated at cap."""

    m: int
    """Number of even variables."""
    n: int
    """Number of odd variables."""
    cap: int
    """Truncation degree."""

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            msg = f"Need at least one variable, got m={self.m}, n={self.n}"
            raise ValueError(msg)
        if self.cap < 0:
            msg = f"cap must be nonnegative, got {self.cap}"
            raise ValueError(msg)

    @property
    def nvars(self) -> int:
        return self.m + self.n

    def is_odd(self, index: int) -> bool:
        """Parity of the 0-based variable index."""
        return index >= self.m

    def one(self) -> TruncatedSeries:
        return TruncatedSeries.one(self.nvars, self.cap)

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.nvars, self.cap)


def _from_weights(weights: Iterable[tuple[int, ...]], nvars: int, cap: int) -> TruncatedSeries:
    return TruncatedSeries(nvars, cap, Counter(w for w in weights if sum(w) <= cap))


@lru_cache(maxsize=4096)
def hook_schur(
    lam: Partition, vs: VariableSplit, method: HookMethod = "comb"
) -> TruncatedSeries:
    """The hook Schur polynomial hs_lam in m even and n odd variables.

    ``comb`` sums the weights of all (m,n)-SSYT of shape lam; ``factor``
    uses hs_lam = sum_mu s_mu(x_1..x_m) s_{lam'/mu'}(x_{m+1}..x_{m+n}).
    """
    if lam.size > vs.cap:
        return vs.zero()
    if method == "comb":
        return _from_weights(ssyt_weights(lam, vs.m, vs.n), vs.nvars, vs.cap)
    if method != "factor":
        msg = f"Unknown hook Schur method {method!r}"
        raise ValueError(msg)
    conj = lam.conjugate()
    terms: Counter[Monomial] = Counter()
    for size in range(lam.size + 1):
        for mu in partitions_of(size):
            if not lam.contains(mu) or len(mu) > vs.m:
                continue
            even = list(ssyt_weights(mu, vs.m, 0))
            odd = list(skew_ssyt_weights(conj, mu.conjugate(), vs.n, 0))
            for a in even:
                for b in odd:
                    terms[a + b] += 1
    return TruncatedSeries(vs.nvars, vs.cap, terms)


def schur(lam: Partition, k: int, cap: int) -> TruncatedSeries:
    """The Schur polynomial s_lam(x_1..x_k) as a sum over semistandard tableaux."""
    if k < 1:
        msg = f"schur needs at least one variable, got k={k}"
        raise ValueError(msg)
    return hook_schur(lam, VariableSplit(k, 0, cap))


def skew_schur(lam: Partition, mu: Partition, k: int, cap: int) -> TruncatedSeries:
    """The skew Schur polynomial s_{lam/mu}(x_1..x_k)."""
    return _from_weights(skew_ssyt_weights(lam, mu, k, 0), k, cap)


Poly = dict[Monomial, int]


def _alternant(exponents: Sequence[int], k: int) -> Poly:
    """det(x_j^exponents[i]) expanded over the k! permutations."""
    out: Poly = defaultdict(int)
    for perm in itertools.permutations(range(k)):
        inversions = sum(
            1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j]
        )
        mono = [0] * k
        for i, j in enumerate(perm):
            mono[j] = exponents[i]
        out[tuple(mono)] += -1 if inversions % 2 else 1
    return {m: c for m, c in out.items() if c}


def _divide_exact(num: Poly, den: Poly) -> Poly:
    """Multivariate long division in lex order; raises if a remainder is left."""
    rem = dict(num)
    lead = max(den)
    lead_coeff = den[lead]
    quotient: Poly = {}
    while rem:
        top = max(rem)
        shift = tuple(a - b for a, b in zip(top, lead))
        if min(shift) < 0 or rem[top] % lead_coeff:
            msg = "Alternant division left a remainder"
            raise ArithmeticError(msg)
        factor = rem[top] // lead_coeff
        quotient[shift] = factor
        for mono, coeff in den.items():
            key = tuple(a + b for a, b in zip(mono, shift))
            value = rem.get(key, 0) - factor * coeff
            if value:
                rem[key] = value
            else:
                rem.pop(key, None)
    return quotient


def _delta(k: int) -> list[int]:
    return list(range(k - 1, -1, -1))


def schur_bialternant(
    lam: Partition, k: int, cap: Optional[int] = None
) -> TruncatedSeries:
    """s_lam as the quotient a_{lam+delta} / a_delta of alternants in k <= 4 variables."""
    if not 1 <= k <= 4:
        msg = f"Bialternant expansion supports 1 <= k <= 4 variables, got {k}"
        raise ValueError(msg)
    cap = lam.size if cap is None else cap
    if len(lam) > k:
        return TruncatedSeries.zero(k, cap)
    delta = _delta(k)
    top = _alternant([lam.part(i) + delta[i] for i in range(k)], k)
    return TruncatedSeries(k, cap, _divide_exact(top, _alternant(delta, k)))


def ps_character(vs: VariableSplit) -> TruncatedSeries:
    """Character of the parastatistics algebra as its PBW product.

    prod_odd (1 + x_i) / prod_even (1 - x_i) times prod over pairs i<j of
    (1 + x_i x_j) for mixed parity, 1/(1 - x_i x_j) for equal parity, and
    1/(1 - x_i^2) for each odd i.
    """
    numer, denom = [], []
    for i in range(vs.nvars):
        xi = TruncatedSeries.variable(vs.nvars, vs.cap, i)
        if vs.is_odd(i):
            numer.append(vs.one() + xi)
            denom.append(vs.one() - xi * xi)
        else:
            denom.append(vs.one() - xi)
    numer_pairs, denom_pairs = _pair_factors(vs)
    return product(numer + numer_pairs, vs.nvars, vs.cap) * product(
        denom + denom_pairs, vs.nvars, vs.cap
    ).inverse()


def _pair_factors(vs: VariableSplit) -> tuple[list[TruncatedSeries], list[TruncatedSeries]]:
    """(1 + x_i x_j) for mixed parity and (1 - x_i x_j) for equal parity, i < j."""
    mixed, same = [], []
    for i, j in itertools.combinations(range(vs.nvars), 2):
        exps = [0] * vs.nvars
        exps[i] = exps[j] = 1
        xij = TruncatedSeries.monomial(vs.nvars, vs.cap, exps)
        if vs.is_odd(i) != vs.is_odd(j):
            mixed.append(vs.one() + xij)
        else:
            same.append(vs.one() - xij)
    return mixed, same


def _hook_denominator(vs: VariableSplit) -> TruncatedSeries:
    """prod_i (1 - x_i) prod_same (1 - x_i x_j)."""
    _, same = _pair_factors(vs)
    linear = [
        vs.one() - TruncatedSeries.variable(vs.nvars, vs.cap, i)
        for i in range(vs.nvars)
    ]
    return product(linear + same, vs.nvars, vs.cap)


def hook_product(vs: VariableSplit) -> TruncatedSeries:
    """prod_mixed (1 + x_i x_j) / (prod_i (1 - x_i) prod_same (1 - x_i x_j))."""
    mixed, _ = _pair_factors(vs)
    return product(mixed, vs.nvars, vs.cap) * _hook_denominator(vs).inverse()


def classical_product(k: int, cap: int) -> TruncatedSeries:
    """prod_i (1 - x_i) prod_{i<j} (1 - x_i x_j) in k ordinary variables."""
    return _hook_denominator(VariableSplit(k, 0, cap))


def hook_sum(vs: VariableSplit, p: Optional[int] = None) -> TruncatedSeries:
    """Sum of hs_lam over the (m,n)-hook, optionally with lam_1 <= p."""
    return total(
        (
            hook_schur(lam, vs)
            for r in range(vs.cap + 1)
            for lam in enumerate_hook(vs.m, vs.n, r, p)
        ),
        vs.nvars,
        vs.cap,
    )


def augmented_f0_sum(vs: VariableSplit, p: int) -> TruncatedSeries:
    """sum over eta in F_0 of (-1)^((|eta|+r)/2) hs_{eta_(p)}."""
    out = vs.zero()
    for eta in self_conjugate(vs.cap):
        lam = p_augment(eta, p)
        if lam.size <= vs.cap:
            out = out + hook_schur(lam, vs).scale(f0_sign(eta))
    return out


def fp_sum(vs: VariableSplit, p: int) -> TruncatedSeries:
    """sum over lam in F_p of (-1)^((|lam|-(p-1)r)/2) hs_lam."""
    return total(
        (hook_schur(lam, vs).scale(fp_sign(lam, p)) for lam in p_augmented(p, vs.cap)),
        vs.nvars,
        vs.cap,
    )


def pschar_alternant(k: int, p: int, cap: int) -> TruncatedSeries:
    """sum over eps of (-1)^r a_nu / a_rho0 in k ordinary variables.

    The alternants are taken with nu in its unsorted order, so the sign of
    each summand comes from the determinant.
    """
    if not 1 <= k <= 4:
        msg = f"Alternant expansion supports 1 <= k <= 4 variables, got {k}"
        raise ValueError(msg)
    acc: Poly = defaultdict(int)
    for cfg in epsilon_configs(k, p):
        # shift by (k-1)/2 so rho0 becomes delta
        exps = [(v + k - 1) // 2 for v in weight_vector(cfg)]
        sign = -1 if cfg.flipped % 2 else 1
        for mono, coeff in _alternant(exps, k).items():
            acc[mono] += sign * coeff
    numer = {mono: c for mono, c in acc.items() if c}
    return TruncatedSeries(k, cap, _divide_exact(numer, _alternant(_delta(k), k)))


@dataclasses.dataclass(frozen=True)
class IdentityReport:
    """Outcome of comparing both sides of an identity up to the cap."""

    identity: str
    """Registry name of the identity."""
    m: int
    """Even variables."""
    n: int
    """Odd variables."""
    p: Optional[int]
    """Order, for the p-dependent identities."""
    cap: int
    """Truncation degree."""
    equal: bool
    """True if both sides agree on every monomial up to the cap."""
    first_discrepancy: Optional[Discrepancy] = None
    """The lexicographically smallest monomial where they differ."""
    nvars: int = 0
    """Number of variables the sides were expanded in."""
    sides: Optional[tuple[TruncatedSeries, TruncatedSeries]] = dataclasses.field(
        default=None, compare=False, repr=False
    )
    """The expanded (lhs, rhs)."""

    def to_json(self) -> dict[str, object]:
        return {
            "identity": self.identity,
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "cap": self.cap,
            "nvars": self.nvars,
            "equal": self.equal,
            "first_discrepancy": None
            if self.first_discrepancy is None
            else self.first_discrepancy.to_json(),
        }


Sides = tuple[TruncatedSeries, TruncatedSeries]
IdentityBuilder = Callable[[VariableSplit, int], Sides]


@dataclasses.dataclass(frozen=True)
class Identity:
    """A registered identity between two series."""

    name: str
    """Registry name."""
    build: IdentityBuilder
    """Returns (lhs, rhs) for a variable split and order p."""
    needs_p: bool
    """True if the identity depends on the order p."""
    even_only: bool
    """True if only even variables are allowed (n = 0)."""
    ordinary: bool
    """True if the identity is stated in n ordinary variables (m = 0)."""


IDENTITIES: dict[str, Identity] = {}


def register_identity(
    name: str,
    *,
    needs_p: bool = False,
    even_only: bool = False,
    ordinary: bool = False,
) -> Callable[[IdentityBuilder], IdentityBuilder]:
    def decorator(func: IdentityBuilder) -> IdentityBuilder:
        IDENTITIES[name] = Identity(name, func, needs_p, even_only, ordinary)
        return func

    return decorator


def _ordinary(vs: VariableSplit) -> VariableSplit:
    """The n ordinary variables as an all-even split."""
    return VariableSplit(vs.n, 0, vs.cap)


@register_identity("schur-sum", even_only=True)
def _schur_sum(vs: VariableSplit, _p: int) -> Sides:
    return hook_sum(vs), classical_product(vs.m, vs.cap).inverse()


@register_identity("hook")
def _hook(vs: VariableSplit, _p: int) -> Sides:
    return hook_product(vs), hook_sum(vs)


@register_identity("pbw")
def _pbw(vs: VariableSplit, _p: int) -> Sides:
    return ps_character(vs), hook_sum(vs)


@register_identity("fock-p", needs_p=True)
def _fock(vs: VariableSplit, p: int) -> Sides:
    return augmented_f0_sum(vs, p) * hook_product(vs), hook_sum(vs, p)


@register_identity("king", needs_p=True, even_only=True)
def _king(vs: VariableSplit, p: int) -> Sides:
    return hook_sum(vs, p), augmented_f0_sum(vs, p) * hook_product(vs)


@register_identity("ratio", needs_p=True)
def _ratio(vs: VariableSplit, p: int) -> Sides:
    return augmented_f0_sum(vs, p) * augmented_f0_sum(vs, 0).inverse(), hook_sum(vs, p)


@register_identity("macdonald-p0", ordinary=True)
def _macdonald(vs: VariableSplit, _p: int) -> Sides:
    ordinary = _ordinary(vs)
    return augmented_f0_sum(ordinary, 0), classical_product(ordinary.m, vs.cap)


@register_identity("pschar", needs_p=True, ordinary=True)
def _pschar(vs: VariableSplit, p: int) -> Sides:
    ordinary = _ordinary(vs)
    return fp_sum(ordinary, p), classical_product(ordinary.m, vs.cap) * hook_sum(
        ordinary, p
    )


@register_identity("pschar-alternant", needs_p=True, ordinary=True)
def _pschar_alternant(vs: VariableSplit, p: int) -> Sides:
    ordinary = _ordinary(vs)
    return pschar_alternant(ordinary.m, p, vs.cap), classical_product(
        ordinary.m, vs.cap
    ) * hook_sum(ordinary, p)


def verify_identity(
    which: str, vs: VariableSplit, p: Optional[int] = None
) -> IdentityReport:
    """Expand both sides of a registered identity and compare them term by term."""
    entry = IDENTITIES.get(which)
    if entry is None:
        msg = f"Unknown identity {which!r}, expected one of {', '.join(IDENTITIES)}"
        raise ValueError(msg)
    if entry.needs_p and p is None:
        msg = f"Identity {which!r} needs the order p"
        raise ValueError(msg)
    if p is not None and p < 0:
        msg = f"p must be nonnegative, got {p}"
        raise ValueError(msg)
    if entry.even_only and vs.n:
        msg = f"Identity {which!r} is stated for even variables only, got n={vs.n}"
        raise ValueError(msg)
    if entry.ordinary and vs.m:
        msg = f"Identity {which!r} is stated in n ordinary variables, got m={vs.m}"
        raise ValueError(msg)
    lhs, rhs = entry.build(vs, p if entry.needs_p and p is not None else 0)
    discrepancy = lhs.first_discrepancy(rhs)
    return IdentityReport(
        which,
        vs.m,
        vs.n,
        p if entry.needs_p else None,
        vs.cap,
        discrepancy is None,
        discrepancy,
        lhs.nvars,
        (lhs, rhs),
    )


@dataclasses.dataclass(frozen=True)
class SignTransportReport:
    """Comparison of the F_0 and F_p summation forms."""

    p: int
    """Order."""
    max_size: int
    """Largest |eta| checked."""
    checked: int
    """Number of self-conjugate partitions checked."""
    failure: Optional[Partition] = None
    """First eta for which size or sign transport fails."""

    @property
    def passed(self) -> bool:
        return self.failure is None


def verify_sign_transport(p: int, max_size: int) -> SignTransportReport:
    """Check |eta_(p)| = |eta| + p r and that the F_0 and F_p signs agree."""
    family = self_conjugate(max_size)
    for eta in family:
        lam = p_augment(eta, p)
        r = to_frobenius(eta).rank
        if (
            lam.size != eta.size + p * r
            or not is_p_augmented(lam, p)
            or f0_sign(eta) != fp_sign(lam, p)
        ):
            return SignTransportReport(p, max_size, len(family), eta)
    return SignTransportReport(p, max_size, len(family))

