"""Parastatistics Fock spaces F(m|n;p).

The degree-r states of F(m|n;p) are labelled by (m,n)-semistandard super
tableaux of size r whose shape lies in the (m,n)-hook and has first row at
most p. The order p enters only through this shape restriction.
"""

import dataclasses

from paraplactic.combinat.partitions import enumerate_hook
from paraplactic.combinat.plactic import CanonicalForm, p_restrict, word_classes
from paraplactic.combinat.tableaux import SuperTableau, count_ssyt, enumerate_ssyt
from paraplactic.exact.series import TruncatedSeries, product
from paraplactic.symfunc import VariableSplit, hook_sum, ps_character, verify_identity


@dataclasses.dataclass(frozen=True)
class FockSpec:
    """A Fock space F(m|n;p) truncated at degree cap."""

    m: int
    """Number of even letters."""
    n: int
    """Number of odd letters."""
    p: int
    """Order of the parastatistics."""
    cap: int
    """Largest degree considered."""

    def __post_init__(self) -> None:
        if self.p < 1:
            msg = f"The order p must be at least 1, got {self.p}"
            raise ValueError(msg)
        if self.m < 0 or self.n < 0 or self.m + self.n < 1 or self.cap < 0:
            msg = f"Invalid Fock space m={self.m}, n={self.n}, cap={self.cap}"
            raise ValueError(msg)

    @property
    def variables(self) -> VariableSplit:
        return VariableSplit(self.m, self.n, self.cap)


def basis_states(spec: FockSpec, r: int) -> list[SuperTableau]:
    if not 0 <= r <= spec.cap:
        msg = f"Degree {r} outside 0..{spec.cap}"
        raise ValueError(msg)
    return [
        tableau
        for lam in enumerate_hook(spec.m, spec.n, r, spec.p)
        for tableau in enumerate_ssyt(lam, spec.m, spec.n)
    ]


def graded_dimension(spec: FockSpec) -> tuple[int, ...]:
    """dim_r for r = 0..cap."""
    return tuple(
        sum(
            count_ssyt(lam, spec.m, spec.n)
            for lam in enumerate_hook(spec.m, spec.n, r, spec.p)
        )
        for r in range(spec.cap + 1)
    )


def fock_character(spec: FockSpec) -> TruncatedSeries:
    """Sum of hs_lam over the hook with lam_1 <= p."""
    return hook_sum(spec.variables, spec.p)


def fermion_boson_character(m: int, n: int, cap: int) -> TruncatedSeries:
    """prod_even (1 + x_i) prod_odd 1/(1 - x_i): the ordinary Fock space at p = 1."""
    vs = VariableSplit(m, n, cap)
    xs = [TruncatedSeries.variable(vs.nvars, cap, i) for i in range(vs.nvars)]
    fermions = product([vs.one() + x for x in xs[:m]], vs.nvars, cap)
    bosons = product([vs.one() - x for x in xs[m:]], vs.nvars, cap)
    return fermions * bosons.inverse()


def plactic_state_count(spec: FockSpec, r: int) -> int:
    """Super-Knuth classes of length r whose canonical form survives p_restrict."""
    return sum(
        1
        for cls in word_classes(spec.m, spec.n, r)
        if not p_restrict(CanonicalForm(1, cls.tableau), spec.p).is_zero
    )


@dataclasses.dataclass(frozen=True)
class FockReport:
    """Consistency checks for one Fock space."""

    spec: FockSpec
    """The space checked."""
    checks: dict[str, bool] = dataclasses.field(hash=False)
    """Outcome of each check."""
    dimensions: tuple[int, ...] = ()
    """graded_dimension(spec)."""

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, object]:
        return {
            "m": self.spec.m,
            "n": self.spec.n,
            "p": self.spec.p,
            "cap": self.spec.cap,
            "dimensions": list(self.dimensions),
            "checks": self.checks,
            "passed": self.passed,
        }


def verify_fock(spec: FockSpec, plactic_degree: int = 0) -> FockReport:
    """Cross-check the Fock space against the character identities and the plactic monoid.

    ``plactic_degree`` bounds the degrees compared with the plactic count;
    the exhaustive closure is expensive past degree 5.
    """
    dims = graded_dimension(spec)
    character = fock_character(spec)
    wider = graded_dimension(dataclasses.replace(spec, p=spec.p + 1))
    checks = {
        "collapse": tuple(character.collapse()) == dims,
        "monotone": all(a <= b for a, b in zip(dims, wider))
        and all(dims[r] == wider[r] for r in range(min(spec.p, spec.cap) + 1)),
        "fock_identity": verify_identity("fock-p", spec.variables, spec.p).equal,
    }
    if spec.p == 1:
        checks["fermion_boson"] = character == fermion_boson_character(
            spec.m, spec.n, spec.cap
        )
    if spec.p >= spec.cap:
        checks["ps_character"] = character == ps_character(spec.variables)
    if plactic_degree:
        checks["plactic_count"] = all(
            plactic_state_count(spec, r) == dims[r]
            for r in range(min(plactic_degree, spec.cap) + 1)
        )
    return FockReport(spec, checks, dims)
