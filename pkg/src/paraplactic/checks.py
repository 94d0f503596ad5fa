"""The verification registry run by ``paraplactic verify-all``.

Each check is a function of the :class:`~paraplactic.config.RunConfig`
returning a :class:`CheckResult`. Checks are registered per group with the
:func:`register` decorator and always run in registry order.
"""

import dataclasses
import itertools
import logging
from collections.abc import Iterator
from typing import Any, Callable, Optional

import numpy as np

from paraplactic.combinat.partitions import (
    closed_form_sign,
    enumerate_hook,
    epsilon_configs,
    epsilon_to_partition,
    from_frobenius,
    in_hook,
    is_p_augmented,
    partitions_of,
    to_frobenius,
)
from paraplactic.combinat.plactic import (
    PlacticSignError,
    PlacticUniquenessError,
    SignedWord,
    canonicalize,
    product,
    word_classes,
    words,
)
from paraplactic.combinat.tableaux import alphabet, count_ssyt
from paraplactic.config import RunConfig
from paraplactic.exact.laurent import Q, QINV, LaurentPoly, balanced_q_integer
from paraplactic.exact.linalg import rank_laurent, rank_rational
from paraplactic.exact.series import TruncatedSeries
from paraplactic.fock import FockSpec, verify_fock
from paraplactic.quantum.hecke import (
    gamma_basis,
    gamma_basis_from_generators,
    verify_braid_relations,
    verify_ideal_action,
    verify_idempotent,
)
from paraplactic.quantum.rmatrix import (
    eigen_multiplicities,
    expected_multiplicities,
    verify_I3,
    verify_representation,
    verify_ybe_hecke,
)
from paraplactic.symfunc import (
    VariableSplit,
    hook_schur,
    schur,
    schur_bialternant,
    verify_identity,
    verify_sign_transport,
)

logger = logging.getLogger(__name__)

GROUPS = (
    "exact",
    "partitions",
    "symfunc",
    "identities",
    "plactic",
    "hecke",
    "rmatrix",
    "fock",
)

PLACTIC_MAX_LENGTH = 4
"""Longest word closed exhaustively by default; the test suite goes to 5."""


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """Outcome of one registered check."""

    group: str
    """Registry group."""
    name: str
    """Check name, unique within its group."""
    passed: bool
    """True if every case passed."""
    detail: dict[str, Any] = dataclasses.field(default_factory=dict, hash=False)
    """JSON-ready description of what was checked and of any failures."""

    def to_json(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclasses.dataclass(frozen=True)
class Check:
    group: str
    """Registry group."""
    name: str
    """Check name."""
    func: Callable[[RunConfig], tuple[bool, dict[str, Any]]]
    """Returns (passed, detail)."""

    def run(self, cfg: RunConfig) -> CheckResult:
        passed, detail = self.func(cfg)
        return CheckResult(self.group, self.name, passed, detail)


CHECKS: dict[str, list[Check]] = {group: [] for group in GROUPS}


def register(
    group: str, name: str
) -> Callable[
    [Callable[[RunConfig], tuple[bool, dict[str, Any]]]],
    Callable[[RunConfig], tuple[bool, dict[str, Any]]],
]:
    if group not in CHECKS:
        msg = f"Unknown check group {group!r}"
        raise ValueError(msg)

    def decorator(
        func: Callable[[RunConfig], tuple[bool, dict[str, Any]]],
    ) -> Callable[[RunConfig], tuple[bool, dict[str, Any]]]:
        CHECKS[group].append(Check(group, name, func))
        return func

    return decorator


def _outcome(failures: list[Any], **detail: Any) -> tuple[bool, dict[str, Any]]:
    detail["failures"] = failures
    return not failures, detail


def _splits(max_total: int) -> Iterator[tuple[int, int]]:
    """(m, n) with 1 <= m + n <= max_total."""
    for total in range(1, max_total + 1):
        for m in range(total, -1, -1):
            yield m, total - m


def _random_laurent(rng: np.random.Generator) -> LaurentPoly:
    exps = rng.integers(-3, 4, size=3)
    coeffs = rng.integers(-3, 4, size=3)
    out: dict[int, int] = {}
    for e, c in zip(exps.tolist(), coeffs.tolist()):
        out[e] = out.get(e, 0) + c
    return LaurentPoly.from_dict(out)


@register("exact", "laurent_ring_laws")
def _laurent_laws(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    rng = np.random.default_rng(cfg.seed)
    failures = []
    for trial in range(25):
        a, b, c = (_random_laurent(rng) for _ in range(3))
        ok = (
            (a * b) * c == a * (b * c)
            and a * b == b * a
            and a * (b + c) == a * b + a * c
            and a.bar().bar() == a
            and (a * b).bar() == a.bar() * b.bar()
            and (b.is_zero() or (a * b).exact_div(b) == a)
        )
        if not ok:
            failures.append({"trial": trial, "a": str(a), "b": str(b), "c": str(c)})
    return _outcome(failures, trials=25, seed=cfg.seed)


@register("exact", "q_integers")
def _q_integers(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    for k in range(1, 8):
        qk = balanced_q_integer(k)
        if qk.bar() != qk or qk.evaluate(1) != k or qk * (Q - QINV) != Q**k - QINV**k:
            failures.append(k)
    return _outcome(failures, ks=list(range(1, 8)))


@register("exact", "series_inverse")
def _series_inverse(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    rng = np.random.default_rng(cfg.seed)
    failures = []
    nvars = 2
    for trial in range(10):
        terms: dict[tuple[int, ...], int] = {(0, 0): 1}
        for _ in range(4):
            mono = tuple(int(v) for v in rng.integers(0, 3, size=nvars))
            if sum(mono):
                terms[mono] = int(rng.integers(-2, 3))
        s = TruncatedSeries.from_terms(nvars, cfg.cap, terms.items())
        if s * s.inverse() != TruncatedSeries.one(nvars, cfg.cap):
            failures.append({"trial": trial, "series": str(s)})
    return _outcome(failures, trials=10, cap=cfg.cap)


@register("exact", "rank")
def _rank(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    rng = np.random.default_rng(cfg.seed)
    failures = []
    for trial in range(10):
        base = rng.integers(-3, 4, size=(3, 5)).tolist()
        mix = rng.integers(-2, 3, size=3).tolist()
        extra = [sum(mix[i] * base[i][j] for i in range(3)) for j in range(5)]
        rows = [*base, extra]
        polys = [[LaurentPoly.constant(v) for v in row] for row in rows]
        if not rank_rational(rows) == rank_rational(base) == rank_laurent(polys):
            failures.append({"trial": trial, "rows": rows})
    return _outcome(failures, trials=10)


@register("partitions", "conjugate_and_frobenius")
def _conjugate(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = [
        lam.to_json()
        for r in range(cfg.cap + 1)
        for lam in partitions_of(r)
        if lam.conjugate().conjugate() != lam or from_frobenius(to_frobenius(lam)) != lam
    ]
    return _outcome(failures, max_size=cfg.cap)


@register("partitions", "epsilon_bijection")
def _epsilon(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    for n, p in itertools.product(range(1, 7), range(4)):
        images = set()
        for cfg in epsilon_configs(n, p):
            lam, r, sign = epsilon_to_partition(cfg)
            images.add(lam)
            ok = is_p_augmented(lam, p) and sign == closed_form_sign(lam, p, r)
            if p == 0:
                ok = ok and lam.is_self_conjugate()
            if not ok:
                failures.append({"n": n, "p": p, "signs": list(cfg.signs)})
        if len(images) != 2**n:
            failures.append({"n": n, "p": p, "distinct": len(images)})
    return _outcome(failures, n=[1, 6], p=[0, 3])


@register("partitions", "sign_transport")
def _sign_transport(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    for p in range(1, 4):
        report = verify_sign_transport(p, cfg.cap)
        if not report.passed:
            assert report.failure is not None
            failures.append({"p": p, "eta": report.failure.to_json()})
    return _outcome(failures, max_size=cfg.cap)


@register("symfunc", "hook_schur_methods")
def _hook_methods(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    top = min(cfg.cap, 6)
    for m, n in itertools.product(range(4), repeat=2):
        if m + n == 0:
            continue
        vs = VariableSplit(m, n, top)
        for r in range(top + 1):
            for lam in partitions_of(r):
                comb = hook_schur(lam, vs, "comb")
                if comb != hook_schur(lam, vs, "factor"):
                    failures.append({"m": m, "n": n, "shape": lam.to_json()})
                elif bool(comb.terms) != in_hook(lam, m, n):
                    failures.append({"m": m, "n": n, "shape": lam.to_json(), "hook": True})
    return _outcome(failures, max_size=top)


@register("symfunc", "schur_bialternant")
def _bialternant(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    top = min(cfg.cap, 6)
    for k in range(1, 5):
        for r in range(top + 1):
            for lam in partitions_of(r):
                if schur(lam, k, r) != schur_bialternant(lam, k, r):
                    failures.append({"k": k, "shape": lam.to_json()})
    return _outcome(failures, max_size=top)


def _identity_failures(
    which: str, cases: Iterator[tuple[int, int, Optional[int]]], cap: int
) -> list[dict[str, Any]]:
    failures = []
    for m, n, p in cases:
        report = verify_identity(which, VariableSplit(m, n, cap), p)
        logger.debug("identity %s m=%d n=%d p=%s: %s", which, m, n, p, report.equal)
        if not report.equal:
            failures.append(report.to_json())
    return failures


@register("identities", "hook")
def _hook_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = ((m, n, None) for m, n in _splits(4))
    return _outcome(_identity_failures("hook", cases, cfg.cap), cap=cfg.cap)


@register("identities", "pbw")
def _pbw_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = ((m, n, None) for m, n in _splits(4))
    return _outcome(_identity_failures("pbw", cases, cfg.cap), cap=cfg.cap)


@register("identities", "schur-sum")
def _schur_sum_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = ((k, 0, None) for k in range(1, 5))
    return _outcome(_identity_failures("schur-sum", cases, cfg.cap), cap=cfg.cap)


@register("identities", "macdonald-p0")
def _macdonald_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = ((0, k, None) for k in range(1, 5))
    return _outcome(_identity_failures("macdonald-p0", cases, cfg.cap), cap=cfg.cap)


@register("identities", "king")
def _king_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = ((k, 0, p) for k in range(1, 5) for p in range(1, 4))
    return _outcome(_identity_failures("king", cases, cfg.cap), cap=cfg.cap)


@register("identities", "pschar")
def _pschar_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = ((0, k, p) for k in range(1, 5) for p in range(1, 4))
    failures = _identity_failures("pschar", cases, cfg.cap)
    cases = ((0, k, p) for k in range(1, 5) for p in range(1, 4))
    failures += _identity_failures("pschar-alternant", cases, cfg.cap)
    return _outcome(failures, cap=cfg.cap)


@register("identities", "fock-p")
def _fock_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = (
        (m, n, p)
        for m, n in itertools.product(range(3), repeat=2)
        if m + n
        for p in range(1, 4)
    )
    return _outcome(_identity_failures("fock-p", cases, cfg.cap), cap=cfg.cap)


@register("identities", "ratio")
def _ratio_identity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    cases = (
        (m, n, p)
        for m, n in itertools.product(range(3), repeat=2)
        if m + n
        for p in range(1, 4)
    )
    return _outcome(_identity_failures("ratio", cases, cfg.cap), cap=cfg.cap)


@register("plactic", "classes")
def _plactic_classes(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures: list[Any] = []
    top = min(cfg.cap, PLACTIC_MAX_LENGTH)
    for m, n in itertools.product(range(3), repeat=2):
        if m + n == 0:
            continue
        for r in range(top + 1):
            try:
                found = len(word_classes(m, n, r))
            except (PlacticSignError, PlacticUniquenessError) as err:
                failures.append({"m": m, "n": n, "length": r, "error": str(err)})
                continue
            expected = sum(count_ssyt(lam, m, n) for lam in enumerate_hook(m, n, r))
            if found != expected:
                failures.append(
                    {"m": m, "n": n, "length": r, "classes": found, "expected": expected}
                )
    return _outcome(failures, max_length=top)


@register("plactic", "insertion_agreement")
def _insertion(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    top = min(cfg.cap, PLACTIC_MAX_LENGTH)
    for m in range(1, 4):
        for r in range(top + 1):
            for w in words(m, 0, r):
                word = SignedWord(w)
                if canonicalize(word, m, 0) != canonicalize(word, m, 0, fast=True):
                    failures.append({"m": m, "word": ",".join(map(str, w))})
    return _outcome(failures, max_length=top)


@register("plactic", "associativity")
def _associativity(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    rng = np.random.default_rng(cfg.seed)
    m = n = 2
    letters = alphabet(m, n)
    failures = []
    singles = [canonicalize(SignedWord((x,)), m, n) for x in letters]
    triples = list(itertools.product(singles, repeat=3))
    for _ in range(20):
        pieces = []
        for _ in range(3):
            size = int(rng.integers(1, 3))
            picks = rng.integers(0, len(letters), size=size).tolist()
            pieces.append(canonicalize(SignedWord(tuple(letters[k] for k in picks)), m, n))
        triples.append(tuple(pieces))
    for a, b, c in triples:
        if product(product(a, b, m, n), c, m, n) != product(a, product(b, c, m, n), m, n):
            failures.append([str(x.tableau) for x in (a, b, c)])
    return _outcome(failures, triples=len(triples), seed=cfg.seed)


@register("hecke", "idempotent")
def _idempotent(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    report = verify_idempotent()
    return report.passed, report.to_json()


@register("hecke", "ideal_action")
def _ideal_action(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    report = verify_ideal_action()
    return report.passed, report.to_json()


@register("hecke", "relations")
def _relations(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    results = {f"braid_r{r}": verify_braid_relations(r) for r in range(2, 5)}
    results["gamma_generator_form"] = gamma_basis() == gamma_basis_from_generators()
    return all(results.values()), results


@register("rmatrix", "yang_baxter_hecke")
def _ybe(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    for m, n in _splits(3):
        report = verify_ybe_hecke(m, n)
        if not report.passed:
            failures.append(report.to_json())
    return _outcome(failures, max_dim=3)


@register("rmatrix", "eigenvalues")
def _eigenvalues(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    for m, n in ((1, 1), (2, 1), (1, 2), (2, 0), (0, 2)):
        found = eigen_multiplicities(m, n, cfg.q0)
        if found != expected_multiplicities(m, n):
            failures.append({"m": m, "n": n, "found": list(found)})
    return _outcome(failures, q0=str(cfg.q0))


@register("rmatrix", "representation")
def _representation(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = [
        {"m": m, "n": n} for m, n in _splits(3) if not verify_representation(m, n)
    ]
    return _outcome(failures, r=3)


@register("rmatrix", "I3")
def _i3(_cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    dims = {}
    for m, n in _splits(3):
        report = verify_I3(m, n)
        dims[f"{m},{n}"] = report.dimensions["I3"]
        if not report.passed:
            failures.append(report.to_json())
    return _outcome(failures, dimensions=dims)


@register("fock", "consistency")
def _fock(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    top = min(cfg.cap, PLACTIC_MAX_LENGTH)
    for m, n in itertools.product(range(3), repeat=2):
        if m + n == 0:
            continue
        for p in range(1, 4):
            report = verify_fock(FockSpec(m, n, p, cfg.cap), plactic_degree=top)
            if not report.passed:
                failures.append(report.to_json())
    return _outcome(failures, cap=cfg.cap, plactic_degree=top)


@register("fock", "unrestricted")
def _unrestricted(cfg: RunConfig) -> tuple[bool, dict[str, Any]]:
    failures = []
    for m, n in itertools.product(range(3), repeat=2):
        if m + n == 0:
            continue
        report = verify_fock(FockSpec(m, n, max(cfg.cap, 1), cfg.cap))
        if not report.passed:
            failures.append(report.to_json())
    return _outcome(failures, cap=cfg.cap)


@dataclasses.dataclass(frozen=True)
class CheckSummary:
    """All results of one verify-all run, in registry order."""

    results: tuple[CheckResult, ...]
    """One entry per check run."""

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def to_json(self) -> dict[str, Any]:
        return {
            "checks": [result.to_json() for result in self.results],
            "passed": self.passed,
        }


def selected_groups(only: Optional[tuple[str, ...]]) -> list[str]:
    if only is None:
        return list(GROUPS)
    unknown = [group for group in only if group not in CHECKS]
    if unknown:
        msg = f"Unknown check group(s) {', '.join(unknown)}; expected {', '.join(GROUPS)}"
        raise ValueError(msg)
    return [group for group in GROUPS if group in only]


def run_checks(cfg: RunConfig) -> CheckSummary:
    results = []
    for group in selected_groups(cfg.only):
        for check in CHECKS[group]:
            logger.info("Running %s/%s", group, check.name)
            result = check.run(cfg)
            if not result.passed:
                logger.warning("Check %s/%s failed", group, check.name)
            results.append(result)
    return CheckSummary(tuple(results))
