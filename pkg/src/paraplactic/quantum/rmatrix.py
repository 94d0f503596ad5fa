"""The GL_q(m|n) R-matrix and the sign permutation action of H_r(q) on V^{(x)r}.

Basis vectors of V are numbered 1..m+n; 1..m are even and m+1..m+n odd.
A basis vector of V^{(x)r} is a word of r such positions. On two tensor
factors the operator acts by

    R(i, i) = (-1)^i' q^((-1)^i') (i, i)
    R(i, j) = (-1)^(i'j') (j, i) + (q - q^-1) (i, j)    for i < j
    R(i, j) = (-1)^(i'j') (j, i)                        for i > j

where i' is the parity of i.
"""

import dataclasses
import itertools
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from paraplactic.combinat.partitions import Partition
from paraplactic.combinat.tableaux import SignedLetter, SuperTableau, count_ssyt, enumerate_ssyt
from paraplactic.exact.laurent import (
    ONE,
    Q,
    QINV,
    ZERO,
    LaurentFraction,
    LaurentPoly,
    Scalar,
)
from paraplactic.exact.linalg import (
    as_object_matrix,
    clear_denominators,
    kernel_dimension,
    pivot_rows_laurent,
    rank_laurent,
    rank_rational,
)
from paraplactic.quantum.hecke import HeckeElement, eulerian_idempotent, gamma_basis

C = Q - QINV
Word = tuple[int, ...]
Pair = tuple[int, int]

SHAPE_21 = Partition((2, 1))


def parity(position: int, m: int) -> int:
    return 0 if position <= m else 1


@dataclasses.dataclass(frozen=True)
class RMatrixOperator:
    """The R-matrix on V (x) V as a sparse map ((out pair), (in pair)) -> coefficient."""

    m: int
    """Even dimension."""
    n: int
    """Odd dimension."""
    entries: Mapping[tuple[Pair, Pair], LaurentPoly] = dataclasses.field(
        default_factory=dict, hash=False, compare=False
    )
    """Nonzero matrix entries."""

    @property
    def dim(self) -> int:
        return self.m + self.n

    def pairs(self) -> list[Pair]:
        return list(itertools.product(range(1, self.dim + 1), repeat=2))

    def action(self, pair: Pair) -> list[tuple[Pair, LaurentPoly]]:
        """R applied to the basis vector ``pair``."""
        return _columns(self)[pair]

    def matrix(self) -> np.ndarray:
        """Dense (m+n)^2 square object matrix, rows indexed by output pair."""
        return _embed(self, 2, 0)

    def specialize(self, q0: Union[Fraction, int]) -> np.ndarray:
        out = self.matrix()
        for index, value in np.ndenumerate(out):
            out[index] = value.evaluate(q0)
        return out


def build_rmatrix(m: int, n: int) -> RMatrixOperator:
    """The R-matrix of GL_q(m|n) following the explicit action on basis pairs."""
    if m < 0 or n < 0 or m + n < 1:
        msg = f"Need m + n >= 1, got m={m}, n={n}"
        raise ValueError(msg)
    return _build(m, n)


@lru_cache(maxsize=None)
def _build(m: int, n: int) -> RMatrixOperator:
    entries: dict[tuple[Pair, Pair], LaurentPoly] = {}
    for i, j in itertools.product(range(1, m + n + 1), repeat=2):
        pi, pj = parity(i, m), parity(j, m)
        if i == j:
            entries[(i, i), (i, i)] = LaurentPoly.q(-1, -1) if pi else Q
            continue
        entries[(j, i), (i, j)] = LaurentPoly.constant(-1 if pi and pj else 1)
        if i < j:
            entries[(i, j), (i, j)] = C
    return RMatrixOperator(m, n, entries)


@lru_cache(maxsize=None)
def _columns(op: RMatrixOperator) -> dict[Pair, list[tuple[Pair, LaurentPoly]]]:
    out: dict[Pair, list[tuple[Pair, LaurentPoly]]] = defaultdict(list)
    for (target, source), value in sorted(op.entries.items()):
        out[source].append((target, value))
    return dict(out)


def words(dim: int, r: int) -> list[Word]:
    return list(itertools.product(range(1, dim + 1), repeat=r))


def _embed(op: RMatrixOperator, r: int, slot: int) -> np.ndarray:
    """The R-matrix acting on tensor slots (slot, slot+1) of V^{(x)r} as a dense matrix."""
    basis = words(op.dim, r)
    index = {w: k for k, w in enumerate(basis)}
    out = np.empty((len(basis), len(basis)), dtype=object)
    out.fill(ZERO)
    for k, word in enumerate(basis):
        for (a, b), value in op.action((word[slot], word[slot + 1])):
            target = word[:slot] + (a, b) + word[slot + 2 :]
            out[index[target], k] = out[index[target], k] + value
    return out


def _identity(size: int) -> np.ndarray:
    out = np.empty((size, size), dtype=object)
    out.fill(ZERO)
    for k in range(size):
        out[k, k] = ONE
    return out


def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of object matrices, skipping zero entries."""
    out = np.empty((a.shape[0], b.shape[1]), dtype=object)
    out.fill(ZERO)
    for i in range(a.shape[0]):
        nonzero = [(k, a[i, k]) for k in range(a.shape[1]) if a[i, k]]
        for j in range(b.shape[1]):
            acc = ZERO
            for k, value in nonzero:
                if b[k, j]:
                    acc = acc + value * b[k, j]
            out[i, j] = acc
    return out


def _equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


@dataclasses.dataclass(frozen=True)
class RMatrixReport:
    """Named boolean checks for a given (m, n)."""

    m: int
    """Even dimension."""
    n: int
    """Odd dimension."""
    checks: dict[str, bool] = dataclasses.field(hash=False)
    """Outcome of each check."""
    dimensions: dict[str, int] = dataclasses.field(default_factory=dict, hash=False)
    """Dimensions or multiplicities computed along the way."""

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, object]:
        return {
            "m": self.m,
            "n": self.n,
            "checks": self.checks,
            "dimensions": self.dimensions,
            "passed": self.passed,
        }


def verify_ybe_hecke(m: int, n: int) -> RMatrixReport:
    """Check R1 R2 R1 = R2 R1 R2 on V^{(x)3} and R^2 = 1 + (q - q^-1) R on V^{(x)2}."""
    if m + n > 4:
        msg = f"Yang-Baxter check supports m + n <= 4, got {m + n}"
        raise ValueError(msg)
    op = build_rmatrix(m, n)
    r = op.matrix()
    hecke = _equal(_matmul(r, r), _identity(r.shape[0]) + r * C)
    r1, r2 = _embed(op, 3, 0), _embed(op, 3, 1)
    ybe = _equal(_matmul(_matmul(r1, r2), r1), _matmul(_matmul(r2, r1), r2))
    return RMatrixReport(m, n, {"yang_baxter": ybe, "hecke": hecke})


def expected_multiplicities(m: int, n: int) -> tuple[int, int]:
    """m(m+1)/2 + n(n-1)/2 + mn and m(m-1)/2 + n(n+1)/2 + mn."""
    return (
        m * (m + 1) // 2 + n * (n - 1) // 2 + m * n,
        m * (m - 1) // 2 + n * (n + 1) // 2 + m * n,
    )


def eigen_multiplicities(m: int, n: int, q0: Union[Fraction, int]) -> tuple[int, int]:
    """Kernel dimensions of R - q0 and R + 1/q0 at a generic rational q0."""
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        msg = f"q0 must be generic (not 0 or +-1), got {q0}"
        raise ValueError(msg)
    r = build_rmatrix(m, n).specialize(q0)
    size = r.shape[0]
    eye = np.identity(size, dtype=object) * Fraction(1)
    return kernel_dimension(r - eye * q0), kernel_dimension(r + eye / q0)


@dataclasses.dataclass(frozen=True)
class TensorVector:
    """An element of V^{(x)r} with coefficients in Q(q)."""

    r: int
    """Tensor degree."""
    coeffs: Mapping[Word, LaurentFraction] = dataclasses.field(
        default_factory=dict, hash=False
    )
    """Coefficient of each basis word, zero coefficients not stored."""

    def __post_init__(self) -> None:
        clean: dict[Word, LaurentFraction] = {}
        for word, value in self.coeffs.items():
            if len(word) != self.r:
                msg = f"Word {word} does not have length {self.r}"
                raise ValueError(msg)
            frac = LaurentFraction.coerce(value)
            if frac:
                clean[tuple(word)] = frac
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis(cls, word: Sequence[int], coeff: Scalar = 1) -> "TensorVector":
        return cls(len(word), {tuple(word): LaurentFraction.coerce(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, word: Word) -> LaurentFraction:
        return self.coeffs.get(word, LaurentFraction(ZERO))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.r == other.r and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if self.r != other.r:
            msg = f"Tensor degree mismatch: {self.r} vs {other.r}"
            raise ValueError(msg)
        out = dict(self.coeffs)
        for word, value in other.coeffs.items():
            out[word] = out[word] + value if word in out else value
        return TensorVector(self.r, out)

    def __neg__(self) -> "TensorVector":
        return TensorVector(self.r, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def __mul__(self, other: Scalar) -> "TensorVector":
        return TensorVector(self.r, {k: v * other for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def tensor(self, other: "TensorVector") -> "TensorVector":
        """self (x) other."""
        return TensorVector(
            self.r + other.r,
            {
                a + b: va * vb
                for a, va in self.coeffs.items()
                for b, vb in other.coeffs.items()
            },
        )

    def content(self) -> tuple[int, ...]:
        """Sorted letters of the (common) weight of a weight vector."""
        contents = {tuple(sorted(word)) for word in self.coeffs}
        if len(contents) != 1:
            msg = "Vector is not a weight vector"
            raise ValueError(msg)
        return contents.pop()

    def to_json(self, m: int) -> dict[str, str]:
        return {
            format_word(word, m): str(value) for word, value in sorted(self.coeffs.items())
        }


def format_word(word: Word, m: int) -> str:
    return ",".join(str(SignedLetter.from_position(k, m)) for k in word)


def apply_generator(v: TensorVector, slot: int, op: RMatrixOperator) -> TensorVector:
    """pi_q(g_slot) v: the R-matrix on tensor factors slot, slot+1 (1-based)."""
    if not 1 <= slot < v.r:
        msg = f"No generator g_{slot} on tensor degree {v.r}"
        raise ValueError(msg)
    k = slot - 1
    out: dict[Word, LaurentFraction] = {}
    for word, coeff in v.coeffs.items():
        for (a, b), value in op.action((word[k], word[k + 1])):
            target = word[:k] + (a, b) + word[k + 2 :]
            term = coeff * value
            out[target] = out[target] + term if target in out else term
    return TensorVector(v.r, out)


def pi_q_apply(h: HeckeElement, v: TensorVector, m: int, n: int) -> TensorVector:
    """The sign permutation action of H_r(q); T_w = g_i1 ... g_ik acts rightmost first."""
    if h.r != v.r:
        msg = f"Rank mismatch: Hecke element of rank {h.r} on tensor degree {v.r}"
        raise ValueError(msg)
    op = build_rmatrix(m, n)
    out = TensorVector(v.r)
    for perm, coeff in h.coeffs.items():
        term = v
        for slot in reversed(perm.reduced_word()):
            term = apply_generator(term, slot, op)
        out = out + term * coeff
    return out


def verify_representation(m: int, n: int, r: int = 3) -> bool:
    """pi_q(g_i)^2 = 1 + (q - q^-1) pi_q(g_i) and the braid relation on every basis word."""
    op = build_rmatrix(m, n)
    for word in words(m + n, r):
        v = TensorVector.basis(word)
        for slot in range(1, r):
            gv = apply_generator(v, slot, op)
            if apply_generator(gv, slot, op) != v + gv * C:
                return False
            if slot + 1 < r:
                lhs = apply_generator(
                    apply_generator(apply_generator(v, slot, op), slot + 1, op), slot, op
                )
                rhs = apply_generator(
                    apply_generator(apply_generator(v, slot + 1, op), slot, op),
                    slot + 1,
                    op,
                )
                if lhs != rhs:
                    return False
    return True


def weight_spaces(dim: int, r: int) -> dict[tuple[int, ...], list[Word]]:
    """Basis words grouped by content; pi_q preserves each group."""
    out: dict[tuple[int, ...], list[Word]] = defaultdict(list)
    for word in words(dim, r):
        out[tuple(sorted(word))].append(word)
    return dict(out)


def _independent(vectors: Sequence[TensorVector], basis: Sequence[Word]) -> list[int]:
    rows = [clear_denominators([v.coefficient(w) for w in basis]) for v in vectors]
    return pivot_rows_laurent(rows)


def _span_rank(vectors: Sequence[TensorVector], basis: Sequence[Word]) -> int:
    return rank_laurent([[v.coefficient(w) for w in basis] for v in vectors])


def _gamma_images(m: int, n: int, word: Word) -> list[TensorVector]:
    v = TensorVector.basis(word)
    return [pi_q_apply(g, v, m, n) for g in gamma_basis()]


def compute_I3(m: int, n: int) -> list[TensorVector]:
    """A basis of span{pi_q(Gamma) v} over Q(q), built one weight space at a time."""
    if m + n > 3:
        msg = f"I3 computation supports m + n <= 3, got {m + n}"
        raise ValueError(msg)
    out: list[TensorVector] = []
    for basis in weight_spaces(m + n, 3).values():
        images = [img for w in basis for img in _gamma_images(m, n, w)]
        images = [img for img in images if not img.is_zero()]
        out.extend(images[k] for k in _independent(images, basis))
    return out


def idempotent_image(m: int, n: int) -> list[TensorVector]:
    """pi_q(e(q)) applied to every basis word of V^{(x)3}."""
    e = eulerian_idempotent()
    return [pi_q_apply(e, TensorVector.basis(w), m, n) for w in words(m + n, 3)]


class _Bracketing:
    """q-superbrackets [[x, y]]_k = x (x) y - (-1)^(x'y') k y (x) x on letters 1..m+n."""

    def __init__(self, m: int):
        self.m = m

    def letter(self, k: int) -> tuple[TensorVector, int]:
        return TensorVector.basis((k,)), parity(k, self.m)

    def bracket(
        self,
        x: tuple[TensorVector, int],
        y: tuple[TensorVector, int],
        kappa: Scalar = 1,
    ) -> tuple[TensorVector, int]:
        (vx, px), (vy, py) = x, y
        sign = -1 if px and py else 1
        return vx.tensor(vy) - vy.tensor(vx) * (LaurentFraction.coerce(kappa) * sign), (
            px + py
        ) % 2


def _cross_sign(low: int, mid: int, high: int, m: int) -> int:
    """(-1)^(mid' (low' + high')) for three distinct letters low < mid < high."""
    odd = parity(mid, m) and (parity(low, m) + parity(high, m)) % 2
    return -1 if odd else 1


def gamma_element(tableau: SuperTableau, m: int) -> TensorVector:
    """The spanning element of I_3(V) labelled by a (2,1) tableau [a b / c]."""
    (a_, b_), (c_,) = tableau.rows
    a, b, c = (letter.position(m) for letter in (a_, b_, c_))
    br = _Bracketing(m)
    la, lb, lc = br.letter(a), br.letter(b), br.letter(c)
    qinv2 = LaurentPoly.q(-2)
    if a < c < b:
        first = br.bracket(lc, br.bracket(lb, la), qinv2)[0]
        second = br.bracket(lb, br.bracket(la, lc))[0]
        return first - second * (QINV * _cross_sign(a, c, b, m))
    if a < b < c:
        first = br.bracket(br.bracket(lc, la), lb, qinv2)[0]
        second = br.bracket(br.bracket(lb, lc), la)[0]
        return first - second * (QINV * _cross_sign(a, b, c, m))
    if a < b == c:
        if b_.odd:
            return br.bracket(br.bracket(la, lb), lb, QINV)[0]
        return br.bracket(lb, br.bracket(la, lb), QINV)[0]
    if a == b < c:
        return br.bracket(br.bracket(la, lc), la, QINV)[0]
    if a == c < b:
        return br.bracket(la, br.bracket(la, lb), QINV)[0]
    msg = f"{tableau} is not a semistandard tableau of shape (2,1)"
    raise ValueError(msg)


def gamma_elements(m: int, n: int) -> list[TensorVector]:
    """One spanning element per (m,n)-semistandard tableau of shape (2,1)."""
    return [gamma_element(t, m) for t in enumerate_ssyt(SHAPE_21, m, n)]


def local_basis_limit(gammas: Iterable[TensorVector]) -> list[TensorVector]:
    """Evaluate every coefficient at q^-1 = 0."""
    out = []
    for v in gammas:
        limit = {}
        for word, value in v.coeffs.items():
            x = value.limit_q_inverse_zero()
            limit[word] = LaurentFraction(
                LaurentPoly.constant(x.numerator), LaurentPoly.constant(x.denominator)
            )
        out.append(TensorVector(v.r, limit))
    return out


def knuth_binomials(m: int, n: int) -> list[dict[Word, int]]:
    """xzy - s zxy and yxz - s yzx over the degree-3 super-Knuth relations, s = (-1)^(x'z')."""
    out: list[dict[Word, int]] = []
    dim = m + n
    for x, y, z in itertools.product(range(1, dim + 1), repeat=3):
        py = parity(y, m)
        s = -1 if parity(x, m) and parity(z, m) else 1
        if (x < y <= z) if py else (x <= y < z):
            out.append({(x, z, y): 1, (z, x, y): -s})
        if (x <= y < z) if py else (x < y <= z):
            out.append({(y, x, z): 1, (y, z, x): -s})
    return out


def _as_rational(v: TensorVector) -> dict[Word, Fraction]:
    return {w: c.evaluate(1) for w, c in v.coeffs.items()}


def _matches_up_to_sign(a: Mapping[Word, Fraction], b: Mapping[Word, int]) -> bool:
    if set(a) != set(b) or not a:
        return False
    return all(a[w] == b[w] for w in a) or all(a[w] == -b[w] for w in a)


def matches_binomials(
    limits: Sequence[TensorVector], binomials: Sequence[Mapping[Word, int]]
) -> bool:
    """True if the limits and the binomials agree one to one, each up to a sign."""
    if len(limits) != len(binomials):
        return False
    unused = list(binomials)
    for v in limits:
        values = _as_rational(v)
        hit = next((k for k, b in enumerate(unused) if _matches_up_to_sign(values, b)), None)
        if hit is None:
            return False
        unused.pop(hit)
    return True


def double_brackets(m: int, n: int) -> list[dict[Word, int]]:
    """[[[[a_i, a_j]], a_k]] at q = 1 for all letters i, j, k."""
    out = []
    for i, j, k in itertools.product(range(1, m + n + 1), repeat=3):
        pij = 1 if parity(i, m) and parity(j, m) else 0
        pk = parity(k, m)
        s1 = -1 if pij else 1
        s2 = -1 if ((parity(i, m) + parity(j, m)) % 2) and pk else 1
        inner = {(i, j): 1}
        inner[(j, i)] = inner.get((j, i), 0) - s1
        vec: dict[Word, int] = defaultdict(int)
        for pair, coeff in inner.items():
            vec[(*pair, k)] += coeff
            vec[(k, *pair)] -= s2 * coeff
        out.append({w: c for w, c in vec.items() if c})
    return out


def classical_limit_check(m: int, n: int) -> bool:
    """At q = 1 the I_3 spanning set and the double brackets span the same space."""
    basis = words(m + n, 3)
    gammas = [
        img for w in basis for img in _gamma_images(m, n, w) if not img.is_zero()
    ]
    left = [[_as_rational(v).get(w, Fraction(0)) for w in basis] for v in gammas]
    right = [[b.get(w, 0) for w in basis] for b in double_brackets(m, n)]
    if not left and not right:
        return True
    ncols = len(basis)
    rank_l = rank_rational(as_object_matrix(left, ncols)) if left else 0
    rank_r = rank_rational(as_object_matrix(right, ncols)) if right else 0
    return rank_l == rank_r == rank_rational(as_object_matrix(left + right, ncols))


def verify_I3(m: int, n: int) -> RMatrixReport:
    """Dimension, span equality, idempotent image, local basis and classical limit of I_3(V)."""
    expected = count_ssyt(SHAPE_21, m, n)
    basis = compute_I3(m, n)
    gammas = gamma_elements(m, n)
    image = [v for v in idempotent_image(m, n) if not v.is_zero()]
    span_equal = True
    image_equal = True
    for words_in_space in weight_spaces(m + n, 3).values():
        inside = set(words_in_space)

        def restrict(vs: Sequence[TensorVector], inside: set[Word] = inside) -> list[TensorVector]:
            return [v for v in vs if set(v.coeffs) <= inside]

        b, g, e = restrict(basis), restrict(gammas), restrict(image)
        rank_b = _span_rank(b, words_in_space) if b else 0
        rank_g = _span_rank(g, words_in_space) if g else 0
        rank_e = _span_rank(e, words_in_space) if e else 0
        rank_bg = _span_rank(b + g, words_in_space) if b or g else 0
        rank_be = _span_rank(b + e, words_in_space) if b or e else 0
        span_equal &= rank_b == rank_g == rank_bg
        image_equal &= rank_b == rank_e == rank_be
    limits = local_basis_limit(gammas)
    checks = {
        "dimension": len(basis) == expected,
        "gamma_count": len(gammas) == expected,
        "gamma_span": span_equal,
        "idempotent_image": image_equal,
        "local_basis": matches_binomials(limits, knuth_binomials(m, n)),
        "classical_limit": classical_limit_check(m, n),
    }
    return RMatrixReport(
        m, n, checks, {"I3": len(basis), "ssyt": expected, "gammas": len(gammas)}
    )
