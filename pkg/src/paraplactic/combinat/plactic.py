import dataclasses
import itertools
import warnings
from collections import deque
from collections.abc import Sequence
from functools import lru_cache
from typing import Optional

from paraplactic.combinat.tableaux import (
    SignedLetter,
    SuperTableau,
    Word,
    alphabet,
    from_reading_word,
    row_reading_word,
)


class PlacticSignError(ArithmeticError):
    """A super-Knuth class contains a word with both signs."""


class PlacticUniquenessError(ArithmeticError):
    """A super-Knuth class does not contain exactly one tableau reading word."""


class WordParseError(ValueError):
    """A word could not be parsed or uses letters outside the alphabet."""


@dataclasses.dataclass(frozen=True)
class SignedWord:
    """A word in the signed alphabet together with a global sign."""

    letters: Word
    """The letters, left to right."""
    sign: int = 1
    """+1 or -1."""

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            msg = f"Word sign must be +1 or -1, got {self.sign}"
            raise ValueError(msg)
        object.__setattr__(self, "letters", tuple(self.letters))

    def __str__(self) -> str:
        body = ",".join(map(str, self.letters))
        return body if self.sign > 0 else f"-({body})"


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """Either zero or sign times a super tableau."""

    sign: int
    """+1, -1, or 0 for the zero element."""
    tableau: Optional[SuperTableau] = None
    """The tableau, None exactly for zero."""

    def __post_init__(self) -> None:
        if (self.sign == 0) != (self.tableau is None):
            msg = f"Inconsistent canonical form sign={self.sign}, tableau={self.tableau}"
            raise ValueError(msg)

    @property
    def is_zero(self) -> bool:
        return self.tableau is None

    def reading_word(self) -> SignedWord:
        if self.tableau is None:
            msg = "Zero has no reading word"
            raise ValueError(msg)
        return SignedWord(row_reading_word(self.tableau), self.sign)

    def to_json(self) -> dict[str, object]:
        if self.tableau is None:
            return {"zero": True}
        return {
            "sign": self.sign,
            "shape": self.tableau.shape.to_json(),
            "tableau": self.tableau.to_json(),
        }


ZERO_FORM = CanonicalForm(0, None)


def _relation_one(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> bool:
    """xzy = +-zxy."""
    if y.odd:
        return x < y <= z
    return x <= y < z


def _relation_two(x: SignedLetter, y: SignedLetter, z: SignedLetter) -> bool:
    """yxz = +-yzx."""
    if y.odd:
        return x <= y < z
    return x < y <= z


def _exchange_sign(x: SignedLetter, z: SignedLetter) -> int:
    return -1 if x.odd and z.odd else 1


def _moves(letters: Word) -> list[tuple[Word, int]]:
    out: list[tuple[Word, int]] = []
    for k in range(len(letters) - 2):
        a, b, c = letters[k : k + 3]
        head, tail = letters[:k], letters[k + 3 :]
        # xzy -> zxy and back: swap of the first two letters, y last
        for x, z in ((a, b), (b, a)):
            if _relation_one(x, c, z):
                out.append((head + (b, a, c) + tail, _exchange_sign(x, z)))
        # yxz -> yzx and back: swap of the last two letters, y first
        for x, z in ((b, c), (c, b)):
            if _relation_two(x, a, z):
                out.append((head + (a, c, b) + tail, _exchange_sign(x, z)))
    return out


def knuth_moves(word: SignedWord, m: int, n: int) -> list[SignedWord]:
    """All words one super-Knuth relation away from ``word``, with updated signs."""
    _check_letters(word.letters, m, n)
    seen: dict[Word, int] = {}
    for letters, sign in _moves(word.letters):
        seen.setdefault(letters, sign * word.sign)
    return [SignedWord(letters, sign) for letters, sign in seen.items()]


def _check_letters(letters: Sequence[SignedLetter], m: int, n: int) -> None:
    for letter in letters:
        if not letter.fits(m, n):
            msg = f"Letter {letter} is outside the alphabet with m={m}, n={n}"
            raise WordParseError(msg)


@lru_cache(maxsize=65536)
def _closure(letters: Word) -> dict[Word, int]:
    signs: dict[Word, int] = {letters: 1}
    queue = deque([letters])
    while queue:
        current = queue.popleft()
        for nxt, step in _moves(current):
            sign = signs[current] * step
            known = signs.get(nxt)
            if known is None:
                signs[nxt] = sign
                queue.append(nxt)
            elif known != sign:
                msg = f"Word {','.join(map(str, nxt))} is equivalent to its own negative"
                raise PlacticSignError(msg)
    return signs


def equivalence_class(word: SignedWord, m: int, n: int) -> dict[Word, int]:
    """The super-Knuth class of ``word`` as a map from member to sign."""
    _check_letters(word.letters, m, n)
    return {w: s * word.sign for w, s in _closure(word.letters).items()}


def schensted_insert(letters: Sequence[SignedLetter]) -> SuperTableau:
    """Classical row insertion; correct for words without odd letters."""
    rows: list[list[SignedLetter]] = []
    for letter in letters:
        current = letter
        for row in rows:
            pos = next((k for k, v in enumerate(row) if current < v), None)
            if pos is None:
                row.append(current)
                break
            row[pos], current = current, row[pos]
        else:
            rows.append([current])
    return SuperTableau(tuple(tuple(row) for row in rows))


def canonicalize(
    word: SignedWord, m: int, n: int, *, fast: bool = False
) -> CanonicalForm:
    """The unique sign * tableau equivalent to ``word``.

    The breadth-first closure under the super-Knuth relations is the
    reference; ``fast`` uses row insertion, which only applies without odd
    letters.
    """
    _check_letters(word.letters, m, n)
    if fast:
        if not any(letter.odd for letter in word.letters):
            return CanonicalForm(word.sign, schensted_insert(word.letters))
        msg = "Row insertion does not apply to words with odd letters, using the closure"
        warnings.warn(msg, UserWarning, stacklevel=2)
    members = equivalence_class(word, m, n)
    found = [
        (tableau, sign)
        for w, sign in members.items()
        if (tableau := from_reading_word(w, m, n)) is not None
    ]
    if len(found) != 1:
        msg = (
            f"Class of {word} contains {len(found)} tableau reading words,"
            " expected exactly one"
        )
        raise PlacticUniquenessError(msg)
    tableau, sign = found[0]
    return CanonicalForm(sign, tableau)


def product(a: CanonicalForm, b: CanonicalForm, m: int, n: int) -> CanonicalForm:
    """Product in the plactic monoid: juxtapose reading words and canonicalize."""
    if a.is_zero or b.is_zero:
        return ZERO_FORM
    left, right = a.reading_word(), b.reading_word()
    return canonicalize(
        SignedWord(left.letters + right.letters, left.sign * right.sign), m, n
    )


def p_restrict(form: CanonicalForm, p: int) -> CanonicalForm:
    """Zero if the first row is longer than p."""
    if p < 1:
        msg = f"p must be at least 1, got {p}"
        raise ValueError(msg)
    if form.tableau is None or form.tableau.shape.part(0) <= p:
        return form
    return ZERO_FORM


@dataclasses.dataclass(frozen=True)
class KnuthClass:
    """An equivalence class of words together with its tableau."""

    tableau: SuperTableau
    """The unique tableau whose reading word lies in the class."""
    members: dict[Word, int] = dataclasses.field(hash=False, compare=False)
    """Each word of the class with its sign relative to the reading word."""


def words(m: int, n: int, length: int) -> list[Word]:
    """All words of the given length, in lexicographic order."""
    return list(itertools.product(alphabet(m, n), repeat=length))


def word_classes(m: int, n: int, length: int) -> list[KnuthClass]:
    """All super-Knuth classes of words of a given length.

    Raises PlacticSignError or PlacticUniquenessError if a class is
    ill-defined.
    """
    seen: set[Word] = set()
    out: list[KnuthClass] = []
    for w in words(m, n, length):
        if w in seen:
            continue
        form = canonicalize(SignedWord(w), m, n)
        if form.tableau is None:
            msg = f"Word {w} canonicalized to zero"
            raise PlacticUniquenessError(msg)
        closure = _closure(w)
        base = closure[row_reading_word(form.tableau)]
        seen.update(closure)
        out.append(
            KnuthClass(form.tableau, {u: s * base for u, s in closure.items()})
        )
    return out


def parse_word(text: str, m: int, n: int) -> SignedWord:
    """Parse comma-separated letters such as ``1,2b,2b``."""
    text = text.strip()
    if not text:
        return SignedWord(())
    try:
        letters = tuple(SignedLetter.parse(tok) for tok in text.split(","))
    except ValueError as err:
        msg = f"Cannot parse word {text!r}: {err}"
        raise WordParseError(msg) from None
    _check_letters(letters, m, n)
    return SignedWord(letters)
