import dataclasses
import functools
from collections.abc import Iterator, Sequence
from typing import Optional

from paraplactic.combinat.partitions import EMPTY, Partition, in_hook


@functools.total_ordering
@dataclasses.dataclass(frozen=True)
class SignedLetter:
    """A letter of the signed alphabet 1 < ... < m < 1b < ... < nb."""

    index: int
    """1-based index within its parity class."""
    odd: bool = False
    """True for the odd (barred) letters."""

    def __post_init__(self) -> None:
        if self.index < 1:
            msg = f"Letter index must be positive, got {self.index}"
            raise ValueError(msg)

    @classmethod
    def parse(cls, token: str) -> "SignedLetter":
        """Parse ``3`` (even) or ``3b`` (odd)."""
        token = token.strip()
        odd = token.endswith("b")
        body = token[:-1] if odd else token
        if not body.isdigit():
            msg = f"Cannot parse letter {token!r}"
            raise ValueError(msg)
        return cls(int(body), odd)

    @classmethod
    def from_position(cls, position: int, m: int) -> "SignedLetter":
        """Inverse of ``position``: 1..m are even, m+1.. are odd."""
        if position <= m:
            return cls(position, False)
        return cls(position - m, True)

    @property
    def parity(self) -> int:
        return 1 if self.odd else 0

    def position(self, m: int) -> int:
        """1-based place in the combined alphabet of m even letters then odd ones."""
        return m + self.index if self.odd else self.index

    def fits(self, m: int, n: int) -> bool:
        return self.index <= (n if self.odd else m)

    def _key(self) -> tuple[bool, int]:
        return (self.odd, self.index)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, SignedLetter):
            return NotImplemented
        return self._key() < other._key()

    def to_json(self) -> dict[str, object]:
        return {"i": self.index, "bar": self.odd}

    def __str__(self) -> str:
        return f"{self.index}b" if self.odd else str(self.index)


def alphabet(m: int, n: int) -> list[SignedLetter]:
    """The ordered signed alphabet with m even and n odd letters."""
    return [SignedLetter(i, False) for i in range(1, m + 1)] + [
        SignedLetter(i, True) for i in range(1, n + 1)
    ]


def row_step_ok(left: SignedLetter, right: SignedLetter) -> bool:
    """Row rule: weakly increasing, repeats allowed only for even letters."""
    return left < right or (left == right and not left.odd)


def column_step_ok(above: SignedLetter, below: SignedLetter) -> bool:
    """Column rule: weakly increasing, repeats allowed only for odd letters."""
    return above < below or (above == below and above.odd)


Word = tuple[SignedLetter, ...]


@dataclasses.dataclass(frozen=True)
class SuperTableau:
    """A filling of a Young diagram by signed letters, rows listed top first."""

    rows: tuple[tuple[SignedLetter, ...], ...] = ()
    """Entries row by row."""

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        if any(not row for row in rows):
            msg = "Tableau rows must be nonempty"
            raise ValueError(msg)
        object.__setattr__(self, "rows", rows)
        # validates the row lengths
        Partition(tuple(len(row) for row in rows))

    @classmethod
    def parse(cls, text: str) -> "SuperTableau":
        """Parse rows separated by ``/`` with comma-separated letters, e.g. ``1,3/2``."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(
            tuple(
                tuple(SignedLetter.parse(tok) for tok in row.split(","))
                for row in text.split("/")
            )
        )

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def to_json(self) -> list[list[dict[str, object]]]:
        return [[letter.to_json() for letter in row] for row in self.rows]

    def __str__(self) -> str:
        return "/".join(",".join(map(str, row)) for row in self.rows)


def is_valid(tableau: SuperTableau, m: int, n: int) -> bool:
    """True if the filling is an (m,n)-semistandard super tableau."""
    rows = tableau.rows
    for i, row in enumerate(rows):
        for j, letter in enumerate(row):
            if not letter.fits(m, n):
                return False
            if j and not row_step_ok(row[j - 1], letter):
                return False
            if i and not column_step_ok(rows[i - 1][j], letter):
                return False
    return True


def _fillings(
    shape: Partition, inner: Partition, letters: Sequence[SignedLetter]
) -> Iterator[list[list[Optional[SignedLetter]]]]:
    """Backtracking fill of the skew diagram shape/inner in row-major order.

    Cells of ``inner`` hold None. The yielded grid is reused between
    iterations.
    """
    grid: list[list[Optional[SignedLetter]]] = [[None] * part for part in shape.parts]
    cells = [(i, j) for i, j in shape.cells() if j >= inner.part(i)]

    def fill(k: int) -> Iterator[list[list[Optional[SignedLetter]]]]:
        if k == len(cells):
            yield grid
            return
        i, j = cells[k]
        left = grid[i][j - 1] if j else None
        above = grid[i - 1][j] if i else None
        for letter in letters:
            if left is not None and not row_step_ok(left, letter):
                continue
            if above is not None and not column_step_ok(above, letter):
                continue
            grid[i][j] = letter
            yield from fill(k + 1)
        grid[i][j] = None

    yield from fill(0)


def enumerate_ssyt(shape: Partition, m: int, n: int) -> list[SuperTableau]:
    """All (m,n)-semistandard super tableaux of the given shape.

    Output order follows the letter order cell by cell in row-major order.
    """
    if not in_hook(shape, m, n):
        return []
    return [
        SuperTableau(tuple(tuple(row) for row in grid))  # type: ignore[misc]
        for grid in _fillings(shape, EMPTY, alphabet(m, n))
    ]


def count_ssyt(shape: Partition, m: int, n: int) -> int:
    if not in_hook(shape, m, n):
        return 0
    return sum(1 for _ in _fillings(shape, EMPTY, alphabet(m, n)))


def _grid_weight(
    grid: Sequence[Sequence[Optional[SignedLetter]]], m: int, n: int
) -> tuple[int, ...]:
    counts = [0] * (m + n)
    for row in grid:
        for letter in row:
            if letter is not None:
                counts[letter.position(m) - 1] += 1
    return tuple(counts)


def ssyt_weights(shape: Partition, m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Weights of all (m,n)-SSYT of the given shape, without building tableaux."""
    if not in_hook(shape, m, n):
        return
    for grid in _fillings(shape, EMPTY, alphabet(m, n)):
        yield _grid_weight(grid, m, n)


def skew_ssyt_weights(
    shape: Partition, inner: Partition, m: int, n: int
) -> Iterator[tuple[int, ...]]:
    """Weights of the (m,n)-SSYT of skew shape shape/inner."""
    if not shape.contains(inner):
        msg = f"{inner} is not contained in {shape}"
        raise ValueError(msg)
    for grid in _fillings(shape, inner, alphabet(m, n)):
        yield _grid_weight(grid, m, n)


def weight(tableau: SuperTableau, m: int, n: int) -> tuple[int, ...]:
    """Occurrences of each letter, in alphabet order 1..m then 1b..nb."""
    return _grid_weight(tableau.rows, m, n)


def row_reading_word(tableau: SuperTableau) -> Word:
    """Rows read left to right, bottom row first."""
    return tuple(letter for row in reversed(tableau.rows) for letter in row)


def from_reading_word(word: Sequence[SignedLetter], m: int, n: int) -> Optional[SuperTableau]:
    """The tableau whose row reading word is ``word``, if there is one.

    A new row starts wherever the row rule breaks; the pieces, read in
    reverse, must form a valid tableau.
    """
    if not word:
        return SuperTableau(())
    pieces: list[list[SignedLetter]] = [[word[0]]]
    for letter in word[1:]:
        if row_step_ok(pieces[-1][-1], letter):
            pieces[-1].append(letter)
        else:
            pieces.append([letter])
    lengths = [len(piece) for piece in reversed(pieces)]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return None
    tableau = SuperTableau(tuple(tuple(piece) for piece in reversed(pieces)))
    return tableau if is_valid(tableau, m, n) else None


def is_reading_word(word: Sequence[SignedLetter], m: int, n: int) -> bool:
    return from_reading_word(word, m, n) is not None
