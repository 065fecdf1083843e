"""Geometry and serialization of the 21-square waffle board.

The board is a 5x5 grid with four holes at rows/columns 2 and 4.  The 21
remaining cells are numbered 1..21 row-major, top-down.  Six word slots of
five squares each cross it: three horizontal (rows 1, 3, 5, read left to
right) and three vertical (columns 1, 3, 5, read top to bottom).

A square sitting on an odd row *and* an odd column belongs to two slots
(9 such squares); every other square belongs to exactly one (12 squares).

Text form: five lines of five characters, ``.`` exactly at the four holes.
Letter grids use ``A``-``Z``; color grids use ``G`` (green), ``Y``
(yellow), ``X`` (gray).  A puzzle file stacks up to three such grids
separated by single blank lines: scrambled letters (required), colors
(optional), solution letters (optional).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

__all__ = [
    "N_SQUARES",
    "SQUARES",
    "Hole",
    "Slot",
    "SLOTS",
    "SLOT_ORDER",
    "Parity",
    "Color",
    "LetterBoard",
    "ColorBoard",
    "Puzzle",
    "BoardFormatError",
    "square_cell",
    "cell_square",
    "parity",
    "incident_slots",
    "parse_board",
    "render_board",
    "parse_colors",
    "render_colors",
    "parse_puzzle",
    "render_puzzle",
]

N_SQUARES = 21
SQUARES = tuple(range(1, N_SQUARES + 1))

_HOLE_CELLS = frozenset({(2, 2), (2, 4), (4, 2), (4, 4)})


class Hole:
    """Marker returned by :func:`cell_square` for the four hole cells."""


def _build_cell_maps():
    cell_of = {}
    square_of = {}
    square = 0
    for row in range(1, 6):
        for col in range(1, 6):
            if (row, col) in _HOLE_CELLS:
                continue
            square += 1
            cell_of[square] = (row, col)
            square_of[(row, col)] = square
    return cell_of, square_of


_CELL_OF, _SQUARE_OF = _build_cell_maps()


@dataclass(frozen=True)
class Slot:
    """One of the six word slots; ``squares`` are in reading order."""

    id: str
    squares: tuple[int, int, int, int, int]

    @property
    def horizontal(self) -> bool:
        return self.id.startswith("H")

    def position_of(self, square: int) -> int:
        """1-based position of ``square`` within this slot."""
        return self.squares.index(square) + 1


SLOTS: dict[str, Slot] = {
    "H1": Slot("H1", (1, 2, 3, 4, 5)),
    "H2": Slot("H2", (9, 10, 11, 12, 13)),
    "H3": Slot("H3", (17, 18, 19, 20, 21)),
    "V1": Slot("V1", (1, 6, 9, 14, 17)),
    "V2": Slot("V2", (3, 7, 11, 15, 19)),
    "V3": Slot("V3", (5, 8, 13, 16, 21)),
}
SLOT_ORDER = ("H1", "H2", "H3", "V1", "V2", "V3")


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"


def square_cell(square: int) -> tuple[int, int]:
    """(row, col) of a square, both in 1..5."""
    _check_square(square)
    return _CELL_OF[square]


def cell_square(row: int, col: int):
    """Square at (row, col); the :class:`Hole` marker at the four holes."""
    if not (1 <= row <= 5 and 1 <= col <= 5):
        raise ValueError(f"cell ({row},{col}) outside the 5x5 grid")
    if (row, col) in _HOLE_CELLS:
        return Hole
    return _SQUARE_OF[(row, col)]


def parity(square: int) -> Parity:
    """Odd when both coordinates are odd (the nine two-slot squares)."""
    row, col = square_cell(square)
    return Parity.ODD if row % 2 == 1 and col % 2 == 1 else Parity.EVEN


def incident_slots(square: int) -> tuple[Slot, ...]:
    """Slots through a square: two for odd squares, one for even ones."""
    _check_square(square)
    return _INCIDENT[square]


_INCIDENT: dict[int, tuple[Slot, ...]] = {
    s: tuple(SLOTS[sid] for sid in SLOT_ORDER if s in SLOTS[sid].squares)
    for s in SQUARES
}


def _check_square(square: int) -> None:
    if not 1 <= square <= N_SQUARES:
        raise ValueError(f"square {square} outside 1..{N_SQUARES}")


class BoardFormatError(ValueError):
    """Raised for malformed board or puzzle text, with a position."""


@dataclass(frozen=True)
class LetterBoard:
    """Uppercase letters on the 21 squares; index with a square number."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if len(self.letters) != N_SQUARES:
            raise ValueError(f"need {N_SQUARES} letters, got {len(self.letters)}")
        for square, ch in enumerate(self.letters, start=1):
            if len(ch) != 1 or not "A" <= ch <= "Z":
                raise ValueError(f"square {square}: {ch!r} is not an uppercase letter")

    def __getitem__(self, square: int) -> str:
        _check_square(square)
        return self.letters[square - 1]

    def word_at(self, slot: Slot | str) -> str:
        if isinstance(slot, str):
            slot = SLOTS[slot]
        return "".join(self[s] for s in slot.squares)

    def words(self) -> dict[str, str]:
        return {sid: self.word_at(sid) for sid in SLOT_ORDER}

    def letter_counts(self) -> Counter:
        return Counter(self.letters)

    def with_swap(self, a: int, b: int) -> "LetterBoard":
        _check_square(a)
        _check_square(b)
        letters = list(self.letters)
        letters[a - 1], letters[b - 1] = letters[b - 1], letters[a - 1]
        return LetterBoard(tuple(letters))


class Color(enum.Enum):
    GREEN = "G"
    YELLOW = "Y"
    GRAY = "X"


@dataclass(frozen=True)
class ColorBoard:
    """Green/Yellow/Gray marks on the 21 squares."""

    colors: tuple[Color, ...]

    def __post_init__(self):
        if len(self.colors) != N_SQUARES:
            raise ValueError(f"need {N_SQUARES} colors, got {len(self.colors)}")

    def __getitem__(self, square: int) -> Color:
        _check_square(square)
        return self.colors[square - 1]

    def squares_with(self, color: Color) -> tuple[int, ...]:
        return tuple(s for s in SQUARES if self[s] is color)


def _parse_grid(text: str, alphabet: str, what: str) -> tuple[str, ...]:
    lines = text.strip("\n").split("\n")
    if len(lines) != 5:
        raise BoardFormatError(f"{what}: expected 5 lines, got {len(lines)}")
    symbols = []
    for row, line in enumerate(lines, start=1):
        line = line.strip()
        if len(line) != 5:
            raise BoardFormatError(f"{what}: line {row} has {len(line)} characters, expected 5")
        for col, ch in enumerate(line, start=1):
            upper = ch.upper()
            if (row, col) in _HOLE_CELLS:
                if ch != ".":
                    raise BoardFormatError(
                        f"{what}: cell ({row},{col}) is a hole and must be '.', got {ch!r}"
                    )
                continue
            if ch == ".":
                raise BoardFormatError(f"{what}: cell ({row},{col}) is a square, not a hole")
            if upper not in alphabet:
                raise BoardFormatError(f"{what}: cell ({row},{col}) has invalid symbol {ch!r}")
            symbols.append(upper)
    return tuple(symbols)


_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_COLOR_SYMBOLS = "GYX"


def parse_board(text: str) -> LetterBoard:
    """Parse a 5x5 letter grid (case-insensitive, ``.`` at the holes)."""
    return LetterBoard(_parse_grid(text, _LETTERS, "letter grid"))


def parse_colors(text: str) -> ColorBoard:
    """Parse a 5x5 color grid over ``G``/``Y``/``X``."""
    symbols = _parse_grid(text, _COLOR_SYMBOLS, "color grid")
    return ColorBoard(tuple(Color(ch) for ch in symbols))


def _render_grid(symbol_of_square) -> str:
    lines = []
    for row in range(1, 6):
        line = []
        for col in range(1, 6):
            if (row, col) in _HOLE_CELLS:
                line.append(".")
            else:
                line.append(symbol_of_square(_SQUARE_OF[(row, col)]))
        lines.append("".join(line))
    return "\n".join(lines) + "\n"


def render_board(board: LetterBoard) -> str:
    return _render_grid(lambda s: board[s])


def render_colors(colors: ColorBoard) -> str:
    return _render_grid(lambda s: colors[s].value)


@dataclass(frozen=True)
class Puzzle:
    """A scrambled board plus optional coloring and known solution."""

    scrambled: LetterBoard
    colors: ColorBoard | None = None
    solution: LetterBoard | None = None


def parse_puzzle(text: str) -> Puzzle:
    """Parse a puzzle file of 1..3 blank-line-separated grids.

    With two grids the second is read as colors when it uses only the color
    symbols, as a solution otherwise.
    """
    stanzas = [s for s in text.replace("\r\n", "\n").split("\n\n") if s.strip()]
    if not stanzas:
        raise BoardFormatError("empty puzzle file")
    if len(stanzas) > 3:
        raise BoardFormatError(f"puzzle file has {len(stanzas)} grids, at most 3 allowed")
    scrambled = parse_board(stanzas[0])
    colors = None
    solution = None
    rest = stanzas[1:]
    if len(rest) == 2:
        colors = parse_colors(rest[0])
        solution = parse_board(rest[1])
    elif len(rest) == 1:
        body = set("".join(rest[0].split()))
        if body <= set(_COLOR_SYMBOLS + ".gyx"):
            colors = parse_colors(rest[0])
        else:
            solution = parse_board(rest[0])
    return Puzzle(scrambled, colors, solution)


def render_puzzle(puzzle: Puzzle) -> str:
    parts = [render_board(puzzle.scrambled)]
    if puzzle.colors is not None:
        parts.append(render_colors(puzzle.colors))
    if puzzle.solution is not None:
        parts.append(render_board(puzzle.solution))
    return "\n".join(parts)
