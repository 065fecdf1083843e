"""Reconstruct the six solution words of a scrambled board.

Per slot, the coloring induces constraints on the word that can sit there:
green squares fix letters, yellow squares ban a letter from that position
and demand its presence, gray squares exclude letters.  Candidate lists are
joined across the six slots under two global rules: crossing slots must
agree on their shared square, and the finished board must use exactly the
scrambled board's letters, multiplicities included.

Per-slot filtering is pruning only.  In the default ``strict`` mode the
authoritative acceptance test is recoloring: a candidate board is a
solution iff coloring the scrambled board against it reproduces the given
colors exactly.  The ``greens`` mode keeps only the green constraints and
skips the recoloring test; that looser join is the right tool for auditing
published puzzles whose yellow/gray marks follow house rules this package
does not emulate.  With no colors at all, the join runs on structure alone.

The search is deterministic: candidate lists are sorted, the next slot is
always the one with the fewest viable candidates (ties by slot id), and the
returned solutions are sorted by their concatenated words.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .board import (
    Color,
    ColorBoard,
    LetterBoard,
    SLOT_ORDER,
    SLOTS,
    Slot,
    parity,
    Parity,
)
from .coloring import color_board
from .words import WordList

__all__ = [
    "SlotConstraints",
    "GridSolution",
    "UniquenessReport",
    "slot_constraints",
    "candidate_words",
    "solve_grid",
    "uniqueness_report",
]

MAX_SOLUTIONS_DEFAULT = 8


@dataclass(frozen=True)
class SlotConstraints:
    """Color-derived constraints on one slot's word.

    ``fixed`` maps 1-based positions to letters (greens).  ``banned_at``
    maps positions to letters that cannot sit there (yellows).  ``required``
    letters must appear somewhere in the word; ``required_any`` letters must
    appear in this word or in the word crossing the yellow square they came
    from, which only the joined grid can check.  ``excluded`` letters cannot
    appear at all.  ``contradictions`` lists diagnostics for colorings that
    no word can satisfy.
    """

    slot: Slot
    fixed: dict[int, str] = field(default_factory=dict)
    banned_at: dict[int, frozenset[str]] = field(default_factory=dict)
    required: frozenset[str] = frozenset()
    required_any: frozenset[str] = frozenset()
    excluded: frozenset[str] = frozenset()
    contradictions: tuple[str, ...] = ()

    def admits(self, word: str) -> bool:
        if self.contradictions:
            return False
        for pos, letter in self.fixed.items():
            if word[pos - 1] != letter:
                return False
        for pos, letters in self.banned_at.items():
            if word[pos - 1] in letters:
                return False
        letters_present = set(word)
        if not self.required <= letters_present:
            return False
        if self.excluded & letters_present:
            return False
        return True


def slot_constraints(
    scrambled: LetterBoard, colors: ColorBoard, slot: Slot | str
) -> SlotConstraints:
    """Derive the constraints the coloring places on one slot."""
    if isinstance(slot, str):
        slot = SLOTS[slot]
    fixed: dict[int, str] = {}
    banned_at: dict[int, set[str]] = {}
    required: set[str] = set()
    required_any: set[str] = set()
    excluded: set[str] = set()
    for pos, square in enumerate(slot.squares, start=1):
        letter = scrambled[square]
        color = colors[square]
        if color is Color.GREEN:
            fixed[pos] = letter
        elif color is Color.YELLOW:
            banned_at.setdefault(pos, set()).add(letter)
            if parity(square) is Parity.EVEN:
                required.add(letter)
            else:
                required_any.add(letter)
        else:
            excluded.add(letter)

    contradictions = []
    for letter in sorted(required & excluded):
        contradictions.append(f"{slot.id}: letter {letter} is both required and excluded")
    for pos, letter in sorted(fixed.items()):
        if letter in excluded:
            contradictions.append(f"{slot.id}: fixed letter {letter} at {pos} is excluded")
        if letter in banned_at.get(pos, ()):
            contradictions.append(f"{slot.id}: fixed letter {letter} at {pos} is banned there")

    return SlotConstraints(
        slot=slot,
        fixed=fixed,
        banned_at={p: frozenset(v) for p, v in banned_at.items()},
        required=frozenset(required),
        required_any=frozenset(required_any),
        excluded=frozenset(excluded),
        contradictions=tuple(contradictions),
    )


def _greens_only(constraints: SlotConstraints) -> SlotConstraints:
    return SlotConstraints(slot=constraints.slot, fixed=dict(constraints.fixed))


def _free(slot: Slot) -> SlotConstraints:
    return SlotConstraints(slot=slot)


def candidate_words(word_list: WordList, constraints: SlotConstraints) -> list[str]:
    """Dictionary words admitted by per-slot constraints, sorted."""
    return [w for w in word_list.sorted_words() if constraints.admits(w)]


@dataclass(frozen=True)
class GridSolution:
    """A filled board and its six words in H1,H2,H3,V1,V2,V3 order."""

    board: LetterBoard
    words: tuple[str, str, str, str, str, str]

    def word(self, slot_id: str) -> str:
        return self.words[SLOT_ORDER.index(slot_id)]

    def words_by_slot(self) -> dict[str, str]:
        return dict(zip(SLOT_ORDER, self.words))

    @property
    def sort_key(self) -> str:
        return "".join(self.words)


def _board_from_assignment(placed: dict[int, str]) -> LetterBoard:
    return LetterBoard(tuple(placed[s] for s in range(1, 22)))


def solve_grid(
    scrambled: LetterBoard,
    colors: ColorBoard | None,
    word_list: WordList,
    max_solutions: int = MAX_SOLUTIONS_DEFAULT,
    *,
    mode: str = "strict",
    slot_order: tuple[str, ...] | None = None,
) -> list[GridSolution]:
    """All boards consistent with the coloring, up to ``max_solutions``.

    ``mode`` is ``"strict"`` (full constraints plus the authoritative
    recoloring test) or ``"greens"`` (green fixes and the letter multiset
    only).  ``slot_order`` overrides the fewest-candidates-first heuristic;
    the solution *set* does not depend on it.
    """
    if max_solutions < 1:
        raise ValueError("max_solutions must be positive")
    if mode not in ("strict", "greens"):
        raise ValueError(f"unknown mode {mode!r}")

    if colors is None:
        constraints = {sid: _free(SLOTS[sid]) for sid in SLOT_ORDER}
    elif mode == "greens":
        constraints = {
            sid: _greens_only(slot_constraints(scrambled, colors, sid)) for sid in SLOT_ORDER
        }
    else:
        constraints = {sid: slot_constraints(scrambled, colors, sid) for sid in SLOT_ORDER}

    candidates = {sid: candidate_words(word_list, constraints[sid]) for sid in SLOT_ORDER}
    target = Counter(scrambled.letters)

    placed: dict[int, str] = {}
    used: Counter = Counter()
    chosen: dict[str, str] = {}
    solutions: list[GridSolution] = []

    def viable(sid: str) -> list[str]:
        squares = SLOTS[sid].squares
        out = []
        for word in candidates[sid]:
            extra = Counter()
            ok = True
            for square, letter in zip(squares, word):
                have = placed.get(square)
                if have is not None:
                    if have != letter:
                        ok = False
                        break
                else:
                    extra[letter] += 1
                    if used[letter] + extra[letter] > target[letter]:
                        ok = False
                        break
            if ok:
                out.append(word)
        return out

    def place(sid: str, word: str) -> list[int]:
        touched = []
        for square, letter in zip(SLOTS[sid].squares, word):
            if square not in placed:
                placed[square] = letter
                used[letter] += 1
                touched.append(square)
        chosen[sid] = word
        return touched

    def unplace(sid: str, touched: list[int]) -> None:
        for square in touched:
            used[placed[square]] -= 1
            del placed[square]
        del chosen[sid]

    def accept() -> None:
        board = _board_from_assignment(placed)
        if mode == "strict" and colors is not None:
            if color_board(scrambled, board) != colors:
                return
        words = tuple(chosen[sid] for sid in SLOT_ORDER)
        solutions.append(GridSolution(board, words))

    def search(remaining: tuple[str, ...]) -> None:
        if len(solutions) >= max_solutions:
            return
        if not remaining:
            accept()
            return
        if slot_order is None:
            ranked = sorted(remaining, key=lambda sid: (len(viable(sid)), sid))
            sid = ranked[0]
        else:
            sid = remaining[0]
        rest = tuple(s for s in remaining if s != sid)
        for word in viable(sid):
            touched = place(sid, word)
            search(rest)
            unplace(sid, touched)
            if len(solutions) >= max_solutions:
                return

    order = tuple(slot_order) if slot_order is not None else SLOT_ORDER
    if sorted(order) != sorted(SLOT_ORDER):
        raise ValueError(f"slot_order must name all six slots, got {order}")
    search(order)
    solutions.sort(key=lambda s: s.sort_key)
    return solutions


@dataclass(frozen=True)
class UniquenessReport:
    """Solution count (capped at 2) with the witnesses found."""

    count: int
    solutions: tuple[GridSolution, ...]

    @property
    def unique(self) -> bool:
        return self.count == 1


def uniqueness_report(
    scrambled: LetterBoard,
    colors: ColorBoard | None,
    word_list: WordList,
    *,
    mode: str = "strict",
) -> UniquenessReport:
    """Does the puzzle admit exactly one solution?  A count of 2 means
    "at least two"."""
    found = solve_grid(scrambled, colors, word_list, max_solutions=2, mode=mode)
    return UniquenessReport(len(found), tuple(found))
