"""Construct fresh puzzles that are honest ten-swap games.

Generation is rejection sampling: fill a six-word grid from the dictionary,
scramble it with a random permutation built to have exactly eleven cycles
(so ten swaps solve it, and no fewer), then keep the result only if the
realized green count lands in the configured range, the cycle-maximizing
unscrambler confirms ten swaps are really needed (repeated letters can
admit a shorter solve), the solution is unique under the generating
dictionary, and the difficulty heuristic does not call it Hard.

All randomness flows from one ``random.Random(seed)`` (Mersenne Twister),
consumed sequentially, so a seed reproduces its puzzle byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .board import LetterBoard, Puzzle, SLOTS, SLOT_ORDER, SQUARES
from .coloring import color_board, color_counts
from .difficulty import analyze
from .perms import Permutation
from .solver import GridSolution, uniqueness_report
from .unscramble import best_unscrambling
from .words import WordList, default_word_list, filter_swappable

__all__ = [
    "GeneratorConfig",
    "GenerationError",
    "CORNERS_AND_CENTER",
    "generate_solution_grid",
    "scramble_solution",
    "generate_puzzle",
]

CORNERS_AND_CENTER = (1, 5, 11, 17, 21)

_FILL_ORDER = ("H1", "V1", "V2", "V3", "H2", "H3")


class GenerationError(RuntimeError):
    """Generation gave up; ``stats`` maps rejection cause to count."""

    def __init__(self, message: str, stats: dict[str, int] | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    target_ng: tuple[int, int] = (5, 8)
    policy: str = "corners"
    max_retries: int = 200
    filter_swappable: bool = True
    word_list: WordList | None = field(default=None, compare=False)

    def __post_init__(self):
        lo, hi = self.target_ng
        if not (1 <= lo <= hi <= 10):
            raise ValueError(
                f"target green range {self.target_ng} must sit inside 1..10; "
                "an eleven-cycle scramble fixes between 1 and 10 squares"
            )
        if self.policy not in ("corners", "free"):
            raise ValueError(f"policy must be 'corners' or 'free', got {self.policy!r}")
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive")


def generate_solution_grid(word_list: WordList, rng: random.Random) -> GridSolution:
    """Fill the six slots with dictionary words agreeing at intersections.

    Backtracking over all fillings, candidate order shuffled by ``rng``; a
    dictionary admitting no filling raises :class:`GenerationError`.
    """
    placed: dict[int, str] = {}
    chosen: dict[str, str] = {}
    nodes = 0

    def fits(slot_id: str, word: str) -> bool:
        return all(
            placed.get(sq, letter) == letter for sq, letter in zip(SLOTS[slot_id].squares, word)
        )

    def fill(index: int) -> bool:
        nonlocal nodes
        if index == len(_FILL_ORDER):
            return True
        slot_id = _FILL_ORDER[index]
        candidates = [w for w in word_list.sorted_words() if fits(slot_id, w)]
        rng.shuffle(candidates)
        for word in candidates:
            nodes += 1
            touched = []
            for sq, letter in zip(SLOTS[slot_id].squares, word):
                if sq not in placed:
                    placed[sq] = letter
                    touched.append(sq)
            chosen[slot_id] = word
            if fill(index + 1):
                return True
            del chosen[slot_id]
            for sq in touched:
                del placed[sq]
        return False

    if not fill(0):
        raise GenerationError(
            f"no grid can be filled from {len(word_list)} words", {"fill_nodes": nodes}
        )
    board = LetterBoard(tuple(placed[s] for s in SQUARES))
    return GridSolution(board, tuple(chosen[sid] for sid in SLOT_ORDER))


def _cycle_partitions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Partitions of ``total`` into exactly ``parts`` parts, each >= 2,
    descending within each partition."""

    def rec(remaining: int, count: int, largest: int):
        if count == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(largest, remaining - 2 * (count - 1)), 1, -1):
            for rest in rec(remaining - first, count - 1, first):
                yield (first, *rest)

    return list(rec(total, parts, total))


def scramble_solution(
    solution: LetterBoard, cfg: GeneratorConfig, rng: random.Random
) -> tuple[LetterBoard, Permutation]:
    """Scramble a solved board with a permutation of exactly 11 cycles.

    The fixed points follow the policy: the corners-and-center squares, or
    a free random choice sized from the target green range.  Every other
    square sits on a cycle of length at least 2, so the scramble moves it.
    """
    if cfg.policy == "corners":
        fixed = list(CORNERS_AND_CENTER)
    else:
        count = rng.randint(*cfg.target_ng)
        fixed = sorted(rng.sample(SQUARES, count))
    movable = [s for s in SQUARES if s not in fixed]
    cycles_needed = 11 - len(fixed)
    shapes = _cycle_partitions(len(movable), cycles_needed)
    shape = shapes[rng.randrange(len(shapes))]
    order = rng.sample(movable, len(movable))
    cycles = []
    at = 0
    for size in shape:
        cycles.append(tuple(order[at : at + size]))
        at += size
    g = Permutation.from_cycles(21, cycles)
    scrambled = LetterBoard(tuple(solution[g(s)] for s in SQUARES))
    return scrambled, g


def generate_puzzle(cfg: GeneratorConfig) -> Puzzle:
    """A fresh puzzle meeting every gate, or :class:`GenerationError` with
    per-cause rejection counts."""
    word_list = cfg.word_list if cfg.word_list is not None else default_word_list()
    if cfg.filter_swappable:
        word_list = filter_swappable(word_list)
    rng = random.Random(cfg.seed)
    rejections: dict[str, int] = {}

    def reject(cause: str) -> None:
        rejections[cause] = rejections.get(cause, 0) + 1

    lo, hi = cfg.target_ng
    for _ in range(cfg.max_retries):
        grid = generate_solution_grid(word_list, rng)
        scrambled, _g = scramble_solution(grid.board, cfg, rng)
        colors = color_board(scrambled, grid.board)
        realized = color_counts(colors).green
        if not lo <= realized <= hi:
            reject("ng_out_of_range")
            continue
        unscrambling = best_unscrambling(scrambled, grid.board)
        if not unscrambling.perfect:
            reject("scramble_degenerate")
            continue
        if not uniqueness_report(scrambled, colors, word_list).unique:
            reject("non_unique")
            continue
        puzzle = Puzzle(scrambled, colors, grid.board)
        if analyze(puzzle).classification == "Hard":
            reject("classified_hard")
            continue
        return puzzle
    raise GenerationError(
        f"no acceptable puzzle in {cfg.max_retries} attempts (seed {cfg.seed})", rejections
    )
