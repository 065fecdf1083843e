"""Why a given puzzle is easy or hard, in numbers.

The report gathers the color counts, the number of letter-consistent square
assignments on the non-green squares (the "how many ways could the repeats
be matched up" explosion), how many of those assignments are perfect, the
solution count under a dictionary, and the harmonic baseline: a random
shuffle of the non-green squares averages ``H_{21-Ng}`` cycles, far below
the ``11 - Ng`` a ten-swap solve demands.

The Easy/Goldilocks/Hard label is a coarse heuristic over those numbers,
not a calibrated model, and is marked as such in rendered output.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .board import Puzzle
from .coloring import color_board, color_counts
from .perms import average_cycle_count, k_disjoint_2cycle_count
from .solver import solve_grid
from .unscramble import (
    ENUMERATION_CAP_DEFAULT,
    assignments_with_cycle_count,
    class_bijection_count,
)
from .words import WordList

__all__ = [
    "DifficultyReport",
    "analyze",
    "score_for_swaps",
    "hardness_count_reference",
    "PERFECT_SCORE_SWAPS",
]

PERFECT_SCORE_SWAPS = 10


@dataclass(frozen=True)
class DifficultyReport:
    n_green: int
    n_yellow: int
    n_gray: int
    class_count: int | None
    perfect_assignment_count: int | None
    cap_exceeded: bool
    solution_count: int | None
    baseline_avg_cycles: Fraction | None
    required_nongreen_cycles: int
    classification: str | None


def analyze(
    puzzle: Puzzle,
    word_list: WordList | None = None,
    *,
    enumeration_cap: int = ENUMERATION_CAP_DEFAULT,
) -> DifficultyReport:
    """Populate a :class:`DifficultyReport` for a puzzle.

    The solution must either be attached to the puzzle or discoverable by
    solving it against ``word_list``.  With a word list the report also
    carries the solution count (capped at 8); 0 solutions withholds the
    classification.
    """
    scrambled = puzzle.scrambled
    solution = puzzle.solution

    solution_count: int | None = None
    if word_list is not None:
        found = solve_grid(scrambled, puzzle.colors, word_list)
        solution_count = len(found)
        if solution is None and found:
            solution = found[0].board

    if solution is None and puzzle.colors is None:
        raise ValueError("puzzle has neither colors nor a discoverable solution")
    colors = puzzle.colors if puzzle.colors is not None else color_board(scrambled, solution)
    counts = color_counts(colors)

    class_count: int | None = None
    perfect_count: int | None = None
    cap_exceeded = False
    if solution is not None:
        class_count = class_bijection_count(scrambled, solution, skip_matched=True)
        try:
            perfect_count = assignments_with_cycle_count(
                scrambled, solution, 11, cap=enumeration_cap
            )
        except ValueError:
            cap_exceeded = True

    baseline = average_cycle_count(21 - counts.green) if counts.green < 21 else None

    # Hard outranks Easy: a one-green board stays Hard even when its single
    # pinned assignment makes the class count 1
    if solution_count == 0:
        classification = None
    elif counts.green <= 2 or (solution is not None and perfect_count is None):
        classification = "Hard"
    elif counts.green >= 9 or class_count == 1:
        classification = "Easy"
    else:
        classification = "Goldilocks"

    return DifficultyReport(
        n_green=counts.green,
        n_yellow=counts.yellow,
        n_gray=counts.gray,
        class_count=class_count,
        perfect_assignment_count=perfect_count,
        cap_exceeded=cap_exceeded,
        solution_count=solution_count,
        baseline_avg_cycles=baseline,
        required_nongreen_cycles=11 - counts.green,
        classification=classification,
    )


def score_for_swaps(swaps_used: int) -> int:
    """Score of a finished game: 5 for ten swaps, one less per extra swap,
    floored at 0.  No board is solvable in fewer than ten."""
    if swaps_used < PERFECT_SCORE_SWAPS:
        raise ValueError(f"no game solves in fewer than {PERFECT_SCORE_SWAPS} swaps")
    return max(0, 5 - (swaps_used - PERFECT_SCORE_SWAPS))


_MULTINOMIAL = re.compile(r"multinomial\((\d+);(\d+(?:,\d+)*)\)")


def hardness_count_reference(shape: str) -> int:
    """Reference counts for the search-space estimates quoted in reports.

    ``"ten-2-cycles"`` counts the permutations of 20 squares made of ten
    disjoint 2-cycles.  ``"multinomial(n;a,b,...)"`` counts the ways to
    deal ``n`` squares into groups of the given sizes.
    """
    if shape == "ten-2-cycles":
        return k_disjoint_2cycle_count(20, 10)
    match = _MULTINOMIAL.fullmatch(shape.replace(" ", ""))
    if match:
        n = int(match.group(1))
        parts = [int(p) for p in match.group(2).split(",")]
        if sum(parts) != n:
            raise ValueError(f"multinomial parts {parts} do not sum to {n}")
        result = math.factorial(n)
        for part in parts:
            result //= math.factorial(part)
        return result
    raise ValueError(f"unknown hardness shape {shape!r}")
