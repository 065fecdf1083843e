"""Solve, audit, analyze, and generate Waffle-style 21-square word puzzles.

The pipeline behind a perfect ten-swap game:

1. :mod:`wafflekit.solver` reconstructs the six words from the coloring;
2. :mod:`wafflekit.unscramble` picks, among all letter-consistent square
   permutations, one with eleven cycles;
3. :mod:`wafflekit.perms` turns it into exactly ten swaps.

:mod:`wafflekit.generate` runs the pipeline in reverse to mint new puzzles,
and :mod:`wafflekit.difficulty` reports why a board is easy or hard.
"""

from .board import (
    Color,
    ColorBoard,
    LetterBoard,
    Puzzle,
    parse_board,
    parse_puzzle,
    render_board,
    render_puzzle,
)
from .coloring import color_board, color_counts
from .difficulty import analyze, score_for_swaps
from .generate import GeneratorConfig, generate_puzzle
from .perms import Permutation, SwapPlan, decompose, swap_distance, transposition_plan
from .solver import GridSolution, solve_grid, uniqueness_report
from .unscramble import best_unscrambling, class_bijection_count, verify_plan
from .words import WordList, default_word_list, load_word_list, swappable_words

__version__ = "0.1.0"

__all__ = [
    "Color",
    "ColorBoard",
    "LetterBoard",
    "Puzzle",
    "parse_board",
    "parse_puzzle",
    "render_board",
    "render_puzzle",
    "color_board",
    "color_counts",
    "analyze",
    "score_for_swaps",
    "GeneratorConfig",
    "generate_puzzle",
    "Permutation",
    "SwapPlan",
    "decompose",
    "swap_distance",
    "transposition_plan",
    "GridSolution",
    "solve_grid",
    "uniqueness_report",
    "best_unscrambling",
    "class_bijection_count",
    "verify_plan",
    "WordList",
    "default_word_list",
    "load_word_list",
    "swappable_words",
    "__version__",
]
