"""Command-line interface.

Subcommands: solve, unscramble, color, analyze, generate, swappable, stats.
Puzzles move through files or stdout in the stacked-grid text format; all
output is deterministic for a given input (and seed), so it can be diffed
against golden files.

Exit codes: 0 success, 1 no solution / nothing to report, 2 usage error,
3 unreadable or malformed input file.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import board as board_mod
from .board import BoardFormatError, Puzzle, parse_puzzle, render_colors, render_puzzle
from .coloring import color_board
from .difficulty import analyze, hardness_count_reference
from .generate import GenerationError, GeneratorConfig, generate_puzzle
from .perms import (
    average_cycle_count,
    harmonic_excess,
    cycle_count_distribution,
    k_disjoint_2cycle_count,
    partition_count,
)
from .report import (
    difficulty_pairs,
    render_difficulty_text,
    save_board_figure,
    save_stats_figure,
)
from .solver import solve_grid, uniqueness_report
from .unscramble import best_unscrambling
from .words import WordList, WordListError, default_word_list, filter_swappable, load_word_list
from .words import swappable_words as find_swappable

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _NoSolution(Exception):
    pass


def _bool_flag(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _ng_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wafflekit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dict(p, filter_default: bool):
        p.add_argument("--dict", dest="dict_path", metavar="PATH", help="word list file")
        p.add_argument(
            "--filter-swappable",
            type=_bool_flag,
            default=filter_default,
            metavar="BOOL",
            help=f"drop 2nd/4th-letter swap pairs (default {str(filter_default).lower()})",
        )

    def add_format(p):
        p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = sub.add_parser("solve", help="find solution grids for a puzzle file")
    p.add_argument("puzzle")
    add_dict(p, False)
    add_format(p)
    p.add_argument("--max-solutions", type=int, default=8, metavar="N")
    p.add_argument(
        "--mode",
        choices=("strict", "greens"),
        default="strict",
        help="greens: audit join using green squares and letter counts only",
    )

    p = sub.add_parser("unscramble", help="emit a minimal swap plan")
    p.add_argument("puzzle")
    add_dict(p, False)

    p = sub.add_parser("color", help="color a scrambled board against its solution")
    p.add_argument("puzzle")

    p = sub.add_parser("analyze", help="difficulty report")
    p.add_argument("puzzle")
    add_dict(p, False)
    add_format(p)
    p.add_argument("--figure", metavar="PATH", help="also render the board to an image file")

    p = sub.add_parser("generate", help="generate a puzzle file")
    add_dict(p, True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target-ng", type=_ng_range, default=(5, 8), metavar="LO..HI")
    p.add_argument("--policy", choices=("corners", "free"), default="corners")
    p.add_argument("--retries", type=int, default=200, metavar="N")

    p = sub.add_parser("swappable", help="list 2nd/4th-letter swap pairs")
    add_dict(p, False)
    add_format(p)

    p = sub.add_parser("stats", help="reference numbers for the 21-square game")
    add_format(p)
    p.add_argument("--avg-cycles", type=int, metavar="N")
    p.add_argument("--epsilon", type=int, metavar="N")
    p.add_argument("--partitions", type=int, metavar="N")
    p.add_argument("--two-cycles", type=int, nargs=2, metavar=("N", "K"))
    p.add_argument("--distribution", type=int, metavar="N")
    p.add_argument("--figure", metavar="PATH", help="render distribution and baseline charts")

    return parser


def _load_words(args) -> WordList:
    words = load_word_list(args.dict_path) if args.dict_path else default_word_list()
    if args.filter_swappable:
        words = filter_swappable(words)
    return words


def _load_puzzle(path: str) -> Puzzle:
    with open(path, "r", encoding="ascii") as handle:
        return parse_puzzle(handle.read())


def _resolve_solution(puzzle: Puzzle, args) -> board_mod.LetterBoard:
    if puzzle.solution is not None:
        return puzzle.solution
    words = _load_words(args)
    report = uniqueness_report(puzzle.scrambled, puzzle.colors, words)
    if report.count == 0:
        raise _NoSolution("no solution under the word list")
    if report.count > 1:
        raise _NoSolution("solution is not unique; supply a solution stanza")
    return report.solutions[0].board


def _cmd_solve(args, out) -> int:
    puzzle = _load_puzzle(args.puzzle)
    words = _load_words(args)
    solutions = solve_grid(
        puzzle.scrambled, puzzle.colors, words, max_solutions=args.max_solutions, mode=args.mode
    )
    if not solutions:
        print("no solutions", file=sys.stderr)
        return EXIT_NO_SOLUTION
    if args.format == "tsv":
        for solution in solutions:
            print(",".join(solution.words), file=out)
    else:
        blocks = [board_mod.render_board(s.board) for s in solutions]
        print("\n".join(blocks), file=out, end="")
    return EXIT_OK


def _cmd_unscramble(args, out) -> int:
    puzzle = _load_puzzle(args.puzzle)
    solution = _resolve_solution(puzzle, args)
    result = best_unscrambling(puzzle.scrambled, solution)
    for a, b in result.swap_plan.swaps:
        print(f"swap {a} {b}", file=out)
    print(
        f"cycles={result.cycle_count} swaps={len(result.swap_plan)} "
        f"perfect={'true' if result.perfect else 'false'}",
        file=out,
    )
    return EXIT_OK


def _cmd_color(args, out) -> int:
    puzzle = _load_puzzle(args.puzzle)
    if puzzle.solution is None:
        raise _NoSolution("puzzle file has no solution stanza to color against")
    print(render_colors(color_board(puzzle.scrambled, puzzle.solution)), file=out, end="")
    return EXIT_OK


def _cmd_analyze(args, out) -> int:
    puzzle = _load_puzzle(args.puzzle)
    words = _load_words(args)
    report = analyze(puzzle, words)
    if args.format == "tsv":
        for key, value in difficulty_pairs(report):
            print(f"{key}\t{value}", file=out)
    else:
        print(render_difficulty_text(report), file=out, end="")
    if args.figure:
        counts = f"greens={report.n_green} yellows={report.n_yellow}"
        save_board_figure(puzzle.scrambled, puzzle.colors, args.figure, title=counts)
    return EXIT_OK


def _cmd_generate(args, out) -> int:
    words = _load_words(args)
    cfg = GeneratorConfig(
        seed=args.seed,
        target_ng=args.target_ng,
        policy=args.policy,
        max_retries=args.retries,
        filter_swappable=False,  # already applied while loading
        word_list=words,
    )
    try:
        puzzle = generate_puzzle(cfg)
    except GenerationError as exc:
        print(f"generation failed: {exc} {exc.stats}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    print(render_puzzle(puzzle), file=out, end="")
    return EXIT_OK


def _cmd_swappable(args, out) -> int:
    words = _load_words(args)
    swappable = find_swappable(words)
    pairs = sorted(
        {tuple(sorted((w, w[0] + w[3] + w[2] + w[1] + w[4]))) for w in swappable}
    )
    sep = "\t" if args.format == "tsv" else " "
    for a, b in pairs:
        print(f"{a}{sep}{b}", file=out)
    return EXIT_OK


def _fraction_decimal(value: Fraction, places: int = 4) -> str:
    return f"{float(value):.{places}f}"


def _cmd_stats(args, out) -> int:
    sep = "\t" if args.format == "tsv" else " = "
    printed = False
    if args.avg_cycles is not None:
        n = args.avg_cycles
        h = average_cycle_count(n)
        print(f"H_{n}{sep}{_fraction_decimal(h)} (exact {h.numerator}/{h.denominator})", file=out)
        printed = True
    if args.epsilon is not None:
        n = args.epsilon
        print(f"epsilon_{n}{sep}{harmonic_excess(n):.4f}", file=out)
        printed = True
    if args.partitions is not None:
        n = args.partitions
        print(f"partitions_{n}{sep}{partition_count(n)}", file=out)
        printed = True
    if args.two_cycles is not None:
        n, k = args.two_cycles
        print(f"two_cycle_perms_{n}_{k}{sep}{k_disjoint_2cycle_count(n, k)}", file=out)
        printed = True
    if args.distribution is not None:
        n = args.distribution
        for k, count in enumerate(cycle_count_distribution(n), start=1):
            print(f"cycles_{n}_{k}{sep}{count}", file=out)
        printed = True
    if args.figure:
        save_stats_figure(args.distribution or 21, args.figure)
        printed = True
    if not printed:
        header = "n\tH_n\tepsilon\tpartitions"
        print(header, file=out)
        for n in range(1, 22):
            h = average_cycle_count(n)
            print(f"{n}\t{_fraction_decimal(h)}\t{harmonic_excess(n):.4f}\t{partition_count(n)}", file=out)
        print(f"ten_2cycle_perms\t{hardness_count_reference('ten-2-cycles')}", file=out)
        print(f"class_multinomial_21_10_8_3\t{hardness_count_reference('multinomial(21;10,8,3)')}", file=out)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "unscramble": _cmd_unscramble,
    "color": _cmd_color,
    "analyze": _cmd_analyze,
    "generate": _cmd_generate,
    "swappable": _cmd_swappable,
    "stats": _cmd_stats,
}


def run(argv: list[str], out=None) -> int:
    """Parse and execute; returns the exit code instead of exiting."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except _NoSolution as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO_SOLUTION
    except (BoardFormatError, WordListError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run(sys.argv[1:]))
