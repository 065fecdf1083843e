"""Rendering: difficulty reports as text or key/value rows, and figures.

Figures are written straight to files with the Agg backend so the CLI can
run headless; matplotlib is imported lazily to keep non-plotting commands
light.
"""

from __future__ import annotations

from fractions import Fraction

from .board import Color, ColorBoard, LetterBoard, SQUARES, square_cell
from .difficulty import DifficultyReport
from .perms import average_cycle_count, cycle_count_distribution, harmonic_excess

__all__ = [
    "difficulty_pairs",
    "render_difficulty_text",
    "save_board_figure",
    "save_stats_figure",
]


def _fraction_text(value: Fraction | None) -> str:
    if value is None:
        return "-"
    return f"{float(value):.4f} (exact {value.numerator}/{value.denominator})"


def difficulty_pairs(report: DifficultyReport) -> list[tuple[str, str]]:
    """The report as ordered (key, value) rows for machine output."""
    if report.perfect_assignment_count is not None:
        perfect = str(report.perfect_assignment_count)
    elif report.cap_exceeded:
        perfect = "cap exceeded"
    else:
        perfect = "-"
    return [
        ("greens", str(report.n_green)),
        ("yellows", str(report.n_yellow)),
        ("grays", str(report.n_gray)),
        ("class_count", "-" if report.class_count is None else str(report.class_count)),
        ("perfect_assignments", perfect),
        ("solutions", "-" if report.solution_count is None else str(report.solution_count)),
        ("required_nongreen_cycles", str(report.required_nongreen_cycles)),
        ("baseline_avg_cycles", _fraction_text(report.baseline_avg_cycles)),
        ("classification", report.classification or "withheld"),
    ]


def render_difficulty_text(report: DifficultyReport) -> str:
    rows = difficulty_pairs(report)
    width = max(len(key) for key, _ in rows)
    lines = [f"{key.ljust(width)}  {value}" for key, value in rows]
    lines.append(f"{'note'.ljust(width)}  classification is a heuristic label")
    return "\n".join(lines) + "\n"


_FILL = {Color.GREEN: "#6aaa64", Color.YELLOW: "#c9b458", Color.GRAY: "#a5a5a5"}


def save_board_figure(
    board: LetterBoard,
    colors: ColorBoard | None,
    path: str,
    title: str | None = None,
) -> None:
    """Draw the board as a colored 5x5 grid and write it to ``path``."""
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    fig, ax = plt.subplots(figsize=(3.2, 3.2))
    for square in SQUARES:
        row, col = square_cell(square)
        x, y = col - 1, 5 - row
        fill = _FILL[colors[square]] if colors is not None else "#dddddd"
        ax.add_patch(Rectangle((x, y), 1, 1, facecolor=fill, edgecolor="black"))
        ax.text(x + 0.5, y + 0.5, board[square], ha="center", va="center", fontsize=14)
    ax.set_xlim(0, 5)
    ax.set_ylim(0, 5)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_stats_figure(n: int, path: str) -> None:
    """Cycle-count distribution of ``S_n`` next to the harmonic baseline."""
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    distribution = cycle_count_distribution(n)
    ks = list(range(1, n + 1))
    mean = float(average_cycle_count(n))

    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6))
    left.bar(ks, distribution, color="#4a7ebb")
    left.set_yscale("log")
    left.axvline(mean, color="#c0504d", linestyle="--", label=f"mean {mean:.2f}")
    left.set_xlabel("cycles")
    left.set_ylabel("permutations")
    left.set_title(f"cycle counts over S_{n}")
    left.legend()

    ns = list(range(1, max(n, 2) + 1))
    right.plot(ns, [float(average_cycle_count(m)) for m in ns], label="mean cycles")
    right.plot(ns, [harmonic_excess(m) for m in ns], label="excess over log n")
    right.set_xlabel("n")
    right.set_title("harmonic baseline")
    right.legend()

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
