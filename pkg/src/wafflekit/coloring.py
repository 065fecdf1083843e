"""Green/Yellow/Gray coloring of a scrambled board against a solution.

A square is green when its letter already matches the solution.  Otherwise
it is yellow when the letter occurs anywhere in the solution word of at
least one slot through that square, and gray when it occurs in none.
Membership is plain letter membership, green positions of the word
included; the official game's multiset-aware gray rules for repeated
letters are deliberately not emulated.
"""

from __future__ import annotations

from typing import NamedTuple

from .board import Color, ColorBoard, LetterBoard, SQUARES, incident_slots

__all__ = ["ColorCounts", "color_board", "color_counts"]


class ColorCounts(NamedTuple):
    green: int
    yellow: int
    gray: int


def color_board(scrambled: LetterBoard, solution: LetterBoard) -> ColorBoard:
    """Color every square of ``scrambled`` against ``solution``."""
    colors = []
    for square in SQUARES:
        letter = scrambled[square]
        if letter == solution[square]:
            colors.append(Color.GREEN)
        elif any(letter in solution.word_at(slot) for slot in incident_slots(square)):
            colors.append(Color.YELLOW)
        else:
            colors.append(Color.GRAY)
    return ColorBoard(tuple(colors))


def color_counts(colors: ColorBoard) -> ColorCounts:
    """(green, yellow, gray) counts; they always sum to 21."""
    tally = {Color.GREEN: 0, Color.YELLOW: 0, Color.GRAY: 0}
    for color in colors.colors:
        tally[color] += 1
    return ColorCounts(tally[Color.GREEN], tally[Color.YELLOW], tally[Color.GRAY])
