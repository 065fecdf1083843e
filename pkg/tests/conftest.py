"""Shared fixtures: the worked example boards and small dictionaries.

Board texts are square-indexed transcriptions of published games: the
archived game #2 (seven greens, a 7-3-2-2 cycle structure on the rest),
the archived game #280 (whose six words also fill the transposed grid),
the one-green hard board whose unscrambling is ten disjoint 2-cycles, the
repeat-heavy MAMMA/AMASS board, and a constructed SMILE/SLIME board whose
top row is ambiguous.
"""

from __future__ import annotations

import pytest

from wafflekit.board import parse_board, parse_puzzle
from wafflekit.coloring import color_board
from wafflekit.words import parse_word_list

GAME2_SCRAMBLED = "SCGOL\nN.N.D\nINDEE\nR.I.U\nFFARE\n"
GAME2_SOLUTION = "SNARL\nN.I.E\nUNDID\nF.E.G\nFORCE\n"
GAME2_COLORS = "GXXXG\nG.X.Y\nYGGXY\nX.Y.X\nGYYYG\n"
GAME2_WORDS = ("SNARL", "UNDID", "FORCE", "SNUFF", "AIDER", "LEDGE")

GAME280_SCRAMBLED = "FRINT\nA.U.L\nNONNI\nA.N.L\nTEEET\n"
GAME280_SOLUTION = "FLEET\nL.N.A\nINNER\nN.U.O\nTAINT\n"
GAME280_WORDS = ("FLEET", "INNER", "TAINT", "FLINT", "ENNUI", "TAROT")

HARD_SCRAMBLED = "DUPOS\nI.U.N\nEWKRG\nA.Y.C\nTLHMB\n"
HARD_SOLUTION = "BIGHT\nU.U.Y\nCLAMP\nK.N.E\nSWORD\n"

REPEATS_SCRAMBLED = "MMAAM\nM.M.S\nAMAAS\nA.A.A\nMSMMM\n"
REPEATS_SOLUTION = "MAMMA\nA.A.M\nMAMMA\nM.M.S\nAMASS\n"

SMILE_SCRAMBLED = "SIADE\nM.A.L\nNPEIN\nA.T.A\nTEOLN\n"
SMILE_SOLUTION = "SMILE\nA.D.A\nINEPT\nN.A.E\nTALON\n"
SMILE_WORDS = ("SMILE", "INEPT", "TALON", "SAINT", "IDEAL", "EATEN")

DECOYS = ("BRAVE", "CANDY", "ROBIN", "MOUSE", "PLUMB", "GHOST")


@pytest.fixture
def game2():
    scrambled = parse_board(GAME2_SCRAMBLED)
    solution = parse_board(GAME2_SOLUTION)
    return scrambled, solution


@pytest.fixture
def game2_colors(game2):
    return color_board(*game2)


@pytest.fixture
def game2_words():
    return parse_word_list("\n".join(GAME2_WORDS + DECOYS), "game2")


@pytest.fixture
def game280():
    return parse_board(GAME280_SCRAMBLED), parse_board(GAME280_SOLUTION)


@pytest.fixture
def game280_words():
    return parse_word_list("\n".join(GAME280_WORDS + DECOYS), "game280")


@pytest.fixture
def hard_game():
    return parse_board(HARD_SCRAMBLED), parse_board(HARD_SOLUTION)


@pytest.fixture
def repeats_game():
    return parse_board(REPEATS_SCRAMBLED), parse_board(REPEATS_SOLUTION)


@pytest.fixture
def smile_game():
    return parse_board(SMILE_SCRAMBLED), parse_board(SMILE_SOLUTION)


@pytest.fixture
def smile_words():
    return parse_word_list("\n".join(SMILE_WORDS + ("SLIME",) + DECOYS), "smile")


@pytest.fixture
def game2_puzzle_text():
    return GAME2_SCRAMBLED + "\n" + GAME2_COLORS + "\n" + GAME2_SOLUTION


@pytest.fixture
def game2_puzzle(game2_puzzle_text):
    return parse_puzzle(game2_puzzle_text)
