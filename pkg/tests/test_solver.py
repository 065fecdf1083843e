"""Grid solving against the worked games and a brute-force join oracle."""

import itertools
import random

import pytest

import oracles
from wafflekit.board import Color, LetterBoard, SLOT_ORDER, parse_board
from wafflekit.coloring import color_board
from wafflekit.generate import GeneratorConfig, generate_puzzle
from wafflekit.solver import (
    candidate_words,
    slot_constraints,
    solve_grid,
    uniqueness_report,
)
from wafflekit.words import WordList, default_word_list, parse_word_list


class TestSlotConstraints:
    def test_all_green_slot_fixes_every_position(self, game2):
        _, solution = game2
        colors = color_board(solution, solution)
        c = slot_constraints(solution, colors, "H1")
        assert c.fixed == {1: "S", 2: "N", 3: "A", 4: "R", 5: "L"}

    def test_game2_bottom_row(self, game2, game2_colors):
        scrambled, _ = game2
        c = slot_constraints(scrambled, game2_colors, "H3")
        assert c.fixed == {1: "F", 5: "E"}
        assert c.banned_at == {2: frozenset("F"), 3: frozenset("A"), 4: frozenset("R")}
        assert c.required == frozenset("FR")
        assert c.required_any == frozenset("A")
        assert c.excluded == frozenset()

    def test_gray_letter_excluded(self, game2, game2_colors):
        scrambled, _ = game2
        c = slot_constraints(scrambled, game2_colors, "H1")
        # C, G, O sit gray on squares 2..4 of the top row
        assert c.excluded == frozenset("CGO")

    def test_contradictory_coloring_flagged(self):
        from wafflekit.board import parse_colors

        scrambled = parse_board("AAAAA\nA.A.A\nAAAAA\nA.A.A\nAAAAA\n")
        # the same letter yellow on an even square (required) and gray on
        # another square of the slot (excluded)
        colors = parse_colors("XYXXX\nX.X.X\nXXXXX\nX.X.X\nXXXXX\n")
        c = slot_constraints(scrambled, colors, "H1")
        assert c.contradictions
        assert c.admits("AAAAA") is False


class TestCandidateWords:
    def test_fully_fixed_slot(self, game2, game2_words):
        _, solution = game2
        colors = color_board(solution, solution)
        c = slot_constraints(solution, colors, "H3")
        assert candidate_words(game2_words, c) == ["FORCE"]

    def test_everything_excluded(self, game2_words):
        from wafflekit.board import SLOTS
        from wafflekit.solver import SlotConstraints

        c = SlotConstraints(slot=SLOTS["H1"], excluded=frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZ"))
        assert candidate_words(game2_words, c) == []

    def test_no_constraints_returns_whole_list(self, game2_words):
        from wafflekit.board import SLOTS
        from wafflekit.solver import SlotConstraints

        c = SlotConstraints(slot=SLOTS["H1"])
        assert candidate_words(game2_words, c) == sorted(game2_words.words)


class TestSolveGrid:
    def test_game2_unique(self, game2, game2_colors, game2_words):
        scrambled, solution = game2
        found = solve_grid(scrambled, game2_colors, game2_words)
        assert len(found) == 1
        assert found[0].board == solution
        assert found[0].words == ("SNARL", "UNDID", "FORCE", "SNUFF", "AIDER", "LEDGE")

    def test_solved_board_with_all_green(self, game2, game2_words):
        _, solution = game2
        colors = color_board(solution, solution)
        found = solve_grid(solution, colors, game2_words)
        assert [s.board for s in found] == [solution]

    def test_game280_strict_keeps_the_published_answer(self, game280, game280_words):
        scrambled, solution = game280
        colors = color_board(scrambled, solution)
        found = solve_grid(scrambled, colors, game280_words)
        assert [s.words for s in found] == [
            ("FLEET", "INNER", "TAINT", "FLINT", "ENNUI", "TAROT")
        ]

    def test_game280_greens_mode_sees_the_transpose(self, game280, game280_words):
        scrambled, solution = game280
        colors = color_board(scrambled, solution)
        found = solve_grid(scrambled, colors, game280_words, mode="greens")
        assert [s.words for s in found] == [
            ("FLEET", "INNER", "TAINT", "FLINT", "ENNUI", "TAROT"),
            ("FLINT", "ENNUI", "TAROT", "FLEET", "INNER", "TAINT"),
        ]

    def test_no_colors_joins_on_structure_alone(self, game280, game280_words):
        scrambled, _ = game280
        found = solve_grid(scrambled, None, game280_words)
        assert len(found) == 2

    def test_results_sorted_and_capped(self, game280, game280_words):
        scrambled, solution = game280
        colors = color_board(scrambled, solution)
        found = solve_grid(scrambled, colors, game280_words, max_solutions=1, mode="greens")
        assert len(found) == 1

    def test_unknown_mode_rejected(self, game2, game2_colors, game2_words):
        with pytest.raises(ValueError):
            solve_grid(game2[0], game2_colors, game2_words, mode="loose")

    def test_join_order_independence(self, game2, game2_colors, game2_words):
        scrambled, _ = game2
        reference = solve_grid(scrambled, game2_colors, game2_words)
        for order in itertools.islice(itertools.permutations(SLOT_ORDER), 0, 24, 5):
            found = solve_grid(scrambled, game2_colors, game2_words, slot_order=order)
            assert found == reference

    def test_solution_multiset_and_recolor(self, game2, game2_colors, game2_words):
        scrambled, _ = game2
        for sol in solve_grid(scrambled, game2_colors, game2_words):
            assert sol.board.letter_counts() == scrambled.letter_counts()
            assert color_board(scrambled, sol.board) == game2_colors


class TestUniqueness:
    def test_game2_is_unique(self, game2, game2_colors, game2_words):
        report = uniqueness_report(game2[0], game2_colors, game2_words)
        assert report.count == 1 and report.unique

    def test_game280_audit_not_unique(self, game280, game280_words):
        scrambled, solution = game280
        colors = color_board(scrambled, solution)
        report = uniqueness_report(scrambled, colors, game280_words, mode="greens")
        assert report.count >= 2 and not report.unique

    def test_swappable_top_row_not_unique(self, smile_game, smile_words):
        scrambled, solution = smile_game
        colors = color_board(scrambled, solution)
        assert colors[2] is not Color.GREEN and colors[4] is not Color.GREEN
        report = uniqueness_report(scrambled, colors, smile_words)
        assert report.count >= 2
        top_rows = {s.word("H1") for s in report.solutions}
        assert top_rows == {"SMILE", "SLIME"}


class TestAgainstBruteForce:
    @pytest.mark.parametrize("mode", ["strict", "greens"])
    def test_worked_games(self, mode, game2, game2_colors, game2_words, game280, game280_words):
        for (scrambled, solution), words in [
            (game2, game2_words),
            (game280, game280_words),
        ]:
            colors = color_board(scrambled, solution)
            expected = oracles.brute_force_solve(scrambled, colors, words, mode=mode)
            got = [s.words for s in solve_grid(scrambled, colors, words, 1000, mode=mode)]
            assert got == expected

    def test_random_instances(self):
        base = default_word_list()
        pool = base.sorted_words()
        for seed in range(6):
            rng = random.Random(seed)
            puzzle = generate_puzzle(GeneratorConfig(seed=seed))
            sample = set(rng.sample(pool, 150)) | set(puzzle.solution.words().values())
            words = WordList(frozenset(sample), f"sample{seed}")
            expected = oracles.brute_force_solve(puzzle.scrambled, puzzle.colors, words)
            got = [s.words for s in solve_grid(puzzle.scrambled, puzzle.colors, words, 1000)]
            assert got == expected
            assert puzzle.solution.words() in [dict(zip(SLOT_ORDER, w)) for w in got]


def test_candidate_lists_are_pruning_only(game2, game2_colors):
    # a word list whose candidates pass the per-slot filters but fail the
    # recoloring check yields no solutions
    scrambled, _ = game2
    words = parse_word_list("FARCE\nSNARL\nUNDID\nSNUFF\nAIDER\nLEDGE\n")
    found = solve_grid(scrambled, game2_colors, words)
    assert all(color_board(scrambled, s.board) == game2_colors for s in found)
