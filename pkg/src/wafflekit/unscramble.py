"""Turn a known solution into a minimal swap plan.

Any permutation ``g`` of the squares with ``solution[g(s)] == scrambled[s]``
unscrambles the board, but when letters repeat there are many such ``g``
(one per way of matching up each letter's scrambled and solved positions)
and they need different numbers of swaps.  The fewest swaps is
``21 - c(g)`` where ``c`` counts disjoint cycles, so the solver's job is to
pick the matching that maximizes the cycle count.

Squares whose letter already sits correctly can always be kept fixed: if a
maximizer moved such a square, rerouting it to itself splices one cycle
into two and gains a cycle.  The search therefore pins those squares and
runs a branch-and-bound over the rest, growing the permutation edge by
edge.  Partial assignments form disjoint chains; an upper bound on the
final cycle count is cycles closed so far, plus one per open multi-square
chain, plus half the untouched squares (no movable square can be a fixed
point, so future cycles among them need at least two squares each).

A second, lexicographic pass rebuilds the optimal assignment with the
smallest image sequence so results are reproducible across runs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .board import LetterBoard, N_SQUARES, SQUARES
from .perms import Permutation, SwapPlan, decompose, transposition_plan

__all__ = [
    "UnscramblingResult",
    "letter_classes",
    "class_bijection_count",
    "best_unscrambling",
    "assignments_with_cycle_count",
    "apply_plan",
    "verify_plan",
]

PERFECT_CYCLE_COUNT = 11
ENUMERATION_CAP_DEFAULT = 10**6


def letter_classes(
    scrambled: LetterBoard, solution: LetterBoard, *, skip_matched: bool = False
) -> dict[str, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Per letter: (scrambled positions, solution positions).

    With ``skip_matched`` the squares already holding their solution letter
    are dropped from both sides.  Raises if the boards do not hold the same
    letters with the same multiplicities.
    """
    sources: dict[str, list[int]] = {}
    targets: dict[str, list[int]] = {}
    for square in SQUARES:
        if skip_matched and scrambled[square] == solution[square]:
            continue
        sources.setdefault(scrambled[square], []).append(square)
        targets.setdefault(solution[square], []).append(square)
    mismatched = sorted(
        letter
        for letter in set(sources) | set(targets)
        if len(sources.get(letter, ())) != len(targets.get(letter, ()))
    )
    if mismatched:
        raise ValueError(f"boards hold different letter multisets; differing: {mismatched}")
    return {
        letter: (tuple(sources[letter]), tuple(targets[letter])) for letter in sorted(sources)
    }


def class_bijection_count(
    scrambled: LetterBoard, solution: LetterBoard, *, skip_matched: bool = False
) -> int:
    """Number of square permutations consistent with the letters: the
    product of ``m!`` over letter multiplicities."""
    classes = letter_classes(scrambled, solution, skip_matched=skip_matched)
    count = 1
    for srcs, _ in classes.values():
        count *= math.factorial(len(srcs))
    return count


@dataclass(frozen=True)
class UnscramblingResult:
    """Outcome of the cycle-maximizing search."""

    g: Permutation
    cycle_count: int
    swap_plan: SwapPlan
    perfect: bool

    @property
    def swaps_needed(self) -> int:
        return len(self.swap_plan)


class _ChainSearch:
    """Shared state for the branch-and-bound over class bijections.

    Edges ``s -> t`` mean the letter on square ``s`` moves to square ``t``.
    Open chains are tracked through two maps: ``chain_start[end]`` and
    ``chain_end[start]``; untouched squares count as one-square chains.
    """

    def __init__(self, scrambled: LetterBoard, solution: LetterBoard):
        classes = letter_classes(scrambled, solution)
        self.scrambled = scrambled
        self.solution = solution
        self.matched = tuple(s for s in SQUARES if scrambled[s] == solution[s])
        movable = tuple(s for s in SQUARES if scrambled[s] != solution[s])
        self.movable = movable
        self.targets_by_letter = {
            letter: tuple(t for t in targets if scrambled[t] != solution[t])
            for letter, (_, targets) in classes.items()
        }
        self.out: dict[int, int] = {}
        self.target_used: set[int] = set()
        self.chain_start = {s: s for s in movable}
        self.chain_end = {s: s for s in movable}
        self.closed = 0
        self.components = len(movable)
        self.singletons = len(movable)

    def upper_bound(self) -> int:
        multi = self.components - self.singletons
        return self.closed + multi + self.singletons // 2

    def add_edge(self, s: int, t: int):
        start = self.chain_start.pop(s)
        end = self.chain_end.pop(t)
        self.out[s] = t
        self.target_used.add(t)
        if start == t:
            self.closed += 1
            self.components -= 1
            return ("close", start, end)
        was_single_s = start == s
        was_single_t = end == t
        self.chain_start[end] = start
        self.chain_end[start] = end
        self.components -= 1
        self.singletons -= was_single_s + was_single_t
        return ("merge", start, end, was_single_s, was_single_t)

    def remove_edge(self, s: int, t: int, record) -> None:
        del self.out[s]
        self.target_used.discard(t)
        if record[0] == "close":
            _, start, end = record
            self.chain_start[s] = start
            self.chain_end[t] = end
            self.closed -= 1
            self.components += 1
        else:
            # merged chains cannot share endpoints, so these four writes
            # restore both pre-merge chains even when one was a single square
            _, start, end, was_single_s, was_single_t = record
            self.chain_start[s] = start
            self.chain_end[t] = end
            self.chain_start[end] = t
            self.chain_end[start] = s
            self.components += 1
            self.singletons += was_single_s + was_single_t

    def available_targets(self, s: int) -> list[int]:
        letter = self.scrambled[s]
        return [t for t in self.targets_by_letter[letter] if t not in self.target_used]

    def ordered_targets(self, s: int) -> list[int]:
        # closing the current chain first, then edges that let the next
        # step close it, keeps two-cycle-rich optima near the front
        avail = self.available_targets(s)
        start = self.chain_start[s]
        want = self.solution[start]

        def rank(t: int):
            return (t != start, self.scrambled[t] != want, t)

        return sorted(avail, key=rank)

    def next_source(self, hint: int | None) -> int | None:
        if hint is not None and hint not in self.out:
            return hint
        for s in self.movable:
            if s not in self.out:
                return s
        return None

    def max_closed(self) -> int:
        best = -1

        def search(hint):
            nonlocal best
            if self.upper_bound() <= best:
                return
            s = self.next_source(hint)
            if s is None:
                best = max(best, self.closed)
                return
            for t in self.ordered_targets(s):
                record = self.add_edge(s, t)
                search(t if t not in self.out else None)
                self.remove_edge(s, t, record)
                if self.upper_bound() <= best:
                    return

        search(None)
        return best

    def can_reach(self, goal: int) -> bool:
        def search(hint):
            if self.upper_bound() < goal:
                return False
            s = self.next_source(hint)
            if s is None:
                return self.closed >= goal
            for t in self.ordered_targets(s):
                record = self.add_edge(s, t)
                found = search(t if t not in self.out else None)
                self.remove_edge(s, t, record)
                if found:
                    return True
            return False

        return search(None)


def best_unscrambling(scrambled: LetterBoard, solution: LetterBoard) -> UnscramblingResult:
    """The unscrambling permutation with the most cycles (fewest swaps).

    Ties are broken toward the lexicographically smallest image sequence.
    ``perfect`` is set exactly when the board needs ten swaps: eleven
    cycles, no more, no fewer.
    """
    state = _ChainSearch(scrambled, solution)
    best_closed = state.max_closed() if state.movable else 0

    # rebuild the optimum choosing the smallest feasible target per square
    for s in state.movable:
        placed = False
        for t in state.available_targets(s):
            record = state.add_edge(s, t)
            if state.can_reach(best_closed):
                placed = True
                break
            state.remove_edge(s, t, record)
        if not placed:
            raise AssertionError("optimal cycle count vanished during reconstruction")

    image = list(range(1, N_SQUARES + 1))
    for s, t in state.out.items():
        image[s - 1] = t
    g = Permutation(tuple(image))
    cycle_count = len(state.matched) + best_closed
    plan = transposition_plan(g)
    return UnscramblingResult(
        g=g,
        cycle_count=cycle_count,
        swap_plan=plan,
        perfect=cycle_count == PERFECT_CYCLE_COUNT,
    )


def assignments_with_cycle_count(
    scrambled: LetterBoard,
    solution: LetterBoard,
    k: int,
    *,
    cap: int = ENUMERATION_CAP_DEFAULT,
) -> int:
    """How many class bijections have exactly ``k`` cycles.

    Squares already holding their solution letter are pinned (no maximizer
    moves them, and pinning matches the per-letter choice counts quoted in
    difficulty reports), so the counts over all ``k`` sum to the
    ``skip_matched`` bijection count.  Enumeration is exhaustive and
    refuses to start above ``cap``.
    """
    total = class_bijection_count(scrambled, solution, skip_matched=True)
    if total > cap:
        raise ValueError(f"enumeration of {total} class bijections exceeds cap {cap}")
    classes = letter_classes(scrambled, solution, skip_matched=True)
    letters = sorted(classes)
    count = 0
    source_lists = [classes[letter][0] for letter in letters]
    target_perms = [itertools.permutations(classes[letter][1]) for letter in letters]
    for combo in itertools.product(*target_perms):
        image = list(range(1, N_SQUARES + 1))
        for sources, targets in zip(source_lists, combo):
            for s, t in zip(sources, targets):
                image[s - 1] = t
        if Permutation(tuple(image)).cycle_count() == k:
            count += 1
    return count


def apply_plan(board: LetterBoard, plan: SwapPlan) -> LetterBoard:
    """Apply the swaps in order to a board."""
    for a, b in plan.swaps:
        board = board.with_swap(a, b)
    return board


def verify_plan(scrambled: LetterBoard, solution: LetterBoard, plan: SwapPlan) -> bool:
    """True iff the swaps, applied in order, solve the board."""
    return apply_plan(scrambled, plan) == solution
