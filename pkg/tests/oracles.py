"""Independent brute-force oracles the tests check the library against.

Everything here recomputes results from first principles (exhaustive
enumeration, direct rule application) without reusing the library's search
code, so a bug in the production path cannot hide itself.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from wafflekit.board import (
    Color,
    LetterBoard,
    Parity,
    SLOT_ORDER,
    SLOTS,
    SQUARES,
    parity,
)
from wafflekit.coloring import color_board
from wafflekit.perms import Permutation


def cycle_count_of_tuple(image: tuple[int, ...]) -> int:
    """Count cycles of a 1-based image tuple by direct traversal."""
    seen = [False] * len(image)
    count = 0
    for start in range(len(image)):
        if seen[start]:
            continue
        count += 1
        at = start
        while not seen[at]:
            seen[at] = True
            at = image[at] - 1
    return count


def brute_mean_cycle_count(n: int) -> Fraction:
    """Mean cycle count over every permutation of S_n."""
    total = 0
    size = 0
    for perm in itertools.permutations(range(1, n + 1)):
        total += cycle_count_of_tuple(perm)
        size += 1
    return Fraction(total, size)


def brute_cycle_distribution(n: int) -> tuple[int, ...]:
    """Entry k-1 counts permutations of S_n with k cycles."""
    counts = [0] * n
    for perm in itertools.permutations(range(1, n + 1)):
        counts[cycle_count_of_tuple(perm) - 1] += 1
    return tuple(counts)


def brute_partition_count(n: int) -> int:
    """Count partitions of n by enumerating them."""

    def rec(remaining: int, largest: int) -> int:
        if remaining == 0:
            return 1
        return sum(rec(remaining - part, part) for part in range(min(largest, remaining), 0, -1))

    return rec(n, n)


def brute_two_cycle_count(n: int, k: int) -> int:
    """Count involutions of S_n with exactly k 2-cycles, for small n."""
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        fixed = sum(1 for i, t in enumerate(perm, start=1) if i == t)
        if fixed != n - 2 * k:
            continue
        if all(perm[t - 1] == i for i, t in enumerate(perm, start=1)):
            count += 1
    return count


def all_class_bijections(scrambled: LetterBoard, solution: LetterBoard):
    """Every permutation g with solution[g(s)] == scrambled[s], unpinned.

    Enumerates the full product of per-letter matchings, including ones
    that move already-correct squares.
    """
    sources: dict[str, list[int]] = {}
    targets: dict[str, list[int]] = {}
    for square in SQUARES:
        sources.setdefault(scrambled[square], []).append(square)
        targets.setdefault(solution[square], []).append(square)
    letters = sorted(sources)
    for combo in itertools.product(*(itertools.permutations(targets[c]) for c in letters)):
        image = [0] * 21
        for letter, assignment in zip(letters, combo):
            for s, t in zip(sources[letter], assignment):
                image[s - 1] = t
        yield Permutation(tuple(image))


def brute_force_solve(scrambled, colors, word_list, mode="strict"):
    """Enumerate candidate 6-tuples in fixed slot order and keep the valid
    boards.  Per-slot admission re-derives the color rules directly."""

    def admits(slot_id: str, word: str) -> bool:
        if colors is None:
            return True
        for pos, square in enumerate(SLOTS[slot_id].squares):
            letter = scrambled[square]
            color = colors[square]
            if color is Color.GREEN:
                if word[pos] != letter:
                    return False
            elif mode == "strict":
                if color is Color.YELLOW:
                    if word[pos] == letter:
                        return False
                    if parity(square) is Parity.EVEN and letter not in word:
                        return False
                else:
                    if letter in word:
                        return False
        return True

    candidates = {
        sid: [w for w in sorted(word_list.words) if admits(sid, w)] for sid in SLOT_ORDER
    }
    target = Counter(scrambled.letters)
    found = []

    def rec(index: int, placed: dict[int, str], used: Counter, words: list[str]):
        if index == len(SLOT_ORDER):
            board = LetterBoard(tuple(placed[s] for s in SQUARES))
            if Counter(board.letters) != target:
                return
            if mode == "strict" and colors is not None:
                if color_board(scrambled, board) != colors:
                    return
            found.append(tuple(words))
            return
        slot = SLOTS[SLOT_ORDER[index]]
        for word in candidates[slot.id]:
            touched = []
            ok = True
            for square, letter in zip(slot.squares, word):
                if square in placed:
                    if placed[square] != letter:
                        ok = False
                        break
                else:
                    if used[letter] + 1 > target[letter]:
                        ok = False
                        break
                    placed[square] = letter
                    used[letter] += 1
                    touched.append(square)
            if ok:
                rec(index + 1, placed, used, words + [word])
            for square in touched:
                used[placed[square]] -= 1
                del placed[square]

    rec(0, {}, Counter(), [])
    return sorted(found)
