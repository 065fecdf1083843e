"""Exact permutation arithmetic on the points ``{1..n}``.

Permutations are stored in image form: ``image[i-1]`` is where point ``i``
goes.  Points are 1-based throughout so that square numbers of the puzzle
board can be used directly as points; conversion to 0-based indices happens
only inside this module.

The module also carries the exact counting functions used by the difficulty
reports: harmonic averages of cycle counts, the cycle-count distribution of
the symmetric group (as unbounded integers), partition counts, and the
number of permutations made of ``k`` disjoint 2-cycles.  Everything here is
a pure function of its arguments and safe to call from any thread.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Permutation",
    "CycleDecomposition",
    "SwapPlan",
    "decompose",
    "swap_distance",
    "transposition_plan",
    "average_cycle_count",
    "harmonic_excess",
    "cycle_count_distribution",
    "partition_count",
    "k_disjoint_2cycle_count",
    "bfs_swap_distance_oracle",
    "parse_cycles",
    "format_cycles",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` in image form.

    >>> g = Permutation((2, 1, 3))
    >>> g(1), g(2), g(3)
    (2, 1, 3)
    """

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.n:
            raise ValueError(f"point {point} outside 1..{self.n}")
        return self.image[point - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        """Build a permutation from disjoint cycles; omitted points are fixed.

        >>> Permutation.from_cycles(4, [(1, 2)]).image
        (2, 1, 3, 4)
        """
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= n:
                    raise ValueError(f"point {point} outside 1..{n}")
                if point in seen:
                    raise ValueError(f"point {point} repeated across cycles")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + type(cycle)(cycle[:1])):
                image[a - 1] = b
        return cls(tuple(image))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if a == b:
            raise ValueError("a transposition needs two distinct points")
        return cls.from_cycles(n, [(a, b)])

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, target in enumerate(self.image, start=1):
            inv[target - 1] = i
        return Permutation(tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: apply ``self`` first, then ``other``.

        >>> a = Permutation.transposition(3, 1, 2)
        >>> b = Permutation.transposition(3, 2, 3)
        >>> a.then(b).image     # 1 -> 2 -> 3
        (3, 1, 2)
        """
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(other.image[t - 1] for t in self.image))

    def cycle_count(self) -> int:
        return len(decompose(self).cycles)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.image, start=1) if i == t)

    def __str__(self) -> str:
        return format_cycles(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of a permutation, fixed points included as 1-cycles.

    Canonical form: every cycle starts at its smallest point and cycles are
    sorted by that leading point, so two decompositions are comparable.
    """

    n: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.n, self.cycles)


def decompose(g: Permutation) -> CycleDecomposition:
    """Factor ``g`` into disjoint cycles in canonical order.

    >>> decompose(Permutation((2, 1, 3, 4))).cycles
    ((1, 2), (3,), (4,))
    """
    seen = [False] * g.n
    cycles: list[tuple[int, ...]] = []
    for start in range(1, g.n + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        point = g(start)
        while point != start:
            cycle.append(point)
            seen[point - 1] = True
            point = g(point)
        cycles.append(tuple(cycle))
    return CycleDecomposition(g.n, tuple(cycles))


def swap_distance(g: Permutation, h: Permutation | None = None) -> int:
    """Fewest swaps turning ``g`` into ``h`` (identity when ``h`` is omitted).

    This is ``n - c(g^-1 h)``: distance in the graph whose edges join
    permutations differing by one transposition.

    >>> swap_distance(Permutation((2, 3, 1)))
    2
    """
    if h is None:
        h = Permutation.identity(g.n)
    if h.n != g.n:
        raise ValueError(f"size mismatch: {g.n} vs {h.n}")
    relative = g.inverse().then(h)
    return g.n - relative.cycle_count()


@dataclass(frozen=True)
class SwapPlan:
    """An ordered sequence of swaps whose left-to-right product is a target
    permutation."""

    n: int
    swaps: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.swaps)

    def compose(self) -> Permutation:
        g = Permutation.identity(self.n)
        for a, b in self.swaps:
            g = g.then(Permutation.transposition(self.n, a, b))
        return g


def transposition_plan(g: Permutation) -> SwapPlan:
    """A minimal swap sequence realizing ``g``, exactly ``n - c(g)`` long.

    Each canonical cycle ``(x1, ..., xk)`` contributes the swaps
    ``(xk, xk-1), ..., (x3, x2), (x2, x1)`` in that order; composed left to
    right (and applied in order to a board) they realize the cycle.

    >>> transposition_plan(Permutation.from_cycles(3, [(1, 2, 3)])).swaps
    ((3, 2), (2, 1))
    """
    swaps: list[tuple[int, int]] = []
    for cycle in decompose(g).cycles:
        for i in range(len(cycle) - 1, 0, -1):
            swaps.append((cycle[i], cycle[i - 1]))
    return SwapPlan(g.n, tuple(swaps))


def average_cycle_count(n: int) -> Fraction:
    """Mean number of disjoint cycles over all of ``S_n``, exactly.

    Equals the harmonic number ``H_n = 1 + 1/2 + ... + 1/n``.

    >>> average_cycle_count(3)
    Fraction(11, 6)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def harmonic_excess(n: int) -> float:
    """``H_n - log(n)``: how far the mean cycle count sits above ``log n``."""
    return float(average_cycle_count(n)) - math.log(n)


def cycle_count_distribution(n: int) -> tuple[int, ...]:
    """Entry ``k`` (1-based) counts permutations of ``S_n`` with ``k`` cycles.

    Computed by the row recurrence ``row[n+1][k] = row[n][k-1] + n*row[n][k]``
    in exact integer arithmetic; the entries sum to ``n!``.

    >>> cycle_count_distribution(3)
    (2, 3, 1)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    row = [1]
    for m in range(1, n):
        row = [0] + row
        for k in range(m):
            row[k] += m * row[k + 1]
        row[m] = 1
        # row now has m+1 entries: row[k-1] counts c = k
    return tuple(row)


def partition_count(n: int) -> int:
    """Number of integer partitions of ``n``.

    >>> [partition_count(k) for k in range(6)]
    [1, 1, 2, 3, 5, 7]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            counts[total] += counts[total - part]
    return counts[n]


def k_disjoint_2cycle_count(n: int, k: int) -> int:
    """Permutations of ``S_n`` that are products of ``k`` disjoint 2-cycles.

    >>> k_disjoint_2cycle_count(4, 2)
    3
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if 2 * k > n:
        raise ValueError(f"cannot fit {k} disjoint 2-cycles in {n} points")
    return math.factorial(n) // (2**k * math.factorial(k) * math.factorial(n - 2 * k))


_BFS_LIMIT = 8


@lru_cache(maxsize=None)
def _bfs_distance_table(n: int) -> dict[tuple[int, ...], int]:
    # One breadth-first sweep of the whole group; cached per n.
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    identity = tuple(range(1, n + 1))
    dist = {identity: 0}
    frontier = deque([identity])
    while frontier:
        image = frontier.popleft()
        d = dist[image] + 1
        for a, b in pairs:
            neighbor = list(image)
            neighbor[a], neighbor[b] = neighbor[b], neighbor[a]
            key = tuple(neighbor)
            if key not in dist:
                dist[key] = d
                frontier.append(key)
    return dist


def bfs_swap_distance_oracle(g: Permutation) -> int:
    """Swap distance from the identity found by brute breadth-first search.

    Independent of :func:`swap_distance`; guarded to ``n <= 8`` because the
    search walks all ``n!`` permutations.
    """
    if g.n > _BFS_LIMIT:
        raise ValueError(f"oracle is limited to n <= {_BFS_LIMIT}, got n = {g.n}")
    return _bfs_distance_table(g.n)[g.image]


_CYCLE_TEXT = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2)(4,5,6)"``; fixed points may be
    omitted.  The identity may be written ``"()"``.

    >>> parse_cycles("(1,2)(4,5,6)", 6).image
    (2, 1, 3, 5, 6, 4)
    """
    stripped = text.replace(" ", "")
    if not stripped:
        raise ValueError("empty permutation text")
    if _CYCLE_TEXT.sub("", stripped):
        raise ValueError(f"stray characters in permutation text: {text!r}")
    cycles = []
    for body in _CYCLE_TEXT.findall(stripped):
        if not body:
            continue
        try:
            points = tuple(int(p) for p in body.split(","))
        except ValueError:
            raise ValueError(f"bad cycle {body!r} in {text!r}") from None
        cycles.append(points)
    return Permutation.from_cycles(n, cycles)


def format_cycles(g: Permutation) -> str:
    """Render in cycle notation, omitting fixed points; identity is ``"()"``.

    >>> format_cycles(Permutation((2, 1, 3)))
    '(1,2)'
    """
    parts = [
        "(" + ",".join(str(p) for p in cycle) + ")"
        for cycle in decompose(g).cycles
        if len(cycle) > 1
    ]
    return "".join(parts) if parts else "()"
