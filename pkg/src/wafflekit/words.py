"""Five-letter word lists: loading, swappable-word detection, bigram stats.

A word is *swappable* when exchanging its 2nd and 4th letters yields a
different word that is also in the list (SMILE/SLIME).  Swappable pairs are
a classic source of puzzles with two valid answers, so generation filters
them out by default; solving keeps them.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "WordList",
    "WordListError",
    "load_word_list",
    "parse_word_list",
    "default_word_list",
    "swap24",
    "swappable_words",
    "filter_swappable",
    "zero_bigram_count",
]

WORD_LENGTH = 5


class WordListError(ValueError):
    """Malformed word-list input, reported with its line number."""


@dataclass(frozen=True)
class WordList:
    """An immutable set of distinct uppercase five-letter words."""

    words: frozenset[str]
    source_name: str = "unnamed"
    _sorted: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for word in self.words:
            if len(word) != WORD_LENGTH or not word.isalpha() or not word.isupper():
                raise ValueError(f"invalid word {word!r}")
        object.__setattr__(self, "_sorted", tuple(sorted(self.words)))

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self._sorted)

    def sorted_words(self) -> tuple[str, ...]:
        return self._sorted


def parse_word_list(text: str, source_name: str = "inline") -> WordList:
    """Parse one word per line; blank lines and ``#`` comments are skipped.

    Words are uppercased and deduplicated; anything that is not exactly five
    ASCII letters is rejected with its line number.
    """
    words = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word = line.upper()
        if len(word) != WORD_LENGTH or not all("A" <= c <= "Z" for c in word):
            raise WordListError(f"{source_name}:{lineno}: not a five-letter word: {line!r}")
        words.add(word)
    return WordList(frozenset(words), source_name)


def load_word_list(path: str | Path) -> WordList:
    path = Path(path)
    return parse_word_list(path.read_text(encoding="ascii"), path.name)


def default_word_list() -> WordList:
    """The bundled common-words list."""
    text = importlib.resources.files("wafflekit.data").joinpath("words5.txt").read_text("ascii")
    return parse_word_list(text, "bundled")


def swap24(word: str) -> str:
    """Exchange the 2nd and 4th letters (the even squares of a slot)."""
    return word[0] + word[3] + word[2] + word[1] + word[4]


def swappable_words(word_list: WordList) -> set[str]:
    """All words whose 2nd/4th-letter swap is a different listed word.

    Symmetric by construction: a word is reported iff its partner is.
    """
    found = set()
    for word in word_list:
        partner = swap24(word)
        if partner != word and partner in word_list:
            found.add(word)
    return found


def filter_swappable(word_list: WordList) -> WordList:
    """Drop every swappable word (and hence every partner of one)."""
    keep = word_list.words - swappable_words(word_list)
    return WordList(keep, f"{word_list.source_name} (swappable removed)")


def zero_bigram_count(word_list: WordList) -> int:
    """How many of the 676 ordered letter pairs occur in no word.

    A pair counts as occurring when it appears as a contiguous two-letter
    substring of some word.
    """
    seen = set()
    for word in word_list:
        for i in range(WORD_LENGTH - 1):
            seen.add(word[i : i + 2])
    return 26 * 26 - len(seen)
