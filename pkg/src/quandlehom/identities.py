"""Inner identities x y_1 y_2 ... y_k = x over a finite letter alphabet.

A word is a surjection tau: positions 1..k -> letters 1..m, held in canonical
form: letters are numbered by first occurrence, so "ba" and "ab" are the same
word.  Satisfaction on a table is an exhaustive scan over all n^(m+1)
assignments of x and the letter values.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .core import QuandleTable
from .errors import EmptyWord, NonLetterCharacter

_SCAN_CHUNK = 1 << 16


@dataclass(frozen=True)
class Word:
    """Canonical inner-identity word; tau holds 0-based letter indices."""

    tau: tuple[int, ...]

    def __post_init__(self):
        if not self.tau:
            raise EmptyWord("word must have at least one letter")
        top = -1
        for t in self.tau:
            if t > top + 1 or t < 0:
                raise ValueError(f"tau {self.tau!r} is not canonical")
            top = max(top, t)

    @property
    def length(self) -> int:
        return len(self.tau)

    @property
    def letters(self) -> int:
        return max(self.tau) + 1

    @property
    def text(self) -> str:
        return "".join(chr(ord("a") + t) for t in self.tau)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    @staticmethod
    def canonical(seq: Sequence[int]) -> "Word":
        """Renumber arbitrary letter indices by first occurrence."""
        mapping: dict[int, int] = {}
        tau = []
        for v in seq:
            if v not in mapping:
                mapping[v] = len(mapping)
            tau.append(mapping[v])
        return Word(tuple(tau))

    def letter_counts(self) -> list[int]:
        counts = [0] * self.letters
        for t in self.tau:
            counts[t] += 1
        return counts

    def repeat(self, times: int) -> "Word":
        return Word(self.tau * times)


def parse_word(text: str) -> Word:
    """Parse a lowercase word like "abab" into canonical form."""
    if not text:
        raise EmptyWord("empty word")
    for ch in text:
        if not "a" <= ch <= "z":
            raise NonLetterCharacter(ch)
    return Word.canonical([ord(ch) - ord("a") for ch in text])


@dataclass(frozen=True)
class Assignment:
    """Values for x and the m letters y_1..y_m."""

    x: int
    ys: tuple[int, ...]


@dataclass(frozen=True)
class SatisfactionReport:
    satisfied: bool
    witness: Optional[Assignment]
    tuples_checked: int


def satisfies(X: QuandleTable, w: Word) -> SatisfactionReport:
    """Exhaustively test x*w = x over all assignments.

    Iterates letter tuples lexicographically with x fastest and stops at the
    first violation; the composition of the right translations named by the
    word is computed for a whole block of letter tuples at once.
    """
    n = X.order
    m = w.letters
    R = X.np_table.T          # R[y] = images of the right translation by y
    target = np.arange(n, dtype=np.int64)
    total = n ** m
    block = max(1, _SCAN_CHUNK // max(1, n))
    weights = [n ** (m - 1 - j) for j in range(m)]
    checked = 0
    for lo in range(0, total, block):
        hi = min(total, lo + block)
        idx = np.arange(lo, hi, dtype=np.int64)
        ys = np.empty((hi - lo, m), dtype=np.int64)
        for j, wt in enumerate(weights):
            ys[:, j] = (idx // wt) % n
        comp = np.tile(target, (hi - lo, 1))
        for t in w.tau:
            comp = np.take_along_axis(R[ys[:, t]], comp, axis=1)
        bad = comp != target
        if bad.any():
            rows_bad = bad.any(axis=1)
            r = int(np.argmax(rows_bad))
            x = int(np.argmax(bad[r]))
            witness = Assignment(x=x, ys=tuple(int(v) for v in ys[r]))
            return SatisfactionReport(False, witness, checked + r * n + x + 1)
        checked += (hi - lo) * n
    return SatisfactionReport(True, None, checked)


@lru_cache(maxsize=65536)
def satisfies_cached(X: QuandleTable, w: Word) -> bool:
    return satisfies(X, w).satisfied


def word_permutation_holds(X: QuandleTable, w: Word, ys: Sequence[int]) -> bool:
    """Equivalent formulation: the translation composite for one letter tuple
    is the identity permutation."""
    from .core import Permutation, translate

    comp = Permutation.identity(X.order)
    for t in w.tau:
        comp = translate(X, ys[t]) * comp
    return comp.is_identity


def forces_triviality(w: Word) -> bool:
    """True when some letter occurs exactly once; then only trivial quandles
    can satisfy x*w = x."""
    return any(c == 1 for c in w.letter_counts())


def consecutive_type_bound(w: Word) -> Optional[int]:
    """gcd bound on the type forced by a two-letter word whose second letter
    forms one consecutive run; None when the word is not of that shape."""
    if w.letters != 2:
        return None
    mm = re.fullmatch(r"(a+)(b+)(a*)", w.text)
    if not mm:
        return None
    k = len(mm.group(2))
    return math.gcd(k, w.length - k)


def _restricted_growth(k: int, m: int):
    """All canonical letter sequences of length k using exactly m letters."""
    tau = [0] * k

    def rec(pos: int, top: int):
        if pos == k:
            if top + 1 == m:
                yield tuple(tau)
            return
        # not enough positions left to introduce the missing letters
        if m - 1 - top > k - pos:
            return
        for v in range(min(top + 1, m - 1) + 1):
            tau[pos] = v
            yield from rec(pos + 1, max(top, v))

    yield from rec(0, -1)


def enumerate_words(length: int, letters: int, filter: str = "all") -> list[Word]:
    """Canonical words of a given length on exactly ``letters`` letters.

    filter="nontrivial_candidates" drops words with a single-occurrence letter
    and words whose consecutive-run bound is 1; nothing else is pruned.
    """
    if length < 1 or not 1 <= letters <= length:
        raise ValueError("need length >= 1 and 1 <= letters <= length")
    if letters > 26:
        raise ValueError("letters limited to a-z")
    if filter not in ("all", "nontrivial_candidates"):
        raise ValueError(f"unknown filter {filter!r}")
    out = [Word(t) for t in _restricted_growth(length, letters)]
    if filter == "nontrivial_candidates":
        out = [w for w in out
               if not forces_triviality(w) and consecutive_type_bound(w) != 1]
    return out


def two_letter_universe(max_length: int, filter: str = "all") -> list[Word]:
    """All canonical words on at most two letters up to a length bound."""
    out: list[Word] = []
    for k in range(1, max_length + 1):
        for m in (1, 2):
            if m <= k:
                out.extend(enumerate_words(k, m, filter=filter))
    return out


@dataclass(frozen=True)
class ScanReport:
    """Per-(table, word) satisfaction matrix with per-word totals."""

    words: tuple[Word, ...]
    names: tuple[str, ...]
    matrix: tuple[tuple[bool, ...], ...]   # matrix[i][j]: table i satisfies word j
    counts: tuple[int, ...]                # satisfying tables per word

    def satisfied_by(self, j: int) -> list[str]:
        return [self.names[i] for i in range(len(self.names)) if self.matrix[i][j]]


def scan(corpus: Sequence[QuandleTable], words: Sequence[Word],
         names: Optional[Sequence[str]] = None) -> ScanReport:
    """Satisfaction of every word by every table, in stable input order."""
    words = tuple(words)
    if names is None:
        names = tuple(f"#{i}" for i in range(len(corpus)))
    matrix = tuple(
        tuple(satisfies(X, w).satisfied for w in words) for X in corpus)
    counts = tuple(sum(row[j] for row in matrix) for j in range(len(words)))
    return ScanReport(words=words, names=tuple(names), matrix=matrix,
                      counts=counts)
