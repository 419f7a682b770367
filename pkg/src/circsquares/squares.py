"""Distinct squares in linear and circular words.

The fast path lists, for every run of period ``p``, the squares whose
occurrence is among the last ``p`` starts inside the run.  The rightmost
occurrence of any square lies there, so these candidates cover every
distinct square, and exact dedup is by text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .runs import compute_runs
from .words import CircularWord, Word, _require_nonempty

CEILING_NUM, CEILING_DEN = 314, 100


class CeilingViolation(AssertionError):
    """A circular count exceeded 3.14 n; should be impossible."""


@dataclass(frozen=True, order=True)
class Square:
    root: Word

    @property
    def text(self) -> Word:
        return self.root + self.root

    def __len__(self) -> int:
        return 2 * len(self.root)

    def __str__(self) -> str:
        return self.root.text * 2


@dataclass(frozen=True, order=True)
class OccurrenceRecord:
    square: Square
    rightmost_start: int


@dataclass(frozen=True)
class DoubleSquare:
    position: int
    short_root: Word
    long_root: Word


def _square_of(text: str, sigma: int) -> Square:
    return Square(Word(text[: len(text) // 2], sigma))


# ---------------------------------------------------------------------------
# reference implementation


def oracle_square_texts(s: str, max_len: int | None = None) -> set[str]:
    """Every ``uu`` substring by direct comparison at every start and half."""
    n = len(s)
    cap = n if max_len is None else min(n, max_len)
    found = set()
    for i in range(n):
        for half in range(1, min(cap, n - i) // 2 + 1):
            if s[i:i + half] == s[i + half:i + 2 * half]:
                found.add(s[i:i + 2 * half])
    return found


def distinct_squares_oracle(w: Word) -> set[Square]:
    _require_nonempty(w)
    return {_square_of(t, w.sigma) for t in oracle_square_texts(w.text)}


# ---------------------------------------------------------------------------
# run-based enumeration


def _candidates(s: str, max_len: int | None = None) -> Iterator[tuple[int, int]]:
    """Yield ``(start, half)`` covering every rightmost square occurrence."""
    for start, end, p in compute_runs(s):
        length = end - start
        half = p
        while 2 * half <= length:
            if max_len is not None and 2 * half > max_len:
                break
            last = end - 2 * half
            for i in range(max(start, last - p + 1), last + 1):
                yield i, half
            half += p


def rightmost_starts(s: str, max_len: int | None = None) -> dict[str, int]:
    """Map each distinct square text (``|uu| <= max_len``) to its rightmost start."""
    best: dict[str, int] = {}
    for i, half in _candidates(s, max_len):
        t = s[i:i + 2 * half]
        if best.get(t, -1) < i:
            best[t] = i
    return best


def square_texts(s: str, max_len: int | None = None) -> set[str]:
    return {s[i:i + 2 * half] for i, half in _candidates(s, max_len)}


def count_distinct_squares(w: Word) -> int:
    _require_nonempty(w)
    return len(square_texts(w.text))


def _circular_texts(cw: CircularWord) -> set[str]:
    rep = cw.representative.text
    return square_texts(rep + rep, max_len=len(rep))


def _as_circular(cw: CircularWord | Word) -> CircularWord:
    return cw if isinstance(cw, CircularWord) else CircularWord(cw)


def distinct_circular_squares(cw: CircularWord | Word) -> set[Square]:
    """Squares of length at most ``n`` found in ``rep + rep``."""
    cw = _as_circular(cw)
    sigma = cw.representative.sigma
    return {_square_of(t, sigma) for t in _circular_texts(cw)}


def count_distinct_circular_squares(cw: CircularWord | Word) -> int:
    cw = _as_circular(cw)
    count = len(_circular_texts(cw))
    check_ceiling(count, cw.n)
    return count


def check_ceiling(count: int, n: int) -> None:
    if count * CEILING_DEN > CEILING_NUM * n:
        raise CeilingViolation(f"{count} distinct squares in a circular word of length {n}")


def rightmost_occurrences(w: Word, max_len: int | None = None) -> set[OccurrenceRecord]:
    """One record per distinct square, at its rightmost start.

    ``max_len`` restricts attention to squares with ``|uu| <= max_len``.
    """
    _require_nonempty(w)
    return {
        OccurrenceRecord(_square_of(t, w.sigma), i)
        for t, i in rightmost_starts(w.text, max_len).items()
    }


def start_multiplicities(s: str, max_len: int | None = None) -> dict[int, int]:
    counts: dict[int, int] = {}
    for i in rightmost_starts(s, max_len).values():
        counts[i] = counts.get(i, 0) + 1
    return counts


def rightmost_start_multiplicities(w: Word) -> dict[int, int]:
    _require_nonempty(w)
    return dict(sorted(start_multiplicities(w.text).items()))


def fs_double_squares(w: Word) -> list[DoubleSquare]:
    """Positions carrying exactly two rightmost occurrences, ascending."""
    _require_nonempty(w)
    by_start: dict[int, list[str]] = {}
    for t, i in rightmost_starts(w.text).items():
        by_start.setdefault(i, []).append(t)
    out = []
    for i in sorted(by_start):
        texts = by_start[i]
        if len(texts) == 2:
            short, long_ = sorted(texts, key=len)
            out.append(DoubleSquare(
                i, Word(short[: len(short) // 2], w.sigma), Word(long_[: len(long_) // 2], w.sigma)
            ))
    return out


def leftmost_fs_double_square(w: Word) -> DoubleSquare | None:
    found = fs_double_squares(w)
    return found[0] if found else None
