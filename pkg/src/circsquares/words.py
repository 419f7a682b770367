"""Basic word operations: construction, rotation, periods, canonical forms.

Words are lowercase-letter strings at the boundary; symbol ``'a'`` is index 0,
``'b'`` is index 1 and so on.  All positions are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
MAX_SIGMA = len(ALPHABET)


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word over the first ``sigma`` lowercase letters.

    Equality, ordering and hashing look only at the letters, so two words
    declared over different alphabets compare equal when their text matches.
    """

    text: str
    sigma: int = field(default=MAX_SIGMA, compare=False)

    def __post_init__(self):
        if not 1 <= self.sigma <= MAX_SIGMA:
            raise ValueError(f"alphabet size must be in 1..{MAX_SIGMA}, got {self.sigma}")
        allowed = ALPHABET[: self.sigma]
        if not set(self.text) <= set(allowed):
            pos, ch = next((i, c) for i, c in enumerate(self.text) if c not in allowed)
            raise ValueError(f"symbol {ch!r} at position {pos} is outside the alphabet {allowed!r}")

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.text[item], self.sigma)
        return ord(self.text[item]) - 97

    def __add__(self, other: Word) -> Word:
        return Word(self.text + other.text, max(self.sigma, other.sigma))

    @property
    def symbols(self) -> tuple[int, ...]:
        return tuple(ord(ch) - 97 for ch in self.text)

    def reversed(self) -> Word:
        return Word(self.text[::-1], self.sigma)

    def relabel(self, permutation: Sequence[int]) -> Word:
        """Apply an alphabet permutation given as ``permutation[old] = new``."""
        table = {97 + old: 97 + new for old, new in enumerate(permutation)}
        return Word(self.text.translate(table), max(self.sigma, len(permutation)))


def make_word(symbols: str | Iterable[int], sigma: int | None = None) -> Word:
    """Build a :class:`Word` from letters or integer symbol indices.

    When ``sigma`` is omitted the smallest alphabet containing every symbol
    is used (``"abd"`` gets sigma 4).
    """
    if isinstance(symbols, str):
        text = symbols
        for pos, ch in enumerate(text):
            if ch not in ALPHABET:
                raise ValueError(f"invalid symbol {ch!r} at position {pos}; use 'a'..'z'")
    else:
        idx = list(symbols)
        for pos, s in enumerate(idx):
            if not (isinstance(s, int) and 0 <= s < MAX_SIGMA):
                raise ValueError(f"invalid symbol index {s!r} at position {pos}")
        text = "".join(ALPHABET[s] for s in idx)
    if sigma is None:
        sigma = max((ord(ch) - 96 for ch in text), default=1)
    return Word(text, sigma)


def _require_nonempty(w: Word) -> None:
    if len(w) == 0:
        raise ValueError("operation is undefined on the empty word")


def rotate(w: Word, i: int) -> Word:
    """Cyclic left shift by ``i``: ``rotate("abc", 1) == "bca"``."""
    n = len(w)
    if not 0 <= i < n:
        raise IndexError(f"rotation index {i} out of range for length {n}")
    return Word(w.text[i:] + w.text[:i], w.sigma)


def border_array(s: str) -> list[int]:
    """Failure function: ``b[j]`` is the longest proper border of ``s[:j]``."""
    n = len(s)
    b = [0] * (n + 1)
    b[0] = -1
    k = -1
    for j in range(n):
        while k >= 0 and s[k] != s[j]:
            k = b[k]
        k += 1
        b[j + 1] = k
    b[0] = 0
    return b


def smallest_period(s: str) -> int:
    """Least period of a nonempty string, in linear time."""
    return len(s) - border_array(s)[len(s)]


def period(w: Word) -> int:
    _require_nonempty(w)
    return smallest_period(w.text)


def is_period(w: Word, p: int) -> bool:
    """True when ``w[i] == w[i+p]`` for every valid ``i`` (any ``p >= 1``)."""
    if p < 1:
        raise ValueError(f"period candidates must be positive, got {p}")
    t = w.text
    return t[p:] == t[: len(t) - p] if p < len(t) else True


def is_aperiodic(w: Word) -> bool:
    """A word is periodic when its period is at most half its length."""
    _require_nonempty(w)
    return 2 * period(w) > len(w)


def is_primitive(w: Word) -> bool:
    _require_nonempty(w)
    n = len(w)
    p = period(w)
    return not (p < n and n % p == 0)


def least_rotation_index(s: str) -> int:
    """Start of the lexicographically least rotation (Booth's algorithm)."""
    n = len(s)
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = f[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != ss[k + i + 1]:
            # here i == -1
            if c < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_rotation(w: Word) -> Word:
    _require_nonempty(w)
    k = least_rotation_index(w.text)
    return Word(w.text[k:] + w.text[:k], w.sigma)


def fine_wilf_holds(w: Word, p: int, q: int) -> bool:
    """Whether ``gcd(p, q)`` is a period of ``w``, given that ``p`` and ``q`` are.

    The periodicity lemma guarantees a True result whenever
    ``p + q <= len(w) + gcd(p, q)``; callers sweeping words assert that.
    """
    _require_nonempty(w)
    for x in (p, q):
        if not is_period(w, x):
            raise ValueError(f"{x} is not a period of {w.text!r}")
    return is_period(w, gcd(p, q))


@dataclass(frozen=True)
class CircularWord:
    """A word up to rotation, stored by its least rotation."""

    representative: Word

    def __post_init__(self):
        _require_nonempty(self.representative)
        canon = canonical_rotation(self.representative)
        object.__setattr__(self, "representative", canon)

    @classmethod
    def of(cls, w: Word | str) -> CircularWord:
        return cls(make_word(w) if isinstance(w, str) else w)

    @property
    def n(self) -> int:
        return len(self.representative)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return f"({self.representative.text})"
