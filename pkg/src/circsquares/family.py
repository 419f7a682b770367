"""The family f_k with about 1.25 n distinct circular squares.

``f_k = a(ba)^{k+1} a(ba)^{k+2} a(ba)^{k+1} a(ba)^{k+2}`` has length
``8k + 16`` and exactly ``10k + 16 - (k mod 2)`` distinct squares as a
circular word.  :func:`census` splits those squares by how many times
``aa`` occurs inside them.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from fractions import Fraction

from .squares import _circular_texts
from .words import CircularWord, Word


class CensusMismatch(RuntimeError):
    """A square of (f_k) fits none of the census categories."""


@dataclass(frozen=True)
class FamilyCensus:
    k: int
    no_aa: int
    one_aa: int
    two_aa_len_2k3: int
    two_aa_len_2k5: int
    full_length: int
    total: int

    def categories(self) -> tuple[int, int, int, int, int]:
        return astuple(self)[1:6]


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


def half_word(k: int) -> Word:
    """``x_k = a(ba)^{k+1} a(ba)^{k+2}``, so that ``f_k = x_k x_k``."""
    _check_k(k)
    return Word("a" + "ba" * (k + 1) + "a" + "ba" * (k + 2), 2)


def family_word(k: int) -> Word:
    x = half_word(k)
    return x + x


def predicted_count(k: int) -> int:
    _check_k(k)
    return 10 * k + 16 - (k % 2)


def density(k: int) -> Fraction:
    return Fraction(predicted_count(k), 8 * k + 16)


def expected_census(k: int) -> FamilyCensus:
    """Category sizes in closed form."""
    _check_k(k)
    cats = (2 * ((k + 2) // 2), k + 2, 2 * k + 2, 2 * k + 2, 4 * k + 8)
    return FamilyCensus(k, *cats, total=sum(cats))


def _count_aa(t: str) -> int:
    return sum(1 for i in range(len(t) - 1) if t[i] == t[i + 1] == "a")


def census(k: int) -> FamilyCensus:
    """Classify every distinct square of ``(f_k)`` by inner ``aa`` count."""
    f = family_word(k)
    n = len(f)
    counts = [0, 0, 0, 0, 0]
    for t in _circular_texts(CircularWord(f)):
        aa = _count_aa(t)
        half = len(t) // 2
        if aa == 0:
            counts[0] += 1
        elif aa == 1:
            counts[1] += 1
        elif aa == 2 and half == 2 * k + 3:
            counts[2] += 1
        elif aa == 2 and half == 2 * k + 5:
            counts[3] += 1
        elif aa >= 3 and len(t) == n:
            counts[4] += 1
        else:
            raise CensusMismatch(
                f"square {t!r} of (f_{k}) has {aa} inner 'aa' and root length {half}"
            )
    return FamilyCensus(k, *counts, total=sum(counts))
