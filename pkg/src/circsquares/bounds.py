"""Checkers for the rightmost-occurrence lemmas and the density ceilings.

Every comparison is done in integers or :class:`fractions.Fraction`.  A
failed check is reported as a :class:`Counterexample`; sweeping many words
is done by :func:`verify_lemma`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd
from typing import Callable, Iterator

from .squares import (
    _as_circular,
    count_distinct_circular_squares,
    fs_double_squares,
    rightmost_starts,
    start_multiplicities,
)
from .words import ALPHABET, CircularWord, Word, is_period, smallest_period

QUARTER_ROUNDING = "s = w[ceil(n/4)-1 .. ceil(n/2)-1] (0-based, inclusive); quarter starts 0..ceil(n/4)-1"


@dataclass(frozen=True)
class QuarterReport:
    host: Word
    s: Word
    s_aperiodic: bool
    first_quarter_lengths: frozenset[int]
    uniform: bool
    rounding: str = QUARTER_ROUNDING

    @property
    def holds(self) -> bool:
        return not self.s_aperiodic or self.uniform


@dataclass(frozen=True)
class FsBoundReport:
    host: Word
    fs_count: int
    leftmost_u_len: int | None
    bound: Fraction | None
    holds: bool


@dataclass(frozen=True)
class DensityReport:
    n: int
    count: int
    density: Fraction
    below_314: bool
    meets_125: bool


def check_two_rightmost(w: Word) -> bool:
    if len(w) == 0:
        raise ValueError("operation is undefined on the empty word")
    return max(start_multiplicities(w.text).values(), default=0) <= 2


def check_quarter_lemma(w: Word) -> QuarterReport:
    """Check the first-quarter uniformity claim on the doubled word ``ww``.

    Only squares of length at most ``n`` are considered.  Under the
    rounding rule :data:`QUARTER_ROUNDING`, when the slice ``s`` is
    aperiodic all rightmost occurrences that start in the first quarter
    must have the same length.
    """
    n = len(w)
    if n < 8:
        raise ValueError(f"quarter lemma needs |w| >= 8, got {n}")
    q, h = ceil(n / 4), ceil(n / 2)
    s = w.text[q - 1:h]
    lengths = frozenset(
        len(t) for t, i in rightmost_starts(w.text + w.text, n).items() if i < q
    )
    return QuarterReport(
        host=w,
        s=Word(s, w.sigma),
        s_aperiodic=2 * smallest_period(s) > len(s),
        first_quarter_lengths=lengths,
        uniform=len(lengths) <= 1,
    )


def check_extend_period(w: Word, a: str, b: str) -> bool:
    """If ``aw`` and ``wb`` are both periodic, their periods must agree."""
    if len(w) == 0:
        raise ValueError("operation is undefined on the empty word")
    for c in (a, b):
        if len(c) != 1 or c not in ALPHABET:
            raise ValueError(f"expected a single letter, got {c!r}")
    aw, wb = a + w.text, w.text + b
    p, q = smallest_period(aw), smallest_period(wb)
    if 2 * p > len(aw) or 2 * q > len(wb):
        return True
    return p == q


def check_fs_bound(x: Word) -> FsBoundReport:
    """FS-double squares of ``x`` are at most ``5/6 |x| - 1/3 |u|``.

    ``u`` is the short root of the leftmost FS-double square; with no
    FS-double square the bound is vacuous.
    """
    if len(x) < 10:
        raise ValueError(f"FS bound needs |x| >= 10, got {len(x)}")
    doubles = fs_double_squares(x)
    if not doubles:
        return FsBoundReport(x, 0, None, None, True)
    u_len = len(doubles[0].short_root)
    bound = Fraction(5, 6) * len(x) - Fraction(1, 3) * u_len
    return FsBoundReport(x, len(doubles), u_len, bound, len(doubles) <= bound)


def density_report(cw: CircularWord | Word) -> DensityReport:
    cw = _as_circular(cw)
    n = cw.n
    count = count_distinct_circular_squares(cw)
    return DensityReport(
        n=n,
        count=count,
        density=Fraction(count, n),
        below_314=count * 100 <= 314 * n,
        meets_125=count * 4 >= 5 * n,
    )


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class Counterexample:
    lemma: str
    word: str
    witnesses: dict

    def to_dict(self) -> dict:
        return {"lemma": self.lemma, "word": self.word, "witnesses": self.witnesses}


@dataclass
class VerificationReport:
    lemma: str
    n_max: int
    sigma: int
    samples: int
    seed: int
    sample_max_len: int
    words_checked: int = 0
    checks: int = 0
    vacuous: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def merge(self, outcome: tuple[int, int, list[Counterexample]]) -> None:
        checks, vacuous, bad = outcome
        self.words_checked += 1
        self.checks += checks
        self.vacuous += vacuous
        self.counterexamples.extend(bad)


Outcome = tuple[int, int, list]


def _sweep_two_rightmost(w: Word) -> Outcome:
    mult = start_multiplicities(w.text)
    over = {i: c for i, c in mult.items() if c > 2}
    if not over:
        return 1, 0, []
    starts = rightmost_starts(w.text)
    wit = {str(i): sorted(t for t, j in starts.items() if j == i) for i in sorted(over)}
    return 1, 0, [Counterexample("two-rightmost", w.text, {"positions": wit})]


def _sweep_quarter(w: Word) -> Outcome:
    r = check_quarter_lemma(w)
    if r.holds:
        return 1, int(not r.s_aperiodic), []
    wit = {"s": r.s.text, "lengths": sorted(r.first_quarter_lengths), "rounding": r.rounding}
    return 1, 0, [Counterexample("quarter", w.text, wit)]


def _sweep_extend_period(w: Word, sigma: int) -> Outcome:
    bad, vacuous, checks = [], 0, 0
    for a in ALPHABET[:sigma]:
        for b in ALPHABET[:sigma]:
            checks += 1
            aw, wb = a + w.text, w.text + b
            p, q = smallest_period(aw), smallest_period(wb)
            if 2 * p > len(aw) or 2 * q > len(wb):
                vacuous += 1
            elif p != q:
                bad.append(Counterexample(
                    "extend-period", w.text, {"a": a, "b": b, "period_aw": p, "period_wb": q}
                ))
    return checks, vacuous, bad


def _sweep_fs_bound(w: Word) -> Outcome:
    r = check_fs_bound(w)
    if r.holds:
        return 1, int(r.fs_count == 0), []
    wit = {"fs_count": r.fs_count, "u_len": r.leftmost_u_len, "bound": str(r.bound)}
    return 1, 0, [Counterexample("fs-bound", w.text, wit)]


def _sweep_fine_wilf(w: Word) -> Outcome:
    n = len(w)
    periods = [p for p in range(1, n + 1) if is_period(w, p)]
    checks = 0
    bad = []
    for p, q in itertools.combinations(periods, 2):
        g = gcd(p, q)
        if p + q <= n + g:
            checks += 1
            if not is_period(w, g):
                bad.append(Counterexample("fine-wilf", w.text, {"p": p, "q": q, "gcd": g}))
    return checks, int(checks == 0), bad


LEMMAS: dict[str, tuple[int, Callable]] = {
    "two-rightmost": (1, lambda w, sigma: _sweep_two_rightmost(w)),
    "quarter": (8, lambda w, sigma: _sweep_quarter(w)),
    "extend-period": (1, _sweep_extend_period),
    "fs-bound": (10, lambda w, sigma: _sweep_fs_bound(w)),
    "fine-wilf": (1, lambda w, sigma: _sweep_fine_wilf(w)),
}


def all_words(n: int, sigma: int) -> Iterator[Word]:
    letters = ALPHABET[:sigma]
    for t in itertools.product(letters, repeat=n):
        yield Word("".join(t), sigma)


def random_words(count: int, sigma: int, min_len: int, max_len: int, seed: int) -> Iterator[Word]:
    """Seeded corpus; lengths uniform in ``[min_len, max_len]``."""
    rng = random.Random(seed)
    letters = ALPHABET[:sigma]
    for _ in range(count):
        n = rng.randint(min_len, max_len)
        yield Word("".join(rng.choice(letters) for _ in range(n)), sigma)


def verify_lemma(
    lemma: str,
    n_max: int,
    sigma: int = 2,
    samples: int = 0,
    seed: int = 0,
    sample_max_len: int = 200,
) -> VerificationReport:
    """Exhaustive sweep over lengths up to ``n_max`` plus a seeded random corpus."""
    if lemma not in LEMMAS:
        raise KeyError(f"unknown lemma {lemma!r}; choose from {sorted(LEMMAS)}")
    if not 1 <= sigma <= len(ALPHABET):
        raise ValueError(f"sigma out of range: {sigma}")
    min_len, check = LEMMAS[lemma]
    report = VerificationReport(lemma, n_max, sigma, samples, seed, sample_max_len)
    for n in range(min_len, n_max + 1):
        for w in all_words(n, sigma):
            report.merge(check(w, sigma))
    if samples:
        if sample_max_len < min_len:
            raise ValueError(f"{lemma} needs sample lengths >= {min_len}")
        for w in random_words(samples, sigma, min_len, sample_max_len, seed):
            report.merge(check(w, sigma))
    return report
