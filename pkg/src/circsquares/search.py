"""Exhaustive extremal search for circular square density.

For each length ``n`` the search visits every necklace (optionally one per
orbit under alphabet relabeling and/or reversal), counts its distinct
circular squares and keeps the maximum.  The word range ``[0, sigma^n)`` is
cut into contiguous blocks (prefix ranges); each block keeps the words
that are least in their orbit, so every orbit is counted exactly once.
Block results are merged in block order, so output does not depend on the
number of workers.
"""

from __future__ import annotations

import csv
import io
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

import numpy as np

from . import packed
from .squares import count_distinct_circular_squares
from .words import ALPHABET, Word

log = logging.getLogger(__name__)

WITNESS_CAP = 16
DEFAULT_BUDGET = 2**32
BLOCK_SIZE = 1 << 16

CSV_FIELDS = (
    "n", "sigma", "quotient", "max_count", "density_num", "density_den",
    "num_maximizers", "witnesses", "words_examined", "elapsed_ms",
)
QUOTIENTS = {
    "none": (False, False),
    "relabel": (True, False),
    "reversal": (False, True),
    "relabel+reversal": (True, True),
}


class BudgetExceeded(RuntimeError):
    pass


class CorruptCampaignFile(RuntimeError):
    pass


@dataclass
class SearchRecord:
    n: int
    sigma: int
    max_count: int
    witnesses: list[Word]
    num_maximizers: int
    words_examined: int
    quotient: str = "none"
    elapsed_ms: int = 0
    exhaustive: bool = True

    @property
    def density(self) -> Fraction:
        return Fraction(self.max_count, self.n)

    def csv_row(self) -> list[str]:
        d = self.density
        return [
            str(self.n), str(self.sigma), self.quotient, str(self.max_count),
            str(d.numerator), str(d.denominator), str(self.num_maximizers),
            ";".join(w.text for w in self.witnesses), str(self.words_examined),
            str(self.elapsed_ms),
        ]

    def same_result(self, other: SearchRecord) -> bool:
        """Equality ignoring wall-clock time."""
        return self.csv_row()[:-1] == other.csv_row()[:-1]


# ---------------------------------------------------------------------------
# necklaces


def _phi(m: int) -> int:
    return sum(1 for j in range(1, m + 1) if gcd(j, m) == 1)


def necklace_count(n: int, sigma: int) -> int:
    """``(1/n) * sum over d | n of phi(d) * sigma^(n/d)``."""
    total = sum(_phi(d) * sigma ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def _check_params(n: int, sigma: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 2 <= sigma <= 4:
        raise ValueError(f"sigma must be in 2..4, got {sigma}")


def enumerate_necklaces(n: int, sigma: int) -> Iterator[Word]:
    """Least rotations of all length-``n`` words, in lexicographic order.

    Uses the FKM prenecklace successor rule; a prenecklace whose last
    Lyndon period divides ``n`` is a necklace.
    """
    _check_params(n, sigma)
    a = [0] * n
    emitted = 1
    yield Word("a" * n, sigma)
    while True:
        i = n - 1
        while i >= 0 and a[i] == sigma - 1:
            i -= 1
        if i < 0:
            break
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = a[j - i - 1]
        if n % (i + 1) == 0:
            emitted += 1
            yield Word("".join(ALPHABET[s] for s in a), sigma)
    expected = necklace_count(n, sigma)
    if emitted != expected:
        raise RuntimeError(f"emitted {emitted} necklaces, formula gives {expected}")


# ---------------------------------------------------------------------------
# search


@dataclass
class _Partial:
    examined: int = 0
    best: int = -1
    maximizers: int = 0
    witnesses: list[int] = field(default_factory=list)

    def absorb(self, other: _Partial) -> None:
        self.examined += other.examined
        if other.best > self.best:
            self.best, self.maximizers, self.witnesses = other.best, 0, []
        if other.best == self.best:
            self.maximizers += other.maximizers
            self.witnesses = sorted(self.witnesses + other.witnesses)[:WITNESS_CAP]


def _search_block(args: tuple[int, int, int, int, bool, bool]) -> _Partial:
    lo, hi, n, sigma, relabel, reversal = args
    x = packed.from_index(np.arange(lo, hi, dtype=np.uint64), n, sigma)
    x = x[packed.canonical_mask(x, n, sigma, relabel, reversal)]
    part = _Partial(examined=int(x.size))
    if x.size == 0:
        return part
    counts = packed.circular_square_counts(x, n, sigma)
    part.best = int(counts.max())
    hits = x[counts == part.best]
    part.maximizers = int(hits.size)
    part.witnesses = [int(v) for v in np.sort(hits)[:WITNESS_CAP]]
    return part


def _blocks(n: int, sigma: int, relabel: bool, reversal: bool) -> list[tuple]:
    total = sigma**n
    return [
        (lo, min(lo + BLOCK_SIZE, total), n, sigma, relabel, reversal)
        for lo in range(0, total, BLOCK_SIZE)
    ]


def max_square_density(
    n: int,
    sigma: int = 2,
    quotient: str = "none",
    jobs: int = 1,
    budget: int | None = DEFAULT_BUDGET,
    executor: ProcessPoolExecutor | None = None,
) -> SearchRecord:
    """Maximum distinct circular squares over all length-``n`` necklaces.

    ``budget`` caps the necklace count (``None`` disables the guard).
    Witnesses are the lexicographically least maximizers, at most
    :data:`WITNESS_CAP`; each is re-counted with the run-based counter.
    """
    _check_params(n, sigma)
    packed.check_length(n, sigma)
    if quotient not in QUOTIENTS:
        raise ValueError(f"unknown quotient {quotient!r}; choose from {sorted(QUOTIENTS)}")
    estimate = necklace_count(n, sigma)
    if budget is not None and estimate > budget:
        raise BudgetExceeded(f"{estimate} necklaces at n={n}, sigma={sigma} exceed budget {budget}")
    relabel, reversal = QUOTIENTS[quotient]
    t0 = time.perf_counter()
    tasks = _blocks(n, sigma, relabel, reversal)
    if executor is not None:
        parts = executor.map(_search_block, tasks)
    elif jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_block, tasks))
    else:
        parts = map(_search_block, tasks)
    total = _Partial()
    for part in parts:
        total.absorb(part)
    if quotient == "none" and total.examined != estimate:
        raise RuntimeError(f"examined {total.examined} necklaces, formula gives {estimate}")
    witnesses = [Word(packed.unpack(v, n, sigma), sigma) for v in total.witnesses]
    for w in witnesses:
        if count_distinct_circular_squares(w) != total.best:
            raise RuntimeError(f"witness {w.text} does not reproduce count {total.best}")
    return SearchRecord(
        n=n, sigma=sigma, max_count=total.best, witnesses=witnesses,
        num_maximizers=total.maximizers, words_examined=total.examined,
        quotient=quotient, elapsed_ms=round((time.perf_counter() - t0) * 1000),
    )


def sample_square_density(n: int, sigma: int, samples: int, seed: int = 0) -> SearchRecord:
    """Non-exhaustive probe: best of ``samples`` uniformly random words."""
    _check_params(n, sigma)
    packed.check_length(n, sigma)
    if samples < 1:
        raise ValueError("samples must be positive")
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    idx = np.zeros(samples, dtype=np.uint64)
    digits = rng.integers(0, sigma, size=(samples, n), dtype=np.uint64)
    for i in range(n):
        idx = idx * np.uint64(sigma) + digits[:, i]
    x = packed.from_index(idx, n, sigma)
    counts = packed.circular_square_counts(x, n, sigma)
    best = int(counts.max())
    hits = sorted({packed.unpack(v, n, sigma) for v in x[counts == best]})
    canon = sorted({min(h[i:] + h[:i] for i in range(n)) for h in hits})
    return SearchRecord(
        n=n, sigma=sigma, max_count=best,
        witnesses=[Word(t, sigma) for t in canon[:WITNESS_CAP]],
        num_maximizers=int((counts == best).sum()), words_examined=samples,
        quotient=f"sampled(seed={seed})", exhaustive=False,
        elapsed_ms=round((time.perf_counter() - t0) * 1000),
    )


# ---------------------------------------------------------------------------
# campaigns


def parse_row(row: list[str], sigma: int, quotient: str) -> SearchRecord:
    """Validate one CSV row; raise :class:`CorruptCampaignFile` on any defect."""
    if len(row) != len(CSV_FIELDS):
        raise CorruptCampaignFile(f"expected {len(CSV_FIELDS)} fields, got {len(row)}: {row}")
    try:
        n, s, max_count, num, den, nmax, examined, elapsed = (
            int(row[i]) for i in (0, 1, 3, 4, 5, 6, 8, 9)
        )
    except ValueError as exc:
        raise CorruptCampaignFile(f"non-integer field in {row}") from exc
    if s != sigma or row[2] != quotient:
        raise CorruptCampaignFile(f"row {row} was produced with different parameters")
    if n < 1 or Fraction(max_count, n) != Fraction(num, den) or gcd(num, den) != 1:
        raise CorruptCampaignFile(f"density field inconsistent in {row}")
    texts = row[7].split(";") if row[7] else []
    if not texts or len(texts) > WITNESS_CAP or nmax < len(texts):
        raise CorruptCampaignFile(f"witness list malformed in {row}")
    allowed = set(ALPHABET[:sigma])
    if any(len(t) != n or not set(t) <= allowed for t in texts):
        raise CorruptCampaignFile(f"witness of wrong shape in {row}")
    if examined < 1 or elapsed < 0 or max_count * 100 > 314 * n:
        raise CorruptCampaignFile(f"counter fields out of range in {row}")
    return SearchRecord(
        n=n, sigma=s, max_count=max_count, witnesses=[Word(t, sigma) for t in texts],
        num_maximizers=nmax, words_examined=examined, quotient=quotient,
        elapsed_ms=elapsed,
    )


def _load_completed(path: str, ns: list[int], sigma: int, quotient: str) -> list[SearchRecord]:
    with open(path, newline="") as fh:
        text = fh.read()
    if not text:
        return []
    if not text.endswith("\n"):
        raise CorruptCampaignFile(f"{path}: last row is truncated")
    rows = list(csv.reader(io.StringIO(text)))
    if tuple(rows[0]) != CSV_FIELDS:
        raise CorruptCampaignFile(f"{path}: unexpected header {rows[0]}")
    done = [parse_row(r, sigma, quotient) for r in rows[1:]]
    if [r.n for r in done] != ns[: len(done)]:
        raise CorruptCampaignFile(
            f"{path}: rows for n={[r.n for r in done]} are not a prefix of the requested range"
        )
    return done


def search_campaign(
    n_range: Iterable[int],
    sigma: int = 2,
    jobs: int = 1,
    output_path: str | os.PathLike | None = None,
    quotient: str = "none",
    budget: int | None = DEFAULT_BUDGET,
    timing: bool = True,
) -> list[SearchRecord]:
    """Run :func:`max_square_density` for each ``n`` in ascending order.

    With ``output_path`` every finished row is appended and flushed at
    once.  An existing file is validated and its rows are reused, so an
    interrupted campaign resumes where it stopped.  ``timing=False``
    records ``elapsed_ms`` as 0, which makes the file byte-reproducible.
    """
    ns = sorted(set(n_range))
    if not ns:
        raise ValueError("empty n range")
    for n in ns:
        _check_params(n, sigma)
        packed.check_length(n, sigma)
    if quotient not in QUOTIENTS:
        raise ValueError(f"unknown quotient {quotient!r}")
    done: list[SearchRecord] = []
    fh = None
    if output_path is not None:
        path = os.fspath(output_path)
        if os.path.exists(path) and os.path.getsize(path) > 0:
            done = _load_completed(path, ns, sigma, quotient)
            fh = open(path, "a", newline="")
            if done:
                log.info("resuming %s: %d rows already complete", path, len(done))
        else:
            fh = open(path, "w", newline="")
            fh.write(",".join(CSV_FIELDS) + "\n")
            fh.flush()
    records = list(done)
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in ns[len(done):]:
            rec = max_square_density(n, sigma, quotient, budget=budget, executor=pool)
            if not timing:
                rec.elapsed_ms = 0
            records.append(rec)
            log.info("n=%d max=%d density=%s", n, rec.max_count, rec.density)
            if fh is not None:
                fh.write(",".join(rec.csv_row()) + "\n")
                fh.flush()
    finally:
        if pool is not None:
            pool.shutdown()
        if fh is not None:
            fh.close()
    return records
