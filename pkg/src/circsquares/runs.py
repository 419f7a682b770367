"""Maximal repetitions (runs) via longest Lyndon words.

Every run of period ``p`` has a Lyndon root that is the longest Lyndon word
starting at its position, for one of the two alphabet orders.  Computing the
Lyndon array for both orders and extending each candidate root left and
right therefore finds every run.
"""

from __future__ import annotations

from typing import NamedTuple

from .words import smallest_period


class Run(NamedTuple):
    start: int
    end: int  # exclusive
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start


def _lyndon_array(s: str) -> list[int]:
    """``lam[i]`` = length of the longest Lyndon word starting at ``i``.

    The word ends right before the next suffix that is lexicographically
    smaller than suffix ``i`` (a proper prefix counts as smaller).
    """
    n = len(s)
    order = sorted(range(n), key=lambda i: s[i:])
    rank = [0] * n
    for r, i in enumerate(order):
        rank[i] = r
    lam = [0] * n
    stack: list[int] = []
    # next smaller rank to the right
    for i in range(n - 1, -1, -1):
        while stack and rank[stack[-1]] > rank[i]:
            stack.pop()
        lam[i] = (stack[-1] if stack else n) - i
        stack.append(i)
    return lam


def _lcp(s: str, i: int, j: int) -> int:
    """Longest common prefix of ``s[i:]`` and ``s[j:]``, by galloping slices."""
    limit = len(s) - max(i, j)
    if limit <= 0 or s[i] != s[j]:
        return 0
    lo, step = 1, 1
    # gallop until mismatch or limit
    while True:
        hi = min(lo + step, limit)
        if s[i + lo:i + hi] != s[j + lo:j + hi]:
            break
        if hi == limit:
            return limit
        lo = hi
        step *= 2
    # s[i:i+lo] == s[j:j+lo], mismatch somewhere before hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if s[i + lo:i + mid] == s[j + lo:j + mid]:
            lo = mid
        else:
            hi = mid
    return lo


def compute_runs(s: str) -> list[Run]:
    """All runs of ``s`` sorted by (start, period)."""
    n = len(s)
    if n < 2:
        return []
    letters = sorted(set(s))
    flip = str.maketrans(dict(zip(letters, reversed(letters))))
    rev = s[::-1]
    found: set[Run] = set()
    for variant in (s, s.translate(flip)):
        lam = _lyndon_array(variant)
        last: dict[int, Run] = {}
        for i in range(n - 1, -1, -1):
            p = lam[i]
            if 2 * p > n:
                continue
            known = last.get(p)
            if known is not None and known.start <= i and i + p <= known.end:
                continue
            right = _lcp(s, i, i + p)
            # common suffix of s[:i] and s[:i+p]
            left = _lcp(rev, n - i, n - i - p) if i > 0 else 0
            if left + right >= p:
                run = Run(i - left, i + p + right, p)
                found.add(run)
                last[p] = run
    return sorted(found, key=lambda r: (r.start, r.period))


def runs_oracle(s: str) -> list[Run]:
    """Quadratic-per-period reference: extend every period-``p`` stretch."""
    n = len(s)
    out = []
    for p in range(1, n // 2 + 1):
        j = 0
        while j < n - p:
            if s[j] != s[j + p]:
                j += 1
                continue
            k = j
            while k < n - p and s[k] == s[k + p]:
                k += 1
            # s[j:k+p] has period p
            if k - j >= p:
                # a stretch whose least period is smaller is found at that period
                if smallest_period(s[j:k + p]) == p:
                    out.append(Run(j, k + p, p))
            j = k + 1
    return sorted(out, key=lambda r: (r.start, r.period))
