"""Bit-packed batch kernels for the exhaustive necklace search.

A word of length ``n`` over ``sigma <= 4`` letters is packed into an unsigned
64-bit integer, ``b`` bits per symbol, first symbol most significant.  With
equal lengths, integer order is lexicographic order.

Circular squares of length ``2L <= n`` are exactly the length-``2L`` prefixes
of rotations whose first ``L`` symbols repeat at offset ``L``.  The prefix
bits identify the square text exactly, so distinct squares are distinct keys.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .squares import CeilingViolation, CEILING_DEN, CEILING_NUM
from .words import ALPHABET

MAX_BITS = 62
_SENTINEL = np.uint64(2**64 - 1)


def bits_per_symbol(sigma: int) -> int:
    if not 1 <= sigma <= 4:
        raise ValueError(f"packed kernels support sigma in 1..4, got {sigma}")
    return 1 if sigma <= 2 else 2


def check_length(n: int, sigma: int) -> int:
    b = bits_per_symbol(sigma)
    if n < 1 or n * b > MAX_BITS:
        raise ValueError(f"length {n} does not fit the packed layout for sigma {sigma}")
    return b


def pack(text: str, sigma: int) -> int:
    b = bits_per_symbol(sigma)
    x = 0
    for ch in text:
        x = (x << b) | (ord(ch) - 97)
    return x


def unpack(x: int, n: int, sigma: int) -> str:
    b = bits_per_symbol(sigma)
    m = (1 << b) - 1
    return "".join(ALPHABET[(int(x) >> ((n - 1 - i) * b)) & m] for i in range(n))


def from_index(idx: np.ndarray, n: int, sigma: int) -> np.ndarray:
    """Map base-``sigma`` word indices to the packed layout."""
    idx = idx.astype(np.uint64)
    b = bits_per_symbol(sigma)
    if (1 << b) == sigma:
        return idx
    out = np.zeros_like(idx)
    rest = idx.copy()
    s = np.uint64(sigma)
    for i in range(n):
        out |= (rest % s) << np.uint64(i * b)
        rest //= s
    return out


def rotations(x: np.ndarray, n: int, b: int) -> np.ndarray:
    """``R[:, i]`` is ``x`` rotated left by ``i`` symbols."""
    nb = n * b
    mask = np.uint64((1 << nb) - 1)
    R = np.empty((x.shape[0], n), dtype=np.uint64)
    R[:, 0] = x
    for i in range(1, n):
        sh = i * b
        R[:, i] = ((x << np.uint64(sh)) | (x >> np.uint64(nb - sh))) & mask
    return R


def _digits(x: np.ndarray, n: int, b: int) -> np.ndarray:
    m = np.uint64((1 << b) - 1)
    return np.stack([(x >> np.uint64((n - 1 - i) * b)) & m for i in range(n)], axis=1)


def _from_digits(d: np.ndarray, n: int, b: int) -> np.ndarray:
    out = np.zeros(d.shape[0], dtype=np.uint64)
    for i in range(n):
        out |= d[:, i].astype(np.uint64) << np.uint64((n - 1 - i) * b)
    return out


def canonical_mask(x: np.ndarray, n: int, sigma: int, relabel: bool = False,
                   reversal: bool = False) -> np.ndarray:
    """True where ``x`` is least in its orbit.

    The orbit always includes rotations; ``relabel`` adds alphabet
    permutations and ``reversal`` adds mirror images.
    """
    b = bits_per_symbol(sigma)
    keep = (x <= rotations(x, n, b).min(axis=1))
    if not (relabel or reversal):
        return keep
    # only rotation-least words can be orbit-least
    where = np.flatnonzero(keep)
    y = x[where]
    sub = np.ones(y.shape[0], dtype=bool)
    digits = _digits(y, n, b)
    perms = list(permutations(range(sigma))) if relabel else [tuple(range(sigma))]
    for perm in perms:
        mapped = np.asarray(perm, dtype=np.uint64)[digits]
        for flip in ((False, True) if reversal else (False,)):
            if perm == tuple(range(sigma)) and not flip:
                continue
            image = _from_digits(mapped[:, ::-1] if flip else mapped, n, b)
            sub &= y <= rotations(image, n, b).min(axis=1)
    keep[where] = sub
    return keep


def circular_square_counts(x: np.ndarray, n: int, sigma: int) -> np.ndarray:
    """Distinct squares of length ``<= n`` in each circular word of the batch."""
    b = bits_per_symbol(sigma)
    nb = n * b
    R = rotations(x, n, b)
    counts = np.zeros(x.shape[0], dtype=np.int64)
    for half in range(1, n // 2 + 1):
        prefix = R >> np.uint64(nb - half * b)
        is_square = prefix == np.roll(prefix, -half, axis=1)
        keys = np.where(is_square, R >> np.uint64(nb - 2 * half * b), _SENTINEL)
        keys.sort(axis=1)
        fresh = keys != _SENTINEL
        fresh[:, 1:] &= keys[:, 1:] != keys[:, :-1]
        counts += fresh.sum(axis=1)
    if counts.size and counts.max() * CEILING_DEN > CEILING_NUM * n:
        raise CeilingViolation(f"{int(counts.max())} distinct squares at length {n}")
    return counts
