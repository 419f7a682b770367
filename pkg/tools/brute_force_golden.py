"""Freeze the binary search maxima by brute force over all 2^n words.

No necklace enumeration and no packed kernel: every word is scanned
directly for squares of length <= n in its square ``ww``.  Writes
``tests/golden/search_binary.csv`` with columns n,max_count,num_maximizers
where num_maximizers counts distinct least rotations among maximizing words.
"""

import argparse
import csv
import itertools
import sys


def circular_count(s):
    n = len(s)
    ww = s + s
    found = set()
    for i in range(n):
        for half in range(1, n // 2 + 1):
            if ww[i:i + half] == ww[i + half:i + 2 * half]:
                found.add(ww[i:i + 2 * half])
    return len(found)


def brute(n):
    best, maxers = -1, []
    for t in itertools.product("ab", repeat=n):
        s = "".join(t)
        c = circular_count(s)
        if c > best:
            best, maxers = c, [s]
        elif c == best:
            maxers.append(s)
    canon = {min(s[i:] + s[:i] for i in range(n)) for s in maxers}
    return best, len(canon)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--out", default="tests/golden/search_binary.csv")
    args = ap.parse_args()
    with open(args.out, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(["n", "max_count", "num_maximizers"])
        for n in range(1, args.n_max + 1):
            best, k = brute(n)
            out.writerow([n, best, k])
            fh.flush()
            print(n, best, k, file=sys.stderr)


if __name__ == "__main__":
    main()
