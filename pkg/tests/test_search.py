import csv
import itertools
import os
from pathlib import Path

import numpy as np
import pytest

from circsquares import packed
from circsquares.search import (
    CSV_FIELDS,
    BudgetExceeded,
    CorruptCampaignFile,
    enumerate_necklaces,
    max_square_density,
    necklace_count,
    sample_square_density,
    search_campaign,
)
from circsquares.squares import count_distinct_circular_squares, oracle_square_texts
from circsquares.words import make_word

GOLDEN = Path(__file__).parent / "golden" / "search_binary.csv"


def golden_rows():
    with open(GOLDEN) as fh:
        return {int(r["n"]): (int(r["max_count"]), int(r["num_maximizers"])) for r in csv.DictReader(fh)}


def brute_max(n, sigma):
    best = -1
    for t in itertools.product("abcd"[:sigma], repeat=n):
        s = "".join(t)
        best = max(best, len(oracle_square_texts(s + s, n)))
    return best


@pytest.mark.parametrize("n,sigma,count", [(4, 2, 6), (1, 2, 2), (6, 2, 14), (3, 3, 11)])
def test_necklace_count_examples(n, sigma, count):
    assert necklace_count(n, sigma) == count
    assert sum(1 for _ in enumerate_necklaces(n, sigma)) == count


def test_necklaces_are_distinct_canonical_classes():
    for sigma, n_max in ((2, 10), (3, 6), (4, 4)):
        for n in range(1, n_max + 1):
            got = [w.text for w in enumerate_necklaces(n, sigma)]
            brute = sorted({
                min(s[i:] + s[:i] for i in range(n))
                for s in ("".join(t) for t in itertools.product("abcd"[:sigma], repeat=n))
            })
            assert got == brute


def test_enumerate_parameter_checks():
    with pytest.raises(ValueError):
        list(enumerate_necklaces(0, 2))
    with pytest.raises(ValueError):
        list(enumerate_necklaces(3, 5))


def test_pack_roundtrip():
    for sigma in (2, 3, 4):
        for s in ("a", "ab"[: min(sigma, 2)] * 5, "abcd"[:sigma] * 3):
            assert packed.unpack(packed.pack(s, sigma), len(s), sigma) == s


def test_from_index_preserves_order_sigma3():
    n = 5
    x = packed.from_index(np.arange(3**n, dtype=np.uint64), n, 3)
    texts = [packed.unpack(v, n, 3) for v in x]
    assert texts == ["".join(t) for t in itertools.product("abc", repeat=n)]
    assert np.all(np.diff(x.astype(np.int64)) > 0)


def test_kernel_matches_run_counter_random():
    rng = np.random.default_rng(3)
    for sigma, n in ((2, 40), (3, 25), (4, 31)):
        idx = np.zeros(300, dtype=np.uint64)
        for d in rng.integers(0, sigma, size=(n, 300), dtype=np.uint64):
            idx = idx * np.uint64(sigma) + d
        x = packed.from_index(idx, n, sigma)
        counts = packed.circular_square_counts(x, n, sigma)
        for v, c in zip(x, counts):
            assert c == count_distinct_circular_squares(make_word(packed.unpack(v, n, sigma)))


def test_orbit_mask_picks_one_per_orbit():
    for sigma, n in ((2, 9), (3, 5)):
        x = packed.from_index(np.arange(sigma**n, dtype=np.uint64), n, sigma)
        keep = packed.canonical_mask(x, n, sigma, relabel=True, reversal=True)
        reps = {packed.unpack(v, n, sigma) for v in x[keep]}
        perms = list(itertools.permutations("abcd"[:sigma]))
        seen = set()
        for t in itertools.product("abcd"[:sigma], repeat=n):
            s = "".join(t)
            orbit = set()
            for p in perms:
                m = s.translate(str.maketrans("abcd"[:sigma], "".join(p)))
                for r in (m, m[::-1]):
                    orbit |= {r[i:] + r[:i] for i in range(n)}
            seen.add(min(orbit))
        assert reps == seen


def test_small_maxima():
    r = max_square_density(2, 2)
    assert r.max_count == 1 and "aa" in [w.text for w in r.witnesses]
    assert max_square_density(8, 2).max_count == golden_rows()[8][0] == 6


def test_sigma3_matches_brute_force():
    for n in range(1, 8):
        assert max_square_density(n, 3).max_count == brute_max(n, 3)


def test_matches_golden_file_up_to_16():
    gold = golden_rows()
    for n in range(1, 17):
        r = max_square_density(n, 2)
        assert (r.max_count, r.num_maximizers) == gold[n], n


def test_quotients_preserve_maximum():
    for n in range(1, 15):
        base = max_square_density(n, 2)
        for q in ("relabel", "reversal", "relabel+reversal"):
            r = max_square_density(n, 2, quotient=q)
            assert (r.max_count, r.density) == (base.max_count, base.density), (n, q)
            assert r.words_examined <= base.words_examined


def test_record_invariants():
    for n in range(1, 15):
        r = max_square_density(n, 2)
        assert r.max_count * 100 <= 314 * n
        assert 1 <= len(r.witnesses) <= 16 and r.num_maximizers >= len(r.witnesses)
        assert [w.text for w in r.witnesses] == sorted(w.text for w in r.witnesses)
        for w in r.witnesses:
            assert len(w) == n
            assert min(w.text[i:] + w.text[:i] for i in range(n)) == w.text
            assert count_distinct_circular_squares(w) == r.max_count


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        max_square_density(12, 2, budget=100)
    assert max_square_density(12, 2, budget=None).max_count == 10


def test_parameter_errors():
    with pytest.raises(ValueError):
        max_square_density(0, 2)
    with pytest.raises(ValueError):
        max_square_density(5, 5)
    with pytest.raises(ValueError):
        max_square_density(5, 2, quotient="mirror")


def test_parallel_blocks_agree(monkeypatch):
    import circsquares.search as s
    monkeypatch.setattr(s, "BLOCK_SIZE", 64)
    a = max_square_density(12, 2, jobs=1)
    b = max_square_density(12, 2, jobs=2)
    assert a.same_result(b)


def read(path):
    return Path(path).read_bytes()


def test_campaign_csv(tmp_path):
    out = tmp_path / "r.csv"
    recs = search_campaign(range(1, 13), 2, output_path=out, timing=False)
    rows = list(csv.reader(open(out)))
    assert tuple(rows[0]) == CSV_FIELDS and len(rows) == 13
    assert [int(r[0]) for r in rows[1:]] == list(range(1, 13))
    for r, rec in zip(rows[1:], recs):
        assert r == rec.csv_row()
        assert int(r[3]) * 100 <= 314 * int(r[0])


def test_campaign_resume_is_byte_identical(tmp_path):
    full = tmp_path / "full.csv"
    search_campaign(range(1, 13), 2, output_path=full, timing=False)
    part = tmp_path / "part.csv"
    lines = read(full).splitlines(keepends=True)
    part.write_bytes(b"".join(lines[:6]))
    search_campaign(range(1, 13), 2, output_path=part, timing=False)
    assert read(part) == read(full)


def test_campaign_rerun_leaves_file_alone(tmp_path, monkeypatch):
    out = tmp_path / "r.csv"
    search_campaign(range(1, 9), 2, output_path=out)
    before = read(out)
    import circsquares.search as s
    monkeypatch.setattr(s, "max_square_density", lambda *a, **k: pytest.fail("recomputed"))
    recs = search_campaign(range(1, 9), 2, output_path=out)
    assert read(out) == before and len(recs) == 8


def test_timing_column_only_difference(tmp_path):
    a = search_campaign(range(1, 10), 2, output_path=tmp_path / "a.csv")
    b = search_campaign(range(1, 10), 2, output_path=tmp_path / "b.csv", jobs=2)
    assert all(x.same_result(y) for x, y in zip(a, b))


@pytest.mark.parametrize("mutate", [
    lambda lines: lines[:-1] + [lines[-1].rstrip("\n")],        # truncated row
    lambda lines: lines[:2] + ["3,2,none,1,1,3,4,aaa,4\n"],     # missing field
    lambda lines: lines[:2] + ["3,2,none,2,1,3,4,aaa,4,0\n"],    # density inconsistent
    lambda lines: ["n,sigma\n"] + lines[1:],                     # wrong header
    lambda lines: [lines[0], lines[2], lines[1]],                # out of order
    lambda lines: lines[:2] + ["2,2,none,1,1,2,2,aaz;bb,3,0\n"], # bad witness
    lambda lines: lines[:2] + ["2,3,none,1,1,2,2,aa;bb,3,0\n"],  # other sigma
])
def test_corrupt_file_refused(tmp_path, mutate):
    out = tmp_path / "r.csv"
    search_campaign(range(1, 4), 2, output_path=out, timing=False)
    lines = open(out).read().splitlines(keepends=True)
    out.write_text("".join(mutate(lines)))
    before = read(out)
    with pytest.raises(CorruptCampaignFile):
        search_campaign(range(1, 6), 2, output_path=out, timing=False)
    assert read(out) == before


def test_unwritable_output(tmp_path):
    with pytest.raises(OSError):
        search_campaign(range(1, 3), 2, output_path=tmp_path / "missing" / "r.csv")


def test_sampling_mode_is_labeled():
    r = sample_square_density(40, 2, samples=2000, seed=1)
    assert not r.exhaustive and r.quotient.startswith("sampled")
    assert r.words_examined == 2000
    assert r.same_result(sample_square_density(40, 2, samples=2000, seed=1))
    for w in r.witnesses:
        assert count_distinct_circular_squares(w) == r.max_count
