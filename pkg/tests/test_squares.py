import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from circsquares.family import family_word
from circsquares.squares import (
    CeilingViolation,
    DoubleSquare,
    OccurrenceRecord,
    Square,
    check_ceiling,
    count_distinct_circular_squares,
    count_distinct_squares,
    distinct_circular_squares,
    distinct_squares_oracle,
    fs_double_squares,
    leftmost_fs_double_square,
    oracle_square_texts,
    rightmost_occurrences,
    rightmost_start_multiplicities,
)
from circsquares.words import CircularWord, Word, make_word, rotate

from conftest import random_texts, words_upto

# least binary word (by length, then lexicographically) with an FS-double
# square, found by scanning rfind-based rightmost starts over oracle squares
GOLDEN_FS_WORD = "abaababaab"


def texts(squares):
    return {str(s) for s in squares}


def sq(root):
    return Square(make_word(root))


def test_square_type():
    s = sq("ab")
    assert s.text.text == "abab" and len(s) == 4 and str(s) == "abab"
    assert s == Square(Word("ab", 3))


@pytest.mark.parametrize("word,expected", [
    ("aaaa", {"aa", "aaaa"}),
    ("abc", set()),
    # (baa)(baa) at position 1 is a third square
    ("abaabaa", {"aa", "abaaba", "baabaa"}),
])
def test_oracle_examples(word, expected):
    assert texts(distinct_squares_oracle(make_word(word))) == expected
    assert count_distinct_squares(make_word(word)) == len(expected)


def test_empty_rejected():
    with pytest.raises(ValueError):
        count_distinct_squares(make_word(""))
    with pytest.raises(ValueError):
        distinct_squares_oracle(make_word(""))


def test_square_free_counts_zero():
    # prefix of a ternary square-free (Thue) word
    w = make_word("abcacbabcbacabcacbacabcb")
    assert oracle_square_texts(w.text) == set()
    assert count_distinct_squares(w) == 0
    assert rightmost_start_multiplicities(w) == {}
    assert fs_double_squares(w) == []
    assert leftmost_fs_double_square(w) is None


def test_doubled_f1_with_cap():
    f = family_word(1).text
    assert len(oracle_square_texts(f + f, max_len=24)) == 25


def test_fast_count_matches_oracle_small():
    for s in words_upto(12, 2):
        assert count_distinct_squares(make_word(s)) == len(oracle_square_texts(s)), s
    for s in random_texts(300, 120, seed=5):
        assert count_distinct_squares(make_word(s)) == len(oracle_square_texts(s)), s


@given(st.text(alphabet="abcd", min_size=1, max_size=60))
def test_fast_set_matches_oracle(s):
    from circsquares.squares import square_texts
    assert square_texts(s) == oracle_square_texts(s)


@pytest.mark.parametrize("word,expected", [("ab", set()), ("aa", {"aa"}), ("aba", {"aa"}), ("aaaa", {"aa", "aaaa"})])
def test_circular_examples(word, expected):
    cw = CircularWord.of(word)
    assert texts(distinct_circular_squares(cw)) == expected
    assert count_distinct_circular_squares(cw) == len(expected)


def test_circular_table_values():
    assert count_distinct_circular_squares(CircularWord(family_word(1))) == 25
    assert count_distinct_circular_squares(CircularWord(family_word(5))) == 65


def test_length_one_is_zero():
    assert count_distinct_circular_squares(CircularWord.of("a")) == 0


def test_cap_consistency_against_rotation_union():
    for s in words_upto(12, 2):
        n = len(s)
        union = set()
        for i in range(n):
            r = s[i:] + s[:i]
            union |= {t for t in oracle_square_texts(r) if len(t) <= n}
        assert texts(distinct_circular_squares(make_word(s))) == union, s


def test_rotation_invariance():
    for s in random_texts(200, 60, seed=8):
        w = make_word(s)
        counts = {count_distinct_circular_squares(rotate(w, i)) for i in range(len(s))}
        assert len(counts) == 1


def test_reversal_and_relabel_invariance():
    rng = random.Random(9)
    for s in random_texts(300, 80, seed=9, sigmas=(2, 3, 4)):
        w = make_word(s, 4)
        c = count_distinct_circular_squares(w)
        lin = count_distinct_squares(w)
        assert count_distinct_circular_squares(w.reversed()) == c
        perm = list(range(4))
        rng.shuffle(perm)
        assert count_distinct_circular_squares(w.relabel(perm)) == c
        assert count_distinct_squares(w.relabel(perm)) == lin


@settings(max_examples=200)
@given(st.text(alphabet="abc", min_size=1, max_size=120))
def test_ceilings(s):
    w = make_word(s)
    assert count_distinct_squares(w) <= 2 * len(s)
    assert count_distinct_circular_squares(w) * 100 <= 314 * len(s)


def test_ceiling_guard():
    check_ceiling(314, 100)
    with pytest.raises(CeilingViolation):
        check_ceiling(315, 100)


@pytest.mark.parametrize("word,expected", [
    ("aaaa", {("aa", 2), ("aaaa", 0)}),
    ("abab", {("abab", 0)}),
    ("abaabaa", {("aa", 5), ("abaaba", 0), ("baabaa", 1)}),
])
def test_rightmost_examples(word, expected):
    got = {(str(r.square), r.rightmost_start) for r in rightmost_occurrences(make_word(word))}
    assert got == expected


def test_rightmost_matches_rfind():
    for s in itertools.chain(words_upto(11, 2), random_texts(200, 150, seed=2)):
        expected = {(t, s.rfind(t)) for t in oracle_square_texts(s)}
        got = {(str(r.square), r.rightmost_start) for r in rightmost_occurrences(make_word(s))}
        assert got == expected, s


def test_rightmost_record_invariants():
    s = "abaababaabaababaab"
    for r in rightmost_occurrences(make_word(s)):
        t = str(r.square)
        assert s.startswith(t, r.rightmost_start)
        assert s.find(t, r.rightmost_start + 1) == -1
    assert OccurrenceRecord(sq("a"), 1) == OccurrenceRecord(sq("a"), 1)


def test_multiplicities():
    assert rightmost_start_multiplicities(make_word("aaaa")) == {0: 1, 2: 1}
    assert rightmost_start_multiplicities(make_word("abc")) == {}


def test_fraenkel_simpson_small_exhaustive():
    for s in words_upto(14, 2):
        assert max(rightmost_start_multiplicities(make_word(s)).values(), default=0) <= 2


def test_fs_double_square_examples():
    assert fs_double_squares(make_word("abaabaa")) == []
    assert leftmost_fs_double_square(make_word("abaabaa")) is None
    w = make_word(GOLDEN_FS_WORD)
    expected = DoubleSquare(0, make_word("aba"), make_word("abaab"))
    assert fs_double_squares(w) == [expected]
    assert leftmost_fs_double_square(w) == expected


def test_golden_fs_word_is_least():
    for s in words_upto(len(GOLDEN_FS_WORD), 2):
        if s == GOLDEN_FS_WORD:
            break
        assert fs_double_squares(make_word(s)) == [], s


def test_fs_double_squares_match_oracle():
    for s in itertools.chain(words_upto(12, 2), random_texts(200, 100, seed=4)):
        by = {}
        for t in oracle_square_texts(s):
            by.setdefault(s.rfind(t), []).append(t)
        expected = [
            (i, min(v, key=len)[: len(min(v, key=len)) // 2], max(v, key=len)[: len(max(v, key=len)) // 2])
            for i, v in sorted(by.items()) if len(v) == 2
        ]
        got = [(d.position, d.short_root.text, d.long_root.text) for d in fs_double_squares(make_word(s))]
        assert got == expected, s
        for d in fs_double_squares(make_word(s)):
            assert len(d.short_root) < len(d.long_root)
