"""Distinct squares in circular words: counting, the f_k family, lemma checks
and exhaustive necklace search."""

from .words import (
    CircularWord,
    Word,
    canonical_rotation,
    fine_wilf_holds,
    is_aperiodic,
    is_primitive,
    make_word,
    period,
    rotate,
)
from .squares import (
    DoubleSquare,
    OccurrenceRecord,
    Square,
    count_distinct_circular_squares,
    count_distinct_squares,
    distinct_circular_squares,
    distinct_squares_oracle,
    fs_double_squares,
    leftmost_fs_double_square,
    rightmost_occurrences,
    rightmost_start_multiplicities,
)

__version__ = "0.1.0"
