"""Shared constants and tiny oracles for the test suite."""

from __future__ import annotations


# The classical bound-125 table of dimension-3 solutions used by several
# golden tests.  Enumeration itself finds a strict superset; see
# test_search.py for the full pinned set.
TABLE_TEN = [
    (1, 1, 1, 1),
    (1, 1, 2, 4),
    (1, 2, 9, 12),
    (1, 4, 10, 25),
    (1, 4, 16, 27),
    (1, 6, 9, 32),
    (1, 7, 27, 49),
    (1, 9, 50, 60),
    (1, 22, 32, 121),
    (3, 4, 63, 98),
]

# Everything the solver actually finds at dimension 3, bound 125, backed by
# the unpruned oracle (see test_search.py::test_oracle_agrees_at_table_bound).
FOUND_AT_125 = sorted(TABLE_TEN + [
    (1, 18, 96, 125),
    (1, 27, 27, 125),
    (5, 6, 9, 100),
])


def brute_denumerant(degree: int, weights) -> int:
    """Reference count of exponent vectors, no DP: plain recursion."""
    if degree < 0:
        return 0
    if not weights:
        return 1 if degree == 0 else 0
    head, rest = weights[0], weights[1:]
    return sum(brute_denumerant(degree - k * head, rest)
               for k in range(degree // head + 1))
