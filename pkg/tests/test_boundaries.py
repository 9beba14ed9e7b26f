"""Boundary divisor names: canonicalization, enumeration, counting."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from m0n import (
    BoundaryIndex,
    boundary_count,
    canonical_boundary,
    complement,
    enumerate_boundaries,
    full_marking_set,
)
from m0n.boundaries import check_labels, check_marking_count, same_n
from m0n.errors import ArityError, LabelError, SizeError


def subset_oracle(n):
    """Count boundary names by brute force over every admissible subset."""
    labels = frozenset(range(1, n + 1))
    seen = set()
    for size in range(2, n - 1):
        for combo in combinations(sorted(labels), size):
            group = frozenset(combo)
            if 1 not in group:
                group = labels - group
            seen.add(group)
    return seen


@st.composite
def marked_subsets(draw):
    n = draw(st.integers(4, 12))
    size = draw(st.integers(2, n - 2))
    labels = draw(st.sets(st.integers(1, n), min_size=size, max_size=size))
    return n, frozenset(labels)


class TestCounts:
    @pytest.mark.parametrize(
        "n, expected", [(4, 3), (5, 10), (6, 25), (7, 56), (8, 119)]
    )
    def test_known_counts(self, n, expected):
        assert boundary_count(n) == expected
        assert len(enumerate_boundaries(n)) == expected

    @pytest.mark.parametrize("n", range(4, 13))
    def test_count_matches_subset_oracle(self, n):
        oracle = subset_oracle(n)
        listed = enumerate_boundaries(n)
        assert len(listed) == len(oracle)
        assert {b.rep for b in listed} == oracle

    def test_too_few_markings(self):
        with pytest.raises(SizeError):
            boundary_count(3)
        with pytest.raises(SizeError):
            enumerate_boundaries(3)

    def test_count_rejects_non_integer(self):
        with pytest.raises(SizeError):
            boundary_count(True)


class TestEnumeration:
    def test_order_for_five_markings(self):
        names = [str(b) for b in enumerate_boundaries(5)]
        assert names == [
            "{1,2}",
            "{1,2,3}",
            "{1,2,4}",
            "{1,2,5}",
            "{1,3}",
            "{1,3,4}",
            "{1,3,5}",
            "{1,4}",
            "{1,4,5}",
            "{1,5}",
        ]

    @pytest.mark.parametrize("n", range(4, 10))
    def test_sorted_unique_and_canonical(self, n):
        listed = enumerate_boundaries(n)
        keys = [tuple(sorted(b.rep)) for b in listed]
        assert keys == sorted(keys)
        assert len(set(listed)) == len(listed)
        for b in listed:
            assert b.n == n
            assert 1 in b.rep
            assert 2 <= len(b.rep) <= n - 2


class TestCanonicalization:
    def test_side_with_label_one_wins(self):
        b = canonical_boundary(5, {3, 4})
        assert b.rep == frozenset({1, 2, 5})
        assert canonical_boundary(5, {1, 2, 5}) == b

    def test_str_and_repr(self):
        b = canonical_boundary(6, {2, 1})
        assert str(b) == "{1,2}"
        assert repr(b) == "BoundaryIndex(n=6, rep={1,2})"

    def test_sides_partition(self):
        b = canonical_boundary(7, {2, 5, 6, 7})
        first, second = b.sides
        assert first == b.rep == frozenset({1, 3, 4})
        assert first | second == full_marking_set(7)
        assert not first & second

    def test_side_containing(self):
        b = canonical_boundary(6, {1, 2})
        assert b.side_containing(2) == frozenset({1, 2})
        assert b.side_containing(5) == frozenset({3, 4, 5, 6})
        with pytest.raises(LabelError):
            b.side_containing(7)

    @pytest.mark.parametrize(
        "n, labels, err",
        [
            (5, {3}, SizeError),
            (5, {2, 3, 4, 5}, SizeError),
            (5, {1, 6}, LabelError),
            (5, {0, 1}, LabelError),
            (3, {1, 2}, SizeError),
        ],
    )
    def test_rejects_bad_subsets(self, n, labels, err):
        with pytest.raises(err):
            canonical_boundary(n, labels)

    def test_direct_construction_requires_canonical_rep(self):
        with pytest.raises(LabelError):
            BoundaryIndex(5, frozenset({2, 3}))

    def test_direct_construction_size_bounds(self):
        with pytest.raises(SizeError):
            BoundaryIndex(6, frozenset({1, 2, 3, 4, 5}))

    @given(marked_subsets())
    def test_complement_names_same_divisor(self, case):
        n, labels = case
        assert canonical_boundary(n, labels) == canonical_boundary(
            n, complement(n, labels)
        )

    @given(marked_subsets())
    def test_canonical_is_idempotent_and_valid(self, case):
        n, labels = case
        b = canonical_boundary(n, labels)
        assert canonical_boundary(n, b.rep) == b
        assert 1 in b.rep
        assert 2 <= len(b.rep) <= n - 2
        first, second = b.sides
        assert first | second == full_marking_set(n)


class TestHelpers:
    def test_complement(self):
        assert complement(5, {1, 2}) == frozenset({3, 4, 5})

    def test_check_labels_rejects_bool(self):
        with pytest.raises(LabelError):
            check_labels(5, [True])

    def test_check_marking_count_custom_minimum(self):
        assert check_marking_count(5, 5) == 5
        with pytest.raises(SizeError):
            check_marking_count(4, 5)

    def test_same_n(self):
        a = canonical_boundary(5, {1, 2})
        b = canonical_boundary(5, {1, 3})
        assert same_n(a, b) == 5
        with pytest.raises(ArityError):
            same_n(a, canonical_boundary(6, {1, 2}))
