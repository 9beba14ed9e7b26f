"""Marking-set arithmetic for stable n-pointed rational curves.

Markings are the integers 1..n.  A boundary divisor is named by a subset
I of the markings with 2 <= |I| <= n-2, and I names the same divisor as
its complement.  Values are canonicalized to the side containing label 1,
so equality of boundary names is plain equality of representatives.

Every value carries its own n; operations that mix values built over
different marking counts fail loudly with ArityError.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ArityError, LabelError, SizeError

# Stability needs at least 3 special points per component; below 4 markings
# there is no boundary combinatorics left to speak about.
MIN_MARKINGS = 4


def check_marking_count(n: int, minimum: int = MIN_MARKINGS) -> int:
    """Validate a marking count and return it."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise SizeError(f"marking count must be an integer, got {n!r}")
    if n < minimum:
        raise SizeError(f"need at least {minimum} markings, got n={n}")
    return n


def full_marking_set(n: int) -> frozenset[int]:
    """The marking set {1, ..., n}."""
    check_marking_count(n)
    return frozenset(range(1, n + 1))


def check_labels(n: int, labels: Iterable[int]) -> frozenset[int]:
    """Validate that every label lies in 1..n and return them as a frozenset."""
    check_marking_count(n)
    out = frozenset(labels)
    for label in out:
        if not isinstance(label, int) or isinstance(label, bool):
            raise LabelError(f"label {label!r} is not an integer")
        if not 1 <= label <= n:
            raise LabelError(f"label {label} outside marking set 1..{n}")
    return out


def complement(n: int, labels: Iterable[int]) -> frozenset[int]:
    """The complement of a subset inside the marking set {1..n}."""
    return full_marking_set(n) - check_labels(n, labels)


@dataclass(frozen=True)
class BoundaryIndex:
    """Canonical name of a boundary divisor: the side containing label 1.

    The two sides of the partition name the same divisor, so the stored
    representative is always the side with label 1 and both sides satisfy
    the size bound 2 <= size <= n-2.
    """

    n: int
    rep: frozenset[int]

    def __post_init__(self):
        check_labels(self.n, self.rep)
        if 1 not in self.rep:
            raise LabelError(
                f"representative {sorted(self.rep)} must contain label 1; "
                "use canonical_boundary to build boundary names"
            )
        if not 2 <= len(self.rep) <= self.n - 2:
            raise SizeError(
                f"side size {len(self.rep)} outside [2, {self.n - 2}] for n={self.n}"
            )

    @property
    def sides(self) -> tuple[frozenset[int], frozenset[int]]:
        """Both sides of the partition, representative first."""
        return self.rep, complement(self.n, self.rep)

    def side_containing(self, label: int) -> frozenset[int]:
        """The side of the partition holding the given marking."""
        check_labels(self.n, (label,))
        if label in self.rep:
            return self.rep
        return complement(self.n, self.rep)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in sorted(self.rep)) + "}"

    def __repr__(self) -> str:
        return f"BoundaryIndex(n={self.n}, rep={{{','.join(map(str, sorted(self.rep)))}}})"


def same_n(a, b) -> int:
    """Return the common marking count of two values or raise ArityError."""
    if a.n != b.n:
        raise ArityError(f"mixed marking counts n={a.n} and n={b.n}")
    return a.n


def canonical_boundary(n: int, labels: Iterable[int]) -> BoundaryIndex:
    """Boundary name for a subset of markings, canonicalized to the side with 1.

    Idempotent, and constant on complementary pairs: the subset I and its
    complement produce the identical BoundaryIndex.
    """
    labels = check_labels(n, labels)
    if not 2 <= len(labels) <= n - 2:
        raise SizeError(
            f"subset size {len(labels)} outside [2, {n - 2}] for n={n}"
        )
    rep = labels if 1 in labels else complement(n, labels)
    return BoundaryIndex(n, rep)


def enumerate_boundaries(n: int) -> list[BoundaryIndex]:
    """All boundary divisor names for n markings, lexicographically ordered.

    There are 2**(n-1) - n - 1 of them: one per subset of {2..n} of size
    1..n-3 joined with label 1.
    """
    check_marking_count(n)
    rest = range(2, n + 1)
    reps = [
        (1,) + combo
        for size in range(1, n - 2)
        for combo in combinations(rest, size)
    ]
    reps.sort()
    return [BoundaryIndex(n, frozenset(rep)) for rep in reps]


def boundary_count(n: int) -> int:
    """Closed-form count of boundary divisors for n markings."""
    check_marking_count(n)
    return 2 ** (n - 1) - n - 1
