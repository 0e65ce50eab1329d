"""Finite integer sets and the brute-force oracles everything is checked against.

IntegerSet is an immutable sorted collection of distinct unbounded ints.
The two brute-force routines enumerate subsets outright; they exist to
certify the clever algorithms at desk scale, so they are capped (default
20 elements) rather than optimised.
"""

from __future__ import annotations

import operator
from itertools import combinations

from .equation import LinearEquation, is_L_free

#: default cap on brute-force subset enumeration (2**20 subsets worst case)
ORACLE_CAP = 20


class IntegerSet:
    """Immutable set of distinct integers, stored sorted ascending."""

    __slots__ = ("elements", "_members")

    def __init__(self, values=()):
        elems = tuple(sorted({operator.index(v) for v in values}))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    def __setattr__(self, name, value):
        raise AttributeError("IntegerSet is immutable")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._members

    def __eq__(self, other):
        if isinstance(other, IntegerSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"IntegerSet({list(self.elements)})"

    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no maximum")
        return self.elements[-1]

    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no minimum")
        return self.elements[0]

    def max_star(self) -> int:
        """Largest absolute value in the set."""
        if not self.elements:
            raise ValueError("empty set has no max*")
        return max(abs(self.elements[0]), abs(self.elements[-1]))

    def min_star(self) -> int:
        """Smallest absolute value in the set."""
        if not self.elements:
            raise ValueError("empty set has no min*")
        return min(abs(x) for x in self.elements)

    def union(self, other) -> "IntegerSet":
        return IntegerSet(self._members | set(other))

    def difference(self, other) -> "IntegerSet":
        return IntegerSet(self._members - set(other))

    def intersection(self, other) -> "IntegerSet":
        return IntegerSet(self._members & set(other))

    def issubset(self, other) -> bool:
        other = other._members if isinstance(other, IntegerSet) else set(other)
        return self._members <= other


def as_integer_set(values) -> IntegerSet:
    return values if isinstance(values, IntegerSet) else IntegerSet(values)


def interval(lo: int, hi: int) -> IntegerSet:
    """The integers lo..hi inclusive (empty when lo > hi)."""
    return IntegerSet(range(lo, hi + 1))


def size_bits(values) -> int:
    """Total representation size: sum over elements of bit_length(|a|) + 1."""
    A = as_integer_set(values)
    return sum(abs(a).bit_length() + 1 for a in A)


def _check_cap(A: IntegerSet, cap: int):
    if len(A) > cap:
        raise ValueError(f"oracle cap exceeded: |A|={len(A)} > {cap}")


def brute_force_max_lfree(eq: LinearEquation, values, cap: int = ORACLE_CAP):
    """Exact maximum L-free subset (size, witness) by decreasing-size enumeration.

    Deterministic: subsets of each size are scanned in lexicographic order
    of the sorted element list, and the first L-free one wins.
    """
    A = as_integer_set(values)
    _check_cap(A, cap)
    elems = A.elements
    for size in range(len(elems), -1, -1):
        for combo in combinations(elems, size):
            if is_L_free(eq, combo):
                return size, IntegerSet(combo)
    raise AssertionError("unreachable: the empty subset is always L-free")


def brute_force_count_lfree(eq: LinearEquation, values, k: int, cap: int = ORACLE_CAP) -> int:
    """Exact number of L-free k-subsets, by enumerating all k-subsets."""
    A = as_integer_set(values)
    _check_cap(A, cap)
    if k < 0 or k > len(A):
        return 0
    return sum(1 for combo in combinations(A.elements, k) if is_L_free(eq, combo))


def parse_set_text(text: str) -> IntegerSet:
    """Whitespace-separated decimal integers; duplicates are a load error."""
    values = []
    for tok in text.split():
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"bad integer token {tok!r} in set file") from None
    if len(values) != len(set(values)):
        raise ValueError("duplicate values in set file")
    return IntegerSet(values)


def load_set(path) -> IntegerSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_set_text(fh.read())
