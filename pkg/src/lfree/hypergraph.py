"""Hypergraphs, the reduction from L-free subsets to hitting sets, and the
bounded-search-tree engine that decides, counts and enumerates hitting sets.

The reduction puts one vertex per element of A and one edge per distinct
support set of a non-trivial solution (an edge can have fewer vertices than
the equation's arity when a solution repeats values).  B is then L-free in A
exactly when A\\B hits every edge, so deciding/counting L-free subsets of
size k becomes deciding/counting hitting sets of size |A|-k.

Counting has two exact strategies:
  * the include/exclude search tree: branch on the first unhit edge, child i
    commits vertex v_i in and v_1..v_{i-1} out, fully-hit states close with a
    binomial over untouched vertices (node count <= d_max**s * (n+1));
  * complement inclusion-exclusion: hitting sets of size s correspond to
    edge-free complements of size n-s, counted by inclusion-exclusion over
    edge subsets, pruned once the union outgrows n-s.
The tree is the right tool when s is small, the complement when n-s is
small; "auto" picks by comparing the two.  Both return identical values and
are cross-validated against 2**n enumeration in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .equation import LinearEquation, is_trivial
from .setcore import IntegerSet, as_integer_set


class SearchCancelled(Exception):
    """Raised when a cooperative cancellation callback asks a search to stop."""


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 1..n plus deduplicated nonempty edges (sorted vertex tuples)."""

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        norm = []
        for e in self.edges:
            e = tuple(sorted(set(e)))
            if not e:
                raise ValueError("empty edge")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"edge {e} has a vertex outside 1..{self.n}")
            if e not in seen:
                seen.add(e)
                norm.append(e)
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def d_max(self) -> int:
        return max((len(e) for e in self.edges), default=0)


@dataclass(frozen=True)
class InstanceMap:
    """Bijection between vertices 1..n and the elements of A (sorted order)."""

    elements: tuple[int, ...]

    def element_of(self, v: int) -> int:
        if not 1 <= v <= len(self.elements):
            raise ValueError(f"vertex {v} out of range")
        return self.elements[v - 1]

    def vertex_of(self, x: int) -> int:
        # elements are sorted and distinct; linear scan is fine at this scale
        try:
            return self.elements.index(x) + 1
        except ValueError:
            raise ValueError(f"{x} is not an element of the instance") from None

    def vertices_of(self, values) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_of(x) for x in values))

    def elements_of(self, vertices) -> IntegerSet:
        return IntegerSet(self.element_of(v) for v in vertices)


def solution_supports(eq: LinearEquation, values) -> list[tuple[int, ...]]:
    """Distinct supports {x1,...,xL} of non-trivial solutions over the set.

    Enumerates the first arity-1 coordinates and solves for the last, so it
    agrees with the naive tuple scan but runs in O(|A|**(arity-1)).
    Returns sorted tuples, deduplicated, in lexicographic order.
    """
    A = as_integer_set(values)
    elems = A.elements
    if not elems:
        return []
    prefix_coeffs = eq.coeffs[:-1]
    c_last = eq.coeffs[-1]
    b = eq.constant
    supports = set()
    for prefix in itertools.product(elems, repeat=eq.arity - 1):
        rem = b - sum(c * x for c, x in zip(prefix_coeffs, prefix))
        q, r = divmod(rem, c_last)
        if r == 0 and q in A:
            tup = prefix + (q,)
            if not is_trivial(eq, tup):
                supports.add(tuple(sorted(set(tup))))
    return sorted(supports)


def to_hitting_set_instance(eq: LinearEquation, values) -> tuple[Hypergraph, InstanceMap]:
    """Build the hypergraph whose hitting sets are complements of L-free subsets."""
    A = as_integer_set(values)
    imap = InstanceMap(A.elements)
    index = {x: i + 1 for i, x in enumerate(A.elements)}
    edges = tuple(tuple(index[x] for x in sup) for sup in solution_supports(eq, A))
    return Hypergraph(len(A), edges), imap


def decide_hitting_set(H: Hypergraph, s: int, stats: dict | None = None,
                       cancel=None) -> tuple[bool, tuple[int, ...] | None]:
    """Is there a hitting set of exactly s vertices?  Returns (answer, witness).

    Bounded search tree: branch on the lexicographically-first unhit edge,
    children in ascending vertex order, depth at most s.  A successful leaf
    is padded with the smallest free vertices up to size s.
    """
    if s < 0 or s > H.n:
        raise ValueError(f"hitting set size {s} out of range 0..{H.n}")
    edgesets = [frozenset(e) for e in H.edges]
    nodes = 0

    def search(chosen: frozenset):
        nonlocal nodes
        nodes += 1
        if cancel is not None and cancel():
            raise SearchCancelled
        unhit = next((e for e, es in zip(H.edges, edgesets) if not (es & chosen)), None)
        if unhit is None:
            return chosen
        if len(chosen) == s:
            return None
        for v in unhit:
            got = search(chosen | {v})
            if got is not None:
                return got
        return None

    got = search(frozenset())
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
    if got is None:
        return False, None
    witness = set(got)
    for v in range(1, H.n + 1):
        if len(witness) == s:
            break
        witness.add(v)
    return True, tuple(sorted(witness))


def _count_by_tree(H: Hypergraph, s: int, forbidden: frozenset, cancel) -> tuple[int, int]:
    edges = [frozenset(e) - forbidden for e in H.edges]
    if any(not e for e in edges):
        return 0, 1
    edges = [tuple(sorted(e)) for e in edges]
    free_total = H.n - len(forbidden)
    nodes = 0

    def rec(included: frozenset, excluded: frozenset) -> int:
        nonlocal nodes
        nodes += 1
        if cancel is not None and cancel():
            raise SearchCancelled
        unhit = next((e for e in edges if not any(v in included for v in e)), None)
        if unhit is None:
            return comb(free_total - len(included) - len(excluded), s - len(included))
        if len(included) == s:
            return 0
        total = 0
        out = excluded
        for v in unhit:
            if v in out:
                continue
            total += rec(included | {v}, out)
            out = out | {v}
        return total

    return rec(frozenset(), frozenset()), nodes


def _count_by_complement(H: Hypergraph, s: int, forbidden: frozenset, cancel) -> tuple[int, int]:
    # hitting sets of size s avoiding `forbidden` <-> edge-free complements of
    # size j := n-s that contain `forbidden`; inclusion-exclusion over the set
    # of edges forced inside the complement, pruned once the union exceeds j.
    j = H.n - s
    if len(forbidden) > j:
        return 0, 1
    edgesets = [frozenset(e) for e in H.edges]
    n = H.n
    nodes = 0

    def dfs(start: int, req: frozenset, sign: int) -> int:
        nonlocal nodes
        nodes += 1
        if cancel is not None and cancel():
            raise SearchCancelled
        total = sign * comb(n - len(req), j - len(req))
        for i in range(start, len(edgesets)):
            merged = req | edgesets[i]
            if len(merged) <= j:
                total += dfs(i + 1, merged, -sign)
        return total

    return dfs(0, forbidden, 1), nodes


def count_hitting_sets(H: Hypergraph, s: int, forbidden=(), method: str = "auto",
                       stats: dict | None = None, cancel=None) -> int:
    """Exact number of size-s hitting sets disjoint from `forbidden`.

    Returns 0 whenever impossible (s out of range, an edge fully forbidden,
    and so on).  `method` is "tree", "complement" or "auto".
    """
    forb = frozenset(forbidden)
    if any(not 1 <= v <= H.n for v in forb):
        raise ValueError("forbidden vertex out of range")
    if s < 0 or s > H.n - len(forb):
        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0)
        return 0
    if method == "auto":
        method = "complement" if H.n - s < s else "tree"
    if method == "tree":
        count, nodes = _count_by_tree(H, s, forb, cancel)
    elif method == "complement":
        count, nodes = _count_by_complement(H, s, forb, cancel)
    else:
        raise ValueError(f"unknown counting method {method!r}")
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
    return count


def enumerate_hitting_sets(H: Hypergraph, s: int, forbidden=()):
    """Yield every size-s hitting set avoiding `forbidden`, in lexicographic order."""
    forb = frozenset(forbidden)
    if s < 0 or s > H.n - len(forb):
        return
    edgesets = [frozenset(e) - forb for e in H.edges]
    if any(not e for e in edgesets):
        return
    candidates = [v for v in range(1, H.n + 1) if v not in forb]

    def rec(idx: int, chosen: list, unhit: list):
        if not unhit:
            rest = s - len(chosen)
            for tail in itertools.combinations(candidates[idx:], rest):
                yield tuple(chosen) + tail
            return
        if len(chosen) == s:
            return
        if len(candidates) - idx < s - len(chosen):
            return
        threshold = candidates[idx]
        # an unhit edge with no vertex left to pick can never be hit
        if any(max(e) < threshold for e in unhit):
            return
        v = candidates[idx]
        chosen.append(v)
        yield from rec(idx + 1, chosen, [e for e in unhit if v not in e])
        chosen.pop()
        yield from rec(idx + 1, chosen, unhit)

    yield from rec(0, [], edgesets)


def parse_hypergraph_text(text: str) -> Hypergraph:
    """Format: first line ``n m``, then m lines of 1-based vertex indices."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = tuple(tuple(int(tok) for tok in ln.split()) for ln in lines[1:])
    return Hypergraph(n, edges)


def load_hypergraph(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hypergraph_text(fh.read())
