"""Digit-encoding gadget: embed a uniform hypergraph into a set of integers.

For a y-form equation a1*x1+...+am*xm = b*y and an m-uniform hypergraph H,
pick the base d = 2*m*a^2*b^2 (a = max ai).  Vertex i becomes the number
b*d^i; edge {v_{i1},...,v_{im}} (i1<...<im) becomes a1*d^{i1}+...+am*d^{im}.
Because d dwarfs every coefficient, base-d digits never interact, and the
only non-trivial solutions in the combined set are exactly one per edge:
the edge's vertex numbers against its edge number.  Independent sets of H
therefore correspond to L-free subsets containing all edge numbers, which
is what the hardness instance builder and the approximation-preserving
reduction below exploit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .equation import LinearEquation
from .hypergraph import Hypergraph, solution_supports
from .setcore import IntegerSet, as_integer_set


@dataclass(frozen=True, eq=False)
class GadgetEncoding:
    """The embedded set together with both direction maps.

    vertex_numbers and edge_numbers are disjoint; their union is the
    instance set.  number->vertex / number->edge lookups go through the
    dictionaries, the forward direction through the helper methods.
    """

    equation: LinearEquation
    hypergraph: Hypergraph
    d: int
    vertex_numbers: IntegerSet
    edge_numbers: IntegerSet
    union: IntegerSet
    vertex_of_number: dict = field(repr=False)
    edge_of_number: dict = field(repr=False)

    def number_of_vertex(self, v: int) -> int:
        xs, b, _ = self.equation.y_form_parts()
        del xs
        return b * self.d ** v

    def number_of_edge(self, e) -> int:
        e = tuple(sorted(e))
        xs, _, _ = self.equation.y_form_parts()
        return sum(a * self.d ** i for a, i in zip(xs, e))

    def solution_support_of_edge(self, e) -> IntegerSet:
        """The unique solution support encoding edge e: its vertex numbers plus its edge number."""
        return IntegerSet([self.number_of_vertex(v) for v in e] + [self.number_of_edge(e)])


def build_gadget(eq: LinearEquation, H: Hypergraph) -> GadgetEncoding:
    """Encode an m-uniform hypergraph for a y-form equation with m x-variables."""
    xs, b, _ = eq.y_form_parts()
    m = len(xs)
    for e in H.edges:
        if len(e) != m:
            raise ValueError(f"hypergraph is not {m}-uniform: edge {e}")
    a = max(xs)
    d = 2 * m * a * a * b * b
    vertex_of_number = {b * d ** i: i for i in range(1, H.n + 1)}
    edge_of_number = {}
    for e in H.edges:
        y = sum(ai * d ** i for ai, i in zip(xs, e))
        edge_of_number[y] = e
    vertex_numbers = IntegerSet(vertex_of_number)
    edge_numbers = IntegerSet(edge_of_number)
    assert not set(vertex_numbers) & set(edge_numbers)
    return GadgetEncoding(
        equation=eq,
        hypergraph=H,
        d=d,
        vertex_numbers=vertex_numbers,
        edge_numbers=edge_numbers,
        union=vertex_numbers.union(edge_numbers),
        vertex_of_number=vertex_of_number,
        edge_of_number=edge_of_number,
    )


def _supports(g: GadgetEncoding) -> list[frozenset]:
    return [frozenset(s) for s in solution_supports(g.equation, g.union)]


def _is_free(supports, members: set) -> bool:
    return not any(sup <= members for sup in supports)


def lfree_of_independent_set(g: GadgetEncoding, vertices) -> IntegerSet:
    """Map an independent set of the source hypergraph to an L-free subset.

    Returns the vertex numbers of I together with all edge numbers; size
    |I| + number of edges.
    """
    I = set(vertices)
    if any(not 1 <= v <= g.hypergraph.n for v in I):
        raise ValueError("vertex out of range")
    for e in g.hypergraph.edges:
        if set(e) <= I:
            raise ValueError(f"vertex set is not independent: contains edge {e}")
    numbers = [g.number_of_vertex(v) for v in I]
    return IntegerSet(numbers).union(g.edge_numbers)


def normalize_to_contain_edge_numbers(g: GadgetEncoding, values) -> IntegerSet:
    """Grow an L-free subset of the gadget set until it holds every edge number.

    For each missing edge number y, add y outright when some vertex number of
    its edge is absent; otherwise evict the largest such vertex number first.
    The result is L-free, contains all edge numbers, and is never smaller.
    """
    S = as_integer_set(values)
    if not S.issubset(g.union):
        raise ValueError("input set is not a subset of the gadget set")
    supports = _supports(g)
    members = set(S)
    if not _is_free(supports, members):
        raise ValueError("input set is not L-free")
    for y in g.edge_numbers:
        if y in members:
            continue
        e = g.edge_of_number[y]
        xs = [g.number_of_vertex(v) for v in e]
        if all(x in members for x in xs):
            members.discard(max(xs))
        members.add(y)
    result = IntegerSet(members)
    assert _is_free(supports, set(result))
    return result


def np_instance(H: Hypergraph, s: int, eq: LinearEquation) -> tuple[IntegerSet, int]:
    """Hardness instance: H has a size-s hitting set iff A has an L-free k-subset.

    A is the gadget set and k = |A| - s.
    """
    if s < 0 or s > H.n:
        raise ValueError(f"hitting set size {s} out of range 0..{H.n}")
    g = build_gadget(eq, H)
    A = g.union
    return A, len(A) - s


def _check_graph(G: Hypergraph, max_degree: int | None = None):
    deg = {v: 0 for v in range(1, G.n + 1)}
    for e in G.edges:
        if len(e) != 2:
            raise ValueError(f"not a graph: edge {e} has size {len(e)}")
        for v in e:
            deg[v] += 1
    if max_degree is not None:
        bad = [v for v, dv in deg.items() if dv > max_degree]
        if bad:
            raise ValueError(f"vertex degree exceeds {max_degree} at {bad}")


def ptas_f(eq: LinearEquation, G: Hypergraph, epsilon) -> IntegerSet:
    """Instance mapping of the approximation-preserving reduction.

    Embeds a max-degree-3 graph; the output does not depend on epsilon.
    """
    del epsilon
    _check_graph(G, max_degree=3)
    return build_gadget(eq, G).union


def ptas_g(eq: LinearEquation, G: Hypergraph, values, epsilon) -> tuple[int, ...]:
    """Solution mapping: turn an L-free subset back into an independent set.

    Completes the input to a maximal L-free superset containing every edge
    number (greedy, ascending numeric order) and reads off the vertices of
    its vertex numbers.  For max-degree-3 graphs the result has at least
    |V|/4 vertices.
    """
    del epsilon
    _check_graph(G)
    g = build_gadget(eq, G)
    grown = normalize_to_contain_edge_numbers(g, values)
    supports = _supports(g)
    by_member: dict = {}
    for sup in supports:
        for x in sup:
            by_member.setdefault(x, []).append(sup)
    members = set(grown)
    for a in g.union:
        if a in members:
            continue
        candidate = members | {a}
        if not any(sup <= candidate for sup in by_member.get(a, ())):
            members.add(a)
    return tuple(sorted(g.vertex_of_number[x]
                        for x in members if x in g.vertex_of_number))


def ptas_alpha(epsilon) -> Fraction:
    """Performance-ratio mapping of the reduction: epsilon -> 1 + epsilon/7."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return 1 + eps / 7
