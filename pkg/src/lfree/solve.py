"""Decision and optimisation front-ends for the L-free subset problem.

General instances go through the hitting-set engine (an L-free subset of
size k is the complement of a hitting set of size |A|-k).  On top of that:
a threshold algorithm for homogeneous non-translation-invariant equations
(answer YES outright once |A| > k/lambda, witness by construction), the
linear-time two-variable algorithm (the solution graph is a disjoint union
of paths, cycles, loops and isolated vertices), the density variant, and
the two extension-problem algorithms.

Every YES answer carries a witness of the exact requested cardinality that
re-validates under the naive freeness check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import hypergraph as hg
from .bounds import construct_large_lfree, lambda_of
from .equation import LinearEquation, is_L_free, is_solution, is_trivial
from .setcore import IntegerSet, as_integer_set


@dataclass
class SolveOutcome:
    answer: bool
    witness: IntegerSet | None
    method: str
    stats: dict = field(default_factory=dict)


def decide(eq: LinearEquation, values, k: int) -> SolveOutcome:
    """Is there an L-free subset of size exactly k?  Exact, with witness."""
    A = as_integer_set(values)
    if not 0 <= k <= len(A):
        raise ValueError(f"k={k} out of range 0..{len(A)}")
    H, imap = hg.to_hitting_set_instance(eq, A)
    stats: dict = {}
    found, hs = hg.decide_hitting_set(H, len(A) - k, stats=stats)
    witness = A.difference(imap.elements_of(hs)) if found else None
    return SolveOutcome(found, witness, "hitting-set", stats)


def max_lfree(eq: LinearEquation, values) -> SolveOutcome:
    """Largest L-free subset, by growing the hitting-set budget from zero."""
    A = as_integer_set(values)
    H, imap = hg.to_hitting_set_instance(eq, A)
    stats: dict = {}
    for s in range(len(A) + 1):
        found, hs = hg.decide_hitting_set(H, s, stats=stats)
        if found:
            witness = A.difference(imap.elements_of(hs))
            stats["size"] = len(witness)
            return SolveOutcome(True, witness, "hitting-set", stats)
    raise AssertionError("unreachable: s=|A| always admits a hitting set")


def decide_fpt_by_k(eq: LinearEquation, values, k: int) -> SolveOutcome:
    """Threshold algorithm: brute force below k/lambda elements, YES above.

    Only for homogeneous non-translation-invariant equations (these are the
    ones with a guaranteed linear-size L-free subset).  0 is dropped first
    since no L-free set can contain it.
    """
    A = as_integer_set(values)
    lam = lambda_of(eq).lambda_
    A1 = A.difference((0,))
    if len(A1) <= k / lam:
        checked = 0
        for combo in combinations(A1.elements, k):
            checked += 1
            if is_L_free(eq, combo):
                return SolveOutcome(True, IntegerSet(combo), "brute-force",
                                    {"subsets": checked})
        return SolveOutcome(False, None, "brute-force", {"subsets": checked})
    big = construct_large_lfree(eq, A1)
    witness = IntegerSet(big.elements[:k])
    return SolveOutcome(True, witness, "fpt-threshold", {"constructed": len(big)})


def _two_variable_components(eq: LinearEquation, A: IntegerSet):
    """Adjacency structure of the two-variable solution graph on A."""
    loops = set()
    adj = {x: set() for x in A}
    for x in A:
        if is_solution(eq, (x, x)) and not is_trivial(eq, (x, x)):
            loops.add(x)
    c1, c2 = eq.coeffs
    b = eq.constant
    for x in A:
        if x in loops:
            continue
        for cx, cy in ((c1, c2), (c2, c1)):
            q, r = divmod(b - cx * x, cy)
            if r == 0 and q in A and q != x and q not in loops:
                tup = (x, q) if (cx, cy) == (c1, c2) else (q, x)
                if not is_trivial(eq, tup):
                    adj[x].add(q)
                    adj[q].add(x)
    return loops, adj


def _component_mis(start, adj, seen) -> list:
    """Max independent set of one path/cycle/isolated component, deterministic."""
    comp = [start]
    seen.add(start)
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    nxt.append(w)
        frontier = nxt
    if len(comp) == 1:
        return comp
    degrees = {v: len(adj[v]) for v in comp}
    endpoints = sorted(v for v, d in degrees.items() if d == 1)
    if endpoints:  # path: walk from the smaller endpoint, take alternate vertices
        order = [endpoints[0]]
        prev = None
        while True:
            nbrs = [w for w in adj[order[-1]] if w != prev]
            if not nbrs:
                break
            prev = order[-1]
            order.append(nbrs[0])
        return order[0::2]
    # cycle: canonical walk from the smallest vertex towards its smaller neighbour
    start = min(comp)
    nbrs = sorted(adj[start])
    order = [start, nbrs[0]]
    while True:
        nxt = [w for w in adj[order[-1]] if w != order[-2]]
        if nxt[0] == start:
            break
        order.append(nxt[0])
    t = len(order)
    if t % 2 == 0:
        return order[0::2]
    return order[0:t - 1:2]


def decide_two_variable(eq: LinearEquation, values, k: int) -> SolveOutcome:
    """Polynomial algorithm for any two-variable equation.

    Vertices carrying a loop (x solves against itself) contribute nothing;
    the rest of the graph is a disjoint union of paths and cycles whose
    maximum independent sets are read off directly.
    """
    if eq.arity != 2:
        raise ValueError("equation must have exactly two variables")
    A = as_integer_set(values)
    if not 0 <= k <= len(A):
        raise ValueError(f"k={k} out of range 0..{len(A)}")
    loops, adj = _two_variable_components(eq, A)
    seen = set(loops)
    chosen: list = []
    components = 0
    for x in A:
        if x in seen:
            continue
        components += 1
        chosen.extend(_component_mis(x, adj, seen))
    chosen.sort()
    answer = k <= len(chosen)
    witness = IntegerSet(chosen[:k]) if answer else None
    return SolveOutcome(answer, witness, "two-variable",
                        {"independence": len(chosen), "components": components,
                         "loops": len(loops)})


def decide_epsilon(eq: LinearEquation, values, eps) -> SolveOutcome:
    """Is there an L-free subset with at least eps*|A| elements?  (0 not in A.)"""
    A = as_integer_set(values)
    if 0 in A:
        raise ValueError("the input set must not contain 0")
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie strictly between 0 and 1")
    k = -((-eps.numerator * len(A)) // eps.denominator)  # ceil(eps*|A|)
    if eq.homogeneous and not eq.translation_invariant:
        lam = lambda_of(eq).lambda_
        if eps <= lam and len(A) > 0:
            witness = construct_large_lfree(eq, A)
            return SolveOutcome(True, witness, "fpt-threshold",
                                {"target": k, "guaranteed": True})
    out = decide(eq, A, k)
    out.stats["target"] = k
    return out


def decide_extension(eq: LinearEquation, values, contained, k: int) -> SolveOutcome:
    """Is there an L-free subset of size k containing B?

    Complements are hitting sets of size |A|-k avoiding B's vertices, so one
    exists iff the constrained enumerator yields anything.
    """
    A = as_integer_set(values)
    B = as_integer_set(contained)
    if not B.issubset(A):
        raise ValueError("B must be a subset of A")
    if not is_L_free(eq, B):
        return SolveOutcome(False, None, "hitting-set", {"base_free": False})
    if k < len(B) or k > len(A):
        return SolveOutcome(False, None, "hitting-set", {})
    H, imap = hg.to_hitting_set_instance(eq, A)
    forbidden = imap.vertices_of(B)
    hs = next(hg.enumerate_hitting_sets(H, len(A) - k, forbidden), None)
    if hs is None:
        return SolveOutcome(False, None, "hitting-set", {})
    witness = A.difference(imap.elements_of(hs))
    return SolveOutcome(True, witness, "hitting-set", {})


def extension_fpt_by_k(eq: LinearEquation, values, contained, k: int) -> SolveOutcome:
    """Extension decision for a*x+b*y = c*z with a+b != c, parameterised by k.

    Prune A to the elements compatible with B, then either brute-force
    (below the (6|B|+1)/lambda threshold) or answer YES with a witness built
    from a greedily chosen conflict-free pool.
    """
    if eq.arity != 3:
        raise ValueError("expected a three-variable equation")
    xs, c, _ = eq.y_form_parts()
    a, b = xs
    if a + b == c:
        raise ValueError("requires a+b != c so that the density bound applies")
    A = as_integer_set(values)
    B = as_integer_set(contained)
    if not B.issubset(A):
        raise ValueError("B must be a subset of A")
    if k < len(B) or not is_L_free(eq, B):
        return SolveOutcome(False, None, "brute-force", {"pruned": 0})
    lam = lambda_of(eq).lambda_
    keep = [x for x in A if x in B or (x != 0 and is_L_free(eq, B.union((x,))))]
    A1 = IntegerSet(keep)
    threshold = Fraction(6 * len(B) + 1, 1) / lam * (k - len(B)) + len(B)
    if len(A1) < threshold:
        pool = A1.difference(B).elements
        checked = 0
        for combo in combinations(pool, k - len(B)):
            checked += 1
            if is_L_free(eq, B.union(combo)):
                return SolveOutcome(True, B.union(combo), "brute-force",
                                    {"subsets": checked, "pruned": len(A) - len(A1)})
        return SolveOutcome(False, None, "brute-force",
                            {"subsets": checked, "pruned": len(A) - len(A1)})
    if k == len(B):
        return SolveOutcome(True, B, "fpt-threshold", {"pruned": len(A) - len(A1)})
    # greedy pool: every solution triple in B u C stays inside C
    remaining = set(A1.difference(B))
    pool: set = set()
    while remaining:
        u = min(remaining)
        pool.add(u)
        remaining.discard(u)
        doomed = set()
        for v in B:
            # each placement of (u, v) in a solution triple fixes the third element
            for pos in range(6):
                w = _third_element(a, b, c, u, v, pos)
                if w is not None and w in remaining:
                    doomed.add(w)
        remaining -= doomed
    big = construct_large_lfree(eq, IntegerSet(pool))
    witness = B.union(big.elements[:k - len(B)])
    assert is_L_free(eq, witness)
    return SolveOutcome(True, witness, "fpt-threshold",
                        {"pool": len(pool), "pruned": len(A) - len(A1)})


def _third_element(a: int, b: int, c: int, u: int, v: int, pos: int):
    """Solve a*x + b*y = c*z for the remaining slot, (u, v) placed per pos."""
    if pos == 0:  # x=u, y=v -> z
        q, r = divmod(a * u + b * v, c)
    elif pos == 1:  # x=v, y=u -> z
        q, r = divmod(a * v + b * u, c)
    elif pos == 2:  # x=u, z=v -> y
        q, r = divmod(c * v - a * u, b)
    elif pos == 3:  # y=u, z=v -> x
        q, r = divmod(c * v - b * u, a)
    elif pos == 4:  # x=v, z=u -> y
        q, r = divmod(c * u - a * v, b)
    else:  # y=v, z=u -> x
        q, r = divmod(c * u - b * v, a)
    return q if r == 0 else None
