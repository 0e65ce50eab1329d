"""Counting L-free subsets: exact, sampled, multicolour and via interpolation.

Exact counts of size-k L-free subsets ride on the hitting-set engine
(complements of size |A|-k).  The randomised approximation draws uniform
k-subsets and scales the hit rate by C(|A'|,k); because any set of nonzero
integers keeps an L-free subset of density lambda, the success probability
is at least (1/lambda + k/lambda^2)^-k, which bounds the sample count
needed for an (eps, delta) guarantee.  The multicolour count (exactly one
element per part) is inclusion-exclusion over part subsets, and the
multicolour-clique counter composes everything: embed the graph, pad the
edge-number parts with t inert elements, read off the colourful counts
N(t) for t = 0..C(k,2), interpolate the degree-C(k,2) polynomial through
(q+t, N(t)) in exact rationals, and return the absolute constant term.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import hypergraph as hg
from .bounds import extend_disjoint, extend_geometric, lambda_of
from .equation import LinearEquation, is_L_free
from .gadget import build_gadget
from .setcore import IntegerSet, as_integer_set

_LN_TOL = Fraction(1, 10 ** 6)


@dataclass(frozen=True)
class ApproxParams:
    """Accuracy/seed bundle for the randomised counter."""

    epsilon: Fraction
    delta: Fraction
    seed: int = 0
    t_override: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie strictly between 0 and 1")


@dataclass
class CountResult:
    value: int | Fraction
    kind: str  # "exact" | "estimate"
    meta: dict


def _atanh_times_two_upper(u: Fraction, tol: Fraction) -> Fraction:
    """Rational upper bound on 2*atanh(u) = sum 2*u^(2j+1)/(2j+1), 0 <= u < 1."""
    total = Fraction(0)
    term = u
    j = 0
    while True:
        total += term / (2 * j + 1)
        term *= u * u
        j += 1
        tail = term / ((2 * j + 1) * (1 - u * u))
        if 2 * tail < tol:
            return 2 * (total + tail)


def ln_upper(x, tol: Fraction = _LN_TOL) -> Fraction:
    """Rational upper bound on ln(x) for rational x >= 1, error below tol."""
    x = Fraction(x)
    if x < 1:
        raise ValueError("argument must be at least 1")
    ln2 = _atanh_times_two_upper(Fraction(1, 3), tol)
    e = 0
    while x >= 2:
        x /= 2
        e += 1
    return e * ln2 + _atanh_times_two_upper((x - 1) / (x + 1), tol)


def required_sample_count(lam: Fraction, k: int, epsilon, delta) -> int:
    """Sample count giving P[|estimate - N| <= eps*N] >= 1-delta.

    ceil((1/lam + k/lam^2)^k * (2/eps^2 + 1/eps) * (ln 2 + ln(1/delta))),
    with the logarithms replaced by rigorous rational upper bounds so the
    bound never undershoots.
    """
    epsilon = Fraction(epsilon)
    delta = Fraction(delta)
    blowup = (1 / lam + Fraction(k, 1) / (lam * lam)) ** k
    trials = blowup * (2 / epsilon ** 2 + 1 / epsilon) * (ln_upper(2) + ln_upper(1 / delta))
    return -((-trials.numerator) // trials.denominator)


def count_exact(eq: LinearEquation, values, k: int, contain=()) -> CountResult:
    """Exact number of L-free k-subsets of A containing `contain`."""
    A = as_integer_set(values)
    B = as_integer_set(contain)
    if not B.issubset(A):
        raise ValueError("contain must be a subset of A")
    if k < 0 or k > len(A) or k < len(B) or not is_L_free(eq, B):
        return CountResult(0, "exact", {})
    H, imap = hg.to_hitting_set_instance(eq, A)
    stats: dict = {}
    n = hg.count_hitting_sets(H, len(A) - k, forbidden=imap.vertices_of(B), stats=stats)
    return CountResult(n, "exact", stats)


def _sample_k_subset(elements: tuple, k: int, rng: random.Random) -> tuple:
    """Uniform k-subset by partial Fisher-Yates over the sorted element list."""
    arr = list(elements)
    for i in range(k):
        j = rng.randrange(i, len(arr))
        arr[i], arr[j] = arr[j], arr[i]
    return tuple(arr[:k])


def count_fptras(eq: LinearEquation, values, k: int, params: ApproxParams) -> CountResult:
    """Randomised approximate count of L-free k-subsets.

    Requires a homogeneous non-translation-invariant equation.  Small
    inputs (|A'| < k/lambda + 2) are counted exactly; otherwise t uniform
    k-subsets are tested and (t1/t)*C(|A'|,k) is returned as an exact
    rational.  Trials are independently seeded from (seed, index), so the
    aggregate is reproducible regardless of evaluation order.
    """
    lam = lambda_of(eq).lambda_
    A = as_integer_set(values)
    A1 = A.difference((0,))
    if len(A1) < k / lam + 2:
        exact = count_exact(eq, A1, k)
        exact.meta["small_branch"] = True
        return exact
    t = params.t_override if params.t_override is not None \
        else required_sample_count(lam, k, params.epsilon, params.delta)
    if t < 1:
        raise ValueError("sample count must be positive")
    hits = 0
    for i in range(t):
        rng = random.Random((params.seed, i))
        if is_L_free(eq, _sample_k_subset(A1.elements, k, rng)):
            hits += 1
    estimate = Fraction(hits, t) * comb(len(A1), k)
    return CountResult(estimate, "estimate",
                       {"epsilon": params.epsilon, "delta": params.delta,
                        "seed": params.seed, "t": t, "t1": hits})


def count_multicolour(eq: LinearEquation, parts) -> CountResult:
    """L-free subsets using exactly one element per part (inclusion-exclusion).

    2^k - 1 exact-count calls on sub-unions, alternating signs by the number
    of omitted parts.
    """
    parts = [as_integer_set(p) for p in parts]
    seen: set = set()
    for p in parts:
        if seen & set(p):
            raise ValueError("parts must be pairwise disjoint")
        seen |= set(p)
    k = len(parts)
    total = 0
    calls = 0
    for mask in range(1, 1 << k):
        union: set = set()
        bits = 0
        for i in range(k):
            if mask >> i & 1:
                union |= set(parts[i])
                bits += 1
        calls += 1
        n_i = count_exact(eq, union, k).value
        total += (-1) ** (k - bits) * n_i
    return CountResult(total, "exact", {"oracle_calls": calls})


def _vandermonde_solve(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (ascending degree) of the polynomial through the points."""
    m = len(points)
    rows = [[Fraction(z) ** j for j in range(m)] + [Fraction(v)] for z, v in points]
    for col in range(m):
        pivot = next(r for r in range(col, m) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[j][m] for j in range(m)]


def _check_partition(G: hg.Hypergraph, partition) -> list[list[int]]:
    classes = [sorted(set(cls)) for cls in partition]
    flat = [v for cls in classes for v in cls]
    if sorted(flat) != list(range(1, G.n + 1)):
        raise ValueError("classes must partition the vertex set 1..n")
    for e in G.edges:
        if len(e) != 2:
            raise ValueError("expected a graph (all edges of size 2)")
    return classes


def brute_force_multicolour_cliques(G: hg.Hypergraph, partition, cap: int = 20) -> int:
    """Count cliques with one vertex per class by enumerating transversals."""
    classes = _check_partition(G, partition)
    if G.n > cap:
        raise ValueError(f"oracle cap exceeded: {G.n} > {cap}")
    adjacent = {frozenset(e) for e in G.edges}

    def rec(i: int, chosen: list) -> int:
        if i == len(classes):
            return 1
        total = 0
        for v in classes[i]:
            if all(frozenset((v, u)) in adjacent for u in chosen):
                chosen.append(v)
                total += rec(i + 1, chosen)
                chosen.pop()
        return total

    return rec(0, [])


def count_multicolour_cliques(G: hg.Hypergraph, partition,
                              eq: LinearEquation) -> CountResult:
    """Number of multicolour k-cliques via the interpolation reduction.

    Steps: drop intra-class edges (they cannot join a transversal), pad the
    class pairs with dummy matched pairs until every pair carries q edges,
    embed through the digit gadget, evaluate the colourful count on t = 0..
    C(k,2) inert paddings, interpolate p with p(q+t) = N(t), and return
    |p(0)|.  The equation must be y-form with two x-variables; its class
    (a+b versus c) picks the inert-extension builder.
    """
    classes = _check_partition(G, partition)
    k = len(classes)
    if k < 2:
        raise ValueError("need at least two classes")
    xs, c, _ = eq.y_form_parts()
    if len(xs) != 2:
        raise ValueError("equation must have the shape a*x + b*y = c*z")
    geometric = xs[0] + xs[1] == c

    class_of = {}
    for i, cls in enumerate(classes):
        for v in cls:
            class_of[v] = i
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    cross: dict[tuple[int, int], list] = {pr: [] for pr in pairs}
    for e in G.edges:
        u, v = e
        iu, iv = class_of[u], class_of[v]
        if iu != iv:
            cross[(min(iu, iv), max(iu, iv))].append(e)
    q = max((len(es) for es in cross.values()), default=0)

    classes = [list(cls) for cls in classes]
    next_vertex = G.n + 1
    dummies = 0
    for pr in pairs:
        for _ in range(q - len(cross[pr])):
            u, w = next_vertex, next_vertex + 1
            next_vertex += 2
            dummies += 2
            classes[pr[0]].append(u)
            classes[pr[1]].append(w)
            cross[pr].append((u, w))
    all_edges = [e for pr in pairs for e in cross[pr]]
    H = hg.Hypergraph(next_vertex - 1, tuple(all_edges))
    g = build_gadget(eq, H)
    class_parts = [IntegerSet(g.number_of_vertex(v) for v in cls) for cls in classes]
    edge_parts = {pr: IntegerSet(g.number_of_edge(e) for e in cross[pr]) for pr in pairs}

    degree = len(pairs)
    base = g.union
    points = []
    for t in range(degree + 1):
        if t == 0:
            fresh: list[int] = []
        else:
            need = t * len(pairs)
            grown = extend_geometric(eq, base, need) if geometric \
                else extend_disjoint(eq, base, len(base) + need)
            fresh = sorted(grown.difference(base))
        parts = list(class_parts)
        for idx, pr in enumerate(pairs):
            block = fresh[idx * t:(idx + 1) * t]
            parts.append(edge_parts[pr].union(block))
        points.append((q + t, count_multicolour(eq, parts).value))

    coeffs = _vandermonde_solve(points)
    for z, v in points:  # exact interpolation leaves zero residual
        assert sum(cf * z ** j for j, cf in enumerate(coeffs)) == v
    constant = coeffs[0]
    assert constant.denominator == 1
    return CountResult(abs(int(constant)), "exact",
                       {"q": q, "degree": degree, "dummies": dummies,
                        "points": points, "coefficients": coeffs})


def parse_coloured_graph_text(text: str) -> tuple[hg.Hypergraph, tuple]:
    """Format: ``n m k`` / n class indices in 1..k / m lines ``u v``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty coloured-graph file")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("first line must be 'n m k'")
    n, m, k = (int(x) for x in head)
    if len(lines) < 2:
        raise ValueError("missing class line")
    colours = [int(x) for x in lines[1].split()]
    if len(colours) != n or any(not 1 <= c <= k for c in colours):
        raise ValueError("class line must give n indices in 1..k")
    if len(lines) - 2 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 2}")
    edges = []
    for ln in lines[2:]:
        u, v = (int(x) for x in ln.split())
        edges.append((u, v))
    classes = tuple(tuple(v for v in range(1, n + 1) if colours[v - 1] == i)
                    for i in range(1, k + 1))
    return hg.Hypergraph(n, tuple(edges)), classes


def load_coloured_graph(path) -> tuple[hg.Hypergraph, tuple]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloured_graph_text(fh.read())
