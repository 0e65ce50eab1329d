"""Constructive lower bounds and set builders for homogeneous equations.

Writing a homogeneous, non-translation-invariant equation with positive
coefficients on both sides, a1*x1+...+ak*xk = b1*y1+...+bl*yl with
a_sum > b_sum, the tail interval [floor(b_sum*n/a_sum)+1, n] is always
solution-free, and every finite set Z of nonzero integers contains an
L-free subset larger than lambda*|Z| for the explicit rational

    lambda = (1/(2*a_sum)) * (1 - b_sum/a_sum).

The constructive proof picks a prime p > 2*max|z|, takes the solution-free
tail interval of [p // a_sum] as a residue window mod p, and scans
multipliers x = 1, 2, ... until the elements landing in the window number
more than lambda*|Z|; the expectation of that count over random x exceeds
lambda*|Z|, so the scan terminates.

The two extension builders grow a set A of positive integers by elements
that participate in no new solutions of a three-variable equation
a*x + b*y = c*z: a scaled solution-free interval times a fresh prime when
a+b != c, and the geometric tail {c^i * 2*max(A)} when a+b == c.  On top of
them sit the density-threshold instance builders that tie "has an L-free
subset of size k" to "has an L-free subset holding an eps fraction".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .equation import LinearEquation
from .setcore import (ORACLE_CAP, IntegerSet, as_integer_set,
                      brute_force_max_lfree, interval)

#: below this size the multiplier scan may lack room; fall back to brute force
SMALL_SET_THRESHOLD = 8


@dataclass(frozen=True)
class EquationBounds:
    """The explicit density lower bound of a homogeneous non-TI equation."""

    lambda_: Fraction
    kappa_lower: Fraction
    a_sum: int
    b_sum: int
    c: int


def _sides(eq: LinearEquation) -> tuple[int, int]:
    """Positive-coefficient side sums (a_sum, b_sum), swapped so a_sum > b_sum."""
    if not eq.homogeneous:
        raise ValueError("equation must be homogeneous")
    if eq.translation_invariant:
        raise ValueError("translation-invariant equations admit no such bound")
    pos = sum(c for c in eq.coeffs if c > 0)
    neg = -sum(c for c in eq.coeffs if c < 0)
    return (pos, neg) if pos > neg else (neg, pos)


def lambda_of(eq: LinearEquation) -> EquationBounds:
    """Exact rational lambda; also the library's lower bound for kappa."""
    a_sum, b_sum = _sides(eq)
    c = a_sum
    lam = Fraction(1, 2 * c) * (1 - Fraction(b_sum, a_sum))
    return EquationBounds(lambda_=lam, kappa_lower=lam, a_sum=a_sum, b_sum=b_sum, c=c)


def lfree_interval(eq: LinearEquation, n: int) -> IntegerSet:
    """The guaranteed solution-free tail interval of [1..n]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a_sum, b_sum = _sides(eq)
    lo = (b_sum * n) // a_sum + 1
    return interval(lo, n)


# deterministic Miller-Rabin witness sets, proven complete up to the bound
_MR_THRESHOLDS = (
    (3215031751, (2, 3, 5, 7)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318665857834031151167461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)
_MR_FALLBACK = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def _is_prime(n: int) -> bool:
    """Primality test: trial division at small scale, Miller-Rabin beyond.

    The witness sets are complete (deterministic) below ~3.2e23; above that
    the fixed 20-prime base set has no known counterexamples.  Extension
    sets built from large gadget numbers need primes far past trial-division
    range.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < 10 ** 6:
        f = 41
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_FALLBACK
    for bound, wits in _MR_THRESHOLDS:
        if n < bound:
            bases = wits
            break
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _next_prime_above(n: int) -> int:
    p = n + 1
    while not _is_prime(p):
        p += 1
    return p


def _prime_in_range(lo: int, hi: int) -> int:
    """Smallest prime strictly between lo and hi (exists for lo >= 2)."""
    for p in range(lo + 1, hi):
        if _is_prime(p):
            return p
    raise ValueError(f"no prime in ({lo}, {hi})")


def construct_large_lfree(eq: LinearEquation, values, seed=None,
                          cap: int = ORACLE_CAP) -> IntegerSet:
    """An L-free subset of Z with more than lambda*|Z| elements.

    Deterministic multiplier scan from x=1 upward; a seed switches to a
    shuffled scan order (any successful multiplier is equally valid).
    Tiny sets go straight to the brute-force oracle which the density
    guarantee also covers.
    """
    Z = as_integer_set(values)
    if 0 in Z:
        raise ValueError("the input set must not contain 0")
    if len(Z) == 0:
        raise ValueError("the input set must be nonempty")
    bnd = lambda_of(eq)
    lam = bnd.lambda_

    def brute() -> IntegerSet:
        _, witness = brute_force_max_lfree(eq, Z, cap=cap)
        return witness

    if len(Z) <= SMALL_SET_THRESHOLD:
        return brute()

    p = _next_prime_above(2 * Z.max_star())
    m_prime = p // bnd.c
    lo = (bnd.b_sum * m_prime) // bnd.a_sum + 1  # residues lo..m_prime are solution-free mod p
    order = range(1, p)
    if seed is not None:
        order = list(order)
        random.Random(seed).shuffle(order)
    target = lam * len(Z)
    for x in order:
        hits = [z for z in Z if lo <= (x * z) % p <= m_prime]
        if len(hits) > target:
            return IntegerSet(hits)
    # only reachable when every |z| is below the coefficient sums
    return brute()


def _three_variable_parts(eq: LinearEquation) -> tuple[int, int, int]:
    """Coefficients (a, b, c) of an equation of the shape a*x + b*y = c*z."""
    if eq.arity != 3:
        raise ValueError("expected a three-variable equation a*x+b*y = c*z")
    xs, c, _ = eq.y_form_parts()
    return xs[0], xs[1], c


def _check_positive_set(A: IntegerSet):
    if len(A) == 0:
        raise ValueError("the base set must be nonempty")
    if A.min() < 1:
        raise ValueError("the base set must consist of positive integers")


def extend_disjoint(eq: LinearEquation, values, t: int) -> IntegerSet:
    """Grow A to exactly t elements without creating solutions (a+b != c case).

    New elements are p*I' for a prime p in (a*b*c*max(A), 2*a*b*c*max(A))
    and I' the largest t-|A| members of a solution-free tail interval far
    above A; every solution in the result already lived in A, and
    max(result) = O(t*max(A)^2).
    """
    a, b, c = _three_variable_parts(eq)
    if a + b == c:
        raise ValueError("a+b = c: use extend_geometric")
    A = as_integer_set(values)
    _check_positive_set(A)
    if t <= len(A):
        raise ValueError(f"target size {t} must exceed |A|={len(A)}")
    m = A.max()
    tau = Fraction(min(Fraction(c, a + b), Fraction(a + b, c)))
    floor_scaled = 2 * (a + b + c) * m

    def ok(N: int) -> bool:
        fl = (tau.numerator * N) // tau.denominator
        return fl >= floor_scaled and N - fl >= t

    N = max((floor_scaled * tau.denominator) // tau.numerator, t, 1)
    while not ok(N):
        N += 1
    extra = t - len(A)
    tail = interval(N - extra + 1, N)
    if a * b * c * m == 1:
        p = 2  # the open interval (1, 2) has no prime; p=2 satisfies p > max(A) and p > c
    else:
        p = _prime_in_range(a * b * c * m, 2 * a * b * c * m)
    return A.union(p * x for x in tail)


def extend_geometric(eq: LinearEquation, values, t: int) -> IntegerSet:
    """Append the geometric tail {c^i * 2*max(A) : i=1..t} (a+b = c case).

    Adds exactly t elements; in the result every non-trivial solution lies
    inside A, and max(result) = 2*max(A)*c^t.
    """
    a, b, c = _three_variable_parts(eq)
    if a + b != c:
        raise ValueError("a+b != c: use extend_disjoint")
    A = as_integer_set(values)
    _check_positive_set(A)
    if t < 0:
        raise ValueError("t must be nonnegative")
    m = A.max()
    return A.union(c ** i * 2 * m for i in range(1, t + 1))


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _pad_to_density(eq: LinearEquation, A: IntegerSet, k: int, eps: Fraction,
                    geometric: bool) -> IntegerSet:
    """Add d inert elements so that ceil(eps*(|A|+d)) = k+d (requires k <= eps*|A|)."""
    d = _ceil_fraction((eps * len(A) - k) / (1 - eps))
    if d == 0:
        return IntegerSet(A)
    if geometric:
        return extend_geometric(eq, A, d)
    return extend_disjoint(eq, A, len(A) + d)


def epsilon_instance(eq: LinearEquation, values, k: int, eps,
                     anchor: tuple | None = None,
                     cap: int = ORACLE_CAP) -> IntegerSet:
    """Build B so that B has an L-free subset of size >= ceil(eps*|B|) iff
    A has one of size k.

    Supports x+y = z (inert padding via extend_disjoint) and a*x+b*y = c*z
    with a+b = c (padding via extend_geometric).  When k > eps*|A| the
    caller must supply an anchor (S, eps_prime): a set of positive integers
    whose largest L-free subset has size exactly eps_prime*|S| with
    eps_prime < eps; scaled copies d_i*S soak up the density gap before
    padding.
    """
    A = as_integer_set(values)
    _check_positive_set(A)
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie strictly between 0 and 1")
    if not 0 <= k <= len(A):
        raise ValueError(f"k={k} out of range 0..{len(A)}")
    a, b, c = _three_variable_parts(eq)
    if a + b == c:
        geometric = True
    elif (a, b, c) == (1, 1, 1):
        geometric = False
    else:
        raise ValueError("supported shapes: x+y=z, or a*x+b*y=c*z with a+b=c")

    if k <= eps * len(A):
        return _pad_to_density(eq, A, k, eps, geometric)

    if anchor is None:
        raise ValueError(f"k={k} exceeds eps*|A|={eps * len(A)}: an anchor set is required")
    S, eps_prime = anchor
    S = as_integer_set(S)
    _check_positive_set(S)
    eps_prime = Fraction(eps_prime)
    if not 0 < eps_prime < eps:
        raise ValueError("anchor density must satisfy 0 < eps' < eps")
    anchored = eps_prime * len(S)
    if anchored.denominator != 1:
        raise ValueError("eps' * |S| must be an integer")
    anchored = anchored.numerator
    if len(S) <= cap:
        best, _ = brute_force_max_lfree(eq, S, cap=cap)
        if best != anchored:
            raise ValueError(
                f"anchor density check failed: max L-free size {best} != eps'*|S| = {anchored}")
    r = _ceil_fraction((k - eps * len(A)) / ((eps - eps_prime) * len(S)))
    m, m_prime = A.max(), S.max()
    star = set(A)
    for i in range(1, r + 1):
        scale = (3 * c) ** i * m * m_prime ** (i - 1) if geometric \
            else 3 ** i * m * m_prime ** (i - 1)
        block = {scale * x for x in S}
        assert not block & star
        star |= block
    A_star = IntegerSet(star)
    k_star = k + r * anchored
    assert k_star <= eps * len(A_star)
    return _pad_to_density(eq, A_star, k_star, eps, geometric)
