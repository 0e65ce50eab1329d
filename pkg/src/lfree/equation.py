"""Linear equations over the integers and solution-freeness tests.

An equation is ``c1*x1 + ... + cL*xL = b`` with fixed nonzero integer
coefficients.  A tuple of values is a *trivial* solution when grouping
positions that hold equal values makes every group's coefficient sum
vanish (so, for instance, the constant tuple solves every
translation-invariant equation trivially).  A set of integers is
*L-free* (solution-free) when no tuple over the set -- repeated values
allowed -- is a non-trivial solution.

Everything here is exact arithmetic on unbounded Python ints; these
routines are the naive reference semantics that the rest of the library
is validated against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

#: named equation shortcuts accepted by parse_equation
NAMED_EQUATIONS = {
    "sum-free": ((1, 1, -1), 0),
    "progression": ((1, 1, -2), 0),
    "sidon": ((1, 1, -1, -1), 0),
}


@dataclass(frozen=True)
class LinearEquation:
    """A fixed equation c1*x1 + ... + cL*xL = b with every ci nonzero."""

    coeffs: tuple[int, ...]
    constant: int = 0

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("equation needs at least two variables")
        if any(c == 0 for c in coeffs):
            raise ValueError("zero coefficients are not allowed")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "constant", int(self.constant))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @property
    def homogeneous(self) -> bool:
        return self.constant == 0

    @property
    def translation_invariant(self) -> bool:
        return self.constant == 0 and sum(self.coeffs) == 0

    @property
    def y_form(self) -> bool:
        """True when the equation rewrites as a1*x1+...+am*xm = b*y, all positive."""
        return self.homogeneous and sum(1 for c in self.coeffs if c < 0) == 1

    def y_form_parts(self) -> tuple[tuple[int, ...], int, int]:
        """Return (x_coefficients, y_coefficient, y_index) of a y-form equation.

        The x coefficients keep their original order; y_index is the position
        of the single negative coefficient.
        """
        if not self.y_form:
            raise ValueError(f"{self} is not in y-form (a1*x1+...+am*xm = b*y)")
        y_index = next(i for i, c in enumerate(self.coeffs) if c < 0)
        xs = tuple(c for c in self.coeffs if c > 0)
        return xs, -self.coeffs[y_index], y_index

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs) + "=" + str(self.constant)


def parse_equation(spec: str) -> LinearEquation:
    """Parse ``COEFFS=INT`` (comma-separated signed ints) or a named shortcut."""
    text = spec.strip()
    if text in NAMED_EQUATIONS:
        coeffs, constant = NAMED_EQUATIONS[text]
        return LinearEquation(coeffs, constant)
    if "=" not in text:
        raise ValueError(f"malformed equation spec {spec!r}: expected 'COEFFS=INT'")
    lhs, _, rhs = text.partition("=")
    try:
        coeffs = tuple(int(tok.strip()) for tok in lhs.split(","))
        constant = int(rhs.strip())
    except ValueError:
        raise ValueError(f"malformed equation spec {spec!r}") from None
    return LinearEquation(coeffs, constant)


def _check_arity(eq: LinearEquation, values) -> tuple[int, ...]:
    values = tuple(values)
    if len(values) != eq.arity:
        raise ValueError(f"expected {eq.arity} values, got {len(values)}")
    return values


def is_solution(eq: LinearEquation, values) -> bool:
    """True iff sum(ci*xi) equals the constant, in exact arithmetic."""
    values = _check_arity(eq, values)
    return sum(c * x for c, x in zip(eq.coeffs, values)) == eq.constant


def is_trivial(eq: LinearEquation, values) -> bool:
    """True iff grouping equal values gives zero coefficient sum per group.

    This is equivalent to the existential form (some partition of the
    positions into equal-valued, zero-sum classes): any witness partition
    refines the value-induced one, and class sums add up.  The tuple does
    not have to satisfy the equation.
    """
    values = _check_arity(eq, values)
    sums: dict[int, int] = {}
    for c, x in zip(eq.coeffs, values):
        sums[x] = sums.get(x, 0) + c
    return all(s == 0 for s in sums.values())


def is_L_free(eq: LinearEquation, elements) -> bool:
    """True iff no tuple over the set (repeats allowed) is a non-trivial solution.

    Exhaustive scan of all |A|^arity tuples with early exit.
    """
    elems = tuple(sorted(set(elements)))
    coeffs = eq.coeffs
    b = eq.constant
    for tup in itertools.product(elems, repeat=eq.arity):
        if sum(c * x for c, x in zip(coeffs, tup)) == b and not is_trivial(eq, tup):
            return False
    return True


def enumerate_nontrivial_solutions(eq: LinearEquation, elements) -> list[tuple[int, ...]]:
    """All ordered non-trivial solution tuples over the set, lexicographically."""
    elems = tuple(sorted(set(elements)))
    coeffs = eq.coeffs
    b = eq.constant
    out = []
    for tup in itertools.product(elems, repeat=eq.arity):
        if sum(c * x for c, x in zip(coeffs, tup)) == b and not is_trivial(eq, tup):
            out.append(tup)
    return out
