"""Generalized binomial coefficients and harmonic numbers, exactly.

The binomial coefficient C(p, q) is defined for any rational upper index p
and any integer lower index q by the falling-factorial product

    C(p, q) = p/1 * (p-1)/2 * ... * (p-q+1)/q

with C(p, 0) = 1 (empty product) and C(p, q) = 0 for q < 0.  The last
convention is what lets the identity sums in :mod:`exactseries.identities`
drop out-of-range terms silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ComplementError(ValueError):
    """Raised when the symmetry rewrite C(p, q) -> C(p, p-q) is requested
    outside its domain of validity (p a nonnegative integer, 0 <= q <= p)."""


def binom(upper: Fraction | int, lower: int) -> Fraction:
    """Exact generalized binomial coefficient C(upper, lower).

    Total function: lower < 0 gives 0, lower == 0 gives 1.  The product is
    accumulated factor by factor so every intermediate stays reduced.
    """
    upper = Fraction(upper)
    if lower < 0:
        return Fraction(0)
    acc = Fraction(1)
    for i in range(1, lower + 1):
        acc = acc * (upper - i + 1) / i
    return acc


@dataclass(frozen=True)
class BinomialSymbol:
    """The pair (upper, lower) naming one binomial coefficient."""

    upper: Fraction
    lower: int

    def value(self) -> Fraction:
        return binom(self.upper, self.lower)


def complement(sym: BinomialSymbol) -> BinomialSymbol:
    """Rewrite C(p, q) as C(p, p-q).

    Valid only for nonnegative integer p with 0 <= q <= p; everywhere else
    the rewrite changes the value, so it is rejected rather than applied.
    """
    upper = Fraction(sym.upper)
    if upper.denominator != 1 or upper < 0:
        raise ComplementError(
            f"complement rewrite needs a nonnegative integer upper index, "
            f"got {upper}"
        )
    p = int(upper)
    if not 0 <= sym.lower <= p:
        raise ComplementError(
            f"complement rewrite needs 0 <= lower <= upper, "
            f"got lower={sym.lower}, upper={p}"
        )
    return BinomialSymbol(upper, p - sym.lower)


def harmonic(n: int) -> Fraction:
    """Exact harmonic number 1 + 1/2 + ... + 1/n; harmonic(0) = 0."""
    if n < 0:
        raise ValueError(f"harmonic number needs n >= 0, got {n}")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))
