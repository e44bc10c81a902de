"""Multi-route evaluation of the binomial convolution identity and the
logarithmic-series identities.

Each identity is computed along several independent routes (finite sum,
closed form, series-coefficient extraction); exact agreement of all routes
is the verification verdict.  Summation bounds are computed up front from
the vanishing conventions of the binomial symbol, never by iterating until
terms look small.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .binomial import binom, harmonic
from .series import binomial_series, coefficient, ps_monomial_shift


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(
            f"identity evaluators need integer n >= 0 (the defining sums "
            f"do not terminate otherwise), got n={n}"
        )


def vandermonde_sum(m: Fraction | int, n: int, c: int) -> Fraction:
    """Sum over k of C(m, k) * C(n, c+k); terminates because c+k > n kills
    every later term for integer n >= 0."""
    _check_n(n)
    if c < 0:
        raise ValueError(f"vandermonde needs c >= 0, got c={c}")
    m = Fraction(m)
    total = Fraction(0)
    for k in range(0, max(0, n - c) + 1):
        total += binom(m, k) * binom(n, c + k)
    return total


def vandermonde_closed(m: Fraction | int, n: int, c: int) -> Fraction:
    """Closed form C(m+n, n-c); the lower index n-c stays an integer even
    for rational m."""
    _check_n(n)
    if c < 0:
        raise ValueError(f"vandermonde needs c >= 0, got c={c}")
    return binom(Fraction(m) + n, n - c)


def vandermonde_series_route(m: Fraction | int, n: int, c: int, N: int) -> Fraction:
    """Coefficient of z^n in z^c * (1-z)^(-(m+c+1)), built from series ops."""
    _check_n(n)
    if c < 0:
        raise ValueError(f"vandermonde needs c >= 0, got c={c}")
    if N < n:
        raise ValueError(f"truncation order {N} is below requested coefficient {n}")
    expansion = binomial_series(-(Fraction(m) + c + 1), N, at_minus_z=True)
    return coefficient(ps_monomial_shift(expansion, c), n)


def log_lhs(n: int, c: int) -> Fraction:
    """The alternating series C(n,c+1) - C(n,c+2)/2 + C(n,c+3)/3 - ...

    Only terms with 0 <= c+k <= n survive, so the sum is finite.
    """
    _check_n(n)
    total = Fraction(0)
    for k in range(max(1, -c), n - c + 1):
        sign = 1 if k % 2 == 1 else -1
        total += Fraction(sign, k) * binom(n, c + k)
    return total


def log_rhs(n: int, c: int) -> Fraction:
    """The dual series sum over lam >= 1 of C(n-lam, n-lam-c)/lam.

    Past lam = n-c every lower index is negative and the term vanishes;
    c > n gives the empty sum.
    """
    _check_n(n)
    total = Fraction(0)
    for lam in range(1, n - c + 1):
        total += Fraction(1, lam) * binom(n - lam, n - lam - c)
    return total


def log_closed(n: int, c: int) -> Fraction:
    """Closed form of the logarithmic series: harmonic(n) at c = 0, and
    (-1)^(d-1) (d-1)! / ((n+1)...(n+d)) at c = -d for d >= 1.

    The negative-c formula beyond d = 4 extrapolates the proven d <= 4
    pattern; the verification grids cross-check it against the term-by-term
    series.  No closed form is available for c >= 1.
    """
    _check_n(n)
    if c > 0:
        raise ValueError(
            f"no closed form for c={c} >= 1; use the dual-series routes"
        )
    if c == 0:
        return harmonic(n)
    d = -c
    denom = math.prod(n + i for i in range(1, d + 1))
    return Fraction((-1) ** (d - 1) * math.factorial(d - 1), denom)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of verifying one identity at one parameter point."""

    identity: str
    params: dict
    route_values: dict
    verdict: bool
    notes: tuple[str, ...] = field(default_factory=tuple)


IDENTITIES = ("vandermonde", "log_dual", "log_closed")


def _report(identity: str, params: dict, routes: dict,
            notes: tuple[str, ...] = ()) -> IdentityReport:
    values = list(routes.values())
    verdict = all(v == values[0] for v in values)
    return IdentityReport(identity, params, routes, verdict, notes)


def verify(
    identity: str,
    ms: Sequence[Fraction | int] = (Fraction(0),),
    ns: Iterable[int] = (),
    cs: Iterable[int] = (),
) -> list[IdentityReport]:
    """Evaluate every applicable route of ``identity`` over the parameter
    grid, one report per grid point, in grid order."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {IDENTITIES}")
    reports = []
    if identity == "vandermonde":
        for m, n, c in itertools.product(ms, ns, cs):
            m = Fraction(m)
            routes = {
                "sum": vandermonde_sum(m, n, c),
                "closed": vandermonde_closed(m, n, c),
                "series": vandermonde_series_route(m, n, c, n),
            }
            reports.append(_report(identity, {"m": m, "n": n, "c": c}, routes))
    elif identity == "log_dual":
        for n, c in itertools.product(ns, cs):
            routes = {"lhs": log_lhs(n, c), "rhs": log_rhs(n, c)}
            reports.append(_report(identity, {"n": n, "c": c}, routes))
    else:
        for n, c in itertools.product(ns, cs):
            routes = {"lhs": log_lhs(n, c), "closed": log_closed(n, c)}
            notes = ("closed form extrapolated beyond proven range",) if c < -4 else ()
            reports.append(_report(identity, {"n": n, "c": c}, routes, notes))
    return reports
