"""Dense truncated formal power series over exact rationals.

A series stores coefficients for z^0 .. z^order.  Coefficients beyond the
truncation order are unknown, not zero: arithmetic between series of
different orders truncates to the smaller order, and asking for a
coefficient beyond the order is an error rather than a silent 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .binomial import binom


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series stores at least the z^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_add(self, other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_mul(self, other)


def series(coeffs: Iterable[Fraction | int]) -> PowerSeries:
    """Build a series from an iterable of rationals (or ints)."""
    return PowerSeries(tuple(Fraction(c) for c in coeffs))


def constant(value: Fraction | int, order: int) -> PowerSeries:
    cs = [Fraction(0)] * (order + 1)
    cs[0] = Fraction(value)
    return PowerSeries(tuple(cs))


def identity_z(order: int) -> PowerSeries:
    """The series of the variable itself: z, to the given order."""
    cs = [Fraction(0)] * (order + 1)
    if order >= 1:
        cs[1] = Fraction(1)
    return PowerSeries(tuple(cs))


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(tuple(a.coeffs[k] + b.coeffs[k] for k in range(n + 1)))


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(tuple(a.coeffs[k] - b.coeffs[k] for k in range(n + 1)))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        out.append(sum((a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)),
                       Fraction(0)))
    return PowerSeries(tuple(out))


def ps_monomial_shift(a: PowerSeries, p: int) -> PowerSeries:
    """Multiply by z^p: shift coefficients up, keep the order, drop the top."""
    if p < 0:
        raise ValueError(f"monomial shift needs p >= 0, got {p}")
    zeros = (Fraction(0),) * min(p, a.order + 1)
    return PowerSeries((zeros + a.coeffs)[: a.order + 1])


def coefficient(a: PowerSeries, n: int) -> Fraction:
    """Coefficient of z^n; out of truncation range is an error, never 0."""
    if not 0 <= n <= a.order:
        raise IndexError(
            f"coefficient {n} outside truncation range 0..{a.order}"
        )
    return a.coeffs[n]


def binomial_series(m: Fraction | int, order: int, at_minus_z: bool = False) -> PowerSeries:
    """Expansion of (1+z)^m to the given order; coefficient k is C(m, k).

    With ``at_minus_z`` the variable is negated, giving (1-z)^m.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    m = Fraction(m)
    out = []
    for k in range(order + 1):
        c = binom(m, k)
        if at_minus_z and k % 2 == 1:
            c = -c
        out.append(c)
    return PowerSeries(tuple(out))


def log_geometric(order: int) -> PowerSeries:
    """-log(1-z) = z + z^2/2 + z^3/3 + ... to the given order."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return PowerSeries(
        tuple(Fraction(0) if k == 0 else Fraction(1, k) for k in range(order + 1))
    )


def lemma_coefficient(p: int, q: Fraction | int, n: int) -> Fraction:
    """Coefficient of z^n in z^p/(1-z)^(q+1), as the closed form C(n-p+q, n-p).

    The lower index n-p (not q) keeps the formula valid for rational q, and
    makes the value 0 for n < p without a special case.
    """
    return binom(Fraction(q) + n - p, n - p)


def valuation(a: PowerSeries) -> int | None:
    """Index of the first nonzero coefficient, or None if all stored
    coefficients vanish."""
    for k, c in enumerate(a.coeffs):
        if c != 0:
            return k
    return None


class SeriesDomainError(ValueError):
    """Raised for a division or power that has no truncated-series value."""


def ps_inverse(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; needs a nonzero constant term."""
    if a.coeffs[0] == 0:
        raise SeriesDomainError("cannot invert a series with zero constant term")
    inv0 = 1 / a.coeffs[0]
    out = [inv0]
    for k in range(1, a.order + 1):
        acc = sum((a.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-inv0 * acc)
    return PowerSeries(tuple(out))


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Exact division a/b, factoring a common power of z first.

    Legal whenever the denominator's lowest power of z also divides the
    numerator; z^2/z is fine, 1/z is not.
    """
    v = valuation(b)
    if v is None:
        raise SeriesDomainError("division by a series that is zero to its order")
    if v > 0:
        if any(c != 0 for c in a.coeffs[:v]):
            raise SeriesDomainError(
                "division would produce negative powers of z: denominator "
                f"has valuation {v}, numerator does not"
            )
        a = PowerSeries(a.coeffs[v:]) if a.order >= v else constant(0, 0)
        b = PowerSeries(b.coeffs[v:])
    return ps_mul(a, ps_inverse(b))


def _int_nth_root(value: int, d: int) -> int | None:
    """Exact d-th root of a (possibly negative) integer, or None."""
    if value < 0:
        if d % 2 == 0:
            return None
        r = _int_nth_root(-value, d)
        return None if r is None else -r
    if value in (0, 1):
        return value
    r = round(value ** (1.0 / d))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**d == value:
            return cand
    return None


def fraction_pow(base: Fraction, exponent: Fraction) -> Fraction:
    """base**exponent when the result is rational; otherwise an error."""
    if exponent.denominator == 1:
        e = exponent.numerator
        if base == 0 and e < 0:
            raise SeriesDomainError("zero raised to a negative power")
        return base**e
    if base == 0:
        return Fraction(0)
    num = _int_nth_root(base.numerator, exponent.denominator)
    den = _int_nth_root(base.denominator, exponent.denominator)
    if num is None or den is None:
        raise SeriesDomainError(
            f"{base}^{exponent} is not rational; only exact powers are supported"
        )
    return Fraction(num, den) ** exponent.numerator


def ps_pow(a: PowerSeries, exponent: Fraction | int) -> PowerSeries:
    """Raise a series to a rational power.

    For negative or fractional exponents the base is normalized as
    z^s * u with u(0) != 0; the result z^(s*e) * u^e must again have only
    nonnegative integer powers of z, and u(0)^e must be rational.
    """
    e = Fraction(exponent)
    if e.denominator == 1 and e >= 0:
        out = constant(1, a.order)
        for _ in range(int(e)):
            out = ps_mul(out, a)
        return out
    s = valuation(a)
    if s is None:
        raise SeriesDomainError("zero series cannot be raised to this power")
    shift = e * s
    if shift.denominator != 1 or shift < 0:
        raise SeriesDomainError(
            f"power produces z^({shift}), not a nonnegative integer power"
        )
    u = PowerSeries(a.coeffs[s:])
    lead = fraction_pow(u.coeffs[0], e)
    # u^e = lead * sum_k C(e, k) w^k with w = u/u0 - 1 (valuation >= 1)
    w = PowerSeries(tuple(
        (c / u.coeffs[0] if k > 0 else Fraction(0)) for k, c in enumerate(u.coeffs)
    ))
    acc = constant(lead, u.order)
    wpow = constant(1, u.order)
    for k in range(1, u.order + 1):
        wpow = ps_mul(wpow, w)
        term = PowerSeries(tuple(lead * binom(e, k) * c for c in wpow.coeffs))
        acc = ps_add(acc, term)
    result = ps_monomial_shift(
        PowerSeries(acc.coeffs + (Fraction(0),) * int(shift)), int(shift)
    )
    return PowerSeries(result.coeffs[: min(a.order, acc.order + int(shift)) + 1])
