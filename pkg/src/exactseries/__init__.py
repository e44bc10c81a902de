"""Exact rational arithmetic for generalized binomial coefficients,
truncated power series, and multi-route verification of binomial
convolution and logarithmic-series identities."""

from .binomial import BinomialSymbol, binom, complement, harmonic
from .series import (
    PowerSeries,
    binomial_series,
    coefficient,
    lemma_coefficient,
    log_geometric,
    ps_add,
    ps_monomial_shift,
    ps_mul,
)
from .identities import (
    IdentityReport,
    log_closed,
    log_lhs,
    log_rhs,
    vandermonde_closed,
    vandermonde_series_route,
    vandermonde_sum,
    verify,
)

__all__ = [
    "BinomialSymbol",
    "binom",
    "complement",
    "harmonic",
    "PowerSeries",
    "ps_add",
    "ps_mul",
    "ps_monomial_shift",
    "binomial_series",
    "log_geometric",
    "coefficient",
    "lemma_coefficient",
    "IdentityReport",
    "vandermonde_sum",
    "vandermonde_closed",
    "vandermonde_series_route",
    "log_lhs",
    "log_rhs",
    "log_closed",
    "verify",
]
