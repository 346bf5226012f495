"""Exact verification of supercongruences and terminating hypergeometric identities."""

from ._core import (
    ConfigError,
    NonIntegralAtP,
    SkippedPole,
    __version__,
    binomial,
    euler_number,
    eval_terminating_pfq,
    fermat_quotient2,
    harmonic,
    is_prime,
    legendre_symbol,
    list_checks,
    main_sum,
    padic_valuation,
    pochhammer,
    reduce_mod,
    run,
)

__all__ = [
    "ConfigError",
    "NonIntegralAtP",
    "SkippedPole",
    "__version__",
    "binomial",
    "euler_number",
    "eval_terminating_pfq",
    "fermat_quotient2",
    "harmonic",
    "is_prime",
    "legendre_symbol",
    "list_checks",
    "main_sum",
    "padic_valuation",
    "pochhammer",
    "reduce_mod",
    "run",
]
