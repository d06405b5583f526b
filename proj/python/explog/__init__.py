"""Exact rational enclosures for powers, logarithms, e and exp.

Every quantity that may be irrational is returned as an Interval with exact
rational endpoints guaranteed to contain the true value. Inputs are exact:
ints, strings like "3/7" or "1.25" or "1e-6", fractions.Fraction, or
Rational. Floats are rejected.
"""

from ._explog import (
    Interval,
    Rational,
    amgm,
    check_quotient_monotone,
    compound,
    crosscheck,
    diff_quotient,
    e,
    exp,
    exp_series,
    ln,
    ln_integral,
    log,
    nth_root,
    pow_rat,
)

__all__ = [
    "Interval",
    "Rational",
    "amgm",
    "check_quotient_monotone",
    "compound",
    "crosscheck",
    "diff_quotient",
    "e",
    "exp",
    "exp_series",
    "ln",
    "ln_integral",
    "log",
    "nth_root",
    "pow_rat",
]
