"""Hurwitz zeta, negapolygamma functions and closed forms of Hermite-type integrals."""

import json
from fractions import Fraction

from ._negapoly import (
    AccuracyError,
    ArgumentError,
    DomainError,
    NoClosedFormError,
    PoleError,
    balanced_A,
    bernoulli_polynomial,
    closed_form,
    digamma,
    has_closed_form,
    hurwitz_zeta,
    hurwitz_zeta_prime,
    integrate,
    log_gamma,
    negapolygamma,
    negapolygamma_at_zero,
    oracle,
    polygamma,
    riemann_zeta,
    special_value_table,
    zeta_prime_neg,
)
from ._negapoly import bernoulli_number as _bernoulli_text
from ._negapoly import verify_suite as _verify_text


def bernoulli_number(k):
    """Exact B_k as a Fraction."""
    return Fraction(_bernoulli_text(k))


def verify_suite(config=None):
    """Runs the suite; returns the parsed report lines (header, records, summary).

    With config {"format": "csv"} the raw CSV text is returned instead.
    """
    text = _verify_text(config)
    if config and config.get("format") == "csv":
        return text
    return [json.loads(line) for line in text.splitlines()]


__all__ = [name for name in dir() if not name.startswith("_") and name not in ("json", "Fraction")]
