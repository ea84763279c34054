"""Upper incomplete gamma function."""

from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["upper_incomplete_gamma"]

_EPS = 1e-16
_TINY = 1e-300
_MAX_ITER = 10_000


def _lower_series(s: float, x: float) -> float:
    # gamma(s, x) = x^s e^-x sum_n x^n / (s (s+1) ... (s+n))
    term = 1.0 / s
    total = term
    a = s
    for _ in range(_MAX_ITER):
        a += 1.0
        term *= x / a
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + s * math.log(x))


def _upper_continued_fraction(s: float, x: float) -> float:
    # Modified Lentz evaluation of the Legendre continued fraction.
    b = x + 1.0 - s
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * math.exp(-x + s * math.log(x))


def upper_incomplete_gamma(s: float, x: float) -> float:
    """``Gamma(s, x) = int_x^inf t^(s-1) e^-t dt`` for ``0 < s <= 10`` and ``x >= 0``."""
    if not 0 < s <= 10:
        raise DomainError(f"upper_incomplete_gamma needs 0 < s <= 10, got s = {s}")
    if not x >= 0 or not math.isfinite(x):
        raise DomainError(f"upper_incomplete_gamma needs finite x >= 0, got x = {x}")
    if x == 0:
        return math.gamma(s)
    if x < s + 1.0:
        return math.gamma(s) - _lower_series(s, x)
    return _upper_continued_fraction(s, x)
