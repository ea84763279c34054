"""Sharp constants: Babenko-Beckner ``C_r`` and Lieb's ``H(p, q, d)``."""

from __future__ import annotations

import math

from .errors import DomainError
from .grid import INF

__all__ = [
    "conjugate",
    "babenko_beckner",
    "lieb_constant",
    "lieb_constant_product",
    "lieb_admissible",
    "mixed_lq_constant",
    "new_inequality_constant_p2",
    "new_inequality_constant_p2_as_printed",
    "wigner_interpolation_constant",
    "cross_wigner_interpolation_constant",
    "measure_bound",
    "renyi_bound",
    "alpha_limit_bound",
]


def conjugate(r: float) -> float:
    """Hoelder conjugate ``r' = r/(r-1)``, with ``1' = INF`` and ``INF' = 1``."""
    if r == INF:
        return 1.0
    if not r >= 1:
        raise DomainError(f"exponent must be >= 1, got {r}")
    if r == 1:
        return INF
    return r / (r - 1.0)


def babenko_beckner(r: float) -> float:
    """``C_r = sqrt(r^(1/r) / r'^(1/r'))``; ``C_1 = C_INF = 1``."""
    if r == INF or r == 1:
        return 1.0
    if not r > 1:
        raise DomainError(f"Babenko-Beckner constant needs r >= 1, got {r}")
    rp = conjugate(r)
    return math.sqrt(r ** (1.0 / r) / rp ** (1.0 / rp))


def lieb_admissible(p: float, q: float) -> bool:
    """Hypotheses on ``(p, q)``: ``q' <= p, p' <= q`` if ``q >= 2``, else ``q <= p, p' <= q'``."""
    if not (q >= 1 and 1 < p < INF):
        return False
    pp = conjugate(p)
    lo, hi = (conjugate(q), q) if q >= 2 else (q, conjugate(q))
    eps = 1e-12
    return lo - eps <= p <= hi + eps and lo - eps <= pp <= hi + eps


def _check(p, q):
    if not lieb_admissible(p, q):
        raise DomainError(f"(p, q) = ({p}, {q}) is outside the admissible range")


def _pow(base: float, expo: float) -> float:
    # 0^0 = 1 at the edges of the admissible range.
    return 1.0 if expo == 0 or abs(expo) < 1e-15 else base ** expo


def lieb_constant(p: float, q: float, d: int = 1) -> float:
    """Closed form of ``H(p, q, d)``."""
    _check(p, q)
    pp = conjugate(p)
    val = (p * pp / (q * q)
           * _pow(abs(q - 2), 2 - q)
           * _pow(abs(q - p), -1 + q / p)
           * _pow(abs(q - pp), -1 + q / pp))
    return val ** (d / (2.0 * q))


def lieb_constant_product(p: float, q: float, d: int = 1) -> float:
    """``H`` assembled from Babenko-Beckner constants (defined for ``q >= 2``)."""
    _check(p, q)
    if q < 2:
        raise DomainError("the product form needs q >= 2")
    qp = conjugate(q)
    pp = conjugate(p)
    inner = babenko_beckner(p / qp) * babenko_beckner(pp / qp) / babenko_beckner(q / qp)
    return (babenko_beckner(qp) * inner ** (1.0 / qp)) ** d


def mixed_lq_constant(q: float, hbar: float = 1.0, d: int = 1) -> float:
    """``(1 / (q (pi hbar)^(q-1)))^(d/q)``: the ``L^q`` bound on any Wigner function, ``q >= 2``."""
    if not q >= 2:
        raise DomainError(f"the L^q bound needs q >= 2, got {q}")
    return (1.0 / (q * (math.pi * hbar) ** (q - 1))) ** (d / q)


def _check_q_theta(q, theta):
    if not 1 < q < 2:
        raise DomainError(f"needs 1 < q < 2, got q = {q}")
    if not 2 - q < theta < 1:
        raise DomainError(f"needs {2 - q} < theta < 1, got theta = {theta}")


def new_inequality_constant_p2(q: float, theta: float, d: int = 1) -> float:
    """``H(2, r, d)^(1 - theta/q)`` with ``r = (q-theta)/(1-theta)``.

    Equals ``[2(1-theta)/(q-theta)]^(d(1-theta)/q)``.
    """
    _check_q_theta(q, theta)
    return (2 * (1 - theta) / (q - theta)) ** (d * (1 - theta) / q)


def new_inequality_constant_p2_as_printed(q: float, theta: float, d: int = 1) -> float:
    """The same constant with exponent ``d``; too small, kept for comparison."""
    _check_q_theta(q, theta)
    return (2 * (1 - theta) / (q - theta)) ** d


def wigner_interpolation_constant(q: float, theta: float, hbar: float = 1.0, d: int = 1) -> float:
    _check_q_theta(q, theta)
    return ((math.pi * hbar) ** (-d * (1 - 1 / q))
            * ((1 - theta) / (q - theta)) ** (d / q * (1 - theta)))


def cross_wigner_interpolation_constant(q: float, theta: float, hbar: float = 1.0, d: int = 1) -> float:
    """Factor multiplying ``(2^d ||W(f,g)||_1)^(theta/q) ||f||_2 ||g||_2``."""
    ph = math.pi * hbar
    return ph ** -d * (ph / 2) ** (d / q) * new_inequality_constant_p2(q, theta, d)


def measure_bound(q: float, theta: float | None = None, hbar: float = 1.0, d: int = 1) -> float:
    """Upper bound on ``||nu||_q``: ``(pi hbar/q)^(d/q)`` for ``q >= 2``, else the ``theta`` form."""
    ph = math.pi * hbar
    if q >= 2:
        if theta is not None:
            raise DomainError("theta is only used for 1 < q < 2")
        return (ph / q) ** (d / q)
    if theta is None:
        raise DomainError("1 < q < 2 needs an interpolation parameter theta")
    _check_q_theta(q, theta)
    return (ph * ((1 - theta) / (q - theta)) ** (1 - theta)) ** (d / q)


def renyi_bound(alpha: float, hbar: float = 1.0, d: int = 1) -> float:
    """Lower bound on ``H_alpha``: ``d(ln pi hbar + ln alpha/(alpha-1))`` for ``alpha >= 2``, ``d ln 2 pi hbar`` below."""
    if alpha == INF:
        return d * math.log(math.pi * hbar)
    if not alpha > 1:
        raise DomainError(f"Renyi order must exceed 1, got {alpha}")
    if alpha >= 2:
        return d * (math.log(math.pi * hbar) + math.log(alpha) / (alpha - 1))
    return d * math.log(2 * math.pi * hbar)


def alpha_limit_bound(eps: float, hbar: float = 1.0, d: int = 1) -> float:
    """``d(ln pi hbar + ln(2+eps)/(1+eps))``, the bound on ``H_{1+eps+eps^2}``."""
    if not eps > 0:
        raise DomainError(f"needs eps > 0, got {eps}")
    return d * (math.log(math.pi * hbar) + math.log(2 + eps) / (1 + eps))
