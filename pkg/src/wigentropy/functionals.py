"""Measures and entropies built from a Wigner function.

``mu = |W| / ||W||_1`` is a probability density on phase space and
``nu = (pi hbar) mu`` is the auxiliary measure bounded by 1.  The Wigner
entropy is the Shannon entropy of ``mu``; the Wigner-Renyi entropies are
its Renyi entropies.  ``J``, ``K_eps`` and ``xi`` are the intermediate
quantities of the entropy lower-bound argument, exposed so they can be
checked one by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResolutionError, UsageError
from .grid import INF, Field2D, _fsum, lq_norm
from .transforms import AmbiguityField, WignerField

__all__ = [
    "NormalizedMeasure",
    "AuxiliaryMeasure",
    "mu_of",
    "nu_of",
    "purity",
    "l1_mass",
    "wigner_entropy",
    "renyi_entropy",
    "nu_entropy",
    "discrete_entropy",
    "product_entropy",
    "lieb_ambiguity_entropy",
    "j_functional",
    "k_epsilon",
    "k_epsilon_lower_bound",
    "k_epsilon_admissible",
    "EPS_MAX",
    "xi",
]

ZERO_CUTOFF = 1e-300
L1_FLOOR_TOL = 1e-4
NU_CEIL_TOL = 1e-4

#: K_eps needs eps + eps^2 < 1.
EPS_MAX = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class NormalizedMeasure:
    mu: Field2D
    l1_mass_of_source: float


@dataclass(frozen=True)
class AuxiliaryMeasure:
    nu: Field2D
    hbar: float


def l1_mass(w: WignerField) -> float:
    return lq_norm(w.field, 1)


def mu_of(w: WignerField) -> NormalizedMeasure:
    """Normalize ``|W|`` to a probability density.

    ``||W||_1 >= 1`` for every Wigner function, so a smaller value means the
    samples are broken (too coarse a grid or truncated tails).
    """
    l1 = l1_mass(w)
    if l1 < 1.0 - L1_FLOOR_TOL:
        raise ResolutionError(f"||W||_1 = {l1:.8g} < 1; the Wigner samples are unreliable")
    return NormalizedMeasure(Field2D(w.grid, np.abs(w.values) / l1), l1)


def nu_of(w: WignerField) -> AuxiliaryMeasure:
    mu = mu_of(w)
    nu = Field2D(w.grid, mu.mu.values * (math.pi * w.hbar))
    top = nu.sup()
    if top > 1.0 + NU_CEIL_TOL:
        raise ResolutionError(f"sup nu = {top:.8g} > 1; the Wigner samples are unreliable")
    return AuxiliaryMeasure(nu, w.hbar)


def purity(w: WignerField) -> float:
    """``(2 pi hbar) ||W||_2^2``."""
    return 2 * math.pi * w.hbar * lq_norm(w.field, 2) ** 2


def discrete_entropy(values: np.ndarray, cell: float) -> float:
    """``-sum v ln v * cell`` with ``0 ln 0 = 0``."""
    v = np.ravel(np.asarray(values, dtype=float))
    if not np.all(np.isfinite(v)):
        raise DomainError("density contains non-finite values")
    if np.any(v < 0):
        raise DomainError("density must be nonnegative")
    pos = v[v > ZERO_CUTOFF]
    return -_fsum(pos * np.log(pos)) * cell


def wigner_entropy(w: WignerField) -> float:
    """Shannon entropy ``-int mu ln mu`` of the normalized ``|W|``."""
    mu = mu_of(w).mu
    return discrete_entropy(mu.values, mu.grid.cell_area)


def nu_entropy(w: WignerField) -> float:
    """``H[nu] = -int nu ln nu``."""
    nu = nu_of(w).nu
    return discrete_entropy(nu.values, nu.grid.cell_area)


def product_entropy(entropies) -> float:
    """Entropy of a product state from the entropies of its factors.

    ``mu`` of a tensor product is the product of the factor measures, so
    the entropies add.
    """
    return math.fsum(entropies)


def renyi_entropy(w: WignerField, alpha: float) -> float:
    """``alpha/(1-alpha) ln ||mu||_alpha``; ``-ln sup mu`` at ``alpha = INF``."""
    if alpha == INF:
        return -math.log(mu_of(w).mu.sup())
    if not alpha > 1:
        raise DomainError(f"Renyi order must exceed 1 (use wigner_entropy for the limit), got {alpha}")
    norm = lq_norm(mu_of(w).mu, alpha)
    return alpha / (1.0 - alpha) * math.log(norm)


def lieb_ambiguity_entropy(a: AmbiguityField) -> float:
    """``-int |A|^2 ln |A|^2`` for a unit-norm pair."""
    n2 = lq_norm(a.field, 2)
    if abs(n2 - 1.0) > 1e-4:
        raise UsageError(f"||A||_2 = {n2:.8g}; the pair must have unit norms")
    sq = np.abs(a.values) ** 2
    return discrete_entropy(sq, a.grid.cell_area)


def j_functional(w: WignerField, q: float) -> float:
    """``J(q) = ||nu||_q^q``."""
    if not q >= 1:
        raise DomainError(f"J(q) needs q >= 1, got {q}")
    nu = nu_of(w).nu
    return _fsum(nu.values ** q) * nu.grid.cell_area


def k_epsilon_admissible(eps: float) -> bool:
    return 0 < eps < EPS_MAX


def k_epsilon(w: WignerField, eps: float) -> float:
    """``(J(1) - J(1 + eps + eps^2)) / (eps + eps^2)``, for ``0 < eps < (sqrt5 - 1)/2``."""
    if not k_epsilon_admissible(eps):
        raise DomainError(f"K_eps needs 0 < eps < {EPS_MAX:.6f}, got {eps}")
    s = eps + eps * eps
    return (j_functional(w, 1.0) - j_functional(w, 1.0 + s)) / s


def k_epsilon_lower_bound(eps: float, hbar: float = 1.0, d: int = 1) -> float:
    if not k_epsilon_admissible(eps):
        raise DomainError(f"K_eps needs 0 < eps < {EPS_MAX:.6f}, got {eps}")
    return (math.pi * hbar) ** d * (1.0 - (2.0 + eps) ** (-eps * d)) / (eps + eps * eps)


def xi(theta: float, alpha: float) -> float:
    """``(1-theta)/(1-alpha) ln((1-theta)/(alpha-theta))`` on ``2 - alpha < theta < 1``."""
    if not 1 < alpha < 2:
        raise DomainError(f"xi needs 1 < alpha < 2, got {alpha}")
    if not 2 - alpha < theta < 1:
        raise DomainError(f"xi needs {2 - alpha} < theta < 1, got {theta}")
    return (1 - theta) / (1 - alpha) * math.log((1 - theta) / (alpha - theta))
