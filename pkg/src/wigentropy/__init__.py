"""Wigner functions, Wigner entropies and the sharp inequalities around them.

Typical use::

    from wigentropy import default_grid, fock, wigner_pure, wigner_entropy
    grid = default_grid(hbar=1.0)
    w = wigner_pure(fock(0, grid.x_axis))
    wigner_entropy(w)          # 1 + ln(pi)
"""

from .constants import babenko_beckner, lieb_constant, lieb_constant_product
from .errors import CapabilityError, DomainError, ResolutionError, SpecError, UsageError, WigentropyError
from .functionals import (j_functional, k_epsilon, lieb_ambiguity_entropy, mu_of, nu_entropy, nu_of,
                          purity, renyi_entropy, wigner_entropy, xi)
from .grid import INF, Field2D, GridSpec1D, GridSpec2D, HbarConfig, default_grid, integrate, lq_norm
from .inequalities import InequalityReport
from .states import (Ket, MixedState, SymplecticMap, bump, fock, gaussian_state, hermite_bump,
                     matched_gaussian_pair, shifted_copy_mixture)
from .transforms import (AmbiguityField, WignerField, ambiguity, cross_wigner, relation_check, wigner_mixed,
                         wigner_of, wigner_pure)

__version__ = "0.1.0"

__all__ = [
    "INF", "Field2D", "GridSpec1D", "GridSpec2D", "HbarConfig", "default_grid", "integrate", "lq_norm",
    "Ket", "MixedState", "SymplecticMap", "bump", "fock", "gaussian_state", "hermite_bump",
    "matched_gaussian_pair", "shifted_copy_mixture",
    "AmbiguityField", "WignerField", "ambiguity", "cross_wigner", "relation_check", "wigner_mixed",
    "wigner_of", "wigner_pure",
    "j_functional", "k_epsilon", "lieb_ambiguity_entropy", "mu_of", "nu_entropy", "nu_of", "purity",
    "renyi_entropy", "wigner_entropy", "xi",
    "babenko_beckner", "lieb_constant", "lieb_constant_product", "InequalityReport",
    "WigentropyError", "DomainError", "UsageError", "ResolutionError", "CapabilityError", "SpecError",
]
