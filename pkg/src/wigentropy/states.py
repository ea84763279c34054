"""Concrete quantum states sampled on a position grid.

Pure states are :class:`Ket` objects (unit L^2 norm on the grid).  Mixed
states are convex combinations of kets.  Everything here is ``d = 1``;
products of one-dimensional states are kept symbolic in
:class:`ProductState` and only enter through extensivity of the entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapabilityError, DomainError, ResolutionError, UsageError
from .grid import GridSpec1D, GridSpec2D, lq_norm_1d

__all__ = [
    "Ket",
    "MixedState",
    "GaussianParams",
    "SymplecticMap",
    "ShiftedMixture",
    "ProductState",
    "fock",
    "hermite_functions",
    "matched_gaussian_pair",
    "gaussian_state",
    "bump",
    "hermite_bump",
    "shifted_copy_mixture",
    "random_fock_mixture",
    "standard_battery",
    "example2_grid",
]

NORM_TOL = 1e-9
WEIGHT_TOL = 1e-12
ORTHO_TOL = 1e-6
MAX_FOCK = 20


class Ket:
    """A sampled wavefunction with unit L^2 norm on ``grid``.

    ``p_axis`` optionally fixes the momentum axis used when the ket is
    transformed to phase space (defaults to a copy of ``grid``).
    """

    __slots__ = ("grid", "values", "hbar", "label", "p_axis", "gaussian")

    def __init__(self, grid: GridSpec1D, values, hbar: float = 1.0, label: str = "",
                 p_axis: GridSpec1D | None = None, gaussian: "GaussianParams | None" = None):
        arr = np.array(values, dtype=complex, copy=True)
        if arr.shape != (grid.n,):
            raise UsageError(f"ket has {arr.shape} samples, grid has {grid.n}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("ket contains non-finite samples")
        norm = lq_norm_1d(arr, grid.spacing, 2)
        if abs(norm - 1.0) > NORM_TOL:
            raise DomainError(f"ket is not normalized on its grid (||f||_2 = {norm:.12g})")
        arr.setflags(write=False)
        self.grid = grid
        self.values = arr
        self.hbar = float(hbar)
        self.label = label
        self.p_axis = p_axis
        self.gaussian = gaussian

    @classmethod
    def normalized(cls, grid: GridSpec1D, values, **kw) -> "Ket":
        arr = np.asarray(values, dtype=complex)
        norm = lq_norm_1d(arr, grid.spacing, 2)
        if norm == 0:
            raise DomainError("cannot normalize a zero wavefunction")
        return cls(grid, arr / norm, **kw)

    @property
    def phase_grid(self) -> GridSpec2D:
        return GridSpec2D(self.grid, self.p_axis if self.p_axis is not None else self.grid)

    def norm(self, p: float = 2) -> float:
        return lq_norm_1d(self.values, self.grid.spacing, p)

    def inner(self, other: "Ket") -> complex:
        """``<self|other>``, anti-linear in ``self``."""
        if other.grid != self.grid:
            raise UsageError("kets live on different grids")
        return complex(np.vdot(self.values, other.values)) * self.grid.spacing

    def with_phase(self, phase: float) -> "Ket":
        return self._replace(self.values * np.exp(1j * phase))

    def reflected(self) -> "Ket":
        """``g^-(x) = g(-x)`` by index reversal on a symmetric grid."""
        if not self.grid.is_symmetric:
            raise DomainError("reflection needs a grid symmetric about 0")
        v = np.zeros_like(self.values)
        # x_j -> -x_j = x_{n-j}; the node x_0 = x_min has no mirror image inside the grid.
        v[1:] = self.values[:0:-1]
        if abs(self.values[0]) > 1e-8 * float(np.max(np.abs(self.values))):
            raise ResolutionError("ket does not vanish at the grid edge; enlarge the grid")
        return Ket.normalized(self.grid, v, hbar=self.hbar, label=f"{self.label}^-",
                              p_axis=self.p_axis)

    def coarsened(self) -> "Ket":
        """Every other sample on a grid of the same extent, renormalized."""
        g = self.grid.coarsened()
        p = self.p_axis.coarsened() if self.p_axis is not None else None
        return Ket.normalized(g, self.values[::2], hbar=self.hbar, label=self.label,
                              p_axis=p, gaussian=self.gaussian)

    def _replace(self, values) -> "Ket":
        return Ket(self.grid, values, hbar=self.hbar, label=self.label, p_axis=self.p_axis,
                   gaussian=self.gaussian)

    def __repr__(self):
        return f"Ket({self.label or '?'}, n={self.grid.n}, hbar={self.hbar})"


@dataclass(frozen=True)
class MixedState:
    """``rho = sum_j p_j |f_j><f_j|`` with all kets on one grid.

    ``spectral`` records whether the kets were verified orthonormal.  Non
    spectral mixtures are still valid density matrices; only identities
    such as ``purity = sum p_j^2`` need the spectral form.
    """

    components: tuple[tuple[float, Ket], ...]
    label: str = ""
    spectral: bool = field(init=False)

    def __post_init__(self):
        if not self.components:
            raise DomainError("a mixture needs at least one component")
        weights = [w for w, _ in self.components]
        if any(not (0 < w <= 1) for w in weights):
            raise DomainError(f"mixture weights must lie in (0, 1], got {weights}")
        if abs(math.fsum(weights) - 1.0) > WEIGHT_TOL:
            raise DomainError(f"mixture weights sum to {math.fsum(weights)!r}, not 1")
        grid = self.components[0][1].grid
        if any(k.grid != grid for _, k in self.components):
            raise UsageError("all kets of a mixture must share one grid")
        kets = [k for _, k in self.components]
        ortho = all(abs(kets[i].inner(kets[j])) <= ORTHO_TOL
                    for i in range(len(kets)) for j in range(i + 1, len(kets)))
        object.__setattr__(self, "spectral", ortho)

    @classmethod
    def of(cls, weights: Sequence[float], kets: Sequence[Ket], label: str = "") -> "MixedState":
        w = np.asarray(weights, dtype=float)
        if np.any(w <= 0):
            raise DomainError("mixture weights must be positive")
        w = w / math.fsum(w.tolist())
        return cls(tuple(zip(w.tolist(), kets)), label=label)

    @classmethod
    def pure(cls, ket: Ket) -> "MixedState":
        return cls(((1.0, ket),), label=ket.label)

    @property
    def grid(self) -> GridSpec1D:
        return self.components[0][1].grid

    @property
    def hbar(self) -> float:
        return self.components[0][1].hbar

    @property
    def is_pure(self) -> bool:
        return len(self.components) == 1

    def coarsened(self) -> "MixedState":
        return MixedState(tuple((w, k.coarsened()) for w, k in self.components), label=self.label)


@dataclass(frozen=True)
class GaussianParams:
    """``f(x) = exp(-A x^2 + b x + gamma)``, ``g(x) = exp(-A x^2 + c x + eta)``."""

    A: complex
    b: complex = 0
    c: complex = 0
    gamma: complex = 0
    eta: complex = 0

    def __post_init__(self):
        if not complex(self.A).real > 0:
            raise DomainError(f"Gaussian needs Re(A) > 0, got A = {self.A}")


def _standard_j(dim: int) -> np.ndarray:
    d = dim // 2
    return np.block([[np.zeros((d, d)), np.eye(d)], [-np.eye(d), np.zeros((d, d))]])


@dataclass(frozen=True, eq=False)
class SymplecticMap:
    """Linear phase-space map with ``S J S^T = J``."""

    S: np.ndarray

    def __post_init__(self):
        S = np.array(self.S, dtype=float)
        if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] % 2:
            raise DomainError(f"symplectic matrix must be 2d x 2d, got shape {S.shape}")
        J = _standard_j(S.shape[0])
        if np.max(np.abs(S @ J @ S.T - J)) > 1e-10:
            raise DomainError("matrix violates S J S^T = J")
        S.setflags(write=False)
        object.__setattr__(self, "S", S)

    @classmethod
    def rotation(cls, phi: float) -> "SymplecticMap":
        c, s = math.cos(phi), math.sin(phi)
        return cls(np.array([[c, s], [-s, c]]))

    @classmethod
    def squeeze(cls, s: float) -> "SymplecticMap":
        return cls(np.diag([s, 1.0 / s]))

    @classmethod
    def shear(cls, k: float) -> "SymplecticMap":
        return cls(np.array([[1.0, 0.0], [k, 1.0]]))

    def inverse(self) -> "SymplecticMap":
        J = _standard_j(self.S.shape[0])
        # S^{-1} = -J S^T J for symplectic S.
        return SymplecticMap(-J @ self.S.T @ J)

    def __matmul__(self, other: "SymplecticMap") -> "SymplecticMap":
        return SymplecticMap(self.S @ other.S)


def hermite_functions(nmax: int, u: np.ndarray) -> np.ndarray:
    """Normalized Hermite functions ``psi_0 .. psi_nmax`` at ``u`` (unit scale).

    Uses the three-term recurrence on the normalized functions themselves,
    so nothing overflows for large orders.
    """
    u = np.asarray(u, dtype=float)
    out = np.empty((nmax + 1,) + u.shape)
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * u * u)
    if nmax >= 1:
        out[1] = math.sqrt(2.0) * u * out[0]
    for k in range(1, nmax):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * u * out[k] - math.sqrt(k / (k + 1)) * out[k - 1]
    return out


def fock(n: int, grid: GridSpec1D, hbar: float = 1.0, p_axis: GridSpec1D | None = None) -> Ket:
    """n-th harmonic-oscillator eigenfunction (m = omega = 1)."""
    if int(n) != n or n < 0:
        raise DomainError(f"Fock index must be a nonnegative integer, got {n}")
    if n > MAX_FOCK:
        raise CapabilityError(f"Fock index {n} exceeds the supported maximum {MAX_FOCK}")
    x = grid.points
    psi = hermite_functions(int(n), x / math.sqrt(hbar))[int(n)] * hbar ** -0.25
    gauss = GaussianParams(A=1.0 / (2 * hbar)) if n == 0 else None
    return Ket(grid, psi, hbar=hbar, label=f"fock:{int(n)}", p_axis=p_axis, gaussian=gauss)


def matched_gaussian_pair(params: GaussianParams, grid: GridSpec1D, hbar: float = 1.0,
                          p_axis: GridSpec1D | None = None) -> tuple[Ket, Ket]:
    """Normalized ``f, g`` sharing the quadratic coefficient ``A``."""
    x = grid.points
    A = complex(params.A)
    fv = np.exp(-A * x * x + complex(params.b) * x + complex(params.gamma))
    gv = np.exp(-A * x * x + complex(params.c) * x + complex(params.eta))
    f = Ket.normalized(grid, fv, hbar=hbar, label="gauss-f", p_axis=p_axis, gaussian=params)
    g = Ket.normalized(grid, gv, hbar=hbar, label="gauss-g", p_axis=p_axis, gaussian=params)
    return f, g


def gaussian_state(M, z0=(0.0, 0.0), grid: GridSpec1D | None = None, hbar: float = 1.0,
                   p_axis: GridSpec1D | None = None, label: str = "") -> Ket:
    """Pure Gaussian whose Wigner function is ``exp(-(z-z0).M(z-z0)/hbar)/(pi hbar)``.

    ``M`` must be symmetric positive definite and symplectic (``det M = 1``).
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (2, 2) or abs(M[0, 1] - M[1, 0]) > 1e-12:
        raise DomainError("M must be a symmetric 2x2 matrix")
    SymplecticMap(M)
    if M[0, 0] <= 0 or M[1, 1] <= 0:
        raise DomainError("M must be positive definite")
    alpha = 1.0 / M[1, 1]
    beta = M[0, 1] / M[1, 1]
    x0, p0 = map(float, z0)
    x = grid.points
    A = (alpha + 1j * beta) / (2 * hbar)
    vals = np.exp(-A * (x - x0) ** 2 + 1j * p0 * x / hbar)
    params = GaussianParams(A=A, b=2 * A * x0 + 1j * p0 / hbar)
    return Ket.normalized(grid, vals, hbar=hbar, label=label or "gaussian", p_axis=p_axis,
                          gaussian=params)


def _bump_profile(x: np.ndarray, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    t = (2 * x - (a + b)) / (b - a)
    out = np.zeros_like(x, dtype=float)
    inside = np.abs(t) < 1
    out[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    return out, t


def _check_support(support, grid: GridSpec1D) -> tuple[float, float]:
    a, b = map(float, support)
    if not b > a:
        raise DomainError(f"support needs b > a, got [{a}, {b}]")
    if a < grid.x_min or b > grid.x_max:
        raise DomainError(f"support [{a}, {b}] exceeds the grid [{grid.x_min}, {grid.x_max})")
    return a, b


def bump(support, grid: GridSpec1D, hbar: float = 1.0, p_axis: GridSpec1D | None = None) -> Ket:
    """Smooth compactly supported state ``N exp(-1/(1-t^2))`` on ``[a, b]``."""
    a, b = _check_support(support, grid)
    prof, _ = _bump_profile(grid.points, a, b)
    return Ket.normalized(grid, prof, hbar=hbar, label=f"bump:{a:g},{b:g}", p_axis=p_axis)


def hermite_bump(support, order: int, lam: float, grid: GridSpec1D, hbar: float = 1.0,
                 p_axis: GridSpec1D | None = None) -> Ket:
    """Bump on ``[a, b]`` multiplied by the Hermite function ``psi_order(lam * t)``.

    ``t`` is the support coordinate rescaled to ``[-1, 1]``.  For large
    ``lam`` this is a squeezed Fock state barely touched by the window, so
    its Wigner L^1 mass approaches that of the Fock state.
    """
    a, b = _check_support(support, grid)
    prof, t = _bump_profile(grid.points, a, b)
    h = hermite_functions(order, lam * t)[order]
    return Ket.normalized(grid, prof * h, hbar=hbar, label=f"hbump:{order},{lam:.6g}",
                          p_axis=p_axis)


@dataclass(frozen=True)
class ShiftedMixture:
    """``W eta_n(z) = (1/n) sum_j W g0(z - z_j)`` with ``z_j = (j, 0)``, ``j = 1..n``.

    Kept as a description; the copies have pairwise disjoint strip supports.
    """

    base: Ket
    n: int
    shifts: tuple[tuple[float, float], ...]
    weights: tuple[float, ...]


def shifted_copy_mixture(g0: Ket, n: int) -> ShiftedMixture:
    if int(n) != n or n < 1:
        raise DomainError(f"number of copies must be a positive integer, got {n}")
    x = g0.grid.points
    nz = np.nonzero(np.abs(g0.values) > 0)[0]
    lo, hi = x[nz[0]], x[nz[-1]]
    if hi - lo >= 1.0:
        raise DomainError("base state support is wider than the unit shift; copies would overlap")
    steps = 1.0 / g0.grid.spacing
    if abs(steps - round(steps)) > 1e-9:
        raise DomainError("unit shifts do not land on grid nodes; grid spacing must divide 1")
    shifts = tuple((float(j), 0.0) for j in range(1, int(n) + 1))
    return ShiftedMixture(g0, int(n), shifts, tuple([1.0 / n] * int(n)))


@dataclass(frozen=True)
class ProductState:
    """Symbolic tensor product of one-dimensional states (``d = len(factors)``)."""

    factors: tuple

    @property
    def d(self) -> int:
        return len(self.factors)


def random_fock_mixture(rng: np.random.Generator, grid: GridSpec1D, hbar: float = 1.0,
                        n_components: int = 3, max_n: int = 5) -> MixedState:
    """Spectral mixture of distinct Fock states with Dirichlet weights."""
    ns = sorted(rng.choice(max_n + 1, size=n_components, replace=False).tolist())
    w = rng.dirichlet(np.ones(n_components))
    kets = [fock(k, grid, hbar) for k in ns]
    return MixedState.of(w, kets, label="mix:" + "+".join(f"{wi:.3f}*{k}" for wi, k in zip(w, ns)))


def standard_battery(grid: GridSpec1D, hbar: float = 1.0, seed: int = 0, n_mixtures: int = 20,
                     n_gaussians: int = 10) -> dict[str, MixedState]:
    """Fock states 0..5, seeded 3-component Fock mixtures and random Gaussians."""
    out: dict[str, MixedState] = {}
    for n in range(6):
        out[f"fock:{n}"] = MixedState.pure(fock(n, grid, hbar))
    rng = np.random.default_rng(seed)
    for i in range(n_mixtures):
        out[f"mixture:{i}"] = random_fock_mixture(rng, grid, hbar)
    for i in range(n_gaussians):
        s = math.exp(rng.uniform(-0.5, 0.5))
        phi = rng.uniform(0, math.pi)
        R = SymplecticMap.rotation(phi).S
        M = R.T @ np.diag([s * s, 1 / (s * s)]) @ R
        M = 0.5 * (M + M.T)
        z0 = rng.uniform(-1.0, 1.0, size=2) * math.sqrt(hbar)
        out[f"gaussian:{i}"] = MixedState.pure(gaussian_state(M, z0, grid, hbar, label=f"gaussian:{i}"))
    return out


def example2_grid() -> GridSpec2D:
    """Grid for the compactly supported states: ``dx = 1/256`` so unit shifts hit nodes."""
    return GridSpec2D(GridSpec1D(-2.0, 2.0, 1024), GridSpec1D(-256.0, 256.0, 2048))
