"""Wigner, cross-Wigner and ambiguity transforms on uniform grids.

Conventions
-----------
Wigner (hbar convention)::

    W(f,g)(x,p) = (2 pi hbar)^-1 int f(x+y/2) conj(g(x-y/2)) exp(-i y p / hbar) dy

Ambiguity (hbar-free convention)::

    A(f,g)(tau,omega) = int f(t-tau/2) conj(g(t+tau/2)) exp(-2 pi i omega t) dt

With ``y = 2 s`` and ``s`` running over multiples of the grid spacing, both
``x + s`` and ``x - s`` are grid nodes, so no interpolation enters the
kernel.  The remaining Fourier sum is evaluated with the chirp-z transform,
which lets the momentum (or frequency) axis be any uniform grid instead of
the one an ordinary FFT would impose.  The only bridge between the two
conventions is :func:`relation_check`.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.interpolate import RegularGridInterpolator
from scipy.signal import czt

from .errors import DomainError, ResolutionError, UsageError
from .grid import Field2D, GridSpec1D, GridSpec2D, integrate, real_values
from .states import Ket, MixedState, ShiftedMixture, SymplecticMap

__all__ = [
    "WignerField",
    "AmbiguityField",
    "wigner_pure",
    "cross_wigner",
    "ambiguity",
    "ambiguity_grid",
    "wigner_mixed",
    "wigner_of",
    "relation_check",
    "pullback",
    "shifted_copies",
    "superpose",
    "gaussian_wigner",
]

NORMALIZATION_TOL = 1e-3
SUP_TOL = 1e-6


class WignerField:
    """Real Wigner function of a state, with its provenance.

    Construction fails with :class:`ResolutionError` when the samples cannot
    be a Wigner function: total mass off by more than 1e-3 (aliasing or
    truncation) or ``sup |W| > 1/(pi hbar)``.
    """

    __slots__ = ("field", "source", "hbar")

    def __init__(self, field: Field2D, source: str = "", hbar: float = 1.0, check: bool = True):
        if field.is_complex:
            try:
                field = Field2D(field.grid, real_values(field))
            except DomainError as exc:
                raise ResolutionError(f"Wigner samples are not real: {exc}") from exc
        self.field = field
        self.source = source
        self.hbar = float(hbar)
        if check:
            mass = integrate(field)
            if abs(mass - 1.0) > NORMALIZATION_TOL:
                raise ResolutionError(
                    f"Wigner function integrates to {mass:.6g}; grid too coarse or too small")
            bound = 1.0 / (math.pi * hbar)
            if field.sup() > bound * (1 + SUP_TOL):
                raise ResolutionError(
                    f"sup |W| = {field.sup():.8g} exceeds 1/(pi hbar) = {bound:.8g}")

    @property
    def grid(self) -> GridSpec2D:
        return self.field.grid

    @property
    def values(self) -> np.ndarray:
        return self.field.values

    def __repr__(self):
        return f"WignerField({self.source}, shape={self.grid.shape}, hbar={self.hbar})"


class AmbiguityField:
    """Complex ambiguity function on a ``(tau, omega)`` grid."""

    __slots__ = ("field", "norm_product")

    def __init__(self, field: Field2D, norm_product: float):
        if field.sup() > norm_product * (1 + SUP_TOL):
            raise ResolutionError("ambiguity function exceeds the Cauchy-Schwarz bound")
        self.field = field
        self.norm_product = float(norm_product)

    @property
    def grid(self) -> GridSpec2D:
        return self.field.grid

    @property
    def values(self) -> np.ndarray:
        return self.field.values


def _padded(v: np.ndarray) -> np.ndarray:
    n = v.size
    out = np.zeros(3 * n, dtype=complex)
    out[n:2 * n] = v
    return out


def _check_pair(f: Ket, g: Ket):
    if f.grid != g.grid:
        raise UsageError("f and g live on different grids")
    if (f.p_axis or f.grid) != (g.p_axis or g.grid):
        raise UsageError("f and g use different momentum axes")


def _wigner_samples(f: np.ndarray, g: np.ndarray, x_axis: GridSpec1D, p_axis: GridSpec1D,
                    hbar: float) -> np.ndarray:
    n = x_axis.n
    dx = x_axis.spacing
    half = n // 2
    fp, gp = _padded(f), _padded(g)
    j = np.arange(n)[:, None] + n
    k = np.arange(-half, half)[None, :]
    # R[j, k] = f(x_j + s_k) conj(g(x_j - s_k)),  s_k = k dx,  y = 2 s_k.
    R = fp[j + k] * np.conj(gp[j - k])
    p = p_axis.points
    a = np.exp(2j * dx * p_axis.x_min / hbar)
    w = np.exp(-2j * dx * p_axis.spacing / hbar)
    out = czt(R, m=p_axis.n, w=w, a=a, axis=-1)
    out *= np.exp(2j * half * dx * p / hbar)[None, :]
    out *= dx / (math.pi * hbar)
    return out


@lru_cache(maxsize=32)
def _wigner_pure_cached(f: Ket) -> WignerField:
    grid = f.phase_grid
    vals = _wigner_samples(f.values, f.values, grid.x_axis, grid.p_axis, f.hbar)
    return WignerField(Field2D(grid, vals), source=f.label, hbar=f.hbar)


def wigner_pure(f: Ket) -> WignerField:
    """Wigner function of a pure state on ``f.phase_grid``."""
    return _wigner_pure_cached(f)


def cross_wigner(f: Ket, g: Ket) -> Field2D:
    """Complex cross-Wigner function ``W(f, g)``."""
    _check_pair(f, g)
    grid = f.phase_grid
    return Field2D(grid, _wigner_samples(f.values, g.values, grid.x_axis, grid.p_axis, f.hbar))


def wigner_mixed(rho: MixedState) -> WignerField:
    """``sum_j p_j W f_j``, accumulated one component at a time."""
    return _wigner_mixed_cached(rho)


@lru_cache(maxsize=64)
def _wigner_mixed_cached(rho: MixedState) -> WignerField:
    if rho.is_pure:
        return wigner_pure(rho.components[0][1])
    acc = None
    for w, ket in rho.components:
        part = _wigner_samples(ket.values, ket.values, ket.phase_grid.x_axis,
                               ket.phase_grid.p_axis, ket.hbar).real * w
        acc = part if acc is None else acc + part
    grid = rho.components[0][1].phase_grid
    return WignerField(Field2D(grid, acc), source=rho.label, hbar=rho.hbar)


def wigner_of(state) -> WignerField:
    """Dispatch on :class:`Ket`, :class:`MixedState` or :class:`ShiftedMixture`."""
    if isinstance(state, WignerField):
        return state
    if isinstance(state, Ket):
        return wigner_pure(state)
    if isinstance(state, MixedState):
        return wigner_mixed(state)
    if isinstance(state, ShiftedMixture):
        base = wigner_pure(state.base)
        return shifted_copies(base, state.shifts, state.weights)
    raise UsageError(f"cannot build a Wigner function from {type(state).__name__}")


def ambiguity_grid(phase_grid: GridSpec2D, hbar: float) -> GridSpec2D:
    """Default ``(tau, omega)`` grid matched to a Wigner grid.

    ``tau`` spans ``2 * [x_min, x_max)`` (so ``tau/2`` is a node offset) and
    ``omega = p / (pi hbar)``, which makes :func:`relation_check` land on
    nodes.
    """
    xa, pa = phase_grid.x_axis, phase_grid.p_axis
    tau = GridSpec1D(2 * xa.x_min, 2 * xa.x_max, xa.n)
    omega = pa.scaled(1.0 / (math.pi * hbar))
    return GridSpec2D(tau, omega)


def ambiguity(f: Ket, g: Ket, omega_axis: GridSpec1D | None = None) -> AmbiguityField:
    """Ambiguity function ``A(f, g)(tau, omega)``."""
    _check_pair(f, g)
    xa = f.grid
    if not xa.is_symmetric:
        raise DomainError("ambiguity needs a position grid symmetric about 0")
    grid = ambiguity_grid(f.phase_grid, f.hbar)
    if omega_axis is not None:
        grid = GridSpec2D(grid.x_axis, omega_axis)
    n, dx = xa.n, xa.spacing
    fp, gp = _padded(f.values), _padded(g.values)
    h = np.arange(n)[:, None] - n // 2     # tau_k / 2 = h dx
    j = np.arange(n)[None, :] + n
    Q = fp[j - h] * np.conj(gp[j + h])     # rows: tau, cols: t = x_j
    om = grid.p_axis
    a = np.exp(2j * math.pi * dx * om.x_min)
    w = np.exp(-2j * math.pi * dx * om.spacing)
    vals = czt(Q, m=om.n, w=w, a=a, axis=-1)
    vals *= np.exp(-2j * math.pi * om.points * xa.x_min)[None, :] * dx
    return AmbiguityField(Field2D(grid, vals), f.norm(2) * g.norm(2))


def _complex_interpolator(field: Field2D):
    axes = (field.grid.x_axis.points, field.grid.p_axis.points)
    re = RegularGridInterpolator(axes, field.values.real, method="linear", bounds_error=True)
    im = RegularGridInterpolator(axes, field.values.imag, method="linear", bounds_error=True)
    return lambda pts: re(pts) + 1j * im(pts)


def relation_check(f: Ket, g: Ket, points=None) -> float:
    """Max deviation between ``W(f,g)`` and ``(pi hbar)^-1 A(f, g^-)(-2x, p/(pi hbar))``.

    ``points`` is an ``(m, 2)`` array of ``(x, p)`` phase-space nodes; by
    default every Wigner node whose image lies inside the ambiguity grid
    (all but the ``x = x_min`` row).  Values of ``A`` are resampled by
    linear interpolation, which is exact on nodes.
    """
    _check_pair(f, g)
    hbar = f.hbar
    W = cross_wigner(f, g)
    A = ambiguity(f, g.reflected())
    scale = 1.0 / (math.pi * hbar)
    if points is None:
        # -2 x_j is the tau node with index n - j, and p_m / (pi hbar) is omega node m.
        n = W.grid.x_axis.n
        dev = W.values[1:, :] - A.values[n - np.arange(1, n), :] * scale
        return float(np.max(np.abs(dev)))
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.size == 0:
        return 0.0
    w_vals = _complex_interpolator(W)(pts)
    image = np.column_stack([-2 * pts[:, 0], pts[:, 1] * scale])
    image = _snap(image, A.grid)
    try:
        a_vals = _complex_interpolator(A.field)(image)
    except ValueError as exc:
        raise DomainError("requested points fall outside the ambiguity grid; enlarge the grid") from exc
    return float(np.max(np.abs(w_vals - a_vals * scale)))


def _snap(pts: np.ndarray, grid: GridSpec2D) -> np.ndarray:
    # Pull points lying a rounding error outside the node range back onto it.
    out = pts.copy()
    for col, axis in enumerate((grid.x_axis, grid.p_axis)):
        lo, hi = axis.points[0], axis.points[-1]
        eps = 1e-9 * axis.spacing
        c = out[:, col]
        c[(c < lo) & (c > lo - eps)] = lo
        c[(c > hi) & (c < hi + eps)] = hi
    return out


def pullback(w: WignerField, smap: SymplecticMap) -> WignerField:
    """``z -> W(S^{-1} z)`` by bilinear interpolation, zero outside the grid."""
    grid = w.grid
    X, P = grid.mesh()
    Sinv = smap.inverse().S
    src = np.stack([Sinv[0, 0] * X + Sinv[0, 1] * P, Sinv[1, 0] * X + Sinv[1, 1] * P], axis=-1)
    interp = RegularGridInterpolator((grid.x_axis.points, grid.p_axis.points), w.values,
                                     method="linear", bounds_error=False, fill_value=0.0)
    vals = interp(src.reshape(-1, 2)).reshape(grid.shape)
    return WignerField(Field2D(grid, vals), source=f"{w.source}@S", hbar=w.hbar)


def superpose(terms) -> WignerField:
    """``sum_i c_i W_i(x - s_i, p)`` for ``terms = [(W_i, s_i, c_i), ...]``.

    All fields must share the momentum axis and the position spacing, and
    every shift must be a whole number of grid steps.  The result lives on
    an x-axis (power-of-two length, same spacing) that holds every term.
    """
    terms = list(terms)
    if not terms:
        raise UsageError("nothing to superpose")
    ref = terms[0][0].grid
    dx = ref.x_axis.spacing
    placed = []
    for w, shift, c in terms:
        if w.grid.p_axis != ref.p_axis or not math.isclose(w.grid.x_axis.spacing, dx, rel_tol=1e-12):
            raise UsageError("superposed fields need one momentum axis and one x spacing")
        k = (w.grid.x_axis.x_min + shift - ref.x_axis.x_min) / dx
        if abs(k - round(k)) > 1e-9:
            raise DomainError(f"shift {shift} is not a multiple of the grid spacing {dx}")
        placed.append((w, int(round(k)), c))
    lo = min(off for _, off, _ in placed)
    hi = max(off + w.grid.x_axis.n for w, off, _ in placed)
    n_out = 1 << int(math.ceil(math.log2(hi - lo)))
    x_min = ref.x_axis.x_min + lo * dx
    axis = GridSpec1D(x_min, x_min + n_out * dx, n_out)
    out = np.zeros((n_out, ref.p_axis.n))
    for w, off, c in placed:
        start = off - lo
        out[start:start + w.grid.x_axis.n] += c * w.values
    hbar = terms[0][0].hbar
    src = "+".join(f"{c:.4g}*{w.source}" for w, _, c in terms[:3]) + ("+..." if len(terms) > 3 else "")
    return WignerField(Field2D(GridSpec2D(axis, ref.p_axis), out), source=src, hbar=hbar)


def shifted_copies(w: WignerField, shifts, weights) -> WignerField:
    """``sum_j weights_j W(z - z_j)`` on an x-axis extended to hold every copy.

    Only position shifts, in whole grid steps, are supported.
    """
    terms = []
    for (sx, sp), c in zip(shifts, weights):
        if sp != 0:
            raise DomainError("only position shifts are supported")
        terms.append((w, sx, c))
    return superpose(terms)


def gaussian_wigner(M, z0, grid: GridSpec2D, hbar: float = 1.0) -> Field2D:
    """Closed-form ``sqrt(det M)/(pi hbar) exp(-(z-z0).M(z-z0)/hbar)`` on ``grid``."""
    M = np.asarray(M, dtype=float)
    X, P = grid.mesh()
    dx, dp = X - z0[0], P - z0[1]
    q = M[0, 0] * dx * dx + 2 * M[0, 1] * dx * dp + M[1, 1] * dp * dp
    return Field2D(grid, math.sqrt(np.linalg.det(M)) / (math.pi * hbar) * np.exp(-q / hbar))
