"""Numerical experiments around the entropy lower bound.

* :func:`minimize_entropy` searches a parameterized state family for low
  Wigner entropy.
* :func:`concavity_experiment` builds a mixture whose Wigner entropy is
  *not* concave, from states with disjoint strip supports.
* :func:`marginal_mismatch` shows that the position marginal of ``mu`` for
  the first excited oscillator state is not ``|h_1|^2``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq, minimize

from .errors import DomainError, WigentropyError
from .functionals import l1_mass, mu_of, wigner_entropy
from .grid import GridSpec1D, _fsum, default_grid, marginal_x
from .special import upper_incomplete_gamma
from .states import (Ket, MixedState, SymplecticMap, bump, example2_grid, fock, gaussian_state,
                     hermite_bump, shifted_copy_mixture)
from .transforms import WignerField, shifted_copies, superpose, wigner_of, wigner_pure

__all__ = [
    "StateFamily",
    "ProbeResult",
    "gaussian_family",
    "fock_mixture_family",
    "FAMILIES",
    "minimize_entropy",
    "positivity_filter",
    "ConcavityRecord",
    "example2_pair",
    "concavity_experiment",
    "materialized_copies_entropy",
    "materialized_sigma",
    "marginal_mismatch",
    "mu_marginal_closed_form",
    "mu_marginal_outer",
    "mu_marginal_inner",
    "mu_marginal_outer_as_printed",
    "mu_marginal_inner_as_printed",
    "true_marginal_fock1",
    "FOCK1_L1",
]

#: ``||W h_1||_1``.
FOCK1_L1 = 4.0 / math.sqrt(math.e) - 1.0


def positivity_filter(w: WignerField) -> bool:
    """True iff ``min W >= -1e-9 sup |W|`` on the grid."""
    return float(np.min(w.values)) >= -1e-9 * w.field.sup()


# Entropy minimization -------------------------------------------------------------

@dataclass(frozen=True)
class StateFamily:
    """Box-bounded parameter family of states."""

    name: str
    bounds: tuple[tuple[float, float], ...]
    generator: Callable[[np.ndarray], object]
    hbar: float = 1.0
    positive_only: bool = False


@dataclass
class ProbeResult:
    family: str
    best_params: list
    best: float
    gap_to_proved: float
    gap_to_conjectured: float
    error_estimate: float
    evaluations: int
    rejected: int
    discretization_fault: bool
    trace: list = field(default_factory=list)

    def to_dict(self, with_trace: bool = False) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k != "trace"}
        if with_trace:
            d["trace"] = self.trace
        return d


def _axis(grid, hbar: float) -> GridSpec1D:
    if grid is None:
        return default_grid(hbar).x_axis
    return grid if isinstance(grid, GridSpec1D) else grid.x_axis


def gaussian_family(grid=None, hbar: float = 1.0) -> StateFamily:
    """Centered pure Gaussians ``R(phi)^T diag(s^2, s^-2) R(phi)``; parameters ``(ln s, phi)``."""
    axis = _axis(grid, hbar)

    def gen(theta):
        s = math.exp(theta[0])
        R = SymplecticMap.rotation(theta[1]).S
        M = R.T @ np.diag([s * s, 1 / (s * s)]) @ R
        return gaussian_state(0.5 * (M + M.T), (0.0, 0.0), axis, hbar, label="gaussian")

    return StateFamily("gaussian", ((-0.5, 0.5), (0.0, math.pi)), gen, hbar)


def fock_mixture_family(grid=None, hbar: float = 1.0, n_a: int = 0, n_b: int = 1) -> StateFamily:
    """``w |n_a><n_a| + (1-w) |n_b><n_b|``, restricted to Wigner-positive members."""
    axis = _axis(grid, hbar)
    ka, kb = fock(n_a, axis, hbar), fock(n_b, axis, hbar)

    def gen(theta):
        w = float(theta[0])
        if w >= 1.0:
            return MixedState.pure(ka)
        if w <= 0.0:
            return MixedState.pure(kb)
        return MixedState.of([w, 1 - w], [ka, kb], label=f"mix:{w:.6f}")

    return StateFamily(f"fock-mixture:{n_a},{n_b}", ((0.0, 1.0),), gen, hbar, positive_only=True)


FAMILIES = {"gaussian": gaussian_family, "fock-mixture": fock_mixture_family}


def minimize_entropy(family: StateFamily, budget: int = 500, seed: int = 0,
                     restarts: int = 5) -> ProbeResult:
    """Nelder-Mead over ``family`` with seeded random restarts.

    Parameters failing the positivity filter (when the family asks for it)
    are rejected by returning ``+inf``; they are never projected.
    """
    if budget < 50:
        raise DomainError(f"budget must be at least 50 evaluations, got {budget}")
    rng = np.random.default_rng(seed)
    lo = np.array([b[0] for b in family.bounds])
    hi = np.array([b[1] for b in family.bounds])
    trace: list = []
    rejected = 0
    per_restart = max(budget // restarts, 10)

    def objective(theta):
        nonlocal rejected
        if len(trace) >= budget:
            return math.inf
        theta = np.clip(theta, lo, hi)
        try:
            w = wigner_of(family.generator(theta))
        except WigentropyError as exc:
            raise type(exc)(f"{exc} (family {family.name}, params {theta.tolist()})") from exc
        if family.positive_only and not positivity_filter(w):
            rejected += 1
            trace.append((theta.tolist(), math.inf))
            return math.inf
        s = wigner_entropy(w)
        trace.append((theta.tolist(), s))
        return s

    for _ in range(restarts):
        if len(trace) >= budget:
            break
        x0 = lo + (hi - lo) * rng.random(lo.size)
        minimize(objective, x0, method="Nelder-Mead", bounds=list(family.bounds),
                 options={"maxfev": per_restart, "xatol": 1e-6, "fatol": 1e-9})

    finite = [(p, v) for p, v in trace if math.isfinite(v)]
    if not finite:
        raise DomainError(f"no admissible parameters found in family {family.name}")
    best_params, best = min(finite, key=lambda t: t[1])
    best_state = family.generator(np.array(best_params))
    try:
        err = abs(wigner_entropy(wigner_of(best_state.coarsened())) - best)
    except (WigentropyError, AttributeError):
        err = 0.0
    hbar = family.hbar
    proved = math.log(2 * math.pi * hbar)
    conj = math.log(math.e * math.pi * hbar)
    return ProbeResult(family=family.name, best_params=list(best_params), best=best,
                       gap_to_proved=best - proved, gap_to_conjectured=best - conj,
                       error_estimate=err, evaluations=len(trace), rejected=rejected,
                       discretization_fault=best < proved - err, trace=trace)


# Non-concavity construction --------------------------------------------------------

@dataclass(frozen=True)
class ConcavityRecord:
    n: int
    K: float
    Sigma: float
    Sigma1: float
    Sigma2: float
    threshold: float
    S_f: float
    S_g0: float
    S_eta: float
    S_rho: float
    l1_f: float
    l1_eta: float
    l1_rho: float
    lam: float | None = None
    order: int | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _l1_ratio(f: Ket, l1_g0: float) -> float:
    return l1_mass(wigner_pure(f)) / l1_g0


_KNOWN_BRACKETS = {(2.1, 5): (6.0, 8.0)}
_LAM_SCAN = (0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0)


def example2_pair(K_target: float = 2.1, order: int = 5, grid=None,
                  lam_bracket: tuple[float, float] | None = None) -> tuple[Ket, Ket, float]:
    """``(f, g0, lam)`` with ``f`` on ``[-1, 0]``, ``g0 = bump([0, 1])`` and ``K ~ K_target``.

    ``f`` is a bump times a Hermite function of order ``order`` in the
    rescaled support coordinate; ``lam`` is solved for by Brent's method.
    Without ``lam_bracket`` a coarse scan of ``lam`` locates a sign change.
    """
    G = grid or example2_grid()
    xa, pa = G.x_axis, G.p_axis
    g0 = bump([0.0, 1.0], xa, p_axis=pa)
    l1_g0 = l1_mass(wigner_pure(g0))

    @lru_cache(maxsize=None)
    def gap(lam):
        return _l1_ratio(hermite_bump([-1.0, 0.0], order, lam, xa, p_axis=pa), l1_g0) - K_target

    if lam_bracket is None:
        lam_bracket = _KNOWN_BRACKETS.get((K_target, order))
    if lam_bracket is None:
        prev = None
        for lam in _LAM_SCAN:
            if prev is not None and gap(prev) * gap(lam) <= 0:
                lam_bracket = (prev, lam)
                break
            prev = lam
        else:
            raise DomainError(f"K = {K_target} is not reachable with Hermite order {order}")
    lo, hi = lam_bracket
    if gap(lo) * gap(hi) > 0:
        raise DomainError(f"K = {K_target} is not reachable for order {order} with lam in {lam_bracket}")
    lam = brentq(gap, lo, hi, xtol=1e-6)
    return hermite_bump([-1.0, 0.0], order, lam, xa, p_axis=pa), g0, lam


def _strip_sums(values: np.ndarray) -> tuple[float, float]:
    a = np.abs(values).ravel()
    return _fsum(a), _fsum(a[a > 0] * np.log(a[a > 0]))


def concavity_experiment(f: Ket, g0: Ket, n: int, lam: float | None = None,
                         order: int | None = None) -> ConcavityRecord:
    """``Sigma = S[W rho] - S[W f]/2 - S[W eta_n]/2`` with ``W rho = (W f + W eta_n)/2``.

    ``eta_n`` is the equal mixture of ``n`` unit shifts of ``g0``.  The
    copies and ``f`` occupy disjoint strips, so every Riemann sum over the
    full grid splits exactly into per-strip sums; that is how ``S[W rho]``
    and ``S[W eta_n]`` are evaluated without materializing the long grid.
    """
    if f.grid != g0.grid:
        raise DomainError("f and g0 must share a grid")
    x = f.grid.points
    nz_f = x[np.abs(f.values) > 0]
    nz_g = x[np.abs(g0.values) > 0]
    if nz_f.size == 0 or nz_g.size == 0 or nz_f.max() > 0 or nz_f.min() < -1 or nz_g.min() < 0 or nz_g.max() > 1:
        raise DomainError("f must be supported in [-1, 0] and g0 in [0, 1]")
    shifted_copy_mixture(g0, n)  # validates n and the node alignment of unit shifts
    Wf, Wg = wigner_pure(f), wigner_pure(g0)
    cell = Wf.grid.cell_area
    sum_f, slog_f = _strip_sums(Wf.values)
    sum_g, slog_g = _strip_sums(Wg.values)
    l1_f, l1_g = sum_f * cell, sum_g * cell
    K = l1_f / l1_g
    if not K > 1:
        raise DomainError(f"the construction needs K = ||Wf||_1/||Wg0||_1 > 1, got {K:.6g}")

    def entropy(ln_norm_terms):
        # -sum over strips of c_i * (a ln a summed over strip) with a scaled density.
        return -math.fsum(ln_norm_terms) * cell

    S_f = wigner_entropy(Wf)
    S_g0 = wigner_entropy(Wg)
    # eta_n: n strips, each |W| = |W g0| / n, total mass l1_g.
    c = 1.0 / (n * l1_g)
    S_eta = entropy([n * c * (slog_g + sum_g * math.log(c))])
    # rho: f strip scaled by 1/2, copy strips by 1/(2n); total mass (l1_f + l1_g)/2.
    l1_rho = 0.5 * (l1_f + l1_g)
    cf = 0.5 / l1_rho
    ce = 0.5 / (n * l1_rho)
    S_rho = entropy([cf * (slog_f + sum_f * math.log(cf)),
                     n * ce * (slog_g + sum_g * math.log(ce))])
    Sigma = S_rho - 0.5 * S_f - 0.5 * S_eta
    Sigma1 = (K - 1) / (2 * (K + 1)) * (S_f - S_eta)
    Sigma2 = math.log(K + 1) - K * math.log(K) / (K + 1)
    threshold = 2 * (K + 1) / (K - 1) * math.log(2 * K)
    return ConcavityRecord(n=n, K=K, Sigma=Sigma, Sigma1=Sigma1, Sigma2=Sigma2, threshold=threshold,
                           S_f=S_f, S_g0=S_g0, S_eta=S_eta, S_rho=S_rho, l1_f=l1_f, l1_eta=l1_g,
                           l1_rho=l1_rho, lam=lam, order=order)


def materialized_copies_entropy(g0: Ket, n: int) -> float:
    """``S[W eta_n]`` from the explicitly assembled field on an extended grid."""
    mix = shifted_copy_mixture(g0, n)
    return wigner_entropy(shifted_copies(wigner_pure(g0), mix.shifts, mix.weights))


def materialized_sigma(f: Ket, g0: Ket, n: int) -> dict:
    """``Sigma`` from fields assembled on one long grid (practical for small ``n``)."""
    mix = shifted_copy_mixture(g0, n)
    Wf, Wg = wigner_pure(f), wigner_pure(g0)
    eta = superpose([(Wg, sx, c) for (sx, _), c in zip(mix.shifts, mix.weights)])
    rho = superpose([(Wf, 0.0, 0.5)] + [(Wg, sx, 0.5 * c) for (sx, _), c in zip(mix.shifts, mix.weights)])
    S_f, S_eta, S_rho = wigner_entropy(Wf), wigner_entropy(eta), wigner_entropy(rho)
    return {"n": n, "S_f": S_f, "S_eta": S_eta, "S_rho": S_rho,
            "Sigma": S_rho - 0.5 * S_f - 0.5 * S_eta, "l1_rho": l1_mass(rho)}


# Marginals of mu for the first excited state ----------------------------------------

def mu_marginal_outer(x, hbar: float = 1.0):
    """Position marginal of ``mu_{h_1}`` for ``|x| >= sqrt(hbar/2)``."""
    x = np.asarray(x, dtype=float)
    return 2 * x * x * np.exp(-x * x / hbar) / (hbar * math.sqrt(math.pi * hbar) * FOCK1_L1)


def mu_marginal_outer_as_printed(x, hbar: float = 1.0):
    x = np.asarray(x, dtype=float)
    return x * x * np.exp(-x * x / hbar) / (hbar * math.sqrt(math.pi * hbar) * (1 / math.sqrt(math.e) - 0.25))


def _inner(x: float, hbar: float, sign: float) -> float:
    if x * x > hbar / 2:
        raise DomainError(f"inner branch needs |x| <= sqrt(hbar/2), got x = {x}")
    a = math.sqrt(max(hbar / 2 - x * x, 0.0))
    gam = upper_incomplete_gamma(0.5, max(0.5 - x * x / hbar, 0.0))
    bracket = (sign * 2 * x * x * math.sqrt(math.pi * hbar) / hbar
               + 4 * math.exp(x * x / hbar) / math.sqrt(math.e) * a
               + 4 * x * x / math.sqrt(hbar) * gam)
    return math.exp(-x * x / hbar) / (math.pi * hbar * FOCK1_L1) * bracket


def mu_marginal_inner(x: float, hbar: float = 1.0) -> float:
    """Position marginal of ``mu_{h_1}`` for ``|x| < sqrt(hbar/2)``."""
    return _inner(float(x), hbar, -1.0)


def mu_marginal_inner_as_printed(x: float, hbar: float = 1.0) -> float:
    return _inner(float(x), hbar, +1.0)


def mu_marginal_closed_form(x: float, hbar: float = 1.0) -> float:
    x = float(x)
    if x * x >= hbar / 2:
        return float(mu_marginal_outer(x, hbar))
    return mu_marginal_inner(x, hbar)


def true_marginal_fock1(x, hbar: float = 1.0):
    """``|h_1(x)|^2``."""
    x = np.asarray(x, dtype=float)
    return 2 * x * x / (hbar * math.sqrt(math.pi * hbar)) * np.exp(-x * x / hbar)


def marginal_mismatch(hbar: float = 1.0, points: Sequence[float] | None = None,
                      n: int = 512) -> dict:
    """Compare the numeric ``x``-marginal of ``mu_{h_1}`` with the closed forms.

    The numeric marginal is the ``p``-Riemann sum at every grid node,
    resampled at ``points`` by a cubic spline.  ``points`` defaults to 20
    abscissae in ``[0, 2.5 sqrt(hbar)]`` that include the seam
    ``sqrt(hbar/2)`` and ``x = sqrt(hbar)``.
    """
    seam = math.sqrt(hbar / 2)
    if points is None:
        base = np.linspace(0.0, 2.5, 18) * math.sqrt(hbar)
        points = np.sort(np.concatenate([base, [seam, math.sqrt(hbar)]]))
    pts = np.asarray(points, dtype=float)
    grid = default_grid(hbar, n)
    w = wigner_pure(fock(1, grid.x_axis, hbar))
    mu = mu_of(w)
    numeric_nodes = marginal_x(mu.mu)
    spline = CubicSpline(grid.x_axis.points, numeric_nodes)
    numeric = spline(pts)
    closed = np.array([mu_marginal_closed_form(x, hbar) for x in pts])
    true = true_marginal_fock1(pts, hbar)
    outer_at_seam = float(mu_marginal_outer(seam, hbar))
    inner_at_seam = mu_marginal_inner(seam * (1 - 1e-15), hbar)
    return {
        "hbar": hbar,
        "points": pts.tolist(),
        "numeric": numeric.tolist(),
        "closed_form": closed.tolist(),
        "true_marginal": true.tolist(),
        "max_deviation_closed_form": float(np.max(np.abs(numeric - closed))),
        "max_mismatch_true": float(np.max(np.abs(numeric - true))),
        "seam": seam,
        "seam_gap": abs(outer_at_seam - inner_at_seam),
        "l1_mass": mu.l1_mass_of_source,
    }
