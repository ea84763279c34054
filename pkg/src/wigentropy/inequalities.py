"""Numerical certification of the norm and entropy inequalities.

Each ``check_*`` function evaluates both sides of one inequality on concrete
states and returns an :class:`InequalityReport`.  A quadrature error
estimate is obtained by repeating the evaluation on the half-resolution
grid; margins inside that estimate (or inside ``tol`` relative) are called
``equality-within-tolerance`` and never ``violated``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from . import constants as C
from .errors import DomainError, ResolutionError, WigentropyError
from .functionals import l1_mass, nu_of, renyi_entropy, wigner_entropy
from .grid import INF, lq_norm
from .states import Ket, MixedState
from .transforms import ambiguity, cross_wigner, wigner_of

__all__ = [
    "InequalityReport",
    "HOLDS",
    "VIOLATED",
    "EQUALITY",
    "DEFAULT_TOL",
    "verdict_for",
    "check_lieb_upper",
    "check_lieb_lower",
    "check_mixed_lq_bound",
    "check_new_inequality",
    "check_wigner_interpolation",
    "check_cross_wigner_interpolation",
    "check_l1_mass",
    "check_sup_bound",
    "check_measure_bounds",
    "check_entropy_bound",
    "check_renyi_bound",
    "check_alpha_to_one_limit",
]

HOLDS = "holds"
VIOLATED = "violated"
EQUALITY = "equality-within-tolerance"
DEFAULT_TOL = 1e-3
VIOLATION_SLACK = 1e-6


@dataclass(frozen=True)
class InequalityReport:
    name: str
    state: str
    lhs: float
    rhs: float
    direction: str
    margin: float
    error_estimate: float
    tol: float
    verdict: str
    params: dict = field(default_factory=dict)
    grid: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict != VIOLATED

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("lhs", "rhs", "margin", "error_estimate"):
            d[k] = _json_float(d[k])
        return d


def _json_float(x: float):
    if isinstance(x, float) and not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    return x


def verdict_for(margin: float, scale: float, err: float, tol: float) -> str:
    """Classify a signed margin (positive means the inequality holds)."""
    band = max(tol * abs(scale), err)
    if abs(margin) <= band:
        return EQUALITY
    if margin > 0:
        return HOLDS
    if margin < -(err + VIOLATION_SLACK):
        return VIOLATED
    return EQUALITY


def _coarse(state):
    if isinstance(state, tuple):
        return tuple(_coarse(s) for s in state)
    return state.coarsened()


def _label(state) -> str:
    if isinstance(state, tuple):
        return ",".join(_label(s) for s in state)
    return getattr(state, "label", "") or type(state).__name__


def _grid_of(state) -> dict:
    if isinstance(state, tuple):
        state = state[0]
    if isinstance(state, Ket):
        return state.phase_grid.to_dict()
    if isinstance(state, MixedState):
        return state.components[0][1].phase_grid.to_dict()
    return {}


def _hbar_of(state) -> float:
    if isinstance(state, tuple):
        state = state[0]
    return state.hbar


def _report(name, state, sides, direction, tol, params, notes=None) -> InequalityReport:
    """Evaluate ``sides(state) -> (lhs, rhs)`` on the grid and at half resolution."""
    lhs, rhs = sides(state)
    notes = dict(notes or {})
    try:
        lc, rc = sides(_coarse(state))
        err = abs(lhs - lc) + abs(rhs - rc)
    except (WigentropyError, AttributeError) as exc:
        err = 0.0
        notes["error_estimate"] = f"unavailable: {exc}"
    margin = rhs - lhs if direction == "<=" else lhs - rhs
    verdict = verdict_for(margin, max(abs(lhs), abs(rhs)), err, tol)
    return InequalityReport(name=name, state=_label(state), lhs=float(lhs), rhs=float(rhs),
                            direction=direction, margin=float(margin), error_estimate=float(err),
                            tol=tol, verdict=verdict, params=dict(params), grid=_grid_of(state),
                            notes=notes)


def _is_gaussian(state) -> bool:
    if isinstance(state, MixedState):
        return state.is_pure and state.components[0][1].gaussian is not None
    return getattr(state, "gaussian", None) is not None


def _pure(state) -> bool:
    return isinstance(state, Ket) or (isinstance(state, MixedState) and state.is_pure)


# Lieb's ambiguity inequalities --------------------------------------------------

def _lieb_sides(p, q):
    def sides(pair):
        f, g = pair
        a = ambiguity(f, g)
        H = C.lieb_constant(p, q)
        return lq_norm(a.field, q), H * f.norm(p) * g.norm(C.conjugate(p))
    return sides


def check_lieb_upper(f: Ket, g: Ket, p: float, q: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||A(f,g)||_q <= H(p,q) ||f||_p ||g||_p'`` for ``q >= 2``."""
    if not q >= 2:
        raise DomainError(f"the upper ambiguity bound needs q >= 2, got {q}")
    if not C.lieb_admissible(p, q):
        raise DomainError(f"needs q' <= p, p' <= q; got p = {p}, q = {q}")
    return _report("lieb_upper", (f, g), _lieb_sides(p, q), "<=", tol, {"p": p, "q": q, "hbar": f.hbar, "d": 1},
                   {"equality_expected": q == 2 or (f.gaussian is not None and g.gaussian is not None
                                                     and f.gaussian.A == g.gaussian.A)})


def check_lieb_lower(f: Ket, g: Ket, p: float, q: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||A(f,g)||_q >= H(p,q) ||f||_p ||g||_p'`` for ``1 <= q < 2``."""
    if not 1 <= q < 2:
        raise DomainError(f"the lower ambiguity bound needs 1 <= q < 2, got {q}")
    if not C.lieb_admissible(p, q):
        raise DomainError(f"needs q <= p, p' <= q'; got p = {p}, q = {q}")
    return _report("lieb_lower", (f, g), _lieb_sides(p, q), ">=", tol, {"p": p, "q": q, "hbar": f.hbar, "d": 1},
                   {"hypothesis": "0 < ||A||_q < inf holds trivially on a finite grid"})


# Wigner L^q bounds ---------------------------------------------------------------

def check_mixed_lq_bound(rho, q: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||W rho||_q <= (1/(q (pi hbar)^(q-1)))^(1/q)`` for ``q >= 2``."""
    if not q >= 2:
        raise DomainError(f"the Wigner L^q bound needs q >= 2, got {q}")
    hbar = _hbar_of(rho)

    def sides(s):
        return lq_norm(wigner_of(s).field, q), C.mixed_lq_constant(q, hbar)

    eq = (_pure(rho) and q == 2) or (_is_gaussian(rho) and q > 2)
    return _report("mixed_lq", rho, sides, "<=", tol, {"q": q, "hbar": hbar, "d": 1},
                   {"equality_expected": eq})


def _check_new_params(q, theta, p):
    if not 1 < q < 2:
        raise DomainError(f"needs 1 < q < 2, got q = {q}")
    if not 2 - q < theta < 1:
        raise DomainError(f"needs 2 - q < theta < 1, got theta = {theta}")
    lo, hi = (q - theta) / (q - 1), (q - theta) / (1 - theta)
    pp = C.conjugate(p)
    if not (lo - 1e-12 <= p <= hi + 1e-12 and lo - 1e-12 <= pp <= hi + 1e-12):
        raise DomainError(f"needs {lo:.6g} <= p, p' <= {hi:.6g}; got p = {p}")


def check_new_inequality(f: Ket, g: Ket, q: float, theta: float, p: float = 2.0,
                         tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||A||_q <= ||A||_1^(theta/q) (H(p, r) ||f||_p ||g||_p')^(1-theta/q)``, ``r = (q-theta)/(1-theta)``.

    The inequality is never an equality, so ``holds`` is the only expected verdict.
    """
    _check_new_params(q, theta, p)
    r = (q - theta) / (1 - theta)

    def sides(pair):
        a_f, a_g = pair
        A = ambiguity(a_f, a_g)
        H = C.lieb_constant(p, r)
        rhs = (lq_norm(A.field, 1) ** (theta / q)
               * (H * a_f.norm(p) * a_g.norm(C.conjugate(p))) ** (1 - theta / q))
        return lq_norm(A.field, q), rhs

    return _report("new_inequality", (f, g), sides, "<=", tol,
                   {"q": q, "theta": theta, "p": p, "r": r, "hbar": f.hbar, "d": 1},
                   {"equality_expected": False})


def check_wigner_interpolation(rho, q: float, theta: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||W||_q <= (pi hbar)^-(1-1/q) ((1-theta)/(q-theta))^((1-theta)/q) ||W||_1``."""
    C.wigner_interpolation_constant(q, theta)
    hbar = _hbar_of(rho)

    def sides(s):
        w = wigner_of(s)
        return lq_norm(w.field, q), C.wigner_interpolation_constant(q, theta, hbar) * l1_mass(w)

    return _report("wigner_interpolation", rho, sides, "<=", tol,
                   {"q": q, "theta": theta, "hbar": hbar, "d": 1}, {"equality_expected": False})


def check_cross_wigner_interpolation(f: Ket, g: Ket, q: float, theta: float,
                                     tol: float = DEFAULT_TOL) -> InequalityReport:
    """Cross-Wigner analogue: ``||W(f,g)||_q <= c (2 ||W(f,g)||_1)^(theta/q) ||f||_2 ||g||_2``."""
    C.wigner_interpolation_constant(q, theta)
    hbar = f.hbar

    def sides(pair):
        a, b = pair
        W = cross_wigner(a, b)
        c = C.cross_wigner_interpolation_constant(q, theta, hbar)
        return lq_norm(W, q), c * (2 * lq_norm(W, 1)) ** (theta / q) * a.norm(2) * b.norm(2)

    return _report("cross_wigner_interpolation", (f, g), sides, "<=", tol,
                   {"q": q, "theta": theta, "hbar": hbar, "d": 1}, {"equality_expected": False})


def check_l1_mass(rho, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||W||_1 >= 1``, with equality exactly for Wigner-positive states."""
    def sides(s):
        return l1_mass(wigner_of(s)), 1.0
    return _report("l1_mass", rho, sides, ">=", tol, {"hbar": _hbar_of(rho), "d": 1})


def check_sup_bound(rho, tol: float = DEFAULT_TOL) -> InequalityReport:
    hbar = _hbar_of(rho)

    def sides(s):
        return wigner_of(s).field.sup(), 1.0 / (math.pi * hbar)
    return _report("sup_bound", rho, sides, "<=", tol, {"hbar": hbar, "d": 1})


# Measures and entropies ---------------------------------------------------------

def check_measure_bounds(rho, q: float, theta: float | None = None,
                         tol: float = DEFAULT_TOL) -> InequalityReport:
    """``||nu||_q <= (pi hbar/q)^(1/q)`` (``q >= 2``) or the strict ``theta`` bound (``1 < q < 2``)."""
    hbar = _hbar_of(rho)
    C.measure_bound(q, theta, hbar)

    def sides(s):
        return lq_norm(nu_of(wigner_of(s)).nu, q), C.measure_bound(q, theta, hbar)

    # ||nu||_2 = sqrt(pi hbar/2) / ||W||_1 for a pure state, so equality also
    # needs ||W||_1 = 1: only Gaussian pure states saturate, for every q >= 2.
    eq = q >= 2 and _is_gaussian(rho)
    params = {"q": q, "hbar": hbar, "d": 1}
    if theta is not None:
        params["theta"] = theta
    return _report("measure_bounds", rho, sides, "<=", tol, params, {"equality_expected": eq})


def check_entropy_bound(rho, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``S[W rho] > ln(2 pi hbar)`` (strict)."""
    hbar = _hbar_of(rho)

    def sides(s):
        return wigner_entropy(wigner_of(s)), math.log(2 * math.pi * hbar)

    rep = _report("entropy_bound", rho, sides, ">=", tol, {"hbar": hbar, "d": 1})
    conj = math.log(math.e * math.pi * hbar)
    return _with_notes(rep, conjectured_bound=conj, gap_to_conjectured=rep.lhs - conj, strict=True)


def _with_notes(rep: InequalityReport, **extra) -> InequalityReport:
    notes = dict(rep.notes)
    notes.update(extra)
    return InequalityReport(**{**rep.__dict__, "notes": notes})


def check_renyi_bound(rho, alpha: float, tol: float = DEFAULT_TOL) -> InequalityReport:
    """``H_alpha >= ln pi hbar + ln alpha/(alpha-1)`` for ``alpha >= 2``; ``H_alpha > ln 2 pi hbar`` below."""
    hbar = _hbar_of(rho)
    bound = C.renyi_bound(alpha, hbar)

    def sides(s):
        return renyi_entropy(wigner_of(s), alpha), bound

    notes = {"equality_expected": alpha >= 2 and _is_gaussian(rho), "strict": 1 < alpha < 2}
    if 1 < alpha < 2:
        lam = math.log(alpha) / (alpha - 1)
        notes["sandwich"] = {"ln2": math.log(2), "value": lam, "one": 1.0,
                             "holds": math.log(2) < lam < 1}
    return _report("renyi_bound", rho, sides, ">=", tol,
                   {"alpha": "inf" if alpha == INF else alpha, "hbar": hbar, "d": 1}, notes)


def check_alpha_to_one_limit(rho, eps_list=(0.2, 0.1, 0.05),
                             tol: float = DEFAULT_TOL) -> list[InequalityReport]:
    """One report per ``eps``: ``H_{1+eps+eps^2} >= ln pi hbar + ln(2+eps)/(1+eps)``."""
    hbar = _hbar_of(rho)
    out = []
    for eps in eps_list:
        alpha = 1 + eps + eps * eps
        bound = C.alpha_limit_bound(eps, hbar)

        def sides(s, alpha=alpha, bound=bound):
            return renyi_entropy(wigner_of(s), alpha), bound

        out.append(_report("alpha_limit", rho, sides, ">=", tol,
                           {"eps": eps, "alpha": alpha, "hbar": hbar, "d": 1},
                           {"limit_of_bound": math.log(2 * math.pi * hbar)}))
    return out
