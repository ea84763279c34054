"""Command-line front end.

Subcommands::

    wigentropy wigner  --state fock:1 [--out w.bin --format bin|csv]
    wigentropy verify  [--suite all | --check NAME[,NAME]] [--states ...] [--q ...] ...
    wigentropy probe   minimize|concavity|marginals [...]

Exit codes
----------
0  success, no inequality violated
1  at least one report has verdict ``violated``
2  malformed state spec or arguments
3  grid too coarse or too small for the requested transform
4  inadmissible parameter combination (recorded in the report)
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import inequalities as iq
from .errors import CapabilityError, DomainError, ResolutionError, SpecError, UsageError, WigentropyError
from .functionals import l1_mass, purity
from .grid import INF, default_grid, integrate
from .io import dumps_json, reports_to_csv, write_field_binary, write_field_csv
from .statespec import parse_state, parse_states, split_tokens
from .transforms import wigner_of

__all__ = ["main", "build_parser", "CHECKS", "EXIT_OK", "EXIT_VIOLATION", "EXIT_SPEC",
           "EXIT_RESOLUTION", "EXIT_INADMISSIBLE"]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_SPEC = 2
EXIT_RESOLUTION = 3
EXIT_INADMISSIBLE = 4

DEFAULT_STATES = "fock:0,fock:1,mix:default"


# Argument parsing -------------------------------------------------------------------

def _float_list(text: str) -> list[float]:
    out = []
    for t in text.split(","):
        t = t.strip().lower()
        if not t:
            continue
        try:
            out.append(INF if t in ("inf", "infinity") else float(t))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"not a number: {t!r}") from exc
    return out


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant (default 1)")
    p.add_argument("--grid-n", type=int, default=512, help="samples per phase-space axis (power of two)")
    p.add_argument("--grid-extent", type=float, default=None,
                   help="half-width of the square grid (default 8 sqrt(hbar))")
    p.add_argument("--tol", type=float, default=iq.DEFAULT_TOL, help="relative equality tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")
    p.add_argument("--figures", action=argparse.BooleanOptionalAction, default=True,
                   help="write PNG figures next to --out")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="wigentropy", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("wigner", parents=[common], help="compute and export a Wigner function")
    w.add_argument("--state", required=True, help="state token or JSON spec")
    w.add_argument("--format", choices=("bin", "csv"), default="bin")

    v = sub.add_parser("verify", parents=[common], help="run inequality checks")
    v.add_argument("--suite", choices=("all",), default=None)
    v.add_argument("--check", default=None, help=f"comma list from: {', '.join(sorted(CHECKS))}")
    v.add_argument("--states", default=DEFAULT_STATES)
    v.add_argument("--q", type=_float_list, default=None)
    v.add_argument("--p", type=_float_list, default=None)
    v.add_argument("--theta", type=_float_list, default=None)
    v.add_argument("--alpha", type=_float_list, default=None)
    v.add_argument("--eps", type=_float_list, default=None)
    v.add_argument("--format", choices=("json", "csv"), default="json")

    pr = sub.add_parser("probe", help="numerical experiments")
    psub = pr.add_subparsers(dest="experiment", required=True)
    m = psub.add_parser("minimize", parents=[common], help="entropy minimization over a family")
    m.add_argument("--family", default="gaussian")
    m.add_argument("--budget", type=int, default=500)
    m.add_argument("--restarts", type=int, default=5)
    m.add_argument("--format", choices=("json",), default="json")
    c = psub.add_parser("concavity", parents=[common], help="non-concavity construction")
    c.add_argument("--n", type=int, default=128, help="number of shifted copies")
    c.add_argument("--order", type=int, default=5, help="Hermite order of the profile of f")
    c.add_argument("--K", type=float, default=2.1, help="target L1 ratio ||Wf||_1/||Wg0||_1")
    c.add_argument("--format", choices=("json",), default="json")
    mg = psub.add_parser("marginals", parents=[common], help="position marginal of mu for fock:1")
    mg.add_argument("--points", type=_float_list, default=None)
    mg.add_argument("--format", choices=("json",), default="json")
    return parser


# Output helpers --------------------------------------------------------------------------

def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


def _figure_path(out: Path | None, suffix: str) -> Path | None:
    if out is None:
        return None
    return out.with_name(f"{out.stem}{suffix}.png")


def _config(args) -> dict:
    keys = ("command", "hbar", "grid_n", "grid_extent", "tol", "seed")
    cfg = {k: getattr(args, k, None) for k in keys}
    cfg["experiment"] = getattr(args, "experiment", None)
    return cfg


def _axis(args):
    return default_grid(args.hbar, args.grid_n, args.grid_extent).x_axis


def _info(msg: str):
    print(msg, file=sys.stderr)


# wigner ----------------------------------------------------------------------------------

def cmd_wigner(args) -> int:
    label, state = parse_state(args.state, _axis(args), args.hbar)
    w = wigner_of(state)
    summary = {
        "state": label,
        "normalization": integrate(w.field),
        "sup": w.field.sup(),
        "sup_bound": 1.0 / (math.pi * args.hbar),
        "l1_mass": l1_mass(w),
        "purity": purity(w),
    }
    for k in ("normalization", "sup", "l1_mass", "purity"):
        print(f"{k}: {summary[k]:.10g}")
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        (write_field_csv if args.format == "csv" else write_field_binary)(w.field, args.out)
        if args.figures:
            from .plotting import plot_field
            plot_field(w.field, _figure_path(args.out, ""), title=f"W[{label}]")
    return EXIT_OK


# verify ----------------------------------------------------------------------------------

def _midpoint_theta(q: float) -> float:
    return 0.5 * ((2 - q) + 1)


def _pairs(kets):
    return [(kets[i], kets[j]) for i in range(len(kets)) for j in range(i, len(kets))]


def _jobs(name, args, states):
    """Yield ``(state_label, params, thunk)`` for one check name."""
    pure = [(lab, s.components[0][1]) for lab, s in states if s.is_pure]
    q = args.q
    if name == "lieb-upper":
        for qq in q or [2.0, 4.0]:
            for pp in args.p or [2.0]:
                for (la, a), (lb, b) in _pairs(pure):
                    yield f"{la},{lb}", {"p": pp, "q": qq}, lambda a=a, b=b, pp=pp, qq=qq: iq.check_lieb_upper(a, b, pp, qq, args.tol)
    elif name == "lieb-lower":
        for qq in q or [1.0, 1.5]:
            for pp in args.p or [2.0]:
                for (la, a), (lb, b) in _pairs(pure):
                    yield f"{la},{lb}", {"p": pp, "q": qq}, lambda a=a, b=b, pp=pp, qq=qq: iq.check_lieb_lower(a, b, pp, qq, args.tol)
    elif name == "mixed-lq":
        for qq in q or [2.0, 4.0]:
            for lab, s in states:
                yield lab, {"q": qq}, lambda s=s, qq=qq: iq.check_mixed_lq_bound(s, qq, args.tol)
    elif name in ("new-ineq", "cross-wigner-interp"):
        for qq in q or [1.2, 1.5, 1.8]:
            for th in args.theta or [_midpoint_theta(qq)]:
                for pp in (args.p or [2.0]) if name == "new-ineq" else [2.0]:
                    for (la, a), (lb, b) in _pairs(pure):
                        if name == "new-ineq":
                            thunk = lambda a=a, b=b, qq=qq, th=th, pp=pp: iq.check_new_inequality(a, b, qq, th, pp, args.tol)
                            params = {"q": qq, "theta": th, "p": pp}
                        else:
                            thunk = lambda a=a, b=b, qq=qq, th=th: iq.check_cross_wigner_interpolation(a, b, qq, th, args.tol)
                            params = {"q": qq, "theta": th}
                        yield f"{la},{lb}", params, thunk
    elif name == "wigner-interp":
        for qq in q or [1.2, 1.5, 1.8]:
            for th in args.theta or [_midpoint_theta(qq)]:
                for lab, s in states:
                    yield lab, {"q": qq, "theta": th}, lambda s=s, qq=qq, th=th: iq.check_wigner_interpolation(s, qq, th, args.tol)
    elif name == "measure":
        for qq in q or [1.5, 2.0, 4.0]:
            ths = [None] if qq >= 2 else (args.theta or [_midpoint_theta(qq)])
            for th in ths:
                for lab, s in states:
                    params = {"q": qq} if th is None else {"q": qq, "theta": th}
                    yield lab, params, lambda s=s, qq=qq, th=th: iq.check_measure_bounds(s, qq, th, args.tol)
    elif name == "entropy":
        for lab, s in states:
            yield lab, {}, lambda s=s: iq.check_entropy_bound(s, args.tol)
    elif name == "renyi":
        for a in args.alpha or [1.5, 2.0, 3.0, INF]:
            for lab, s in states:
                yield lab, {"alpha": a}, lambda s=s, a=a: iq.check_renyi_bound(s, a, args.tol)
    elif name == "alpha-limit":
        eps = args.eps or [0.2, 0.1, 0.05]
        for lab, s in states:
            yield lab, {"eps": eps}, lambda s=s: iq.check_alpha_to_one_limit(s, eps, args.tol)
    elif name == "l1":
        for lab, s in states:
            yield lab, {}, lambda s=s: iq.check_l1_mass(s, args.tol)
    elif name == "sup":
        for lab, s in states:
            yield lab, {}, lambda s=s: iq.check_sup_bound(s, args.tol)


CHECKS = ("alpha-limit", "cross-wigner-interp", "entropy", "l1", "lieb-lower", "lieb-upper",
          "measure", "mixed-lq", "new-ineq", "renyi", "sup", "wigner-interp")


def _params_json(params: dict) -> dict:
    return {k: ("inf" if v == INF else v) for k, v in params.items()}


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(CHECKS)
    elif args.check:
        names = split_tokens(args.check)
    else:
        raise SpecError("give --suite all or --check NAME")
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise SpecError(f"unknown check(s): {', '.join(unknown)}")
    states = parse_states(args.states, _axis(args), args.hbar)
    cfg = _config(args)
    rows = []
    for name in sorted(names):
        for label, params, thunk in _jobs(name, args, states):
            try:
                result = thunk()
            except DomainError as exc:
                rows.append({"name": name, "state": label, "params": _params_json(params),
                             "verdict": "inadmissible", "error": str(exc), "config": cfg})
                continue
            for rep in result if isinstance(result, list) else [result]:
                d = rep.to_dict()
                d["state"] = label
                d["config"] = cfg
                rows.append(d)
    rows.sort(key=lambda r: (r["name"], r["state"], json.dumps(r.get("params", {}), sort_keys=True, default=str)))
    text = reports_to_csv(rows) if args.format == "csv" else dumps_json(rows)
    _emit(text, args.out)
    verdicts = [r["verdict"] for r in rows]
    n_bad = verdicts.count(iq.VIOLATED)
    n_inad = verdicts.count("inadmissible")
    _info(f"{len(rows)} reports: {verdicts.count(iq.HOLDS)} holds, {verdicts.count(iq.EQUALITY)} "
          f"equality-within-tolerance, {n_bad} violated, {n_inad} inadmissible")
    for r in rows:
        if r["verdict"] == "inadmissible":
            _info(f"  inadmissible {r['name']} [{r['state']}]: {r['error']}")
    if args.out is not None and args.figures:
        from .plotting import plot_report_margins
        plot_report_margins(rows, _figure_path(args.out, "_margins"))
    if n_bad:
        return EXIT_VIOLATION
    if n_inad:
        return EXIT_INADMISSIBLE
    return EXIT_OK


# probe -----------------------------------------------------------------------------------

def cmd_probe(args) -> int:
    from . import probe
    cfg = _config(args)
    if args.experiment == "minimize":
        if args.family not in probe.FAMILIES:
            raise SpecError(f"unknown family {args.family!r}; choose from {', '.join(sorted(probe.FAMILIES))}")
        fam = probe.FAMILIES[args.family](_axis(args), args.hbar)
        res = probe.minimize_entropy(fam, budget=args.budget, seed=args.seed, restarts=args.restarts)
        record = res.to_dict()
        print(f"best: {res.best:.10g}")
        print(f"gap_to_proved: {res.gap_to_proved:.10g}")
        print(f"gap_to_conjectured: {res.gap_to_conjectured:.10g}")
        if args.out is not None and args.figures:
            from .plotting import plot_trace
            plot_trace(res.trace, _figure_path(args.out, "_trace"), floor=math.log(2 * math.pi * args.hbar))
    elif args.experiment == "concavity":
        f, g0, lam = probe.example2_pair(K_target=args.K, order=args.order)
        rec = probe.concavity_experiment(f, g0, args.n, lam=lam, order=args.order)
        record = rec.to_dict()
        sweep = [probe.concavity_experiment(f, g0, k, lam=lam, order=args.order).to_dict()
                 for k in _powers_up_to(args.n)]
        record["sweep"] = sweep
        print(f"K: {rec.K:.10g}")
        print(f"Sigma: {rec.Sigma:.10g}  (Sigma1 {rec.Sigma1:.10g}, Sigma2 {rec.Sigma2:.10g})")
        print(f"threshold: {rec.threshold:.10g}  S[eta]-S[f]: {rec.S_eta - rec.S_f:.10g}")
        print("Sigma < 0: concavity fails" if rec.Sigma < 0 else "Sigma >= 0 at this n")
        if args.out is not None and args.figures:
            from .plotting import plot_concavity
            plot_concavity(sweep, _figure_path(args.out, "_sigma"))
    else:
        record = probe.marginal_mismatch(args.hbar, args.points, args.grid_n)
        print(f"max |numeric - closed form|: {record['max_deviation_closed_form']:.6g}")
        print(f"max |numeric - |h1|^2|: {record['max_mismatch_true']:.6g}")
        if args.out is not None and args.figures:
            from .plotting import plot_marginals
            plot_marginals(record, _figure_path(args.out, "_marginals"))
    record["config"] = cfg
    _emit(dumps_json(record), args.out)
    return EXIT_OK


def _powers_up_to(n: int) -> list[int]:
    out, k = [], 1
    while k < n:
        out.append(k)
        k *= 2
    return out + [n]


# Entry point ---------------------------------------------------------------------------

_COMMANDS = {"wigner": cmd_wigner, "verify": cmd_verify, "probe": cmd_probe}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SpecError, UsageError) as exc:
        _info(f"error: {exc}")
        return EXIT_SPEC
    except ResolutionError as exc:
        _info(f"resolution error: {exc}")
        return EXIT_RESOLUTION
    except (DomainError, CapabilityError) as exc:
        _info(f"error: {exc}")
        return EXIT_SPEC
    except WigentropyError as exc:
        _info(f"error: {exc}")
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
