"""Parse state descriptions used on the command line.

Short tokens
------------
``fock:N``                   oscillator eigenstate ``N``
``mix:default``              equal mixture of ``fock:0`` and ``fock:1``
``mix:W1*N1+W2*N2+...``      Fock mixture with the given weights
``gauss``                    centered vacuum Gaussian
``gauss:S/PHI[/X0/P0]``      squeezing ``S``, rotation ``PHI``, center ``(X0, P0)``
``bump:A/B``                 smooth bump supported on ``[A, B]``
``@path.json``               JSON file (see below)
``{...}``                    inline JSON

JSON (``schema: 1``)
--------------------
One state object, a list of them, or ``{"schema": 1, "states": {label: state}}``.
State objects::

    {"schema": 1, "kind": "fock", "n": 2}
    {"schema": 1, "kind": "gaussian", "M": [[a, b], [b, c]], "z0": [x0, p0]}
    {"schema": 1, "kind": "squeezed", "s": 1.5, "phi": 0.3, "z0": [0, 0]}
    {"schema": 1, "kind": "bump", "support": [-1, 1]}
    {"schema": 1, "kind": "mixture", "weights": [0.5, 0.5],
     "components": [{"kind": "fock", "n": 0}, {"kind": "fock", "n": 1}]}

``schema`` is required at the top level and optional inside ``components``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import SpecError, WigentropyError
from .grid import GridSpec1D
from .states import Ket, MixedState, SymplecticMap, bump, fock, gaussian_state

__all__ = ["SCHEMA_VERSION", "split_tokens", "parse_state", "parse_states"]

SCHEMA_VERSION = 1


def split_tokens(text: str) -> list[str]:
    """Split on commas that are not inside braces or brackets."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "{[":
            depth += 1
        elif ch in "}]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        out.append("".join(cur).strip())
    return [t for t in out if t]


def _floats(body: str, n_min: int, n_max: int, token: str) -> list[float]:
    try:
        vals = [float(v) for v in body.split("/")] if body else []
    except ValueError as exc:
        raise SpecError(f"bad number in state token {token!r}") from exc
    if not n_min <= len(vals) <= n_max:
        raise SpecError(f"state token {token!r} needs {n_min}..{n_max} numbers separated by '/'")
    return vals


def _squeezed(s: float, phi: float, z0, axis, hbar, label) -> Ket:
    if not s > 0:
        raise SpecError(f"squeezing must be positive, got {s}")
    R = SymplecticMap.rotation(phi).S
    M = R.T @ np.diag([s * s, 1 / (s * s)]) @ R
    return gaussian_state(0.5 * (M + M.T), tuple(z0), axis, hbar, label=label)


def _from_token(token: str, axis: GridSpec1D, hbar: float):
    kind, _, body = token.partition(":")
    if kind == "fock":
        try:
            n = int(body)
        except ValueError as exc:
            raise SpecError(f"fock index must be an integer in {token!r}") from exc
        return MixedState.pure(fock(n, axis, hbar))
    if kind == "mix":
        if body == "default":
            pairs = [(0.5, 0), (0.5, 1)]
        else:
            try:
                pairs = [(float(w), int(n)) for w, n in (t.split("*") for t in body.split("+"))]
            except ValueError as exc:
                raise SpecError(f"mixture token must look like mix:0.5*0+0.5*1, got {token!r}") from exc
        kets = [fock(n, axis, hbar) for _, n in pairs]
        return MixedState.of([w for w, _ in pairs], kets, label=token)
    if kind == "gauss":
        vals = _floats(body, 0, 4, token)
        s, phi, x0, p0 = (vals + [1.0, 0.0, 0.0, 0.0][len(vals):])
        return MixedState.pure(_squeezed(s, phi, (x0, p0), axis, hbar, token))
    if kind == "bump":
        a, b = _floats(body, 2, 2, token)
        k = bump([a, b], axis, hbar)
        k.label = token
        return MixedState.pure(k)
    raise SpecError(f"unknown state kind {kind!r} in {token!r}")


def _from_json_obj(obj, axis, hbar, label, top=True):
    if not isinstance(obj, dict):
        raise SpecError("state spec must be a JSON object")
    if top and obj.get("schema") != SCHEMA_VERSION:
        raise SpecError(f"state spec needs \"schema\": {SCHEMA_VERSION}")
    kind = obj.get("kind")
    try:
        if kind == "fock":
            return MixedState.pure(fock(int(obj["n"]), axis, hbar))
        if kind == "gaussian":
            M = np.asarray(obj["M"], dtype=float)
            return MixedState.pure(gaussian_state(M, tuple(obj.get("z0", (0, 0))), axis, hbar, label=label))
        if kind == "squeezed":
            return MixedState.pure(_squeezed(float(obj.get("s", 1.0)), float(obj.get("phi", 0.0)),
                                             obj.get("z0", (0, 0)), axis, hbar, label))
        if kind == "bump":
            a, b = obj["support"]
            return MixedState.pure(bump([a, b], axis, hbar))
        if kind == "mixture":
            comps = [_from_json_obj(c, axis, hbar, label, top=False) for c in obj["components"]]
            kets = []
            for c in comps:
                if not c.is_pure:
                    raise SpecError("mixture components must be pure states")
                kets.append(c.components[0][1])
            return MixedState.of(obj["weights"], kets, label=label)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, WigentropyError):
            raise
        raise SpecError(f"malformed {kind!r} spec: {exc}") from exc
    raise SpecError(f"unknown state kind {kind!r}")


def _json_states(obj, axis, hbar, label) -> list[tuple[str, MixedState]]:
    if isinstance(obj, list):
        return [(f"{label}[{i}]", _from_json_obj(o, axis, hbar, f"{label}[{i}]")) for i, o in enumerate(obj)]
    if isinstance(obj, dict) and "states" in obj:
        if obj.get("schema") != SCHEMA_VERSION:
            raise SpecError(f"state spec needs \"schema\": {SCHEMA_VERSION}")
        out = []
        for name in sorted(obj["states"]):
            spec = dict(obj["states"][name])
            spec.setdefault("schema", SCHEMA_VERSION)
            out.append((name, _from_json_obj(spec, axis, hbar, name)))
        return out
    return [(label, _from_json_obj(obj, axis, hbar, label))]


def parse_states(text: str, axis: GridSpec1D, hbar: float = 1.0) -> list[tuple[str, MixedState]]:
    """``[(label, state), ...]`` from a comma-separated list of tokens."""
    out = []
    for token in split_tokens(text):
        if token.startswith("@") or token.startswith("{") or token.startswith("["):
            label = token
            try:
                raw = Path(token[1:]).read_text() if token.startswith("@") else token
                obj = json.loads(raw)
            except OSError as exc:
                raise SpecError(f"cannot read state file {token[1:]!r}: {exc}") from exc
            except json.JSONDecodeError as exc:
                raise SpecError(f"malformed JSON state spec: {exc}") from exc
            if token.startswith("@"):
                label = Path(token[1:]).stem
            out.extend(_json_states(obj, axis, hbar, label))
        else:
            out.append((token, _from_token(token, axis, hbar)))
    if not out:
        raise SpecError("no states given")
    return out


def parse_state(text: str, axis: GridSpec1D, hbar: float = 1.0) -> tuple[str, MixedState]:
    states = parse_states(text, axis, hbar)
    if len(states) != 1:
        raise SpecError(f"expected exactly one state, got {len(states)}")
    return states[0]
