"""Figures written to files with the non-interactive Agg backend."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .grid import Field2D  # noqa: E402

__all__ = ["plot_field", "plot_report_margins", "plot_marginals", "plot_trace", "plot_concavity"]


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return str(path)


def plot_field(field: Field2D, path, title: str = "") -> str:
    vals = field.values.real if field.is_complex else field.values
    g = field.grid
    extent = [g.p_axis.x_min, g.p_axis.x_max, g.x_axis.x_min, g.x_axis.x_max]
    lim = float(np.max(np.abs(vals))) or 1.0
    fig, ax = plt.subplots(figsize=(5, 4.2))
    im = ax.imshow(vals, origin="lower", extent=extent, cmap="RdBu_r", vmin=-lim, vmax=lim, aspect="auto")
    ax.set_xlabel("p")
    ax.set_ylabel("x")
    ax.set_title(title)
    fig.colorbar(im, ax=ax)
    return _save(fig, path)


def plot_report_margins(rows: list[dict], path) -> str:
    """Relative margin of every report, colored by verdict."""
    colors = {"holds": "tab:green", "equality-within-tolerance": "tab:blue", "violated": "tab:red"}
    labels, rel, cols = [], [], []
    for r in rows:
        if "lhs" not in r or not isinstance(r.get("margin"), float):
            continue
        scale = max(abs(r["lhs"]), abs(r["rhs"])) or 1.0
        labels.append(f"{r['name']} [{r['state']}]")
        rel.append(r["margin"] / scale)
        cols.append(colors.get(r["verdict"], "gray"))
    fig, ax = plt.subplots(figsize=(7, 0.22 * max(len(labels), 4) + 1))
    y = np.arange(len(labels))
    ax.barh(y, rel, color=cols)
    ax.set_yticks(y)
    ax.set_yticklabels(labels, fontsize=6)
    ax.axvline(0, color="k", lw=0.6)
    ax.set_xlabel("relative margin")
    return _save(fig, path)


def plot_marginals(record: dict, path) -> str:
    x = np.asarray(record["points"])
    fig, ax = plt.subplots(figsize=(5.5, 3.8))
    ax.plot(x, record["numeric"], "o", ms=4, label="grid marginal of mu")
    ax.plot(x, record["closed_form"], "-", label="closed form")
    ax.plot(x, record["true_marginal"], "--", label="|h1(x)|^2")
    ax.axvline(record["seam"], color="gray", lw=0.6)
    ax.set_xlabel("x")
    ax.legend()
    return _save(fig, path)


def plot_trace(trace: list, path, floor: float | None = None) -> str:
    vals = [v for _, v in trace]
    best = np.minimum.accumulate([v if math.isfinite(v) else np.inf for v in vals])
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    ax.plot([v if math.isfinite(v) else np.nan for v in vals], ".", ms=3, label="evaluations")
    ax.plot(best, "-", label="best so far")
    if floor is not None:
        ax.axhline(floor, color="r", lw=0.8, label="proved bound")
    ax.set_xlabel("evaluation")
    ax.set_ylabel("Wigner entropy")
    ax.legend()
    return _save(fig, path)


def plot_concavity(records: list[dict], path) -> str:
    n = [r["n"] for r in records]
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    ax.semilogx(n, [r["Sigma"] for r in records], "o-", base=2, label="Sigma")
    ax.semilogx(n, [r["Sigma1"] for r in records], "s--", base=2, label="Sigma1")
    ax.semilogx(n, [r["Sigma2"] for r in records], "^:", base=2, label="Sigma2")
    ax.axhline(0, color="k", lw=0.6)
    ax.set_xlabel("number of copies n")
    ax.legend()
    return _save(fig, path)
