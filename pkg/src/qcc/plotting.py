"""Figures written next to the delimited reports."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# Fixed metadata keeps repeated runs byte-stable.
_PNG_META = {"Software": None}


def _style(ax, xlabel, ylabel):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)


def plot_bounds(reports, path: str | Path) -> Path:
    """One panel per rate: exact Q(n, ceil(rn)) between its lower and upper bounds."""
    by_rate = defaultdict(list)
    for rep in reports:
        by_rate[rep.params.r].append(rep)
    rates = sorted(by_rate, key=lambda r: r.value)
    cols = min(4, len(rates)) or 1
    rows = -(-len(rates) // cols) or 1
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 2.8 * rows), squeeze=False)
    for ax in axes.flat[len(rates):]:
        ax.set_visible(False)
    for ax, r in zip(axes.flat, rates):
        reps = sorted(by_rate[r], key=lambda x: x.params.n)
        ns = [x.params.n for x in reps]
        ax.step(ns, [x.upper_ramsey.hi for x in reps], where="mid", color="tab:red", label="omega(n,k)")
        ax.step(ns, [x.lower.lo for x in reps], where="mid", color="tab:blue", label="ceil(d_r omega)")
        join = [(x.params.n, x.upper_join.hi) for x in reps if x.upper_join is not None]
        if join:
            ax.plot(*zip(*join), "s", mfc="none", color="tab:green", label="join bound")
        exact = [(x.params.n, x.exact) for x in reps if x.exact is not None]
        if exact:
            ax.plot(*zip(*exact), "ko", ms=4, label="exact Q")
        bad = [(x.params.n, x.exact) for x in reps if not x.passed and x.exact is not None]
        if bad:
            ax.plot(*zip(*bad), "rx", ms=9, label="violation")
        ax.set_title(f"r = {r}")
        _style(ax, "n", "clique number")
    axes.flat[0].legend(fontsize=7, frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return path


def plot_size_fraction(curve, path: str | Path) -> Path:
    """c_r against r over (0, 1], one segment per value of floor(1/r)."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    segments = defaultdict(list)
    for r, k, c in curve:
        segments[k].append((float(r), float(c)))
    for k in sorted(segments):
        xs, ys = zip(*sorted(segments[k]))
        ax.plot(xs, ys, color="tab:blue", lw=1.5)
    recips = [1 / k for k in sorted(segments)]
    ax.plot(recips, [x * x for x in recips], "o", color="tab:orange", ms=4, label="r = 1/k: c_r = r^2")
    _style(ax, "r", "c_r")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return path
