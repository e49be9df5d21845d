"""Figure rendering for sweep results: precision vs alpha curves."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .experiment import SweepCurve, find_optimal_alpha  # noqa: E402

_MARKERS = {"cn": "^", "aa": "o", "ra": "s"}


def plot_sweep(curve: SweepCurve, path: str | Path,
               title: str | None = None) -> Path:
    """Render mean precision (with std band) against alpha and save to file."""
    path = Path(path)
    alphas = list(curve.grid)
    means = [r.mean for r in curve.reports]
    stds = [r.std for r in curve.reports]
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    marker = _MARKERS.get(curve.family.value, "o")
    ax.errorbar(alphas, means, yerr=stds, marker=marker, ms=4, lw=1.0,
                capsize=2, color="tab:blue", ecolor="0.7")
    a_star, p_star = find_optimal_alpha(curve)
    ax.axvline(a_star, color="tab:red", lw=0.8, ls="--",
               label=rf"$\alpha^*={a_star:.2f}$, precision {p_star:.3f}")
    ax.axvline(1.0, color="0.5", lw=0.8, ls=":")
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel("precision")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
