"""Figure rendering for the report path. All output is written to PNG
files through the Agg backend; no display is ever opened, and the files
carry no software metadata so identical runs stay byte-identical.
"""

from __future__ import annotations

import os

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_RC = {
    "figure.dpi": 120,
    "savefig.dpi": 120,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 9,
}


def _save(fig, path):
    fig.savefig(path, metadata={"Software": None}, bbox_inches="tight")
    plt.close(fig)
    return path


def density_figure(path, x, g_hat, dataset=None, kde=None, truth=None):
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        if dataset is not None:
            ax.hist(dataset.times, bins=30, density=True, alpha=0.3,
                    color="grey", label="data")
        ax.plot(x, g_hat, label="posterior predictive", color="C0")
        if kde is not None:
            ax.plot(kde["x"], kde["density"], label="classic kde",
                    color="C2", linestyle="--")
        if truth is not None:
            ax.plot(x, truth.pdf(x), label="truth g", color="C3",
                    linestyle=":")
        ax.set_xlabel("time")
        ax.set_ylabel("density")
        ax.legend()
        return _save(fig, path)


def survival_figure(path, x, s_hat, truth=None):
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        ax.plot(x, s_hat, label="posterior predictive", color="C0")
        if truth is not None:
            ax.plot(x, 1.0 - truth.cdf(x), label="truth", color="C3",
                    linestyle=":")
        ax.set_xlabel("time")
        ax.set_ylabel("survival")
        ax.set_ylim(-0.02, 1.02)
        ax.legend()
        return _save(fig, path)


def traces_figure(path, traces):
    with plt.rc_context(_RC):
        fig, axes = plt.subplots(2, 2, figsize=(8.0, 5.0), sharex=True)
        for ax, key in zip(axes.ravel(), ("nu", "phi", "gamma", "n_clusters")):
            ax.plot(traces["sweep"], traces[key], linewidth=0.6, color="C0")
            ax.set_title(key)
        for ax in axes[-1]:
            ax.set_xlabel("sweep")
        fig.tight_layout()
        return _save(fig, path)


def debias_figure(path, debiased, kde=None, f_truth=None):
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        ax.hist(debiased, bins=30, density=True, alpha=0.3, color="grey",
                label="de-biased sample")
        if kde is not None:
            ax.plot(kde["x"], kde["density"], label="indirect kde",
                    color="C2", linestyle="--")
        if f_truth is not None:
            hi = float(np.max(debiased)) if kde is None else float(kde["x"][-1])
            xs = np.linspace(0.0, hi, 200)
            ax.plot(xs, f_truth.pdf(xs), label="truth f", color="C3",
                    linestyle=":")
        ax.set_xlabel("time")
        ax.set_ylabel("density")
        ax.legend()
        return _save(fig, path)


def render_report_figures(out_dir, x, g_hat, s_hat, traces, dataset=None,
                          debiased=None, kde_classic=None, kde_indirect=None,
                          truth=None, f_truth=None):
    """Render every figure whose inputs are available; returns the paths."""
    rendered = [
        density_figure(os.path.join(out_dir, "density.png"), x, g_hat,
                       dataset=dataset, kde=kde_classic, truth=truth),
        survival_figure(os.path.join(out_dir, "survival.png"), x, s_hat,
                        truth=truth),
        traces_figure(os.path.join(out_dir, "traces.png"), traces),
    ]
    if debiased is not None:
        rendered.append(debias_figure(os.path.join(out_dir, "debias.png"),
                                      debiased, kde=kde_indirect,
                                      f_truth=f_truth))
    return rendered
