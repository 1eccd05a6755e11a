"""Figures written next to the delimited reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from dotgates.gates import GateHistogram  # noqa: E402
from dotgates.montecarlo import McReport  # noqa: E402

# no version strings in the file so reruns are byte-stable
_PNG_META = {"Software": None}


def plot_gate_histogram(hist: GateHistogram, path: str | Path) -> Path:
    gates = list(range(len(hist.num_hands)))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax1.bar(gates, hist.num_hands, color="tab:blue")
    ax1.set_yscale("log")
    ax1.set_xlabel("winning tiles (gates)")
    ax1.set_ylabel("hand patterns")
    ax1.set_xticks(gates)
    ax2.bar(gates, [float(p) for p in hist.probabilities], color="tab:orange")
    ax2.set_yscale("log")
    ax2.set_xlabel("winning tiles (gates)")
    ax2.set_ylabel("draw probability")
    ax2.set_xticks(gates)
    fig.suptitle(f"{hist.size}-tile dot hands ({hist.total_hands} patterns)")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, metadata=_PNG_META if path.suffix == ".png" else None)
    plt.close(fig)
    return path


def plot_montecarlo(report: McReport, path: str | Path) -> Path:
    labels = [c.label for c in report.classes]
    x = range(len(labels))
    width = 0.4
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar([i - width / 2 for i in x], [float(c.exact) for c in report.classes], width, label="exact")
    ax.bar(
        [i + width / 2 for i in x],
        [c.frequency for c in report.classes],
        width,
        yerr=[2 * c.stderr for c in report.classes],
        label="sampled",
    )
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_yscale("log")
    ax.set_ylabel("probability")
    cfg = report.config
    ax.set_title(f"size {cfg.size}, {cfg.trials} trials, seed {cfg.seed}")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, metadata=_PNG_META if path.suffix == ".png" else None)
    plt.close(fig)
    return path
