"""Figures for the report paths of the CLI.  Uses the Agg backend, files only."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams.update(
    {
        "font.size": 9,
        "axes.titlesize": 10,
        "axes.labelsize": 9,
        "legend.fontsize": 8,
        "savefig.dpi": 150,
        "savefig.bbox": "tight",
    }
)


def cayley_heatmap(t, path, title=None):
    """Cayley table as an image, with the Z_q blocks outlined when tagged."""
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    ax.imshow(t.table, cmap="viridis", interpolation="nearest")
    if t.p and t.q:
        for k in range(1, t.q):
            ax.axhline(k * t.p - 0.5, color="w", lw=0.6)
            ax.axvline(k * t.p - 0.5, color="w", lw=0.6)
    ax.set_xticks([])
    ax.set_yticks([])
    if title:
        ax.set_title(title)
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def conjecture_sweep(rows, path):
    """Observed isotopy counts against floor((p+5)/6) + 1; mismatches in red."""
    ps = [r.p for r in rows]
    fig, ax = plt.subplots(figsize=(6, 3.4))
    ax.plot(ps, [r.predicted for r in rows], "-", color="0.6", lw=1, label="floor((p+5)/6) + 1")
    ax.plot(ps, [r.isotopy_count for r in rows], ".", ms=3, color="C0", label="isotopy classes")
    bad = [r for r in rows if not r.match]
    if bad:
        ax.plot([r.p for r in bad], [r.isotopy_count for r in bad], "x", color="red", label="mismatch")
    ax.set_xlabel("p")
    ax.set_ylabel("right Bol loops of order 3p up to isotopy")
    ax.legend(frameon=False)
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def class_summary(report, path):
    """Bar chart of |RMlt| per representative of one classification."""
    labels, orders, colors = [], [], []
    for e in report.loops:
        labels.append("cyclic" if e.seq.gamma is None else str(e.label))
        orders.append(e.rmlt_order or 0)
        colors.append("C2" if e.group else ("C3" if e.bruck else "C0"))
    fig, ax = plt.subplots(figsize=(max(3, 0.45 * len(labels) + 1.5), 3))
    ax.bar(range(len(labels)), orders, color=colors)
    ax.set_xticks(range(len(labels)), labels, rotation=0)
    ax.set_yscale("log")
    ax.set_xlabel("gamma label")
    ax.set_ylabel("|RMlt|")
    ax.set_title(f"p={report.ctx.p}, q={report.ctx.q}")
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return Path(path)
