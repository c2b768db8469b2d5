"""Figures written next to the CLI's delimited reports."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def hasse_diagram(ranks: dict, edges: list[tuple[object, object, str]], path: Path, names: dict | None = None,
                  title: str | None = None) -> Path:
    """Draw an interval rank by rank, bottom element at the bottom.

    ``ranks`` maps each element to its rank; ``edges`` are (lower, upper, label).
    """
    names = names or {x: str(x) for x in ranks}
    rows: dict[int, list] = defaultdict(list)
    for x, r in ranks.items():
        rows[r].append(x)
    pos = {}
    for r, row in rows.items():
        row.sort(key=lambda x: names[x])
        for i, x in enumerate(row):
            pos[x] = (i - (len(row) - 1) / 2, r)

    width = max(len(row) for row in rows.values()) if rows else 1
    fig, ax = plt.subplots(figsize=(max(4, 2.2 * width), 1.1 * (len(rows) + 1)))
    for lo, hi, label in edges:
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=1, zorder=1)
        if label:
            ax.text(x0 + 0.3 * (x1 - x0), y0 + 0.3 * (y1 - y0), label, fontsize=7, color="tab:blue",
                    ha="center", va="center", bbox=dict(fc="white", ec="none", pad=0.5), zorder=2)
    for x, (px, py) in pos.items():
        ax.text(px, py, names[x], fontsize=8, ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.3", fc="0.95", ec="0.3"), zorder=3)
    ax.set_xlim(-width / 2 - 0.5, width / 2 + 0.5)
    ax.set_ylim(-0.6, max(rows, default=0) + 0.6)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def verify_bars(reports: list[dict], path: Path, title: str | None = None) -> Path:
    names = [rep["relation"] for rep in reports]
    passed = [rep["samples"] - rep["failure_count"] for rep in reports]
    failed = [rep["failure_count"] for rep in reports]
    fig, ax = plt.subplots(figsize=(max(5, 0.35 * len(names) + 2), 3.5))
    ax.bar(names, passed, color="tab:green", label="pass")
    ax.bar(names, failed, bottom=passed, color="tab:red", label="fail")
    ax.set_ylabel("instances")
    ax.tick_params(axis="x", labelrotation=90, labelsize=7)
    ax.legend(frameon=False, fontsize=8)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
