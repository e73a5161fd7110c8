"""Range reports: group-order rows as delimited text plus rendered figures."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .group import GroupOrderReport, order_report

CSV_FIELDS = ("n", "w", "phi_w", "kernel_size", "order", "method")


def sweep_orders(ns: Iterable[int], method: str = "auto", cap: int = 2000) -> list[GroupOrderReport]:
    """One group-order report per requested modulus."""
    return [order_report(n, method=method, cap=cap) for n in ns]


def write_delimited(reports: Sequence[GroupOrderReport], stream: io.TextIOBase) -> None:
    """CSV rows, one per modulus, in the order given."""
    writer = csv.writer(stream)
    writer.writerow(CSV_FIELDS)
    for r in reports:
        writer.writerow([r.n, r.w, r.phi_w, r.kernel_size, r.order, r.method])


def render_figures(reports: Sequence[GroupOrderReport], out_dir: str | Path) -> list[Path]:
    """Render summary figures for a sweep and return the written paths."""
    if not reports:
        raise ValueError("nothing to plot")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ns = [r.n for r in reports]
    lo, hi = min(ns), max(ns)
    written = []

    fig, ax = plt.subplots(figsize=(7, 4.2))
    ax.scatter(ns, [r.order for r in reports], s=9, alpha=0.7, linewidths=0)
    orders = [r.order for r in reports]
    if max(orders) > 50 * max(1, min(orders)):
        ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("group order")
    ax.set_title(f"Permutations induced by the degree maps, n = {lo}..{hi}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = out / "group_order_vs_n.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(5.5, 4.2))
    sizes: dict[int, int] = {}
    for r in reports:
        sizes[r.kernel_size] = sizes.get(r.kernel_size, 0) + 1
    keys = sorted(sizes)
    ax.bar(range(len(keys)), [sizes[k] for k in keys], width=0.7)
    ax.set_xticks(range(len(keys)), [str(k) for k in keys])
    ax.set_xlabel("kernel size")
    ax.set_ylabel("count of n")
    ax.set_title(f"Kernel sizes, n = {lo}..{hi}")
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    path = out / "kernel_size_counts.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    return written
