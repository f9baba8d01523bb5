"""Matplotlib figures written next to the textual/JSON reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from fntopo.core import OrbitResult  # noqa: E402
from fntopo.topology import Topology  # noqa: E402

BASE_COLOR = "#c0392b"
NODE_COLOR = "#2c3e50"


def _forest_layout(t: Topology) -> dict[int, tuple[float, float]]:
    # leaves get consecutive x slots in DFS order; parents sit over their children's mean
    depth: dict[int, int] = {}
    order: list[int] = []
    slot = 0.0
    leaf_x: dict[int, float] = {}
    for r in t.roots:
        stack = [(r, 0)]
        while stack:
            c, d = stack.pop()
            depth[c] = d
            order.append(c)
            kids = t.children(c)
            if not kids:
                leaf_x[c] = slot
                slot += 1.0
            stack.extend((k, d + 1) for k in reversed(kids))
        slot += 0.5
    xs: dict[int, float] = {}
    for c in reversed(order):
        kids = t.children(c)
        xs[c] = leaf_x[c] if not kids else sum(xs[k] for k in kids) / len(kids)
    return {c: (xs[c], -depth[c]) for c in order}


def plot_hasse(t: Topology, path, title: str | None = None) -> None:
    """Draw the Hasse forest with base classes on top and save it to ``path``."""
    pos = _forest_layout(t)
    width = max(4.0, 0.9 * (max(x for x, _ in pos.values()) + 1))
    height = max(3.0, 1.1 * (1 - min(y for _, y in pos.values())))
    fig, ax = plt.subplots(figsize=(width, height))
    for child, parent in t.parent.items():
        (x0, y0), (x1, y1) = pos[child], pos[parent]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", color="0.4", shrinkA=12, shrinkB=12))
    for c in t.classes:
        x, y = pos[c.id]
        color = BASE_COLOR if c.id in t.base_set else NODE_COLOR
        ax.text(x, y, c.label(), ha="center", va="center", fontsize=10, color="white",
                bbox=dict(boxstyle="round,pad=0.3", fc=color, ec="none"))
    ax.set_xlim(min(x for x, _ in pos.values()) - 0.8, max(x for x, _ in pos.values()) + 0.8)
    ax.set_ylim(min(y for _, y in pos.values()) - 0.6, 0.6)
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_orbits(results: list[OrbitResult], path, title: str | None = None) -> None:
    """Orbit traces against step index; log scale when values span decades."""
    fig, ax = plt.subplots(figsize=(7, 4))
    peak = 1
    for r in results:
        ax.plot(range(len(r.trace)), r.trace, marker=".", lw=1, label=f"x0={r.start}")
        peak = max(peak, max(abs(v) for v in r.trace))
    if peak > 1000 and all(v > 0 for r in results for v in r.trace):
        ax.set_yscale("log")
    ax.set_xlabel("step")
    ax.set_ylabel("value")
    if len(results) <= 10:
        ax.legend(frameon=False, fontsize=8)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
