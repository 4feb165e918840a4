"""Render graphs and sweep reports to image files.

Layout is classical multidimensional scaling on the exact hop-distance
matrix, so cycles come out round and rays point outward; no randomness is
involved and repeated renders are identical.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .graphs import Graph
from .metrics import distance_matrix


def graph_layout(g: Graph) -> list[tuple[float, float]]:
    """Deterministic 2-D coordinates from the distance matrix."""
    n = g.n
    if n == 1:
        return [(0.0, 0.0)]
    if n == 2:
        return [(-0.5, 0.0), (0.5, 0.0)]
    dist = np.array(distance_matrix(g), dtype=float)
    if np.isinf(dist).any():
        finite = dist[np.isfinite(dist)]
        dist[np.isinf(dist)] = (finite.max() if finite.size else 1.0) + 2.0
    sq = dist**2
    centering = np.eye(n) - np.full((n, n), 1.0 / n)
    gram = -0.5 * centering @ sq @ centering
    vals, vecs = np.linalg.eigh(gram)
    top = np.argsort(vals)[::-1][:2]
    coords = vecs[:, top] * np.sqrt(np.clip(vals[top], 0.0, None))
    if not np.any(np.abs(coords)):
        angles = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
        coords = np.column_stack([np.cos(angles), np.sin(angles)])
    span = np.abs(coords).max()
    if span > 0:
        coords = coords / span
    return [(float(x), float(y)) for x, y in coords]


def render_graph(g: Graph, path, title: str | None = None):
    """Draw the graph to an image file (format from the extension)."""
    pos = graph_layout(g)
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="#4878a8", linewidth=1.4, zorder=1)
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    ax.scatter(xs, ys, s=160, color="#f0f0f0", edgecolor="#303030", zorder=2)
    if g.n <= 40:
        for v, (x, y) in enumerate(pos):
            ax.text(x, y, str(v), ha="center", va="center", fontsize=8, zorder=3)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_verification(report, path):
    """Stacked per-order bars of vacuous/holds/violated counts."""
    orders = sorted(report.per_order)
    vac = [report.per_order[n][0] for n in orders]
    hold = [report.per_order[n][1] for n in orders]
    viol = [report.per_order[n][2] for n in orders]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    base = [0] * len(orders)
    for counts, label, color in (
        (hold, "holds", "#2e8b57"),
        (vac, "vacuous", "#a0a0a0"),
        (viol, "violated", "#c03030"),
    ):
        ax.bar(orders, counts, bottom=base, label=label, color=color)
        base = [b + c for b, c in zip(base, counts)]
    ax.set_yscale("symlog")
    ax.set_xlabel("vertices")
    ax.set_ylabel("graphs")
    ax.set_xticks(orders)
    ax.set_title(f"{report.claim}: {report.graphs_checked} graphs, "
                 f"{report.violated} violated")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
