"""Figure and DOT output for graphs, iterate traces, and dissipation trees.

Matplotlib figures use a circular vertex layout (adequate at this scale)
and are written straight to file; DOT is emitted as text for graphviz.
Node names in DOT are canonical-form hash prefixes so diffs stay stable.
"""

from __future__ import annotations

import hashlib
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .graph_core import Graph, to_graph6
from .iso import canonical_form
from .preimage import DissipationTree


def _node_name(g: Graph) -> str:
    return "g" + hashlib.sha256(canonical_form(g)).hexdigest()[:10]


def graph_to_dot(g: Graph, name: str | None = None) -> str:
    label = name or to_graph6(g)
    out = [f'graph "{_node_name(g)}" {{', f'  label="{label}";']
    for v in range(g.n):
        out.append(f"  v{v};")
    for u, v in g.edges():
        out.append(f"  v{u} -- v{v};")
    out.append("}")
    return "\n".join(out) + "\n"


def trace_to_dot(graphs: list[Graph]) -> str:
    """One cluster per iterate, labelled with k and the graph6 string."""
    out = ["graph iterates {"]
    for k, g in enumerate(graphs):
        out.append(f"  subgraph cluster_k{k} {{")
        out.append(f'    label="k={k}  {to_graph6(g)}";')
        for v in range(g.n):
            out.append(f"    k{k}v{v};")
        for u, v in g.edges():
            out.append(f"    k{k}v{u} -- k{k}v{v};")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def _layout_circle(n: int) -> list[tuple[float, float]]:
    if n == 0:
        return []
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * i / n - math.pi / 2), math.sin(2 * math.pi * i / n - math.pi / 2))
        for i in range(n)
    ]


def draw_graph(g: Graph, ax, title: str | None = None) -> None:
    pos = _layout_circle(g.n)
    for u, v in g.edges():
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], "k-", lw=1.2, zorder=1)
    if pos:
        xs, ys = zip(*pos)
        ax.scatter(xs, ys, s=160, c="white", edgecolors="black", zorder=2)
        for v, (x, y) in enumerate(pos):
            ax.text(x, y, str(v), ha="center", va="center", fontsize=8, zorder=3)
    if title:
        ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.axis("off")


def save_graph_figure(graphs: list[Graph], path: str, titles: list[str] | None = None) -> None:
    """Render one panel per graph to an image file."""
    count = max(len(graphs), 1)
    cols = min(count, 4)
    rows_n = (count + cols - 1) // cols
    fig, axes = plt.subplots(rows_n, cols, figsize=(3.2 * cols, 3.2 * rows_n), squeeze=False)
    flat = [ax for row in axes for ax in row]
    for i, g in enumerate(graphs):
        title = titles[i] if titles else f"k={i}  n={g.n} m={g.m}"
        draw_graph(g, flat[i], title)
    for ax in flat[len(graphs) :]:
        ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_tree_figure(tree: DissipationTree, path: str) -> None:
    """Dissipation tree as level columns with jump arrows."""
    levels = tree.levels()
    coords: dict[bytes, tuple[float, float]] = {}
    for level in sorted(levels):
        keys = levels[level]
        for i, key in enumerate(keys):
            coords[key] = (float(level), i - (len(keys) - 1) / 2)
    width = max(6.0, 1.6 * (len(levels) + 1))
    height = max(4.0, 0.55 * max(len(v) for v in levels.values()))
    fig, ax = plt.subplots(figsize=(width, height))
    for key, node in tree.nodes.items():
        if node.parent is not None:
            x0, y0 = coords[key]
            x1, y1 = coords[node.parent]
            ax.annotate(
                "",
                xy=(x1 + 0.12, y1),
                xytext=(x0 - 0.12, y0),
                arrowprops=dict(arrowstyle="->", lw=0.8, color="gray"),
            )
    for key, (x, y) in coords.items():
        label = key.decode("ascii")
        ax.text(
            x,
            y,
            label,
            ha="center",
            va="center",
            fontsize=7,
            bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="black", lw=0.6),
        )
    ax.set_xlabel("dissipation number")
    ax.set_xticks(sorted(levels))
    ax.set_yticks([])
    for spine in ("top", "right", "left"):
        ax.spines[spine].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_check_figure(tested: list[tuple[str, int, int]], path: str) -> None:
    """Bar chart of instances tested per check, failures highlighted."""
    ids = [t[0] for t in tested]
    counts = [t[1] for t in tested]
    fails = [t[2] for t in tested]
    fig, ax = plt.subplots(figsize=(1.0 + 0.7 * len(ids), 3.4))
    colors = ["#c0392b" if f else "#2c3e50" for f in fails]
    ax.bar(ids, counts, color=colors)
    ax.set_ylabel("instances tested")
    ax.set_yscale("symlog")
    for i, f in enumerate(fails):
        if f:
            ax.text(i, counts[i], f"{f} FAIL", ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
