"""Optional matplotlib figures: an unrolled tube with its cones, and the quiver of B."""

from __future__ import annotations

import math

from .ar import Catalog, Regular


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_tube(path, cat: Catalog, tube_id: str, T=None, torsion=None, cones=None, levels: int | None = None):
    """Unrolled tube: E_j^l drawn at x = j + (l - 1)/2, y = l; the mouth is the bottom row."""
    plt = _plt()
    t = cat.tube(tube_id)
    r, L = t.rank, levels or cat.levels_for(t)
    fig, ax = plt.subplots(figsize=(max(6, r * 0.9), max(3, L * 0.6)))
    cone_of = {}
    if cones is not None:
        for k, c in enumerate(cones.cones, 1):
            for m in c.members:
                cone_of[m] = k
    colors = ["tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple", "tab:brown"]
    for l in range(1, L + 1):
        for j in range(1, r + 1):
            lab = Regular(tube_id, j, l)
            x, y = j + (l - 1) / 2, l
            k = cone_of.get(lab)
            face = colors[(k - 1) % len(colors)] if k else "white"
            edge = "black" if torsion is not None and lab in torsion.members else "grey"
            ax.scatter([x], [y], s=120, c=face, edgecolors=edge, marker="s" if T is not None and lab in T.labels else "o",
                       zorder=3)
            ax.annotate(f"{j},{l}", (x, y), textcoords="offset points", xytext=(0, 8), ha="center", fontsize=7)
    ax.set_xlabel("ray (mouth position)")
    ax.set_ylabel("level")
    ax.set_title(f"tube {tube_id}, rank {r}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_quiver(path, vertices: list[str], arrows: list[tuple[int, int]], title: str = ""):
    plt = _plt()
    n = len(vertices)
    pos = [(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k in range(n)]
    fig, ax = plt.subplots(figsize=(5, 5))
    for i, j in arrows:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", shrinkA=14, shrinkB=14, color="black"))
    for (x, y), v in zip(pos, vertices):
        ax.text(x, y, v, ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round", facecolor="white", edgecolor="grey"))
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_axis_off()
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
