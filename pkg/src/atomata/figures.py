"""Matplotlib figure output for the CLI.

draw_automaton lays states on a circle and writes a PNG/SVG/PDF (decided
by the file suffix); duality_scatter plots determinization size against
minimal size for a verification corpus. Rendering is headless (Agg).
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, FancyArrowPatch

from .automata import AnyAutomaton, as_nfa

_NODE_R = 0.12


def _positions(count: int) -> list[tuple[float, float]]:
    if count == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * i / count), math.sin(2 * math.pi * i / count))
        for i in range(count)
    ]


def draw_automaton(m: AnyAutomaton, path: str, title: str = "") -> None:
    n = as_nfa(m)
    pos = _positions(n.state_count)
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)

    for q, (x, y) in enumerate(pos):
        ax.add_patch(Circle((x, y), _NODE_R, fill=True, facecolor="white", edgecolor="black", zorder=3))
        if q in n.final:
            ax.add_patch(Circle((x, y), _NODE_R * 0.78, fill=False, edgecolor="black", zorder=4))
        ax.text(x, y, n.label_of(q), ha="center", va="center", fontsize=9, zorder=5)

    # entry arrows sit outside the circle, pointing at each initial state
    for q in sorted(n.initial):
        x, y = pos[q]
        r = math.hypot(x, y) or 1.0
        ux, uy = (x / r, y / r) if (x, y) != (0.0, 0.0) else (-1.0, 0.0)
        ax.add_patch(
            FancyArrowPatch(
                (x + ux * 3.2 * _NODE_R, y + uy * 3.2 * _NODE_R),
                (x + ux * 1.15 * _NODE_R, y + uy * 1.15 * _NODE_R),
                arrowstyle="-|>", mutation_scale=12, color="black", zorder=2,
            )
        )

    grouped: dict[tuple[int, int], list[int]] = {}
    for (p, a, q) in n.transitions:
        grouped.setdefault((p, q), []).append(a)
    for (p, q), syms in sorted(grouped.items()):
        label = ",".join(n.alphabet.symbols[a] for a in sorted(syms))
        x1, y1 = pos[p]
        x2, y2 = pos[q]
        if p == q:
            r = math.hypot(x1, y1) or 1.0
            ux, uy = (x1 / r, y1 / r) if (x1, y1) != (0.0, 0.0) else (0.0, 1.0)
            cx, cy = x1 + ux * 2.1 * _NODE_R, y1 + uy * 2.1 * _NODE_R
            ax.add_patch(Circle((cx, cy), _NODE_R * 0.9, fill=False, edgecolor="black", zorder=1))
            ax.text(cx + ux * 1.6 * _NODE_R, cy + uy * 1.6 * _NODE_R, label,
                    ha="center", va="center", fontsize=8, color="tab:blue")
            continue
        bend = 0.18 if (q, p) in grouped else 0.06
        ax.add_patch(
            FancyArrowPatch(
                (x1, y1), (x2, y2),
                connectionstyle=f"arc3,rad={bend}",
                arrowstyle="-|>", mutation_scale=12, color="black",
                shrinkA=14, shrinkB=14, zorder=2,
            )
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        nx_, ny_ = -(y2 - y1), (x2 - x1)
        norm = math.hypot(nx_, ny_) or 1.0
        off = bend + 0.06
        ax.text(mx + nx_ / norm * off, my + ny_ / norm * off, label,
                ha="center", va="center", fontsize=8, color="tab:blue")

    lim = 1.0 + 5 * _NODE_R
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def duality_scatter(
    rows: Sequence[tuple[int, int, int, int, bool, bool, bool]], path: str
) -> None:
    """One point per corpus instance: determinization size against minimal
    size, green when both duality verdicts say minimal, blue when both say
    non-minimal, red on disagreement (which indicates a defect)."""
    fig, ax = plt.subplots(figsize=(6, 5))
    jitter = 0.18
    colors = {(True, True): "tab:green", (False, False): "tab:blue"}
    for idx, (_seed, _n, nd, mn, nd_min, nr_atomic, agree) in enumerate(rows):
        c = colors.get((nd_min, nr_atomic), "tab:red") if agree else "tab:red"
        dx = ((idx * 7919) % 101 / 101 - 0.5) * jitter
        dy = ((idx * 104729) % 101 / 101 - 0.5) * jitter
        ax.plot(nd + dx, mn + dy, "o", color=c, markersize=3, alpha=0.5)
    top = max((max(nd, mn) for (_s, _n, nd, mn, *_rest) in rows), default=1) + 1
    ax.plot([0, top], [0, top], "--", color="gray", linewidth=1)
    ax.set_xlabel("states after determinization")
    ax.set_ylabel("states after minimization")
    ax.set_title("determinization vs minimal size (green: already minimal)")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
