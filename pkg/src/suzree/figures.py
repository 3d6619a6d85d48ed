"""Figure rendering for the report.

All figures are drawn off-screen and written as PNG with the software
metadata chunk stripped, so repeated runs produce identical bytes.
"""

from __future__ import annotations

import os
from typing import Any

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from suzree.aurifeuille import Family
from suzree.primegraph import GroupSpec, build_gk

_FAMILY_COLOR = {"sz": "tab:blue", "g2": "tab:green", "f4": "tab:red"}

_GRAPH_PANELS = (
    (Family.SUZUKI, 7),
    (Family.REE_G2, 3),
    (Family.REE_F4, 3),
)

_LAYOUT_SEED = 11


def _save(fig: plt.Figure, path: str) -> str:
    fig.savefig(path, dpi=110, metadata={"Software": None})
    plt.close(fig)
    return path


def render_sweep_margins(doc: dict[str, Any], path: str) -> str:
    """Bit length of the primitive-part gcd against m, per family and sign."""
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.6), sharey=False)
    rows = doc["sections"]["theorem2"]["rows"]
    for ax, family in zip(axes, ("sz", "g2", "f4")):
        for eps, marker in (("+", "o"), ("-", "s")):
            pts = [
                (int(r["m"]), int(r["gcd"]).bit_length())
                for r in rows
                if r["family"] == family and r["eps"] == eps
                and not r["exception"]
            ]
            ax.plot(
                [p[0] for p in pts], [p[1] for p in pts],
                marker, markersize=2.5, linestyle="none",
                color=_FAMILY_COLOR[family],
                alpha=0.9 if eps == "+" else 0.45,
                label=f"eps={eps}",
            )
        exc = [
            int(r["m"]) for r in rows
            if r["family"] == family and r["exception"]
        ]
        if exc:
            ax.plot(exc, [1] * len(exc), "x", color="black", markersize=7,
                    label="exception")
        ax.set_title(family)
        ax.set_xlabel("m")
        ax.legend(fontsize=7)
    axes[0].set_ylabel("gcd bit length")
    fig.suptitle("Primitive part captured by each sign", fontsize=11)
    fig.tight_layout()
    return _save(fig, path)


def render_bound_margins(doc: dict[str, Any], path: str) -> str:
    """Smaller factor value versus the largest prime of m."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    rows = doc["sections"]["lemma2"]["rows"]
    for ax, family in zip(axes, ("sz", "g2")):
        fam_rows = [r for r in rows if r["family"] == family]
        ms = [int(r["m"]) for r in fam_rows]
        ax.semilogy(
            ms, [int(r["value_first"]) for r in fam_rows],
            ".", color=_FAMILY_COLOR[family], label="min factor value",
        )
        ax.semilogy(
            ms, [int(r["bound"]) for r in fam_rows],
            "-", color="black", linewidth=0.8, label="largest prime of m",
        )
        na = [int(r["m"]) for r in fam_rows if r["result"] == "not_applicable"]
        for m in na:
            ax.axvline(m, color="gray", linewidth=0.5, linestyle=":")
        ax.set_title(family)
        ax.set_xlabel("m")
        ax.legend(fontsize=7)
    axes[0].set_ylabel("value")
    fig.suptitle("Factor growth beyond the required prime", fontsize=11)
    fig.tight_layout()
    return _save(fig, path)


def render_prime_graphs(path: str, budget: int | None = None) -> str:
    """Three example prime graphs, one panel each, vertices grouped by
    torus class.
    """
    from suzree.arith import DEFAULT_BUDGET

    budget = DEFAULT_BUDGET if budget is None else budget
    fig, axes = plt.subplots(1, 3, figsize=(12, 4))
    for ax, (family, m) in zip(axes, _GRAPH_PANELS):
        graph = build_gk(GroupSpec(family, m), budget=budget)
        g = nx.Graph()
        g.add_nodes_from(graph.vertices())
        g.add_edges_from(graph.edges())
        pos = nx.spring_layout(g, seed=_LAYOUT_SEED)
        palette = plt.cm.tab10.colors
        color_of = {}
        for i, cls in enumerate(graph.classes):
            for v in cls.vertices:
                color_of[v] = palette[i % len(palette)]
        nx.draw_networkx(
            g, pos, ax=ax, with_labels=True, font_size=7,
            node_size=260,
            node_color=[color_of[v] for v in g.nodes()],
        )
        ax.set_title(f"{family.value}, m={m}")
        ax.axis("off")
    fig.suptitle("Prime graphs with torus classes", fontsize=11)
    fig.tight_layout()
    return _save(fig, path)


def render_all(doc: dict[str, Any], outdir: str) -> list[str]:
    return [
        render_sweep_margins(doc, os.path.join(outdir, "sweep_margins.png")),
        render_bound_margins(doc, os.path.join(outdir, "bound_margins.png")),
        render_prime_graphs(os.path.join(outdir, "prime_graphs.png")),
    ]
