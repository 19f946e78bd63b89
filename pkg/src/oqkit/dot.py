"""Graphviz export for cylindric orthoframes."""

from __future__ import annotations

import json
import os

from .formats import atomic_write
from .frames import CylindricOrthoFrame

PALETTE = ("blue", "red", "darkgreen", "purple", "orange", "brown", "magenta", "teal")


def _quote(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def frame_to_dot(
    F: CylindricOrthoFrame,
    delta: tuple[int, int] | None = None,
    loops: bool = False,
    name: str = "frame",
) -> str:
    """Orthogonality as solid undirected edges (each pair once), R_i as dashed
    arrows coloured per dimension, and members of Δ_ik filled when ``delta``
    selects (i, k)."""
    members = F.deltas[delta[0]][delta[1]] if delta is not None else frozenset()
    lines = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for p in range(F.m):
        attrs = [f"label={_quote(F.label(p))}"]
        if p in members:
            attrs.append('style=filled, fillcolor="lightgrey"')
        lines.append(f"  p{p} [{', '.join(attrs)}];")
    for p in range(F.m):
        for q in range(p + 1, F.m):
            if F.perp[p][q]:
                lines.append(f"  p{p} -> p{q} [dir=none, style=solid];")
    for i in F.dims:
        color = PALETTE[i % len(PALETTE)]
        for p in range(F.m):
            for q in range(F.m):
                if F.rels[i][p][q] and (loops or p != q):
                    lines.append(f'  p{p} -> p{q} [style=dashed, color="{color}", label="R{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(
    F: CylindricOrthoFrame,
    path: str | os.PathLike,
    delta: tuple[int, int] | None = None,
    loops: bool = False,
) -> None:
    atomic_write(path, frame_to_dot(F, delta=delta, loops=loops))
