"""Bounded BFS enumeration of crystal graphs, anchored comparison, and export.

Any object with ``index_set``, ``f(x, i)``, ``e(x, i)``, ``weight(x)`` and
``key(x)`` can be enumerated.  Nodes are keyed by canonical strings, so two
enumerations with the same parameters give identical graphs and exports.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from ..cartan import AffineWeight

DEFAULT_CAP = 10**6
COLORS = ("red", "black", "blue", "green", "purple")


class ResourceLimitError(RuntimeError):
    """Enumeration exceeded the configured node cap."""


@dataclass
class CrystalGraph:
    type: str
    anchor: str
    nodes: dict = field(default_factory=dict)  # key -> AffineWeight, in discovery order
    arrows: list = field(default_factory=list)  # (from, i, to)

    def __len__(self) -> int:
        return len(self.nodes)

    def out_map(self) -> dict:
        return {(s, i): t for s, i, t in self.arrows}

    def in_map(self) -> dict:
        return {(t, i): s for s, i, t in self.arrows}

    def arrow_multiset(self) -> list:
        return sorted(self.arrows)


def enumerate_crystal(crystal, start, max_depth: int, direction: str = "f",
                      cap: int = DEFAULT_CAP, type_tag: str = "") -> CrystalGraph:
    """BFS closure of ``start`` truncated at arrow distance ``max_depth``.

    ``direction`` is ``"f"`` (lowering operators only) or ``"both"``.  The
    graph keeps every i-arrow (recorded in the f-direction) between nodes it
    contains.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if direction not in ("f", "both"):
        raise ValueError(f"direction must be 'f' or 'both', not {direction!r}")
    index_set = crystal.index_set
    key = crystal.key
    anchor = key(start)
    elems = {anchor: start}
    order = [anchor]
    queue = deque([(start, 0)])
    while queue:
        x, depth = queue.popleft()
        if depth == max_depth:
            continue
        for i in index_set:
            nbrs = [crystal.f(x, i)]
            if direction == "both":
                nbrs.append(crystal.e(x, i))
            for y in nbrs:
                if y is None:
                    continue
                k = key(y)
                if k not in elems:
                    if len(elems) >= cap:
                        raise ResourceLimitError(f"node cap {cap} exceeded at depth {depth + 1}")
                    elems[k] = y
                    order.append(k)
                    queue.append((y, depth + 1))
    g = CrystalGraph(type=type_tag or getattr(getattr(crystal, "cartan", None), "type", "").__str__(),
                     anchor=anchor)
    for k in order:
        g.nodes[k] = crystal.weight(elems[k])
    for k in order:
        x = elems[k]
        for i in index_set:
            y = crystal.f(x, i)
            if y is not None:
                ky = key(y)
                if ky in elems:
                    g.arrows.append((k, i, ky))
    return g


@dataclass
class IsoResult:
    ok: bool
    reason: str = ""
    mapping: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok


def anchored_isomorphic(g1: CrystalGraph, g2: CrystalGraph, compare_weights: bool = True) -> IsoResult:
    """Check that anchor -> anchor extends along colored arrows to an isomorphism."""
    if len(g1.nodes) != len(g2.nodes):
        return IsoResult(False, f"node counts differ: {len(g1.nodes)} vs {len(g2.nodes)}")
    if len(g1.arrows) != len(g2.arrows):
        return IsoResult(False, f"arrow counts differ: {len(g1.arrows)} vs {len(g2.arrows)}")
    out1, out2 = g1.out_map(), g2.out_map()
    in1, in2 = g1.in_map(), g2.in_map()
    colors = sorted({i for _, i, _ in g1.arrows} | {i for _, i, _ in g2.arrows})
    fwd = {g1.anchor: g2.anchor}
    back = {g2.anchor: g1.anchor}
    queue = deque([g1.anchor])
    while queue:
        u = queue.popleft()
        v = fwd[u]
        if compare_weights and g1.nodes[u] != g2.nodes[v]:
            return IsoResult(False, f"weight mismatch at {u} -> {v}: {g1.nodes[u]} vs {g2.nodes[v]}")
        for i in colors:
            for m1, m2, label in ((out1, out2, "out"), (in1, in2, "in")):
                u2 = m1.get((u, i))
                v2 = m2.get((v, i))
                if (u2 is None) != (v2 is None):
                    return IsoResult(False, f"{label}-arrow {i} at {u} -> {v}: {u2} vs {v2}")
                if u2 is None:
                    continue
                if u2 in fwd:
                    if fwd[u2] != v2:
                        return IsoResult(False, f"arrow {u} -{i}-> {u2} maps inconsistently")
                    continue
                if v2 in back:
                    return IsoResult(False, f"{v2} reached twice ({back[v2]} and {u2})")
                fwd[u2] = v2
                back[v2] = u2
                queue.append(u2)
    if len(fwd) != len(g1.nodes):
        missing = next(k for k in g1.nodes if k not in fwd)
        return IsoResult(False, f"{missing} not reachable from the anchor")
    return IsoResult(True, "", fwd)


def export_dot(g: CrystalGraph) -> bytes:
    lines = [f'digraph "{g.type or "crystal"}" {{']
    for k in g.nodes:
        extra = ", shape=doublecircle" if k == g.anchor else ""
        lines.append(f'  "{k}" [label="{k}"{extra}];')
    for s, i, t in g.arrows:
        lines.append(f'  "{s}" -> "{t}" [color={COLORS[i]}, label="{i}"];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def export_json(g: CrystalGraph) -> bytes:
    doc = {
        "type": g.type,
        "anchor": g.anchor,
        "nodes": [{"key": k, "wt": w.to_json()} for k, w in g.nodes.items()],
        "arrows": [{"from": s, "i": i, "to": t} for s, i, t in g.arrows],
    }
    return (json.dumps(doc, indent=1) + "\n").encode()


def load_json(data: bytes | str) -> CrystalGraph:
    doc = json.loads(data)
    g = CrystalGraph(type=doc["type"], anchor=doc["anchor"])
    for node in doc["nodes"]:
        g.nodes[node["key"]] = AffineWeight.from_json(node["wt"])
    g.arrows = [(a["from"], int(a["i"]), a["to"]) for a in doc["arrows"]]
    return g


def export_graph(g: CrystalGraph, fmt: str) -> bytes:
    fmt = fmt.lower()
    if fmt == "dot":
        return export_dot(g)
    if fmt == "json":
        return export_json(g)
    raise ValueError(f"unsupported graph format {fmt!r}")
