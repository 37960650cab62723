"""Reduced and proper Young walls.

A wall is a sequence (..., y_2, y_1, y_0) of columns y_k = class_k(z_k) that
equals the ground column empty(0) for all k >= r.  Only the first r columns
are stored (k = 0 first), and trailing ground columns are always trimmed.

* reduced:  H(y_{k+1} (x) y_k) + z_{k+1} - z_k == 0 for every k >= 0,
* proper:   H(y_{k+1} (x) y_k) + z_{k+1} - z_k <= 0 for every k >= 0.

Kashiwara operators use the signature rule: the word sign_i(y_r) ...
sign_i(y_0), with sign_i(y) = -^eps +^phi, is reduced by cancelling +-
pairs; F_i acts on the column holding the leftmost surviving +, E_i on the
column holding the rightmost surviving -.  The ground tail left of column
r - 1 contributes one ground column whose minus signs are never cancelled and
are discarded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .cartan import INDEX_SET, LAMBDA0, AffineWeight, CartanType
from .columns import Content, ContentMap, YoungColumn, content_map
from .core.affine import AffineCrystal, AffineVertex
from .core.graph import DEFAULT_CAP, CrystalGraph, ResourceLimitError, enumerate_crystal
from .core.signature import Signature, factor_word, reduce_signature
from .energy import EnergyTable, Reachability, compute_energy, energy_table, path_exists
from .perfect_crystal import CrystalVertex, PerfectCrystal, build_crystal

REDUCED, PROPER, UNCONSTRAINED = "reduced", "proper", "unconstrained"
MODELS = (REDUCED, PROPER, UNCONSTRAINED)
MAX_PADDING = 2


class ModelViolation(RuntimeError):
    """An operator produced a wall outside the model it was applied in."""


@dataclass(frozen=True)
class YoungWall:
    columns: tuple  # YoungColumn, k = 0 first, trimmed

    @property
    def r(self) -> int:
        return len(self.columns)

    def column(self, k: int, ground: CrystalVertex) -> YoungColumn:
        return self.columns[k] if k < len(self.columns) else YoungColumn(ground, 0)

    def key(self) -> str:
        if not self.columns:
            return "empty(0)"
        return "|".join(str(c) for c in self.columns)

    def __str__(self) -> str:
        return self.key()


def canonical(columns: Iterable, ground: CrystalVertex) -> YoungWall:
    cols = [YoungColumn(*c) for c in columns]
    while cols and cols[-1].cls is ground and cols[-1].z == 0:
        cols.pop()
    return YoungWall(tuple(cols))


class WallContext:
    """Crystal, energy and content data shared by the wall operations of one type."""

    def __init__(self, crystal: PerfectCrystal, table: Optional[EnergyTable] = None):
        self.crystal = crystal
        self.cartan = crystal.cartan
        self.type = crystal.type
        self.ground = crystal.empty
        self.aff = AffineCrystal(crystal)
        if table is None:
            table = energy_table(crystal.type) if crystal is build_crystal(crystal.type) else compute_energy(crystal)
        self.table = table
        self.content: ContentMap = content_map(crystal)

    def ground_wall(self) -> YoungWall:
        return YoungWall(())

    def wall(self, columns: Iterable) -> YoungWall:
        return canonical(columns, self.ground)

    def parse_column(self, text: str) -> YoungColumn:
        label, _, rest = text.rpartition("(")
        return YoungColumn(self.crystal.vertex(label), int(rest.rstrip(")")))

    def parse_key(self, key: str) -> YoungWall:
        if key == "empty(0)":
            return self.ground_wall()
        return self.wall(self.parse_column(part) for part in key.split("|"))

    # pair conditions -------------------------------------------------------

    def pair_energy(self, left: YoungColumn, right: YoungColumn) -> int:
        """H(left (x) right) + z_left - z_right, with left = y_{k+1}, right = y_k."""
        return self.table(left.cls, right.cls) + left.z - right.z

    def is_reduced_pair(self, left: YoungColumn, right: YoungColumn) -> bool:
        return self.pair_energy(left, right) == 0

    def is_proper_pair(self, left: YoungColumn, right: YoungColumn) -> bool:
        return self.pair_energy(left, right) <= 0

    def pairs(self, y: YoungWall):
        """(k, y_{k+1}, y_k) for k = 0..r-1, including the boundary with the tail."""
        for k in range(y.r):
            yield k, y.column(k + 1, self.ground), y.columns[k]

    def first_violation(self, y: YoungWall, model: str) -> Optional[int]:
        if model == UNCONSTRAINED:
            return None
        test = self.is_reduced_pair if model == REDUCED else self.is_proper_pair
        for k, left, right in self.pairs(y):
            if not test(left, right):
                return k
        return None

    def is_reduced(self, y: YoungWall) -> bool:
        return self.first_violation(y, REDUCED) is None

    def is_proper(self, y: YoungWall) -> bool:
        return self.first_violation(y, PROPER) is None

    def fock_energies(self, y: YoungWall) -> list[int]:
        """H^aff(y_{k+1}(n_{k+1}) (x) y_k(n_k)) with n_k = k + z_k, for k = 0..r-1."""
        out = []
        for k, left, right in self.pairs(y):
            out.append(self.table(left.cls, right.cls) + (k + 1 + left.z) - (k + right.z))
        return out

    # signature and operators ----------------------------------------------

    def signature(self, y: YoungWall, i: int, padding: int = 1) -> Signature:
        """Reduced i-signature of y; survivors are attributed to column indices.

        ``padding`` ground columns r .. r+padding-1 stand in for the infinite
        tail; minus signs coming from them are dropped.
        """
        cols = [y.column(k, self.ground) for k in range(y.r + padding)]
        counts = []
        origins = []
        for k in reversed(range(len(cols))):
            c = cols[k]
            counts.append((self.crystal.epsilon(c.cls, i), self.crystal.phi(c.cls, i)))
            origins.append(k)
        sig = reduce_signature(factor_word(counts, origins))
        minus = tuple(k for k in sig.minus_from if k < y.r)
        if any(k > y.r for k in sig.plus_from):
            raise AssertionError(f"a plus sign survived in the tail of {y} (padding {padding})")
        return Signature(minus, sig.plus_from)

    def stable_signature(self, y: YoungWall, i: int) -> Signature:
        """Signature with the smallest padding after which it no longer changes."""
        prev = self.signature(y, i, 1)
        for s in range(2, MAX_PADDING + 2):
            cur = self.signature(y, i, s)
            if cur == prev:
                return cur
            prev = cur
        raise AssertionError(f"signature of {y} did not stabilize within padding {MAX_PADDING}")

    def epsilon(self, y: YoungWall, i: int) -> int:
        return self.signature(y, i).minus

    def phi(self, y: YoungWall, i: int) -> int:
        return self.signature(y, i).plus

    def _act(self, y: YoungWall, k: int, col: Optional[AffineVertex]) -> Optional[YoungWall]:
        if col is None:
            return None
        cols = [y.column(j, self.ground) for j in range(max(y.r, k + 1))]
        cols[k] = YoungColumn(col.base, col.shift)
        return self.wall(cols)

    def ftilde(self, y: YoungWall, i: int, model: str = UNCONSTRAINED) -> Optional[YoungWall]:
        sig = self.signature(y, i)
        k = sig.leftmost_plus
        if k is None:
            return None
        out = self._act(y, k, self.aff.f(y.column(k, self.ground).vertex(), i))
        self._check(out, model, y, i, "F")
        return out

    def etilde(self, y: YoungWall, i: int, model: str = UNCONSTRAINED) -> Optional[YoungWall]:
        sig = self.signature(y, i)
        k = sig.rightmost_minus
        if k is None:
            return None
        out = self._act(y, k, self.aff.e(y.columns[k].vertex(), i))
        self._check(out, model, y, i, "E")
        return out

    def _check(self, out: Optional[YoungWall], model: str, y: YoungWall, i: int, op: str) -> None:
        if out is None or model == UNCONSTRAINED:
            return
        k = self.first_violation(out, model)
        if k is not None:
            raise ModelViolation(f"{op}_{i}({y}) = {out} is not {model}: pair at k={k} fails")

    # weights and content --------------------------------------------------

    def wall_content(self, y: YoungWall) -> Content:
        total = [0] * 5
        for c in y.columns:
            for j, x in enumerate(self.content(c.vertex())):
                total[j] += x
        return tuple(total)  # type: ignore[return-value]

    def blocks(self, y: YoungWall) -> int:
        return sum(self.wall_content(y))

    def weight(self, y: YoungWall) -> AffineWeight:
        """Lambda_0 - sum_i k_i alpha_i."""
        k = self.wall_content(y)
        return AffineWeight(LAMBDA0 - self.cartan.root_combination(k), -k[0])

    # right block property -------------------------------------------------

    def right_block(self, left: YoungColumn, right: YoungColumn,
                    reach: Optional[Reachability] = None) -> bool:
        """Right block property for adjacent columns given as class(z)."""
        u, v = left.vertex(), right.vertex()
        if reach is not None and v.shift - u.shift <= reach.max_gap:
            return reach(u, v)
        return path_exists(self.crystal, u, v)

    # interchange ----------------------------------------------------------

    def to_json(self, y: YoungWall, model: str) -> dict:
        return {"type": self.type.value, "model": model,
                "columns": [{"class": c.cls.label, "z": c.z} for c in y.columns]}

    def from_json(self, doc: dict | str) -> tuple[YoungWall, str]:
        if isinstance(doc, str):
            doc = json.loads(doc)
        if CartanType.parse(doc["type"]) is not self.type:
            raise ValueError(f"wall of type {doc['type']} given to a {self.type.value} context")
        model = doc.get("model", UNCONSTRAINED)
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        y = self.wall(YoungColumn(self.crystal.vertex(c["class"]), int(c["z"])) for c in doc["columns"])
        return y, model

    def render(self, y: YoungWall) -> str:
        """One aligned row per column: ``k: class(z) [k_0 .. k_4]``."""
        if not y.columns:
            return "(ground-state wall)"
        rows = [(str(k), str(c), " ".join(str(x) for x in self.content(c.vertex())))
                for k, c in enumerate(y.columns)]
        wk = max(len(r[0]) for r in rows)
        wc = max(len(r[1]) for r in rows)
        return "\n".join(f"{k:>{wk}}: {c:<{wc}} [{cnt}]" for k, c, cnt in rows)


def right_block_pair_holds(ctx: WallContext, left: AffineVertex, right: AffineVertex) -> bool:
    """Right block property for Fock-normalized neighbours a(m), b(n).

    The column left of b(n) is a(m) with m = n_{k+1} = k + 1 + z_{k+1}; its
    blocks fit onto b(n) iff there is a directed path a(m - 1) -> b(n).
    """
    return path_exists(ctx.crystal, AffineVertex(left.base, left.shift - 1), right)


EXCEPTIONAL_FAMILIES = ("empty(m) empty(m)", "empty(m) theta(m+1)",
                        "-theta(m) empty(m+1)", "-theta(m) theta(m+2)")


def exceptional_family(ctx: WallContext, left: AffineVertex, right: AffineVertex) -> Optional[str]:
    """Which of the four Fock-normalized pair families (a(m), b(n)) falls in, if any."""
    g, t, mt = ctx.crystal.empty, ctx.crystal.theta, ctx.crystal.minus_theta
    d = right.shift - left.shift
    table = {(g, g, 0): 0, (g, t, 1): 1, (mt, g, 1): 2, (mt, t, 2): 3}
    idx = table.get((left.base, right.base, d))
    return None if idx is None else EXCEPTIONAL_FAMILIES[idx]


# --------------------------------------------------------------------------
# wall crystals for enumeration


class WallCrystal:
    """Wall model viewed as a crystal (for :func:`enumerate_crystal`)."""

    def __init__(self, ctx: WallContext, model: str):
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        self.ctx = ctx
        self.model = model
        self.cartan = ctx.cartan
        self.index_set = INDEX_SET

    def f(self, y: YoungWall, i: int) -> Optional[YoungWall]:
        return self.ctx.ftilde(y, i, self.model)

    def e(self, y: YoungWall, i: int) -> Optional[YoungWall]:
        return self.ctx.etilde(y, i, self.model)

    def weight(self, y: YoungWall) -> AffineWeight:
        return self.ctx.weight(y)

    def key(self, y: YoungWall) -> str:
        return y.key()


def context(type_or_crystal: CartanType | str | PerfectCrystal) -> WallContext:
    crystal = type_or_crystal if isinstance(type_or_crystal, PerfectCrystal) else build_crystal(type_or_crystal)
    cached = getattr(crystal, "_wall_context", None)
    if cached is None:
        cached = WallContext(crystal)
        crystal._wall_context = cached  # type: ignore[attr-defined]
    return cached


def proper_seeds(ctx: WallContext, max_columns: int = 2, max_z: int = 3) -> list[YoungWall]:
    """All proper walls whose deviating columns lie in k < max_columns with |z| <= max_z."""
    verts = ctx.crystal.vertices
    cols = [YoungColumn(b, z) for b in verts for z in range(-max_z, max_z + 1)]
    out: list[YoungWall] = []
    seen: set = set()
    frontier = [()]
    for _ in range(max_columns):
        nxt = []
        for prefix in frontier:
            for c in cols:
                cand = prefix + (c,)
                nxt.append(cand)
                y = ctx.wall(cand)
                if y.key() not in seen and ctx.is_proper(y):
                    seen.add(y.key())
                    out.append(y)
        frontier = nxt
    return sorted(out, key=lambda y: (ctx.blocks(y), y.r, y.key()))


def enumerate_model(ctx: WallContext, model: str, depth: int, cap: int = DEFAULT_CAP,
                    seeds: Sequence[YoungWall] = ()) -> CrystalGraph:
    """f-only BFS of a wall model from the ground wall (and optional extra seeds)."""
    crystal = WallCrystal(ctx, model)
    g = enumerate_crystal(crystal, ctx.ground_wall(), depth, "f", cap=cap, type_tag=ctx.type.value)
    for s in seeds:
        if s.key() in g.nodes:
            continue
        h = enumerate_crystal(crystal, s, depth, "f", cap=cap, type_tag=ctx.type.value)
        for k, w in h.nodes.items():
            if k not in g.nodes:
                if len(g.nodes) >= cap:
                    raise ResourceLimitError(f"node cap {cap} exceeded")
                g.nodes[k] = w
        known = set(g.arrows)
        g.arrows.extend(a for a in h.arrows if a not in known)
    return g


@dataclass
class FockComponentReport:
    depth: int
    seeds: int
    walls: int
    component: int
    reduced: int
    highest_weights: int
    extra_in_component: list
    reduced_outside: list
    bad_fock: list
    component_keys: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.extra_in_component or self.reduced_outside or self.bad_fock)


def highest_weight_wall(ctx: WallContext, y: YoungWall, model: str = PROPER,
                        cache: Optional[dict] = None, max_steps: int = 10**5) -> YoungWall:
    """Apply E_i (smallest i first) until every E_i vanishes."""
    trail = []
    cur = y
    for _ in range(max_steps):
        if cache is not None and cur.key() in cache:
            top = cache[cur.key()]
            break
        trail.append(cur.key())
        for i in INDEX_SET:
            nxt = ctx.etilde(cur, i, model)
            if nxt is not None:
                cur = nxt
                break
        else:
            top = cur
            break
    else:
        raise ResourceLimitError(f"no highest weight wall above {y} within {max_steps} steps")
    if cache is not None:
        for k in trail:
            cache[k] = top
    return top


def fock_component_check(ctx: WallContext, depth: int, max_columns: int = 2, max_z: int = 3,
                         cap: int = DEFAULT_CAP) -> FockComponentReport:
    """Compare the ground component of the proper-wall crystal with the reduced walls.

    The proper model is enumerated by f-only BFS to ``depth`` from the ground
    wall and from every proper seed within the budget.  Each wall is sent to
    the highest weight wall of its component by repeated E_i.  The walls whose
    component is that of the ground wall must be exactly the reduced ones,
    each with all Fock-normalized energies equal to 1.
    """
    seeds = proper_seeds(ctx, max_columns, max_z)
    g = enumerate_model(ctx, PROPER, depth, cap=cap, seeds=seeds)
    walls = {k: ctx.parse_key(k) for k in g.nodes}
    cache: dict = {}
    ground = ctx.ground_wall().key()
    tops = {k: highest_weight_wall(ctx, y, PROPER, cache).key() for k, y in walls.items()}
    comp = {k for k, top in tops.items() if top == ground}
    reduced = {k for k, y in walls.items() if ctx.is_reduced(y)}
    bad_fock = [k for k in sorted(comp) if any(h != 1 for h in ctx.fock_energies(walls[k]))]
    return FockComponentReport(depth, len(seeds), len(walls), len(comp), len(reduced),
                               len(set(tops.values())), sorted(comp - reduced),
                               sorted(reduced - comp), bad_fock, sorted(comp))
