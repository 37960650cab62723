"""The level-1 perfect crystals B (type E6(2)) and B' (type F4(1)).

Vertices are x_alpha for alpha a positive or negative root, r_i for each
simple root alpha_i in the positive root list, and the extra vertex empty.
Arrows follow the four construction rules:

* i != 0:  x_alpha -i-> x_beta  iff alpha - alpha_i = beta,
* i != 0:  x_{alpha_i} -i-> r_i -i-> x_{-alpha_i},
* i == 0:  x_alpha -0-> x_beta  iff alpha + theta = beta (alpha, beta != +-theta),
* i == 0:  x_{-theta} -0-> empty -0-> x_theta.

epsilon/phi are string lengths and wt = sum_i (phi_i - epsilon_i) Lambda_i.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .cartan import INDEX_SET, LAMBDA0, CartanDatum, CartanType, ClassicalWeight, cartan_datum

POS, NEG, R, EMPTY = "pos", "neg", "r", "empty"

Root = tuple[int, int, int, int]


def root_label(root: Root) -> str:
    return "(" + "".join(str(abs(c)) for c in root) + ")"


@dataclass(frozen=True, eq=False)
class CrystalVertex:
    """A vertex of B.  Instances are interned per crystal and compare by identity."""

    kind: str
    root: Optional[Root] = None
    index: Optional[int] = None
    order: int = field(default=0, compare=False)

    @property
    def label(self) -> str:
        if self.kind == EMPTY:
            return "empty"
        if self.kind == R:
            return f"r{self.index}"
        assert self.root is not None
        return ("-" if self.kind == NEG else "") + root_label(self.root)

    @property
    def signed_root(self) -> Optional[Root]:
        if self.root is None:
            return None
        if self.kind == NEG:
            return tuple(-c for c in self.root)  # type: ignore[return-value]
        return self.root

    def __repr__(self) -> str:
        return f"<{self.label}>"

    def __str__(self) -> str:
        return self.label


class CrystalError(ValueError):
    pass


class PerfectCrystal:
    """A finite seminormal crystal given by its colored arrows."""

    def __init__(self, cartan: CartanDatum, vertices: Sequence[CrystalVertex],
                 arrows: Iterable[tuple[CrystalVertex, int, CrystalVertex]]):
        self.cartan = cartan
        self.type = cartan.type
        self.vertices: tuple[CrystalVertex, ...] = tuple(vertices)
        self.arrows: tuple[tuple[CrystalVertex, int, CrystalVertex], ...] = tuple(
            sorted(arrows, key=lambda a: (a[0].order, a[1], a[2].order)))
        self._by_label = {v.label: v for v in self.vertices}
        self._f: list[dict[CrystalVertex, CrystalVertex]] = [{} for _ in INDEX_SET]
        self._e: list[dict[CrystalVertex, CrystalVertex]] = [{} for _ in INDEX_SET]
        for src, i, tgt in self.arrows:
            if src in self._f[i]:
                raise CrystalError(f"{src.label} has two outgoing {i}-arrows")
            if tgt in self._e[i]:
                raise CrystalError(f"{tgt.label} has two incoming {i}-arrows")
            self._f[i][src] = tgt
            self._e[i][tgt] = src
        self._eps: dict[CrystalVertex, tuple[int, ...]] = {}
        self._phi: dict[CrystalVertex, tuple[int, ...]] = {}
        for v in self.vertices:
            self._eps[v] = tuple(self._string_length(v, self._e[i]) for i in INDEX_SET)
            self._phi[v] = tuple(self._string_length(v, self._f[i]) for i in INDEX_SET)
        self._wt = {v: ClassicalWeight(tuple(p - e for p, e in zip(self._phi[v], self._eps[v])))
                    for v in self.vertices}

    def _string_length(self, v: CrystalVertex, step: dict) -> int:
        n = 0
        seen = {v}
        while v in step:
            v = step[v]
            if v in seen:
                raise CrystalError(f"cyclic string through {v.label}")
            seen.add(v)
            n += 1
        return n

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"PerfectCrystal({self.type.value}, {len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    @property
    def index_set(self) -> tuple[int, ...]:
        return INDEX_SET

    def vertex(self, label: str) -> CrystalVertex:
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r} in {self.type.value}") from None

    @property
    def empty(self) -> CrystalVertex:
        return self._by_label["empty"]

    @property
    def theta(self) -> CrystalVertex:
        return self._by_label[root_label(self.cartan.theta)]

    @property
    def minus_theta(self) -> CrystalVertex:
        return self._by_label["-" + root_label(self.cartan.theta)]

    def f(self, b: CrystalVertex, i: int) -> Optional[CrystalVertex]:
        return self._f[i].get(b)

    def e(self, b: CrystalVertex, i: int) -> Optional[CrystalVertex]:
        return self._e[i].get(b)

    def epsilon(self, b: CrystalVertex, i: int) -> int:
        return self._eps[b][i]

    def phi(self, b: CrystalVertex, i: int) -> int:
        return self._phi[b][i]

    def epsilon_phi(self, b: CrystalVertex, i: int) -> tuple[int, int]:
        return self._eps[b][i], self._phi[b][i]

    def epsilon_weight(self, b: CrystalVertex) -> ClassicalWeight:
        return ClassicalWeight(self._eps[b])

    def phi_weight(self, b: CrystalVertex) -> ClassicalWeight:
        return ClassicalWeight(self._phi[b])

    def wt(self, b: CrystalVertex) -> ClassicalWeight:
        return self._wt[b]

    # graph-protocol hooks used by core.graph.enumerate_crystal
    def weight(self, b: CrystalVertex):
        from .cartan import AffineWeight
        return AffineWeight(self._wt[b], 0)

    def key(self, b: CrystalVertex) -> str:
        return b.label

    def arrow_labels(self) -> list[tuple[str, int, str]]:
        return [(s.label, i, t.label) for s, i, t in self.arrows]

    def with_arrows(self, arrows: Iterable[tuple[str, int, str]]) -> "PerfectCrystal":
        """A crystal on the same vertex set with the given labelled arrows."""
        return PerfectCrystal(self.cartan, self.vertices,
                              [(self.vertex(s), i, self.vertex(t)) for s, i, t in arrows])


def _neg(r: Root) -> Root:
    return tuple(-c for c in r)  # type: ignore[return-value]


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))  # type: ignore[return-value]


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))  # type: ignore[return-value]


def _unit(i: int) -> Root:
    return tuple(int(j == i) for j in (1, 2, 3, 4))  # type: ignore[return-value]


def crystal_vertices(cartan: CartanDatum) -> list[CrystalVertex]:
    """Canonical order: empty, r_i ascending, positive roots in list order, negatives."""
    pos = cartan.positive_roots
    r_indices = [i for i in (1, 2, 3, 4) if _unit(i) in pos]
    verts = [CrystalVertex(EMPTY)]
    verts += [CrystalVertex(R, index=i) for i in r_indices]
    verts += [CrystalVertex(POS, root=r) for r in pos]
    verts += [CrystalVertex(NEG, root=r) for r in pos]
    return [CrystalVertex(v.kind, v.root, v.index, order=n) for n, v in enumerate(verts)]


def construct_arrows(cartan: CartanDatum, vertices: Sequence[CrystalVertex]):
    by_root = {v.signed_root: v for v in vertices if v.root is not None}
    r_vertex = {v.index: v for v in vertices if v.kind == R}
    empty = next(v for v in vertices if v.kind == EMPTY)
    theta = cartan.theta
    arrows = []
    for alpha, src in by_root.items():
        for i in (1, 2, 3, 4):
            beta = _sub(alpha, _unit(i))
            if beta in by_root:
                arrows.append((src, i, by_root[beta]))
        if alpha not in (theta, _neg(theta)):
            beta = _add(alpha, theta)
            if beta in by_root and beta not in (theta, _neg(theta)):
                arrows.append((src, 0, by_root[beta]))
    for i, rv in r_vertex.items():
        arrows.append((by_root[_unit(i)], i, rv))
        arrows.append((rv, i, by_root[_neg(_unit(i))]))
    arrows.append((by_root[_neg(theta)], 0, empty))
    arrows.append((empty, 0, by_root[theta]))
    return arrows


def build_crystal(type_: CartanType | str) -> PerfectCrystal:
    """The crystal of a type; one shared instance per type."""
    return _build(CartanType.parse(type_))


@lru_cache(maxsize=None)
def _build(type_: CartanType) -> PerfectCrystal:
    cartan = cartan_datum(type_)
    verts = crystal_vertices(cartan)
    return PerfectCrystal(cartan, verts, construct_arrows(cartan, verts))


def ftilde(crystal: PerfectCrystal, b: CrystalVertex, i: int) -> Optional[CrystalVertex]:
    return crystal.f(b, i)


def etilde(crystal: PerfectCrystal, b: CrystalVertex, i: int) -> Optional[CrystalVertex]:
    return crystal.e(b, i)


# --------------------------------------------------------------------------
# perfectness


@dataclass
class Clause:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class PerfectnessReport:
    type: CartanType
    clauses: list[Clause]
    minimal_vectors: dict[str, tuple[str, str]]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if not c.ok]

    def __str__(self) -> str:
        lines = [f"perfectness ({self.type.value}):"]
        for c in self.clauses:
            lines.append(f"  [{'PASS' if c.ok else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def tensor_square_components(crystal: PerfectCrystal) -> int:
    """Number of connected components of B (x) B under the tensor rule."""
    from .core.tensor import pair_e, pair_f

    seen: set = set()
    components = 0
    for start in product(crystal.vertices, repeat=2):
        if start in seen:
            continue
        components += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            b1, b2 = queue.popleft()
            for i in INDEX_SET:
                for nxt in (pair_f(crystal, b1, b2, i), pair_e(crystal, b1, b2, i)):
                    if nxt is not None and nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
    return components


def level_one_dominant(crystal: PerfectCrystal) -> list[ClassicalWeight]:
    c = crystal.cartan.central_coeffs
    return [ClassicalWeight.fundamental(i) for i in INDEX_SET if c[i] == 1]


def check_perfect(crystal: PerfectCrystal, level: int = 1,
                  weights: Optional[Sequence[ClassicalWeight]] = None) -> PerfectnessReport:
    """Check conditions (2)-(5) of perfectness.

    ``weights`` are the level-``level`` dominant weights whose minimal vectors
    are checked; the default is Lambda_0 only.
    """
    cartan = crystal.cartan
    clauses: list[Clause] = []

    ncomp = tensor_square_components(crystal)
    clauses.append(Clause("B(x)B connected", ncomp == 1, f"{ncomp} component(s)"))

    # (3): a unique maximal weight lambda0 with every wt(b) below it along alpha_1..alpha_4
    weights_of = {b: crystal.wt(b) for b in crystal.vertices}
    candidates = []
    for top in set(w.coeffs for w in weights_of.values()):
        top_w = ClassicalWeight(top)
        ok = True
        for w in weights_of.values():
            try:
                coords = cartan.root_coordinates(w - top_w)
            except ValueError:
                ok = False
                break
            if any(x > 0 for x in coords):
                ok = False
                break
        if ok:
            candidates.append(top_w)
    if len(candidates) == 1:
        lam0 = candidates[0]
        owners = [b for b, w in weights_of.items() if w == lam0]
        clauses.append(Clause("highest classical weight lambda0 unique", len(owners) == 1,
                              f"lambda0 = {lam0}, B_lambda0 = {[b.label for b in owners]}"))
    else:
        clauses.append(Clause("highest classical weight lambda0 unique", False,
                              f"{len(candidates)} candidates"))

    low = [b.label for b in crystal.vertices
           if cartan.level(crystal.epsilon_weight(b)) < level]
    clauses.append(Clause(f"<c, eps(b)> >= {level}", not low, f"violations: {low}" if low else ""))

    minimal: dict[str, tuple[str, str]] = {}
    for lam in (weights if weights is not None else [LAMBDA0]):
        if cartan.level(lam) != level:
            clauses.append(Clause(f"minimal vectors for {lam}", False, "weight has wrong level"))
            continue
        upper = [b for b in crystal.vertices if crystal.epsilon_weight(b) == lam]
        lower = [b for b in crystal.vertices if crystal.phi_weight(b) == lam]
        ok = len(upper) == 1 and len(lower) == 1
        detail = f"b^lambda = {[b.label for b in upper]}, b_lambda = {[b.label for b in lower]}"
        clauses.append(Clause(f"minimal vectors for {lam}", ok, detail))
        if ok:
            minimal[str(lam)] = (upper[0].label, lower[0].label)
    return PerfectnessReport(crystal.type, clauses, minimal)


def golden_edge_multiset(type_: CartanType | str) -> list[tuple[str, int, str]]:
    from .data import edge_list_path, read_edge_list

    return sorted(read_edge_list(edge_list_path(type_)))
