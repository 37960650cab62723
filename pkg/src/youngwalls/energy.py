"""Energy function H on B (x) B, affine energy, Arr0 and B^aff reachability.

H is fixed by H(empty (x) empty) = 0 and the local rule along every arrow of
the tensor square: an i-arrow with i != 0 leaves H unchanged, and a 0-arrow
changes it by -1 when f_0 acts on the left factor and by +1 when it acts on
the right factor.  Connectivity of B (x) B makes this a complete definition;
any revisit with a different value raises :class:`InconsistentPropagation`.

Golden tables are stored with rows indexed by a and columns by b, holding
H(b (x) a).
"""

from __future__ import annotations

import csv
import heapq
import io
import random
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .cartan import INDEX_SET, CartanType
from .columns import content_map, leq
from .core.affine import AffineCrystal, AffineVertex
from .core.tensor import pair_e, pair_f
from .perfect_crystal import CrystalVertex, PerfectCrystal, build_crystal

CORNER = "a\\b"


class InconsistentPropagation(RuntimeError):
    """Two derivations of H at the same tensor pair disagree."""


class Unreachable(RuntimeError):
    pass


@dataclass
class EnergyTable:
    crystal: PerfectCrystal
    values: dict  # (b1, b2) -> H(b1 (x) b2)

    @property
    def type(self) -> CartanType:
        return self.crystal.type

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, b1: CrystalVertex, b2: CrystalVertex) -> int:
        return self.values[(b1, b2)]

    def by_label(self, left: str, right: str) -> int:
        return self.values[(self.crystal.vertex(left), self.crystal.vertex(right))]

    def affine(self, a: AffineVertex, b: AffineVertex) -> int:
        return affine_energy(self, a, b)

    def labelled(self) -> dict[tuple[str, str], int]:
        return {(b1.label, b2.label): h for (b1, b2), h in self.values.items()}

    def to_csv(self, layout: Optional[list[str]] = None) -> str:
        """Rows a, columns b, entry H(b (x) a).

        Labels follow ``layout`` if given, else the order of the shipped table
        (falling back to the canonical vertex order if that is unavailable).
        """
        verts = [self.crystal.vertex(x) for x in (layout or table_layout(self.crystal))]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([CORNER] + [b.label for b in verts])
        for a in verts:
            w.writerow([a.label] + [self.values[(b, a)] for b in verts])
        return buf.getvalue()


def table_layout(crystal: PerfectCrystal) -> list[str]:
    """Label order of the shipped energy table, if it covers exactly this crystal."""
    from .data import DataFileError, energy_table_path

    canonical = [b.label for b in crystal.vertices]
    try:
        with open(energy_table_path(crystal.type), newline="") as fh:
            header = next(csv.reader(fh))[1:]
    except (DataFileError, OSError, StopIteration):
        return canonical
    return header if sorted(header) == sorted(canonical) else canonical


def _neighbours(crystal: PerfectCrystal, b1, b2) -> Iterator[tuple[tuple, int]]:
    """Tensor-square neighbours with the change of H along the edge."""
    for i in INDEX_SET:
        left = crystal.phi(b1, i) > crystal.epsilon(b2, i)
        nxt = pair_f(crystal, b1, b2, i)
        if nxt is not None:
            yield nxt, (0 if i else (-1 if left else 1))
        # e_i undoes an f_i edge: left iff phi(b1) >= eps(b2)
        left_e = crystal.phi(b1, i) >= crystal.epsilon(b2, i)
        nxt = pair_e(crystal, b1, b2, i)
        if nxt is not None:
            yield nxt, (0 if i else (1 if left_e else -1))


def compute_energy(crystal: PerfectCrystal, seed: Optional[int] = None) -> EnergyTable:
    """Propagate H from H(empty (x) empty) = 0 over the tensor square.

    With ``seed`` the frontier is processed in a random order; the result
    must not depend on it.
    """
    rng = random.Random(seed) if seed is not None else None
    start = (crystal.empty, crystal.empty)
    values = {start: 0}
    frontier = [start]
    while frontier:
        if rng is not None:
            k = rng.randrange(len(frontier))
            frontier[k], frontier[-1] = frontier[-1], frontier[k]
        cur = frontier.pop()
        h = values[cur]
        for nxt, d in _neighbours(crystal, *cur):
            known = values.get(nxt)
            if known is None:
                values[nxt] = h + d
                frontier.append(nxt)
            elif known != h + d:
                raise InconsistentPropagation(
                    f"H({nxt[0].label} (x) {nxt[1].label}) derived as {known} and {h + d} "
                    f"(from {cur[0].label} (x) {cur[1].label})")
    n = len(crystal)
    if len(values) != n * n:
        raise InconsistentPropagation(f"only {len(values)} of {n * n} pairs reached; B (x) B not connected")
    return EnergyTable(crystal, values)


def energy_table(type_: CartanType | str) -> EnergyTable:
    crystal = build_crystal(type_)
    cached = getattr(crystal, "_energy", None)
    if cached is None:
        cached = compute_energy(crystal)
        crystal._energy = cached  # type: ignore[attr-defined]
    return cached


# --------------------------------------------------------------------------
# golden tables


def read_golden(path: Path | str) -> dict[tuple[str, str], int]:
    """Map (b1, b2) labels to H(b1 (x) b2) from a rows-a/columns-b CSV."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path}: empty table")
    header = rows[0][1:]
    out: dict[tuple[str, str], int] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(header) + 1:
            raise ValueError(f"{path}:{lineno}: expected {len(header) + 1} fields, got {len(row)}")
        a = row[0]
        for b, cell in zip(header, row[1:]):
            try:
                out[(b, a)] = int(cell)
            except ValueError:
                raise ValueError(f"{path}:{lineno}: bad entry {cell!r} in column {b}") from None
    return out


@dataclass
class Mismatch:
    left: str
    right: str
    computed: Optional[int]
    golden: Optional[int]

    def __str__(self) -> str:
        return (f"H({self.left} (x) {self.right}): computed {self.computed}, golden {self.golden} "
                f"(row {self.right}, column {self.left})")


@dataclass
class GoldenReport:
    total: int
    matches: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.matches == self.total

    def __str__(self) -> str:
        lines = [f"{self.matches}/{self.total} match"]
        lines += [f"  {m}" for m in self.mismatches]
        return "\n".join(lines)


def verify_against_golden(table: EnergyTable, golden: Path | str | None = None) -> GoldenReport:
    if golden is None:
        from .data import energy_table_path

        golden = energy_table_path(table.type)
    gold = read_golden(golden)
    comp = table.labelled()
    keys = sorted(set(gold) | set(comp))
    report = GoldenReport(total=len(keys), matches=0)
    for k in keys:
        c, g = comp.get(k), gold.get(k)
        if c is not None and c == g:
            report.matches += 1
        else:
            report.mismatches.append(Mismatch(k[0], k[1], c, g))
    return report


# --------------------------------------------------------------------------
# affine energy


def affine_energy(table: EnergyTable, a: AffineVertex, b: AffineVertex) -> int:
    """H^aff(a(m) (x) b(n)) = H(a (x) b) + m - n."""
    return table(a.base, b.base) + a.shift - b.shift


@dataclass
class ConstancyReport:
    edges: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_affine_constancy(table: EnergyTable, window: tuple[int, int] = (-3, 3)) -> ConstancyReport:
    """H^aff is unchanged along every e_i/f_i edge of B^aff (x) B^aff from pairs in the window."""
    crystal = table.crystal
    aff = AffineCrystal(crystal)
    lo, hi = window
    report = ConstancyReport(edges=0)
    shifts = range(lo, hi + 1)
    for a in crystal.vertices:
        for b in crystal.vertices:
            for m in shifts:
                for n in shifts:
                    u, v = AffineVertex(a, m), AffineVertex(b, n)
                    h = affine_energy(table, u, v)
                    for i in INDEX_SET:
                        for op in (pair_f, pair_e):
                            nxt = op(aff, u, v, i)
                            if nxt is None:
                                continue
                            report.edges += 1
                            h2 = affine_energy(table, *nxt)
                            if h2 != h:
                                report.violations.append((str(u), str(v), i, op.__name__, h, h2))
    return report


# --------------------------------------------------------------------------
# Arr0: fewest 0-arrows on a directed path


def arr0_from(crystal: PerfectCrystal, source: CrystalVertex) -> dict[CrystalVertex, int]:
    """Lexicographic Dijkstra on (number of 0-arrows, path length)."""
    best = {source: (0, 0)}
    heap = [(0, 0, source.order, source)]
    while heap:
        zeros, length, _, b = heapq.heappop(heap)
        if best.get(b, (zeros, length)) < (zeros, length):
            continue
        for i in INDEX_SET:
            c = crystal.f(b, i)
            if c is None:
                continue
            cost = (zeros + (i == 0), length + 1)
            if c not in best or cost < best[c]:
                best[c] = cost
                heapq.heappush(heap, (cost[0], cost[1], c.order, c))
    return {b: cost[0] for b, cost in best.items()}


def arr0(crystal: PerfectCrystal, a: CrystalVertex, b: CrystalVertex) -> int:
    dist = arr0_from(crystal, a)
    if b not in dist:
        raise Unreachable(f"no directed path {a.label} -> {b.label}")
    return dist[b]


def arr0_table(crystal: PerfectCrystal) -> dict[tuple[CrystalVertex, CrystalVertex], int]:
    out = {}
    for a in crystal.vertices:
        dist = arr0_from(crystal, a)
        for b in crystal.vertices:
            if b not in dist:
                raise Unreachable(f"no directed path {a.label} -> {b.label}")
            out[(a, b)] = dist[b]
    return out


# --------------------------------------------------------------------------
# directed paths in B^aff


def path_exists(crystal: PerfectCrystal, u: AffineVertex, v: AffineVertex) -> bool:
    """Is there a directed f-path u -> ... -> v in B^aff?

    Every arrow adds one block, so the search stays inside
    content(u) <= content(w) <= content(v) and terminates.
    """
    cmap = content_map(crystal)
    target = cmap(v)
    if not leq(cmap(u), target):
        return False
    aff = AffineCrystal(crystal)
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        if w == v:
            return True
        for i in INDEX_SET:
            x = aff.f(w, i)
            if x is not None and x not in seen and leq(cmap(x), target):
                seen.add(x)
                stack.append(x)
    return False


class Reachability:
    """All (b, n - m) with a directed path a(m) -> b(n), for n - m <= max_gap.

    Shifts never decrease along f-arrows and only finitely many vertices share
    a shift, so a search pruned at shift max_gap is exhaustive.
    """

    def __init__(self, crystal: PerfectCrystal, max_gap: int):
        self.crystal = crystal
        self.max_gap = max_gap
        aff = AffineCrystal(crystal)
        self._reach: dict[CrystalVertex, set] = {}
        for a in crystal.vertices:
            start = AffineVertex(a, 0)
            seen = {start}
            queue = deque([start])
            while queue:
                w = queue.popleft()
                for i in INDEX_SET:
                    x = aff.f(w, i)
                    if x is not None and x.shift <= max_gap and x not in seen:
                        seen.add(x)
                        queue.append(x)
            self._reach[a] = seen

    def __call__(self, u: AffineVertex, v: AffineVertex) -> bool:
        gap = v.shift - u.shift
        if gap > self.max_gap:
            raise ValueError(f"shift gap {gap} exceeds the indexed bound {self.max_gap}")
        return AffineVertex(v.base, gap) in self._reach[u.base]
