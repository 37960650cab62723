"""The path model P(Lambda_0): sequences (..., p_1, p_0) over B that equal
empty from some point on.

Operators act on the finite word p_r (x) ... (x) p_0 with p_r = empty, and
the minus signs contributed by p_r are discarded:
eps_i(p) = max(eps_i(p') - phi_i(empty), 0).

The affine weight is

    wt(p) = Lambda_0 + sum_k wt(p_k) - delta * sum_k (k + 1) (H(p_{k+1} (x) p_k) - H(empty (x) empty)).

The delta term carries a minus sign: with H(empty (x) empty) = 0 and H
decreasing when f_0 acts on the left factor, this is the sign that makes
wt(f_0 p) = wt(p) - alpha_0 including the delta part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cartan import INDEX_SET, LAMBDA0, AffineWeight
from .columns import YoungColumn
from .core.tensor import TensorElement, tensor_signature
from .energy import EnergyTable
from .walls import WallContext, YoungWall


@dataclass(frozen=True)
class LambdaPath:
    elements: tuple  # p_0, p_1, ..., p_{r-1}; trimmed

    @property
    def r(self) -> int:
        return len(self.elements)

    def key(self) -> str:
        if not self.elements:
            return "empty"
        return "|".join(b.label for b in self.elements)

    def __str__(self) -> str:
        return self.key()


class PathCrystal:
    """P(Lambda_0) as a crystal (for :func:`enumerate_crystal`)."""

    def __init__(self, crystal, table: EnergyTable):
        self.crystal = crystal
        self.cartan = crystal.cartan
        self.table = table
        self.ground = crystal.empty
        self.index_set = INDEX_SET

    def path(self, elements) -> LambdaPath:
        elems = list(elements)
        while elems and elems[-1] is self.ground:
            elems.pop()
        return LambdaPath(tuple(elems))

    def ground_path(self) -> LambdaPath:
        return LambdaPath(())

    def _word(self, p: LambdaPath) -> TensorElement:
        # factor index 0 is p_0; index r is the tail element
        return TensorElement(p.elements + (self.ground,))

    def epsilon(self, p: LambdaPath, i: int) -> int:
        eps, _, _, _ = tensor_signature(self.crystal, self._word(p), i)
        return max(eps - self.crystal.epsilon(self.ground, i), 0)

    def phi(self, p: LambdaPath, i: int) -> int:
        return tensor_signature(self.crystal, self._word(p), i)[1]

    def _apply(self, p: LambdaPath, i: int, op: str) -> Optional[LambdaPath]:
        t = self._word(p)
        eps, phi, fpos, epos = tensor_signature(self.crystal, t, i)
        if op == "f":
            if not phi:
                return None
            k = fpos
            b = self.crystal.f(t.factors[k], i)
        else:
            if eps - self.crystal.epsilon(self.ground, i) <= 0:
                return None
            k = epos
            b = self.crystal.e(t.factors[k], i)
        if b is None:
            return None
        elems = list(t.factors)
        elems[k] = b
        return self.path(elems)

    def f(self, p: LambdaPath, i: int) -> Optional[LambdaPath]:
        return self._apply(p, i, "f")

    def e(self, p: LambdaPath, i: int) -> Optional[LambdaPath]:
        return self._apply(p, i, "e")

    def energy_correction(self, p: LambdaPath) -> int:
        """sum_k (k + 1) (H(p_{k+1} (x) p_k) - H(empty (x) empty))."""
        g = self.ground
        base = self.table(g, g)
        total = 0
        for k in range(p.r):
            left = p.elements[k + 1] if k + 1 < p.r else g
            total += (k + 1) * (self.table(left, p.elements[k]) - base)
        return total

    def weight(self, p: LambdaPath) -> AffineWeight:
        classical = LAMBDA0
        for b in p.elements:
            classical = classical + self.crystal.wt(b)
        return AffineWeight(classical, -self.energy_correction(p))

    def key(self, p: LambdaPath) -> str:
        return p.key()


def path_crystal(ctx: WallContext) -> PathCrystal:
    return PathCrystal(ctx.crystal, ctx.table)


def wall_to_path(ctx: WallContext, y: YoungWall) -> LambdaPath:
    """Forget the zero-block counts, keep the classes."""
    return path_crystal(ctx).path(c.cls for c in y.columns)


def path_to_wall(ctx: WallContext, p: LambdaPath) -> YoungWall:
    """The unique reduced wall with classes p: z_k = z_{k+1} + H(p_{k+1} (x) p_k), tail z = 0."""
    g = ctx.ground
    cols = [None] * p.r
    z = 0
    for k in reversed(range(p.r)):
        left = p.elements[k + 1] if k + 1 < p.r else g
        z = z + ctx.table(left, p.elements[k])
        cols[k] = YoungColumn(p.elements[k], z)
    return ctx.wall(cols)
