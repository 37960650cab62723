"""Affinization B^aff = {b(n)}: 0-arrows move the shift by one."""

from __future__ import annotations

from typing import NamedTuple, Optional

from ..cartan import AffineWeight


class AffineVertex(NamedTuple):
    base: object
    shift: int

    def __str__(self) -> str:
        return f"{self.base}({self.shift})"


class AffineCrystal:
    """Lazy affinization of a classical crystal."""

    def __init__(self, base):
        self.base = base
        self.cartan = base.cartan
        self.index_set = base.index_set

    def __repr__(self) -> str:
        return f"AffineCrystal({self.base!r})"

    def f(self, v: AffineVertex, i: int) -> Optional[AffineVertex]:
        b = self.base.f(v.base, i)
        return None if b is None else AffineVertex(b, v.shift + (i == 0))

    def e(self, v: AffineVertex, i: int) -> Optional[AffineVertex]:
        b = self.base.e(v.base, i)
        return None if b is None else AffineVertex(b, v.shift - (i == 0))

    def epsilon(self, v: AffineVertex, i: int) -> int:
        return self.base.epsilon(v.base, i)

    def phi(self, v: AffineVertex, i: int) -> int:
        return self.base.phi(v.base, i)

    def wt(self, v: AffineVertex) -> AffineWeight:
        return AffineWeight(self.base.wt(v.base), -v.shift)

    weight = wt

    def key(self, v: AffineVertex) -> str:
        return f"{self.base.key(v.base)}({v.shift})"

    def vertex(self, label: str, shift: int = 0) -> AffineVertex:
        return AffineVertex(self.base.vertex(label), shift)


def affinize(crystal) -> AffineCrystal:
    return AffineCrystal(crystal)
