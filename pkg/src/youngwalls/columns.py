"""Young columns as affine crystal elements, and their block content.

A column is an affine vertex ``class(z)`` of B^aff.  Its content vector
counts, per color, how many blocks it carries beyond the ground column
empty(0): walking an i-arrow adds one i-block, so content is obtained by a
search over B starting at empty with zero content.  Since every arrow changes
the content by a unit vector and the shift by delta_{i0}, the content of
b(n) is content(b(n0)) + (n - n0) * delta for the shift n0 the search first
reached b at.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .cartan import INDEX_SET, CartanType
from .core.affine import AffineCrystal, AffineVertex
from .perfect_crystal import CrystalVertex, PerfectCrystal, build_crystal

Content = tuple[int, int, int, int, int]


class ContentError(RuntimeError):
    """Content accumulated along two routes disagrees."""


class YoungColumn(NamedTuple):
    cls: CrystalVertex
    z: int

    def vertex(self) -> AffineVertex:
        return AffineVertex(self.cls, self.z)

    def __str__(self) -> str:
        return f"{self.cls.label}({self.z})"


class ContentMap:
    """Content vectors for one crystal, built once and read-only afterwards."""

    def __init__(self, crystal: PerfectCrystal):
        self.crystal = crystal
        self.delta = crystal.cartan.delta_coeffs
        self._base: dict[CrystalVertex, Content] = {}
        start = crystal.empty
        self._base[start] = (0, 0, 0, 0, 0)
        queue = deque([start])
        while queue:
            b = queue.popleft()
            c = self._base[b]
            for i in INDEX_SET:
                for nxt, sign in ((crystal.f(b, i), 1), (crystal.e(b, i), -1)):
                    if nxt is None:
                        continue
                    cn = list(c)
                    cn[i] += sign
                    cn_t: Content = tuple(cn)  # type: ignore[assignment]
                    known = self._base.get(nxt)
                    if known is None:
                        self._base[nxt] = cn_t
                        queue.append(nxt)
                    elif self._shifted(known, cn_t[0] - known[0]) != cn_t:
                        raise ContentError(f"content of {nxt.label} is route dependent: {known} vs {cn_t}")
        if len(self._base) != len(crystal):
            raise ContentError("crystal is not connected")

    def _shifted(self, c: Content, k: int) -> Content:
        return tuple(x + k * d for x, d in zip(c, self.delta))  # type: ignore[return-value]

    def __call__(self, v: AffineVertex) -> Content:
        c = self._base[v.base]
        return self._shifted(c, v.shift - c[0])

    def total(self, v: AffineVertex) -> int:
        return sum(self(v))


def content_map(crystal: PerfectCrystal | CartanType | str) -> ContentMap:
    """The (cached) content map of a crystal or of the built crystal of a type."""
    if not isinstance(crystal, PerfectCrystal):
        crystal = build_crystal(crystal)
    cached = getattr(crystal, "_content_map", None)
    if cached is None:
        cached = ContentMap(crystal)
        crystal._content_map = cached  # type: ignore[attr-defined]
    return cached


def content_vector(crystal: PerfectCrystal, v: AffineVertex) -> Content:
    return content_map(crystal)(v)


def leq(c1: Content, c2: Content) -> bool:
    return all(a <= b for a, b in zip(c1, c2))


def affine_crystal(type_: CartanType | str) -> AffineCrystal:
    return AffineCrystal(build_crystal(type_))
