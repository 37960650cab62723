"""Affine Cartan data for types E6(2) and F4(1) and weight-lattice arithmetic.

Weights are stored in fundamental-weight coordinates throughout.  A classical
weight is a 5-vector over Lambda_0..Lambda_4; an affine weight adds an integer
multiple of the null root delta.  Simple roots are converted to weights on
demand via the columns of the Cartan matrix (<h_j, alpha_i> = a_ji).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

RANK = 5
INDEX_SET = (0, 1, 2, 3, 4)


class CartanType(str, enum.Enum):
    E6_2 = "e6-2"
    F4_1 = "f4-1"

    @classmethod
    def parse(cls, value: "CartanType | str") -> "CartanType":
        if isinstance(value, cls):
            return value
        norm = str(value).strip().lower().replace("_", "-")
        for member in cls:
            if norm in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise ValueError(f"unknown Cartan type {value!r}; expected e6-2 or f4-1")

    @property
    def slug(self) -> str:
        return self.value.replace("-", "_")


@dataclass(frozen=True)
class ClassicalWeight:
    """An element of the classical weight lattice, in Lambda coordinates."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != RANK:
            raise ValueError(f"classical weight needs {RANK} coordinates, got {self.coeffs!r}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls) -> "ClassicalWeight":
        return cls((0,) * RANK)

    @classmethod
    def fundamental(cls, i: int) -> "ClassicalWeight":
        return cls(tuple(int(j == i) for j in INDEX_SET))

    def __add__(self, other: "ClassicalWeight") -> "ClassicalWeight":
        return ClassicalWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ClassicalWeight") -> "ClassicalWeight":
        return ClassicalWeight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ClassicalWeight":
        return ClassicalWeight(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "ClassicalWeight":
        return ClassicalWeight(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __str__(self) -> str:
        terms = [f"{c}L{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class AffineWeight:
    """A classical weight plus a multiple of delta."""

    classical: ClassicalWeight
    delta: int = 0

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.classical + other.classical, self.delta + other.delta)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.classical - other.classical, self.delta - other.delta)

    def __mul__(self, k: int) -> "AffineWeight":
        return AffineWeight(self.classical * k, self.delta * k)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"lambda": list(self.classical.coeffs), "delta": self.delta}

    @classmethod
    def from_json(cls, data: dict) -> "AffineWeight":
        return cls(ClassicalWeight(tuple(data["lambda"])), int(data["delta"]))

    def __str__(self) -> str:
        if not self.delta:
            return str(self.classical)
        return f"{self.classical} {'+' if self.delta > 0 else '-'} {abs(self.delta)}d"


@dataclass(frozen=True)
class CartanDatum:
    type: CartanType
    matrix: tuple[tuple[int, ...], ...]
    delta_coeffs: tuple[int, ...]
    central_coeffs: tuple[int, ...]
    positive_roots: tuple[tuple[int, int, int, int], ...]

    @property
    def index_set(self) -> tuple[int, ...]:
        return INDEX_SET

    @property
    def theta(self) -> tuple[int, int, int, int]:
        """Highest (short) root: delta - alpha_0 in finite coordinates."""
        return tuple(self.delta_coeffs[1:])  # type: ignore[return-value]

    def pairing(self, i: int, w: ClassicalWeight) -> int:
        if i not in INDEX_SET:
            raise ValueError(f"index {i} outside 0..4")
        return w.coeffs[i]

    def level(self, w: ClassicalWeight) -> int:
        return sum(c * x for c, x in zip(self.central_coeffs, w.coeffs))

    def simple_root(self, i: int) -> ClassicalWeight:
        if i not in INDEX_SET:
            raise ValueError(f"index {i} outside 0..4")
        return ClassicalWeight(tuple(self.matrix[j][i] for j in INDEX_SET))

    def affine_simple_root(self, i: int) -> AffineWeight:
        # alpha_0 carries the delta component since Lambda_j(d) = 0 and alpha_i(d) = delta_{i0}
        return AffineWeight(self.simple_root(i), int(i == 0))

    def root_combination(self, content: Sequence[int]) -> ClassicalWeight:
        """Sum_i content[i] * alpha_i as a classical weight."""
        acc = [0] * RANK
        for i, k in enumerate(content):
            if k:
                for j in INDEX_SET:
                    acc[j] += k * self.matrix[j][i]
        return ClassicalWeight(tuple(acc))

    def root_coordinates(self, w: ClassicalWeight, support: Iterable[int] = (1, 2, 3, 4)) -> tuple[int, ...]:
        """Solve w = sum_{i in support} x_i alpha_i over the integers.

        Returns a 5-vector with zeros outside ``support``.  Raises ValueError
        if the system is inconsistent or the solution is not integral.
        """
        cols = list(support)
        rows = [[Fraction(self.matrix[j][i]) for i in cols] + [Fraction(w.coeffs[j])] for j in INDEX_SET]
        n = len(cols)
        pivot_row = 0
        pivots = []
        for c in range(n):
            pr = next((r for r in range(pivot_row, RANK) if rows[r][c] != 0), None)
            if pr is None:
                continue
            rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
            p = rows[pivot_row][c]
            rows[pivot_row] = [x / p for x in rows[pivot_row]]
            for r in range(RANK):
                if r != pivot_row and rows[r][c] != 0:
                    factor = rows[r][c]
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
            pivots.append(c)
            pivot_row += 1
        for r in range(pivot_row, RANK):
            if rows[r][n] != 0:
                raise ValueError(f"{w} is not in the span of alpha_{cols}")
        if len(pivots) != n:
            raise ValueError(f"alpha_{cols} are linearly dependent; solution not unique")
        out = [0] * RANK
        for r, c in enumerate(pivots):
            val = rows[r][n]
            if val.denominator != 1:
                raise ValueError(f"{w} has non-integral root coordinates")
            out[cols[c]] = int(val)
        return tuple(out)

    def check(self) -> None:
        """Assert the null-root and central-element identities."""
        for i in INDEX_SET:
            row = sum(self.matrix[i][j] * self.delta_coeffs[j] for j in INDEX_SET)
            col = sum(self.central_coeffs[j] * self.matrix[j][i] for j in INDEX_SET)
            if row or col:
                raise AssertionError(f"{self.type.value}: A.delta or c^T.A nonzero at index {i}")

    def to_json(self) -> dict:
        return {
            "type": self.type.value,
            "index_set": list(INDEX_SET),
            "cartan_matrix": [list(r) for r in self.matrix],
            "delta": list(self.delta_coeffs),
            "c": list(self.central_coeffs),
            "theta": list(self.theta),
            "positive_roots": ["(" + "".join(map(str, r)) + ")" for r in self.positive_roots],
        }


def _roots(text: str) -> tuple[tuple[int, int, int, int], ...]:
    return tuple(tuple(int(ch) for ch in word) for word in text.split())  # type: ignore[misc]


_DATA = {
    CartanType.E6_2: dict(
        matrix=(
            (2, -1, 0, 0, 0),
            (-1, 2, -1, 0, 0),
            (0, -1, 2, -2, 0),
            (0, 0, -1, 2, -1),
            (0, 0, 0, -1, 2),
        ),
        delta_coeffs=(1, 2, 3, 2, 1),
        central_coeffs=(1, 2, 3, 4, 2),
        positive_roots=_roots(
            "1000 0100 1100 0110 1110 0111 1111 1210 1211 1221 1321 2321"
        ),
    ),
    CartanType.F4_1: dict(
        matrix=(
            (2, -1, 0, 0, 0),
            (-1, 2, -1, 0, 0),
            (0, -1, 2, -1, 0),
            (0, 0, -2, 2, -1),
            (0, 0, 0, -1, 2),
        ),
        delta_coeffs=(1, 2, 3, 4, 2),
        central_coeffs=(1, 2, 3, 2, 1),
        positive_roots=_roots(
            "1000 0100 0010 0001 1100 0110 0011 1110 0120 0111 1120 1111 "
            "0121 1220 1121 0122 1221 1122 1231 1222 1232 1242 1342 2342"
        ),
    ),
}


def cartan_datum(type_: CartanType | str) -> CartanDatum:
    return _datum(CartanType.parse(type_))


@lru_cache(maxsize=None)
def _datum(t: CartanType) -> CartanDatum:
    datum = CartanDatum(type=t, **_DATA[t])
    datum.check()
    return datum


LAMBDA0 = ClassicalWeight.fundamental(0)

for _t in CartanType:
    cartan_datum(_t)
