"""Tensor products of crystal elements.

A :class:`TensorElement` stores its factors with index 0 as the RIGHTMOST
factor, the way paths ``... (x) p_1 (x) p_0`` are indexed.  Use
:func:`tensor` to build one in written (left-to-right) order.

Kashiwara operators are evaluated with the signature rule: f acts on the
factor holding the leftmost surviving +, e on the factor holding the
rightmost surviving -.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from ..cartan import ClassicalWeight
from .signature import reduce_counts


@dataclass(frozen=True)
class TensorElement:
    factors: tuple

    def written(self) -> tuple:
        """Factors in left-to-right order."""
        return self.factors[::-1]

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " (x) ".join(str(b) for b in self.written())


def tensor(*written: Any) -> TensorElement:
    """``tensor(b1, b2, b3)`` is b1 (x) b2 (x) b3."""
    return TensorElement(tuple(reversed(written)))


def _counts(crystal, written: Sequence, i: int):
    return [crystal.epsilon(b, i) for b in written], [crystal.phi(b, i) for b in written]


def tensor_signature(crystal, t: TensorElement, i: int) -> tuple[int, int, int, int]:
    """(epsilon, phi, f-position, e-position) with positions as factor indices (0 = rightmost)."""
    written = t.written()
    eps, phi = _counts(crystal, written, i)
    minus, plus, fpos, epos = reduce_counts(eps, phi)
    n = len(written)
    return minus, plus, (n - 1 - fpos if fpos >= 0 else -1), (n - 1 - epos if epos >= 0 else -1)


def _replace(t: TensorElement, k: int, b) -> TensorElement:
    factors = list(t.factors)
    factors[k] = b
    return TensorElement(tuple(factors))


def tensor_ftilde(crystal, t: TensorElement, i: int) -> Optional[TensorElement]:
    _, plus, k, _ = tensor_signature(crystal, t, i)
    if not plus:
        return None
    b = crystal.f(t.factors[k], i)
    return None if b is None else _replace(t, k, b)


def tensor_etilde(crystal, t: TensorElement, i: int) -> Optional[TensorElement]:
    minus, _, _, k = tensor_signature(crystal, t, i)
    if not minus:
        return None
    b = crystal.e(t.factors[k], i)
    return None if b is None else _replace(t, k, b)


def tensor_epsilon(crystal, t: TensorElement, i: int) -> int:
    return tensor_signature(crystal, t, i)[0]


def tensor_phi(crystal, t: TensorElement, i: int) -> int:
    return tensor_signature(crystal, t, i)[1]


def tensor_wt(crystal, t: TensorElement):
    total = None
    for b in t.factors:
        w = crystal.wt(b)
        total = w if total is None else total + w
    return total if total is not None else ClassicalWeight.zero()


def pair_f(crystal, b1, b2, i: int):
    """f_i(b1 (x) b2) as a pair, or None."""
    if crystal.phi(b1, i) > crystal.epsilon(b2, i):
        b = crystal.f(b1, i)
        return None if b is None else (b, b2)
    b = crystal.f(b2, i)
    return None if b is None else (b1, b)


def pair_e(crystal, b1, b2, i: int):
    """e_i(b1 (x) b2) as a pair, or None."""
    if crystal.phi(b1, i) >= crystal.epsilon(b2, i):
        b = crystal.e(b1, i)
        return None if b is None else (b, b2)
    b = crystal.e(b2, i)
    return None if b is None else (b1, b)
