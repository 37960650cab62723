"""Signature rule: cancel adjacent +- pairs in a word of signs.

The hot path is :func:`reduce_counts`, which works on per-factor string
lengths and is backed by a compiled kernel when one was built.  Set
``YOUNGWALLS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence, Union

from . import _sigkernel_py

if os.environ.get("YOUNGWALLS_PURE_PYTHON"):
    reduce_counts = _sigkernel_py.reduce_counts
    BACKEND = "python"
else:
    try:
        from ._sigkernel import reduce_counts  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        reduce_counts = _sigkernel_py.reduce_counts
        BACKEND = "python"

MINUS_CHARS = "-−"


@dataclass(frozen=True)
class Signature:
    """A reduced word -^minus +^plus with the origin of every surviving sign."""

    minus_from: tuple
    plus_from: tuple

    @property
    def minus(self) -> int:
        return len(self.minus_from)

    @property
    def plus(self) -> int:
        return len(self.plus_from)

    # crystal names for the same counts
    epsilon = minus
    phi = plus

    @property
    def leftmost_plus(self) -> Optional[Hashable]:
        return self.plus_from[0] if self.plus_from else None

    @property
    def rightmost_minus(self) -> Optional[Hashable]:
        return self.minus_from[-1] if self.minus_from else None

    def word(self) -> str:
        return "-" * self.minus + "+" * self.plus


Symbol = Union[str, tuple]


def _parse(word: Union[str, Iterable[Symbol]]) -> list[tuple[int, Hashable]]:
    out = []
    for pos, sym in enumerate(word):
        if isinstance(sym, tuple):
            sign, origin = sym
        else:
            sign, origin = sym, pos
        if sign in MINUS_CHARS:
            out.append((-1, origin))
        elif sign == "+":
            out.append((1, origin))
        else:
            raise ValueError(f"not a sign: {sign!r}")
    return out


def reduce_signature(word: Union[str, Iterable[Symbol]]) -> Signature:
    """Cancel +- pairs until the word has the form -...-+...+.

    ``word`` is a string of signs or an iterable of ``(sign, origin)`` pairs;
    bare signs are attributed to their position in the word.
    """
    minus: list = []
    plus: list = []
    for sign, origin in _parse(word):
        if sign > 0:
            plus.append(origin)
        elif plus:
            plus.pop()
        else:
            minus.append(origin)
    return Signature(tuple(minus), tuple(plus))


def factor_word(counts: Sequence[tuple[int, int]], origins: Optional[Sequence[Hashable]] = None) -> list[tuple[str, Hashable]]:
    """Expand per-factor (epsilon, phi) pairs into an attributed sign word."""
    word = []
    for n, (e, p) in enumerate(counts):
        origin = origins[n] if origins is not None else n
        word.extend([("-", origin)] * e)
        word.extend([("+", origin)] * p)
    return word
