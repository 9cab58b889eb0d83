"""Counter-based randomness for the window simulations.

Each random bit is a pure function of (seed, step, element): the element is
packed into a 64-bit code, mixed with the seed and step through a splitmix64
finalizer chain, and compared against an exact rational threshold. Results
are therefore independent of iteration order and of the size of the region
being sampled — the properties the equivariance checks rely on.

Both a scalar path (plain ints) and a vectorized numpy path are provided and
produce bit-identical results.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .groups import FreeAbelian, FreeGroup, Group

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def splitmix64(x: int) -> int:
    """The splitmix64 finalizer on a 64-bit word."""
    x = (x + _GAMMA) & _MASK
    x ^= x >> 30
    x = (x * _M1) & _MASK
    x ^= x >> 27
    x = (x * _M2) & _MASK
    x ^= x >> 31
    return x


def mix(*words: int) -> int:
    """Fold any number of 64-bit words into one, order-sensitively."""
    h = 0
    for w in words:
        h = splitmix64(h ^ (w & _MASK))
    return h


def _zigzag(n: int) -> int:
    return 2 * n if n >= 0 else -2 * n - 1


def element_code(group: Group, g) -> int:
    """Stable 64-bit code of an element, independent of any region."""
    if isinstance(group, FreeAbelian):
        coords = (g,) if group.dimension == 1 else g
        if group.dimension <= 3:
            code = 0
            for c in coords:
                code = (code << 21) | (_zigzag(c) & ((1 << 21) - 1))
            return code
        h = 0
        for c in coords:
            h = splitmix64(h ^ (_zigzag(c) & _MASK))
        return h
    if isinstance(group, FreeGroup):
        base = 2 * group.rank + 1
        code = 0
        for ch in g:
            digit = group._letters.index(ch) + 1
            code = (code * base + digit) & _MASK
        return code
    raise ValueError(f"no element coding for group {group!r}")


def element_codes(group: Group, elements: Sequence) -> np.ndarray:
    """Vector of element codes as uint64."""
    return np.array([element_code(group, g) for g in elements], dtype=np.uint64)


def _threshold(p: Fraction) -> int:
    """Exact floor(p * 2^64)."""
    return (p.numerator << 64) // p.denominator


def bit(seed: int, step: int, code: int, p: Fraction) -> bool:
    """The Bernoulli(p) bit keyed by (seed, step, element code)."""
    return mix(seed, step, code) < _threshold(p)


def _vector_splitmix64(x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        x = x + np.uint64(_GAMMA)
        x = x ^ (x >> np.uint64(30))
        x = x * np.uint64(_M1)
        x = x ^ (x >> np.uint64(27))
        x = x * np.uint64(_M2)
        x = x ^ (x >> np.uint64(31))
    return x


def bernoulli_mask(seed: int, step: int, codes: np.ndarray, p: Fraction) -> np.ndarray:
    """Vectorized ``bit`` over an array of element codes."""
    h = np.full(codes.shape, np.uint64(0))
    for word in (seed, step):
        h = _vector_splitmix64(h ^ np.uint64(word & _MASK))
    h = _vector_splitmix64(h ^ codes)
    threshold = _threshold(p)
    if threshold >= 1 << 64:
        return np.ones(codes.shape, dtype=bool)
    return h < np.uint64(threshold)


class RandomField:
    """Per-step iid Bernoulli(p) maps on a group, keyed by (seed, step,
    element). ``value`` answers single points; ``mask`` answers a whole
    region at once (same bits, vectorized)."""

    def __init__(self, group: Group, seed: int, p: Fraction):
        p = Fraction(p)
        if not 0 < p < 1:
            raise ValueError(f"support density must lie strictly between 0 and 1, got {p}")
        self.group = group
        self.seed = int(seed)
        self.p = p

    def value(self, step: int, element) -> bool:
        return bit(self.seed, step, element_code(self.group, element), self.p)

    def mask(self, step: int, codes: np.ndarray) -> np.ndarray:
        return bernoulli_mask(self.seed, step, codes, self.p)
