"""Kasteleyn's trigonometric product, evaluated with certified rounding.

The product over ``m in 1..r`` and ``k in 1..n`` of
``4 cos^2(m pi / (2r+1)) + 4 cos^2(k pi / (2n+1))`` counts the domino
tilings of a ``2r x 2n`` board. Each factor is enclosed in an interval
with outward rounding (mpmath's ``iv`` context), and the working
precision is doubled until the enclosure pins down a single integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath.libmp import to_rational

from .errors import PrecisionExhausted


@dataclass(frozen=True)
class KasteleynParams:
    r: int
    n: int

    def __post_init__(self):
        if self.r < 1 or self.n < 1:
            raise ValueError(f"r and n must be positive, got r={self.r}, n={self.n}")

    @classmethod
    def from_board(cls, rows: int, cols: int) -> KasteleynParams:
        if rows % 2 or cols % 2:
            raise ValueError(f"the product formula needs even sides, got {rows}x{cols}")
        return cls(rows // 2, cols // 2)


@dataclass(frozen=True)
class PrecisionConfig:
    initial_bits: int = 64
    max_bits: int = 1 << 20
    escalation_factor: int = 2

    def __post_init__(self):
        if self.initial_bits < 64:
            raise ValueError("initial_bits must be at least 64")
        if self.initial_bits > self.max_bits:
            raise ValueError("initial_bits exceeds max_bits")
        if self.escalation_factor != 2:
            raise ValueError("precision escalates by doubling only")


@dataclass(frozen=True)
class Enclosure:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction
    bits: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def unique_integer(self) -> int | None:
        """The only integer in the enclosure, or None if there are 0 or several."""
        first, last = math.ceil(self.lo), math.floor(self.hi)
        return first if first == last else None


def kasteleyn_product_interval(p: KasteleynParams, bits: int) -> Enclosure:
    if bits < 64:
        raise ValueError("bits must be at least 64")
    ctx = mpmath.iv
    saved = ctx.prec
    ctx.prec = bits
    try:
        pi = ctx.pi
        row_terms = [4 * ctx.cos(pi * m / (2 * p.r + 1)) ** 2 for m in range(1, p.r + 1)]
        col_terms = [4 * ctx.cos(pi * k / (2 * p.n + 1)) ** 2 for k in range(1, p.n + 1)]
        product = ctx.mpf(1)
        for a in row_terms:
            for b in col_terms:
                product = product * (a + b)
        # mpmath may hand back gmpy2 integers; Fraction needs plain ints
        lo, hi = (Fraction(*map(int, to_rational(end))) for end in product._mpi_)
        return Enclosure(lo, hi, bits)
    finally:
        ctx.prec = saved


def kasteleyn_count(p: KasteleynParams, cfg: PrecisionConfig | None = None) -> int:
    """Exact tiling count of the ``2r x 2n`` board from the product formula."""
    cfg = cfg or PrecisionConfig()
    bits = cfg.initial_bits
    while True:
        enc = kasteleyn_product_interval(p, bits)
        value = enc.unique_integer()
        if value is not None:
            return value
        if bits >= cfg.max_bits:
            raise PrecisionExhausted(cfg.max_bits)
        bits = min(bits * cfg.escalation_factor, cfg.max_bits)
