"""Brute-force counting and enumeration of domino tilings.

These are the reference oracles the faster methods are checked against,
so they favour directness over cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .board import BoardDims, Domino, Tiling
from .errors import AreaTooLarge, CapExceeded

MAX_ORACLE_AREA = 16 * 16


@dataclass(frozen=True)
class EnumerationCap:
    max_tilings: int = 100_000

    def __post_init__(self):
        if self.max_tilings < 1:
            raise ValueError("max_tilings must be at least 1")


def count_tilings_oracle(dims: BoardDims, max_area: int = MAX_ORACLE_AREA) -> int:
    """Count tilings with a cell-by-cell broken-profile DP.

    Cells are scanned in row-major order along the shorter side. Bit ``j``
    of the profile says that the frontier cell in column ``j`` is already
    covered, either by a vertical domino from the row below or by the
    right half of a horizontal domino in the current row.
    """
    if dims.area > max_area:
        raise AreaTooLarge(f"{dims.rows}x{dims.cols} exceeds the oracle area bound {max_area}")
    if not dims.tileable:
        return 0
    width = min(dims.rows, dims.cols)
    height = max(dims.rows, dims.cols)
    states = {0: 1}
    for _ in range(height):
        for j in range(width):
            bit = 1 << j
            nxt: dict[int, int] = {}
            for mask, ways in states.items():
                if mask & bit:
                    # covered from below; frontier cell moves up empty
                    key = mask & ~bit
                    nxt[key] = nxt.get(key, 0) + ways
                    continue
                # vertical domino pokes into the next row
                key = mask | bit
                nxt[key] = nxt.get(key, 0) + ways
                # horizontal domino takes this cell and the next one
                if j + 1 < width and not mask & (bit << 1):
                    key = mask | (bit << 1)
                    nxt[key] = nxt.get(key, 0) + ways
            states = nxt
    return states.get(0, 0)


def enumerate_tilings(dims: BoardDims, cap: EnumerationCap | None = None) -> Iterator[Tiling]:
    """Yield every tiling of ``dims`` exactly once, in a fixed order.

    Depth-first exact cover: always fill the lowest uncovered cell in
    row-major order, trying a horizontal domino before a vertical one.
    Raises CapExceeded up front when the board has too many tilings.
    """
    cap = cap or EnumerationCap()
    if not dims.tileable:
        return iter(())
    count = count_tilings_oracle(dims, max_area=max(MAX_ORACLE_AREA, dims.area))
    if count > cap.max_tilings:
        raise CapExceeded(count, cap.max_tilings)
    return _search(dims)


def _search(dims: BoardDims) -> Iterator[Tiling]:
    rows, cols = dims.rows, dims.cols
    covered = [False] * (rows * cols)
    placed: list[Domino] = []

    def rec(k: int) -> Iterator[Tiling]:
        while k < rows * cols and covered[k]:
            k += 1
        if k == rows * cols:
            yield Tiling(dims, tuple(placed))
            return
        r, c = divmod(k, cols)
        if c + 1 < cols and not covered[k + 1]:
            covered[k] = covered[k + 1] = True
            placed.append(Domino.h(r, c))
            yield from rec(k + 2)
            placed.pop()
            covered[k] = covered[k + 1] = False
        if r + 1 < rows:
            covered[k] = covered[k + cols] = True
            placed.append(Domino.v(r, c))
            yield from rec(k + 1)
            placed.pop()
            covered[k] = covered[k + cols] = False

    return rec(0)
