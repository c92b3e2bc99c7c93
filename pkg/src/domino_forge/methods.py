"""One entry point per counting method, with shape checks."""

from __future__ import annotations

import enum

from .board import BoardDims
from .enumeration import count_tilings_oracle
from .kasteleyn import KasteleynParams, PrecisionConfig, kasteleyn_count
from .series import (
    PUBLISHED_C,
    apply_recurrence,
    gf6,
    recurrence_from_gf,
    series_expand,
    symmetric_recurrence_order20,
)
from .transfer import (
    MAX_WIDTH,
    MultiplicationCounter,
    count_via_transfer,
    matrix_power_entry,
    paper_matrix_C,
    transfer_sequence,
)


class CountMethod(enum.Enum):
    ORACLE = "oracle"
    KASTELEYN = "kasteleyn"
    TRANSFER = "transfer"
    COMPACT = "compact"
    GF = "gf"
    REC7 = "rec7"
    REC20 = "rec20"


SIX_WIDE = {CountMethod.COMPACT, CountMethod.GF, CountMethod.REC7, CountMethod.REC20}


class InapplicableMethod(ValueError):
    pass


def six_wide_index(rows: int, cols: int) -> int:
    """``n`` such that the board is ``6 x 2n`` (either way round)."""
    if rows == 6 and cols % 2 == 0:
        return cols // 2
    if cols == 6 and rows % 2 == 0:
        return rows // 2
    raise InapplicableMethod(f"{rows}x{cols} is not a 6 x 2n board")


def check_applicable(rows: int, cols: int, method: CountMethod) -> None:
    dims = BoardDims(rows, cols)
    if method is CountMethod.KASTELEYN and not dims.even_sides:
        raise InapplicableMethod("the product formula needs both sides even")
    if method is CountMethod.TRANSFER and min(rows, cols) > MAX_WIDTH:
        raise InapplicableMethod(f"transfer matrices stop at width {MAX_WIDTH}")
    if method is CountMethod.ORACLE and dims.area > 16 * 16:
        raise InapplicableMethod("board exceeds the oracle area bound")
    if method in SIX_WIDE:
        six_wide_index(rows, cols)


def count(
    rows: int,
    cols: int,
    method: CountMethod,
    precision: PrecisionConfig | None = None,
    counter: MultiplicationCounter | None = None,
) -> int:
    check_applicable(rows, cols, method)
    if method is CountMethod.ORACLE:
        return count_tilings_oracle(BoardDims(rows, cols))
    if method is CountMethod.KASTELEYN:
        return kasteleyn_count(KasteleynParams.from_board(rows, cols), precision)
    if method is CountMethod.TRANSFER:
        return count_via_transfer(min(rows, cols), max(rows, cols))
    n = six_wide_index(rows, cols)
    return six_wide_count(n, method, counter)


def six_wide_count(n: int, method: CountMethod, counter: MultiplicationCounter | None = None) -> int:
    """``c_n``, the number of tilings of the ``6 x 2n`` board."""
    if method is CountMethod.COMPACT:
        return matrix_power_entry(paper_matrix_C(), n, 0, 0, counter)
    if method is CountMethod.GF:
        return series_expand(gf6(), n)[n]
    if method is CountMethod.REC7:
        return apply_recurrence(recurrence_from_gf(gf6()), PUBLISHED_C[:7], n)
    if method is CountMethod.REC20:
        return apply_recurrence(symmetric_recurrence_order20(), transfer_sequence(6, 20, step=2), n)
    if method is CountMethod.TRANSFER:
        return count_via_transfer(6, 2 * n)
    raise InapplicableMethod(f"{method.value} is not a 6 x 2n method")


def step_count(n: int, method: CountMethod) -> int:
    """Elementary steps each method spends on ``c_n`` (big-matrix products,
    recurrence steps, series terms or transfer columns)."""
    if method is CountMethod.COMPACT:
        # squarings plus one product per extra set bit of n
        return (n.bit_length() - 1) + (bin(n).count("1") - 1) if n else 0
    if method is CountMethod.GF:
        return n + 1
    if method is CountMethod.REC7:
        return max(n - 6, 0)
    if method is CountMethod.REC20:
        return max(n - 19, 0)
    if method is CountMethod.TRANSFER:
        return 2 * n
    raise InapplicableMethod(f"{method.value} is not a 6 x 2n method")
