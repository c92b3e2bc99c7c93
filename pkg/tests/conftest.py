import functools
import random
import sys

import pytest

from domino_forge.board import BoardDims, Domino, validate_tiling
from domino_forge.enumeration import enumerate_tilings

sys.setrecursionlimit(max(sys.getrecursionlimit(), 5000))


def random_tiling(dims: BoardDims, rng: random.Random):
    """Uniformly random tiling, sampled from exact completion counts.

    Cells are filled in row-major order along the shorter side, with the
    same frontier bitmask as the counting DP; each choice is weighted by
    the number of ways to finish the board after it.
    """
    if dims.cols > dims.rows:
        return random_tiling(dims.transpose(), rng).transpose()
    rows, cols = dims.rows, dims.cols
    area = rows * cols

    def options(k, mask):
        bit = 1 << (k % cols)
        if mask & bit:
            return [(None, mask & ~bit)]
        out = [("v", mask | bit)]
        if k % cols + 1 < cols and not mask & (bit << 1):
            out.append(("h", mask | (bit << 1)))
        return out

    @functools.lru_cache(maxsize=None)
    def completions(k, mask):
        if k == area:
            return int(mask == 0)
        return sum(completions(k + 1, m) for _, m in options(k, mask))

    # warm the cache from the end so recursion stays shallow
    for k in range(area, -1, -1):
        for mask in range(1 << cols) if cols <= 8 else ():
            completions(k, mask)
    assert completions(0, 0) > 0
    placed = []
    mask = 0
    for k in range(area):
        choices = [(kind, m, completions(k + 1, m)) for kind, m in options(k, mask)]
        pick = rng.randrange(sum(w for _, _, w in choices))
        for kind, m, w in choices:
            if pick < w:
                break
            pick -= w
        r, c = divmod(k, cols)
        if kind == "v":
            placed.append(Domino.v(r, c))
        elif kind == "h":
            placed.append(Domino.h(r, c))
        mask = m
    return validate_tiling(dims, placed)


@pytest.fixture(scope="session")
def tilings_6x6():
    return list(enumerate_tilings(BoardDims(6, 6)))


_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; print it and keep it for the summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
        print(line)
        _ACCEPTANCE.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
