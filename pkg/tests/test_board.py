import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domino_forge.board import (
    BoardDims,
    Cell,
    Domino,
    GridEdge,
    GridPath,
    GridVertex,
    FaultLine,
    Orientation,
    PathVariant,
    bisecting_edge,
    tiling_from_text,
    tiling_to_text,
    validate_tiling,
)
from domino_forge.errors import GapError, OutOfBoundsError, OverlapError, ParseError

from conftest import random_tiling


def test_dims_reject_nonpositive():
    with pytest.raises(ValueError):
        BoardDims(0, 3)
    with pytest.raises(ValueError):
        BoardDims(2, -1)


def test_all_horizontal_2x2_is_valid():
    t = validate_tiling(BoardDims(2, 2), [Domino.h(0, 0), Domino.h(1, 0)])
    assert len(t) == 2


def test_gap_reported_at_first_uncovered_cell():
    with pytest.raises(GapError) as exc:
        validate_tiling(BoardDims(2, 2), [Domino.h(0, 0)])
    assert exc.value.cell == Cell(1, 0)


def test_overlap_and_out_of_bounds():
    with pytest.raises(OverlapError):
        validate_tiling(BoardDims(2, 2), [Domino.h(0, 0), Domino.v(0, 0), Domino.h(1, 0)])
    with pytest.raises(OutOfBoundsError):
        validate_tiling(BoardDims(2, 2), [Domino.h(0, 1), Domino.h(1, 0)])


def test_enumerated_tilings_revalidate(tilings_6x6):
    for t in tilings_6x6[::97]:
        assert validate_tiling(t.dims, reversed(t.dominoes)) == t


@pytest.mark.parametrize(
    "domino, edge",
    [
        (Domino.h(0, 0), ((1, 0), (1, 1))),
        (Domino.v(0, 0), ((0, 1), (1, 1))),
        (Domino.v(4, 5), ((5, 5), (6, 5))),
    ],
)
def test_bisecting_edge(domino, edge):
    e = bisecting_edge(domino)
    assert (tuple(e.start), tuple(e.end)) == edge


def test_bisecting_edge_injective(tilings_6x6):
    for t in tilings_6x6[::50]:
        keys = {bisecting_edge(d).key for d in t.dominoes}
        assert len(keys) == len(t.dominoes)


def test_grid_edge_must_be_unit():
    with pytest.raises(ValueError):
        GridEdge(GridVertex(0, 0), GridVertex(1, 1))


def test_text_format_examples():
    t = validate_tiling(BoardDims(2, 2), [Domino.h(0, 0), Domino.h(1, 0)])
    assert tiling_to_text(t) == "AA\nBB\n"
    assert tiling_from_text("AA\nBB") == t
    assert tiling_from_text("AA\nBB\n") == t


@pytest.mark.parametrize(
    "text",
    ["AB\nBA", "AAA\nBBB", "AA\nB", "", "A1\nA1", "AA\n\nBB"],
)
def test_malformed_text_rejected(text):
    with pytest.raises(ParseError):
        tiling_from_text(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        tiling_from_text("AA\nB?")
    assert (exc.value.line, exc.value.column) == (2, 2)


def test_roundtrip_all_6x6(tilings_6x6):
    for t in tilings_6x6:
        assert tiling_from_text(tiling_to_text(t)) == t


def test_wide_board_reuses_letters_without_clashes():
    # 2 x 60 all-vertical needs more than 52 labels
    t = validate_tiling(BoardDims(2, 60), [Domino.v(0, c) for c in range(60)])
    text = tiling_to_text(t)
    assert set(text.strip()) > set("ABC")
    assert tiling_from_text(text) == t


@settings(max_examples=60, deadline=None)
@given(
    rows=st.integers(1, 8),
    cols=st.integers(1, 40),
    seed=st.integers(0, 2**32 - 1),
)
def test_roundtrip_random(rows, cols, seed):
    if rows * cols % 2:
        rows += 1
    t = random_tiling(BoardDims(rows, cols), random.Random(seed))
    assert 2 * len(t) == rows * cols
    assert tiling_from_text(tiling_to_text(t)) == t


def test_reflect_and_transpose_are_involutions(tilings_6x6):
    for t in tilings_6x6[::300]:
        assert t.reflect_horizontal().reflect_horizontal() == t
        assert t.transpose().transpose() == t
        validate_tiling(t.dims, t.reflect_horizontal().dominoes)


def test_variant_corners_and_orientation():
    dims = BoardDims(4, 6)
    assert PathVariant.A.start(dims) == (0, 0) and PathVariant.A.end(dims) == (6, 4)
    assert PathVariant.B.start(dims) == (6, 0) and PathVariant.B.end(dims) == (0, 4)
    for y in range(5):
        assert PathVariant.A.eastward(y) != PathVariant.B.eastward(y)
    assert PathVariant.northward(0) and not PathVariant.northward(1)


def test_json_forms():
    assert FaultLine(Orientation.HORIZONTAL, 1).to_json() == {"axis": "H", "index": 1}
    assert FaultLine.from_json({"axis": "V", "index": 3}) == FaultLine(Orientation.VERTICAL, 3)
    p = GridPath(((0, 0), (0, 1)))
    assert p.to_json() == [[0, 0], [0, 1]]
    assert GridPath.from_json(p.to_json()) == p
