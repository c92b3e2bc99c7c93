"""Board geometry, tilings and their text serialization.

Coordinates put the origin at the bottom-left corner of the board. Cells
are addressed as ``(row, col)`` with row 0 at the bottom; lattice vertices
(the corners of unit squares) are addressed as ``(x, y)`` with
``0 <= x <= cols`` and ``0 <= y <= rows``.
"""

from __future__ import annotations

import enum
import string
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import GapError, OutOfBoundsError, OverlapError, ParseError, TilingError

LETTERS = string.ascii_uppercase + string.ascii_lowercase


class Orientation(enum.Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


class PathVariant(enum.Enum):
    """Which pair of opposite corners a traffic-rule path joins.

    ``A`` runs bottom-left to top-right and ``B`` bottom-right to top-left.
    Both send even-indexed vertical lattice lines north and odd ones
    south; ``A`` sends even-indexed horizontal lines east, ``B`` west.
    """

    A = "A"
    B = "B"

    def start(self, dims: BoardDims) -> GridVertex:
        return GridVertex(0, 0) if self is PathVariant.A else GridVertex(dims.cols, 0)

    def end(self, dims: BoardDims) -> GridVertex:
        if self is PathVariant.A:
            return GridVertex(dims.cols, dims.rows)
        return GridVertex(0, dims.rows)

    def eastward(self, y: int) -> bool:
        """Whether the horizontal lattice line at height ``y`` runs east."""
        return (y % 2 == 0) == (self is PathVariant.A)

    @staticmethod
    def northward(x: int) -> bool:
        return x % 2 == 0


@dataclass(frozen=True)
class BoardDims:
    rows: int
    cols: int

    def __post_init__(self):
        for name in ("rows", "cols"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def n_vertices(self) -> int:
        return (self.rows + 1) * (self.cols + 1)

    @property
    def tileable(self) -> bool:
        return self.area % 2 == 0

    @property
    def even_sides(self) -> bool:
        return self.rows % 2 == 0 and self.cols % 2 == 0

    def contains(self, cell: Cell) -> bool:
        return 0 <= cell.row < self.rows and 0 <= cell.col < self.cols

    def cells(self) -> Iterable[Cell]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield Cell(r, c)

    def transpose(self) -> BoardDims:
        return BoardDims(self.cols, self.rows)


class Cell(NamedTuple):
    row: int
    col: int


class GridVertex(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Domino:
    anchor: Cell
    orientation: Orientation

    @classmethod
    def h(cls, row: int, col: int) -> Domino:
        return cls(Cell(row, col), Orientation.HORIZONTAL)

    @classmethod
    def v(cls, row: int, col: int) -> Domino:
        return cls(Cell(row, col), Orientation.VERTICAL)

    @property
    def horizontal(self) -> bool:
        return self.orientation is Orientation.HORIZONTAL

    @property
    def cells(self) -> tuple[Cell, Cell]:
        r, c = self.anchor
        if self.horizontal:
            return Cell(r, c), Cell(r, c + 1)
        return Cell(r, c), Cell(r + 1, c)

    def sort_key(self) -> tuple[int, int, str]:
        return (self.anchor.row, self.anchor.col, self.orientation.value)

    def __repr__(self):
        return f"{self.orientation.value}@({self.anchor.row},{self.anchor.col})"


@dataclass(frozen=True)
class GridEdge:
    """A unit lattice edge, stored with its endpoints in the given order."""

    start: GridVertex
    end: GridVertex

    def __post_init__(self):
        dx = abs(self.start.x - self.end.x)
        dy = abs(self.start.y - self.end.y)
        if dx + dy != 1:
            raise ValueError(f"{self.start} and {self.end} are not lattice neighbours")

    @property
    def key(self) -> tuple[GridVertex, GridVertex]:
        """Orientation-free identity of the edge."""
        return (self.start, self.end) if self.start <= self.end else (self.end, self.start)

    @property
    def vertical(self) -> bool:
        return self.start.x == self.end.x


@dataclass(frozen=True)
class FaultLine:
    axis: Orientation
    index: int

    def to_json(self) -> dict:
        return {"axis": self.axis.value, "index": self.index}

    @classmethod
    def from_json(cls, obj: dict) -> FaultLine:
        return cls(Orientation(obj["axis"]), int(obj["index"]))


@dataclass(frozen=True)
class GridPath:
    vertices: tuple[GridVertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(GridVertex(*v) for v in self.vertices))

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> list[GridEdge]:
        return [GridEdge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def to_json(self) -> list[list[int]]:
        return [[v.x, v.y] for v in self.vertices]

    @classmethod
    def from_json(cls, obj: Sequence[Sequence[int]]) -> GridPath:
        return cls(tuple(GridVertex(int(x), int(y)) for x, y in obj))


@dataclass(frozen=True)
class Tiling:
    """An exact cover of a board by dominoes, canonically sorted by anchor.

    Build instances through :func:`validate_tiling`; the constructor only
    normalizes the domino order.
    """

    dims: BoardDims
    dominoes: tuple[Domino, ...]

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes, key=Domino.sort_key)))

    @cached_property
    def owner(self) -> dict[Cell, int]:
        """Map each cell to the index of the domino covering it."""
        return {cell: i for i, d in enumerate(self.dominoes) for cell in d.cells}

    def __len__(self):
        return len(self.dominoes)

    def reflect_horizontal(self) -> Tiling:
        """Mirror the tiling left-to-right."""
        cols = self.dims.cols
        out = []
        for d in self.dominoes:
            r, c = d.anchor
            if d.horizontal:
                out.append(Domino.h(r, cols - 2 - c))
            else:
                out.append(Domino.v(r, cols - 1 - c))
        return Tiling(self.dims, tuple(out))

    def transpose(self) -> Tiling:
        out = []
        for d in self.dominoes:
            r, c = d.anchor
            out.append(Domino.v(c, r) if d.horizontal else Domino.h(c, r))
        return Tiling(self.dims.transpose(), tuple(out))

    def __str__(self):
        return tiling_to_text(self)


def validate_tiling(dims: BoardDims, dominoes: Iterable[Domino]) -> Tiling:
    """Check that ``dominoes`` cover ``dims`` exactly and return the Tiling."""
    seen: set[Cell] = set()
    dominoes = list(dominoes)
    for d in dominoes:
        for cell in d.cells:
            if not dims.contains(cell):
                raise OutOfBoundsError(d)
    for d in sorted(dominoes, key=Domino.sort_key):
        for cell in d.cells:
            if cell in seen:
                raise OverlapError(cell)
            seen.add(cell)
    for cell in dims.cells():
        if cell not in seen:
            raise GapError(cell)
    return Tiling(dims, tuple(dominoes))


def bisecting_edge(d: Domino) -> GridEdge:
    """The unit lattice edge between the two cells of ``d``."""
    r, c = d.anchor
    if d.horizontal:
        return GridEdge(GridVertex(c + 1, r), GridVertex(c + 1, r + 1))
    return GridEdge(GridVertex(c, r + 1), GridVertex(c + 1, r + 1))


def _adjacent_dominoes(t: Tiling) -> list[set[int]]:
    owner = t.owner
    adj: list[set[int]] = [set() for _ in t.dominoes]
    for (r, c), i in owner.items():
        for nb in (Cell(r + 1, c), Cell(r, c + 1)):
            j = owner.get(nb)
            if j is not None and j != i:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def domino_labels(t: Tiling) -> list[str]:
    """Letter for each domino of ``t`` (indexed like ``t.dominoes``).

    Dominoes are labelled in reading order (top row first) cycling through
    A-Z then a-z; when the cyclic choice would match a neighbouring
    domino's letter the next free letter is taken instead.
    """
    rows, cols = t.dims.rows, t.dims.cols
    owner = t.owner
    order: list[int] = []
    placed: set[int] = set()
    for r in range(rows - 1, -1, -1):
        for c in range(cols):
            i = owner[Cell(r, c)]
            if i not in placed:
                placed.add(i)
                order.append(i)
    adj = _adjacent_dominoes(t)
    labels: list[str | None] = [None] * len(t.dominoes)
    for k, i in enumerate(order):
        taken = {labels[j] for j in adj[i]}
        for step in range(len(LETTERS)):
            letter = LETTERS[(k + step) % len(LETTERS)]
            if letter not in taken:
                labels[i] = letter
                break
    return labels  # type: ignore[return-value]


def tiling_to_text(t: Tiling) -> str:
    """Serialize as a letter grid, top row first, newline-terminated."""
    labels = domino_labels(t)
    owner = t.owner
    lines = []
    for r in range(t.dims.rows - 1, -1, -1):
        lines.append("".join(labels[owner[Cell(r, c)]] for c in range(t.dims.cols)))
    return "\n".join(lines) + "\n"


def tiling_from_text(text: str) -> Tiling:
    """Parse the letter-grid format produced by :func:`tiling_to_text`."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [line.rstrip("\r") for line in lines]
    if not lines:
        raise ParseError("empty input", 1, 1)
    width = len(lines[0])
    for i, line in enumerate(lines, start=1):
        if not line:
            raise ParseError("empty row", i, 1)
        if len(line) != width:
            raise ParseError(f"row has {len(line)} characters, expected {width}", i, min(len(line), width) + 1)
        for j, ch in enumerate(line, start=1):
            if ch not in LETTERS:
                raise ParseError(f"unexpected character {ch!r}", i, j)
    rows = len(lines)
    dims = BoardDims(rows, width)

    def letter(r: int, c: int) -> str | None:
        if 0 <= r < rows and 0 <= c < width:
            return lines[rows - 1 - r][c]
        return None

    dominoes = []
    for r in range(rows):
        for c in range(width):
            ch = letter(r, c)
            mates = [
                (dr, dc)
                for dr, dc in ((1, 0), (-1, 0), (0, 1), (0, -1))
                if letter(r + dr, c + dc) == ch
            ]
            line_no, col_no = rows - r, c + 1
            if not mates:
                raise ParseError(f"letter {ch!r} has no matching neighbour", line_no, col_no)
            if len(mates) > 1:
                raise ParseError(f"letter {ch!r} matches more than one neighbour", line_no, col_no)
            dr, dc = mates[0]
            if dr == 1:
                dominoes.append(Domino.v(r, c))
            elif dc == 1:
                dominoes.append(Domino.h(r, c))
    try:
        return validate_tiling(dims, dominoes)
    except TilingError as exc:  # pragma: no cover - mates check already guarantees a cover
        raise ParseError(str(exc), 1, 1) from exc
