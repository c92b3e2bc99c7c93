"""Fault lines, traffic-rule Hamiltonian paths and the sides they cut out.

The lattice of board vertices gets one-way streets: vertical line ``x``
runs north when ``x`` is even and south otherwise, horizontal line ``y``
runs east or west depending on ``y`` and the path variant. The unit
edge through the middle of every domino is closed. A path must walk
from one corner to the opposite one along open streets, visiting every
vertex once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .board import (
    BoardDims,
    Cell,
    FaultLine,
    GridPath,
    GridVertex,
    Orientation,
    PathVariant,
    Tiling,
    bisecting_edge,
)
from .errors import BisectedDomino, NoHamiltonianPath, OddDimensions, SearchExhausted

DEFAULT_BUDGET = 10**8

# neighbour order tried by the search
NORTH, EAST, SOUTH, WEST = (0, 1), (1, 0), (0, -1), (-1, 0)
DIRECTIONS = (NORTH, EAST, SOUTH, WEST)


def find_fault_lines(t: Tiling) -> list[FaultLine]:
    """Interior grid lines that no domino straddles, horizontal ones first."""
    rows, cols = t.dims.rows, t.dims.cols
    crossed_h = set()
    crossed_v = set()
    for d in t.dominoes:
        r, c = d.anchor
        if d.horizontal:
            crossed_v.add(c + 1)
        else:
            crossed_h.add(r + 1)
    out = [FaultLine(Orientation.HORIZONTAL, y) for y in range(1, rows) if y not in crossed_h]
    out += [FaultLine(Orientation.VERTICAL, x) for x in range(1, cols) if x not in crossed_v]
    return out


@dataclass(frozen=True)
class DirectedGrid:
    dims: BoardDims
    variant: PathVariant
    removed: frozenset[tuple[GridVertex, GridVertex]]

    def allowed(self, u: GridVertex, w: GridVertex) -> bool:
        """Whether the one-way rule and the closures permit the step ``u -> w``."""
        dx, dy = w.x - u.x, w.y - u.y
        if abs(dx) + abs(dy) != 1:
            return False
        if not (0 <= w.x <= self.dims.cols and 0 <= w.y <= self.dims.rows):
            return False
        key = (u, w) if u <= w else (w, u)
        if key in self.removed:
            return False
        if dx == 0:
            return (dy == 1) == PathVariant.northward(u.x)
        return (dx == 1) == self.variant.eastward(u.y)

    def successors(self, u: GridVertex) -> list[GridVertex]:
        out = []
        for dx, dy in DIRECTIONS:
            w = GridVertex(u.x + dx, u.y + dy)
            if self.allowed(u, w):
                out.append(w)
        return out

    def vertices(self) -> Iterator[GridVertex]:
        for y in range(self.dims.rows + 1):
            for x in range(self.dims.cols + 1):
                yield GridVertex(x, y)


def build_directed_grid(t: Tiling, v: PathVariant) -> DirectedGrid:
    if not t.dims.even_sides:
        raise OddDimensions(f"board {t.dims.rows}x{t.dims.cols} needs both sides even")
    removed = frozenset(bisecting_edge(d).key for d in t.dominoes)
    return DirectedGrid(t.dims, v, removed)


def _search(grid: DirectedGrid, budget: int, find_all: bool) -> tuple[list[list[int]], int, bool]:
    """Depth-first search over vertex ids ``y * (cols + 1) + x``.

    A branch is cut as soon as some unvisited vertex loses its last
    possible predecessor, or some unvisited vertex other than the goal
    loses its last possible successor; neither can happen on a branch
    that leads to a solution, so the search order is unaffected.

    Returns ``(solutions, expansions, exhausted)``; ``exhausted`` is True
    when the budget ran out before the space was covered.
    """
    dims = grid.dims
    width = dims.cols + 1
    total = dims.n_vertices
    succ = [
        [w.y * width + w.x for w in grid.successors(GridVertex(i % width, i // width))]
        for i in range(total)
    ]
    pred: list[list[int]] = [[] for _ in range(total)]
    for i, outs in enumerate(succ):
        for j in outs:
            pred[j].append(i)
    start_v = grid.variant.start(dims)
    end_v = grid.variant.end(dims)
    start = start_v.y * width + start_v.x
    end = end_v.y * width + end_v.x

    visited = [False] * total
    visited[start] = True
    # feeders: predecessors still able to enter the vertex (unvisited or current)
    feeders = [len(p) for p in pred]
    # exits: successors not yet visited
    exits = [sum(1 for j in outs if j != start) for outs in succ]
    if any(feeders[i] == 0 for i in range(total) if i != start) or any(
        exits[i] == 0 for i in range(total) if i != end
    ):
        return [], 1, False

    def advance(cur: int, nxt: int) -> tuple[list[int], list[int], bool]:
        fed, exited, alive = [], [], True
        for x in succ[cur]:
            if x != nxt and not visited[x]:
                feeders[x] -= 1
                fed.append(x)
                if feeders[x] == 0:
                    alive = False
        for y in pred[nxt]:
            if not visited[y]:
                exits[y] -= 1
                exited.append(y)
                if exits[y] == 0 and y != end:
                    alive = False
        return fed, exited, alive

    def retreat(fed: list[int], exited: list[int]) -> None:
        for x in fed:
            feeders[x] += 1
        for y in exited:
            exits[y] += 1

    path = [start]
    stack = [iter(succ[start])]
    undo: list[tuple[list[int], list[int]]] = [([], [])]
    expansions = 1
    solutions: list[list[int]] = []
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            retreat(*undo.pop())
            visited[path.pop()] = False
            continue
        if visited[nxt]:
            continue
        if nxt == end and len(path) + 1 < total:
            continue
        expansions += 1
        if expansions > budget:
            return solutions, expansions, True
        if len(path) + 1 == total:
            solutions.append(path + [nxt])
            if not find_all:
                return solutions, expansions, False
            continue
        cur = path[-1]
        visited[nxt] = True
        fed, exited, alive = advance(cur, nxt)
        if not alive:
            retreat(fed, exited)
            visited[nxt] = False
            continue
        path.append(nxt)
        stack.append(iter(succ[nxt]))
        undo.append((fed, exited))
    return solutions, expansions, False


def _to_path(ids: list[int], dims: BoardDims) -> GridPath:
    width = dims.cols + 1
    return GridPath(tuple(GridVertex(i % width, i // width) for i in ids))


def hamiltonian_path(t: Tiling, v: PathVariant, budget: int = DEFAULT_BUDGET) -> GridPath:
    """First corner-to-corner Hamiltonian path in search order.

    Raises SearchExhausted if ``budget`` node expansions are used up and
    NoHamiltonianPath if the whole search space was covered in vain.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    grid = build_directed_grid(t, v)
    found, _, exhausted = _search(grid, budget, find_all=False)
    if found:
        return _to_path(found[0], t.dims)
    if exhausted:
        raise SearchExhausted(budget)
    raise NoHamiltonianPath(f"no variant-{v.value} path exists for this tiling")


def all_hamiltonian_paths(t: Tiling, v: PathVariant, budget: int = DEFAULT_BUDGET) -> list[GridPath]:
    """Every traffic-rule Hamiltonian path for ``(t, v)``."""
    grid = build_directed_grid(t, v)
    found, _, exhausted = _search(grid, budget, find_all=True)
    if exhausted:
        raise SearchExhausted(budget)
    return [_to_path(ids, t.dims) for ids in found]


def check_path(t: Tiling, v: PathVariant, p: GridPath) -> list[str]:
    """Problems with ``p`` as a traffic-rule Hamiltonian path; empty if none.

    Written against the rule itself rather than :class:`DirectedGrid`, so
    it can audit the search.
    """
    dims = t.dims
    problems = []
    verts = p.vertices
    if len(verts) != dims.n_vertices:
        problems.append(f"path has {len(verts)} vertices, board has {dims.n_vertices}")
    if len(set(verts)) != len(verts):
        problems.append("path repeats a vertex")
    for w in verts:
        if not (0 <= w.x <= dims.cols and 0 <= w.y <= dims.rows):
            problems.append(f"vertex {tuple(w)} is off the board")
    if verts and verts[0] != v.start(dims):
        problems.append(f"path starts at {tuple(verts[0])}")
    if verts and verts[-1] != v.end(dims):
        problems.append(f"path ends at {tuple(verts[-1])}")
    closed = {bisecting_edge(d).key: d for d in t.dominoes}
    for a, b in zip(verts, verts[1:]):
        dx, dy = b.x - a.x, b.y - a.y
        if abs(dx) + abs(dy) != 1:
            problems.append(f"step {tuple(a)} -> {tuple(b)} is not a unit step")
            continue
        key = (a, b) if a <= b else (b, a)
        if key in closed:
            problems.append(f"step {tuple(a)} -> {tuple(b)} cuts {closed[key]}")
        if dx == 0:
            north_ok = a.x % 2 == 0
            if (dy == 1) != north_ok:
                problems.append(f"step {tuple(a)} -> {tuple(b)} goes against line x={a.x}")
        else:
            east_ok = (a.y % 2 == 0) if v is PathVariant.A else (a.y % 2 == 1)
            if (dx == 1) != east_ok:
                problems.append(f"step {tuple(a)} -> {tuple(b)} goes against line y={a.y}")
    return problems


@dataclass(frozen=True)
class SidePartition:
    """How a corner-to-corner path splits the dominoes.

    ``groups`` lists the nonempty sides as ``(side, domino count)`` with
    side ``"left"`` or ``"right"`` relative to the direction of travel.
    ``domino_sides`` gives the side of each domino of the tiling, and
    ``regions`` the domino counts of the connected cell regions left
    after cutting along the path (a side touching the board edge in
    several places falls apart into several regions).
    """

    groups: tuple[tuple[str, int], ...]
    domino_sides: tuple[str, ...]
    regions: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "groups": [{"side": s, "dominoes": n} for s, n in self.groups],
            "regions": list(self.regions),
        }


def side_partition(t: Tiling, p: GridPath) -> SidePartition:
    dims = t.dims
    path_edges = {e.key for e in p.edges()}
    for d in t.dominoes:
        if bisecting_edge(d).key in path_edges:
            raise BisectedDomino(d)

    # a cell is left of travel iff the path crosses its row an even number
    # of times at or left of the cell's left edge
    left = {}
    for r in range(dims.rows):
        crossings = 0
        for c in range(dims.cols):
            if (GridVertex(c, r), GridVertex(c, r + 1)) in path_edges:
                crossings += 1
            left[Cell(r, c)] = crossings % 2 == 0

    sides = []
    for d in t.dominoes:
        a, b = d.cells
        if left[a] != left[b]:
            raise BisectedDomino(d)
        sides.append("left" if left[a] else "right")
    counts = {"left": sides.count("left"), "right": sides.count("right")}
    groups = tuple((s, n) for s, n in counts.items() if n)
    return SidePartition(groups, tuple(sides), _region_sizes(t, path_edges))


def _region_sizes(t: Tiling, path_edges: set) -> tuple[int, ...]:
    dims = t.dims
    parent = {cell: cell for cell in dims.cells()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in range(dims.rows):
        for c in range(dims.cols):
            here = Cell(r, c)
            if c + 1 < dims.cols and (GridVertex(c + 1, r), GridVertex(c + 1, r + 1)) not in path_edges:
                parent[find(here)] = find(Cell(r, c + 1))
            if r + 1 < dims.rows and (GridVertex(c, r + 1), GridVertex(c + 1, r + 1)) not in path_edges:
                parent[find(here)] = find(Cell(r + 1, c))
    sizes: dict[Cell, int] = {}
    for d in t.dominoes:
        root = find(d.anchor)
        sizes[root] = sizes.get(root, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def reflect_path(p: GridPath, dims: BoardDims) -> GridPath:
    """Mirror a path left-to-right."""
    return GridPath(tuple(GridVertex(dims.cols - w.x, w.y) for w in p.vertices))
