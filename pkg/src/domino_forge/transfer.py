"""Column transfer matrices and exact big-integer matrix powers.

A strip of height ``width`` is tiled one column at a time. The state
between two columns is the set of rows in which a horizontal domino
sticks out of the left column into the right one, encoded as a bitmask.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .errors import FixtureError, IndexOutOfRange, WidthTooLarge

MAX_WIDTH = 12
COMPACT_FIXTURE = "compact_c.txt"
FIXTURE_HEADER = "# domino-forge compact matrix, format 1"


@dataclass(frozen=True)
class BigMatrix:
    """Square matrix of Python integers (arbitrary precision)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, dim: int) -> BigMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: BigMatrix) -> BigMatrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return BigMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
        )

    def __add__(self, other: BigMatrix) -> BigMatrix:
        return BigMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def scale(self, k: int) -> BigMatrix:
        return BigMatrix(tuple(tuple(k * a for a in row) for row in self.rows))

    def transpose(self) -> BigMatrix:
        return BigMatrix(tuple(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


class CompactMatrix(BigMatrix):
    """20x20 symmetric matrix whose powers count 6-row tilings."""

    def __post_init__(self):
        super().__post_init__()
        if self.dim != 20:
            raise FixtureError(f"compact matrix must be 20x20, got {self.dim}x{self.dim}")
        if not self.is_symmetric():
            raise FixtureError("compact matrix is not symmetric")
        if self[0, 0] != 13:
            raise FixtureError(f"compact matrix has [0][0] = {self[0, 0]}, expected 13")
        if self.trace() != 63:
            raise FixtureError(f"compact matrix has trace {self.trace()}, expected 63")


@dataclass
class MultiplicationCounter:
    count: int = 0


def matrix_power(
    m: BigMatrix, n: int, counter: MultiplicationCounter | None = None
) -> BigMatrix:
    """``m ** n`` by binary repeated squaring.

    ``counter`` (if given) is incremented once per matrix product; for
    ``n >= 1`` the total lies between ``floor(log2 n)`` and
    ``2 * floor(log2 n)``.
    """
    if n < 0:
        raise ValueError("exponent must be non-negative")
    if n == 0:
        return BigMatrix.identity(m.dim)
    counter = counter if counter is not None else MultiplicationCounter()
    result = None
    base = m
    while True:
        if n & 1:
            if result is None:
                result = base
            else:
                result = result @ base
                counter.count += 1
        n >>= 1
        if not n:
            return result
        base = base @ base
        counter.count += 1


def matrix_power_entry(
    m: BigMatrix, n: int, i: int, j: int, counter: MultiplicationCounter | None = None
) -> int:
    if not (0 <= i < m.dim and 0 <= j < m.dim):
        raise IndexOutOfRange(f"index ({i}, {j}) outside a {m.dim}x{m.dim} matrix")
    return matrix_power(m, n, counter)[i, j]


@dataclass(frozen=True)
class ProfileMatrix:
    """``entries[a][b]``: ways to fill one column entered with protrusions ``a``
    and leaving with protrusions ``b``."""

    width: int
    entries: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def size(self) -> int:
        return 1 << self.width

    def as_big_matrix(self) -> BigMatrix:
        return BigMatrix(self.entries)

    def successors(self) -> list[list[tuple[int, int]]]:
        """Sparse rows: for each ``a`` the nonzero ``(b, entries[a][b])`` pairs."""
        return [[(b, v) for b, v in enumerate(row) if v] for row in self.entries]


def _check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise WidthTooLarge(f"width must be in 1..{MAX_WIDTH}, got {width}")


def build_column_transfer(width: int) -> ProfileMatrix:
    _check_width(width)
    size = 1 << width
    table = [[0] * size for _ in range(size)]

    def fill(a: int, row: int, out: int, counts: list[int]) -> None:
        if row == width:
            counts[out] += 1
            return
        bit = 1 << row
        if a & bit:
            fill(a, row + 1, out, counts)
            return
        fill(a, row + 1, out | bit, counts)
        if row + 1 < width and not a & (bit << 1):
            fill(a, row + 2, out, counts)

    for a in range(size):
        fill(a, 0, 0, table[a])
    return ProfileMatrix(width, tuple(tuple(row) for row in table))


def count_via_transfer(width: int, cols: int, matrix: ProfileMatrix | None = None) -> int:
    """Tilings of a ``width x cols`` board: ``(T ** cols)[0][0]``.

    Evaluated as ``cols`` sparse vector-matrix steps from the empty profile.
    """
    _check_width(width)
    if cols < 0:
        raise ValueError("cols must be non-negative")
    t = matrix or build_column_transfer(width)
    succ = t.successors()
    vec = {0: 1}
    for _ in range(cols):
        nxt: dict[int, int] = {}
        for a, ways in vec.items():
            for b, v in succ[a]:
                nxt[b] = nxt.get(b, 0) + ways * v
        vec = nxt
    return vec.get(0, 0)


def transfer_sequence(width: int, terms: int, step: int = 1) -> list[int]:
    """Counts for ``width x (k * step)`` boards, ``k = 0 .. terms - 1``."""
    succ = build_column_transfer(width).successors()
    vec = {0: 1}
    out = []
    for _ in range(terms):
        out.append(vec.get(0, 0))
        for _ in range(step):
            nxt: dict[int, int] = {}
            for a, ways in vec.items():
                for b, v in succ[a]:
                    nxt[b] = nxt.get(b, 0) + ways * v
            vec = nxt
    return out


def parse_compact_fixture(text: str) -> CompactMatrix:
    """Load the versioned text asset; any deviation from the format is fatal."""
    lines = text.splitlines()
    if len(lines) < 3 or lines[0] != FIXTURE_HEADER:
        raise FixtureError("missing or unknown fixture header")
    checksum = None
    body_start = 1
    while body_start < len(lines) and lines[body_start].startswith("#"):
        parts = lines[body_start][1:].split()
        if len(parts) == 2 and parts[0] == "sha256":
            checksum = parts[1]
        body_start += 1
    if checksum is None:
        raise FixtureError("fixture has no sha256 line")
    body = lines[body_start:]
    digest = hashlib.sha256("".join(line + "\n" for line in body).encode()).hexdigest()
    if digest != checksum:
        raise FixtureError("fixture checksum mismatch")
    if len(body) != 20:
        raise FixtureError(f"fixture has {len(body)} rows, expected 20")
    rows = []
    for k, line in enumerate(body, start=1):
        fields = line.split()
        if len(fields) != 20:
            raise FixtureError(f"row {k} has {len(fields)} entries, expected 20")
        try:
            values = [int(v) for v in fields]
        except ValueError as exc:
            raise FixtureError(f"row {k}: {exc}") from None
        if any(v < 0 for v in values):
            raise FixtureError(f"row {k} has a negative entry")
        rows.append(tuple(values))
    return CompactMatrix(tuple(rows))


def paper_matrix_C() -> CompactMatrix:
    """The 20x20 compact matrix, with its first row completed by symmetry."""
    text = resources.files("domino_forge.data").joinpath(COMPACT_FIXTURE).read_text("ascii")
    return parse_compact_fixture(text)


@dataclass(frozen=True)
class CompactReport:
    checked: int
    mismatch: tuple[int, int, int] | None = None  # (n, from C, from transfer)

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def to_json(self) -> dict:
        out = {"checked": self.checked, "ok": self.ok}
        if self.mismatch:
            n, got, want = self.mismatch
            out["mismatch"] = {"n": n, "compact": str(got), "transfer": str(want)}
        return out


def verify_compact(c: BigMatrix, N: int, reference: Sequence[int] | None = None) -> CompactReport:
    """Compare ``(C ** n)[0][0]`` with the 6-row transfer count for ``n <= N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if reference is None:
        reference = transfer_sequence(6, N + 1, step=2)
    power = BigMatrix.identity(c.dim)
    for n in range(N + 1):
        if n:
            power = power @ c
        if power[0, 0] != reference[n]:
            return CompactReport(n, (n, power[0, 0], reference[n]))
    return CompactReport(N + 1)
