"""Exception hierarchy shared by every module."""


class DominoForgeError(Exception):
    """Base class for all errors raised by the package."""


class TilingError(DominoForgeError, ValueError):
    pass


class OverlapError(TilingError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f"cell {tuple(cell)} is covered more than once")


class GapError(TilingError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f"cell {tuple(cell)} is not covered")


class OutOfBoundsError(TilingError):
    def __init__(self, domino):
        self.domino = domino
        super().__init__(f"domino {domino} leaves the board")


class ParseError(DominoForgeError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class AreaTooLarge(DominoForgeError, ValueError):
    pass


class CapExceeded(DominoForgeError):
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"board has {count} tilings, above the cap of {cap}")


class PrecisionExhausted(DominoForgeError):
    def __init__(self, max_bits):
        self.max_bits = max_bits
        super().__init__(f"no unique integer isolated within {max_bits} bits")


class WidthTooLarge(DominoForgeError, ValueError):
    pass


class IndexOutOfRange(DominoForgeError, IndexError):
    pass


class FixtureError(DominoForgeError, ValueError):
    pass


class NotExpandable(DominoForgeError, ValueError):
    pass


class SeedTooShort(DominoForgeError, ValueError):
    pass


class DomainError(DominoForgeError, ValueError):
    pass


class OddDimensions(DominoForgeError, ValueError):
    pass


class SearchExhausted(DominoForgeError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"no path found within {budget} node expansions")


class BisectedDomino(DominoForgeError):
    def __init__(self, domino):
        self.domino = domino
        super().__init__(f"path runs through the middle of {domino}")


class NoHamiltonianPath(DominoForgeError):
    """The search space was exhausted: no path exists."""
