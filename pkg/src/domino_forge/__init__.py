"""Exact domino tiling counts by several independent methods, and the
fault lines and traffic-rule Hamiltonian paths of individual tilings."""

from .board import (
    BoardDims,
    Cell,
    Domino,
    FaultLine,
    GridEdge,
    GridPath,
    GridVertex,
    Orientation,
    PathVariant,
    Tiling,
    bisecting_edge,
    tiling_from_text,
    tiling_to_text,
    validate_tiling,
)
from .enumeration import EnumerationCap, count_tilings_oracle, enumerate_tilings
from .kasteleyn import KasteleynParams, PrecisionConfig, kasteleyn_count, kasteleyn_product_interval
from .paths import (
    build_directed_grid,
    check_path,
    find_fault_lines,
    hamiltonian_path,
    side_partition,
)
from .render import RenderOptions, render_ascii, render_svg
from .series import (
    IntPolynomial,
    LinearRecurrence,
    RationalGF,
    apply_recurrence,
    char_poly,
    check_u_identity,
    gf6,
    is_palindromic,
    recurrence_from_gf,
    series_expand,
    symmetric_recurrence_order20,
)
from .transfer import (
    BigMatrix,
    CompactMatrix,
    ProfileMatrix,
    build_column_transfer,
    count_via_transfer,
    matrix_power_entry,
    paper_matrix_C,
    verify_compact,
)

__version__ = "0.1.0"
