"""Exact tools for k-uniform L-intersecting set families."""

__version__ = "0.1.0"

from .bounds import (  # noqa: E402
    BoundReport,
    BoundTable,
    best_bound,
    binomial,
    bound_barg_musin,
    bound_bose,
    bound_edf,
    bound_ekr,
    bound_fisher_uniform,
    bound_frankl_furedi,
    bound_main,
    bound_rw,
)
from .constructions import ProjectivePlane, projective_plane, star, sunflower  # noqa: E402
from .core import (  # noqa: E402
    BlockSet,
    CapExceededError,
    DuplicateBlockError,
    Family,
    FamilyError,
    LSpec,
    decompose,
    helly_witness,
    intersection_sizes,
    is_l_intersecting,
    is_uniform,
    kernel,
    trace_bound_check,
    union_size_check,
)
from .familyio import FamilyFormatError, format_family, parse_family, read_family, write_family  # noqa: E402
from .galois import GaloisField, field_make  # noqa: E402
from .scan import ScanReport, ScanRow, scan_conjecture  # noqa: E402
from .solver import (  # noqa: E402
    CompatGraph,
    Enumeration,
    SolveCertificate,
    SolverTimeout,
    compat_graph,
    enumerate_maximum,
    max_family,
)

__all__ = [
    "BlockSet",
    "BoundReport",
    "BoundTable",
    "CapExceededError",
    "CompatGraph",
    "DuplicateBlockError",
    "Enumeration",
    "Family",
    "FamilyError",
    "FamilyFormatError",
    "GaloisField",
    "LSpec",
    "ProjectivePlane",
    "ScanReport",
    "ScanRow",
    "SolveCertificate",
    "SolverTimeout",
    "best_bound",
    "binomial",
    "bound_barg_musin",
    "bound_bose",
    "bound_edf",
    "bound_ekr",
    "bound_fisher_uniform",
    "bound_frankl_furedi",
    "bound_main",
    "bound_rw",
    "compat_graph",
    "decompose",
    "enumerate_maximum",
    "field_make",
    "format_family",
    "helly_witness",
    "intersection_sizes",
    "is_l_intersecting",
    "is_uniform",
    "kernel",
    "max_family",
    "parse_family",
    "projective_plane",
    "read_family",
    "scan_conjecture",
    "star",
    "sunflower",
    "trace_bound_check",
    "union_size_check",
    "write_family",
]
