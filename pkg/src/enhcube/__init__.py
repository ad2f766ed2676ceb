"""Cycle embedding and brute-force verification for enhanced hypercubes Q_{n,k}."""

from .cycle import Cycle, OpenPath
from .embedder import (
    LengthSpec,
    admissible_lengths,
    base_cycle_folded,
    embed_cycle,
    product_extend_two,
    product_join,
    split_odd_length,
)
from .errors import (
    ConfigurationError,
    ConstructionError,
    DecompositionUnavailableError,
    EnhcubeError,
    InadmissibleLengthError,
    NotAnEdgeError,
    ParameterError,
    ResourceError,
)
from .harness import SweepConfig, VerificationReport, export_graph, run_sweep
from .oracle import (
    check_bipartite_bfs,
    cycle_length_spectrum_through_edge,
    min_odd_cycle_through_edge,
    odd_girth,
    validate_cycle,
)
from .topology import (
    SKIP,
    Edge,
    EdgeClass,
    Params,
    classify_edge,
    decompose,
    is_bipartite,
    make_edge,
    neighbors,
    skip_of,
)

__version__ = "0.1.0"
