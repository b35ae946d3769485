"""Rainbow monochromatic k-edge-connection colorings: existence through
spanning-tree packing, constructions, verification, normalization, exact
small-graph solving and random-graph experiments."""

from .bounds import Bound, BoundsReport, bounds, classify_exact, k_range
from .coloring import (
    ColoringError,
    EdgeColoring,
    NoPackingError,
    baseline_coloring,
    color_classes,
    coverage_matrix,
    improve_coloring,
    is_rmc_k,
    pair_coverage,
    perfectly_connected_coloring,
)
from .edgelist import FormatError, format_edgelist, parse_edgelist
from .graph import Graph, GraphError, VertexPartition, metrics, shrink
from .normalizer import merge_step, normalize
from .packing import packing, spanning_tree_packing, stp_number, tau_exact, verify_nwt_certificate
from .profiles import ProfileProblem, binomial_gap_check, extremal_profile, profile_monotone_check
from .randomlab import run_trial, sample_gnp, sweep
from .solver import SolveResult, mc_heuristic, rmc_exact

__version__ = "0.1.0"
