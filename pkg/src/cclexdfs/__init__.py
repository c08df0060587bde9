"""Linear-time LexDFS orderings of cocomparability graphs."""

from .counters import WorkCounters
from .generators import PosetSpec, gen_fixture, gen_layered_cocomp, gen_random_cocomp
from .graph import Graph, GraphFormatError, Ordering, load_graph, load_ordering, reorder_adjacency, reverse
from .layers import ClassOrder, Partition, build_partition_classes, compute_initial_labels
from .oracle import LexLabel, TieRule, lexdfs_from, lexdfs_generic, lexdfs_plus_oracle
from .refine import PivotStack, cclexdfs, refine, refine_literal, run_pipeline, update_pivots
from .verify import (
    Violation,
    ViolationKind,
    brute_force_cocomp_order,
    check_4pc,
    check_flipping,
    check_partition,
    check_umbrella_free,
)

__all__ = [
    "ClassOrder", "Graph", "GraphFormatError", "LexLabel", "Ordering", "Partition", "PivotStack",
    "PosetSpec", "TieRule", "Violation", "ViolationKind", "WorkCounters",
    "brute_force_cocomp_order", "build_partition_classes", "cclexdfs", "check_4pc",
    "check_flipping", "check_partition", "check_umbrella_free", "compute_initial_labels",
    "gen_fixture", "gen_layered_cocomp", "gen_random_cocomp", "lexdfs_from", "lexdfs_generic",
    "lexdfs_plus_oracle", "load_graph", "load_ordering", "refine", "refine_literal",
    "reorder_adjacency", "reverse", "run_pipeline", "update_pivots",
]
