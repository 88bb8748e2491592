"""Exact size Ramsey numbers of small graph pairs by exhaustive search.

The engine decides arrowing ``G -> (red, blue)`` by enumerating maximal red
avoiders, proves lower bounds by checking every graph with a given number
of edges (isomorph-free generation), and checks upper bounds on explicit
constructions.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .arrowing import (ArrowVerdict, EdgeColoring, arrows, check_coloring, eval_degree_bound,
                       maximal_avoiders, period3_coloring)
from .bounds import (REGISTRY, ExhaustionRecord, RamseyReport, connected_sweep, predicted, size_ramsey,
                     verify_lower, verify_upper, witness_for)
from .canon import canonical, canonical_labeling
from .enumerate import EnumerationTask, count_with_edges, graphs_with_edges
from .errors import (BudgetExceeded, CapacityExceeded, Graph6Error, InvalidComponent, InvalidParameter,
                     LemmaViolated, MalformedHeader, PartitionMismatch, PatternSyntaxError, RefutedLowerBound,
                     SizeRamseyError, TrailingGarbage, VertexCountExceeds64)
from .families import FamilySpec, build, family, parse_family
from .graph import Graph, disjoint_union, join_one
from .graph6 import graph6_str, parse_graph6, write_graph6
from .matching import matching_number, max_matching
from .patterns import (Clique, CompleteBipartite, Cycle, Fan, Generic, Matching, Path, PathPack, Pattern,
                       Star, contains, has, parse_pattern)

__all__ = [
    "ArrowVerdict", "EdgeColoring", "arrows", "check_coloring", "eval_degree_bound", "maximal_avoiders",
    "period3_coloring", "REGISTRY", "ExhaustionRecord", "RamseyReport", "connected_sweep", "predicted",
    "size_ramsey", "verify_lower", "verify_upper", "witness_for", "canonical", "canonical_labeling",
    "EnumerationTask", "count_with_edges", "graphs_with_edges", "FamilySpec", "build", "family",
    "parse_family", "Graph", "disjoint_union", "join_one", "graph6_str", "parse_graph6", "write_graph6",
    "matching_number", "max_matching", "Clique", "CompleteBipartite", "Cycle", "Fan", "Generic", "Matching",
    "Path", "PathPack", "Pattern", "Star", "contains", "has", "parse_pattern",
    "BudgetExceeded", "CapacityExceeded", "Graph6Error", "InvalidComponent", "InvalidParameter", "LemmaViolated", "MalformedHeader", "PartitionMismatch", "PatternSyntaxError", "RefutedLowerBound", "SizeRamseyError", "TrailingGarbage", "VertexCountExceeds64",
]
