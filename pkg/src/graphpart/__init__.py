"""Recognizers for structured vertex bipartitions of graphs."""

from .errors import (
    BadCertificate,
    BoundTooLarge,
    BudgetExceeded,
    ConfigError,
    CoverageError,
    GraphPartError,
    InvariantViolation,
    ParseError,
    SpecMismatch,
)
from .exclusive import (
    PropertySpec,
    exclusivity_bound,
    parse_spec,
    recognize_bounded_a,
    recognize_cluster_vs_fsg,
    recognize_exclusive,
    recognize_small_fsg,
)
from .generate import generate_planted, gnp
from .graph import Bipartition, Graph, build_graph, verify_certificate
from .io import parse_certificate_text, parse_graph_text, format_certificate, format_graph
from .monopolar import recognize_monopolar
from .oracle import brute_monopolar, brute_pi_partition, brute_subcoloring, oracle_profile
from .stats import SearchStats
from .subcoloring import recognize_subcoloring_ka
from .total import recognize_subcoloring_total
from .twosat import TwoSatFormula, solve_twosat

__all__ = [
    "BadCertificate",
    "Bipartition",
    "BoundTooLarge",
    "BudgetExceeded",
    "ConfigError",
    "CoverageError",
    "Graph",
    "GraphPartError",
    "InvariantViolation",
    "ParseError",
    "PropertySpec",
    "SearchStats",
    "SpecMismatch",
    "TwoSatFormula",
    "brute_monopolar",
    "brute_pi_partition",
    "brute_subcoloring",
    "build_graph",
    "exclusivity_bound",
    "format_certificate",
    "format_graph",
    "generate_planted",
    "gnp",
    "oracle_profile",
    "parse_certificate_text",
    "parse_graph_text",
    "parse_spec",
    "recognize_bounded_a",
    "recognize_cluster_vs_fsg",
    "recognize_exclusive",
    "recognize_monopolar",
    "recognize_small_fsg",
    "recognize_subcoloring_ka",
    "recognize_subcoloring_total",
    "solve_twosat",
    "verify_certificate",
]
