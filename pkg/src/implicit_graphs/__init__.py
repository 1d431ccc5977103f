"""Adjacency labeling schemes, logical label decoders and k-DAGs on small graphs."""

from .errors import (BudgetExceeded, ImplicitGraphError, ParseError, UnsupportedFragment,
                     UsageError, VerificationError)
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Graph", "ImplicitGraphError", "ParseError", "UnsupportedFragment",
    "UsageError", "VerificationError", "parse_graph6", "write_graph6",
]
