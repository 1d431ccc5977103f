"""Labeling schemes on bit strings and on tuples of numbers, with membership search."""

from .decoders import (ALL, BUILTIN_DECODERS, EQ, INTERVAL, LT, NONE, BitScheme, LabelDecoder,
                       get_decoder, graph_of_bitscheme, language_decoder, log2ceil, member_bitscheme)
from .interval import graph_of_model, interval_number, k_interval_model, model_labels
from .logical import (INTERVAL_TEXT, LogicalScheme, extend_for_first, extend_for_second,
                      graph_of_labeling, interval_formula, k_interval_formula, member_logical,
                      normalize_labeling, union_scheme)
from .parameters import lambda_foqf
from .search import DEFAULT_BUDGET, Counter, find_labeling, twin_pairs

__all__ = [
    "ALL", "BUILTIN_DECODERS", "BitScheme", "Counter", "DEFAULT_BUDGET", "EQ", "INTERVAL",
    "INTERVAL_TEXT", "LT", "LabelDecoder", "LogicalScheme", "NONE", "extend_for_first",
    "extend_for_second", "find_labeling", "get_decoder", "graph_of_bitscheme",
    "graph_of_labeling", "graph_of_model", "interval_formula", "interval_number",
    "k_interval_formula", "k_interval_model", "lambda_foqf", "language_decoder", "log2ceil",
    "member_bitscheme", "member_logical", "model_labels", "normalize_labeling", "twin_pairs",
    "union_scheme",
]
