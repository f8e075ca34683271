"""Exact transience analysis for max-plus linear systems."""

from .algebra import (
    NEG_INF,
    MaxPlusMatrix,
    MaxPlusVector,
    identity,
    mat_mul,
    mat_power,
    mat_vec,
    matrix,
    scale,
    unit_vector,
    vector,
    weight,
)
from .bounds import BoundsReport, bounds_for, bounds_report
from .critical import CriticalStructure, analyze, karp_rate, normalize, rate
from .digraph import Digraph, GraphParams, Path, from_matrix, graph_params, to_matrix
from .errors import CapacityError, HorizonError, InputError, PreconditionError, TransienceError
from .oracle import (
    TransientResult,
    check_column_identity,
    check_perron,
    matrix_transient,
    mu_exact,
    system_transient,
)

__all__ = [
    "analyze",
    "bounds_for",
    "bounds_report",
    "BoundsReport",
    "CapacityError",
    "check_column_identity",
    "check_perron",
    "CriticalStructure",
    "Digraph",
    "from_matrix",
    "graph_params",
    "GraphParams",
    "HorizonError",
    "identity",
    "InputError",
    "karp_rate",
    "mat_mul",
    "mat_power",
    "mat_vec",
    "matrix",
    "matrix_transient",
    "MaxPlusMatrix",
    "MaxPlusVector",
    "mu_exact",
    "NEG_INF",
    "normalize",
    "Path",
    "PreconditionError",
    "rate",
    "scale",
    "system_transient",
    "to_matrix",
    "TransienceError",
    "TransientResult",
    "unit_vector",
    "vector",
    "weight",
]

__version__ = "0.1.0"
