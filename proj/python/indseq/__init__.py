"""Independent set sequences: exact counting, sequence analysis, bipartite
bounds and exhaustive extremal checks."""

import json

from . import _core
from ._core import (
    SCHEMA,
    BudgetExceeded,
    Error,
    ParseError,
    PreconditionError,
    canonical_graph6,
    enumerate_graphs,
    graph_info,
    is_real_rooted as _is_real_rooted,
    n_min,
    sample_bipartite,
    thresholds,
    to_graph6,
)

__all__ = [
    "SCHEMA", "Error", "ParseError", "BudgetExceeded", "PreconditionError",
    "ind_seq", "total_count", "analyze", "is_real_rooted", "kdn_seq",
    "to_graph6", "canonical_graph6", "graph_info", "enumerate_graphs",
    "sample_bipartite", "bound_profile", "coefficient_sandwich", "as_properties",
    "verify_max_total", "verify_fixed_size", "thresholds", "n_min", "run_cli",
]


def _ints(digits):
    return [int(d) for d in digits]


def _strs(seq):
    return [str(int(a)) for a in seq]


def ind_seq(graph, budget_nodes=None):
    """Independence sequence of a graph6 string or builder expression."""
    if budget_nodes is None:
        return _ints(_core.ind_seq(graph))
    return _ints(_core.ind_seq(graph, budget_nodes))


def total_count(graph):
    return sum(ind_seq(graph))


def analyze(seq):
    return json.loads(_core.analyze_json(_strs(seq)))


def is_real_rooted(seq):
    return _is_real_rooted(_strs(seq))


def kdn_seq(delta, n):
    return _ints(_core.kdn_seq(delta, n))


def bound_profile(n, rows):
    return json.loads(_core.bound_profile_json(n, rows))


def coefficient_sandwich(n, rows):
    return json.loads(_core.sandwich_json(n, rows))


def as_properties(n, rows, p):
    return json.loads(_core.properties_json(n, rows, p))


def verify_max_total(n, delta, x=None, workers=1):
    return json.loads(_core.verify_max_total_json(n, delta, "" if x is None else str(x), workers))


def verify_fixed_size(n, delta, t, workers=1):
    return json.loads(_core.verify_fixed_size_json(n, delta, t, workers))


def run_cli(args):
    """Runs the command line in-process: (exit code, stdout bytes, stderr)."""
    return _core.run_cli([str(a) for a in args])
