"""Atomic summands of graph products of von Neumann algebras, exactly.

The heavy lifting happens in the C++ core; this package adds dict-friendly
wrappers around the JSON entry points so algebra specifications can be plain
Python dicts in the same schema the command-line tool reads::

    {"v": {"summands": [{"weight": "1/2", "eigenvalues": ["1/2", "1/2"]},
                        {"weight": "1/2", "infinite": True}],
           "diffuse": False}, ...}

Exact scalars are rational strings like ``"3/10"`` (or integers); the float
entry points take ordinary numbers and report 12-significant-digit strings.
"""

import json as _json

from ._core import (
    DEFAULT_CAP,
    DEFAULT_ROOT_PRECISION,
    CapExceeded,
    DomainError,
    Graph,
    cartier_foata_check,
    canonical_form,
    classify_boundary_point,
    clique_value,
    clique_value_float,
    count_all_word_classes,
    count_reduced_classes,
    enumerate_reduced_classes,
    is_reduced,
    partial_derivative,
    projection_meet,
    projection_meet_float,
    region_membership,
    region_membership_float,
    rho,
)
from . import _core as _c

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_ROOT_PRECISION",
    "CapExceeded",
    "DomainError",
    "Graph",
    "cartier_foata_check",
    "canonical_form",
    "classify_boundary_point",
    "classify_selection",
    "clique_value",
    "clique_value_float",
    "count_all_word_classes",
    "count_reduced_classes",
    "enumerate_atoms",
    "enumerate_atoms_float",
    "enumerate_reduced_classes",
    "is_reduced",
    "partial_derivative",
    "projection_meet",
    "projection_meet_float",
    "region_membership",
    "region_membership_float",
    "rho",
    "truncated_series_crosscheck",
]


def enumerate_atoms(graph, algebras, cap=DEFAULT_CAP):
    """All type I factor summands for the given per-vertex algebra dicts."""
    return _json.loads(_c.enumerate_atoms_json(graph, _json.dumps(algebras), cap))


def enumerate_atoms_float(graph, algebras, eps=1e-9, cap=DEFAULT_CAP):
    """Float-mode enumeration for algebra data with irrational weights."""
    return _json.loads(_c.enumerate_atoms_float_json(graph, _json.dumps(algebras), eps, cap))


def classify_selection(graph, algebras, selection):
    """Report for one summand selection, or None when it yields no atom."""
    text = _c.classify_selection_json(graph, _json.dumps(algebras), selection)
    return None if text is None else _json.loads(text)


def truncated_series_crosscheck(graph, algebras, selection, max_len, cap=DEFAULT_CAP):
    """Partial word-series sum against the closed form, both exact strings."""
    return _c.truncated_series_crosscheck(graph, _json.dumps(algebras), selection, max_len, cap)
