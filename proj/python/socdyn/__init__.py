"""Four-strategy replicator game: regime classification, simulation, basins."""

import json

from ._core import (
    DegenerateError,
    IntegrationError,
    InvalidParamsError,
    InvalidStateError,
    coexistence_payoff,
    integrate,
    nash_vertices,
    payoff_vector,
    replicator_rhs,
    run_cli,
    sample_simplex,
)
from . import _core


def validate(params, tol=1e-9):
    return json.loads(_core.validate_json(params, tol))


def classify(params, tol=1e-9):
    """Full regime report as a dict (edges, global attractors, welfare)."""
    return json.loads(_core.classify_json(params, tol))


def basins(params, n, seed=42, jobs=0):
    return json.loads(_core.basins_json(params, n, seed, jobs))


__all__ = [
    "DegenerateError",
    "IntegrationError",
    "InvalidParamsError",
    "InvalidStateError",
    "basins",
    "classify",
    "coexistence_payoff",
    "integrate",
    "nash_vertices",
    "payoff_vector",
    "replicator_rhs",
    "run_cli",
    "sample_simplex",
    "validate",
]
