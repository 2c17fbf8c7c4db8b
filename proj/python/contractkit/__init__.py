"""Exact simulation and assume/guarantee contract checks for linear systems
in driving-variable form."""

from fractions import Fraction

from ._core import (
    Contract,
    DimensionMismatch,
    DVSystem,
    ParseError,
    SimulationRelation,
    Subspace,
    check_relation,
    compose,
    consistent_subspace,
    implements,
    is_compatible_environment,
    is_consistent_state,
    largest_simulation_relation,
    load_contract,
    load_system,
    refines,
    run_vehicle_experiment,
    saturate,
    simulates,
    span,
)


def as_fractions(rows):
    """Converts a matrix of rational strings (as returned by the bindings)."""
    return [[Fraction(x) for x in row] for row in rows]


__all__ = [
    "Contract",
    "DimensionMismatch",
    "DVSystem",
    "ParseError",
    "SimulationRelation",
    "Subspace",
    "as_fractions",
    "check_relation",
    "compose",
    "consistent_subspace",
    "implements",
    "is_compatible_environment",
    "is_consistent_state",
    "largest_simulation_relation",
    "load_contract",
    "load_system",
    "refines",
    "run_vehicle_experiment",
    "saturate",
    "simulates",
    "span",
]
