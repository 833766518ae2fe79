"""Coloured quiver mutation for higher cluster combinatorics."""

from mquiver.dynkin import AlgebraData, build_algebra, positive_roots
from mquiver.polygon import (
    Polygon,
    complements_of,
    enumerate_angulations,
    fan_angulation,
    mutate_angulation,
    quiver_from_angulation,
)
from mquiver.quiver import (
    ColouredQuiver,
    ContradictionError,
    Violation,
    canonical_form,
    fz_mutate,
    inverse_mutate,
    mutate,
    mutate_alt,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
    seed_from_acyclic,
    validate,
)
from mquiver.tracker import (
    CorruptStateError,
    DecoratedSummand,
    TiltingState,
    enumerate_tilting_states,
    initial_state,
    mutate_state,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraData",
    "ColouredQuiver",
    "ContradictionError",
    "CorruptStateError",
    "DecoratedSummand",
    "Polygon",
    "TiltingState",
    "Violation",
    "build_algebra",
    "canonical_form",
    "complements_of",
    "enumerate_angulations",
    "enumerate_tilting_states",
    "fan_angulation",
    "fz_mutate",
    "initial_state",
    "inverse_mutate",
    "mutate",
    "mutate_alt",
    "mutate_angulation",
    "mutate_state",
    "positive_roots",
    "quiver_from_angulation",
    "quiver_from_json",
    "quiver_to_dot",
    "quiver_to_json",
    "seed_from_acyclic",
    "validate",
]
