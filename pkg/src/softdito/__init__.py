"""Finite soft ditopological spaces.

Soft sets are partial maps from parameters to subsets of a universe;
a ditopology pairs an independent soft topology (open side) and soft
cotopology (closed side) on one context.  The package offers the full
algebra, interior/closure operators, continuity and separation-axiom
checkers, exhaustive enumeration with a theorem suite, and a small
declaration language with a command line front end.

All values are immutable and every operation is a pure function, so
structures can be shared freely across threads or processes.
"""

from .core import (
    Context,
    SoftDomainError,
    SoftPoint,
    SoftSet,
    all_soft_sets,
    intersect,
    is_subset,
    null,
    point_in,
    soft_point,
    union,
    whole,
)
from .cotopology import (
    SoftCotopology,
    accumulation,
    adherence_points,
    check_cotopology,
    check_kappa_axiom,
    closure,
    intersect_cotopologies,
    is_closed_map,
    is_kappa_continuous,
    is_remote_nbhd,
    is_remote_nbhd_of_set,
    is_strong_remote_nbhd,
    is_strong_remote_nbhd_of_set,
)
from .counterexamples import PROPERTIES, find_counterexample
from .ditopology import (
    Ditopology,
    check_dito_axiom,
    check_ditopology,
    dito_closure,
    dito_interior,
    is_coarser,
    is_dito_continuous,
    is_dito_nbhd,
)
from .dsl import ParseError, SpecDocument, SpecError, parse
from .enumeration import (
    BoundsError,
    EnumBounds,
    bounded_context,
    enumerate_cotopologies,
    enumerate_maps,
    enumerate_soft_sets,
    enumerate_topologies,
)
from .maps import SoftMap, compose, identity_map, image, preimage, restrict_to_image
from .results import AXIOMS, AxiomResult, AxiomWitness, ValidationReport, Violation
from .theorems import TheoremReport, run_theorem_suite
from .topology import (
    SoftTopology,
    check_tau_axiom,
    check_topology,
    interior,
    intersect_topologies,
    is_nbhd_of_point,
    is_nbhd_of_set,
    is_open_map,
    is_tau_continuous,
)

__all__ = [name for name in dir() if not name.startswith("_")]
