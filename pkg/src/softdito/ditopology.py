"""Soft ditopological spaces: an independent topology/cotopology pair.

Nothing relates the two sides; in particular no duality law between
interior and closure is assumed or enforced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Context, SoftPoint, SoftSet
from .cotopology import (
    SoftCotopology,
    check_cotopology,
    check_kappa_axiom,
    closure,
    is_kappa_continuous,
    is_remote_nbhd,
)
from .maps import SoftMap
from .results import AXIOMS, AxiomResult, AxiomWitness, ValidationReport
from .topology import (
    SoftTopology,
    check_tau_axiom,
    check_topology,
    interior,
    is_nbhd_of_point,
    is_tau_continuous,
)


@dataclass(frozen=True)
class Ditopology:
    ctx: Context
    tau: SoftTopology
    kappa: SoftCotopology

    def __post_init__(self) -> None:
        if self.tau.ctx != self.ctx or self.kappa.ctx != self.ctx:
            raise ValueError("topology and cotopology must share the context")

    def to_json(self) -> dict:
        return {"tau": self.tau.to_json(), "kappa": self.kappa.to_json()}


@dataclass(frozen=True)
class DitopologyReport:
    tau: ValidationReport
    kappa: ValidationReport

    @property
    def ok(self) -> bool:
        return self.tau.ok and self.kappa.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "tau": self.tau.to_json(), "kappa": self.kappa.to_json()}


def check_ditopology(
    ctx: Context,
    tau_members: Iterable[SoftSet],
    kappa_members: Iterable[SoftSet],
) -> DitopologyReport:
    """Validate both sides; violations stay tagged by side."""
    return DitopologyReport(
        check_topology(ctx, tau_members), check_cotopology(ctx, kappa_members)
    )


def is_coarser(d1: Ditopology, d2: Ditopology) -> bool:
    """Every member of the second pair must belong to the first pair.

    This is the literal written condition; it inverts the inclusion
    direction used for plain topologies, and is kept as written.
    """
    if d1.ctx != d2.ctx:
        raise ValueError("ditopologies live in different contexts")
    return all(d1.tau.is_open(m) for m in d2.tau.members) and all(
        d1.kappa.is_closed(m) for m in d2.kappa.members
    )


def is_dito_nbhd(
    dito: Ditopology, open_side: SoftSet, remote_side: SoftSet, p: SoftPoint
) -> bool:
    """A pair neighborhood: ordinary on the open side, remote on the closed side."""
    return is_nbhd_of_point(dito.tau, open_side, p) and is_remote_nbhd(
        dito.kappa, remote_side, p
    )


def dito_interior(dito: Ditopology, soft_set: SoftSet) -> SoftSet:
    return interior(dito.tau, soft_set)


def dito_closure(dito: Ditopology, soft_set: SoftSet) -> SoftSet:
    return closure(dito.kappa, soft_set)


def is_dito_continuous(f: SoftMap, d1: Ditopology, d2: Ditopology) -> bool:
    return is_tau_continuous(f, d1.tau, d2.tau) and is_kappa_continuous(
        f, d1.kappa, d2.kappa
    )


def check_dito_axiom(dito: Ditopology, axiom: str) -> AxiomResult:
    """Conjunction of the open-side and closed-side axioms; the witness
    says which side failed."""
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}, expected one of {AXIOMS}")
    tau_result = check_tau_axiom(dito.tau, axiom)
    if not tau_result.holds:
        inner = tau_result.witness
        witness = AxiomWitness(
            axiom,
            inner.domain if inner else (),
            inner.x if inner else None,
            inner.y if inner else None,
            f"open side: {inner.detail if inner else ''}".strip(),
        )
        return AxiomResult(axiom, False, witness)
    kappa_result = check_kappa_axiom(dito.kappa, axiom)
    if not kappa_result.holds:
        inner = kappa_result.witness
        witness = AxiomWitness(
            axiom,
            inner.domain if inner else (),
            inner.x if inner else None,
            inner.y if inner else None,
            f"closed side: {inner.detail if inner else ''}".strip(),
        )
        return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)
