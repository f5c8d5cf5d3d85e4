"""Shared result types for structure validation and axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Context, SoftSet, iter_subsets, whole

AXIOMS = ("T0", "T1", "T2", "regular", "T3", "normal", "T4")


@dataclass(frozen=True)
class Violation:
    """A binary combination of members that the family cannot express."""

    op: str  # "union" | "intersection"
    left: SoftSet
    right: SoftSet
    missing: SoftSet

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "missing": self.missing.to_json(),
        }


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


@dataclass(frozen=True)
class AxiomWitness:
    """First failure found by an axiom check, in canonical search order."""

    axiom: str
    domain: tuple[str, ...]
    x: Optional[str] = None
    y: Optional[str] = None
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"axiom": self.axiom, "domain": list(self.domain)}
        if self.x is not None:
            out["x"] = self.x
        if self.y is not None:
            out["y"] = self.y
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    holds: bool
    witness: Optional[AxiomWitness] = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "holds": self.holds,
            "witness": self.witness.to_json() if self.witness else None,
        }


def conjunction(axiom: str, parts: list[AxiomResult]) -> AxiomResult:
    """Combine component axioms, passing through the first failure witness."""
    for part in parts:
        if not part.holds:
            inner = part.witness
            witness = AxiomWitness(
                axiom,
                inner.domain if inner else (),
                inner.x if inner else None,
                inner.y if inner else None,
                f"{part.axiom} fails: {inner.detail if inner else ''}".strip(),
            )
            return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def candidate_domains(
    ctx: Context, members: tuple[SoftSet, ...]
) -> tuple[frozenset[str], ...]:
    """Domains over which separation axioms quantify their soft points.

    The distinct domains of the non-trivial explicit members (null sets
    and the whole set over all parameters are structural and carry no
    separation information), largest first.  A family with no such
    member falls back to every non-empty parameter subset.
    """
    full = whole(ctx, ctx.params)
    seen: set[frozenset[str]] = set()
    for m in members:
        if m.is_null() or m == full:
            continue
        if m.domain:
            seen.add(m.domain)
    if not seen:
        seen = {d for d in iter_subsets(ctx.params) if d}
    return tuple(sorted(seen, key=lambda d: (-len(d), tuple(sorted(d)))))


def point_pairs(ctx: Context):
    """All unordered point pairs (x, y) with x < y in canonical order."""
    labels = ctx.universe
    for i, x in enumerate(labels):
        for y in labels[i + 1 :]:
            yield x, y
