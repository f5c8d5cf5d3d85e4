"""Soft topologies: validation, interior, neighborhoods, continuity, separation.

A topology is presented by its explicitly listed open soft sets.  Every
null soft set and the whole soft set over all parameters are members
whether listed or not, and the family is understood to contain all
unions of its members.  Validation therefore checks that the listed
members can generate a topology: every binary intersection (and union)
of members must again be a union of members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import (
    Context,
    SoftDomainError,
    SoftPoint,
    SoftSet,
    intersect,
    iter_subsets,
    null,
    union,
    whole,
)
from .maps import SoftMap, image, preimage
from .results import (
    AXIOMS,
    AxiomResult,
    AxiomWitness,
    ValidationReport,
    Violation,
    candidate_domains,
    conjunction,
    point_pairs,
)


def format_soft_set(s: SoftSet) -> str:
    return "{" + ", ".join(f"{e}:{{{','.join(sorted(v))}}}" for e, v in s.entries) + "}"


def dedupe_members(ctx: Context, members: Iterable[SoftSet]) -> tuple[SoftSet, ...]:
    out: list[SoftSet] = []
    for m in members:
        if m.ctx != ctx:
            raise ValueError("member does not live in the given context")
        if m not in out:
            out.append(m)
    return tuple(sorted(out, key=SoftSet.sort_key))


@dataclass(frozen=True)
class SoftTopology:
    """Explicitly listed open soft sets over a context."""

    ctx: Context
    members: tuple[SoftSet, ...]

    @classmethod
    def of(cls, ctx: Context, members: Iterable[SoftSet]) -> "SoftTopology":
        return cls(ctx, dedupe_members(ctx, members))

    def iter_members(self) -> Iterator[SoftSet]:
        """Explicit members followed by the implicit ones, without duplicates."""
        listed = set(self.members)
        yield from self.members
        for domain in iter_subsets(self.ctx.params):
            n = null(self.ctx, domain)
            if n not in listed:
                yield n
        w = whole(self.ctx, self.ctx.params)
        if w not in listed:
            yield w

    def is_open(self, soft_set: SoftSet) -> bool:
        return (
            soft_set in self.members
            or soft_set.is_null()
            or soft_set == whole(self.ctx, self.ctx.params)
        )

    def separation_domains(self) -> tuple[frozenset[str], ...]:
        return candidate_domains(self.ctx, self.members)

    def opens_at(self, domain: frozenset[str]) -> list[SoftSet]:
        """All open soft sets whose domain is exactly the given one."""
        opens = [m for m in self.members if m.domain == domain]
        n = null(self.ctx, domain)
        if n not in opens:
            opens.append(n)
        w = whole(self.ctx, self.ctx.params)
        if domain == self.ctx.param_set and w not in opens:
            opens.append(w)
        return opens

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members]}


def interior(tau: SoftTopology, soft_set: SoftSet) -> SoftSet:
    """Union of every open soft set contained in the given one."""
    below = [m for m in tau.iter_members() if m.is_subset_of(soft_set)]
    return union(below)


def check_topology(ctx: Context, members: Iterable[SoftSet]) -> ValidationReport:
    """Can the listed members, with the implicit ones, generate a topology?

    Unions of members are members by construction, so the substantive
    requirement is that binary intersections are unions of members.
    Both combinations are still checked pair by pair so a violation can
    name the offending pair and the inexpressible result.
    """
    tau = SoftTopology.of(ctx, members)
    all_members = list(tau.iter_members())
    violations = []
    for left, right in itertools.combinations(all_members, 2):
        for op, combine in (("union", union), ("intersection", intersect)):
            result = combine([left, right])
            if interior(tau, result) != result:
                violations.append(Violation(op, left, right, result))
    return ValidationReport(not violations, tuple(violations))


def is_nbhd_of_point(tau: SoftTopology, candidate: SoftSet, p: SoftPoint) -> bool:
    """True when some open soft set sits between the point and the candidate."""
    return any(
        m.contains_point(p) and m.is_subset_of(candidate) for m in tau.iter_members()
    )


def is_nbhd_of_set(tau: SoftTopology, candidate: SoftSet, soft_set: SoftSet) -> bool:
    return any(
        soft_set.is_subset_of(m) and m.is_subset_of(candidate)
        for m in tau.iter_members()
    )


def is_tau_continuous(f: SoftMap, tau1: SoftTopology, tau2: SoftTopology) -> bool:
    """Preimages of open soft sets must be open."""
    return all(tau1.is_open(preimage(f, m)) for m in tau2.iter_members())


def is_open_map(f: SoftMap, tau1: SoftTopology, tau2: SoftTopology) -> bool:
    """Images of open soft sets must be open."""
    return all(tau2.is_open(image(f, m)) for m in tau1.iter_members())


def slice_at_parameter(tau: SoftTopology, e: str) -> tuple[frozenset[str], ...]:
    """The classical set family this topology induces at one parameter."""
    if e not in tau.ctx.param_set:
        raise SoftDomainError(f"parameter {e!r} not in context")
    values = {m.value(e) for m in tau.iter_members() if m.defined_at(e)}
    return tuple(sorted(values, key=lambda v: (len(v), tuple(sorted(v)))))


def intersect_topologies(t1: SoftTopology, t2: SoftTopology) -> SoftTopology:
    """Member-wise intersection of two topologies on one context."""
    if t1.ctx != t2.ctx:
        raise ValueError("topologies live in different contexts")
    shared = [m for m in t1.members if m in t2.members]
    return SoftTopology.of(t1.ctx, shared)


def _contains(open_set: SoftSet, x: str, domain: frozenset[str]) -> bool:
    return all(x in open_set.value(e) for e in domain)


def _disjoint(a: SoftSet, b: SoftSet, domain: frozenset[str]) -> bool:
    return all(not (a.value(e) & b.value(e)) for e in domain)


def _separated(opens: list[SoftSet], x: str, y: str, domain: frozenset[str]) -> bool:
    """Is there an open neighborhood of x_A that does not contain y_A?"""
    return any(
        _contains(o, x, domain) and not _contains(o, y, domain) for o in opens
    )


def _check_t0(tau: SoftTopology, axiom: str, domains=None) -> AxiomResult:
    for domain in (tau.separation_domains() if domains is None else domains):
        opens = tau.opens_at(domain)
        for x, y in point_pairs(tau.ctx):
            if not (_separated(opens, x, y, domain) or _separated(opens, y, x, domain)):
                witness = AxiomWitness(
                    axiom,
                    tuple(sorted(domain)),
                    x,
                    y,
                    "no neighborhood of either point excludes the other",
                )
                return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_t1(tau: SoftTopology, axiom: str, domains=None) -> AxiomResult:
    for domain in (tau.separation_domains() if domains is None else domains):
        opens = tau.opens_at(domain)
        for x, y in point_pairs(tau.ctx):
            if not _separated(opens, x, y, domain):
                detail = f"no neighborhood of {x} excludes {y}"
            elif not _separated(opens, y, x, domain):
                detail = f"no neighborhood of {y} excludes {x}"
            else:
                continue
            witness = AxiomWitness(axiom, tuple(sorted(domain)), x, y, detail)
            return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_t2(tau: SoftTopology, axiom: str = "T2", domains=None) -> AxiomResult:
    for domain in (tau.separation_domains() if domains is None else domains):
        opens = tau.opens_at(domain)
        for x, y in point_pairs(tau.ctx):
            found = any(
                _contains(o1, x, domain)
                and _contains(o2, y, domain)
                and _disjoint(o1, o2, domain)
                for o1 in opens
                for o2 in opens
            )
            if not found:
                witness = AxiomWitness(
                    axiom,
                    tuple(sorted(domain)),
                    x,
                    y,
                    "no disjoint pair of neighborhoods",
                )
                return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_regular(tau: SoftTopology, axiom: str = "regular", domains=None) -> AxiomResult:
    for domain in (tau.separation_domains() if domains is None else domains):
        opens = tau.opens_at(domain)
        for x in tau.ctx.universe:
            # F ranges over non-null sets with open complement containing x_A.
            for g in opens:
                if g.is_whole_relative() or not _contains(g, x, domain):
                    continue
                closed_like = g.complement()
                found = any(
                    _contains(o1, x, domain)
                    and closed_like.is_subset_of(o2)
                    and _disjoint(o1, o2, domain)
                    for o1 in opens
                    for o2 in opens
                )
                if not found:
                    witness = AxiomWitness(
                        axiom,
                        tuple(sorted(domain)),
                        x,
                        detail=(
                            f"point {x} and the set {format_soft_set(closed_like)} "
                            "admit no disjoint neighborhoods"
                        ),
                    )
                    return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_normal(tau: SoftTopology, axiom: str = "normal", domains=None) -> AxiomResult:
    for domain in (tau.separation_domains() if domains is None else domains):
        opens = tau.opens_at(domain)
        for p, q in itertools.combinations_with_replacement(opens, 2):
            f, g = p.complement(), q.complement()
            if not _disjoint(f, g, domain):
                continue
            found = any(
                f.is_subset_of(v)
                and g.is_subset_of(w)
                and _disjoint(v, w, domain)
                for v in opens
                for w in opens
            )
            if not found:
                witness = AxiomWitness(
                    axiom,
                    tuple(sorted(domain)),
                    detail=(
                        f"disjoint sets {format_soft_set(f)} and {format_soft_set(g)} "
                        "admit no disjoint neighborhoods"
                    ),
                )
                return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def check_tau_axiom(tau: SoftTopology, axiom: str) -> AxiomResult:
    """Decide a separation axiom, returning a witness on failure."""
    if axiom == "T0":
        return _check_t0(tau, "T0")
    if axiom == "T1":
        return _check_t1(tau, "T1")
    if axiom == "T2":
        return _check_t2(tau)
    if axiom == "regular":
        return _check_regular(tau)
    if axiom == "normal":
        return _check_normal(tau)
    if axiom == "T3":
        return conjunction("T3", [_check_regular(tau), _check_t1(tau, "T1")])
    if axiom == "T4":
        return conjunction("T4", [_check_normal(tau), _check_t1(tau, "T1")])
    raise ValueError(f"unknown axiom {axiom!r}, expected one of {AXIOMS}")
