"""Soft cotopologies: closed soft sets as an independent structure.

A cotopology is not derived from a topology by complement.  Its members
are the closed soft sets; every null soft set and the whole soft set
over all parameters are members whether listed or not, and the family
is understood to contain all intersections of its members.  Validation
dually checks that binary unions (and intersections) of members are
intersections of members.
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
from .topology import dedupe_members, format_soft_set


@dataclass(frozen=True)
class SoftCotopology:
    """Explicitly listed closed soft sets over a context."""

    ctx: Context
    members: tuple[SoftSet, ...]

    @classmethod
    def of(cls, ctx: Context, members: Iterable[SoftSet]) -> "SoftCotopology":
        return cls(ctx, dedupe_members(ctx, members))

    def iter_members(self) -> Iterator[SoftSet]:
        listed = set(self.members)
        yield from self.members
        for domain in iter_subsets(self.ctx.params):
            n = null(self.ctx, domain)
            if n not in listed:
                yield n
        w = whole(self.ctx, self.ctx.params)
        if w not in listed:
            yield w

    def is_closed(self, soft_set: SoftSet) -> bool:
        return (
            soft_set in self.members
            or soft_set.is_null()
            or soft_set == whole(self.ctx, self.ctx.params)
        )

    def separation_domains(self) -> tuple[frozenset[str], ...]:
        return candidate_domains(self.ctx, self.members)

    def closeds_covering(self, domain: frozenset[str]) -> list[SoftSet]:
        """All closed soft sets whose domain contains the given one."""
        return [m for m in self.iter_members() if domain <= m.domain]

    def to_json(self) -> dict:
        return {"members": [m.to_json() for m in self.members]}


def closure(kappa: SoftCotopology, soft_set: SoftSet) -> SoftSet:
    """Intersection of every closed soft set containing the given one.

    The whole soft set always qualifies, so the intersection is never
    over an empty family.  The result keeps the raw intersection domain,
    which may strictly contain the argument's domain.
    """
    above = [m for m in kappa.iter_members() if soft_set.is_subset_of(m)]
    return intersect(above)


def check_cotopology(ctx: Context, members: Iterable[SoftSet]) -> ValidationReport:
    """Can the listed members, with the implicit ones, generate a cotopology?

    Intersections of members are members by construction; the
    substantive requirement is that binary unions are intersections of
    members.  Both combinations are checked pair by pair.
    """
    kappa = SoftCotopology.of(ctx, members)
    all_members = list(kappa.iter_members())
    violations = []
    for left, right in itertools.combinations(all_members, 2):
        for op, combine in (("union", union), ("intersection", intersect)):
            result = combine([left, right])
            if closure(kappa, result) != result:
                violations.append(Violation(op, left, right, result))
    return ValidationReport(not violations, tuple(violations))


def is_remote_nbhd(kappa: SoftCotopology, candidate: SoftSet, p: SoftPoint) -> bool:
    """True when some closed soft set avoids the point and contains the candidate."""
    return any(
        not m.contains_point(p) and candidate.is_subset_of(m)
        for m in kappa.iter_members()
    )


def is_remote_nbhd_of_set(
    kappa: SoftCotopology, candidate: SoftSet, soft_set: SoftSet
) -> bool:
    return any(
        not soft_set.is_subset_of(m) and candidate.is_subset_of(m)
        for m in kappa.iter_members()
    )


def is_strong_remote_nbhd(
    kappa: SoftCotopology, candidate: SoftSet, p: SoftPoint
) -> bool:
    """Pointwise variant: a closed set must cover the candidate's values and
    exclude the point, parameter by parameter, over its own non-empty domain
    inside the candidate's domain."""
    for m in kappa.iter_members():
        c = m.domain
        if not c or not c <= candidate.domain:
            continue
        if all(p.point not in m.value(e) and candidate.value(e) <= m.value(e) for e in c):
            return True
    return False


def is_strong_remote_nbhd_of_set(
    kappa: SoftCotopology, candidate: SoftSet, soft_set: SoftSet
) -> bool:
    """Set variant: the closed witness must escape the given set at every one
    of its parameters while covering the candidate's values."""
    a = soft_set.domain
    for m in kappa.iter_members():
        c = m.domain
        if not c or not c <= candidate.domain or not a <= c:
            continue
        if not all(candidate.value(e) <= m.value(e) for e in c):
            continue
        if all(not soft_set.value(e) <= m.value(e) for e in a):
            return True
    return False


def adherence_points(kappa: SoftCotopology, soft_set: SoftSet) -> tuple[SoftPoint, ...]:
    """Points x_A, at the argument's domain A, whose every remote
    neighborhood at domain A fails to join the complement up to the
    whole set.  Serves as an independent route to the closure."""
    a = soft_set.domain
    if not a:
        return ()
    comp = soft_set.complement()
    u = kappa.ctx.universe_set
    covering = kappa.closeds_covering(a)
    out = []
    for x in kappa.ctx.universe:
        adherent = True
        for k in covering:
            if all(x in k.value(e) for e in a):
                continue  # contains the point, not a remote witness
            if all(k.value(e) | comp.value(e) == u for e in a):
                adherent = False
                break
        if adherent:
            out.append(SoftPoint(kappa.ctx, x, a))
    return tuple(out)


def accumulation(kappa: SoftCotopology, soft_set: SoftSet) -> SoftSet:
    """The soft set of accumulation points of the argument, at its domain."""
    a = soft_set.domain
    if not a:
        return null(kappa.ctx, a)
    comp = soft_set.complement()
    u = kappa.ctx.universe_set
    covering = kappa.closeds_covering(a)
    points = set()
    for x in kappa.ctx.universe:
        accumulates = True
        for k in covering:
            if all(x in k.value(e) for e in a):
                continue
            if all(k.value(e) | {x} | comp.value(e) == u for e in a):
                accumulates = False
                break
        if accumulates:
            points.add(x)
    return SoftSet(kappa.ctx, {e: points for e in a})


def is_kappa_continuous(
    f: SoftMap, kappa1: SoftCotopology, kappa2: SoftCotopology
) -> bool:
    """Preimages of closed soft sets must be closed."""
    return all(kappa1.is_closed(preimage(f, m)) for m in kappa2.iter_members())


def is_closed_map(f: SoftMap, kappa1: SoftCotopology, kappa2: SoftCotopology) -> bool:
    """Images of closed soft sets must be closed."""
    return all(kappa2.is_closed(image(f, m)) for m in kappa1.iter_members())


def slice_at_parameter(kappa: SoftCotopology, e: str) -> tuple[frozenset[str], ...]:
    """The classical closed-set family this cotopology induces at one parameter."""
    if e not in kappa.ctx.param_set:
        raise SoftDomainError(f"parameter {e!r} not in context")
    values = {m.value(e) for m in kappa.iter_members() if m.defined_at(e)}
    return tuple(sorted(values, key=lambda v: (len(v), tuple(sorted(v)))))


def intersect_cotopologies(k1: SoftCotopology, k2: SoftCotopology) -> SoftCotopology:
    if k1.ctx != k2.ctx:
        raise ValueError("cotopologies live in different contexts")
    shared = [m for m in k1.members if m in k2.members]
    return SoftCotopology.of(k1.ctx, shared)


def _contains(closed_set: SoftSet, x: str, domain: frozenset[str]) -> bool:
    return all(x in closed_set.value(e) for e in domain)


def _excludes_pointwise(closed_set: SoftSet, x: str, domain: frozenset[str]) -> bool:
    return all(x not in closed_set.value(e) for e in domain)


def _escapes_pointwise(closed_set: SoftSet, target: SoftSet, domain: frozenset[str]) -> bool:
    return all(not target.value(e) <= closed_set.value(e) for e in domain)


def _covers(a: SoftSet, b: SoftSet, domain: frozenset[str], u: frozenset[str]) -> bool:
    return all(a.value(e) | b.value(e) == u for e in domain)


def _remote_side(
    covering: list[SoftSet], x: str, y: str, domain: frozenset[str]
) -> bool:
    """Is there a remote neighborhood of x_A containing y_A?"""
    return any(
        not _contains(k, x, domain) and _contains(k, y, domain) for k in covering
    )


def _check_t0(kappa: SoftCotopology, axiom: str = "T0", domains=None) -> AxiomResult:
    for domain in (kappa.separation_domains() if domains is None else domains):
        covering = kappa.closeds_covering(domain)
        for x, y in point_pairs(kappa.ctx):
            if not (
                _remote_side(covering, x, y, domain)
                or _remote_side(covering, y, x, domain)
            ):
                witness = AxiomWitness(
                    axiom,
                    tuple(sorted(domain)),
                    x,
                    y,
                    "no closed soft set contains one point while avoiding the other",
                )
                return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_t1(kappa: SoftCotopology, axiom: str = "T1", domains=None) -> AxiomResult:
    for domain in (kappa.separation_domains() if domains is None else domains):
        covering = kappa.closeds_covering(domain)
        for x, y in point_pairs(kappa.ctx):
            if not _remote_side(covering, x, y, domain):
                detail = f"no closed soft set contains {y} while avoiding {x}"
            elif not _remote_side(covering, y, x, domain):
                detail = f"no closed soft set contains {x} while avoiding {y}"
            else:
                continue
            witness = AxiomWitness(axiom, tuple(sorted(domain)), x, y, detail)
            return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_t2(kappa: SoftCotopology, axiom: str = "T2", domains=None) -> AxiomResult:
    u = kappa.ctx.universe_set
    for domain in (kappa.separation_domains() if domains is None else domains):
        covering = kappa.closeds_covering(domain)
        for x, y in point_pairs(kappa.ctx):
            found = any(
                _excludes_pointwise(k, x, domain)
                and _excludes_pointwise(l, y, domain)
                and _covers(k, l, domain, u)
                for k in covering
                for l in covering
            )
            if not found:
                witness = AxiomWitness(
                    axiom,
                    tuple(sorted(domain)),
                    x,
                    y,
                    "no pair of strong remote neighborhoods joins to the whole set",
                )
                return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_regular(kappa: SoftCotopology, axiom: str = "regular", domains=None) -> AxiomResult:
    u = kappa.ctx.universe_set
    for domain in (kappa.separation_domains() if domains is None else domains):
        covering = kappa.closeds_covering(domain)
        closed_at = [
            m for m in kappa.iter_members() if m.domain == domain and not m.is_null()
        ]
        for x in kappa.ctx.universe:
            for k0 in closed_at:
                if _contains(k0, x, domain):
                    continue
                found = any(
                    _excludes_pointwise(k, x, domain)
                    and _escapes_pointwise(l, k0, domain)
                    and _covers(k, l, domain, u)
                    for k in covering
                    for l in covering
                )
                if not found:
                    witness = AxiomWitness(
                        axiom,
                        tuple(sorted(domain)),
                        x,
                        detail=(
                            f"point {x} and the closed set {format_soft_set(k0)} "
                            "admit no covering pair of strong remote neighborhoods"
                        ),
                    )
                    return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def _check_normal(kappa: SoftCotopology, axiom: str = "normal", domains=None) -> AxiomResult:
    u = kappa.ctx.universe_set
    for domain in (kappa.separation_domains() if domains is None else domains):
        covering = kappa.closeds_covering(domain)
        closed_at = [
            m for m in kappa.iter_members() if m.domain == domain and not m.is_null()
        ]
        for k0, l0 in itertools.combinations_with_replacement(closed_at, 2):
            if any(k0.value(e) & l0.value(e) for e in domain):
                continue
            found = any(
                _escapes_pointwise(k, k0, domain)
                and _escapes_pointwise(l, l0, domain)
                and _covers(k, l, domain, u)
                for k in covering
                for l in covering
            )
            if not found:
                witness = AxiomWitness(
                    axiom,
                    tuple(sorted(domain)),
                    detail=(
                        f"disjoint closed sets {format_soft_set(k0)} and "
                        f"{format_soft_set(l0)} admit no covering pair of strong "
                        "remote neighborhoods"
                    ),
                )
                return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def check_kappa_axiom(kappa: SoftCotopology, axiom: str) -> AxiomResult:
    """Decide a separation axiom on the closed-set side, with witness."""
    if axiom == "T0":
        return _check_t0(kappa)
    if axiom == "T1":
        return _check_t1(kappa)
    if axiom == "T2":
        return _check_t2(kappa)
    if axiom == "regular":
        return _check_regular(kappa)
    if axiom == "normal":
        return _check_normal(kappa)
    if axiom == "T3":
        return conjunction("T3", [_check_regular(kappa), _check_t1(kappa)])
    if axiom == "T4":
        return conjunction("T4", [_check_normal(kappa), _check_t1(kappa)])
    raise ValueError(f"unknown axiom {axiom!r}, expected one of {AXIOMS}")
