"""Exhaustive verification of the algebraic and topological laws.

Every law is checked on every enumerated instance within the given
bounds.  A law that holds everywhere reports ``verified``; a law that
fails on some instance reports ``discrepancy-logged`` together with a
replayable witness; a non-implication claim reports ``counterexample``
with the witness that realizes it.  Nothing is ever silently skipped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from . import cotopology as cotopo
from . import topology as topo
from .core import (
    Context,
    SoftPoint,
    SoftSet,
    intersect,
    iter_subsets,
    null,
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
    is_strong_remote_nbhd,
)
from .ditopology import Ditopology, check_dito_axiom, is_dito_continuous
from .dsl import render_context, render_family, render_map, render_softset
from .enumeration import (
    EnumBounds,
    enumerate_cotopologies,
    enumerate_maps,
    enumerate_soft_sets,
    enumerate_topologies,
)
from .maps import SoftMap, compose, identity_map, image, preimage, restrict_to_image
from .topology import (
    SoftTopology,
    check_tau_axiom,
    check_topology,
    interior,
    intersect_topologies,
    is_nbhd_of_point,
    is_open_map,
    is_tau_continuous,
)

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
DISCREPANCY = "discrepancy-logged"


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    instances: int
    status: str
    witness: Optional[dict] = None
    note: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "instances": self.instances,
            "status": self.status,
            "witness": self.witness,
            "note": self.note,
        }


class SuiteEnv:
    """Shared enumeration state for one suite run.

    Structure families are built on first use: the algebra checks can
    then run at bounds where family enumeration would be expensive.
    """

    def __init__(self, bounds: EnumBounds):
        self.bounds = bounds
        self.ctx = bounds.context()
        self.sets = enumerate_soft_sets(self.ctx)
        self.nonempty_domains = [d for d in iter_subsets(self.ctx.params) if d]
        self.points = [
            SoftPoint(self.ctx, x, d)
            for d in self.nonempty_domains
            for x in self.ctx.universe
        ]
        self.maps = enumerate_maps(self.ctx, self.ctx)
        self.subset_pairs = [
            (f, g) for f in self.sets for g in self.sets if f.is_subset_of(g)
        ]
        self.whole = whole(self.ctx, self.ctx.params)
        self.null_full = null(self.ctx, self.ctx.params)
        self._topologies: list[SoftTopology] | None = None
        self._cotopologies: list[SoftCotopology] | None = None

    @property
    def topologies(self) -> list[SoftTopology]:
        if self._topologies is None:
            self._topologies = enumerate_topologies(self.ctx, self.bounds)
        return self._topologies

    @property
    def cotopologies(self) -> list[SoftCotopology]:
        if self._cotopologies is None:
            self._cotopologies = enumerate_cotopologies(self.ctx, self.bounds)
        return self._cotopologies


def _dsl_for(
    ctx: Context,
    softsets: dict[str, SoftSet] | None = None,
    families: dict[str, tuple[str, tuple[SoftSet, ...]]] | None = None,
    maps: dict[str, SoftMap] | None = None,
) -> str:
    """Render a small document declaring the pieces a witness refers to."""
    lines = [render_context("C", ctx)]
    named: dict[SoftSet, str] = {}
    softsets = dict(softsets or {})
    for name, kind_members in (families or {}).items():
        for m in kind_members[1]:
            if m not in named and m not in softsets.values():
                softsets[f"M{len(softsets) + 1}"] = m
    for name, s in softsets.items():
        named[s] = name
        lines.append(render_softset(name, "C", s))
    for name, (kind, members) in (families or {}).items():
        lines.append(render_family(kind, name, "C", [named[m] for m in members]))
    for name, f in (maps or {}).items():
        lines.append(render_map(name, "C", "C", f))
    return "\n".join(lines) + "\n"


def _family_witness(ctx: Context, kind: str, members, **extra) -> dict:
    members = tuple(members)
    out = {
        "context": ctx.to_json(),
        "members": [m.to_json() for m in members],
        "dsl": _dsl_for(ctx, families={"S": (kind, members)}),
    }
    out.update(extra)
    return out


def _sets_witness(ctx: Context, **named_sets: SoftSet) -> dict:
    out = {"context": ctx.to_json()}
    for name, s in named_sets.items():
        out[name] = s.to_json()
    out["dsl"] = _dsl_for(ctx, softsets=dict(named_sets))
    return out


def _verify(theorem: str, instances: int, failures: list[dict], note: str | None = None) -> TheoremReport:
    if failures:
        return TheoremReport(theorem, instances, DISCREPANCY, failures[0], note)
    return TheoremReport(theorem, instances, VERIFIED, None, note)


# ---------------------------------------------------------------- algebra


def _check_de_morgan(env: SuiteEnv) -> TheoremReport:
    """Complement of a meet is below the join of complements, and dually.

    Also reports the domain configurations on which the inclusions are
    equalities: on a family sharing one domain both sides coincide, so
    strictness can only come from members with differing domains.
    """
    failures: list[dict] = []
    strict_meet = strict_join = None
    strict_count = 0
    mixed_count = 0
    instances = 0
    for size in (2, 3):
        for family in itertools.combinations(env.sets, size):
            instances += 1
            family = list(family)
            comps = [m.complement() for m in family]
            meet_side = intersect(family).complement()
            join_of_comps = union(comps)
            join_side = union(family).complement()
            meet_of_comps = intersect(comps)
            if not meet_side.is_subset_of(join_of_comps):
                failures.append(_sets_witness(env.ctx, **{f"F{i}": m for i, m in enumerate(family)}))
            if not meet_of_comps.is_subset_of(join_side):
                failures.append(_sets_witness(env.ctx, **{f"F{i}": m for i, m in enumerate(family)}))
            equal_domains = len({m.domain for m in family}) == 1
            strict = meet_side != join_of_comps or meet_of_comps != join_side
            if not equal_domains:
                mixed_count += 1
            if strict:
                strict_count += 1
                if equal_domains:
                    # impossible by the pointwise argument; treat as a defect
                    failures.append(
                        _sets_witness(env.ctx, **{f"F{i}": m for i, m in enumerate(family)})
                    )
            if strict_meet is None and meet_side != join_of_comps:
                strict_meet = family
            if strict_join is None and meet_of_comps != join_side:
                strict_join = family
    witness = None
    if strict_meet is not None and strict_join is not None:
        witness = {
            "strict_meet_family": _sets_witness(
                env.ctx, **{f"F{i}": m for i, m in enumerate(strict_meet)}
            ),
            "strict_join_family": _sets_witness(
                env.ctx, **{f"F{i}": m for i, m in enumerate(strict_join)}
            ),
        }
    if failures:
        return TheoremReport("de-morgan-inclusions", instances, DISCREPANCY, failures[0])
    note = (
        "both inclusions hold on every family; equality on every shared-domain "
        f"family; strict on {strict_count} of {mixed_count} mixed-domain families"
    )
    return TheoremReport("de-morgan-inclusions", instances, VERIFIED, witness, note)


def _check_null_whole_absorption(env: SuiteEnv) -> TheoremReport:
    """Stated absorption laws for the null and whole sets over all parameters.

    The meet halves hold on every instance.  The join halves assert a
    result with the small domain, while the union operation always
    returns the full domain, so they fail whenever the other operand has
    a proper domain.  The discrepancy is logged with its minimal case.
    """
    phi_e, u_e = env.null_full, env.whole
    instances = 0
    first_failure = None
    meet_ok = True
    join_failures = 0
    for f in env.sets:
        instances += 1
        a = f.domain
        if intersect([phi_e, f]) != null(env.ctx, a):
            meet_ok = False
        if intersect([u_e, f]) != f:
            meet_ok = False
        claims = [
            ("null-join", union([phi_e, f]), f),
            ("whole-join", union([u_e, f]), whole(env.ctx, a)),
        ]
        for claim, actual, expected in claims:
            if actual != expected:
                join_failures += 1
                if first_failure is None:
                    first_failure = dict(
                        _sets_witness(env.ctx, F=f),
                        claim=claim,
                        stated=expected.to_json(),
                        computed=actual.to_json(),
                    )
    note = (
        "meet laws hold on every instance; "
        f"join laws fail on {join_failures} claims: the union keeps the full "
        "domain, padding the smaller operand with empty values"
    )
    if not meet_ok:
        note = "meet laws unexpectedly failed"
    status = DISCREPANCY if first_failure else VERIFIED
    return TheoremReport("null-whole-absorption", instances, status, first_failure, note)


def _check_subset_meet_join(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.sets:
        for g in env.sets:
            instances += 1
            sub = f.is_subset_of(g)
            if sub != (intersect([f, g]) == f) or sub != (union([f, g]) == g):
                failures.append(_sets_witness(env.ctx, F=f, G=g))
    return _verify("subset-meet-join-equivalence", instances, failures)


def _check_complement_order(env: SuiteEnv) -> TheoremReport:
    """Complement interacts with order: disjointness, involution partners,
    antitone complement on equal domains, transitivity, meet monotonicity."""
    failures = []
    instances = 0
    unrestricted_witness = None
    for f in env.sets:
        instances += 1
        if union([f, f.complement()]) != whole(env.ctx, f.domain):
            failures.append(_sets_witness(env.ctx, F=f))
        if intersect([f, f.complement()]) != null(env.ctx, f.domain):
            failures.append(_sets_witness(env.ctx, F=f))
    for f, g in itertools.product(env.sets, env.sets):
        instances += 1
        if f.domain <= g.domain and intersect([f, g]).is_null():
            if not f.is_subset_of(g.complement()):
                failures.append(_sets_witness(env.ctx, F=f, G=g))
        if f.domain == g.domain:
            disjoint = intersect([f, g]) == null(env.ctx, f.domain)
            if disjoint != f.is_subset_of(g.complement()):
                failures.append(_sets_witness(env.ctx, F=f, G=g))
            if f.is_subset_of(g) != g.complement().is_subset_of(f.complement()):
                failures.append(_sets_witness(env.ctx, F=f, G=g))
        elif (
            unrestricted_witness is None
            and f.is_subset_of(g)
            and not g.complement().is_subset_of(f.complement())
        ):
            unrestricted_witness = _sets_witness(env.ctx, F=f, G=g)
        if f.is_subset_of(g.complement()) and not intersect([f, g]).is_null():
            failures.append(_sets_witness(env.ctx, F=f, G=g))
    for f, g in env.subset_pairs:
        for h, s in env.subset_pairs:
            instances += 1
            if not intersect([f, h]).is_subset_of(intersect([g, s])):
                failures.append(_sets_witness(env.ctx, F=f, G=g, H=h, S=s))
    for f, g in env.subset_pairs:
        for h in env.sets:
            instances += 1
            if g.is_subset_of(h) and not f.is_subset_of(h):
                failures.append(_sets_witness(env.ctx, F=f, G=g, H=h))
    note = "antitone complement checked on equal domains"
    if unrestricted_witness is not None:
        note += "; without that restriction the law fails (see witness)"
    report = _verify("complement-order-laws", instances, failures, note)
    if report.status == VERIFIED and unrestricted_witness is not None:
        return TheoremReport(report.theorem, instances, VERIFIED, unrestricted_witness, note)
    return report


def _check_image_laws(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        psi = f.psi_map
        for d in iter_subsets(env.ctx.params):
            instances += 1
            if image(f, null(env.ctx, d)) != null(env.ctx, {psi[e] for e in d}):
                failures.append({"map": f.to_json(), "domain": sorted(d)})
        if not image(f, env.whole).is_subset_of(env.whole):
            failures.append({"map": f.to_json()})
        for a, b in itertools.combinations(env.sets, 2):
            instances += 1
            if image(f, union([a, b])) != union([image(f, a), image(f, b)]):
                failures.append(dict(_sets_witness(env.ctx, F=a, G=b), map=f.to_json()))
            if not image(f, intersect([a, b])).is_subset_of(
                intersect([image(f, a), image(f, b)])
            ):
                failures.append(dict(_sets_witness(env.ctx, F=a, G=b), map=f.to_json()))
        for a, b in env.subset_pairs:
            instances += 1
            if not image(f, a).is_subset_of(image(f, b)):
                failures.append(dict(_sets_witness(env.ctx, F=a, G=b), map=f.to_json()))
    return _verify("image-laws", instances, failures)


def _check_preimage_laws(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        instances += 2
        if preimage(f, env.whole) != env.whole:
            failures.append({"map": f.to_json()})
        if preimage(f, env.null_full) != env.null_full:
            failures.append({"map": f.to_json()})
        for a, b in itertools.combinations(env.sets, 2):
            instances += 1
            if preimage(f, union([a, b])) != union([preimage(f, a), preimage(f, b)]):
                failures.append(dict(_sets_witness(env.ctx, F=a, G=b), map=f.to_json()))
            if preimage(f, intersect([a, b])) != intersect(
                [preimage(f, a), preimage(f, b)]
            ):
                failures.append(dict(_sets_witness(env.ctx, F=a, G=b), map=f.to_json()))
    return _verify("preimage-laws", instances, failures)


def _check_image_preimage_galois(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        range_set = image(f, env.whole)
        for a in env.sets:
            instances += 1
            back = image(f, preimage(f, a))
            if not back.is_subset_of(a):
                failures.append(dict(_sets_witness(env.ctx, F=a), map=f.to_json()))
            if preimage(f, a.complement()) != preimage(f, a).complement():
                failures.append(dict(_sets_witness(env.ctx, F=a), map=f.to_json()))
            if not a.is_subset_of(preimage(f, image(f, a))):
                failures.append(dict(_sets_witness(env.ctx, F=a), map=f.to_json()))
            if back != intersect([a, range_set]):
                failures.append(dict(_sets_witness(env.ctx, F=a), map=f.to_json()))
    return _verify("image-preimage-galois", instances, failures)


def _check_composition_preimage(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        for g in env.maps:
            gf = compose(g, f)
            for a in env.sets:
                instances += 1
                if preimage(gf, a) != preimage(f, preimage(g, a)):
                    failures.append(
                        dict(_sets_witness(env.ctx, F=a), inner=f.to_json(), outer=g.to_json())
                    )
    return _verify("composition-preimage-identity", instances, failures)


# ------------------------------------------------------------- structures


def _check_topology_intersection(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t1, t2 in itertools.combinations_with_replacement(env.topologies, 2):
        instances += 1
        meet = intersect_topologies(t1, t2)
        if not check_topology(env.ctx, meet.members).ok:
            failures.append(_family_witness(env.ctx, "topology", meet.members))
    return _verify("topology-family-intersection", instances, failures)


def _check_cotopology_intersection(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k1, k2 in itertools.combinations_with_replacement(env.cotopologies, 2):
        instances += 1
        meet = intersect_cotopologies(k1, k2)
        if not check_cotopology(env.ctx, meet.members).ok:
            failures.append(_family_witness(env.ctx, "cotopology", meet.members))
    return _verify("cotopology-family-intersection", instances, failures)


def _classical_topology(slices, universe: frozenset[str]) -> bool:
    family = set(slices)
    if frozenset() not in family or universe not in family:
        return False
    return all(
        a | b in family and a & b in family
        for a in family
        for b in family
    )


def _check_topology_slices(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t in env.topologies:
        for e in env.ctx.params:
            instances += 1
            if not _classical_topology(topo.slice_at_parameter(t, e), env.ctx.universe_set):
                failures.append(_family_witness(env.ctx, "topology", t.members, parameter=e))
    return _verify("topology-parameter-slices", instances, failures)


def _check_cotopology_slices(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        for e in env.ctx.params:
            instances += 1
            if not _classical_topology(cotopo.slice_at_parameter(k, e), env.ctx.universe_set):
                failures.append(_family_witness(env.ctx, "cotopology", k.members, parameter=e))
    return _verify("cotopology-parameter-slices", instances, failures)


def _check_interior_basic(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t in env.topologies:
        for a in env.sets:
            instances += 1
            inner = interior(t, a)
            ok = (
                inner.is_subset_of(a)
                and interior(t, inner) == inner
                and t.is_open(inner)
                and all(
                    m.is_subset_of(inner)
                    for m in t.iter_members()
                    if m.is_subset_of(a)
                )
                and t.is_open(a) == (inner == a)
            )
            if not ok:
                failures.append(
                    dict(_family_witness(env.ctx, "topology", t.members), set=a.to_json())
                )
        for d in iter_subsets(env.ctx.params):
            instances += 1
            if interior(t, null(env.ctx, d)) != null(env.ctx, d):
                failures.append(_family_witness(env.ctx, "topology", t.members))
        if interior(t, env.whole) != env.whole:
            failures.append(_family_witness(env.ctx, "topology", t.members))
    return _verify("interior-basic-laws", instances, failures)


def _check_interior_algebra(env: SuiteEnv) -> TheoremReport:
    failures = []
    strict = None
    instances = 0
    for t in env.topologies:
        for a, b in itertools.product(env.sets, env.sets):
            instances += 1
            ia, ib = interior(t, a), interior(t, b)
            if a.is_subset_of(b) and not ia.is_subset_of(ib):
                failures.append(
                    dict(_family_witness(env.ctx, "topology", t.members), F=a.to_json(), G=b.to_json())
                )
            if interior(t, intersect([a, b])) != intersect([ia, ib]):
                failures.append(
                    dict(_family_witness(env.ctx, "topology", t.members), F=a.to_json(), G=b.to_json())
                )
            join_interior = interior(t, union([a, b]))
            if not union([ia, ib]).is_subset_of(join_interior):
                failures.append(
                    dict(_family_witness(env.ctx, "topology", t.members), F=a.to_json(), G=b.to_json())
                )
            if strict is None and join_interior != union([ia, ib]):
                strict = dict(
                    _family_witness(env.ctx, "topology", t.members),
                    F=a.to_json(),
                    G=b.to_json(),
                )
    note = "join inclusion strict somewhere" if strict else "join inclusion never strict in bounds"
    if failures:
        return TheoremReport("interior-algebra-laws", instances, DISCREPANCY, failures[0], note)
    return TheoremReport("interior-algebra-laws", instances, VERIFIED, strict, note)


def _check_closure_basic(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        for a in env.sets:
            instances += 1
            cl = closure(k, a)
            ok = (
                a.is_subset_of(cl)
                and closure(k, cl) == cl
                and k.is_closed(cl)
                and all(
                    cl.is_subset_of(m)
                    for m in k.iter_members()
                    if a.is_subset_of(m)
                )
                and k.is_closed(a) == (cl == a)
            )
            if not ok:
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), set=a.to_json())
                )
        for d in iter_subsets(env.ctx.params):
            instances += 1
            if closure(k, null(env.ctx, d)) != null(env.ctx, d):
                failures.append(_family_witness(env.ctx, "cotopology", k.members))
        if closure(k, env.whole) != env.whole:
            failures.append(_family_witness(env.ctx, "cotopology", k.members))
    return _verify("closure-basic-laws", instances, failures)


def _check_closure_algebra(env: SuiteEnv) -> TheoremReport:
    failures = []
    strict = None
    instances = 0
    for k in env.cotopologies:
        for a, b in itertools.product(env.sets, env.sets):
            instances += 1
            ca, cb = closure(k, a), closure(k, b)
            if a.is_subset_of(b) and not ca.is_subset_of(cb):
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), F=a.to_json(), G=b.to_json())
                )
            if closure(k, union([a, b])) != union([ca, cb]):
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), F=a.to_json(), G=b.to_json())
                )
            meet_closure = closure(k, intersect([a, b]))
            if not meet_closure.is_subset_of(intersect([ca, cb])):
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), F=a.to_json(), G=b.to_json())
                )
            if strict is None and meet_closure != intersect([ca, cb]):
                strict = dict(
                    _family_witness(env.ctx, "cotopology", k.members),
                    F=a.to_json(),
                    G=b.to_json(),
                )
    note = "meet inclusion strict somewhere" if strict else "meet inclusion never strict in bounds"
    if failures:
        return TheoremReport("closure-algebra-laws", instances, DISCREPANCY, failures[0], note)
    return TheoremReport("closure-algebra-laws", instances, VERIFIED, strict, note)


def _check_closure_adherence(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    widened = 0
    for k in env.cotopologies:
        for a in env.sets:
            if not a.domain:
                continue
            instances += 1
            cl = closure(k, a)
            if cl.domain != a.domain:
                widened += 1
            via_closure = {
                x
                for x in env.ctx.universe
                if cl.contains_point(SoftPoint(env.ctx, x, a.domain))
            }
            via_adherence = {p.point for p in adherence_points(k, a)}
            if via_closure != via_adherence:
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), set=a.to_json())
                )
    note = f"{widened} instances widened the closure domain beyond the argument"
    return _verify("closure-adherence-agreement", instances, failures, note)


def _check_accumulation_adherence(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        for a in env.sets:
            if not a.domain:
                continue
            instances += 1
            accum = accumulation(k, a)
            adherent = {p.point for p in adherence_points(k, a)}
            points = accum.value(next(iter(a.domain))) if a.domain else frozenset()
            if not points <= adherent:
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), set=a.to_json())
                )
    return _verify("accumulation-below-adherence", instances, failures)


def _check_accumulation_union_closed(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        for a in env.sets:
            instances += 1
            if not k.is_closed(union([a, accumulation(k, a)])):
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), set=a.to_json())
                )
    return _verify("accumulation-union-closed", instances, failures)


def _check_closure_decomposition(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    skipped = 0
    for k in env.cotopologies:
        for a in env.sets:
            cl = closure(k, a)
            if cl.domain != a.domain:
                skipped += 1
                continue
            instances += 1
            if cl != union([a, accumulation(k, a)]):
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), set=a.to_json())
                )
    note = f"{skipped} instances skipped where the closure domain widened"
    return _verify("closure-accumulation-decomposition", instances, failures, note)


def _check_remote_basics(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        for p in env.points:
            instances += 1
            if not is_remote_nbhd(k, env.null_full, p):
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), point=p.to_json())
                )
            for small, big in env.subset_pairs:
                if is_remote_nbhd(k, big, p) and not is_remote_nbhd(k, small, p):
                    failures.append(
                        dict(
                            _family_witness(env.ctx, "cotopology", k.members),
                            point=p.to_json(),
                            small=small.to_json(),
                            big=big.to_json(),
                        )
                    )
    return _verify("remote-neighborhood-basics", instances, failures)


def _check_closed_iff_remote(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        for a in env.sets:
            instances += 1
            outside = [
                p
                for p in env.points
                if p.domain <= a.domain and not a.contains_point(p)
            ]
            remote_everywhere = all(is_remote_nbhd(k, a, p) for p in outside)
            if k.is_closed(a) != remote_everywhere:
                failures.append(
                    dict(_family_witness(env.ctx, "cotopology", k.members), set=a.to_json())
                )
    return _verify("closed-iff-remote-everywhere", instances, failures)


# ------------------------------------------------------------- continuity


def _check_identity_continuity(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    ident = identity_map(env.ctx)
    for t1, t2 in itertools.product(env.topologies, env.topologies):
        instances += 1
        expected = all(t1.is_open(m) for m in t2.members)
        if is_tau_continuous(ident, t1, t2) != expected:
            failures.append(
                {
                    "source": _family_witness(env.ctx, "topology", t1.members),
                    "target": _family_witness(env.ctx, "topology", t2.members),
                }
            )
    return _verify("identity-continuity-coarseness", instances, failures)


def _check_local_global_continuity(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        psi = f.psi_map
        phi = f.phi_map
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            instances += 1
            local = True
            for p in env.points:
                image_domain = frozenset(psi[e] for e in p.domain)
                image_point = SoftPoint(env.ctx, phi[p.point], image_domain)
                for g in env.sets:
                    if g.domain != image_domain:
                        continue
                    if not is_nbhd_of_point(t2, g, image_point):
                        continue
                    if not is_nbhd_of_point(t1, preimage(f, g), p):
                        local = False
                        break
                if not local:
                    break
            if local != is_tau_continuous(f, t1, t2):
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "topology", t1.members),
                        "target": _family_witness(env.ctx, "topology", t2.members),
                    }
                )
    return _verify("continuity-local-global-agreement", instances, failures)


def _check_tau_composition(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f, g in itertools.product(env.maps, env.maps):
        for t1, t2, t3 in itertools.product(env.topologies, repeat=3):
            if not (is_tau_continuous(f, t1, t2) and is_tau_continuous(g, t2, t3)):
                continue
            instances += 1
            if not is_tau_continuous(compose(g, f), t1, t3):
                failures.append({"inner": f.to_json(), "outer": g.to_json()})
    return _verify("tau-continuity-composition", instances, failures)


def _check_interior_continuity_criterion(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            instances += 1
            criterion = all(
                preimage(f, interior(t2, a)).is_subset_of(interior(t1, preimage(f, a)))
                for a in env.sets
            )
            if criterion != is_tau_continuous(f, t1, t2):
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "topology", t1.members),
                        "target": _family_witness(env.ctx, "topology", t2.members),
                    }
                )
    return _verify("continuity-interior-criterion", instances, failures)


def _check_open_map_criterion(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            instances += 1
            criterion = all(
                image(f, interior(t1, a)).is_subset_of(interior(t2, image(f, a)))
                for a in env.sets
            )
            if criterion != is_open_map(f, t1, t2):
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "topology", t1.members),
                        "target": _family_witness(env.ctx, "topology", t2.members),
                    }
                )
    return _verify("open-map-interior-criterion", instances, failures)


def _check_open_map_composition(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f, g in itertools.product(env.maps, env.maps):
        for t1, t2, t3 in itertools.product(env.topologies, repeat=3):
            if not (is_open_map(f, t1, t2) and is_open_map(g, t2, t3)):
                continue
            instances += 1
            if not is_open_map(compose(g, f), t1, t3):
                failures.append({"inner": f.to_json(), "outer": g.to_json()})
    return _verify("open-map-composition", instances, failures)


def _check_point_complement_t1(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t in env.topologies:
        premise = all(
            t.is_open(soft_point(env.ctx, x, d).complement())
            for x in env.ctx.universe
            for d in env.nonempty_domains
        )
        if not premise:
            continue
        instances += 1
        if not check_tau_axiom(t, "T1").holds:
            failures.append(_family_witness(env.ctx, "topology", t.members))
    return _verify("point-complement-criterion-t1", instances, failures)


def _check_hausdorff_pullback(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        if not f.is_injective():
            continue
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            if not (is_tau_continuous(f, t1, t2) and check_tau_axiom(t2, "T2").holds):
                continue
            instances += 1
            if not check_tau_axiom(t1, "T2").holds:
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "topology", t1.members),
                        "target": _family_witness(env.ctx, "topology", t2.members),
                    }
                )
    return _verify("hausdorff-continuous-pullback", instances, failures)


def _check_hausdorff_pushforward(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        if not (f.is_injective() and f.is_surjective()):
            continue
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            if not (is_open_map(f, t1, t2) and check_tau_axiom(t1, "T2").holds):
                continue
            instances += 1
            if not check_tau_axiom(t2, "T2").holds:
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "topology", t1.members),
                        "target": _family_witness(env.ctx, "topology", t2.members),
                    }
                )
    return _verify("hausdorff-open-pushforward", instances, failures)


def _check_kappa_remote_preimages(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        psi, phi = f.psi_map, f.phi_map
        for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
            if not is_kappa_continuous(f, k1, k2):
                continue
            for p in env.points:
                image_point = SoftPoint(
                    env.ctx, phi[p.point], frozenset(psi[e] for e in p.domain)
                )
                for m in env.sets:
                    if not is_remote_nbhd(k2, m, image_point):
                        continue
                    instances += 1
                    if not is_remote_nbhd(k1, preimage(f, m), p):
                        failures.append(
                            {
                                "map": f.to_json(),
                                "point": p.to_json(),
                                "set": m.to_json(),
                            }
                        )
    return _verify("kappa-continuity-remote-preimages", instances, failures)


def _check_kappa_local_image_form(env: SuiteEnv) -> TheoremReport:
    """Compare the pointwise image form of closed-side continuity with the
    global preimage criterion.  The comparison is logged, not asserted:
    the pointwise form asks, for every remote neighborhood of the image
    point at the image domain, for a remote neighborhood of the point
    whose image covers it inside the range."""
    agree = disagree = 0
    example = None
    for f in env.maps:
        psi, phi = f.psi_map, f.phi_map
        range_set = image(f, whole(env.ctx, env.ctx.params))
        for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
            local = True
            for p in env.points:
                image_domain = frozenset(psi[e] for e in p.domain)
                image_point = SoftPoint(env.ctx, phi[p.point], image_domain)
                candidates = [
                    n
                    for n in env.sets
                    if n.domain == p.domain and is_remote_nbhd(k1, n, p)
                ]
                for m in env.sets:
                    if m.domain != image_domain or not is_remote_nbhd(k2, m, image_point):
                        continue
                    needed = intersect([m, range_set])
                    if not any(needed.is_subset_of(image(f, n)) for n in candidates):
                        local = False
                        break
                if not local:
                    break
            if local == is_kappa_continuous(f, k1, k2):
                agree += 1
            else:
                disagree += 1
                if example is None:
                    example = {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "cotopology", k1.members),
                        "target": _family_witness(env.ctx, "cotopology", k2.members),
                        "pointwise_image_form": local,
                        "global_preimage_form": not local,
                    }
    note = f"forms agree on {agree} and disagree on {disagree} instances"
    return TheoremReport(
        "kappa-continuity-local-image-form", agree + disagree, VERIFIED, example, note
    )


def _check_kappa_restriction_equivalence(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
            instances += 1
            induced = restrict_to_image(f, k2)
            via_induced = all(
                k1.is_closed(preimage(f, m)) for m in induced.iter_members()
            )
            if via_induced != is_kappa_continuous(f, k1, k2):
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "cotopology", k1.members),
                        "target": _family_witness(env.ctx, "cotopology", k2.members),
                    }
                )
    return _verify("kappa-continuity-restriction-equivalence", instances, failures)


def _check_kappa_composition(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f, g in itertools.product(env.maps, env.maps):
        for k1, k2, k3 in itertools.product(env.cotopologies, repeat=3):
            if not (is_kappa_continuous(f, k1, k2) and is_kappa_continuous(g, k2, k3)):
                continue
            instances += 1
            if not is_kappa_continuous(compose(g, f), k1, k3):
                failures.append({"inner": f.to_json(), "outer": g.to_json()})
    return _verify("kappa-continuity-composition", instances, failures)


def _check_closed_map_criterion(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
            instances += 1
            criterion = all(
                closure(k2, image(f, a)).is_subset_of(image(f, closure(k1, a)))
                for a in env.sets
            )
            if criterion != is_closed_map(f, k1, k2):
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "cotopology", k1.members),
                        "target": _family_witness(env.ctx, "cotopology", k2.members),
                    }
                )
    return _verify("closed-map-closure-criterion", instances, failures)


# ------------------------------------------------------------- separation


def _check_kappa_t0_closure_criterion(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        instances += 1
        criterion = all(
            closure(k, soft_point(env.ctx, x, d)) != closure(k, soft_point(env.ctx, y, d))
            for d in k.separation_domains()
            for x, y in itertools.combinations(env.ctx.universe, 2)
        )
        if criterion != check_kappa_axiom(k, "T0").holds:
            failures.append(_family_witness(env.ctx, "cotopology", k.members))
    return _verify("kappa-t0-closure-criterion", instances, failures)


def _check_kappa_t1_points_closed(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        instances += 1
        criterion = all(
            k.is_closed(soft_point(env.ctx, x, d))
            for d in k.separation_domains()
            for x in env.ctx.universe
        )
        if criterion != check_kappa_axiom(k, "T1").holds:
            failures.append(_family_witness(env.ctx, "cotopology", k.members))
    return _verify("kappa-t1-points-closed", instances, failures)


def _point_hull(k: SoftCotopology, point_set: SoftSet) -> SoftSet:
    return intersect(
        [m for m in k.iter_members() if point_set.is_subset_of(m)]
    )


def _check_kappa_t2_point_intersection(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        if not check_kappa_axiom(k, "T2").holds:
            continue
        for d in k.separation_domains():
            for x in env.ctx.universe:
                instances += 1
                ps = soft_point(env.ctx, x, d)
                if _point_hull(k, ps) != ps:
                    failures.append(
                        dict(
                            _family_witness(env.ctx, "cotopology", k.members),
                            point={"point": x, "domain": sorted(d)},
                        )
                    )
    return _verify("kappa-t2-point-intersection", instances, failures)


def _check_point_intersection_t0(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        premise = all(
            _point_hull(k, soft_point(env.ctx, x, d)) == soft_point(env.ctx, x, d)
            for d in k.separation_domains()
            for x in env.ctx.universe
        )
        if not premise:
            continue
        instances += 1
        if not check_kappa_axiom(k, "T0").holds:
            failures.append(_family_witness(env.ctx, "cotopology", k.members))
    return _verify("point-intersection-t0", instances, failures)


def _check_kappa_hausdorff_pullback(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        if not f.is_injective():
            continue
        for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
            if not (is_kappa_continuous(f, k1, k2) and check_kappa_axiom(k2, "T2").holds):
                continue
            instances += 1
            if not check_kappa_axiom(k1, "T2").holds:
                failures.append(
                    {
                        "map": f.to_json(),
                        "source": _family_witness(env.ctx, "cotopology", k1.members),
                        "target": _family_witness(env.ctx, "cotopology", k2.members),
                    }
                )
    return _verify("kappa-hausdorff-pullback", instances, failures)


def _check_kappa_regular_extension(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        if not check_kappa_axiom(k, "regular").holds:
            continue
        for p in env.points:
            for m in env.sets:
                if m.domain != p.domain or not is_remote_nbhd(k, m, p):
                    continue
                instances += 1
                extended = any(
                    m.is_subset_of(l) and is_remote_nbhd(k, l, p)
                    for l in env.sets
                    if l.domain == p.domain
                )
                if not extended:
                    failures.append(
                        dict(
                            _family_witness(env.ctx, "cotopology", k.members),
                            point=p.to_json(),
                            set=m.to_json(),
                        )
                    )
    return _verify("kappa-regular-remote-extension", instances, failures)


def _check_kappa_t3_implies_t2(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        if not check_kappa_axiom(k, "T3").holds:
            continue
        instances += 1
        if not check_kappa_axiom(k, "T2").holds:
            failures.append(_family_witness(env.ctx, "cotopology", k.members))
    return _verify("kappa-t3-implies-t2", instances, failures)


def _chain_failures(results: dict[str, bool]) -> bool:
    ok = True
    if results["T2"] and not results["T1"]:
        ok = False
    if results["T1"] and not results["T0"]:
        ok = False
    if results["T3"] and not (results["regular"] and results["T1"]):
        ok = False
    if results["T4"] and not (results["normal"] and results["T1"]):
        ok = False
    return ok


def _check_tau_chain(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t in env.topologies:
        instances += 1
        results = {a: check_tau_axiom(t, a).holds for a in ("T0", "T1", "T2", "regular", "normal", "T3", "T4")}
        if not _chain_failures(results):
            failures.append(_family_witness(env.ctx, "topology", t.members, results=results))
    return _verify("tau-separation-chain", instances, failures)


def _check_kappa_chain(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for k in env.cotopologies:
        instances += 1
        results = {a: check_kappa_axiom(k, a).holds for a in ("T0", "T1", "T2", "regular", "normal", "T3", "T4")}
        if not _chain_failures(results):
            failures.append(_family_witness(env.ctx, "cotopology", k.members, results=results))
    return _verify("kappa-separation-chain", instances, failures)


def _check_dito_chain(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t in env.topologies:
        for k in env.cotopologies:
            instances += 1
            dito = Ditopology(env.ctx, t, k)
            results = {}
            for axiom in ("T0", "T1", "T2", "regular", "normal", "T3", "T4"):
                combined = check_dito_axiom(dito, axiom).holds
                expected = (
                    check_tau_axiom(t, axiom).holds and check_kappa_axiom(k, axiom).holds
                )
                if combined != expected:
                    failures.append(
                        {
                            "tau": _family_witness(env.ctx, "topology", t.members),
                            "kappa": _family_witness(env.ctx, "cotopology", k.members),
                            "axiom": axiom,
                        }
                    )
                results[axiom] = combined
            if not _chain_failures(results):
                failures.append(
                    {
                        "tau": _family_witness(env.ctx, "topology", t.members),
                        "kappa": _family_witness(env.ctx, "cotopology", k.members),
                        "results": results,
                    }
                )
    return _verify("dito-separation-chain", instances, failures)


def _check_dito_continuity_criterion(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
                instances += 1
                d1 = Ditopology(env.ctx, t1, k1)
                d2 = Ditopology(env.ctx, t2, k2)
                induced = restrict_to_image(f, k2)
                criterion = all(
                    t1.is_open(preimage(f, m)) for m in t2.iter_members()
                ) and all(k1.is_closed(preimage(f, m)) for m in induced.iter_members())
                if criterion != is_dito_continuous(f, d1, d2):
                    failures.append({"map": f.to_json()})
    return _verify("dito-continuity-criterion", instances, failures)


def _check_dito_point_criterion_t1(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for t in env.topologies:
        for k in env.cotopologies:
            premise = all(
                t.is_open(soft_point(env.ctx, x, d).complement())
                and k.is_closed(soft_point(env.ctx, x, d))
                for x in env.ctx.universe
                for d in env.nonempty_domains
            )
            if not premise:
                continue
            instances += 1
            if not check_dito_axiom(Ditopology(env.ctx, t, k), "T1").holds:
                failures.append(
                    {
                        "tau": _family_witness(env.ctx, "topology", t.members),
                        "kappa": _family_witness(env.ctx, "cotopology", k.members),
                    }
                )
    return _verify("dito-point-criterion-t1", instances, failures)


def _check_dito_hausdorff_pullback(env: SuiteEnv) -> TheoremReport:
    failures = []
    instances = 0
    for f in env.maps:
        if not f.is_injective():
            continue
        for t1, t2 in itertools.product(env.topologies, env.topologies):
            for k1, k2 in itertools.product(env.cotopologies, env.cotopologies):
                d1 = Ditopology(env.ctx, t1, k1)
                d2 = Ditopology(env.ctx, t2, k2)
                if not (
                    is_dito_continuous(f, d1, d2)
                    and check_dito_axiom(d2, "T2").holds
                ):
                    continue
                instances += 1
                if not check_dito_axiom(d1, "T2").holds:
                    failures.append({"map": f.to_json()})
    return _verify("dito-hausdorff-pullback", instances, failures)


# ------------------------------------------------------ reading comparisons


def _tau_classification(t: SoftTopology, domains) -> tuple[bool, bool, bool]:
    return (
        topo._check_t0(t, "T0", domains=domains).holds,
        topo._check_t1(t, "T1", domains=domains).holds,
        topo._check_t2(t, "T2", domains=domains).holds,
    )


def _mixed_domain_t0_t1(t: SoftTopology) -> tuple[bool, bool]:
    """T0/T1 with the two points quantified over independent domains."""
    domains = t.separation_domains()
    ctx = t.ctx

    def separated(a: frozenset[str], b: frozenset[str], x: str, y: str) -> bool:
        y_point = SoftPoint(ctx, y, b)
        return any(
            all(x in o.value(e) for e in a) and not o.contains_point(y_point)
            for o in t.opens_at(a)
        )

    t0 = t1 = True
    for a in domains:
        for b in domains:
            for x, y in itertools.combinations(ctx.universe, 2):
                left = separated(a, b, x, y)
                right = separated(b, a, y, x)
                t0 = t0 and (left or right)
                t1 = t1 and (left and right)
    return t0, t1


def _check_reading_mixed_domains(env: SuiteEnv) -> TheoremReport:
    changed = 0
    details = []
    for t in env.topologies:
        default = _tau_classification(t, None)
        all_subsets = _tau_classification(t, tuple(env.nonempty_domains))
        mixed = _mixed_domain_t0_t1(t)
        if default[:2] != mixed or default != all_subsets:
            changed += 1
            if len(details) < 3:
                details.append(
                    dict(
                        _family_witness(env.ctx, "topology", t.members),
                        member_domains={"T0": default[0], "T1": default[1], "T2": default[2]},
                        all_subsets={"T0": all_subsets[0], "T1": all_subsets[1], "T2": all_subsets[2]},
                        mixed={"T0": mixed[0], "T1": mixed[1]},
                    )
                )
    note = (
        f"{changed} of {len(env.topologies)} spaces change classification between "
        "the member-domain, all-subset, and mixed-domain readings"
    )
    witness = {"examples": details} if details else None
    return TheoremReport(
        "reading-mixed-domain-separation", len(env.topologies), VERIFIED, witness, note
    )


def _strong_remote_subset_reading(
    k: SoftCotopology, candidate: SoftSet, p: SoftPoint
) -> bool:
    return any(
        candidate.is_subset_of(m)
        and m.domain
        and all(p.point not in m.value(e) for e in m.domain)
        for m in k.iter_members()
    )


def _check_reading_strong_remote(env: SuiteEnv) -> TheoremReport:
    agree = disagree = 0
    example = None
    for k in env.cotopologies:
        for p in env.points:
            for s in env.sets:
                pointwise = is_strong_remote_nbhd(k, s, p)
                subset_reading = _strong_remote_subset_reading(k, s, p)
                if pointwise == subset_reading:
                    agree += 1
                else:
                    disagree += 1
                    if example is None:
                        example = dict(
                            _family_witness(env.ctx, "cotopology", k.members),
                            point=p.to_json(),
                            set=s.to_json(),
                            pointwise=pointwise,
                            subset_reading=subset_reading,
                        )
    note = f"readings agree on {agree} and disagree on {disagree} instances"
    return TheoremReport(
        "reading-strong-remote-direction", agree + disagree, VERIFIED, example, note
    )


def _check_census(env: SuiteEnv) -> TheoremReport:
    count = len(env.topologies)
    note = (
        f"{count} topologies and {len(env.cotopologies)} cotopologies with at most "
        f"{env.bounds.max_explicit_members} explicit members"
    )
    return TheoremReport("structure-census", count, VERIFIED, None, note)


CHECKS: tuple[tuple[str, Callable[[SuiteEnv], TheoremReport]], ...] = (
    ("de-morgan-inclusions", _check_de_morgan),
    ("null-whole-absorption", _check_null_whole_absorption),
    ("subset-meet-join-equivalence", _check_subset_meet_join),
    ("complement-order-laws", _check_complement_order),
    ("image-laws", _check_image_laws),
    ("preimage-laws", _check_preimage_laws),
    ("image-preimage-galois", _check_image_preimage_galois),
    ("composition-preimage-identity", _check_composition_preimage),
    ("topology-family-intersection", _check_topology_intersection),
    ("cotopology-family-intersection", _check_cotopology_intersection),
    ("topology-parameter-slices", _check_topology_slices),
    ("cotopology-parameter-slices", _check_cotopology_slices),
    ("interior-basic-laws", _check_interior_basic),
    ("interior-algebra-laws", _check_interior_algebra),
    ("closure-basic-laws", _check_closure_basic),
    ("closure-algebra-laws", _check_closure_algebra),
    ("closure-adherence-agreement", _check_closure_adherence),
    ("accumulation-below-adherence", _check_accumulation_adherence),
    ("accumulation-union-closed", _check_accumulation_union_closed),
    ("closure-accumulation-decomposition", _check_closure_decomposition),
    ("remote-neighborhood-basics", _check_remote_basics),
    ("closed-iff-remote-everywhere", _check_closed_iff_remote),
    ("identity-continuity-coarseness", _check_identity_continuity),
    ("continuity-local-global-agreement", _check_local_global_continuity),
    ("tau-continuity-composition", _check_tau_composition),
    ("continuity-interior-criterion", _check_interior_continuity_criterion),
    ("open-map-interior-criterion", _check_open_map_criterion),
    ("open-map-composition", _check_open_map_composition),
    ("point-complement-criterion-t1", _check_point_complement_t1),
    ("hausdorff-continuous-pullback", _check_hausdorff_pullback),
    ("hausdorff-open-pushforward", _check_hausdorff_pushforward),
    ("kappa-continuity-remote-preimages", _check_kappa_remote_preimages),
    ("kappa-continuity-local-image-form", _check_kappa_local_image_form),
    ("kappa-continuity-restriction-equivalence", _check_kappa_restriction_equivalence),
    ("kappa-continuity-composition", _check_kappa_composition),
    ("closed-map-closure-criterion", _check_closed_map_criterion),
    ("kappa-t0-closure-criterion", _check_kappa_t0_closure_criterion),
    ("kappa-t1-points-closed", _check_kappa_t1_points_closed),
    ("kappa-t2-point-intersection", _check_kappa_t2_point_intersection),
    ("point-intersection-t0", _check_point_intersection_t0),
    ("kappa-hausdorff-pullback", _check_kappa_hausdorff_pullback),
    ("kappa-regular-remote-extension", _check_kappa_regular_extension),
    ("kappa-t3-implies-t2", _check_kappa_t3_implies_t2),
    ("tau-separation-chain", _check_tau_chain),
    ("kappa-separation-chain", _check_kappa_chain),
    ("dito-separation-chain", _check_dito_chain),
    ("dito-continuity-criterion", _check_dito_continuity_criterion),
    ("dito-point-criterion-t1", _check_dito_point_criterion_t1),
    ("dito-hausdorff-pullback", _check_dito_hausdorff_pullback),
    ("reading-mixed-domain-separation", _check_reading_mixed_domains),
    ("reading-strong-remote-direction", _check_reading_strong_remote),
    ("structure-census", _check_census),
)


def run_theorem_suite(bounds: EnumBounds) -> list[TheoremReport]:
    """Run every registered check against one shared enumeration."""
    env = SuiteEnv(bounds)
    reports = []
    for name, fn in CHECKS:
        report = fn(env)
        assert report.theorem == name
        reports.append(report)
    return reports
