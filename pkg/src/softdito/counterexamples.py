"""Search for the finite witnesses separating the implication chain.

Each registered property scans contexts from the smallest upward, then
generator sets by size and lexicographic position, and returns the first
structure realizing the property.  Enlarging the bounds only appends to
the search space, so previously found witnesses stay found.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, Optional

from .core import Context, SoftSet, intersect, union
from .cotopology import SoftCotopology, check_kappa_axiom, closure
from .ditopology import Ditopology, check_dito_axiom, dito_closure, dito_interior
from .dsl import render_context, render_family, render_softset
from .enumeration import (
    EnumBounds,
    bounded_context,
    close_under_operations,
    enumerate_soft_sets,
    nontrivial_soft_sets,
)
from .topology import SoftTopology, check_tau_axiom


def _iter_contexts(bounds: EnumBounds) -> Iterator[Context]:
    sizes = sorted(
        itertools.product(
            range(1, bounds.max_universe + 1), range(1, bounds.max_params + 1)
        ),
        key=lambda s: (s[0] + s[1], s[0]),
    )
    for n_points, n_params in sizes:
        yield bounded_context(n_points, n_params)


def _iter_families(ctx: Context, cap: int) -> Iterator[tuple[SoftSet, ...]]:
    """Closed families in search order: generator size, then position."""
    pool = nontrivial_soft_sets(ctx)
    seen: set[frozenset[SoftSet]] = set()
    for size in range(0, min(cap, len(pool)) + 1):
        for generators in itertools.combinations(pool, size):
            closed = close_under_operations(ctx, list(generators))
            if len(closed) > cap or closed in seen:
                continue
            seen.add(closed)
            yield tuple(sorted(closed, key=SoftSet.sort_key))


def _family_witness(ctx: Context, kind: str, members: tuple[SoftSet, ...], **extra) -> dict:
    lines = [render_context("C", ctx)]
    names = {}
    for i, m in enumerate(members):
        names[m] = f"M{i + 1}"
        lines.append(render_softset(f"M{i + 1}", "C", m))
    lines.append(render_family(kind, "S", "C", [names[m] for m in members]))
    out = {
        "context": ctx.to_json(),
        "kind": kind,
        "members": [m.to_json() for m in members],
        "dsl": "\n".join(lines) + "\n",
    }
    out.update(extra)
    return out


def _axiom_gap(kind: str, holds: str, fails: str) -> Callable[[EnumBounds], Optional[dict]]:
    check = check_tau_axiom if kind == "topology" else check_kappa_axiom
    space_of = SoftTopology.of if kind == "topology" else SoftCotopology.of

    def search(bounds: EnumBounds) -> Optional[dict]:
        for ctx in _iter_contexts(bounds):
            for members in _iter_families(ctx, bounds.max_explicit_members):
                space = space_of(ctx, members)
                good = check(space, holds)
                if not good.holds:
                    continue
                bad = check(space, fails)
                if bad.holds:
                    continue
                return _family_witness(
                    ctx,
                    kind,
                    members,
                    satisfies=holds,
                    violates=fails,
                    violation_witness=bad.witness.to_json() if bad.witness else None,
                )
        return None

    return search


def _de_morgan_strictness(bounds: EnumBounds) -> Optional[dict]:
    for ctx in _iter_contexts(bounds):
        for f, g in itertools.combinations(enumerate_soft_sets(ctx), 2):
            family = [f, g]
            comps = [m.complement() for m in family]
            meet_strict = intersect(family).complement() != union(comps)
            join_strict = intersect(comps) != union(family).complement()
            if meet_strict and join_strict:
                lines = [
                    render_context("C", ctx),
                    render_softset("F", "C", f),
                    render_softset("G", "C", g),
                ]
                return {
                    "context": ctx.to_json(),
                    "F": f.to_json(),
                    "G": g.to_json(),
                    "dsl": "\n".join(lines) + "\n",
                    "note": "both inclusions are strict for this pair",
                }
    return None


def _closure_interior_nonduality(bounds: EnumBounds) -> Optional[dict]:
    for ctx in _iter_contexts(bounds):
        families = list(_iter_families(ctx, bounds.max_explicit_members))
        sets = enumerate_soft_sets(ctx)
        for tau_members in families:
            for kappa_members in families:
                dito = Ditopology(
                    ctx,
                    SoftTopology.of(ctx, tau_members),
                    SoftCotopology.of(ctx, kappa_members),
                )
                for s in sets:
                    closed = dito_closure(dito, s).complement()
                    opened = dito_interior(dito, s.complement())
                    if closed != opened:
                        witness = _family_witness(ctx, "topology", tau_members)
                        witness["kappa_members"] = [m.to_json() for m in kappa_members]
                        witness["set"] = s.to_json()
                        witness["complement_of_closure"] = closed.to_json()
                        witness["interior_of_complement"] = opened.to_json()
                        return witness
    return None


def _dito_t0_not_t1(bounds: EnumBounds) -> Optional[dict]:
    for ctx in _iter_contexts(bounds):
        families = list(_iter_families(ctx, bounds.max_explicit_members))
        for tau_members in families:
            tau = SoftTopology.of(ctx, tau_members)
            for kappa_members in families:
                dito = Ditopology(ctx, tau, SoftCotopology.of(ctx, kappa_members))
                if not check_dito_axiom(dito, "T0").holds:
                    continue
                t1 = check_dito_axiom(dito, "T1")
                if t1.holds:
                    continue
                witness = _family_witness(ctx, "topology", tau_members)
                witness["kappa_members"] = [m.to_json() for m in kappa_members]
                witness["violation_witness"] = t1.witness.to_json() if t1.witness else None
                return witness
    return None


_DEFAULT_BOUNDS = {
    "tau-t0-not-t1": EnumBounds(2, 1, 6),
    "kappa-t0-not-t1": EnumBounds(2, 1, 6),
    "tau-t1-not-t2": EnumBounds(2, 2, 6),
    "kappa-t1-not-t2": EnumBounds(2, 2, 6),
    "tau-regular-not-t1": EnumBounds(2, 1, 6),
    "kappa-regular-not-t1": EnumBounds(2, 1, 6),
    "de-morgan-strictness": EnumBounds(2, 2, 6),
    "closure-interior-nonduality": EnumBounds(2, 2, 6),
    "dito-t0-not-t1": EnumBounds(2, 1, 6),
}

_SEARCHES: dict[str, Callable[[EnumBounds], Optional[dict]]] = {
    "tau-t0-not-t1": _axiom_gap("topology", "T0", "T1"),
    "kappa-t0-not-t1": _axiom_gap("cotopology", "T0", "T1"),
    "tau-t1-not-t2": _axiom_gap("topology", "T1", "T2"),
    "kappa-t1-not-t2": _axiom_gap("cotopology", "T1", "T2"),
    "tau-regular-not-t1": _axiom_gap("topology", "regular", "T1"),
    "kappa-regular-not-t1": _axiom_gap("cotopology", "regular", "T1"),
    "de-morgan-strictness": _de_morgan_strictness,
    "closure-interior-nonduality": _closure_interior_nonduality,
    "dito-t0-not-t1": _dito_t0_not_t1,
}

PROPERTIES = tuple(_SEARCHES)


def find_counterexample(
    property_id: str, bounds: EnumBounds | None = None
) -> Optional[dict]:
    """Smallest witness for a registered property, or None within bounds."""
    if property_id not in _SEARCHES:
        raise ValueError(
            f"unknown property {property_id!r}, expected one of {sorted(_SEARCHES)}"
        )
    search_bounds = bounds or _DEFAULT_BOUNDS[property_id]
    witness = _SEARCHES[property_id](search_bounds)
    if witness is not None:
        witness = {"property": property_id, **witness}
    return witness
