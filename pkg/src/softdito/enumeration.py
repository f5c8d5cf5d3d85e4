"""Exhaustive enumeration of soft structures over bounded contexts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import Context, SoftSet, all_soft_sets, intersect, null, union, whole
from .cotopology import SoftCotopology
from .maps import SoftMap
from .topology import SoftTopology

SOFT_SET_BUDGET = 4096
GENERATOR_BUDGET = 200_000


class BoundsError(ValueError):
    """The requested enumeration exceeds the configured budget."""


@dataclass(frozen=True)
class EnumBounds:
    """Size caps for exhaustive runs.

    Soft sets over (U, E) number (1 + 2^|U|)^|E|; the bounds must keep
    that below the soft-set budget.
    """

    max_universe: int = 2
    max_params: int = 1
    max_explicit_members: int = 6

    def __post_init__(self) -> None:
        if self.max_universe < 1 or self.max_params < 1:
            raise BoundsError("need at least one point and one parameter")
        if self.max_explicit_members < 0:
            raise BoundsError("member cap must be non-negative")
        if self.soft_set_count() > SOFT_SET_BUDGET:
            raise BoundsError(
                f"{self.soft_set_count()} soft sets exceed the budget of {SOFT_SET_BUDGET}"
            )

    def soft_set_count(self) -> int:
        return (1 + 2**self.max_universe) ** self.max_params

    def context(self) -> Context:
        return bounded_context(self.max_universe, self.max_params)

    def to_json(self) -> dict:
        return {
            "max_universe": self.max_universe,
            "max_params": self.max_params,
            "max_explicit_members": self.max_explicit_members,
        }


def bounded_context(n_points: int, n_params: int) -> Context:
    return Context(
        tuple(f"u{i}" for i in range(1, n_points + 1)),
        tuple(f"e{i}" for i in range(1, n_params + 1)),
    )


def enumerate_soft_sets(ctx: Context) -> list[SoftSet]:
    if (1 + 2 ** len(ctx.universe)) ** len(ctx.params) > SOFT_SET_BUDGET:
        raise BoundsError("context too large for exhaustive soft-set enumeration")
    return list(all_soft_sets(ctx))


def nontrivial_soft_sets(ctx: Context) -> list[SoftSet]:
    """Soft sets that are neither null nor the whole set over all parameters."""
    full = whole(ctx, ctx.params)
    return [s for s in enumerate_soft_sets(ctx) if not s.is_null() and s != full]


def close_under_operations(ctx: Context, generators: list[SoftSet]) -> frozenset[SoftSet]:
    """Least family containing the generators that is closed under binary
    union and intersection, interactions with the implicit members
    included.  Implicit members themselves are not materialized."""
    implicit = [null(ctx, d) for d in _all_subsets(ctx)] + [whole(ctx, ctx.params)]
    implicit_set = set(implicit)
    members = {g for g in generators if g not in implicit_set}
    while True:
        pool = list(members) + implicit
        fresh = set()
        for a, b in itertools.combinations(pool, 2):
            for combine in (union, intersect):
                r = combine([a, b])
                if r not in members and r not in implicit_set:
                    fresh.add(r)
        if not fresh:
            return frozenset(members)
        members |= fresh


def _all_subsets(ctx: Context):
    from .core import iter_subsets

    return iter_subsets(ctx.params)


def _enumerate_member_families(
    ctx: Context, bounds: EnumBounds
) -> Iterator[tuple[SoftSet, ...]]:
    """Every family reachable by closing a generator set, deduplicated,
    in canonical order.  A family of at most `max_explicit_members`
    members is always reachable from itself, so the sweep is complete
    up to that cap."""
    pool = nontrivial_soft_sets(ctx)
    cap = bounds.max_explicit_members
    total = sum(
        _comb(len(pool), k) for k in range(0, min(cap, len(pool)) + 1)
    )
    if total > GENERATOR_BUDGET:
        raise BoundsError(
            f"{total} generator sets exceed the budget of {GENERATOR_BUDGET}"
        )
    seen: set[frozenset[SoftSet]] = set()
    families: list[tuple[SoftSet, ...]] = []
    for size in range(0, min(cap, len(pool)) + 1):
        for generators in itertools.combinations(pool, size):
            closed = close_under_operations(ctx, list(generators))
            if len(closed) > cap or closed in seen:
                continue
            seen.add(closed)
            families.append(tuple(sorted(closed, key=SoftSet.sort_key)))
    families.sort(key=lambda fam: (len(fam), tuple(m.sort_key() for m in fam)))
    yield from families


def _comb(n: int, k: int) -> int:
    import math

    return math.comb(n, k)


def enumerate_topologies(ctx: Context, bounds: EnumBounds) -> list[SoftTopology]:
    return [SoftTopology.of(ctx, fam) for fam in _enumerate_member_families(ctx, bounds)]


def enumerate_cotopologies(ctx: Context, bounds: EnumBounds) -> list[SoftCotopology]:
    return [
        SoftCotopology.of(ctx, fam) for fam in _enumerate_member_families(ctx, bounds)
    ]


def enumerate_maps(source: Context, target: Context) -> list[SoftMap]:
    """Every soft function between the contexts, in canonical order."""
    maps = []
    for phi_values in itertools.product(target.universe, repeat=len(source.universe)):
        for psi_values in itertools.product(target.params, repeat=len(source.params)):
            maps.append(
                SoftMap.of(
                    source,
                    target,
                    dict(zip(source.universe, phi_values)),
                    dict(zip(source.params, psi_values)),
                )
            )
    return maps
