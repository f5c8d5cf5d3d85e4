"""Soft sets over a finite context.

A soft set is a partial map from a parameter set E to subsets of a
universe U: it carries a value for every parameter in its domain A and
is *undefined* (not empty) everywhere else.  All algebra here branches
on domain membership, so a soft set over {e1} and its null-padded
variant over {e1, e2} are different values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Mapping


class SoftDomainError(ValueError):
    """A label or domain fell outside the ambient context."""


@dataclass(frozen=True)
class Context:
    """Ambient universe and parameter set, both finite and label-sorted."""

    universe: tuple[str, ...]
    params: tuple[str, ...]

    def __post_init__(self) -> None:
        for name, labels in (("universe", self.universe), ("params", self.params)):
            if not labels:
                raise SoftDomainError(f"{name} must be non-empty")
            if len(set(labels)) != len(labels):
                raise SoftDomainError(f"{name} contains duplicate labels: {labels}")
        object.__setattr__(self, "universe", tuple(sorted(self.universe)))
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    @property
    def universe_set(self) -> frozenset[str]:
        return frozenset(self.universe)

    @property
    def param_set(self) -> frozenset[str]:
        return frozenset(self.params)

    def check_params(self, labels: Iterable[str]) -> frozenset[str]:
        domain = frozenset(labels)
        if not domain <= self.param_set:
            raise SoftDomainError(f"parameters {sorted(domain - self.param_set)} not in context")
        return domain

    def check_points(self, labels: Iterable[str]) -> frozenset[str]:
        points = frozenset(labels)
        if not points <= self.universe_set:
            raise SoftDomainError(f"points {sorted(points - self.universe_set)} not in universe")
        return points

    def to_json(self) -> dict:
        return {"universe": list(self.universe), "params": list(self.params)}


class SoftSet:
    """A partial map e -> subset of the universe, defined exactly on its domain."""

    __slots__ = ("ctx", "entries", "_vmap", "_hash")

    def __init__(self, ctx: Context, values: Mapping[str, Iterable[str]]):
        self.ctx = ctx
        ctx.check_params(values.keys())
        vmap: dict[str, frozenset[str]] = {}
        for e in ctx.params:
            if e in values:
                vmap[e] = frozenset(ctx.check_points(values[e]))
        self.entries: tuple[tuple[str, frozenset[str]], ...] = tuple(vmap.items())
        self._vmap = vmap
        self._hash = hash((ctx, self.entries))

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._vmap)

    def value(self, e: str) -> frozenset[str]:
        if e not in self._vmap:
            raise SoftDomainError(f"soft set is undefined at parameter {e!r}")
        return self._vmap[e]

    def defined_at(self, e: str) -> bool:
        return e in self._vmap

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SoftSet)
            and self.ctx == other.ctx
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{e}:{{{','.join(sorted(v))}}}" for e, v in self.entries)
        return f"SoftSet({body})"

    def is_null(self) -> bool:
        """True when every defined value is empty (any domain, including empty)."""
        return all(not v for _, v in self.entries)

    def is_whole_relative(self) -> bool:
        """True when every defined value is the full universe."""
        return all(v == self.ctx.universe_set for _, v in self.entries)

    def complement(self) -> "SoftSet":
        u = self.ctx.universe_set
        return SoftSet(self.ctx, {e: u - v for e, v in self.entries})

    def restrict(self, domain: Iterable[str]) -> "SoftSet":
        keep = frozenset(domain)
        return SoftSet(self.ctx, {e: v for e, v in self.entries if e in keep})

    def pad(self, domain: Iterable[str]) -> "SoftSet":
        """Extend with empty values over the extra parameters (union with a null set)."""
        out = dict(self.entries)
        for e in self.ctx.check_params(domain):
            out.setdefault(e, frozenset())
        return SoftSet(self.ctx, out)

    def is_subset_of(self, other: "SoftSet") -> bool:
        if self.ctx != other.ctx:
            raise ValueError("soft sets live in different contexts")
        return all(other.defined_at(e) and v <= other.value(e) for e, v in self.entries)

    __le__ = is_subset_of

    def contains_point(self, p: "SoftPoint") -> bool:
        """Membership x_A in F: A inside the domain and x in every value over A."""
        return all(self.defined_at(e) and p.point in self.value(e) for e in p.domain)

    def sort_key(self) -> tuple:
        """Canonical order: by domain shape then values, following context order."""
        key = []
        for e in self.ctx.params:
            if e in self._vmap:
                key.append((1, tuple(sorted(self._vmap[e]))))
            else:
                key.append((0, ()))
        return tuple(key)

    def to_json(self) -> dict:
        return {
            "domain": [e for e, _ in self.entries],
            "values": {e: sorted(v) for e, v in self.entries},
        }


@dataclass(frozen=True)
class SoftPoint:
    """A soft point x_A: the pair of a universe element and a non-empty domain."""

    ctx: Context
    point: str
    domain: frozenset[str]

    def __post_init__(self) -> None:
        self.ctx.check_points([self.point])
        if not self.domain:
            raise ValueError("a soft point needs a non-empty domain")
        self.ctx.check_params(self.domain)

    def to_soft_set(self) -> SoftSet:
        return SoftSet(self.ctx, {e: {self.point} for e in self.domain})

    def to_json(self) -> dict:
        return {"point": self.point, "domain": sorted(self.domain)}


def whole(ctx: Context, domain: Iterable[str]) -> SoftSet:
    """The whole soft set relative to the given domain: every value is U."""
    return SoftSet(ctx, {e: ctx.universe_set for e in ctx.check_params(domain)})


def null(ctx: Context, domain: Iterable[str]) -> SoftSet:
    """The null soft set relative to the given domain: every value is empty."""
    return SoftSet(ctx, {e: frozenset() for e in ctx.check_params(domain)})


def soft_point(ctx: Context, point: str, domain: Iterable[str]) -> SoftSet:
    """The soft set of the point x_A: constant value {x} over a non-empty domain."""
    dom = ctx.check_params(domain)
    if not dom:
        raise ValueError("a soft point needs a non-empty domain")
    ctx.check_points([point])
    return SoftSet(ctx, {e: {point} for e in dom})


def _shared_context(family: Iterable[SoftSet]) -> tuple[Context, list[SoftSet]]:
    members = list(family)
    if not members:
        raise ValueError("need at least one soft set")
    ctx = members[0].ctx
    if any(m.ctx != ctx for m in members):
        raise ValueError("soft sets live in different contexts")
    return ctx, members


def intersect(family: Iterable[SoftSet]) -> SoftSet:
    """Intersection: common domain, pointwise intersection of values."""
    ctx, members = _shared_context(family)
    domain = reduce(frozenset.__and__, (m.domain for m in members))
    return SoftSet(
        ctx,
        {e: reduce(frozenset.__and__, (m.value(e) for m in members)) for e in domain},
    )


def union(family: Iterable[SoftSet]) -> SoftSet:
    """Union: joined domain, pointwise union over the members defined there."""
    ctx, members = _shared_context(family)
    domain = reduce(frozenset.__or__, (m.domain for m in members))
    values = {}
    for e in domain:
        values[e] = frozenset().union(*(m.value(e) for m in members if m.defined_at(e)))
    return SoftSet(ctx, values)


def is_subset(left: SoftSet, right: SoftSet) -> bool:
    return left.is_subset_of(right)


def point_in(p: SoftPoint, soft_set: SoftSet) -> bool:
    if p.ctx != soft_set.ctx:
        raise ValueError("point and soft set live in different contexts")
    return soft_set.contains_point(p)


def iter_subsets(labels: Iterable[str]) -> Iterator[frozenset[str]]:
    """All subsets in canonical order: by size, then lexicographically."""
    pool = sorted(labels)
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            yield frozenset(combo)


def all_soft_sets(ctx: Context) -> Iterator[SoftSet]:
    """Every soft set over the context, each exactly once, in canonical order.

    Per parameter the choices are: undefined, or one of the 2^|U| value
    sets, so the total count is (1 + 2^|U|)^|E|.
    """
    value_choices: list[frozenset[str] | None] = [None]
    value_choices.extend(iter_subsets(ctx.universe))
    for assignment in itertools.product(value_choices, repeat=len(ctx.params)):
        values = {
            e: v for e, v in zip(ctx.params, assignment) if v is not None
        }
        yield SoftSet(ctx, values)
