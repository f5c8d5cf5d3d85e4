"""Soft functions between contexts: images, preimages, composition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, TYPE_CHECKING

from .core import Context, SoftSet, union, whole

if TYPE_CHECKING:  # pragma: no cover
    from .cotopology import SoftCotopology


@dataclass(frozen=True)
class SoftMap:
    """A pair of total tables: phi on points and psi on parameters."""

    source: Context
    target: Context
    phi: tuple[tuple[str, str], ...]
    psi: tuple[tuple[str, str], ...]

    @classmethod
    def of(
        cls,
        source: Context,
        target: Context,
        phi: Mapping[str, str],
        psi: Mapping[str, str],
    ) -> "SoftMap":
        return cls(
            source,
            target,
            tuple(sorted(phi.items())),
            tuple(sorted(psi.items())),
        )

    def __post_init__(self) -> None:
        phi, psi = dict(self.phi), dict(self.psi)
        if set(phi) != self.source.universe_set:
            raise ValueError("phi must be total on the source universe")
        if set(psi) != self.source.param_set:
            raise ValueError("psi must be total on the source parameters")
        self.target.check_points(phi.values())
        self.target.check_params(psi.values())

    @property
    def phi_map(self) -> dict[str, str]:
        return dict(self.phi)

    @property
    def psi_map(self) -> dict[str, str]:
        return dict(self.psi)

    def is_injective(self) -> bool:
        phi, psi = self.phi_map, self.psi_map
        return len(set(phi.values())) == len(phi) and len(set(psi.values())) == len(psi)

    def is_surjective(self) -> bool:
        phi, psi = self.phi_map, self.psi_map
        return (
            set(phi.values()) == self.target.universe_set
            and set(psi.values()) == self.target.param_set
        )

    def phi_image(self, points) -> frozenset[str]:
        phi = self.phi_map
        return frozenset(phi[x] for x in points)

    def phi_preimage(self, points) -> frozenset[str]:
        pts = frozenset(points)
        return frozenset(x for x, y in self.phi if y in pts)

    def psi_preimage(self, params) -> frozenset[str]:
        prms = frozenset(params)
        return frozenset(e for e, p in self.psi if p in prms)

    def to_json(self) -> dict:
        return {
            "points": {x: y for x, y in self.phi},
            "params": {e: p for e, p in self.psi},
        }


def image(f: SoftMap, soft_set: SoftSet) -> SoftSet:
    """Image: at p, the phi-image of the union of values over psi^{ -1}(p)."""
    if soft_set.ctx != f.source:
        raise ValueError("soft set does not live in the source context")
    psi = f.psi_map
    result_domain = {psi[e] for e in soft_set.domain}
    values = {}
    for p in result_domain:
        gathered = frozenset().union(
            *(soft_set.value(e) for e in soft_set.domain if psi[e] == p)
        )
        values[p] = f.phi_image(gathered)
    return SoftSet(f.target, values)


def preimage(f: SoftMap, soft_set: SoftSet) -> SoftSet:
    """Preimage: at e, the phi-preimage of the value at psi(e)."""
    if soft_set.ctx != f.target:
        raise ValueError("soft set does not live in the target context")
    psi = f.psi_map
    values = {
        e: f.phi_preimage(soft_set.value(psi[e]))
        for e in f.source.params
        if soft_set.defined_at(psi[e])
    }
    return SoftSet(f.source, values)


def compose(g: SoftMap, f: SoftMap) -> SoftMap:
    """g after f, composing both underlying tables."""
    if f.target != g.source:
        raise ValueError("target of the inner map must equal source of the outer map")
    g_phi, g_psi = g.phi_map, g.psi_map
    return SoftMap.of(
        f.source,
        g.target,
        {x: g_phi[y] for x, y in f.phi},
        {e: g_psi[p] for e, p in f.psi},
    )


def identity_map(ctx: Context) -> SoftMap:
    return SoftMap.of(ctx, ctx, {x: x for x in ctx.universe}, {e: e for e in ctx.params})


def restrict_to_image(f: SoftMap, kappa: "SoftCotopology") -> "SoftCotopology":
    """The cotopology induced on the image of the whole source soft set.

    Every member (implicit ones included) is intersected with the image
    of the whole source; the result is a family on that sub-soft-set and
    is not required to validate against the ambient context.
    """
    from .core import intersect
    from .cotopology import SoftCotopology

    if kappa.ctx != f.target:
        raise ValueError("cotopology does not live in the target context")
    image_whole = image(f, whole(f.source, f.source.params))
    full = whole(kappa.ctx, kappa.ctx.params)
    members = [intersect([m, image_whole]) for m in kappa.iter_members()]
    explicit = [m for m in members if not m.is_null() and m != full]
    return SoftCotopology.of(kappa.ctx, explicit)
