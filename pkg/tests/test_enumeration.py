import pytest

import softdito as sd
from softdito import BoundsError, EnumBounds, SoftSet
from softdito.enumeration import close_under_operations, nontrivial_soft_sets


class TestSoftSetEnumeration:
    @pytest.mark.parametrize(
        "points,params,count",
        [(1, 1, 3), (2, 1, 5), (2, 2, 25), (1, 2, 9)],
    )
    def test_counts_follow_the_formula(self, points, params, count):
        ctx = sd.bounded_context(points, params)
        sets = sd.enumerate_soft_sets(ctx)
        assert len(sets) == count == (1 + 2**points) ** params

    def test_no_duplicates_and_deterministic(self):
        ctx = sd.bounded_context(2, 2)
        first = sd.enumerate_soft_sets(ctx)
        second = sd.enumerate_soft_sets(ctx)
        assert first == second
        assert len(set(first)) == len(first)

    def test_budget_guard(self):
        ctx = sd.bounded_context(4, 4)
        with pytest.raises(BoundsError):
            sd.enumerate_soft_sets(ctx)


class TestBounds:
    def test_soft_set_count(self):
        assert EnumBounds(2, 2, 6).soft_set_count() == 25

    def test_rejects_oversized(self):
        with pytest.raises(BoundsError):
            EnumBounds(4, 4, 6)

    def test_rejects_degenerate(self):
        with pytest.raises(BoundsError):
            EnumBounds(0, 1, 6)


class TestClosureEngine:
    def test_empty_generators_give_implicit_only(self):
        ctx = sd.bounded_context(2, 1)
        assert close_under_operations(ctx, []) == frozenset()

    def test_self_closed_generator(self):
        ctx = sd.bounded_context(2, 1)
        f = SoftSet(ctx, {"e1": {"u1"}})
        assert close_under_operations(ctx, [f]) == frozenset({f})

    def test_padding_is_generated(self):
        ctx = sd.bounded_context(2, 2)
        f = SoftSet(ctx, {"e1": {"u1"}})
        closed = close_under_operations(ctx, [f])
        assert SoftSet(ctx, {"e1": {"u1"}, "e2": set()}) in closed


class TestFamilyEnumeration:
    def test_census_at_two_points_one_parameter(self):
        ctx = sd.bounded_context(2, 1)
        bounds = EnumBounds(2, 1, 6)
        topologies = sd.enumerate_topologies(ctx, bounds)
        # regression census, frozen after the first verified run: the
        # implicit-only family, each singleton family, and both together
        assert len(topologies) == 4
        assert len(sd.enumerate_cotopologies(ctx, bounds)) == 4
        member_counts = sorted(len(t.members) for t in topologies)
        assert member_counts == [0, 1, 1, 2]

    def test_census_at_one_point(self):
        ctx = sd.bounded_context(1, 1)
        assert len(sd.enumerate_topologies(ctx, EnumBounds(1, 1, 6))) == 1
        assert nontrivial_soft_sets(ctx) == []

    def test_every_enumerated_family_validates(self):
        ctx = sd.bounded_context(2, 1)
        bounds = EnumBounds(2, 1, 6)
        for tau in sd.enumerate_topologies(ctx, bounds):
            assert sd.check_topology(ctx, tau.members).ok
        for kappa in sd.enumerate_cotopologies(ctx, bounds):
            assert sd.check_cotopology(ctx, kappa.members).ok

    def test_deterministic(self):
        ctx = sd.bounded_context(2, 1)
        bounds = EnumBounds(2, 1, 6)
        assert sd.enumerate_topologies(ctx, bounds) == sd.enumerate_topologies(
            ctx, bounds
        )


class TestMapEnumeration:
    def test_count(self):
        ctx = sd.bounded_context(2, 1)
        maps = sd.enumerate_maps(ctx, ctx)
        assert len(maps) == 4
        assert len(set(maps)) == 4

    def test_cross_context_count(self):
        source = sd.bounded_context(2, 2)
        target = sd.bounded_context(2, 1)
        # 2^2 point assignments, 1^2 parameter assignments
        assert len(sd.enumerate_maps(source, target)) == 4
