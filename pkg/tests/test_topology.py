import itertools

import pytest

import softdito as sd
from softdito import (
    Context,
    SoftPoint,
    SoftSet,
    SoftTopology,
    check_tau_axiom,
    check_topology,
    identity_map,
    interior,
    intersect,
    intersect_topologies,
    is_nbhd_of_point,
    is_nbhd_of_set,
    is_open_map,
    is_tau_continuous,
    null,
    whole,
)
from softdito.topology import slice_at_parameter


class TestCheckTopology:
    def test_p1_validates(self, p1):
        tau = p1.topologies["tau"]
        assert check_topology(tau.ctx, tau.members).ok

    def test_p2_validates(self, p2):
        tau = p2.topologies["tau"]
        assert check_topology(tau.ctx, tau.members).ok

    def test_p3_validates(self, p3):
        tau = p3.topologies["tau"]
        assert check_topology(tau.ctx, tau.members).ok

    def test_implicit_only_validates(self):
        ctx = sd.bounded_context(2, 2)
        assert check_topology(ctx, []).ok

    def test_inexpressible_intersection_is_reported(self):
        ctx = sd.bounded_context(2, 2)
        f = SoftSet(ctx, {"e1": {"u1", "u2"}, "e2": {"u1"}})
        h = SoftSet(ctx, {"e1": {"u1"}, "e2": {"u1", "u2"}})
        report = check_topology(ctx, [f, h])
        assert not report.ok
        culprit = [
            v
            for v in report.violations
            if v.op == "intersection" and {v.left, v.right} == {f, h}
        ]
        assert culprit
        assert culprit[0].missing == intersect([f, h])


class TestInterior:
    def test_whole_and_null_are_fixed(self, p1):
        tau = p1.topologies["tau"]
        ctx = tau.ctx
        assert interior(tau, whole(ctx, ctx.params)) == whole(ctx, ctx.params)
        assert interior(tau, null(ctx, {"e1", "e3"})) == null(ctx, {"e1", "e3"})

    def test_fixture_value(self, p1):
        tau = p1.topologies["tau"]
        h = SoftSet(tau.ctx, {"e1": {"x"}, "e2": {"x"}})
        assert interior(tau, h) == SoftSet(tau.ctx, {"e1": {"x"}, "e2": set()})

    def test_open_sets_are_their_own_interior(self, p1):
        tau = p1.topologies["tau"]
        f = p1.softsets["F"]
        assert interior(tau, f) == f
        for m in tau.iter_members():
            assert interior(tau, m) == m


class TestIsOpen:
    def test_members_and_implicit(self, p1):
        tau = p1.topologies["tau"]
        ctx = tau.ctx
        assert tau.is_open(p1.softsets["F"])
        assert not tau.is_open(p1.softsets["F"].complement())
        assert tau.is_open(whole(ctx, ctx.params))
        assert tau.is_open(null(ctx, {"e2", "e4"}))
        assert tau.is_open(null(ctx, ()))


class TestNeighborhoods:
    def test_whole_is_a_neighborhood_of_every_point(self, p1):
        tau = p1.topologies["tau"]
        ctx = tau.ctx
        for x in ctx.universe:
            p = SoftPoint(ctx, x, frozenset({"e1", "e2", "e3"}))
            assert is_nbhd_of_point(tau, whole(ctx, ctx.params), p)

    def test_member_is_its_own_witness(self, p1):
        tau = p1.topologies["tau"]
        p = SoftPoint(tau.ctx, "x", frozenset({"e1", "e2"}))
        assert is_nbhd_of_point(tau, p1.softsets["F"], p)

    def test_every_neighborhood_of_z_contains_x(self, p1):
        tau = p1.topologies["tau"]
        ctx = tau.ctx
        z = SoftPoint(ctx, "z", frozenset({"e1", "e2"}))
        x = SoftPoint(ctx, "x", frozenset({"e1", "e2"}))
        for candidate in sd.all_soft_sets(ctx):
            if is_nbhd_of_point(tau, candidate, z):
                assert candidate.contains_point(x)

    def test_set_neighborhoods(self, p3):
        tau = p3.topologies["tau"]
        ctx = tau.ctx
        g = p3.softsets["G"]
        assert is_nbhd_of_set(tau, whole(ctx, ctx.params), g)
        assert is_nbhd_of_set(tau, g, g)  # G is open
        not_open = SoftSet(ctx, {"e1": {"y"}})
        assert not is_nbhd_of_set(tau, not_open, not_open)


class TestContinuity:
    def test_identity_continuous_iff_members_shared(self):
        ctx = sd.bounded_context(2, 1)
        ident = identity_map(ctx)
        bounds = sd.EnumBounds(2, 1, 6)
        taus = sd.enumerate_topologies(ctx, bounds)
        for t1, t2 in itertools.product(taus, taus):
            expected = all(t1.is_open(m) for m in t2.members)
            assert is_tau_continuous(ident, t1, t2) == expected

    def test_anything_into_indiscrete(self):
        ctx = sd.bounded_context(2, 1)
        rich = SoftTopology.of(ctx, [SoftSet(ctx, {"e1": {"u1"}})])
        indiscrete = SoftTopology.of(ctx, [])
        for f in sd.enumerate_maps(ctx, ctx):
            assert is_tau_continuous(f, rich, indiscrete)

    def test_open_map_identity(self):
        ctx = sd.bounded_context(2, 1)
        small = SoftTopology.of(ctx, [])
        big = SoftTopology.of(ctx, [SoftSet(ctx, {"e1": {"u1"}})])
        ident = identity_map(ctx)
        assert is_open_map(ident, small, big)
        assert not is_open_map(ident, big, small)


class TestAxioms:
    def test_p1_outcomes(self, p1):
        tau = p1.topologies["tau"]
        assert check_tau_axiom(tau, "T0").holds
        t1 = check_tau_axiom(tau, "T1")
        assert not t1.holds
        assert (t1.witness.x, t1.witness.y) == ("x", "z")
        assert t1.witness.domain == ("e1", "e2")

    def test_p2_outcomes(self, p2):
        tau = p2.topologies["tau"]
        assert check_tau_axiom(tau, "T1").holds
        t2 = check_tau_axiom(tau, "T2")
        assert not t2.holds
        assert t2.witness.domain == ("e1", "e2")

    def test_p3_outcomes(self, p3):
        tau = p3.topologies["tau"]
        assert check_tau_axiom(tau, "regular").holds
        assert not check_tau_axiom(tau, "T1").holds
        t3 = check_tau_axiom(tau, "T3")
        assert not t3.holds and "T1" in t3.witness.detail

    def test_unknown_axiom_rejected(self, p1):
        with pytest.raises(ValueError):
            check_tau_axiom(p1.topologies["tau"], "T9")


class TestSlices:
    def test_p1_values(self, p1):
        tau = p1.topologies["tau"]
        assert set(slice_at_parameter(tau, "e1")) == {
            frozenset(),
            frozenset({"x"}),
            frozenset({"x", "z"}),
        }
        assert set(slice_at_parameter(tau, "e3")) == {
            frozenset(),
            frozenset({"x", "z"}),
        }

    def test_unknown_parameter_rejected(self, p1):
        with pytest.raises(sd.SoftDomainError):
            slice_at_parameter(p1.topologies["tau"], "e9")


class TestIntersection:
    def test_member_wise_intersection_is_valid(self):
        ctx = sd.bounded_context(2, 1)
        bounds = sd.EnumBounds(2, 1, 6)
        taus = sd.enumerate_topologies(ctx, bounds)
        for t1, t2 in itertools.combinations(taus, 2):
            meet = intersect_topologies(t1, t2)
            assert check_topology(ctx, meet.members).ok
