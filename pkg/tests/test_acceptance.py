"""Acceptance gate: one test per criterion, each with its runtime budget.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line
per criterion.
"""

import itertools
import json
import time

import pytest

import softdito as sd
from softdito import EnumBounds
from softdito.cli import run as run_command
from softdito.theorems import CHECKS, SuiteEnv, _check_null_whole_absorption


class Budget:
    def __init__(self, seconds):
        self.limit = seconds

    def __enter__(self):
        self.started = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.started
        if exc == (None, None, None):
            assert self.elapsed < self.limit, (
                f"runtime {self.elapsed:.2f}s exceeds the {self.limit}s budget"
            )
        return False


def report(number, text):
    print(f"\ncriterion {number}: PASS  ({text})", flush=True)


def test_criterion_1_first_fixture(p1):
    with Budget(1.0):
        tau = p1.topologies["tau"]
        assert sd.check_topology(tau.ctx, tau.members).ok
        assert sd.check_tau_axiom(tau, "T0").holds
        t1 = sd.check_tau_axiom(tau, "T1")
        assert not t1.holds
        assert (t1.witness.x, t1.witness.y) == ("x", "z")
        assert t1.witness.domain == ("e1", "e2")
    report(1, "nested-pair fixture: valid, T0 holds, T1 fails at (x, z, {e1,e2})")


def test_criterion_2_second_fixture(p2):
    with Budget(1.0):
        tau = p2.topologies["tau"]
        assert sd.check_topology(tau.ctx, tau.members).ok
        assert sd.check_tau_axiom(tau, "T1").holds
        t2 = sd.check_tau_axiom(tau, "T2")
        assert not t2.holds
        assert t2.witness.domain == ("e1", "e2")
    report(2, "eight-open fixture: valid, T1 holds, T2 fails at domain {e1,e2}")


def test_criterion_3_third_fixture(p3):
    with Budget(1.0):
        tau = p3.topologies["tau"]
        assert sd.check_topology(tau.ctx, tau.members).ok
        assert sd.check_tau_axiom(tau, "regular").holds
        assert not sd.check_tau_axiom(tau, "T1").holds
    report(3, "three-point fixture: regular without T1")


def test_criterion_4_fourth_fixture(p4):
    with Budget(1.0):
        f = p4.maps["f"]
        k1, k2 = p4.cotopologies["k1"], p4.cotopologies["k2"]
        assert sd.check_cotopology(k1.ctx, k1.members).ok
        assert sd.check_cotopology(k2.ctx, k2.members).ok
        assert sd.is_kappa_continuous(f, k1, k2)
        t1 = sd.check_kappa_axiom(k1, "T1")
        assert not t1.holds
        assert t1.witness is not None
        assert {t1.witness.x, t1.witness.y} == {"a", "c"}
    report(4, "collapsing map is continuous on the closed side; source fails T1")


def test_criterion_5_theorem_suite_and_counterexamples():
    with Budget(300.0):
        reports = sd.run_theorem_suite(EnumBounds(2, 1, 6))
        assert [r.theorem for r in reports] == [name for name, _ in CHECKS]
        allowed = {"verified", "counterexample", "discrepancy-logged"}
        for r in reports:
            assert r.status in allowed
            if r.status == "discrepancy-logged":
                assert r.witness is not None, f"{r.theorem} logged without witness"
                assert "dsl" in r.witness
                sd.parse(r.witness["dsl"])  # witness must replay
        required = [
            "tau-t0-not-t1",
            "kappa-t0-not-t1",
            "tau-t1-not-t2",
            "kappa-t1-not-t2",
            "tau-regular-not-t1",
            "kappa-regular-not-t1",
            "de-morgan-strictness",
        ]
        for prop in required:
            assert sd.find_counterexample(prop) is not None, prop
    report(5, "suite verified or discrepancy-logged; all separation gaps witnessed")


def test_criterion_6_algebra_property_suite():
    with Budget(10.0):
        ctx = sd.bounded_context(2, 2)
        sets = sd.enumerate_soft_sets(ctx)
        assert len(sets) == 25
        u_e = sd.whole(ctx, ctx.params)
        phi_e = sd.null(ctx, ctx.params)

        # absorption: the meet halves hold everywhere ...
        for f in sets:
            assert sd.intersect([phi_e, f]) == sd.null(ctx, f.domain)
            assert sd.intersect([u_e, f]) == f
        # ... and the join halves are a logged discrepancy, never silent
        absorption = _check_null_whole_absorption(SuiteEnv(EnumBounds(2, 2, 6)))
        assert absorption.status == "discrepancy-logged"
        assert absorption.witness is not None

        for f, g in itertools.product(sets, sets):
            # subset characterizations
            sub = f.is_subset_of(g)
            assert sub == (sd.intersect([f, g]) == f)
            assert sub == (sd.union([f, g]) == g)
            # complement order laws, antitone restated on equal domains
            if f.domain == g.domain:
                disjoint = sd.intersect([f, g]).is_null()
                assert disjoint == f.is_subset_of(g.complement())
                assert sub == g.complement().is_subset_of(f.complement())
            if f.is_subset_of(g.complement()):
                assert sd.intersect([f, g]).is_null()
            # both inclusion directions of the complement of meet and join
            comps = [f.complement(), g.complement()]
            assert sd.intersect([f, g]).complement().is_subset_of(sd.union(comps))
            assert sd.intersect(comps).is_subset_of(sd.union([f, g]).complement())
        for f in sets:
            assert sd.union([f, f.complement()]) == sd.whole(ctx, f.domain)
            assert sd.intersect([f, f.complement()]) == sd.null(ctx, f.domain)

        maps = sd.enumerate_maps(ctx, ctx)
        assert len(maps) == 16  # 2^2 point tables times 2^2 parameter tables
        for m in maps:
            psi = m.psi_map
            assert sd.image(m, phi_e) == sd.null(ctx, set(psi.values()))
            assert sd.image(m, u_e).is_subset_of(u_e)
            assert sd.preimage(m, u_e) == u_e
            assert sd.preimage(m, phi_e) == phi_e
            range_set = sd.image(m, u_e)
            for f, g in itertools.combinations(sets, 2):
                assert sd.image(m, sd.union([f, g])) == sd.union(
                    [sd.image(m, f), sd.image(m, g)]
                )
                assert sd.image(m, sd.intersect([f, g])).is_subset_of(
                    sd.intersect([sd.image(m, f), sd.image(m, g)])
                )
                assert sd.preimage(m, sd.union([f, g])) == sd.union(
                    [sd.preimage(m, f), sd.preimage(m, g)]
                )
                assert sd.preimage(m, sd.intersect([f, g])) == sd.intersect(
                    [sd.preimage(m, f), sd.preimage(m, g)]
                )
            for f in sets:
                back = sd.image(m, sd.preimage(m, f))
                assert back.is_subset_of(f)
                assert back == sd.intersect([f, range_set])
                assert sd.preimage(m, f.complement()) == sd.preimage(m, f).complement()
                assert f.is_subset_of(sd.preimage(m, sd.image(m, f)))
    report(6, "all 625 pairs and 16 maps satisfy the restated algebra laws")


def test_criterion_7_operator_laws():
    with Budget(60.0):
        ctx = sd.bounded_context(2, 1)
        bounds = EnumBounds(2, 1, 6)
        sets = sd.enumerate_soft_sets(ctx)
        for tau in sd.enumerate_topologies(ctx, bounds):
            for f in sets:
                inner = sd.interior(tau, f)
                assert inner.is_subset_of(f)
                assert sd.interior(tau, inner) == inner
                assert tau.is_open(inner)
                assert tau.is_open(f) == (inner == f)
                for g in sets:
                    ig = sd.interior(tau, g)
                    if f.is_subset_of(g):
                        assert inner.is_subset_of(ig)
                    assert sd.interior(tau, sd.intersect([f, g])) == sd.intersect(
                        [inner, ig]
                    )
                    assert sd.union([inner, ig]).is_subset_of(
                        sd.interior(tau, sd.union([f, g]))
                    )
        coincided = 0
        for kappa in sd.enumerate_cotopologies(ctx, bounds):
            for f in sets:
                cl = sd.closure(kappa, f)
                assert f.is_subset_of(cl)
                assert sd.closure(kappa, cl) == cl
                assert kappa.is_closed(cl)
                assert kappa.is_closed(f) == (cl == f)
                for g in sets:
                    cg = sd.closure(kappa, g)
                    if f.is_subset_of(g):
                        assert cl.is_subset_of(cg)
                    assert sd.closure(kappa, sd.union([f, g])) == sd.union([cl, cg])
                    assert sd.closure(kappa, sd.intersect([f, g])).is_subset_of(
                        sd.intersect([cl, cg])
                    )
                # cross-validation against the independent adherence route
                if f.domain and cl.domain == f.domain:
                    coincided += 1
                    via_points = {
                        p.point for p in sd.adherence_points(kappa, f)
                    }
                    via_closure = {
                        x
                        for x in ctx.universe
                        if cl.contains_point(sd.SoftPoint(ctx, x, f.domain))
                    }
                    assert via_points == via_closure
        assert coincided == 16  # every non-degenerate instance coincided
    report(7, "interior and closure laws hold; closure agrees with adherence")


def test_criterion_8_determinism(p1):
    with Budget(60.0):
        axioms_a = run_command("axioms", p1, spaces=("tau",), spec_path="p1.sdt")
        axioms_b = run_command("axioms", p1, spaces=("tau",), spec_path="p1.sdt")
        assert axioms_a.to_json_text() == axioms_b.to_json_text()
        suite_a = run_command("verify-theorems", None, bounds=EnumBounds(2, 1, 6))
        suite_b = run_command("verify-theorems", None, bounds=EnumBounds(2, 1, 6))
        assert suite_a.to_json_text() == suite_b.to_json_text()
        assert json.loads(suite_a.to_json_text())["timing"] == 0.0
    report(8, "repeated commands produce byte-identical JSON records")
