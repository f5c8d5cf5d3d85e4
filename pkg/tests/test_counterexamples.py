import pytest

import softdito as sd
from softdito import EnumBounds, find_counterexample
from softdito.counterexamples import PROPERTIES

AXIOM_GAPS = {
    "tau-t0-not-t1": ("topologies", sd.check_tau_axiom),
    "kappa-t0-not-t1": ("cotopologies", sd.check_kappa_axiom),
    "tau-t1-not-t2": ("topologies", sd.check_tau_axiom),
    "kappa-t1-not-t2": ("cotopologies", sd.check_kappa_axiom),
    "tau-regular-not-t1": ("topologies", sd.check_tau_axiom),
    "kappa-regular-not-t1": ("cotopologies", sd.check_kappa_axiom),
}


class TestRegistry:
    @pytest.mark.parametrize("prop", PROPERTIES)
    def test_every_property_has_a_witness(self, prop):
        assert find_counterexample(prop) is not None

    def test_unknown_property_rejected(self):
        with pytest.raises(ValueError):
            find_counterexample("tau-t5-not-t6")

    @pytest.mark.parametrize("prop", sorted(AXIOM_GAPS))
    def test_axiom_gap_witnesses_replay(self, prop):
        table, check = AXIOM_GAPS[prop]
        witness = find_counterexample(prop)
        doc = sd.parse(witness["dsl"])
        space = next(iter(getattr(doc, table).values()))
        assert check(space, witness["satisfies"]).holds
        assert not check(space, witness["violates"]).holds

    def test_witness_spaces_validate(self):
        witness = find_counterexample("tau-t0-not-t1")
        doc = sd.parse(witness["dsl"])
        tau = next(iter(doc.topologies.values()))
        assert sd.check_topology(tau.ctx, tau.members).ok

    def test_t0_gap_is_small(self):
        # an upper bound for this witness is the four-parameter worked
        # example; the search finds one with a single parameter
        witness = find_counterexample("tau-t0-not-t1")
        assert len(witness["context"]["params"]) <= 4

    def test_de_morgan_strictness_replays(self):
        witness = find_counterexample("de-morgan-strictness")
        doc = sd.parse(witness["dsl"])
        f, g = doc.softsets["F"], doc.softsets["G"]
        comps = [f.complement(), g.complement()]
        assert sd.intersect([f, g]).complement() != sd.union(comps)
        assert sd.intersect(comps) != sd.union([f, g]).complement()

    def test_nonduality_replays(self):
        witness = find_counterexample("closure-interior-nonduality")
        doc = sd.parse(witness["dsl"])
        tau = next(iter(doc.topologies.values()))
        ctx = tau.ctx
        kappa = sd.SoftCotopology.of(
            ctx,
            [
                sd.SoftSet(ctx, {e: set(v) for e, v in m["values"].items()})
                for m in witness["kappa_members"]
            ],
        )
        s = sd.SoftSet(
            ctx, {e: set(v) for e, v in witness["set"]["values"].items()}
        )
        left = sd.closure(kappa, s).complement()
        right = sd.interior(tau, s.complement())
        assert left != right
        assert left.to_json() == witness["complement_of_closure"]
        assert right.to_json() == witness["interior_of_complement"]

    def test_dito_gap_replays(self):
        witness = find_counterexample("dito-t0-not-t1")
        doc = sd.parse(witness["dsl"])
        tau = next(iter(doc.topologies.values()))
        ctx = tau.ctx
        kappa = sd.SoftCotopology.of(
            ctx,
            [
                sd.SoftSet(ctx, {e: set(v) for e, v in m["values"].items()})
                for m in witness["kappa_members"]
            ],
        )
        dito = sd.Ditopology(ctx, tau, kappa)
        assert sd.check_dito_axiom(dito, "T0").holds
        assert not sd.check_dito_axiom(dito, "T1").holds


class TestMonotonicity:
    def test_enlarging_bounds_keeps_the_witness(self):
        small = find_counterexample("tau-t0-not-t1", EnumBounds(2, 1, 6))
        large = find_counterexample("tau-t0-not-t1", EnumBounds(2, 2, 6))
        assert small == large

    def test_default_bounds_are_deterministic(self):
        assert find_counterexample("kappa-t1-not-t2") == find_counterexample(
            "kappa-t1-not-t2"
        )
