import itertools

import pytest

import softdito as sd
from softdito import (
    Context,
    SoftMap,
    SoftSet,
    compose,
    identity_map,
    image,
    intersect,
    null,
    preimage,
    restrict_to_image,
    union,
    whole,
)


@pytest.fixture(scope="module")
def p4_parts(p4):
    return (
        p4.contexts["C1"],
        p4.contexts["C2"],
        p4.maps["f"],
        p4.cotopologies["k1"],
        p4.cotopologies["k2"],
    )


class TestConstruction:
    def test_partial_phi_rejected(self):
        c1 = Context(("a", "c"), ("e1",))
        c2 = Context(("1", "2"), ("p1",))
        with pytest.raises(ValueError):
            SoftMap.of(c1, c2, {"a": "1"}, {"e1": "p1"})

    def test_partial_psi_rejected(self):
        c1 = Context(("a",), ("e1", "e2"))
        c2 = Context(("1",), ("p1",))
        with pytest.raises(ValueError):
            SoftMap.of(c1, c2, {"a": "1"}, {"e1": "p1"})

    def test_injective_surjective(self, p4_parts):
        _, _, f, _, _ = p4_parts
        assert f.is_injective() is False  # psi collapses both parameters
        assert f.is_surjective() is False


class TestImage:
    def test_null_maps_to_null(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        assert image(f, null(c1, {"e1", "e2"})) == null(c2, {"p2"})

    def test_fixture_value(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        k = SoftSet(c1, {"e1": {"c"}, "e2": {"c"}})
        assert image(f, k) == SoftSet(c2, {"p2": {"2"}})

    def test_whole_image_strictly_below_whole(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        img = image(f, whole(c1, c1.params))
        assert img.is_subset_of(whole(c2, c2.params))
        assert img != whole(c2, c2.params)
        assert img == SoftSet(c2, {"p2": {"1", "2"}})


class TestPreimage:
    def test_whole_pulls_back_to_whole(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        assert preimage(f, whole(c2, c2.params)) == whole(c1, c1.params)

    def test_null_pulls_back_to_null(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        assert preimage(f, null(c2, c2.params)) == null(c1, c1.params)

    def test_fixture_value(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        target = SoftSet(c2, {"p1": {"1", "2"}, "p2": {"2"}})
        assert preimage(f, target) == SoftSet(c1, {"e1": {"c"}, "e2": {"c"}})

    def test_unreached_parameters_leave_the_domain(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        only_p1 = SoftSet(c2, {"p1": {"1"}})
        assert preimage(f, only_p1) == null(c1, ())


class TestCompose:
    def test_identity_neutral(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        assert compose(identity_map(c2), f) == f
        assert compose(f, identity_map(c1)) == f

    def test_preserves_injectivity(self):
        ctx = sd.bounded_context(2, 1)
        swap = SoftMap.of(ctx, ctx, {"u1": "u2", "u2": "u1"}, {"e1": "e1"})
        assert compose(swap, swap).is_injective()

    def test_context_mismatch_rejected(self, p4_parts):
        c1, _, f, _, _ = p4_parts
        with pytest.raises(ValueError):
            compose(f, f)

    def test_preimage_composes(self):
        ctx = sd.bounded_context(2, 1)
        sets = sd.enumerate_soft_sets(ctx)
        maps = sd.enumerate_maps(ctx, ctx)
        for f, g in itertools.product(maps, maps):
            gf = compose(g, f)
            for s in sets:
                assert preimage(gf, s) == preimage(f, preimage(g, s))


class TestMappingLaws:
    def test_image_distributes_over_union(self, p4_parts):
        c1, _, f, _, _ = p4_parts
        sets = sd.enumerate_soft_sets(c1)
        for a, b in itertools.combinations(sets, 2):
            assert image(f, union([a, b])) == union([image(f, a), image(f, b)])
            assert image(f, intersect([a, b])).is_subset_of(
                intersect([image(f, a), image(f, b)])
            )

    def test_preimage_distributes_exactly(self, p4_parts):
        _, c2, f, _, _ = p4_parts
        sets = sd.enumerate_soft_sets(c2)
        for a, b in itertools.combinations(sets, 2):
            assert preimage(f, union([a, b])) == union(
                [preimage(f, a), preimage(f, b)]
            )
            assert preimage(f, intersect([a, b])) == intersect(
                [preimage(f, a), preimage(f, b)]
            )

    def test_round_trips(self, p4_parts):
        c1, c2, f, _, _ = p4_parts
        range_set = image(f, whole(c1, c1.params))
        for a in sd.enumerate_soft_sets(c2):
            back = image(f, preimage(f, a))
            assert back.is_subset_of(a)
            assert back == intersect([a, range_set])
            assert preimage(f, a.complement()) == preimage(f, a).complement()
        for a in sd.enumerate_soft_sets(c1):
            assert a.is_subset_of(preimage(f, image(f, a)))


class TestRestrictToImage:
    def test_fixture_members(self, p4_parts):
        _, c2, f, _, k2 = p4_parts
        induced = restrict_to_image(f, k2)
        expected = {
            SoftSet(c2, {"p2": {"2"}}),
            SoftSet(c2, {"p2": {"1", "2"}}),
        }
        assert set(induced.members) == expected

    def test_surjective_map_keeps_the_family(self):
        ctx = sd.bounded_context(2, 1)
        k = sd.SoftCotopology.of(ctx, [SoftSet(ctx, {"e1": {"u1"}})])
        assert restrict_to_image(identity_map(ctx), k) == k

    def test_null_members_stay_null(self, p4_parts):
        _, c2, f, _, k2 = p4_parts
        induced = restrict_to_image(f, k2)
        assert all(not m.is_null() for m in induced.members)
