"""Tests for twisted cohomology of finite matrix groups and the normalizer."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact import cartanweyl as cw
from artifact import galois as gal
from artifact import groupaction as ga
from artifact.exactfield import CycNum, IMAG


I4 = ga.IDENTITY


def names(spec):
    return ga.gelt_from_names(spec)


@pytest.fixture(scope="module")
def stab_group():
    return gal.gelt_group(gal.stabilizer_finite_gens(), tag="generic-stabilizer")


@pytest.fixture(scope="module")
def normalizer():
    return gal.build_normalizer()


class TestEngine:
    def test_trivial_group_has_one_class(self):
        group = gal.gelt_group([], tag="trivial")
        classes = gal.h1(group)
        assert len(classes) == 1
        assert group.key(classes.representatives[0]) == group.key(group.identity)

    def test_order_two_group_has_two_classes(self):
        group = gal.gelt_group([names("-I,-I,-I,-I")])
        assert len(group) == 2
        classes = gal.h1(group)
        assert len(classes) == 2
        assert classes.sizes == (1, 1)

    def test_weyl_group_with_trivial_twist_has_seven_classes(self):
        view = gal.weyl_group_view(cw.weyl_group(), tag="coordinate-symmetries")
        classes = gal.h1(view)
        assert len(classes) == 7
        assert sum(classes.sizes) == len(gal.cocycles(view))

    @pytest.mark.parametrize("i", [2, 3, 4, 5, 6, 7, 8, 9, 10, 11])
    def test_engine_agrees_with_direct_involution_count(self, i):
        view = gal.weyl_group_view(cw.gamma_group(i))
        assert len(gal.h1(view)) == len(cw.gamma_h1(i))

    def test_class_sizes_sum_to_cocycle_count(self, stab_group):
        classes = gal.h1(stab_group)
        assert sum(classes.sizes) == len(gal.cocycles(stab_group))

    def test_generic_stabilizer_has_twelve_classes(self, stab_group):
        assert len(stab_group) == 32
        classes = gal.h1(stab_group)
        assert len(classes) == 12
        for z in classes.representatives:
            assert stab_group.key(
                stab_group.mul(z, stab_group.sigma(z))
            ) == stab_group.key(stab_group.identity)

    def test_representatives_sorted_and_distinct(self, stab_group):
        classes = gal.h1(stab_group)
        keys = [stab_group.key(z) for z in classes.representatives]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_product_of_h1_matches_h1_of_product(self):
        x = gal.gelt_group([names("-I,-I,-I,-I")])
        y = gal.gelt_group([names("J,J,J,J")])
        hx = len(gal.h1(x))
        hy = len(gal.h1(y))
        prod = gal.product_group(x, y, tag="product")
        assert len(prod) == len(x) * len(y)
        assert len(gal.h1(prod)) == hx * hy

    def test_twisted_action_is_an_action(self, stab_group):
        # acting by a then by b equals acting by b·a
        g = stab_group
        c = gal.cocycles(g)[3]
        a, b = g.elements[5], g.elements[17]
        step = g.mul(g.mul(a, c), g.sigma(g.inv(a)))
        two_steps = g.mul(g.mul(b, step), g.sigma(g.inv(b)))
        ba = g.mul(b, a)
        direct = g.mul(g.mul(ba, c), g.sigma(g.inv(ba)))
        assert g.key(two_steps) == g.key(direct)

    def test_twisted_image_of_cocycle_is_cocycle(self, stab_group):
        g = stab_group
        idk = g.key(g.identity)
        for c in gal.cocycles(g)[:6]:
            for a in g.elements[::7]:
                moved = g.mul(g.mul(a, c), g.sigma(g.inv(a)))
                assert g.key(g.mul(moved, g.sigma(moved))) == idk

    def test_sigma_not_involution_rejected(self):
        base = gal.gelt_group([names("J,J,J,J")])
        bad = gal.FiniteConjGroup(
            elements=base.elements,
            mul=base.mul,
            inv=base.inv,
            sigma=lambda x: base.identity,
            key=base.key,
            identity=base.identity,
            gens=base.gens,
        )
        with pytest.raises(ValueError, match="involution"):
            gal.cocycles(bad)

    def test_sigma_not_automorphism_rejected(self):
        base = gal.gelt_group([names("J,J,J,J")])
        jj = next(
            x for x in base.elements
            if base.key(x) == base.key(names("J,J,J,J"))
        )
        minus = next(
            x for x in base.elements
            if base.key(x) == base.key(names("-I,-I,-I,-I"))
        )
        swap = {
            base.key(jj): minus,
            base.key(minus): jj,
        }

        def bad_sigma(x):
            return swap.get(base.key(x), x)

        bad = gal.FiniteConjGroup(
            elements=base.elements,
            mul=base.mul,
            inv=base.inv,
            sigma=bad_sigma,
            key=base.key,
            identity=base.identity,
            gens=base.gens,
        )
        with pytest.raises(ValueError, match="automorphism"):
            gal.cocycles(bad)

    def test_sigma_leaving_group_rejected(self):
        base = gal.gelt_group([names("-I,-I,-I,-I")])

        def leak_sigma(x):
            return names("J,I,I,I")

        bad = gal.FiniteConjGroup(
            elements=base.elements,
            mul=ga.g_mul,
            inv=ga.g_inv,
            sigma=leak_sigma,
            key=ga.g_key,
            identity=ga.IDENTITY,
            gens=base.gens,
        )
        with pytest.raises(ValueError, match="preserve"):
            gal.cocycles(bad)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=3), max_size=6), st.integers(0, 11))
    def test_twisted_moves_stay_equivalent(self, stab_group, word, class_idx):
        g = stab_group
        classes = gal.h1(g)
        c = classes.representatives[class_idx % len(classes)]
        a = g.identity
        for k in word:
            a = g.mul(a, g.gens[k])
        moved = g.mul(g.mul(a, c), g.sigma(g.inv(a)))
        # verify by a fresh orbit search seeded at the moved element
        orbit = {g.key(moved)}
        frontier = [moved]
        while frontier:
            x = frontier.pop()
            for gen in g.gens:
                y = g.mul(g.mul(gen, x), g.sigma(g.inv(gen)))
                yk = g.key(y)
                if yk not in orbit:
                    orbit.add(yk)
                    frontier.append(y)
        assert g.key(c) in orbit


class TestNormalizer:
    def test_normalizer_order(self, normalizer):
        assert len(normalizer) == 6144

    def test_normalizer_h1_has_seven_classes(self, normalizer):
        classes = gal.h1_of_normalizer()
        assert len(classes) == 7
        assert sum(classes.sizes) == len(gal.cocycles(normalizer))

    def test_generator_images_generate_all_coordinate_symmetries(self, normalizer):
        images = []
        for g in normalizer.gens:
            w = gal.cocycle_to_weyl(g)
            images.append(w)
        full = set(cw.weyl_group())
        closure = {cw.W_IDENTITY}
        frontier = [cw.W_IDENTITY]
        while frontier:
            x = frontier.pop()
            for w in images:
                y = cw.w_mul(x, w)
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        assert closure == full

    def test_recorded_twists_are_cocycles_in_normalizer(self, normalizer):
        keys = {normalizer.key(x) for x in normalizer.elements}
        idk = normalizer.key(normalizer.identity)
        for basis in cw.seven_cartans():
            n = basis.nstar
            assert normalizer.key(n) in keys
            assert normalizer.key(
                normalizer.mul(n, normalizer.sigma(n))
            ) == idk

    def test_all_sixteen_lifts_verify(self, normalizer):
        keys = {normalizer.key(x) for x in normalizer.elements}
        idk = normalizer.key(normalizer.identity)
        rows = gal.weyl_cocycle_lifts()
        assert len(rows) == 16
        for w, lift in rows:
            assert normalizer.key(lift) in keys
            assert normalizer.key(
                normalizer.mul(lift, normalizer.sigma(lift))
            ) == idk
            assert gal.cocycle_to_weyl(lift) == w

    def test_specific_lift_images(self):
        assert gal.cocycle_to_weyl(names("-I,I,I,I")) == cw.wmat(
            [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
        )
        assert gal.cocycle_to_weyl(names("L,I,I,L")) == cw.wmat(
            [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        )
        assert gal.cocycle_to_weyl(names("I,K,I,K")) == cw.wmat(
            [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]]
        )

    def test_non_normalizing_element_rejected(self):
        shear = ga.gelt(
            ga.mat2(1, 1, 0, 1), ga.I2, ga.I2, ga.I2
        )
        with pytest.raises(ValueError, match="does not normalize"):
            gal.cocycle_to_weyl(shear)

    def test_torus_cocycles_split(self):
        # samples of unit-circle diagonal cocycles are all coboundaries
        for k in range(8):
            a = ga.D(CycNum.eta_power(2 * k)) if k else ga.I2
            c = ga.gelt(a, ga.I2, ga.I2, ga.I2)
            assert ga.g_key(ga.g_mul(c, ga.conj_g(c))) == ga.g_key(I4)
            b = ga.gelt(
                ga.D(CycNum.eta_power(k)) if k else ga.I2, ga.I2, ga.I2, ga.I2
            )
            split = ga.g_mul(b, ga.g_inv(ga.conj_g(b)))
            assert ga.g_key(split) == ga.g_key(c)


class TestVerifyClassList:
    def test_generic_stabilizer_list_passes(self, stab_group):
        classes = gal.h1(stab_group, case_tag="generic-stabilizer")
        spec = gal.StabilizerSpec(
            tag="generic-stabilizer",
            finite_gens=gal.stabilizer_finite_gens(),
            expected_count=12,
        )
        report = gal.verify_class_list(classes, spec)
        assert report["passed"]
        assert report["classes"] == 12
        assert report["finite_part_order"] == 32
        assert not report["failures"]

    def test_wrong_count_fails(self, stab_group):
        classes = gal.h1(stab_group)
        spec = gal.StabilizerSpec(
            tag="generic-stabilizer",
            finite_gens=gal.stabilizer_finite_gens(),
            expected_count=11,
        )
        with pytest.raises(gal.ClassListError) as err:
            gal.verify_class_list(classes, spec)
        kinds = {f["check"] for f in err.value.report["failures"]}
        assert "count" in kinds
        report = gal.verify_class_list(classes, spec, strict=False)
        assert not report["passed"]

    def test_non_cocycle_entry_fails(self):
        bad = gal.CocycleClassList(
            representatives=(names("J,I,I,I"),), case_tag="broken"
        )
        spec = gal.StabilizerSpec(tag="broken", finite_gens=(I4,))
        with pytest.raises(gal.ClassListError) as err:
            gal.verify_class_list(bad, spec)
        failure = err.value.report["failures"][0]
        assert failure["check"] == "cocycle"
        assert failure["case"] == "broken"

    def test_equivalent_pair_fails(self, stab_group):
        classes = gal.h1(stab_group)
        big = classes.sizes.index(max(classes.sizes))
        c = classes.representatives[big]
        partner = None
        for a in stab_group.elements:
            moved = stab_group.mul(
                stab_group.mul(a, c), stab_group.sigma(stab_group.inv(a))
            )
            if stab_group.key(moved) != stab_group.key(c):
                partner = moved
                break
        assert partner is not None
        doubled = gal.CocycleClassList(
            representatives=(c, partner), case_tag="duplicated"
        )
        spec = gal.StabilizerSpec(
            tag="duplicated", finite_gens=gal.stabilizer_finite_gens()
        )
        with pytest.raises(gal.ClassListError) as err:
            gal.verify_class_list(doubled, spec)
        failure = err.value.report["failures"][0]
        assert failure["check"] == "inequivalent"
        assert failure["case"] == "duplicated"
        assert tuple(sorted(failure["pair"])) == (0, 1)

    def test_torus_sample_catches_hidden_equivalence(self):
        # (−I,−I,I,I) splits through the identity component: it equals
        # t·σ(t)⁻¹ for t carrying D(i) in the first two slots.  A finite
        # part alone cannot see that, a documented torus sample can.
        z_list = gal.CocycleClassList(
            representatives=(I4, names("-I,-I,I,I")), case_tag="torus-probe"
        )
        without = gal.StabilizerSpec(tag="torus-probe", finite_gens=(I4,))
        assert gal.verify_class_list(z_list, without)["passed"]
        t = ga.gelt(ga.D(IMAG), ga.D(IMAG), ga.I2, ga.I2)
        with_sample = gal.StabilizerSpec(
            tag="torus-probe", finite_gens=(I4,), torus_samples=(t,)
        )
        with pytest.raises(gal.ClassListError) as err:
            gal.verify_class_list(z_list, with_sample)
        assert err.value.report["failures"][0]["check"] == "inequivalent"
