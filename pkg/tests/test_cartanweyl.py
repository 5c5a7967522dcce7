"""Tests for restricted roots, Weyl group, subsystems, and real Cartan bases."""

import random
from fractions import Fraction

import pytest

from artifact.cartanweyl import (
    W_IDENTITY,
    cartan_detect,
    component_membership,
    from_u_coords,
    functional_after,
    gamma_group,
    gamma_h1,
    h_action_matrix,
    is_regular,
    member_roots,
    parametrize,
    reflection,
    restricted_roots,
    seven_cartans,
    subsystem,
    u_coords,
    vanishing_roots,
    w_act_coords,
    w_mul,
    w_pi_group,
    weyl_group,
    weyl_stabilizer,
)
from artifact.exactfield import IMAG, ONE, ZERO, CycNum, rat
from artifact.groupaction import (
    act_tensor,
    conj_g,
    g_inv,
    g_mul,
    gelt,
    gelt_from_names,
    m2_neg,
    mat2,
    named,
)
from artifact.liealg import (
    Tensor,
    bracket,
    is_semisimple,
    lie_is_zero,
    tensor_to_g1,
    u_basis,
)
from artifact import _linalg as la


class TestRestrictedRoots:
    def test_count(self):
        assert len(restricted_roots()) == 24

    def test_shapes(self):
        doubled = [r for r in restricted_roots() if sorted(map(abs, r.coeffs)) == [0, 0, 0, 2]]
        mixed = [r for r in restricted_roots() if sorted(map(abs, r.coeffs)) == [1, 1, 1, 1]]
        assert len(doubled) == 8
        assert len(mixed) == 16

    def test_coroot_pairing(self):
        for r in restricted_roots():
            val = sum(Fraction(c) * h for c, h in zip(r.coeffs, r.h_alpha))
            assert val == 2

    def test_roots_come_in_pairs(self):
        keys = {r.coeffs for r in restricted_roots()}
        for k in keys:
            assert tuple(-c for c in k) in keys

    def test_value_at(self):
        lam = [rat(7), rat(3), rat(2), rat(1)]
        vals = {r.value_at(lam).to_fraction() for r in restricted_roots()}
        assert ZERO.to_fraction() not in vals


class TestWeylGroup:
    def test_order(self):
        assert len(weyl_group()) == 192

    def test_reflections_are_involutions(self):
        for r in restricted_roots():
            s = reflection(r)
            assert w_mul(s, s) == W_IDENTITY

    def test_closed_under_composition(self):
        rng = random.Random(5)
        group = set(weyl_group())
        glist = sorted(group)
        for _ in range(50):
            a, b = rng.choice(glist), rng.choice(glist)
            assert w_mul(a, b) in group

    def test_permutes_roots(self):
        rng = random.Random(9)
        keys = {r.coeffs for r in restricted_roots()}
        for _ in range(10):
            w = rng.choice(weyl_group())
            assert {functional_after(k, w) for k in keys} == keys

    def test_generic_stabilizer_trivial(self):
        lam = [rat(7), rat(3), rat(2), rat(1)]
        assert weyl_stabilizer(lam) == [W_IDENTITY]

    def test_reflection_action(self):
        # the reflection for a doubled root flips one u-coordinate
        r = next(x for x in restricted_roots() if x.coeffs == (2, 0, 0, 0))
        s = reflection(r)
        lam = [rat(5), rat(3), rat(2), rat(1)]
        assert [v.to_fraction() for v in w_act_coords(s, lam)] == [-5, 3, 2, 1]


class TestSubsystems:
    def test_member_counts(self):
        sizes = [len(member_roots(i)) for i in range(1, 12)]
        assert sizes == [0, 2, 6, 4, 4, 4, 12, 12, 12, 6, 24]

    def test_membership_examples(self):
        u = u_basis()
        assert component_membership(u[0]) == 10
        assert component_membership(u[0] + u[1] + u[2]) == 2
        assert component_membership(Tensor.zero()) == 11
        assert component_membership(from_u_coords([rat(7), rat(3), rat(2), rat(1)])) == 1

    def test_membership_all_families(self):
        expects = {
            1: [rat(7), rat(3), rat(2), rat(1)],
            2: [rat(1), rat(1), rat(1)],
            3: [rat(1), rat(1)],
            4: [rat(3), rat(1)],
            5: [rat(3), rat(1)],
            6: [rat(3), rat(1)],
            7: [rat(1)],
            8: [rat(1)],
            9: [rat(1)],
            10: [rat(1)],
            11: [],
        }
        for i, lam in expects.items():
            p = parametrize(i, lam)
            assert component_membership(p) == i, i

    def test_membership_after_weyl_move(self):
        rng = random.Random(3)
        p = parametrize(4, [rat(3), rat(1)])
        coords = u_coords(p)
        for _ in range(5):
            w = rng.choice(weyl_group())
            moved = from_u_coords(w_act_coords(w, coords))
            assert component_membership(moved) == 4

    def test_membership_complex_parameters(self):
        # imaginary parameters are fine: the pattern only needs exact zero tests
        p = parametrize(10, [IMAG])
        assert component_membership(p) == 10

    def test_regularity(self):
        assert is_regular(2, [rat(1), rat(1), rat(1)])
        assert not is_regular(2, [rat(2), rat(1), rat(1)])  # 2 = 1+1 wall
        assert not is_regular(2, [rat(0), rat(1), rat(1)])
        assert is_regular(4, [rat(3), rat(1)])
        assert not is_regular(4, [rat(1), rat(1)])
        assert is_regular(11, [])

    def test_param_count_error(self):
        with pytest.raises(ValueError):
            parametrize(10, [rat(1), rat(2)])

    def test_non_cartan_input_error(self):
        with pytest.raises(ValueError):
            component_membership(Tensor.basis("0100"))


class TestGammaGroups:
    def test_orders(self):
        assert [len(gamma_group(i)) for i in range(1, 12)] == [
            192, 8, 2, 8, 8, 8, 2, 2, 2, 2, 1
        ]

    def test_h1_sizes(self):
        assert [len(gamma_h1(i)) for i in range(1, 11)] == [
            7, 8, 2, 4, 4, 4, 2, 2, 2, 2
        ]

    def test_generators_in_weyl_group(self):
        group = set(weyl_group())
        for i in range(2, 12):
            gens = subsystem(i).gamma_gens
            for g in gens:
                assert g in group, i

    def test_generators_normalize_w_pi(self):
        for i in range(2, 12):
            wp = set(w_pi_group(i))
            for g in subsystem(i).gamma_gens:
                conj = {w_mul(w_mul(g, x), _winv(g)) for x in wp}
                assert conj == wp, i

    def test_w_pi_orders(self):
        # A1 -> 2, A2 -> 6, 2A1 -> 4, A3 -> 24, 3A1 -> 8, D4 -> 192
        assert len(w_pi_group(2)) == 2
        assert len(w_pi_group(3)) == 6
        assert len(w_pi_group(4)) == 4
        assert len(w_pi_group(7)) == 24
        assert len(w_pi_group(10)) == 8
        assert len(w_pi_group(11)) == 192

    def test_h1_representatives_are_involutions(self):
        for i in range(1, 11):
            for z in gamma_h1(i):
                assert w_mul(z, z) == W_IDENTITY


def _winv(w):
    n = 4
    rows = [[w[i][j] for j in range(n)] + [Fraction(int(i == k)) for k in range(n)]
            for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [v / pv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


class TestSevenCartans:
    def test_witness_identities(self):
        for cb in seven_cartans():
            assert g_mul(g_inv(cb.gstar), conj_g(cb.gstar)) == cb.nstar

    def test_expected_witness_cocycles(self):
        cs = seven_cartans()
        assert cs[0].nstar == gelt_from_names("I,I,I,I")
        assert cs[1].nstar == gelt_from_names("-I,I,I,I")
        M, N = named("M"), named("N")
        assert cs[2].nstar == gelt(M, M, m2_neg(N), N)
        assert cs[3].nstar == gelt_from_names("L,I,I,L")
        assert cs[4].nstar == gelt_from_names("I,L,I,L")
        assert cs[5].nstar == gelt_from_names("I,I,L,L")
        assert cs[6].nstar == gelt_from_names("M,M,M,M")

    def test_bases_real_commuting_semisimple(self):
        for cb in seven_cartans():
            for a in cb.basis:
                assert a.is_real()
                assert is_semisimple(a)
            for a in cb.basis:
                for b in cb.basis:
                    assert lie_is_zero(
                        bracket(tensor_to_g1(a), tensor_to_g1(b))
                    )

    def test_basis_spans_transported_cartan(self):
        # each basis vector lies in the complex span of {g* u_k}
        for cb in seven_cartans():
            cols = [act_tensor(cb.gstar, uk) for uk in u_basis()]
            mat = [[cols[j].c[i] for j in range(4)] for i in range(16)]
            for b in cb.basis:
                assert la.solve(mat, list(b.c)) is not None, cb.index

    def test_tau_sign_patterns(self):
        pats = [
            (1, 1, 1, 1), (-1, -1, -1, -1), (-1, -1, -1, 1), (-1, -1, 1, 1),
            (-1, 1, -1, 1), (-1, 1, 1, -1), (-1, 1, 1, 1),
        ]
        for cb, pat in zip(seven_cartans(), pats):
            m = h_action_matrix(cb.nstar)
            assert m is not None
            exp = tuple(
                tuple(Fraction(pat[i] if i == j else 0) for j in range(4))
                for i in range(4)
            )
            assert m == exp

    def test_detect_examples(self):
        got = cartan_detect(Tensor.basis("0000") + Tensor.basis("1111"))
        assert got is not None and got[0] == 1
        assert [c.to_fraction() for c in got[1]] == [1, 0, 0, 0]
        got = cartan_detect(Tensor.basis("0000") - Tensor.basis("1111"))
        assert got is not None and got[0] == 2
        assert [c.to_fraction() for c in got[1]] == [1, 0, 0, 0]
        assert cartan_detect(Tensor.basis("0100")) is None

    def test_detect_prefers_first_listed(self):
        # e0011+e1100 = u4 lies in spaces 1 and 4's spans? u4 appears in bases
        # u (index 1), w (3), x (4), y (5), z uses v4, t uses u4.
        got = cartan_detect(Tensor.basis("0011") + Tensor.basis("1100"))
        assert got is not None and got[0] == 1


class TestHActionMatrix:
    def test_shear_does_not_normalize(self):
        shear = gelt(mat2(ONE, ONE, ZERO, ONE), named("I"), named("I"), named("I"))
        assert h_action_matrix(shear) is None

    def test_weyl_lift_consistency(self):
        # (J,J,J,J) normalizes h: check its matrix squares to identity
        g = gelt_from_names("J,J,J,J")
        m = h_action_matrix(g)
        assert m is not None
        assert w_mul(m, m) == W_IDENTITY
