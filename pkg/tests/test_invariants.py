"""Tests for the polynomial invariants and the separation oracle."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact import cartanweyl as cw
from artifact import groupaction as ga
from artifact import invariants as inv
from artifact.exactfield import CycNum, IMAG, ONE, ZERO, rat
from artifact.liealg import Tensor


def lam(*values) -> list[CycNum]:
    return [rat(v) for v in values]


def random_mat2(rng) -> ga.Mat2:
    """Random rational unimodular 2×2 matrix (product of shears)."""
    m = ga.I2
    for _ in range(rng.randint(1, 4)):
        s = rat(rng.randint(-3, 3), rng.randint(1, 3))
        if rng.random() < 0.5:
            shear = ga.mat2(1, s, 0, 1)
        else:
            shear = ga.mat2(1, 0, s, 1)
        m = ga.m2_mul(m, shear)
    return m


def random_gelt(rng) -> ga.GElt:
    return ga.gelt(*(random_mat2(rng) for _ in range(4)))


def random_tensor(rng) -> Tensor:
    return Tensor(
        [rat(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(16)]
    )


class TestQuadratic:
    def test_coefficient_table_is_the_complement_pairing(self):
        table = inv.derive_quadratic()
        assert len(table) == 8
        for i in range(8):
            sign = -1 if bin(i).count("1") % 2 else 1
            assert table[(i, 15 - i)] == rat(sign)

    def test_normalization_value(self):
        u1 = cw.parametrize(1, lam(1, 0, 0, 0))
        assert inv.quadratic(u1) == ONE

    def test_rank_one_tensor_vanishes(self):
        assert inv.quadratic(Tensor.basis(0)) == ZERO

    def test_value_on_diagonal_family_is_sum_of_squares(self):
        p = cw.parametrize(1, lam(7, 3, 2, 1))
        assert inv.quadratic(p) == rat(49 + 9 + 4 + 1)

    def test_invariance_under_fifty_random_group_elements(self):
        rng = random.Random(7)
        t = random_tensor(rng)
        h = inv.quadratic(t)
        for _ in range(50):
            g = random_gelt(rng)
            assert inv.quadratic(ga.act_tensor(g, t)) == h

    @settings(max_examples=30, deadline=None)
    @given(st.integers(-5, 5), st.integers(1, 4))
    def test_homogeneity_degree_two(self, num, den):
        rng = random.Random(99)
        t = random_tensor(rng)
        c = rat(num, den)
        assert inv.quadratic(t.scale(c)) == c * c * inv.quadratic(t)


class TestFlattenings:
    def test_rank_one_flattening_vanishes(self):
        for pairing in inv.PAIRINGS:
            assert inv.flattening_det(Tensor.basis(0), pairing) == ZERO

    def test_product_tensor_flattening_vanishes(self):
        rng = random.Random(3)
        # a pure product tensor has rank-1 flattenings in every pairing
        vecs = [(rat(rng.randint(-3, 3)), rat(rng.randint(-3, 3))) for _ in range(4)]
        cs = []
        for idx in range(16):
            v = ONE
            for s in range(4):
                bit = (idx >> (3 - s)) & 1
                v = v * vecs[s][bit]
            cs.append(v)
        t = Tensor(cs)
        for pairing in inv.PAIRINGS:
            assert inv.flattening_det(t, pairing) == ZERO

    def test_degenerate_diagonal_family_values(self):
        p = cw.parametrize(1, lam(2, 1, 1, 1))
        values = [inv.flattening_det(p, pr) for pr in inv.PAIRINGS]
        assert values == [ZERO, ZERO, ZERO]

    def test_generic_diagonal_family_values(self):
        p = cw.parametrize(1, lam(7, 3, 2, 1))
        assert inv.flattening_det(p, "12|34") == rat(-240)
        assert inv.flattening_det(p, "13|24") == rat(-360)
        assert inv.flattening_det(p, "14|23") == rat(-120)

    def test_diagonal_family_factorization(self):
        # on the diagonal family the three flattenings factor as
        # (λ1²−λk²)(λm²−λl²); checked for a second parameter choice
        a, b, c, d = 5, 4, 2, 1
        p = cw.parametrize(1, lam(a, b, c, d))
        assert inv.flattening_det(p, "12|34") == rat((a * a - d * d) * (c * c - b * b))
        assert inv.flattening_det(p, "13|24") == rat((a * a - c * c) * (d * d - b * b))
        assert inv.flattening_det(p, "14|23") == rat((a * a - b * b) * (d * d - c * c))

    def test_invariance_under_fifty_random_group_elements(self):
        rng = random.Random(11)
        t = random_tensor(rng)
        base = [inv.flattening_det(t, pr) for pr in inv.PAIRINGS]
        for _ in range(50):
            g = random_gelt(rng)
            moved = ga.act_tensor(g, t)
            assert [inv.flattening_det(moved, pr) for pr in inv.PAIRINGS] == base

    def test_homogeneity_degree_four(self):
        rng = random.Random(13)
        t = random_tensor(rng)
        c = rat(3, 2)
        scale = c ** 4
        for pr in inv.PAIRINGS:
            assert inv.flattening_det(t.scale(c), pr) == scale * inv.flattening_det(t, pr)

    def test_unknown_pairing_rejected(self):
        with pytest.raises(ValueError, match="unknown pairing"):
            inv.flattening_det(Tensor.basis(0), "12|43")


class TestHyperdet:
    def test_ghz_slice(self):
        ghz = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
        assert inv.hyperdet222(ghz) == ONE

    def test_w_slice(self):
        w = [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]
        assert inv.hyperdet222(w) == ZERO

    def test_zero_array(self):
        zero = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        assert inv.hyperdet222(zero) == ZERO

    def test_slice_of_diagonal_state(self):
        u1 = cw.parametrize(1, lam(1, 0, 0, 0))
        assert inv.slice_hyperdet(u1, 1, 0) == ZERO
        p = cw.parametrize(1, lam(1, 1, 1, 1))
        assert inv.slice_hyperdet(p, 1, 0) == rat(4)

    def test_slice_arguments_validated(self):
        u1 = cw.parametrize(1, lam(1, 0, 0, 0))
        with pytest.raises(ValueError):
            inv.slice_hyperdet(u1, 5, 0)
        with pytest.raises(ValueError):
            inv.slice_hyperdet(u1, 1, 2)


class TestSeparation:
    def test_never_separates_conjugates(self):
        rng = random.Random(17)
        t = random_tensor(rng)
        for _ in range(10):
            g = random_gelt(rng)
            assert not inv.separates(t, ga.act_tensor(g, t))

    def test_separates_scaled_state(self):
        u1 = cw.parametrize(1, lam(1, 0, 0, 0))
        assert inv.separates(u1, u1.scale(rat(2)))

    def test_does_not_separate_itself(self):
        rng = random.Random(19)
        t = random_tensor(rng)
        assert not inv.separates(t, t)

    def test_separates_distinct_diagonal_families(self):
        p = cw.parametrize(1, lam(7, 3, 2, 1))
        q = cw.parametrize(1, lam(7, 3, 1, 2))
        # same H, different flattening pattern
        assert inv.quadratic(p) == inv.quadratic(q)
        assert inv.separates(p, q)

    def test_real_signature_patterns(self):
        p = cw.parametrize(1, lam(7, 3, 2, 1))
        assert inv.real_signature(inv.invariants_of(p)) == ("+", "-", "-", "-")
        u1 = cw.parametrize(1, lam(1, 0, 0, 0))
        iu1 = u1.scale(IMAG)
        assert inv.real_signature(inv.invariants_of(iu1)) == ("-", "0", "0", "0")

    def test_signature_marks_non_real_values(self):
        u1 = cw.parametrize(1, lam(1, 0, 0, 0))
        t = u1.scale(ONE + IMAG)
        sig = inv.real_signature(inv.invariants_of(t))
        assert sig[0] == "C"

    def test_sign_of_real_rejects_imaginary(self):
        with pytest.raises(ValueError, match="non-real"):
            inv.sign_of_real(IMAG)

    def test_approximation_accuracy(self):
        from cmath import exp, pi

        approx = inv.approx_complex(CycNum.eta_power(1))
        assert abs(approx - exp(1j * pi / 8)) < 1e-12

    def test_invariant_vector_serialization(self):
        p = cw.parametrize(1, lam(2, 1, 1, 1))
        d = inv.invariants_of(p).as_dict()
        assert d == {"H": "7", "L12": "0", "L13": "0", "L14": "0"}


class TestCounting:
    def test_two_center_invariant_ring_dimension(self):
        report = inv.pair_counting_check()
        assert report["two_copies"] == 16
        assert report["group_dim"] == 9
        assert report["invariant_ring_dim"] == 7
        assert 2 * 8 - 9 == 7
