"""Tests for the semisimple orbit tables, verification, and classification."""

import random

import pytest

from artifact import cartanweyl as cw
from artifact import galois, invariants, liealg
from artifact import ssorbits as ss
from artifact.exactfield import CycNum, IMAG, MINUS_ONE, ONE, ZERO, rat
from artifact.groupaction import act_tensor, conj_g, g_inv, g_key, g_mul
from artifact.liealg import Tensor


def _tensor_key(t: Tensor):
    return tuple((c.nums, c.den) for c in t.c)


# ---------------------------------------------------------------------------
# table data shape
# ---------------------------------------------------------------------------


def test_block_inventory():
    bs = ss.blocks()
    assert len(bs) == 37
    sizes = {(b.i, b.j): len(b.rows) for b in bs}
    # families and block counts
    fams = {}
    for (i, j) in sizes:
        fams.setdefault(i, []).append(j)
    assert {i: sorted(js) for i, js in fams.items()} == {
        1: [1, 2, 3, 4, 5, 6, 7],
        2: [1, 2, 3, 4, 5, 6, 7, 8],
        3: [1, 2],
        4: [1, 2, 3, 4],
        5: [1, 2, 3, 4],
        6: [1, 2, 3, 4],
        7: [1, 2],
        8: [1, 2],
        9: [1, 2],
        10: [1, 2],
    }
    # representative counts per family-1 block
    assert [sizes[(1, j)] for j in range(1, 8)] == [12, 12, 4, 4, 4, 4, 4]
    assert [sizes[(2, j)] for j in range(1, 9)] == [8, 4, 4, 4, 4, 4, 4, 8]
    assert sum(sizes.values()) == 162


def test_transported_block_bases():
    # the permuted families act on the expected bases
    assert [ss.block(5, j).basis_name for j in (1, 2, 3, 4)] == ["u", "t", "v", "y"]
    assert [ss.block(6, j).basis_name for j in (1, 2, 3, 4)] == ["u", "t", "v", "x"]
    assert [ss.block(8, j).basis_name for j in (1, 2)] == ["u", "v"]
    assert [ss.block(9, j).basis_name for j in (1, 2)] == ["u", "v"]


def test_block_witness_identities():
    # every block's stored witness reproduces its twist exactly, and the
    # twist acts on the fixed Cartan by the recorded coordinate matrix
    for blk in ss.blocks():
        rel = g_mul(g_inv(blk.g), conj_g(blk.g))
        assert g_key(rel) == g_key(blk.n), (blk.i, blk.j)
        assert cw.h_action_matrix(blk.n) == blk.gamma, (blk.i, blk.j)


def test_unknown_block_raises():
    with pytest.raises(KeyError):
        ss.block(11, 1)
    with pytest.raises(KeyError):
        ss.reality_pattern(1, 9)


# ---------------------------------------------------------------------------
# admissibility patterns
# ---------------------------------------------------------------------------


def test_reality_pattern_examples():
    three = rat(3)
    assert ss.reality_pattern(10, 1).accepts((three,))
    assert not ss.reality_pattern(10, 1).accepts((IMAG,))
    assert ss.reality_pattern(10, 2).accepts((rat(2) * IMAG,))
    assert not ss.reality_pattern(10, 2).accepts((three,))
    assert ss.reality_pattern(1, 1).accepts((rat(7), rat(3), rat(2), ONE))
    # regularity: coordinates summing to zero are rejected
    assert not ss.reality_pattern(1, 1).accepts((rat(6), rat(3), rat(2), ONE))
    # zero component rejected
    assert not ss.reality_pattern(1, 1).accepts((rat(7), rat(3), rat(2), ZERO))


def test_reality_pattern_coupled():
    # the paired-parameter blocks want conjugate-related components
    pat = ss.reality_pattern(4, 4)
    assert pat.accepts((ONE + IMAG, MINUS_ONE + IMAG))
    assert not pat.accepts((ONE + IMAG, ONE + IMAG))
    assert not pat.accepts((ONE, MINUS_ONE))


def test_default_lambda_admissible():
    for blk in ss.blocks():
        lams = ss.default_lambda(blk.i, blk.j)
        assert blk.reality.accepts(lams), (blk.i, blk.j)


# ---------------------------------------------------------------------------
# real points
# ---------------------------------------------------------------------------


def test_real_point_identity_block():
    # j=1 blocks have identity witness: the real point is the parameter itself
    for i in (1, 2, 3, 4, 7, 10):
        lams = ss.default_lambda(i, 1)
        p, g = ss.real_point(i, 1, lams)
        assert p == cw.parametrize(i, lams)
        assert p.is_real()


def test_real_point_v_basis_example():
    p, g = ss.real_point(10, 2, (IMAG,))
    # coordinates ı·λ·(1,0,0,0) in the second basis at λ=ı give -1 on the
    # first vector
    det = cw.cartan_detect(p)
    assert det is not None
    m, coords = det
    assert m == 2
    assert coords == (MINUS_ONE, ZERO, ZERO, ZERO)
    assert p.is_real()


def test_real_point_is_real_everywhere():
    rng = random.Random(0)
    checked = 0
    for blk in ss.blocks():
        lams = ss.default_lambda(blk.i, blk.j)
        p, g = ss.real_point(blk.i, blk.j, lams)
        assert p.is_real(), (blk.i, blk.j)
        assert p.conjugate() == p
        # witness relation g^{-1}·conj(g) = twist
        assert g_key(g_mul(g_inv(g), conj_g(g))) == g_key(blk.n)
        checked += 1
    assert checked == 37


def test_real_point_random_parameters():
    # randomized admissible parameters stay real (20 draws across blocks)
    rng = random.Random(7)
    blocks = [ss.block(2, 1), ss.block(2, 2), ss.block(10, 1), ss.block(10, 2)]
    done = 0
    while done < 20:
        blk = rng.choice(blocks)
        base = ss.default_lambda(blk.i, blk.j)
        scale = rat(rng.randint(1, 9), rng.randint(1, 4))
        sign = ONE if rng.random() < 0.5 else MINUS_ONE
        lams = tuple(v * scale * sign for v in base)
        if not blk.reality.accepts(lams):
            continue
        p, _ = ss.real_point(blk.i, blk.j, lams)
        assert p.is_real()
        done += 1


def test_real_point_inadmissible_raises():
    with pytest.raises(ValueError):
        ss.real_point(10, 1, (IMAG,))
    with pytest.raises(ValueError):
        ss.real_point(1, 1, (ONE, ONE, ONE, ONE))


# ---------------------------------------------------------------------------
# representatives and rows
# ---------------------------------------------------------------------------


def test_orbit_reps_counts():
    assert len(ss.orbit_reps(1, 1, (rat(7), rat(3), rat(2), ONE))) == 12
    assert len(ss.orbit_reps(3, 1, (ONE, rat(2)))) == 4
    reps = ss.orbit_reps(10, 1, (rat(5),))
    assert len(reps) == 2


def test_orbit_reps_reciprocal_row():
    # second representative of the rank-one family carries 2/λ coefficients
    reps = dict(ss.orbit_reps(10, 1, (rat(5),)))
    det = cw.cartan_detect(reps[2])
    assert det is not None
    m, coords = det
    assert m == 1
    f = rat(2, 5)
    assert coords == (-f, f, f, f)


def test_row_tensors_distinct():
    seen = {}
    for blk in ss.blocks():
        lams = ss.default_lambda(blk.i, blk.j)
        for row in blk.rows:
            t = ss.row_tensor(blk.i, blk.j, row.k, lams)
            key = _tensor_key(t)
            assert key not in seen, ((blk.i, blk.j, row.k), seen[key])
            seen[key] = (blk.i, blk.j, row.k)
    assert len(seen) == 162


def test_within_block_invariants_agree():
    # representatives of one block at one parameter lie in one complex orbit
    for blk in ss.blocks():
        lams = ss.default_lambda(blk.i, blk.j)
        vals = []
        for row in blk.rows:
            if row.reciprocal:
                continue
            t = ss.row_tensor(blk.i, blk.j, row.k, lams)
            vals.append(invariants.invariants_of(t))
        assert len({repr(v) for v in vals}) == 1, (blk.i, blk.j)


def test_rows_are_semisimple():
    for (i, j) in ((1, 1), (2, 2), (4, 4), (10, 2)):
        blk = ss.block(i, j)
        lams = ss.default_lambda(i, j)
        for row in blk.rows:
            t = ss.row_tensor(i, j, row.k, lams)
            assert liealg.is_semisimple(t), (i, j, row.k)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def test_verify_ss_tables_all():
    report = ss.verify_ss_tables()
    assert report["ok"], report["failures"][:3]
    assert report["blocks"] == 37
    assert report["rows"] == 162
    assert report["sizes"]["1.1"] == 12
    assert report["sizes"]["3.1"] == 4
    assert report["sizes"]["10.1"] == 2


def test_verify_single_case():
    report = ss.verify_ss_tables(case=7)
    assert report["ok"]
    assert report["blocks"] == 2
    assert report["rows"] == 4


def test_check_row_negative_control():
    # a corrupted representative is rejected with its row identifier
    lams = ss.default_lambda(2, 1)
    t = ss.row_tensor(2, 1, 1, lams)
    mutated = Tensor(tuple(-c for c in t.c))
    with pytest.raises(ss.TableRowError) as exc:
        ss.check_row(2, 1, 1, lams=lams, tensor=mutated)
    assert exc.value.row == (2, 1, 1)


def test_check_row_accepts_genuine():
    out = ss.check_row(1, 3, 2)
    assert out["ok"]


# ---------------------------------------------------------------------------
# real coordinate symmetries
# ---------------------------------------------------------------------------


def test_real_weyl_group_sizes():
    sizes = [len(ss.real_weyl_group(m)) for m in range(1, 8)]
    assert sizes == [16, 16, 4, 8, 8, 8, 4]


def test_real_weyl_group_contains_identity_and_closes():
    from fractions import Fraction

    ident = tuple(
        tuple(Fraction(1 if a == b else 0) for b in range(4)) for a in range(4)
    )
    for m in range(1, 8):
        grp = set(ss.real_weyl_group(m))
        assert ident in grp
        sample = sorted(grp)[:6]
        for w in sample:
            for v in sample:
                prod = tuple(
                    tuple(
                        sum(w[a][c] * v[c][b] for c in range(4)) for b in range(4)
                    )
                    for a in range(4)
                )
                assert prod in grp


def test_real_weyl_group_half_turns():
    # the all-plus basis admits eight rotation-type symmetries whose matrix
    # entries are halves
    halves = [
        w
        for w in ss.real_weyl_group(1)
        if any(abs(w[a][b]) == rat(1, 2).to_fraction() for a in range(4) for b in range(4))
    ]
    assert len(halves) == 8


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def test_classify_examples():
    u = cw.u_basis()
    t = Tensor(
        tuple(a + b + c for a, b, c in zip(u[0].c, u[1].c, u[2].c))
    )
    lab = ss.classify_semisimple(t)
    assert (lab.i, lab.j, lab.k, lab.m) == (2, 1, 1, 1)
    assert lab.lams == (ONE, ONE, ONE)

    p, _ = ss.real_point(10, 2, (IMAG,))
    lab = ss.classify_semisimple(p)
    assert (lab.i, lab.j, lab.k, lab.m) == (10, 2, 1, 2)
    assert lab.lams == (IMAG,)


def test_classify_round_trip_all_rows():
    for blk in ss.blocks():
        lams = ss.default_lambda(blk.i, blk.j)
        for row in blk.rows:
            t = ss.row_tensor(blk.i, blk.j, row.k, lams)
            lab = ss.classify_semisimple(t)
            assert (lab.i, lab.j, lab.k) == (blk.i, blk.j, row.k)
            assert lab.lams == tuple(lams)


def test_classify_is_idempotent_on_labels():
    # classifying a label's own instantiation returns the label unchanged,
    # also when the original input used non-canonical parameter signs
    rng = random.Random(3)
    cases = [(1, 1), (2, 1), (2, 4), (4, 1), (10, 1)]
    for (i, j) in cases:
        blk = ss.block(i, j)
        base = ss.default_lambda(i, j)
        for row in blk.rows[:2]:
            signs = [ONE if rng.random() < 0.5 else MINUS_ONE for _ in base]
            lams = tuple(v * s for v, s in zip(base, signs))
            if not blk.reality.accepts(lams):
                continue
            t = ss.row_tensor(i, j, row.k, lams)
            lab = ss.classify_semisimple(t)
            assert (lab.i, lab.j) == (i, j)
            rep = ss.row_tensor(lab.i, lab.j, lab.k, lab.lams)
            lab2 = ss.classify_semisimple(rep)
            assert lab2 == lab


def test_classify_canonicalizes_parameters():
    # a sign-flipped admissible parameter classifies to an all-positive one
    blk = ss.block(2, 1)
    lams = (MINUS_ONE, rat(3), rat(5))
    assert blk.reality.accepts(lams)
    t = ss.row_tensor(2, 1, 1, lams)
    lab = ss.classify_semisimple(t)
    assert (lab.i, lab.j) == (2, 1)
    assert lab.lams == (ONE, rat(3), rat(5))


def test_classify_errors():
    e0 = [ZERO] * 16
    e0[0] = ONE
    with pytest.raises(ValueError, match="nilpotent"):
        ss.classify_semisimple(Tensor(tuple(e0)))
    with pytest.raises(ValueError, match="zero"):
        ss.classify_semisimple(Tensor(tuple([ZERO] * 16)))
    imag = [ZERO] * 16
    imag[0] = IMAG
    imag[15] = IMAG
    with pytest.raises(ValueError, match="not a real state"):
        ss.classify_semisimple(Tensor(tuple(imag)))
    with pytest.raises(TypeError):
        ss.classify_semisimple("not a tensor")


def test_classify_degenerate_parameters_fall_to_smaller_family():
    # an all-nonzero element whose parameters hit the excluded hyperplane
    # (first coordinate equal to the sum of the others) is singular; the
    # classifier resolves it into the smaller family via a real rotation
    u = cw.u_basis()
    t = Tensor(
        tuple(
            rat(6) * a + rat(3) * b + rat(2) * c + d
            for a, b, c, d in zip(u[0].c, u[1].c, u[2].c, u[3].c)
        )
    )
    assert liealg.is_semisimple(t)
    lab = ss.classify_semisimple(t)
    assert lab.i == 2
    assert ss.row_tensor(lab.i, lab.j, lab.k, lab.lams) != t  # moved frame


def test_classify_general_position():
    # a real semisimple tensor outside every stored basis span is flagged
    from artifact.groupaction import gelt, mat2, named

    q = cw.parametrize(1, (ONE, rat(2), rat(3), rat(5)))
    shear = gelt(mat2(ONE, ONE, ZERO, ONE), named("I"), named("I"), named("I"))
    t = act_tensor(shear, q)
    assert t.is_real()
    assert liealg.is_semisimple(t)
    assert cw.cartan_detect(t) is None
    with pytest.raises(ss.GeneralPositionError) as exc:
        ss.classify_semisimple(t)
    payload = exc.value.payload
    assert "families" in payload and "invariants" in payload
    assert 1 in payload["families"]


# ---------------------------------------------------------------------------
# stabilizer cohomology of the family parameters
# ---------------------------------------------------------------------------


def test_centralizer_class_counts():
    expected = {1: 12, 2: 8, 3: 4, 4: 6, 7: 2, 10: 5}
    for i, count in expected.items():
        classes = ss.centralizer_classes(i)
        spec = ss.centralizer_spec(i)
        report = galois.verify_class_list(classes, spec)
        assert report["passed"], (i, report)
        assert len(classes.representatives) == count


def test_centralizer_generators_fix_parameter():
    for i in (1, 2, 3, 4, 7, 10):
        spec = ss.centralizer_spec(i)
        lams = ss.default_lambda(i, 1)
        q = cw.parametrize(i, lams)
        for g in tuple(spec.finite_gens) + tuple(spec.torus_samples):
            assert act_tensor(g, q) == q, (i, g)


def test_gamma_class_counts_match_block_counts():
    expected = {1: 7, 2: 8, 3: 2, 4: 4, 7: 2, 10: 2}
    for i, count in expected.items():
        assert len(cw.gamma_h1(i)) == count
        assert len([b for b in ss.blocks() if b.i == i]) == count
