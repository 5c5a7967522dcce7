"""The split Lie algebra of type D4, its Z/2-grading, and the tensor picture.

The algebra is realized as so(8) for the antidiagonal symmetric form, with the
standard integral basis: Cartan generators H_1..H_4 and a root vector for each
of the 24 roots +-eps_i +- eps_j (i < j).  Simple roots are

    gamma_1 = eps1 - eps2,  gamma_2 = eps2 - eps3,
    gamma_3 = eps3 - eps4,  gamma_4 = eps3 + eps4,

with gamma_2 the central node.  The grading g = g0 + g1 is by parity of the
gamma_2-coefficient: g0 (dim 12) is a sum of four commuting sl2's plus the
Cartan, and g1 (dim 16) is identified with the space of 2x2x2x2 arrays by an
equivariant isomorphism anchored at "root vector of weight -gamma_2 maps to
e_0000".

Elements are coordinate vectors (28 CycNum) over the fixed basis; 2x2x2x2
arrays are `Tensor` values (16 CycNum).  Jordan decomposition is computed
exactly at the 8x8 matrix level by a Newton iteration on the squarefree part
of the minimal polynomial; for so(8) the matrix notions of semisimple and
nilpotent agree with the adjoint ones, and both parts stay in the algebra.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _linalg as la
from .exactfield import ONE, ZERO, CycNum, cyc_to_str, parse_cyc, rat

LieElt = list[CycNum]

_N8 = 8  # natural representation dimension


# -- integer 8x8 helpers used during construction ------------------------------

def _imat() -> list[list[int]]:
    return [[0] * _N8 for _ in range(_N8)]


def _iunit(i: int, j: int) -> list[list[int]]:
    m = _imat()
    m[i][j] = 1
    return m


def _iadd(a, b, sb=1):
    return [[x + sb * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _imul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _icomm(a, b):
    return _iadd(_imul(a, b), _imul(b, a), -1)


def _izero(a) -> bool:
    return all(x == 0 for row in a for x in row)


class LieAlgebraD4:
    """The constructed algebra: basis, structure constants, grading, tensor map.

    Immutable after construction; obtain the shared instance via build_d4().
    """

    def __init__(self):
        names: list[str] = []
        mats: list[list[list[int]]] = []
        eps_roots: list[tuple[int, ...] | None] = []

        for i in range(1, 5):
            names.append(f"H{i}")
            mats.append(_iadd(_iunit(i - 1, i - 1), _iunit(8 - i, 8 - i), -1))
            eps_roots.append(None)

        def add_root(eps: tuple[int, int, int, int], m) -> None:
            names.append("X[%d,%d,%d,%d]" % eps)
            mats.append(m)
            eps_roots.append(eps)

        for i in range(1, 5):
            for j in range(i + 1, 5):
                ei = [0, 0, 0, 0]
                ei[i - 1] = 1
                ej = [0, 0, 0, 0]
                ej[j - 1] = 1
                pi, pj = tuple(ei), tuple(ej)

                def comb(ci, cj):
                    return tuple(ci * a + cj * b for a, b in zip(pi, pj))

                add_root(comb(1, -1), _iadd(_iunit(i - 1, j - 1), _iunit(8 - j, 8 - i), -1))
                add_root(comb(-1, 1), _iadd(_iunit(j - 1, i - 1), _iunit(8 - i, 8 - j), -1))
                add_root(comb(1, 1), _iadd(_iunit(i - 1, 8 - j), _iunit(j - 1, 8 - i), -1))
                add_root(comb(-1, -1), _iadd(_iunit(8 - j, i - 1), _iunit(8 - i, j - 1), -1))

        self.dimension = len(mats)
        assert self.dimension == 28
        self.basis_names = names
        self.eps_roots = eps_roots
        self._int_mats = mats
        self.index = {n: k for k, n in enumerate(names)}

        # Verify membership in so(8) for the antidiagonal form S.
        s_form = [[1 if a + b == 7 else 0 for b in range(8)] for a in range(8)]
        for m in mats:
            mt = [list(r) for r in zip(*m)]
            if not _izero(_iadd(_imul(mt, s_form), _imul(s_form, m))):
                raise AssertionError("basis matrix not in so(8)")

        # Coordinates of any so(8) matrix are read off at one witness entry
        # per basis element (all 28 positions are distinct).
        probes: list[tuple[int, int]] = []
        for m in mats:
            pos = next((a, b) for a in range(8) for b in range(8) if m[a][b] == 1)
            probes.append(pos)
        assert len(set(probes)) == 28
        self._probes = probes

        # Structure constants: [b_i, b_j] = sum_k  c_k b_k, integer c.
        struct: dict[tuple[int, int], dict[int, int]] = {}
        for i in range(28):
            for j in range(i + 1, 28):
                c = _icomm(mats[i], mats[j])
                coords = {k: c[a][b] for k, (a, b) in enumerate(probes) if c[a][b]}
                recon = _imat()
                for k, v in coords.items():
                    recon = _iadd(recon, [[v * x for x in row] for row in mats[k]])
                if not _izero(_iadd(c, recon, -1)):
                    raise AssertionError("bracket leaves the basis span")
                struct[(i, j)] = coords
        self.struct = struct

        # Roots in simple-root coordinates (gamma_2 is the central node).
        simple = {
            "g1": (1, -1, 0, 0),
            "g2": (0, 1, -1, 0),
            "g3": (0, 0, 1, -1),
            "g4": (0, 0, 1, 1),
        }
        basis_cols = la.transpose(
            [[rat(x) for x in simple[g]] for g in ("g1", "g2", "g3", "g4")]
        )
        gamma_roots: list[tuple[int, ...] | None] = []
        for eps in eps_roots:
            if eps is None:
                gamma_roots.append(None)
                continue
            sol = la.solve(basis_cols, [rat(x) for x in eps])
            assert sol is not None
            coeffs = tuple(int(c.to_fraction()) for c in sol)
            assert all(
                Fraction(c.to_fraction()).denominator == 1 for c in sol
            ), "non-integral root coordinates"
            gamma_roots.append(coeffs)
        self.gamma_roots = gamma_roots

        # Grading by parity of the gamma_2-coefficient.
        self.g0_indices = [
            k
            for k in range(28)
            if gamma_roots[k] is None or gamma_roots[k][1] % 2 == 0
        ]
        self.g1_indices = [
            k for k in range(28) if gamma_roots[k] is not None and gamma_roots[k][1] % 2 == 1
        ]
        assert (len(self.g0_indices), len(self.g1_indices)) == (12, 16)

        # The four sl2 ideals of g0 (one per tensor slot).  Each triple is
        # (e, h, f) with h given as integer coordinates over H_1..H_4.
        def xi(eps):
            return self.index["X[%d,%d,%d,%d]" % eps]

        self.slot_e = [
            xi((-1, -1, 0, 0)),
            xi((1, -1, 0, 0)),
            xi((0, 0, 1, -1)),
            xi((0, 0, 1, 1)),
        ]
        self.slot_f = [
            xi((1, 1, 0, 0)),
            xi((-1, 1, 0, 0)),
            xi((0, 0, -1, 1)),
            xi((0, 0, -1, -1)),
        ]
        self.slot_h = [
            (-1, -1, 0, 0),
            (1, -1, 0, 0),
            (0, 0, 1, -1),
            (0, 0, 1, 1),
        ]

        # Tensor identification: e_t corresponds to Y_t, the image of the
        # anchor (the root vector of weight -gamma_2 = eps3 - eps2) under
        # ad(f_k) for every slot k with t_k = 1.  Each Y_t is +-1 times a
        # single root vector; record (basis index, sign) per bit pattern.
        anchor = xi((0, -1, 1, 0))
        table: list[tuple[int, int]] = []
        for t in range(16):
            m = [row[:] for row in mats[anchor]]
            for k in range(4):
                if t & (8 >> k):
                    m = _icomm(mats[self.slot_f[k]], m)
            hits = [
                (idx, m[a][b])
                for idx, (a, b) in enumerate(probes)
                if m[a][b] != 0
            ]
            assert len(hits) == 1 and abs(hits[0][1]) == 1, "tensor basis not monomial"
            idx, sign = hits[0]
            recon = [[sign * x for x in row] for row in mats[idx]]
            assert _izero(_iadd(m, recon, -1))
            table.append((idx, sign))
        assert sorted(idx for idx, _ in table) == sorted(self.g1_indices)
        self.tensor_table = table

        self.basis_mats = [
            [[rat(x) for x in row] for row in m] for m in mats
        ]

    # -- element plumbing ----------------------------------------------------

    def zero(self) -> LieElt:
        return [ZERO] * 28

    def basis_elt(self, k: int) -> LieElt:
        v = self.zero()
        v[k] = ONE
        return v

    def to_matrix(self, x: LieElt) -> la.Mat:
        m = la.zeros(8, 8)
        for k, c in enumerate(x):
            if c:
                bm = self._int_mats[k]
                for a in range(8):
                    ra = bm[a]
                    for b in range(8):
                        if ra[b]:
                            m[a][b] = m[a][b] + c.scale(ra[b])
        return m

    def from_matrix(self, m: la.Mat) -> LieElt:
        x = [m[a][b] for a, b in self._probes]
        recon = self.to_matrix(x)
        if not la.mat_eq(recon, m):
            raise ValueError("matrix is not in so(8)")
        return x


@lru_cache(maxsize=None)
def build_d4() -> LieAlgebraD4:
    """Construct (once) the graded algebra with all derived data."""
    return LieAlgebraD4()


# -- basic operations -----------------------------------------------------------

def bracket(x: LieElt, y: LieElt) -> LieElt:
    alg = build_d4()
    out = alg.zero()
    for i, ci in enumerate(x):
        if not ci:
            continue
        for j, cj in enumerate(y):
            if not cj:
                continue
            if i == j:
                continue
            if i < j:
                terms = alg.struct[(i, j)]
                c = ci * cj
            else:
                terms = alg.struct[(j, i)]
                c = -(ci * cj)
            for k, v in terms.items():
                out[k] = out[k] + c.scale(v)
    return out


def ad_matrix(x: LieElt) -> la.Mat:
    """28x28 matrix of ad(x) over the fixed basis (columns = images)."""
    alg = build_d4()
    cols = [bracket(x, alg.basis_elt(k)) for k in range(28)]
    return la.transpose(cols)


def lie_add(x: LieElt, y: LieElt) -> LieElt:
    return [a + b for a, b in zip(x, y)]


def lie_sub(x: LieElt, y: LieElt) -> LieElt:
    return [a - b for a, b in zip(x, y)]


def lie_scale(c: CycNum, x: LieElt) -> LieElt:
    return [c * a for a in x]


def lie_is_zero(x: LieElt) -> bool:
    return all(not a for a in x)


def verify_built(alg: LieAlgebraD4 | None = None) -> dict:
    """Check the construction invariants; returns a small report dict.

    Verifies the Jacobi identity on all basis triples (in integer arithmetic),
    the grading dimensions and bracket compatibility, and that the four sl2
    triples behave as sl2's and commute pairwise.
    """
    alg = alg or build_d4()
    struct = alg.struct

    def sbracket(i: int, j: int) -> dict[int, int]:
        if i == j:
            return {}
        if i < j:
            return struct[(i, j)]
        return {k: -v for k, v in struct[(j, i)].items()}

    def sbracket_vec(i: int, vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for m, c in vec.items():
            for k, v in sbracket(i, m).items():
                out[k] = out.get(k, 0) + c * v
        return out

    jacobi_bad = 0
    for i in range(28):
        for j in range(28):
            for k in range(28):
                acc: dict[int, int] = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, v in sbracket_vec(a, sbracket(b, c)).items():
                        acc[m] = acc.get(m, 0) + v
                if any(acc.values()):
                    jacobi_bad += 1

    # grading compatibility on all basis pairs
    g0 = set(alg.g0_indices)
    grading_bad = 0
    for i in range(28):
        for j in range(28):
            target0 = (i in g0) == (j in g0)  # even*even or odd*odd lands in g0
            for k, v in sbracket(i, j).items():
                if v and (k in g0) != target0:
                    grading_bad += 1

    # sl2 ideals
    sl2_ok = True
    h_elts = []
    for s in range(4):
        h = alg.zero()
        for a in range(4):
            h[a] = rat(alg.slot_h[s][a])
        h_elts.append(h)
    for s in range(4):
        e = alg.basis_elt(alg.slot_e[s])
        f = alg.basis_elt(alg.slot_f[s])
        h = h_elts[s]
        sl2_ok &= bracket(e, f) == h
        sl2_ok &= bracket(h, e) == lie_scale(rat(2), e)
        sl2_ok &= bracket(h, f) == lie_scale(rat(-2), f)
        for s2 in range(4):
            if s2 == s:
                continue
            for a in (alg.basis_elt(alg.slot_e[s]), h_elts[s], alg.basis_elt(alg.slot_f[s])):
                for b in (
                    alg.basis_elt(alg.slot_e[s2]),
                    h_elts[s2],
                    alg.basis_elt(alg.slot_f[s2]),
                ):
                    sl2_ok &= lie_is_zero(bracket(a, b))

    return {
        "dimension": alg.dimension,
        "jacobi_failures": jacobi_bad,
        "grading_dims": (len(alg.g0_indices), len(alg.g1_indices)),
        "grading_failures": grading_bad,
        "sl2_ideals_ok": bool(sl2_ok),
    }


# -- tensors ---------------------------------------------------------------------

def _bits_to_index(bits: str | tuple[int, ...]) -> int:
    if isinstance(bits, str):
        if len(bits) != 4 or any(b not in "01" for b in bits):
            raise ValueError(f"bad tensor index {bits!r}")
        return int(bits, 2)
    t = 0
    for b in bits:
        t = (t << 1) | b
    return t


def _index_to_bits(t: int) -> str:
    return format(t, "04b")


class Tensor:
    """A 2x2x2x2 array with entries in Q(eta), indexed by bit strings."""

    __slots__ = ("c",)

    c: tuple[CycNum, ...]

    def __init__(self, coeffs: Iterable[CycNum]):
        cs = tuple(coeffs)
        if len(cs) != 16:
            raise ValueError("Tensor needs 16 coefficients")
        self.c = cs

    @staticmethod
    def zero() -> "Tensor":
        return Tensor([ZERO] * 16)

    @staticmethod
    def basis(bits: str | tuple[int, ...] | int, coeff: CycNum = ONE) -> "Tensor":
        t = bits if isinstance(bits, int) else _bits_to_index(bits)
        cs = [ZERO] * 16
        cs[t] = coeff
        return Tensor(cs)

    @staticmethod
    def from_dict(d: dict[str, CycNum]) -> "Tensor":
        cs = [ZERO] * 16
        for bits, v in d.items():
            cs[_bits_to_index(bits)] = v
        return Tensor(cs)

    def __getitem__(self, bits) -> CycNum:
        return self.c[bits if isinstance(bits, int) else _bits_to_index(bits)]

    def __add__(self, other: "Tensor") -> "Tensor":
        return Tensor([a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other: "Tensor") -> "Tensor":
        return Tensor([a - b for a, b in zip(self.c, other.c)])

    def __neg__(self) -> "Tensor":
        return Tensor([-a for a in self.c])

    def scale(self, k: CycNum) -> "Tensor":
        return Tensor([k * a for a in self.c])

    def conjugate(self) -> "Tensor":
        return Tensor([a.conjugate() for a in self.c])

    def is_real(self) -> bool:
        return all(a.is_real() for a in self.c)

    def is_zero(self) -> bool:
        return all(not a for a in self.c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def key(self) -> tuple:
        return tuple(x.key() for x in self.c)

    def support(self) -> list[str]:
        return [_index_to_bits(t) for t in range(16) if self.c[t]]

    def __repr__(self) -> str:
        parts = [
            f"{cyc_to_str(self.c[t])}*e{_index_to_bits(t)}"
            for t in range(16)
            if self.c[t]
        ]
        return "Tensor(" + (" + ".join(parts) if parts else "0") + ")"

    # JSON: {"coeffs": {"0000": "<value>", ...}}, omitted keys are zero.
    def to_json_dict(self) -> dict:
        return {
            "coeffs": {
                _index_to_bits(t): cyc_to_str(self.c[t])
                for t in range(16)
                if self.c[t]
            }
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(d: dict) -> "Tensor":
        if not isinstance(d, dict) or "coeffs" not in d or not isinstance(d["coeffs"], dict):
            raise ValueError('tensor JSON needs a "coeffs" object')
        cs = [ZERO] * 16
        for bits, text in d["coeffs"].items():
            if not isinstance(text, str):
                raise ValueError("tensor coefficients must be strings")
            cs[_bits_to_index(bits)] = parse_cyc(text)
        return Tensor(cs)

    @staticmethod
    def from_json(text: str) -> "Tensor":
        return Tensor.from_json_dict(json.loads(text))


def tensor(spec: dict[str, Fraction | int | str | CycNum]) -> Tensor:
    """Convenience builder: tensor({"0000": 1, "1111": "1/2"})."""
    cs = [ZERO] * 16
    for bits, v in spec.items():
        if isinstance(v, CycNum):
            c = v
        elif isinstance(v, str):
            c = parse_cyc(v)
        else:
            c = rat(v)
        cs[_bits_to_index(bits)] = c
    return Tensor(cs)


# The distinguished commuting quadruple spanning the reference Cartan subspace.
def u_basis() -> tuple[Tensor, Tensor, Tensor, Tensor]:
    return (
        tensor({"0000": 1, "1111": 1}),
        tensor({"0110": 1, "1001": 1}),
        tensor({"0101": 1, "1010": 1}),
        tensor({"0011": 1, "1100": 1}),
    )


# -- the graded identification ----------------------------------------------------

def tensor_to_g1(t: Tensor) -> LieElt:
    alg = build_d4()
    x = alg.zero()
    for ti in range(16):
        c = t.c[ti]
        if c:
            idx, sign = alg.tensor_table[ti]
            x[idx] = c if sign == 1 else -c
    return x


def g1_to_tensor(x: LieElt) -> Tensor:
    alg = build_d4()
    for k in alg.g0_indices:
        if x[k]:
            raise ValueError("not homogeneous of degree 1")
    cs = [ZERO] * 16
    for ti in range(16):
        idx, sign = alg.tensor_table[ti]
        cs[ti] = x[idx] if sign == 1 else -x[idx]
    return Tensor(cs)


def g0_to_quad_mats(x: LieElt) -> list[la.Mat]:
    """Write a degree-zero element as four 2x2 traceless matrices (one per slot)."""
    alg = build_d4()
    for k in alg.g1_indices:
        if x[k]:
            raise ValueError("not homogeneous of degree 0")
    # Cartan part: express over the four slot h's.
    hmat = la.transpose([[rat(v) for v in alg.slot_h[s]] for s in range(4)])
    bcoef = la.solve(hmat, [x[a] for a in range(4)])
    assert bcoef is not None
    out = []
    for s in range(4):
        a = x[alg.slot_e[s]]
        b = bcoef[s]
        c = x[alg.slot_f[s]]
        out.append([[b, a], [c, -b]])
    return out


def quad_mats_to_g0(mats: Sequence[la.Mat]) -> LieElt:
    alg = build_d4()
    x = alg.zero()
    for s, m in enumerate(mats):
        if m[0][0] != -(m[1][1]):
            raise ValueError("slot matrix is not traceless")
        x[alg.slot_e[s]] = x[alg.slot_e[s]] + m[0][1]
        x[alg.slot_f[s]] = x[alg.slot_f[s]] + m[1][0]
        for a in range(4):
            x[a] = x[a] + m[0][0].scale(alg.slot_h[s][a])
    return x


def slot_action(mats: Sequence[la.Mat], t: Tensor) -> Tensor:
    """Leibniz action of four 2x2 matrices on a tensor (sum over slots)."""
    out = [ZERO] * 16
    for s, m in enumerate(mats):
        bit = 8 >> s
        for ti in range(16):
            c = t.c[ti]
            if not c:
                continue
            col = 1 if ti & bit else 0
            for row in (0, 1):
                v = m[row][col]
                if v:
                    target = (ti & ~bit) | (bit if row else 0)
                    out[target] = out[target] + v * c
    return Tensor(out)


# -- semisimplicity, nilpotence, Jordan decomposition ------------------------------

def _as_coords(x: "LieElt | Tensor") -> tuple[LieElt, bool]:
    if isinstance(x, Tensor):
        return tensor_to_g1(x), True
    return x, False


def is_nilpotent(x: "LieElt | Tensor") -> bool:
    coords, _ = _as_coords(x)
    m = build_d4().to_matrix(coords)
    m2 = la.mat_mul(m, m)
    m4 = la.mat_mul(m2, m2)
    return la.is_zero_mat(la.mat_mul(m4, m4))


def is_semisimple(x: "LieElt | Tensor") -> bool:
    coords, _ = _as_coords(x)
    m = build_d4().to_matrix(coords)
    p = la.minimal_polynomial(m)
    return la.poly_deg(la.poly_gcd(p, la.poly_deriv(p))) == 0


def jordan_decompose(x: "LieElt | Tensor"):
    """Split x = s + n with s semisimple, n nilpotent, [s, n] = 0.

    Computed on the 8x8 matrix: Newton iteration in Q(eta)[T]/(minpoly)
    converges to a polynomial expression for the semisimple part.  For so(8)
    the matrix-level parts are the adjoint-level parts, and both lie in the
    algebra; when x is homogeneous of degree one so are s and n.
    """
    coords, was_tensor = _as_coords(x)
    alg = build_d4()
    m = alg.to_matrix(coords)
    minpoly = la.minimal_polynomial(m)
    red = la.squarefree_part(minpoly)
    if la.poly_deg(red) == la.poly_deg(minpoly):
        s_coords, n_coords = list(coords), alg.zero()
    else:
        t: la.Poly = [ZERO, ONE]
        for _ in range(10):
            val = _poly_compose_mod(red, t, minpoly)
            if not val:
                break
            dval = _poly_compose_mod(la.poly_deriv(red), t, minpoly)
            g, inv, _ = la.poly_xgcd(dval, minpoly)
            if la.poly_deg(g) != 0:
                raise ArithmeticError("derivative not invertible modulo minpoly")
            t = la.poly_mod(la.poly_sub(t, la.poly_mul(val, inv)), minpoly)
        else:
            raise ArithmeticError("Newton iteration did not converge")
        s_mat = la.poly_eval_mat(t, m)
        s_coords = alg.from_matrix(s_mat)
        n_coords = lie_sub(coords, s_coords)
    if was_tensor:
        return g1_to_tensor(s_coords), g1_to_tensor(n_coords)
    return s_coords, n_coords


def _poly_compose_mod(p: la.Poly, t: la.Poly, m: la.Poly) -> la.Poly:
    out: la.Poly = []
    for c in reversed(p):
        out = la.poly_mod(la.poly_mul(out, t), m)
        out = la.poly_add(out, [c])
    return out


# -- centralizers -------------------------------------------------------------------

def centralizer_dim(x: "LieElt | Tensor") -> int:
    coords, _ = _as_coords(x)
    return 28 - la.rank(ad_matrix(coords))


def centralizer_basis(x: "LieElt | Tensor") -> list[LieElt]:
    coords, _ = _as_coords(x)
    return la.nullspace(ad_matrix(coords))


def centralizer_g1(x: "LieElt | Tensor") -> list[Tensor]:
    """Basis of U_x = {y in g1 : [x, y] = 0}, returned as tensors."""
    coords, _ = _as_coords(x)
    cols = []
    for t in range(16):
        y = tensor_to_g1(Tensor.basis(t))
        cols.append(bracket(coords, y))
    kernel = la.nullspace(la.transpose(cols))
    return [Tensor(v) for v in kernel]


def derived_dim_of_centralizer(x: "LieElt | Tensor") -> int:
    """Dimension of [z, z] for z the centralizer of x; separates the
    centralizer types that plain dimension cannot."""
    basis = centralizer_basis(x)
    brackets = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            b = bracket(basis[i], basis[j])
            if not lie_is_zero(b):
                brackets.append(b)
    return la.span_dim(brackets) if brackets else 0
