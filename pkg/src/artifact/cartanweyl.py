"""Cartan subspace, restricted roots, Weyl group, subsystems, real Cartan bases.

Everything here is derived from the algebra itself where possible: the 24
restricted roots come out of a joint eigenspace decomposition of ad(u_1..u_4),
each paired with its coroot h_alpha normalized by alpha(h_alpha) = 2, and the
Weyl group is generated by the 24 reflections as exact rational 4x4 matrices
in u-coordinates.  The eleven complete subsystems and their complement groups
Gamma, and the seven real Cartan bases with their witness pairs (g*, n*), are
embedded as data and re-verified by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import _linalg as la
from .exactfield import ONE, ZERO, CycNum, rat
from .groupaction import (
    D,
    GElt,
    Mat2,
    act_tensor,
    conj_g,
    g_inv,
    g_mul,
    gelt,
    m2_neg,
    named,
)
from .liealg import (
    LieElt,
    Tensor,
    ad_matrix,
    bracket,
    build_d4,
    g1_to_tensor,
    tensor_to_g1,
    u_basis,
)

# u_k = e(pair0) + e(pair1); v_k = e(pair0) - e(pair1)
_U_PAIRS = ((0, 15), (6, 9), (5, 10), (3, 12))

WeylMat = tuple[tuple[Fraction, ...], ...]


def u_coords(t: Tensor) -> tuple[CycNum, CycNum, CycNum, CycNum] | None:
    """Coordinates of t over u_1..u_4, or None when t is outside their span."""
    coords = []
    allowed = set()
    for a, b in _U_PAIRS:
        if t.c[a] != t.c[b]:
            return None
        coords.append(t.c[a])
        allowed.update((a, b))
    for idx in range(16):
        if idx not in allowed and t.c[idx]:
            return None
    return tuple(coords)  # type: ignore[return-value]


def from_u_coords(coords: Sequence[CycNum]) -> Tensor:
    u = u_basis()
    out = Tensor.zero()
    for c, uk in zip(coords, u):
        out = out + uk.scale(c)
    return out


# -- restricted roots ------------------------------------------------------------

@dataclass(frozen=True)
class RestrictedRoot:
    """A restricted root: its values on u_1..u_4, a root vector, and h_alpha."""

    coeffs: tuple[int, int, int, int]  # alpha(u_k)
    vector: tuple  # LieElt as tuple for hashability
    h_alpha: tuple[Fraction, Fraction, Fraction, Fraction]  # u-coordinates

    @property
    def functional(self) -> tuple[CycNum, CycNum, CycNum, CycNum]:
        return tuple(rat(c) for c in self.coeffs)  # type: ignore[return-value]

    def value_at(self, coords: Sequence[CycNum]) -> CycNum:
        out = ZERO
        for c, x in zip(self.coeffs, coords):
            if c:
                out = out + x.scale(c)
        return out


def _columns_matrix(vectors: list[list[CycNum]]) -> la.Mat:
    n = len(vectors[0])
    return [[vectors[j][i] for j in range(len(vectors))] for i in range(n)]


def _split_by_eigenvalue(mat: la.Mat, vectors: list[list[CycNum]], ev: int):
    """Basis of the ev-eigenspace of mat restricted to span(vectors)."""
    n = len(vectors[0])
    shifted = [row[:] for row in mat]
    if ev:
        c = rat(-ev)
        for i in range(n):
            shifted[i][i] = shifted[i][i] + c
    m = la.mat_mul(shifted, _columns_matrix(vectors))
    out = []
    for coeffs in la.nullspace(m):
        vec = [ZERO] * n
        for j, cf in enumerate(coeffs):
            if cf:
                for i in range(n):
                    vec[i] = vec[i] + cf * vectors[j][i]
        out.append(vec)
    return out


@lru_cache(maxsize=1)
def _root_decomposition():
    alg = build_d4()
    ads = [ad_matrix(tensor_to_g1(uk)) for uk in u_basis()]
    spaces: list[tuple[tuple[int, ...], list[list[CycNum]]]] = [
        ((), [list(alg.basis_elt(k)) for k in range(28)])
    ]
    for level in range(4):
        nxt = []
        for tag, vecs in spaces:
            for ev in (-2, -1, 0, 1, 2):
                sub = _split_by_eigenvalue(ads[level], vecs, ev)
                if sub:
                    nxt.append((tag + (ev,), sub))
        spaces = nxt
    total = sum(len(v) for _, v in spaces)
    if total != 28:
        raise ArithmeticError("eigenspace decomposition does not fill the algebra")
    zero_space = None
    roots: dict[tuple[int, ...], list[CycNum]] = {}
    for tag, vecs in spaces:
        if all(c == 0 for c in tag):
            zero_space = vecs
            continue
        if len(vecs) != 1:
            raise ArithmeticError("restricted root space is not one-dimensional")
        v = vecs[0]
        # normalize: first nonzero coordinate = 1
        lead = next(c for c in v if c)
        inv = lead.inverse()
        roots[tag] = [inv * c for c in v]
    if zero_space is None or len(zero_space) != 4:
        raise ArithmeticError("centralizer of the Cartan subspace has wrong dimension")
    return roots


@lru_cache(maxsize=1)
def restricted_roots() -> tuple[RestrictedRoot, ...]:
    roots = _root_decomposition()
    out = []
    for tag in sorted(roots):
        v = roots[tag]
        neg = roots[tuple(-c for c in tag)]
        br = bracket(v, neg)
        t = g1_to_tensor(br)
        coords = u_coords(t)
        if coords is None:
            raise ArithmeticError("coroot fell outside the Cartan subspace")
        pairing = ZERO
        for c, x in zip(tag, coords):
            if c:
                pairing = pairing + x.scale(c)
        if not pairing:
            raise ArithmeticError("degenerate root pairing")
        scale = rat(2) / pairing
        h = tuple((scale * x).to_fraction() for x in coords)
        out.append(RestrictedRoot(coeffs=tag, vector=tuple(v), h_alpha=h))
    if len(out) != 24:
        raise ArithmeticError(f"expected 24 restricted roots, found {len(out)}")
    return tuple(out)


# -- Weyl group -------------------------------------------------------------------

def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def wmat(rows) -> WeylMat:
    return tuple(tuple(_fr(v) for v in row) for row in rows)


W_IDENTITY: WeylMat = wmat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def w_mul(a: WeylMat, b: WeylMat) -> WeylMat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def w_neg(a: WeylMat) -> WeylMat:
    return tuple(tuple(-v for v in row) for row in a)


def w_act_coords(w: WeylMat, coords: Sequence[CycNum]) -> tuple[CycNum, ...]:
    """Image of an h-element (u-coordinates) under w."""
    out = []
    for i in range(4):
        acc = ZERO
        for j in range(4):
            if w[i][j]:
                acc = acc + coords[j].scale(w[i][j])
        out.append(acc)
    return tuple(out)


def w_act_tensor(w: WeylMat, t: Tensor) -> Tensor:
    coords = u_coords(t)
    if coords is None:
        raise ValueError("tensor is not in the Cartan subspace")
    return from_u_coords(w_act_coords(w, coords))


def functional_after(coeffs: Sequence, w: WeylMat) -> tuple[int, ...]:
    """The functional alpha∘w (row vector times matrix), must stay integral."""
    out = []
    for j in range(4):
        v = sum(_fr(coeffs[k]) * w[k][j] for k in range(4))
        if v.denominator != 1:
            raise ArithmeticError("root image is not integral")
        out.append(int(v))
    return tuple(out)


def reflection(root: RestrictedRoot) -> WeylMat:
    """s_alpha(h) = h - alpha(h) h_alpha as a matrix in u-coordinates."""
    return tuple(
        tuple(
            (Fraction(1) if r == c else Fraction(0)) - root.h_alpha[r] * root.coeffs[c]
            for c in range(4)
        )
        for r in range(4)
    )


@lru_cache(maxsize=1)
def weyl_group() -> tuple[WeylMat, ...]:
    gens = [reflection(r) for r in restricted_roots()]
    return _closure([W_IDENTITY], gens, 192 * 2)


def _closure(start: Iterable[WeylMat], gens: list[WeylMat], limit: int):
    seen = {m: None for m in start}
    frontier = list(seen)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = w_mul(g, m)
                if p not in seen:
                    seen[p] = None
                    nxt.append(p)
                    if len(seen) > limit:
                        raise ArithmeticError("group closure exceeded expected order")
        frontier = nxt
    return tuple(sorted(seen))


def weyl_stabilizer(coords: Sequence[CycNum]) -> list[WeylMat]:
    coords = tuple(coords)
    return [w for w in weyl_group() if w_act_coords(w, coords) == coords]


# -- subsystems of Table rows 1..11 --------------------------------------------------

@dataclass(frozen=True)
class SubsystemData:
    index: int
    type_name: str
    h_basis: tuple[tuple[int, int, int, int], ...]  # u-coordinate basis of h_Pi
    gamma_gens: tuple[WeylMat, ...] | None  # None means Gamma = W
    derived_centralizer_dim: int | None

    @property
    def param_count(self) -> int:
        return len(self.h_basis)


def _diag(a, b, c, d) -> WeylMat:
    return wmat([[a, 0, 0, 0], [0, b, 0, 0], [0, 0, c, 0], [0, 0, 0, d]])


_SUBSYSTEMS: dict[int, SubsystemData] = {
    1: SubsystemData(1, "empty", ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), None, 0),
    2: SubsystemData(2, "A1", ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)),
                     tuple(_diag(*signs) for signs in
                           [(1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1),
                            (-1, 1, 1, -1), (-1, 1, -1, 1), (-1, -1, 1, 1)]), 3),
    3: SubsystemData(3, "A2", ((1, -1, 0, 0), (1, 0, -1, 0)), (_diag(-1, -1, -1, -1),), 8),
    4: SubsystemData(4, "2A1", ((1, 0, 0, 0), (0, 0, 0, 1)),
                     (_diag(1, 1, 1, -1),
                      wmat([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])), 6),
    5: SubsystemData(5, "2A1", ((1, 0, 0, 0), (0, 0, 1, 0)),
                     (_diag(1, 1, -1, 1),
                      wmat([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]])), 6),
    6: SubsystemData(6, "2A1", ((1, 0, 0, 0), (0, 1, 0, 0)),
                     (_diag(-1, 1, 1, 1),
                      wmat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]])), 6),
    7: SubsystemData(7, "A3", ((1, 0, 0, -1),), (_diag(-1, -1, -1, -1),), 15),
    8: SubsystemData(8, "A3", ((1, 0, -1, 0),), (_diag(-1, -1, -1, -1),), 15),
    9: SubsystemData(9, "A3", ((1, -1, 0, 0),), (_diag(-1, -1, -1, -1),), 15),
    10: SubsystemData(10, "3A1", ((1, 0, 0, 0),), (_diag(-1, -1, -1, -1),), 9),
    11: SubsystemData(11, "D4", (), (), None),
}


def subsystem(i: int) -> SubsystemData:
    if i not in _SUBSYSTEMS:
        raise KeyError(f"no subsystem {i}")
    return _SUBSYSTEMS[i]


def parametrize(i: int, lams: Sequence[CycNum]) -> Tensor:
    """The element of h_{Pi_i} with parameters lams, as a tensor."""
    data = subsystem(i)
    if len(lams) != data.param_count:
        raise ValueError(
            f"subsystem {i} takes {data.param_count} parameters, got {len(lams)}"
        )
    coords = [ZERO] * 4
    for lam, bvec in zip(lams, data.h_basis):
        for k in range(4):
            if bvec[k]:
                coords[k] = coords[k] + lam.scale(bvec[k])
    return from_u_coords(coords)


@lru_cache(maxsize=None)
def member_roots(i: int) -> frozenset[tuple[int, ...]]:
    """Functionals (as integer 4-tuples) of the roots vanishing on all of h_Pi."""
    data = subsystem(i)
    out = []
    for r in restricted_roots():
        if all(
            sum(r.coeffs[k] * b[k] for k in range(4)) == 0 for b in data.h_basis
        ):
            out.append(r.coeffs)
    return frozenset(out)


def vanishing_roots(coords: Sequence[CycNum]) -> frozenset[tuple[int, ...]]:
    return frozenset(
        r.coeffs for r in restricted_roots() if not r.value_at(coords)
    )


def _canonical_pattern(roots: frozenset[tuple[int, ...]]) -> tuple:
    best = None
    for w in weyl_group():
        img = tuple(sorted(functional_after(a, w) for a in roots))
        if best is None or img < best:
            best = img
    return best


@lru_cache(maxsize=1)
def _pattern_table() -> dict[tuple, int]:
    table = {}
    for i in range(1, 12):
        canon = _canonical_pattern(member_roots(i))
        if canon in table:
            raise ArithmeticError("subsystem patterns are not distinguishable")
        table[canon] = i
    return table


def component_membership(p: Tensor) -> int:
    """The unique i in 1..11 with p conjugate into the normal position of row i."""
    coords = u_coords(p)
    if coords is None:
        raise ValueError("element is not in the Cartan subspace")
    pattern = _canonical_pattern(vanishing_roots(coords))
    table = _pattern_table()
    if pattern not in table:
        raise ArithmeticError("vanishing pattern matches no complete subsystem")
    return table[pattern]


def is_regular(i: int, lams: Sequence[CycNum]) -> bool:
    """Whether the parameters put the element inside h_{Pi_i}° (exact test)."""
    coords = u_coords(parametrize(i, lams))
    assert coords is not None
    return vanishing_roots(coords) == member_roots(i)


# -- the complement groups Gamma and their H^1 ----------------------------------------

@lru_cache(maxsize=None)
def gamma_group(i: int) -> tuple[WeylMat, ...]:
    data = subsystem(i)
    if data.gamma_gens is None:
        return weyl_group()
    if not data.gamma_gens:
        return (W_IDENTITY,)
    return _closure([W_IDENTITY], list(data.gamma_gens), 400)


@lru_cache(maxsize=None)
def w_pi_group(i: int) -> tuple[WeylMat, ...]:
    """The reflection subgroup W_Pi generated by the member roots."""
    members = member_roots(i)
    gens = [reflection(r) for r in restricted_roots() if r.coeffs in members]
    if not gens:
        return (W_IDENTITY,)
    return _closure([W_IDENTITY], gens, 200)


def gamma_h1(i: int) -> tuple[WeylMat, ...]:
    """H^1(Gamma, trivial conjugation): involution classes, least representatives."""
    group = gamma_group(i)
    data = subsystem(i)
    if data.gamma_gens is None:
        gens = [reflection(r) for r in restricted_roots()]
    else:
        gens = list(data.gamma_gens)
    cocycles = [g for g in group if w_mul(g, g) == W_IDENTITY]
    classes: list[WeylMat] = []
    seen: set[WeylMat] = set()
    for c in sorted(cocycles):
        if c in seen:
            continue
        orbit = {c}
        frontier = [c]
        while frontier:
            x = frontier.pop()
            for g in gens:
                # trivial sigma: twisted conjugacy is ordinary conjugacy
                y = w_mul(w_mul(g, x), w_inv(g))
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen.update(orbit)
        classes.append(min(orbit))
    return tuple(sorted(classes))


def w_inv(w: WeylMat) -> WeylMat:
    rows = [[w[i][j] for j in range(4)] + [Fraction(int(i == k)) for k in range(4)]
            for i in range(4)]
    # Gauss-Jordan over Fractions
    for col in range(4):
        piv = next(r for r in range(col, 4) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [v / pv for v in rows[col]]
        for r in range(4):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(tuple(row[4:]) for row in rows)


# -- action of group elements on h ------------------------------------------------------

def h_action_matrix(g: GElt) -> WeylMat | None:
    """The matrix (u-coordinates) of g's action on the Cartan subspace.

    Returns None when g does not normalize the subspace.  Entries must be
    rational for the result to be a Weyl matrix; non-rational entries also
    yield None.
    """
    cols = []
    for uk in u_basis():
        img = act_tensor(g, uk)
        coords = u_coords(img)
        if coords is None:
            return None
        col = []
        for c in coords:
            if not c.is_rational():
                return None
            col.append(c.to_fraction())
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


# -- the seven real Cartan bases ----------------------------------------------------------

@dataclass(frozen=True)
class CartanBasis:
    index: int
    basis: tuple[Tensor, Tensor, Tensor, Tensor]
    gstar: GElt
    nstar: GElt


def _pair_vector(k: int, sign: int) -> Tensor:
    a, b = _U_PAIRS[k]
    t = [ZERO] * 16
    t[a] = ONE
    t[b] = ONE if sign > 0 else -ONE
    return Tensor(t)


_CARTAN_SIGNS = (
    (1, 1, 1, 1),      # u
    (-1, -1, -1, -1),  # v
    (-1, -1, -1, 1),   # w
    (-1, -1, 1, 1),    # x
    (-1, 1, -1, 1),    # y
    (-1, 1, 1, -1),    # z
    (-1, 1, 1, 1),     # t
)


def _gstar_list() -> list[GElt]:
    eta = CycNum.eta_power
    I = named("I")
    M = named("M")
    L = named("L")
    return [
        gelt(I, I, I, I),
        gelt(L, I, I, I),
        gelt(D(eta(5)), D(eta(5)), m2_neg(D(eta(3))), m2_neg(D(eta(7)))),
        gelt(M, I, I, M),
        gelt(I, M, I, M),
        gelt(I, I, M, M),
        gelt(D(eta(5)), D(eta(5)), D(eta(5)), D(eta(5))),
    ]


@lru_cache(maxsize=1)
def seven_cartans() -> tuple[CartanBasis, ...]:
    out = []
    for m, (signs, gs) in enumerate(zip(_CARTAN_SIGNS, _gstar_list()), start=1):
        basis = tuple(_pair_vector(k, s) for k, s in enumerate(signs))
        ns = g_mul(g_inv(gs), conj_g(gs))
        out.append(CartanBasis(index=m, basis=basis, gstar=gs, nstar=ns))
    return tuple(out)


def cartan_detect(t: Tensor) -> tuple[int, tuple[CycNum, ...]] | None:
    """First (m, coordinates) with t in the span of the m-th Cartan basis."""
    for cb in seven_cartans():
        mat = [[cb.basis[j].c[i] for j in range(4)] for i in range(16)]
        rhs = list(t.c)
        sol = la.solve(mat, rhs)
        if sol is not None:
            return cb.index, tuple(sol)
    return None
