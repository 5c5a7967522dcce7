"""The group SL(2)^4 over Q(eta), its action, and real-structure bookkeeping.

Group elements are 4-tuples of unimodular 2x2 matrices (tuple-of-tuples of
CycNum, so they hash and compare structurally).  The first factor acts on the
first tensor slot and so on.  Alongside the action this module carries the
small dictionary of named matrices used throughout the orbit tables, the
recorded lifting table epsilon (solving b^-1 conj(b) = a for the named
matrices), a general splitting routine for arbitrary unimodular cocycles, and
the qubit-permutation automorphisms.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Sequence

from .exactfield import (
    IMAG,
    ONE,
    ZERO,
    CycNum,
    cyc_to_str,
    parse_cyc,
    rat,
)
from .liealg import (
    LieElt,
    Tensor,
    g0_to_quad_mats,
    quad_mats_to_g0,
    u_basis,
)

Mat2 = tuple[tuple[CycNum, CycNum], tuple[CycNum, CycNum]]
GElt = tuple[Mat2, Mat2, Mat2, Mat2]


# -- 2x2 matrices ---------------------------------------------------------------

def mat2(a, b, c, d) -> Mat2:
    a, b, c, d = (
        v if isinstance(v, CycNum) else rat(v) for v in (a, b, c, d)
    )
    return ((a, b), (c, d))


def m2_mul(x: Mat2, y: Mat2) -> Mat2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def m2_det(x: Mat2) -> CycNum:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


def m2_inv(x: Mat2) -> Mat2:
    d = m2_det(x)
    if not d:
        raise ZeroDivisionError("singular matrix")
    di = d.inverse()
    return (
        (di * x[1][1], -(di * x[0][1])),
        (-(di * x[1][0]), di * x[0][0]),
    )


def m2_neg(x: Mat2) -> Mat2:
    return ((-x[0][0], -x[0][1]), (-x[1][0], -x[1][1]))


def m2_conj(x: Mat2) -> Mat2:
    return (
        (x[0][0].conjugate(), x[0][1].conjugate()),
        (x[1][0].conjugate(), x[1][1].conjugate()),
    )


def m2_scale(c: CycNum, x: Mat2) -> Mat2:
    return ((c * x[0][0], c * x[0][1]), (c * x[1][0], c * x[1][1]))


def m2_key(x: Mat2) -> tuple:
    return tuple(v.key() for row in x for v in row)


# -- named matrices ----------------------------------------------------------------

def D(u: CycNum) -> Mat2:
    if not u:
        raise ZeroDivisionError("D(0) is not invertible")
    return mat2(u, ZERO, ZERO, u.inverse())


def sharp(a: Mat2) -> Mat2:
    """The flip (a b; c d) -> (d c; b a)."""
    return mat2(a[1][1], a[1][0], a[0][1], a[0][0])


def _zeta(k: int) -> CycNum:
    return CycNum.eta_power(2 * k)


_NAMED: dict[str, Mat2] = {
    "I": mat2(ONE, ZERO, ZERO, ONE),
    "J": mat2(ZERO, ONE, -ONE, ZERO),
    "K": mat2(ZERO, IMAG, IMAG, ZERO),
    "L": mat2(IMAG, ZERO, ZERO, -IMAG),
    "M": mat2(_zeta(3), ZERO, ZERO, -_zeta(1)),
    "N": mat2(_zeta(1), ZERO, ZERO, -_zeta(3)),
    "F": mat2(rat(1, 2), IMAG.scale(rat(1, 2).to_fraction()), IMAG, ONE),
}


def named(name: str) -> Mat2:
    """One of the fixed matrices I, J, K, L, M, N, F (optionally with a - sign)."""
    if name.startswith("-"):
        return m2_neg(named(name[1:]))
    try:
        return _NAMED[name]
    except KeyError:
        raise KeyError(f"no matrix named {name!r}") from None


I2 = _NAMED["I"]
IDENTITY: GElt = (I2, I2, I2, I2)


def gelt(*factors: Mat2) -> GElt:
    if len(factors) != 4:
        raise ValueError("a group element has 4 factors")
    return tuple(factors)  # type: ignore[return-value]


def gelt_from_names(spec: str) -> GElt:
    """Build an element from a comma-separated name list, e.g. "-I,I,K,-L"."""
    parts = [p.strip() for p in spec.split(",")]
    return gelt(*[named(p) for p in parts])


def g_mul(x: GElt, y: GElt) -> GElt:
    return tuple(m2_mul(a, b) for a, b in zip(x, y))  # type: ignore[return-value]


def g_inv(x: GElt) -> GElt:
    return tuple(m2_inv(a) for a in x)  # type: ignore[return-value]


def conj_g(x: GElt) -> GElt:
    return tuple(m2_conj(a) for a in x)  # type: ignore[return-value]


def g_key(x: GElt) -> tuple:
    return tuple(m2_key(a) for a in x)


def is_unimodular(x: GElt) -> bool:
    return all(m2_det(a) == ONE for a in x)


# -- actions -------------------------------------------------------------------------

def act_tensor(g: GElt, t: Tensor) -> Tensor:
    """Slot-wise action: factor k acts on tensor index position k."""
    coeffs = list(t.c)
    for slot in range(4):
        a = g[slot]
        if a == I2:
            continue
        bit = 8 >> slot
        out = [ZERO] * 16
        for ti in range(16):
            c = coeffs[ti]
            if not c:
                continue
            col = 1 if ti & bit else 0
            for row in (0, 1):
                v = a[row][col]
                if v:
                    target = (ti & ~bit) | (bit if row else 0)
                    out[target] = out[target] + v * c
        coeffs = out
    return Tensor(coeffs)


def act_g0(g: GElt, h: LieElt) -> LieElt:
    """Adjoint action on a degree-zero element: slot-wise conjugation."""
    mats = g0_to_quad_mats(h)
    out = []
    for a, m in zip(g, mats):
        ama = m2_mul(m2_mul(a, (tuple(m[0]), tuple(m[1]))), m2_inv(a))
        out.append([list(ama[0]), list(ama[1])])
    return quad_mats_to_g0(out)


Quadruple = tuple[Tensor, LieElt, Tensor, Tensor]


def act_quadruple(g: GElt, q: Quadruple) -> Quadruple:
    p, h, e, f = q
    return act_tensor(g, p), act_g0(g, h), act_tensor(g, e), act_tensor(g, f)


# -- the recorded lifting table -------------------------------------------------------

def _build_epsilon() -> list[tuple[Mat2, Mat2]]:
    eta = CycNum.eta_power
    rows = [
        (named("I"), named("I")),
        (m2_neg(named("I")), named("L")),
        (named("M"), D(eta(5))),
        (m2_neg(named("M")), D(eta(1))),
        (named("N"), D(eta(7))),
        (m2_neg(named("N")), m2_neg(D(eta(3)))),
        (named("L"), named("M")),
        (m2_neg(named("L")), D(_zeta(1))),
        (named("K"), m2_mul(named("L"), named("F"))),
        (m2_neg(named("K")), named("F")),
    ]
    return rows


_EPSILON_ROWS = _build_epsilon()
_EPSILON = {a: b for a, b in _EPSILON_ROWS}


def epsilon(a: Mat2) -> Mat2:
    """The recorded lift: returns b with b^-1 * conj(b) = a."""
    try:
        return _EPSILON[a]
    except KeyError:
        raise KeyError("no recorded lift") from None


def epsilon_rows() -> list[tuple[Mat2, Mat2]]:
    """All rows (a, epsilon(a)) of the recorded table, identity included."""
    return list(_EPSILON_ROWS)


def split_gelt(z: GElt) -> GElt:
    """b with b^-1 * conj(b) = z, using recorded lifts slot-wise when possible."""
    factors = []
    for a in z:
        b = _EPSILON.get(a)
        factors.append(b if b is not None else solve_split(a))
    return gelt(*factors)


def solve_split(a: Mat2) -> Mat2:
    """A matrix b, det 1, with b^-1 * conj(b) = a; needs a*conj(a) = I, det a = 1.

    Classical construction: b0 = c*I + conj(c)*conj(a) satisfies
    conj(b0) = b0*a for every scalar c; pick c making b0 invertible.  Its
    determinant is automatically real (det a = 1), so multiplying one row by
    1/det gives a real correction that fixes the determinant without
    disturbing the splitting property.
    """
    if m2_det(a) != ONE:
        raise ValueError("can only split unimodular cocycles")
    if m2_mul(a, m2_conj(a)) != I2:
        raise ValueError("not a 1-cocycle: a*conj(a) != I")
    ac = m2_conj(a)
    candidates = [CycNum.eta_power(k) for k in range(16)]
    candidates += [CycNum.eta_power(k) + ONE for k in range(16)]
    for c in candidates:
        cc = c.conjugate()
        b0 = (
            (c + cc * ac[0][0], cc * ac[0][1]),
            (cc * ac[1][0], c + cc * ac[1][1]),
        )
        d = m2_det(b0)
        if not d:
            continue
        if not d.is_real():
            raise ArithmeticError("splitting determinant is not real")
        di = d.inverse()
        return ((di * b0[0][0], di * b0[0][1]), b0[1])
    raise ArithmeticError("no splitting found")


# -- qubit permutations ----------------------------------------------------------------

class PermAuto:
    """The algebra automorphism permuting tensor slots by sigma (1-indexed)."""

    def __init__(self, sigma: Sequence[int] | str | None = None):
        if sigma is None or sigma == "id" or len(tuple(sigma)) == 0:
            perm = (1, 2, 3, 4)
        else:
            s = tuple(int(v) for v in sigma)
            if len(s) == 4 and sorted(s) == [1, 2, 3, 4]:
                perm = s  # one-line form: k -> s[k-1]
            elif 2 <= len(s) <= 4 and len(set(s)) == len(s) and all(1 <= v <= 4 for v in s):
                # cycle notation
                image = {v: v for v in (1, 2, 3, 4)}
                for pos, v in enumerate(s):
                    image[v] = s[(pos + 1) % len(s)]
                perm = tuple(image[k] for k in (1, 2, 3, 4))
            else:
                raise ValueError(f"not a permutation of 1..4: {sigma!r}")
        self.perm = perm

    def __call__(self, t: Tensor) -> Tensor:
        out = [ZERO] * 16
        for ti in range(16):
            c = t.c[ti]
            if not c:
                continue
            target = 0
            for k in range(4):
                bit = (ti >> (3 - k)) & 1
                if bit:
                    target |= 8 >> (self.perm[k] - 1)
            out[target] = out[target] + c
        return Tensor(out)

    def on_gelt(self, g: GElt) -> GElt:
        out: list[Mat2] = [I2] * 4
        for k in range(4):
            out[self.perm[k] - 1] = g[k]
        return gelt(*out)

    def inverse(self) -> "PermAuto":
        inv = [0, 0, 0, 0]
        for k in range(4):
            inv[self.perm[k] - 1] = k + 1
        return PermAuto(tuple(inv))

    def __repr__(self) -> str:
        return f"PermAuto({self.perm})"


def perm_auto(sigma=None) -> PermAuto:
    return PermAuto(sigma)


# -- JSON ---------------------------------------------------------------------------------

def gelt_to_json_dict(g: GElt) -> dict:
    return {
        "factors": [
            [[cyc_to_str(v) for v in row] for row in factor] for factor in g
        ]
    }


def gelt_to_json(g: GElt) -> str:
    return json.dumps(gelt_to_json_dict(g), sort_keys=True)


def gelt_from_json_dict(d: dict) -> GElt:
    if not isinstance(d, dict) or "factors" not in d:
        raise ValueError('group element JSON needs a "factors" list')
    fs = d["factors"]
    if not isinstance(fs, list) or len(fs) != 4:
        raise ValueError("factors must be a list of 4 matrices")
    out = []
    for f in fs:
        if (
            not isinstance(f, list)
            or len(f) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in f)
        ):
            raise ValueError("each factor must be a 2x2 matrix")
        out.append(
            (
                (parse_cyc(f[0][0]), parse_cyc(f[0][1])),
                (parse_cyc(f[1][0]), parse_cyc(f[1][1])),
            )
        )
    return gelt(*out)


def gelt_from_json(text: str) -> GElt:
    return gelt_from_json_dict(json.loads(text))
