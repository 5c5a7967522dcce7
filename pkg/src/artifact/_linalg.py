"""Exact linear algebra and polynomial arithmetic over the cyclotomic field.

Matrices are lists of lists of CycNum, vectors are lists of CycNum, and
polynomials are lists of CycNum coefficients indexed by degree.  Everything
here is plain Gaussian elimination / Euclid over an exact field; no pivoting
heuristics beyond "first nonzero" are needed.
"""

from __future__ import annotations

from .exactfield import ONE, ZERO, CycNum

Vec = list[CycNum]
Mat = list[list[CycNum]]
Poly = list[CycNum]


# -- matrices -----------------------------------------------------------------

def zeros(n: int, m: int) -> Mat:
    return [[ZERO] * m for _ in range(n)]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a: Mat) -> Mat:
    return [[-x for x in row] for row in a]


def mat_scale(c: CycNum, a: Mat) -> Mat:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = list(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            orow.append(acc)
        out.append(orow)
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def transpose(a: Mat) -> Mat:
    return [list(row) for row in zip(*a)]


def mat_eq(a: Mat, b: Mat) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_mat(a: Mat) -> bool:
    return all(not x for row in a for x in row)


def mat_conj(a: Mat) -> Mat:
    return [[x.conjugate() for x in row] for row in a]


def vec_add(u: Vec, v: Vec) -> Vec:
    return [x + y for x, y in zip(u, v)]


def vec_sub(u: Vec, v: Vec) -> Vec:
    return [x - y for x, y in zip(u, v)]


def vec_scale(c: CycNum, v: Vec) -> Vec:
    return [c * x for x in v]


def is_zero_vec(v: Vec) -> bool:
    return all(not x for x in v)


# -- elimination --------------------------------------------------------------

def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [inv * x for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def nullspace(a: Mat) -> list[Vec]:
    """Basis of the right kernel of a."""
    if not a:
        return []
    cols = len(a[0])
    r, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a: Mat, b: Vec) -> Vec | None:
    """One solution x of a x = b, or None if inconsistent."""
    aug = [row + [bi] for row, bi in zip(a, b)]
    cols = len(a[0])
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for i, p in enumerate(pivots):
        x[p] = r[i][cols]
    return x


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [list(row) + list(idr) for row, idr in zip(a, identity(n))]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def det(a: Mat) -> CycNum:
    """Determinant by exact Gaussian elimination."""
    m = [list(row) for row in a]
    n = len(m)
    out = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            out = -out
        out = out * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def in_span(basis: list[Vec], v: Vec) -> bool:
    """Is v in the span of the given vectors?"""
    if is_zero_vec(v):
        return True
    if not basis:
        return False
    a = transpose(basis)
    return solve(a, v) is not None


def span_dim(vectors: list[Vec]) -> int:
    if not vectors:
        return 0
    return rank(vectors)


class IncrementalSpan:
    """Row space built up one vector at a time, with membership testing."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[Vec] = []  # in echelon form
        self.pivots: list[int] = []

    def _reduce(self, v: Vec) -> Vec:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v: Vec) -> bool:
        return is_zero_vec(self._reduce(v))

    def add(self, v: Vec) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        w = self._reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = w[p].inverse()
        w = [inv * x for x in w]
        for i, row in enumerate(self.rows):
            if row[p]:
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(p)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


# -- polynomials ---------------------------------------------------------------

def poly_trim(p: Poly) -> Poly:
    while p and not p[-1]:
        p.pop()
    return p


def poly_deg(p: Poly) -> int:
    return len(p) - 1


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)]
    return poly_trim(out)


def poly_sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else ZERO) - (q[i] if i < len(q) else ZERO) for i in range(n)]
    return poly_trim(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("division by zero")
    rem = list(p)
    quo = [ZERO] * max(0, len(p) - len(q) + 1)
    inv = q[-1].inverse()
    while len(rem) >= len(q) and poly_trim(rem):
        if len(rem) < len(q):
            break
        f = rem[-1] * inv
        shift = len(rem) - len(q)
        quo[shift] = f
        for i, c in enumerate(q):
            rem[shift + i] = rem[shift + i] - f * c
        rem.pop()
    return poly_trim(quo), poly_trim(rem)


def poly_monic(p: Poly) -> Poly:
    if not p:
        return []
    inv = p[-1].inverse()
    return [inv * c for c in p]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = list(p), list(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return poly_monic(a)


def poly_xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """g, s, t with s*p + t*q = g = gcd(p, q), g monic."""
    r0, r1 = list(p), list(q)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(quo, t1))
    if not r0:
        return [], s0, t0
    lead_inv = r0[-1].inverse()
    scale = [lead_inv]
    return poly_mul(scale, r0), poly_mul(scale, s0), poly_mul(scale, t0)


def poly_deriv(p: Poly) -> Poly:
    return poly_trim([p[i].scale(i) for i in range(1, len(p))])


def poly_mod(p: Poly, m: Poly) -> Poly:
    return poly_divmod(p, m)[1]


def poly_eval_mat(p: Poly, a: Mat) -> Mat:
    """Evaluate a polynomial at a square matrix (Horner)."""
    n = len(a)
    out = zeros(n, n)
    for c in reversed(p):
        out = mat_mul(out, a)
        for i in range(n):
            out[i][i] = out[i][i] + c
    return out


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), monic: the radical for our characteristic-zero field."""
    g = poly_gcd(p, poly_deriv(p))
    quo, rem = poly_divmod(p, g)
    if rem:
        raise ArithmeticError("gcd does not divide the polynomial")
    return poly_monic(quo)


def minimal_polynomial(a: Mat) -> Poly:
    """Monic minimal polynomial of a square matrix, by Krylov elimination."""
    n = len(a)
    span = IncrementalSpan(n * n)
    powers: list[Mat] = [identity(n)]
    span.add([x for row in powers[0] for x in row])
    cur = powers[0]
    while True:
        cur = mat_mul(cur, a)
        flat = [x for row in cur for x in row]
        if span.contains(flat):
            break
        span.add(flat)
        powers.append(cur)
    # express cur in terms of the lower powers
    cols = transpose([[x for row in p for x in row] for p in powers])
    coeffs = solve(cols, [x for row in cur for x in row])
    assert coeffs is not None
    poly = [-c for c in coeffs] + [ONE]
    return poly_trim(poly)


def minimal_polynomial_vector(a: Mat, v: Vec) -> Poly:
    """Monic minimal polynomial of a relative to the vector v."""
    span = IncrementalSpan(len(v))
    vecs = [list(v)]
    span.add(vecs[0])
    cur = vecs[0]
    while True:
        cur = mat_vec(a, cur)
        if span.contains(cur):
            break
        span.add(cur)
        vecs.append(cur)
    cols = transpose(vecs)
    coeffs = solve(cols, cur)
    assert coeffs is not None
    return poly_trim([-c for c in coeffs] + [ONE])
