"""First Galois cohomology of finite matrix groups under an order-2 twist.

The objects classified elsewhere in this package carry an action of complex
conjugation.  For a group ``G`` stable under a conjugation map σ (an
automorphism with σ² = id), the relevant invariant is the set

    H¹(G, σ) = {c ∈ G : c·σ(c) = 1} / (c ~ a·c·σ(a)⁻¹ for a ∈ G),

the first nonabelian cohomology set of Z/2Z acting on G through σ.  This
module provides:

* a small container :class:`FiniteConjGroup` bundling a finite group with its
  conjugation map and the callables needed to compute with it,
* exact enumeration of 1-cocycles and their twisted-conjugacy classes with
  deterministic (lexicographically least) representatives,
* the normalizer ``N`` of the diagonalizable subspace inside the product of
  four copies of SL(2, C), built by closing an explicit generating set, and
  its cohomology (seven classes),
* the sixteen recorded group elements that induce the order-2 symmetries of
  the diagonalizable subspace, with the map from such an element to the
  4×4 rational matrix it induces,
* a verifier for externally supplied class lists of stabilizers that may
  have a positive-dimensional identity component: every listed element must
  be a cocycle, no two may be equivalent under the documented finite part or
  the documented identity-component samples, and the count must match.

Everything is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from . import cartanweyl as cw
from . import groupaction as ga
from .exactfield import INV_SQRT2, IMAG, cyc_mul
from .groupaction import GElt


# ---------------------------------------------------------------------------
# groups with conjugation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteConjGroup:
    """A finite group together with an order-2 twist map.

    ``elements`` is the full (finite) element list; ``gens`` is a generating
    subset used to drive orbit searches (it may equal ``elements``).  The
    callables make the container usable both for 4-tuples of 2×2 matrices
    and for 4×4 rational matrices (or any other element type): ``mul``,
    ``inv`` and ``sigma`` implement the group operations and the twist, and
    ``key`` maps an element to a hashable, totally ordered canonical form.
    """

    elements: tuple
    mul: Callable
    inv: Callable
    sigma: Callable
    key: Callable
    identity: object
    gens: tuple
    tag: str = ""

    def __len__(self) -> int:
        return len(self.elements)


def _trivial_sigma(x):
    return x


class _InternedOps:
    """Cached group operations for 4-tuples of 2×2 matrices.

    The groups handled here reuse the same few hundred 2×2 factors over and
    over, so each distinct matrix value is interned (held forever in a pool,
    one canonical object per value) and slot products, inverses, conjugates
    and canonical keys are cached by object identity.  Identity-keyed caches
    are safe because every cached object is kept alive by the pool, so ids
    are never recycled among them.
    """

    __slots__ = ("_pool", "_key_of", "_prod", "_inv", "_conj")

    def __init__(self) -> None:
        self._pool: dict[tuple, ga.Mat2] = {}
        self._key_of: dict[int, tuple] = {}
        self._prod: dict[tuple[int, int], ga.Mat2] = {}
        self._inv: dict[int, ga.Mat2] = {}
        self._conj: dict[int, ga.Mat2] = {}

    def _intern_m(self, m: ga.Mat2) -> ga.Mat2:
        if id(m) in self._key_of:
            return m
        k = ga.m2_key(m)
        held = self._pool.get(k)
        if held is None:
            self._pool[k] = m
            self._key_of[id(m)] = k
            return m
        return held

    def intern(self, g: GElt) -> GElt:
        return tuple(self._intern_m(m) for m in g)

    def mul(self, x: GElt, y: GElt) -> GElt:
        x = self.intern(x)
        y = self.intern(y)
        out = []
        for a, b in zip(x, y):
            ck = (id(a), id(b))
            r = self._prod.get(ck)
            if r is None:
                r = self._intern_m(ga.m2_mul(a, b))
                self._prod[ck] = r
            out.append(r)
        return tuple(out)

    def inv(self, x: GElt) -> GElt:
        x = self.intern(x)
        out = []
        for a in x:
            r = self._inv.get(id(a))
            if r is None:
                r = self._intern_m(ga.m2_inv(a))
                self._inv[id(a)] = r
            out.append(r)
        return tuple(out)

    def sigma(self, x: GElt) -> GElt:
        x = self.intern(x)
        out = []
        for a in x:
            r = self._conj.get(id(a))
            if r is None:
                r = self._intern_m(ga.m2_conj(a))
                self._conj[id(a)] = r
            out.append(r)
        return tuple(out)

    def key(self, x: GElt) -> tuple:
        x = self.intern(x)
        return tuple(self._key_of[id(a)] for a in x)


def gelt_closure(
    gens: Sequence[GElt],
    limit: int,
    what: str,
    ops: _InternedOps | None = None,
) -> tuple[GElt, ...]:
    """Close a set of group elements under multiplication, with a hard cap."""
    if ops is None:
        ops = _InternedOps()
    identity = ops.intern(ga.IDENTITY)
    gen_list = [ops.intern(g) for g in gens]
    seen: dict[tuple, GElt] = {tuple(map(id, identity)): identity}
    frontier = [identity]
    while frontier:
        nxt: list[GElt] = []
        for x in frontier:
            for g in gen_list:
                y = ops.mul(x, g)
                k = tuple(map(id, y))
                if k not in seen:
                    if len(seen) >= limit:
                        raise ArithmeticError(what)
                    seen[k] = y
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen.values(), key=ops.key))


def gelt_group(
    gens: Sequence[GElt],
    *,
    limit: int = 100_000,
    tag: str = "",
    sigma: Callable | None = None,
) -> FiniteConjGroup:
    """Build the group generated by ``gens`` (4-tuples of 2×2 matrices).

    The twist defaults to entrywise complex conjugation; pass ``sigma`` to
    override it (the override is used as given, without caching).
    """
    ops = _InternedOps()
    elements = gelt_closure(
        gens, limit, "group closure exceeded the requested bound", ops
    )
    interned_gens = tuple(ops.intern(g) for g in gens)
    return FiniteConjGroup(
        elements=elements,
        mul=ops.mul,
        inv=ops.inv,
        sigma=ops.sigma if sigma is None else sigma,
        key=ops.key,
        identity=ops.intern(ga.IDENTITY),
        gens=interned_gens if interned_gens else (ops.intern(ga.IDENTITY),),
        tag=tag,
    )


def weyl_group_view(
    elements: Sequence[cw.WeylMat],
    *,
    gens: Sequence[cw.WeylMat] | None = None,
    tag: str = "",
) -> FiniteConjGroup:
    """Wrap a set of 4×4 rational matrices as a group with trivial twist.

    The induced symmetries of the diagonalizable subspace are real matrices,
    so conjugation acts trivially on them; cohomology then enumerates
    conjugacy classes of involutions (plus the identity class).
    """
    elts = tuple(sorted(elements))
    return FiniteConjGroup(
        elements=elts,
        mul=cw.w_mul,
        inv=cw.w_inv,
        sigma=_trivial_sigma,
        key=_trivial_sigma,
        identity=cw.W_IDENTITY,
        gens=tuple(gens) if gens is not None else elts,
        tag=tag,
    )


def product_group(a: FiniteConjGroup, b: FiniteConjGroup, tag: str = "") -> FiniteConjGroup:
    """Direct product of two groups, with the componentwise twist."""
    elements = tuple((x, y) for x in a.elements for y in b.elements)
    gens = tuple((x, b.identity) for x in a.gens) + tuple(
        (a.identity, y) for y in b.gens
    )
    return FiniteConjGroup(
        elements=elements,
        mul=lambda p, q: (a.mul(p[0], q[0]), b.mul(p[1], q[1])),
        inv=lambda p: (a.inv(p[0]), b.inv(p[1])),
        sigma=lambda p: (a.sigma(p[0]), b.sigma(p[1])),
        key=lambda p: (a.key(p[0]), b.key(p[1])),
        identity=(a.identity, b.identity),
        gens=gens,
        tag=tag,
    )


def validate_group(group: FiniteConjGroup) -> None:
    """Check that σ is an involutive automorphism preserving the group.

    σ² = id and σ(G) ⊆ G are checked on every element.  The homomorphism
    property is checked on all pairs for small groups and on a deterministic
    sample of pairs for large ones.
    """
    keys = {group.key(x) for x in group.elements}
    for x in group.elements:
        sx = group.sigma(x)
        if group.key(sx) not in keys:
            raise ValueError("conjugation map does not preserve the group")
        if group.key(group.sigma(sx)) != group.key(x):
            raise ValueError("conjugation map is not an involution")
    n = len(group.elements)
    if n <= 48:
        pairs = [(x, y) for x in group.elements for y in group.elements]
    else:
        # Deterministic sample: stride through the sorted element list.
        flat = group.elements
        pairs = [
            (flat[(i * 7919) % n], flat[(i * 104729 + i * i) % n])
            for i in range(400)
        ]
    for x, y in pairs:
        lhs = group.sigma(group.mul(x, y))
        rhs = group.mul(group.sigma(x), group.sigma(y))
        if group.key(lhs) != group.key(rhs):
            raise ValueError("conjugation map is not an automorphism")


# ---------------------------------------------------------------------------
# cocycles and cohomology classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CocycleClassList:
    """Cohomology classes: one representative per twisted-conjugacy class.

    ``representatives`` are the lexicographically least elements of their
    classes, listed in increasing order; ``sizes`` are the matching class
    cardinalities.  ``case_tag`` records which classification case or group
    the list belongs to.
    """

    representatives: tuple
    case_tag: str = ""
    sizes: tuple = ()

    def __len__(self) -> int:
        return len(self.representatives)


def cocycles(group: FiniteConjGroup) -> list:
    """All c in G with c·σ(c) = identity, sorted canonically."""
    validate_group(group)
    idk = group.key(group.identity)
    out = [
        c
        for c in group.elements
        if group.key(group.mul(c, group.sigma(c))) == idk
    ]
    out.sort(key=group.key)
    return out


def h1(group: FiniteConjGroup, case_tag: str = "") -> CocycleClassList:
    """Twisted-conjugacy classes of cocycles, deterministically represented.

    Two cocycles c, c′ are identified when c′ = a·c·σ(a)⁻¹ for some a in the
    group; that rule defines a group action, so the class of c is its orbit
    under the generators.  Representatives are the least element of each
    orbit; because candidates are scanned in increasing order, the first
    unseen cocycle is automatically its orbit's minimum.
    """
    cocs = cocycles(group)
    by_key = {group.key(c): c for c in cocs}
    unseen = set(by_key)
    reps = []
    sizes = []
    for c in cocs:
        ck = group.key(c)
        if ck not in unseen:
            continue
        orbit = {ck}
        frontier = [c]
        while frontier:
            x = frontier.pop()
            for a in group.gens:
                y = group.mul(group.mul(a, x), group.sigma(group.inv(a)))
                yk = group.key(y)
                if yk not in orbit:
                    if yk not in by_key:
                        raise ArithmeticError(
                            "twisted conjugation left the cocycle set"
                        )
                    orbit.add(yk)
                    frontier.append(by_key[yk])
        unseen -= orbit
        reps.append(c)
        sizes.append(len(orbit))
    return CocycleClassList(
        representatives=tuple(reps),
        case_tag=case_tag or group.tag,
        sizes=tuple(sizes),
    )


# ---------------------------------------------------------------------------
# the normalizer of the diagonalizable subspace
# ---------------------------------------------------------------------------

#: Generators of the stabilizer of a generic diagonalizable element: the
#: finite group (order 32) that fixes every element of the subspace up to
#: simultaneous sign changes of the four coordinates.
_STABILIZER_GEN_NAMES = ("J,J,J,J", "-I,-I,I,I", "-I,I,-I,I", "K,K,K,K")

#: The sixteen recorded lifts: each entry pairs the 4×4 sign/permutation
#: matrix acting on coordinates with a group element inducing it.  The first
#: thirteen are diagonal sign patterns; the last three swap the coordinates
#: pairwise with signs.
_LIFT_TABLE: tuple[tuple[tuple[tuple[int, int, int, int], ...], str], ...] = (
    (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)), "-I,I,I,I"),
    (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)), "M,M,-N,N"),
    (((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), "L,I,I,L"),
    (((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)), "I,L,I,L"),
    (((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)), "I,I,L,L"),
    (((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)), "I,I,L,-L"),
    (((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)), "I,L,I,-L"),
    (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)), "L,I,I,-L"),
    (((-1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), "M,M,M,M"),
    (((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), "N,M,M,N"),
    (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)), "M,N,M,N"),
    (((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1)), "M,M,N,N"),
    (((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)), "-N,N,N,N"),
    (((0, 0, 0, -1), (0, 0, 1, 0), (0, 1, 0, 0), (-1, 0, 0, 0)), "L,L,-K,K"),
    (((0, 0, -1, 0), (0, 0, 0, -1), (-1, 0, 0, 0), (0, -1, 0, 0)), "I,K,I,K"),
    (((0, -1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, -1), (0, 0, -1, 0)), "K,I,I,K"),
)


def stabilizer_finite_gens() -> tuple[GElt, ...]:
    """Generators of the order-32 stabilizer of a generic element."""
    return tuple(ga.gelt_from_names(s) for s in _STABILIZER_GEN_NAMES)


@lru_cache(maxsize=1)
def weyl_cocycle_lifts() -> tuple[tuple[cw.WeylMat, GElt], ...]:
    """The sixteen recorded (matrix, lift) pairs, matrices as exact 4×4."""
    return tuple(
        (cw.wmat(rows), ga.gelt_from_names(names)) for rows, names in _LIFT_TABLE
    )


def _hadamard_lift() -> GElt:
    """A lift of an order-2 symmetry mixing all four coordinates.

    The recorded sixteen lifts only induce sign changes and pairwise swaps;
    the full symmetry group of the coordinate functionals also contains
    half-integral reflections.  The unimodular matrix (1/√2)·[[1, i], [i, 1]]
    placed in every slot induces one of them, completing a generating set.
    """
    s = INV_SQRT2
    si = cyc_mul(INV_SQRT2, IMAG)
    a = ga.mat2(s, si, si, s)
    return ga.gelt(a, a, a, a)


def normalizer_generators() -> tuple[GElt, ...]:
    """A generating set for the order-6144 normalizer.

    Combines the order-32 stabilizer of a generic element, the sixteen
    recorded coordinate-symmetry lifts, and the half-integral reflection
    lift.  Every generator is checked to normalize the diagonalizable
    subspace.
    """
    gens = list(stabilizer_finite_gens())
    gens.extend(lift for _, lift in weyl_cocycle_lifts())
    gens.append(_hadamard_lift())
    for g in gens:
        if cw.h_action_matrix(g) is None:
            raise ArithmeticError("normalizer construction inconsistent")
    return tuple(gens)


@lru_cache(maxsize=1)
def build_normalizer() -> FiniteConjGroup:
    """The full normalizer of the diagonalizable subspace, order 6144.

    It is generated by the order-32 stabilizer of a generic element together
    with lifts of generators of the coordinate symmetry group (order 192);
    the closure must come out to exactly 32·192 = 6144 elements.
    """
    gens = list(normalizer_generators())
    ops = _InternedOps()
    elements = gelt_closure(gens, 6144, "normalizer construction inconsistent", ops)
    if len(elements) != 6144:
        raise ArithmeticError("normalizer construction inconsistent")
    return FiniteConjGroup(
        elements=elements,
        mul=ops.mul,
        inv=ops.inv,
        sigma=ops.sigma,
        key=ops.key,
        identity=ops.intern(ga.IDENTITY),
        gens=tuple(ops.intern(g) for g in gens),
        tag="normalizer",
    )


@lru_cache(maxsize=1)
def h1_of_normalizer() -> CocycleClassList:
    """Cohomology of the normalizer: exactly seven classes."""
    classes = h1(build_normalizer(), case_tag="normalizer")
    if len(classes) != 7:
        raise ArithmeticError(
            "expected 7 cohomology classes for the normalizer, found %d"
            % len(classes)
        )
    return classes


def cocycle_to_weyl(n: GElt) -> cw.WeylMat:
    """The 4×4 matrix by which ``n`` permutes/scales the subspace coordinates.

    Raises ``ValueError`` when ``n`` does not normalize the diagonalizable
    subspace (so no such matrix exists).
    """
    w = cw.h_action_matrix(n)
    if w is None:
        raise ValueError("element does not normalize the diagonalizable subspace")
    return w


# ---------------------------------------------------------------------------
# verification of documented class lists
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilizerSpec:
    """Description of a stabilizer with possibly infinite identity component.

    ``finite_gens`` generate the documented finite part (component
    representatives and finite subgroups); ``torus_samples`` are explicit
    elements of the identity component used to probe equivalences that the
    finite part alone cannot see.  ``expected_count`` is the documented
    number of cohomology classes.
    """

    tag: str
    finite_gens: tuple[GElt, ...]
    torus_samples: tuple[GElt, ...] = ()
    expected_count: int | None = None
    closure_limit: int = 4096


class ClassListError(ValueError):
    """A documented class list failed verification; ``report`` has details."""

    def __init__(self, report: dict):
        self.report = report
        failures = report.get("failures", [])
        first = failures[0] if failures else {}
        super().__init__(
            "class list %r failed verification: %s"
            % (report.get("case"), first)
        )


def verify_class_list(
    classes: CocycleClassList,
    spec: StabilizerSpec,
    *,
    strict: bool = True,
) -> dict:
    """Check a documented list of cohomology classes against its stabilizer.

    Three checks are run: (a) every listed element is a 1-cocycle;
    (b) no two listed elements are related by twisted conjugation with any
    element of the finite part, nor with finite-part elements multiplied by
    the documented identity-component samples; (c) the list length matches
    the documented count.  Returns a report dict; with ``strict`` (default)
    a failing report raises :class:`ClassListError`.
    """
    failures: list[dict] = []
    reps = list(classes.representatives)
    idk = ga.g_key(ga.IDENTITY)
    for i, z in enumerate(reps):
        if ga.g_key(ga.g_mul(z, ga.conj_g(z))) != idk:
            failures.append({"check": "cocycle", "case": spec.tag, "index": i})
    finite_part = gelt_closure(
        spec.finite_gens, spec.closure_limit,
        "finite part closure exceeded the configured bound",
    )
    probes = list(finite_part)
    for t in spec.torus_samples:
        for f in finite_part:
            probes.append(ga.g_mul(t, f))
    pairs_checked = 0
    rep_keys = [ga.g_key(z) for z in reps]
    for i in range(len(reps)):
        for j in range(len(reps)):
            if i == j:
                continue
            pairs_checked += 1
            for a in probes:
                moved = ga.g_mul(ga.g_mul(a, reps[i]), ga.conj_g(ga.g_inv(a)))
                if ga.g_key(moved) == rep_keys[j]:
                    failures.append(
                        {
                            "check": "inequivalent",
                            "case": spec.tag,
                            "pair": (i, j),
                        }
                    )
                    break
            else:
                continue
            break
    if spec.expected_count is not None and len(reps) != spec.expected_count:
        failures.append(
            {
                "check": "count",
                "case": spec.tag,
                "expected": spec.expected_count,
                "found": len(reps),
            }
        )
    report = {
        "case": spec.tag,
        "passed": not failures,
        "classes": len(reps),
        "finite_part_order": len(finite_part),
        "probes": len(probes),
        "pairs_checked": pairs_checked,
        "failures": failures,
    }
    if strict and failures:
        raise ClassListError(report)
    return report


__all__ = [
    "FiniteConjGroup",
    "CocycleClassList",
    "StabilizerSpec",
    "ClassListError",
    "gelt_group",
    "gelt_closure",
    "weyl_group_view",
    "product_group",
    "validate_group",
    "cocycles",
    "h1",
    "stabilizer_finite_gens",
    "weyl_cocycle_lifts",
    "build_normalizer",
    "h1_of_normalizer",
    "cocycle_to_weyl",
    "verify_class_list",
]
