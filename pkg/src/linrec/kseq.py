"""k-dimensional linearly recursive sequences over elementary ideals.

A KSeq is determined by one monic polynomial f_j per axis and the values
on the polyhedron {i | i_j < deg f_j}, stored in the graded
lexicographic chain order. Evaluation at any multi-index n reduces
x_j^{n_j} modulo f_j per axis and contracts the product of remainders
against the stored polyhedron, so single terms cost O(prod l_j) ring
operations after O(log n) polynomial steps.

Only elementary (one polynomial per variable) ideals are supported:
non-elementary monic ideals admit no finite evaluation scheme of this
shape.
"""

from __future__ import annotations

from itertools import product as iter_product

from .ring import Ring
from .poly import Poly, split_x_part, x_power_rem, x_power_rem_signed
from .matrix import companion, kronecker, kronecker_sum, char_poly
from .seq1 import LinRecSeq, TensorPair, _as_vec, _unwrap, pascal_rows
from .ring import UnsupportedRingError

MultiIndex = tuple[int, ...]


def lex_key(i: MultiIndex) -> tuple[int, ...]:
    return (sum(i), *i)


def lex_cmp(i: MultiIndex, n: MultiIndex) -> int:
    """-1, 0 or 1 as i precedes, equals or follows n.

    i precedes n when the first nonzero among
    (sum(n)-sum(i), n_1-i_1, ..., n_k-i_k) is positive.
    """
    if len(i) != len(n):
        raise ValueError("arity mismatch")
    a, b = lex_key(i), lex_key(n)
    return -1 if a < b else (0 if a == b else 1)


def polyhedron_chain(l: MultiIndex) -> list[MultiIndex]:
    """All i <= l-1 componentwise, in chain order; length prod(l_j)."""
    pts = list(iter_product(*(range(x) for x in l)))
    pts.sort(key=lex_key)
    return pts


class KSeq:
    __slots__ = ("ring", "k", "dim", "elem", "values", "_chain", "_pos")

    def __init__(self, ring: Ring, elem, values, dim: int = 1):
        elem = tuple(elem)
        if not elem:
            raise ValueError("need at least one axis polynomial")
        for f in elem:
            if f.ring != ring:
                raise ValueError("axis polynomial ring mismatch")
            if not f.is_monic():
                raise ValueError("axis polynomials must be monic")
        if dim < 1:
            raise ValueError("dim must be >= 1")
        chain = polyhedron_chain(tuple(f.degree for f in elem))
        vecs = tuple(_as_vec(ring, v, dim) for v in values)
        if len(vecs) != len(chain):
            raise ValueError(
                f"need exactly {len(chain)} polyhedron values, got {len(vecs)}"
            )
        self.ring = ring
        self.k = len(elem)
        self.dim = dim
        self.elem = elem
        self.values = vecs
        self._chain = chain
        self._pos = {idx: p for p, idx in enumerate(chain)}

    @property
    def degrees(self) -> MultiIndex:
        return tuple(f.degree for f in self.elem)

    def _vec(self, n: MultiIndex) -> tuple[int, ...]:
        if len(n) != self.k:
            raise ValueError("arity mismatch")
        if any(c < 0 for c in n):
            raise ValueError("negative index; use k_reverse_term")
        if not self.values:
            return (0,) * self.dim
        if n in self._pos:
            return self.values[self._pos[n]]
        rems = []
        for nj, fj in zip(n, self.elem):
            r = x_power_rem(nj, fj).coeffs
            rems.append(list(r) + [0] * (fj.degree - len(r)))
        return self._contract(rems)

    def _contract(self, rems: list[list[int]]) -> tuple[int, ...]:
        ring, dim = self.ring, self.dim
        acc = [0] * dim
        for pos, idx in enumerate(self._chain):
            coef = 1
            for j in range(self.k):
                coef *= rems[j][idx[j]]
                if not coef:
                    break
            if coef:
                v = self.values[pos]
                for d in range(dim):
                    acc[d] += coef * v[d]
        return tuple(ring.normalize(a) for a in acc)

    def term(self, n: MultiIndex):
        """Value at a nonnegative multi-index."""
        return _unwrap(self._vec(tuple(n)), self.dim)

    def counit(self):
        return self.term((0,) * self.k)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KSeq)
            and self.ring == other.ring
            and self.dim == other.dim
            and self.elem == other.elem
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.dim, self.elem, self.values))

    def __repr__(self) -> str:
        polys = ", ".join(str(f) for f in self.elem)
        return f"KSeq({self.ring!r}, elem=[{polys}], {len(self.values)} values)"

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "dim": self.dim,
            "elem": [f.to_json() for f in self.elem],
            "values": [[str(c) for c in v] for v in self.values],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KSeq":
        ring = Ring.from_json(obj["ring"])
        elem = [Poly.from_json(ring, p) for p in obj["elem"]]
        dim = int(obj.get("dim", 1))
        values = []
        for v in obj["values"]:
            if isinstance(v, (list, tuple)):
                values.append([int(c) for c in v])
            else:
                values.append(int(v))
        return cls(ring, elem, values, dim)


def k_impulse(elem, t: MultiIndex) -> KSeq:
    """The k-sequence with polyhedron values delta_{i,t}."""
    elem = tuple(elem)
    ring = elem[0].ring
    chain = polyhedron_chain(tuple(f.degree for f in elem))
    t = tuple(t)
    if t not in set(chain):
        raise ValueError(f"impulse index {t} outside the polyhedron")
    return KSeq(ring, elem, [1 if idx == t else 0 for idx in chain])


def kshift(g, w: KSeq) -> KSeq:
    """A sparse multivariate polynomial g = [(multi-index, coeff), ...]
    acting on w: (g RA w)(n) = sum_s c_s w(n+s); same axis polynomials."""
    ring, dim = w.ring, w.dim
    terms = [(tuple(s), ring.normalize(int(c))) for s, c in g]
    for s, _ in terms:
        if len(s) != w.k:
            raise ValueError("arity mismatch")
    values = []
    for idx in w._chain:
        acc = [0] * dim
        for s, c in terms:
            if c:
                v = w._vec(tuple(a + b for a, b in zip(idx, s)))
                for d in range(dim):
                    acc[d] += c * v[d]
        values.append(tuple(ring.normalize(a) for a in acc))
    return KSeq(ring, w.elem, values, dim)


def _check_family(seqs):
    if not seqs:
        raise ValueError("need at least one sequence")
    ring = seqs[0].ring
    dim = seqs[0].dim
    for u in seqs:
        if u.ring != ring:
            raise ValueError("ring mismatch")
        if u.dim != dim:
            raise ValueError("dim mismatch")
    return ring, dim


def sep_sum(*seqs: LinRecSeq) -> KSeq:
    """u(n) = u_1(n_1) + ... + u_k(n_k).

    Axis polynomials are f_i when f_i(1) = 0 and f_i * (x-1) otherwise,
    so each axis polynomial kills both its own summand and the constants
    contributed by the other axes.
    """
    ring, dim = _check_family(seqs)
    xm1 = Poly(ring, (-1, 1))
    gs = [u.f if u.f(1) == 0 else u.f * xm1 for u in seqs]
    wins = [u._vec_window(g.degree) for u, g in zip(seqs, gs)]
    chain = polyhedron_chain(tuple(g.degree for g in gs))
    values = []
    for idx in chain:
        acc = [0] * dim
        for j, i in enumerate(idx):
            v = wins[j][i]
            for d in range(dim):
                acc[d] += v[d]
        values.append(tuple(ring.normalize(a) for a in acc))
    return KSeq(ring, gs, values, dim)


def sep_product(*seqs: LinRecSeq) -> KSeq:
    """u(n) = u_1(n_1) * ... * u_k(n_k), scalar factors."""
    ring, dim = _check_family(seqs)
    if dim != 1:
        raise ValueError("separable products need scalar (dim 1) sequences")
    fs = [u.f for u in seqs]
    wins = [u._scalar_window(f.degree) for u, f in zip(seqs, fs)]
    chain = polyhedron_chain(tuple(f.degree for f in fs))
    norm = ring.normalize
    values = []
    for idx in chain:
        p = 1
        for j, i in enumerate(idx):
            p *= wins[j][i]
            if not p:
                break
        values.append(norm(p))
    return KSeq(ring, fs, values)


def _check_kpair(u: KSeq, v: KSeq):
    if u.ring != v.ring:
        raise ValueError("ring mismatch")
    if u.k != v.k:
        raise ValueError("arity mismatch")
    if u.dim != 1 or v.dim != 1:
        raise ValueError("products are defined for scalar (dim 1) sequences only")


def _axis_product_poly(fj: Poly, gj: Poly, hurwitz: bool) -> Poly:
    if fj.degree == 0 or gj.degree == 0:
        return Poly.one(fj.ring)
    a, b = companion(fj), companion(gj)
    return char_poly(kronecker_sum(a, b) if hurwitz else kronecker(a, b))


def k_hadamard(u: KSeq, v: KSeq) -> KSeq:
    """Termwise product; per-axis char polys chi(S_f (x) S_g)."""
    _check_kpair(u, v)
    elem = [_axis_product_poly(f, g, False) for f, g in zip(u.elem, v.elem)]
    chain = polyhedron_chain(tuple(f.degree for f in elem))
    mul = u.ring.mul
    values = [mul(u._vec(i)[0], v._vec(i)[0]) for i in chain]
    return KSeq(u.ring, elem, values)


def k_hurwitz(u: KSeq, v: KSeq) -> KSeq:
    """Multi-binomial convolution; per-axis Kronecker-sum char polys."""
    _check_kpair(u, v)
    elem = [_axis_product_poly(f, g, True) for f, g in zip(u.elem, v.elem)]
    degs = tuple(f.degree for f in elem)
    chain = polyhedron_chain(degs)
    ring = u.ring
    rows = pascal_rows(ring, max(degs) if degs else 1)
    values = []
    for idx in chain:
        s = 0
        for t in iter_product(*(range(i + 1) for i in idx)):
            b = 1
            for ij, tj in zip(idx, t):
                b *= rows[ij][tj]
            if b:
                rest = tuple(i - a for i, a in zip(idx, t))
                s += b * u._vec(t)[0] * v._vec(rest)[0]
        values.append(ring.normalize(s))
    return KSeq(ring, elem, values)


def k_counit(w: KSeq):
    """Value at the origin."""
    return w.counit()


def k_delta(w: KSeq) -> list[TensorPair]:
    """Comultiplication: pairs (x^t RA w) (x) e_t over the polyhedron.

    Satisfies w(n+i) = sum_t (x^t RA w)(i) * e_t(n) on all multi-indices.
    """
    if w.dim != 1:
        raise ValueError("comultiplication needs a scalar sequence")
    return [
        TensorPair(kshift([(t, 1)], w), k_impulse(w.elem, t)) for t in w._chain
    ]


def k_reverse_term(w: KSeq, z) -> object:
    """Value of the unique birecursive extension of w at z in Z^k.

    Each axis needs a reversible annihilator x^{d_j} q_j: the axis
    polynomial itself when reversible, otherwise its split over Z/m.
    The extension agrees with w on n >= d and is evaluated directly from
    signed x-powers modulo the q_j, so the result does not depend on any
    backsolving order.
    """
    z = tuple(z)
    if len(z) != w.k:
        raise ValueError("arity mismatch")
    ring, dim = w.ring, w.dim
    ds, qs = [], []
    for f in w.elem:
        if f.is_reversible():
            ds.append(0)
            qs.append(f)
        else:
            d, q, unit = split_x_part(f)
            if not unit:
                raise UnsupportedRingError(
                    "axis polynomial has no reversible annihilator over Z"
                )
            ds.append(d)
            qs.append(q)
    if any(q.degree == 0 for q in qs):
        return _unwrap((0,) * dim, dim)
    qdegs = tuple(q.degree for q in qs)
    chain = polyhedron_chain(qdegs)
    base = [w._vec(tuple(d + i for d, i in zip(ds, idx))) for idx in chain]
    rems = []
    for zj, dj, qj in zip(z, ds, qs):
        r = x_power_rem_signed(zj - dj, qj).coeffs
        rems.append(list(r) + [0] * (qj.degree - len(r)))
    acc = [0] * dim
    for pos, idx in enumerate(chain):
        coef = 1
        for j in range(w.k):
            coef *= rems[j][idx[j]]
            if not coef:
                break
        if coef:
            v = base[pos]
            for d in range(dim):
                acc[d] += coef * v[d]
    return _unwrap(tuple(ring.normalize(a) for a in acc), dim)
