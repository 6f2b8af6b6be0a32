"""Bisequences, reversal and the degenerating (+) reversible decomposition.

A BiRecSeq is indexed by all of Z: a reversible monic q and deg(q)
values at 0..deg(q)-1 determine it uniquely, forward by the recurrence
and backward by solving the recurrence for its lowest-order term
(possible exactly because q(0) is a unit). Negative terms are computed
on demand and memoized; the lock keeps the caches consistent when a
value is shared between threads, so observable behavior is that of a
pure function.

Over an artinian ground ring Z/m every linearly recursive sequence
splits as (eventually zero) + (restriction of a bisequence); `gamma`,
`beta` and `decompose` make that split executable. The degenerating part
is certified by is_degenerating rather than trusted from the
construction.
"""

from __future__ import annotations

import threading
from typing import NamedTuple

from .ring import Ring, UnsupportedRingError
from .poly import Poly, reciprocal, split_x_part
from .matrix import companion, kronecker, char_poly
from .seq1 import LinRecSeq, _as_vec, _unwrap, is_degenerating, seq_sum


class BiRecSeq:
    __slots__ = ("ring", "dim", "q", "init", "_lock", "_fwd", "_bwd", "_na0inv")

    def __init__(self, ring: Ring, q: Poly, init, dim: int = 1):
        if q.ring != ring:
            raise ValueError("characteristic polynomial ring mismatch")
        if not q.is_reversible():
            raise ValueError("a bisequence needs a reversible characteristic polynomial")
        if dim < 1:
            raise ValueError("dim must be >= 1")
        vecs = tuple(_as_vec(ring, v, dim) for v in init)
        if len(vecs) != q.degree:
            raise ValueError(f"need exactly {q.degree} initial values, got {len(vecs)}")
        self.ring = ring
        self.dim = dim
        self.q = q
        self.init = vecs
        self._lock = threading.Lock()
        self._fwd = list(vecs)
        self._bwd: list[tuple[int, ...]] = []  # _bwd[j] holds the value at z = -1-j
        self._na0inv = ring.neg(ring.inv_unit(q.coeffs[0])) if q.degree > 0 else 0

    @property
    def order(self) -> int:
        return self.q.degree

    def _vec(self, z: int) -> tuple[int, ...]:
        l = self.order
        if l == 0:
            return (0,) * self.dim
        if z >= 0:
            if z >= len(self._fwd):
                with self._lock:
                    self._extend_fwd(z)
            return self._fwd[z]
        j = -1 - z
        if j >= len(self._bwd):
            with self._lock:
                self._extend_bwd(j)
        return self._bwd[j]

    def _extend_fwd(self, z: int):
        ring, dim, cs, l = self.ring, self.dim, self.q.coeffs, self.order
        fwd = self._fwd
        while len(fwd) <= z:
            base = len(fwd) - l
            acc = [0] * dim
            for i in range(l):
                ci = cs[i]
                if ci:
                    vi = fwd[base + i]
                    for d in range(dim):
                        acc[d] += ci * vi[d]
            fwd.append(tuple(ring.normalize(-a) for a in acc))

    def _extend_bwd(self, j: int):
        ring, dim, cs, l = self.ring, self.dim, self.q.coeffs, self.order
        na0inv = self._na0inv
        bwd = self._bwd
        while len(bwd) <= j:
            z = -1 - len(bwd)
            # value at z from a_1 u(z+1) + ... + a_{l-1} u(z+l-1) + u(z+l)
            acc = list(self._at_nolock(z + l))
            for i in range(1, l):
                ci = cs[i]
                if ci:
                    vi = self._at_nolock(z + i)
                    for d in range(dim):
                        acc[d] += ci * vi[d]
            bwd.append(tuple(ring.normalize(na0inv * a) for a in acc))

    def _at_nolock(self, z: int) -> tuple[int, ...]:
        return self._fwd[z] if z >= 0 else self._bwd[-1 - z]

    def term(self, z: int):
        """Value at any integer index."""
        return _unwrap(self._vec(z), self.dim)

    def terms(self, z0: int, z1: int) -> list:
        """Values at z0..z1 inclusive."""
        return [self.term(z) for z in range(z0, z1 + 1)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiRecSeq)
            and self.ring == other.ring
            and self.dim == other.dim
            and self.q == other.q
            and self.init == other.init
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.dim, self.q, self.init))

    def __repr__(self) -> str:
        vals = ", ".join(str(_unwrap(v, self.dim)) for v in self.init)
        return f"BiRecSeq({self.ring!r}, q={self.q}, init=({vals}))"

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "dim": self.dim,
            "indexing": "Z",
            "charpoly": self.q.to_json(),
            "init": [[str(c) for c in v] for v in self.init],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BiRecSeq":
        if obj.get("indexing") != "Z":
            raise ValueError('bisequence descriptors carry "indexing": "Z"')
        ring = Ring.from_json(obj["ring"])
        q = Poly.from_json(ring, obj["charpoly"])
        dim = int(obj.get("dim", 1))
        init = []
        for v in obj["init"]:
            if isinstance(v, (list, tuple)):
                init.append([int(c) for c in v])
            else:
                init.append(int(v))
        return cls(ring, q, init, dim)


class Decomposition(NamedTuple):
    degenerating: LinRecSeq
    reversible: LinRecSeq


def reverse(u: LinRecSeq) -> BiRecSeq:
    """The unique bisequence extension of u, for reversible char poly."""
    if not u.f.is_reversible():
        raise ValueError(
            "characteristic polynomial is not reversible; use gamma or decompose"
        )
    return BiRecSeq(u.ring, u.f, u.init, u.dim)


def _backsolve_prepend(ring, q, window, steps, dim):
    """Extend values at base..base+l-1 down to base-steps by backsolving."""
    l = q.degree
    cs = q.coeffs
    na0inv = ring.neg(ring.inv_unit(cs[0]))
    vals = list(window)
    for _ in range(steps):
        acc = list(vals[l - 1])  # the u(z+l) term, coefficient 1
        for i in range(1, l):
            ci = cs[i]
            if ci:
                vi = vals[i - 1]
                for d in range(dim):
                    acc[d] += ci * vi[d]
        vals.insert(0, tuple(ring.normalize(na0inv * a) for a in acc))
    return vals


def gamma(u: LinRecSeq) -> BiRecSeq:
    """The reversible shadow of u: the unique bisequence w with
    q RA w = 0 and w(n) = u(n) for all n >= d, where x^d q comes from
    split_x_part of the characteristic polynomial."""
    d, q, unit = split_x_part(u.f)
    if not unit:
        raise UnsupportedRingError(
            "no reversible annihilator over Z: constant cofactor is not a unit"
        )
    lq = q.degree
    if lq == 0:
        return BiRecSeq(u.ring, Poly.one(u.ring), [], u.dim)
    window = u._vec_window(d + lq)[d:]
    vals = _backsolve_prepend(u.ring, q, window, d, u.dim)
    return BiRecSeq(u.ring, q, vals[:lq], u.dim)


def beta(w: BiRecSeq) -> LinRecSeq:
    """Restriction of a bisequence to nonnegative indices."""
    return LinRecSeq(w.ring, w.q, [w._vec(i) for i in range(w.order)], w.dim)


def decompose(u: LinRecSeq) -> Decomposition:
    """Split u = degenerating + reversible over an artinian Z/m.

    The reversible part is beta(gamma(u)); the difference is certified
    eventually zero by is_degenerating and re-represented with
    characteristic polynomial x^d for the certified least d.
    """
    if u.ring.modulus is None:
        raise UnsupportedRingError("decompose needs an artinian ring Z/m")
    rev = beta(gamma(u))
    diff = seq_sum(u, -rev)
    ok, d = is_degenerating(diff)
    if not ok:
        raise ArithmeticError("internal: u minus its reversible part is not degenerating")
    deg_part = LinRecSeq(u.ring, Poly.x_power(u.ring, d), diff._vec_window(d), u.dim)
    return Decomposition(deg_part, rev)


def antipode_hadamard(u: LinRecSeq) -> LinRecSeq:
    """The Hadamard-side antipode: n -> Rev(u)(-n), for reversible u."""
    if u.dim != 1:
        raise ValueError("antipode needs a scalar sequence")
    w = reverse(u)
    l = u.order
    return LinRecSeq(u.ring, reciprocal(u.f), [w._vec(-i) for i in range(l)])


def bi_hadamard(w1: BiRecSeq, w2: BiRecSeq) -> BiRecSeq:
    """Termwise product of bisequences on all of Z."""
    if w1.ring != w2.ring:
        raise ValueError("ring mismatch")
    if w1.dim != 1 or w2.dim != 1:
        raise ValueError("products are defined for scalar (dim 1) bisequences only")
    if w1.order == 0 or w2.order == 0:
        return BiRecSeq(w1.ring, Poly.one(w1.ring), [])
    h = char_poly(kronecker(companion(w1.q), companion(w2.q)))
    if not h.is_reversible():
        raise ArithmeticError("internal: product of reversible polynomials lost reversibility")
    mul = w1.ring.mul
    init = [mul(w1._vec(i)[0], w2._vec(i)[0]) for i in range(h.degree)]
    return BiRecSeq(w1.ring, h, init)
