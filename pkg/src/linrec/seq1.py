"""Linearly recursive sequences in one variable.

A LinRecSeq is the finite data (ring, monic characteristic polynomial f,
initial vector of deg(f) values); the sequence u(0), u(1), ... is the
unique solution of the recurrence u(n+l) = -(a_0 u(n) + ... + a_{l-1}
u(n+l-1)). Values may be scalars (dim 1) or vectors over the free module
R^dim; the Hadamard and Hurwitz products and the coalgebra operations
require scalars.

A sequence is represented by one monic characteristic polynomial plus
initial values, not by its full annihilator ideal; membership in the
annihilator is exposed through `annihilates`. The degree-0 polynomial 1
with an empty initial vector represents the zero sequence (its
annihilator is everything), which keeps sums and decompositions total.
"""

from __future__ import annotations

from typing import NamedTuple

from .ring import Ring, UnsupportedRingError
from .matrix import companion, kronecker, kronecker_sum, char_poly
from .poly import Poly, split_x_part, x_power_rem, negate_var


def _as_vec(ring: Ring, v, dim: int) -> tuple[int, ...]:
    if isinstance(v, (list, tuple)):
        if len(v) != dim:
            raise ValueError(f"value has {len(v)} components, expected {dim}")
        return tuple(ring.normalize(int(c)) for c in v)
    if dim != 1:
        raise ValueError(f"scalar value given for dim {dim}")
    return (ring.normalize(int(v)),)


def _unwrap(vec: tuple[int, ...], dim: int):
    return vec[0] if dim == 1 else vec


class LinRecSeq:
    __slots__ = ("ring", "dim", "f", "init")

    def __init__(self, ring: Ring, f: Poly, init, dim: int = 1):
        if f.ring != ring:
            raise ValueError("characteristic polynomial ring mismatch")
        if not f.is_monic():
            raise ValueError("characteristic polynomial must be monic")
        if dim < 1:
            raise ValueError("dim must be >= 1")
        vecs = tuple(_as_vec(ring, v, dim) for v in init)
        if len(vecs) != f.degree:
            raise ValueError(f"need exactly {f.degree} initial values, got {len(vecs)}")
        self.ring = ring
        self.dim = dim
        self.f = f
        self.init = vecs

    @property
    def order(self) -> int:
        return self.f.degree

    # -- evaluation ---------------------------------------------------------

    def term(self, n: int):
        """u(n) by iterating the recurrence."""
        if n < 0:
            raise ValueError("negative index on an N0-indexed sequence; reverse it first")
        l = self.order
        zero = (0,) * self.dim
        if l == 0:
            return _unwrap(zero, self.dim)
        if n < l:
            return _unwrap(self.init[n], self.dim)
        ring, dim, cs = self.ring, self.dim, self.f.coeffs
        state = list(self.init)
        for _ in range(n - l + 1):
            acc = [0] * dim
            for i in range(l):
                ci = cs[i]
                if ci:
                    vi = state[i]
                    for d in range(dim):
                        acc[d] += ci * vi[d]
            state.append(tuple(ring.normalize(-a) for a in acc))
            state.pop(0)
        return _unwrap(state[-1], self.dim)

    def term_fast(self, n: int):
        """u(n) via x^n mod f: O(order^2 log n) ring operations."""
        if n < 0:
            raise ValueError("negative index on an N0-indexed sequence; reverse it first")
        l = self.order
        if l == 0:
            return _unwrap((0,) * self.dim, self.dim)
        r = x_power_rem(n, self.f).coeffs
        acc = [0] * self.dim
        for i, c in enumerate(r):
            if c:
                vi = self.init[i]
                for d in range(self.dim):
                    acc[d] += c * vi[d]
        return _unwrap(tuple(self.ring.normalize(a) for a in acc), self.dim)

    def terms(self, count: int) -> list:
        win = self._vec_window(count)
        return [_unwrap(v, self.dim) for v in win]

    def _vec_window(self, count: int) -> list[tuple[int, ...]]:
        l = self.order
        out = list(self.init[:count])
        if l == 0:
            return [(0,) * self.dim] * count
        ring, dim, cs = self.ring, self.dim, self.f.coeffs
        while len(out) < count:
            base = len(out) - l
            acc = [0] * dim
            for i in range(l):
                ci = cs[i]
                if ci:
                    vi = out[base + i]
                    for d in range(dim):
                        acc[d] += ci * vi[d]
            out.append(tuple(ring.normalize(-a) for a in acc))
        return out

    def _scalar_window(self, count: int) -> list[int]:
        if self.dim != 1:
            raise ValueError("scalar window on a vector-valued sequence")
        l = self.order
        if l == 0:
            return [0] * count
        norm = self.ring.normalize
        cs = self.f.coeffs
        out = [v[0] for v in self.init[:count]]
        while len(out) < count:
            base = len(out) - l
            s = 0
            for i in range(l):
                ci = cs[i]
                if ci:
                    s += ci * out[base + i]
            out.append(norm(-s))
        return out

    def counit(self):
        """u(0)."""
        return self.term(0)

    # -- linear structure -----------------------------------------------------

    def __add__(self, other: "LinRecSeq") -> "LinRecSeq":
        return seq_sum(self, other)

    def __neg__(self) -> "LinRecSeq":
        return LinRecSeq(
            self.ring,
            self.f,
            [tuple(self.ring.neg(c) for c in v) for v in self.init],
            self.dim,
        )

    def __sub__(self, other: "LinRecSeq") -> "LinRecSeq":
        return seq_sum(self, -other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinRecSeq)
            and self.ring == other.ring
            and self.dim == other.dim
            and self.f == other.f
            and self.init == other.init
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.dim, self.f, self.init))

    def __repr__(self) -> str:
        vals = ", ".join(str(_unwrap(v, self.dim)) for v in self.init)
        return f"LinRecSeq({self.ring!r}, f={self.f}, init=({vals}))"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "dim": self.dim,
            "charpoly": self.f.to_json(),
            "init": [[str(c) for c in v] for v in self.init],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LinRecSeq":
        ring = Ring.from_json(obj["ring"])
        f = Poly.from_json(ring, obj["charpoly"])
        dim = int(obj.get("dim", 1))
        init = []
        for v in obj["init"]:
            if isinstance(v, (list, tuple)):
                init.append([int(c) for c in v])
            else:
                init.append(int(v))
        return cls(ring, f, init, dim)


class TensorPair(NamedTuple):
    """One summand of a comultiplication: left (x) right."""

    left: "LinRecSeq"
    right: "LinRecSeq"


# -- constructors -----------------------------------------------------------


def zero_seq(ring: Ring, dim: int = 1) -> LinRecSeq:
    return LinRecSeq(ring, Poly.one(ring), [], dim)


def geometric(ring: Ring, m, r: int, dim: int = 1) -> LinRecSeq:
    """n -> r^n * m, characteristic polynomial x - r."""
    return LinRecSeq(ring, Poly(ring, (-r, 1)), [m], dim)


def arithmetic(ring: Ring, p, q, dim: int = 1) -> LinRecSeq:
    """n -> p + n*q, characteristic polynomial (x-1)^2."""
    pv = _as_vec(ring, p, dim)
    qv = _as_vec(ring, q, dim)
    second = tuple(ring.add(a, b) for a, b in zip(pv, qv))
    return LinRecSeq(ring, Poly(ring, (1, -2, 1)), [pv, second], dim)


def fibonacci(ring: Ring) -> LinRecSeq:
    return LinRecSeq(ring, Poly(ring, (-1, -1, 1)), [0, 1])


def impulse(f: Poly, t: int) -> LinRecSeq:
    """The sequence with initial vector delta_{i,t} under f."""
    l = f.degree
    if not 0 <= t < l:
        raise ValueError(f"impulse index {t} outside [0, {l})")
    return LinRecSeq(f.ring, f, [1 if i == t else 0 for i in range(l)])


# -- operations ---------------------------------------------------------------


def shift_action(g: Poly, u: LinRecSeq) -> LinRecSeq:
    """g(x) acting on u: (g RA u)(n) = sum_i g_i u(n+i); same char poly."""
    if g.ring != u.ring:
        raise ValueError("ring mismatch")
    l = u.order
    win = u._vec_window(l + max(g.degree, 0))
    ring, dim = u.ring, u.dim
    init = []
    for n in range(l):
        acc = [0] * dim
        for i, c in enumerate(g.coeffs):
            if c:
                vi = win[n + i]
                for d in range(dim):
                    acc[d] += c * vi[d]
        init.append(tuple(ring.normalize(a) for a in acc))
    return LinRecSeq(ring, u.f, init, dim)


def seq_sum(u: LinRecSeq, v: LinRecSeq) -> LinRecSeq:
    """Pointwise sum, characteristic polynomial f_u * f_v."""
    if u.ring != v.ring:
        raise ValueError("ring mismatch")
    if u.dim != v.dim:
        raise ValueError("dim mismatch")
    h = u.f * v.f
    count = h.degree
    uw = u._vec_window(count)
    vw = v._vec_window(count)
    ring = u.ring
    init = [tuple(ring.add(a, b) for a, b in zip(x, y)) for x, y in zip(uw, vw)]
    return LinRecSeq(ring, h, init, u.dim)


def _check_scalar_pair(u: LinRecSeq, v: LinRecSeq):
    if u.ring != v.ring:
        raise ValueError("ring mismatch")
    if u.dim != 1 or v.dim != 1:
        raise ValueError("products are defined for scalar (dim 1) sequences only")


def hadamard(u: LinRecSeq, v: LinRecSeq) -> LinRecSeq:
    """Termwise product; char poly chi(S_f (x) S_g) of degree m*n."""
    _check_scalar_pair(u, v)
    if u.order == 0 or v.order == 0:
        return zero_seq(u.ring)
    h = char_poly(kronecker(companion(u.f), companion(v.f)))
    count = h.degree
    uw = u._scalar_window(count)
    vw = v._scalar_window(count)
    mul = u.ring.mul
    return LinRecSeq(u.ring, h, [mul(a, b) for a, b in zip(uw, vw)])


def hurwitz(u: LinRecSeq, v: LinRecSeq) -> LinRecSeq:
    """Binomial convolution; char poly chi(S_f (x) E + E (x) S_g)."""
    _check_scalar_pair(u, v)
    if u.order == 0 or v.order == 0:
        return zero_seq(u.ring)
    h = char_poly(kronecker_sum(companion(u.f), companion(v.f)))
    count = h.degree
    uw = u._scalar_window(count)
    vw = v._scalar_window(count)
    rows = pascal_rows(u.ring, count)
    ring = u.ring
    init = []
    for n in range(count):
        row = rows[n]
        s = 0
        for t in range(n + 1):
            s += row[t] * uw[t] * vw[n - t]
        init.append(ring.normalize(s))
    return LinRecSeq(ring, h, init)


def pascal_rows(ring: Ring, count: int) -> list[list[int]]:
    """Rows 0..count-1 of Pascal's triangle computed inside the ring."""
    rows = []
    row = [ring.one]
    for n in range(count):
        rows.append(row)
        nxt = [ring.one]
        for t in range(1, n + 1):
            nxt.append(ring.add(row[t - 1], row[t]))
        nxt.append(ring.one)
        row = nxt
    return rows


def annihilates(g: Poly, u: LinRecSeq) -> bool:
    """Whether g RA u is the zero sequence.

    Decided exactly on a window of length deg(f): g RA u is again
    annihilated by the monic f, hence determined by its first deg(f)
    values.
    """
    if g.ring != u.ring:
        raise ValueError("ring mismatch")
    l = u.order
    if l == 0 or g.is_zero():
        return True
    win = u._vec_window(l + g.degree)
    dim = u.dim
    for n in range(l):
        acc = [0] * dim
        for i, c in enumerate(g.coeffs):
            if c:
                vi = win[n + i]
                for d in range(dim):
                    acc[d] += c * vi[d]
        if any(u.ring.normalize(a) != 0 for a in acc):
            return False
    return True


def is_degenerating(u: LinRecSeq) -> tuple[bool, int | None]:
    """Whether some power of x kills u (u is eventually zero).

    Returns (True, d) with the least d such that u(n) = 0 for all n >= d,
    or (False, None). Over Z the test strips f = x^s q exactly and checks
    the window [s, s + deg q): a zero tail back-propagates through q in
    the fraction field. Over Z/m it uses the reversible annihilator
    x^D Q from split_x_part and checks the window [D, D + deg Q).
    """
    ring = u.ring
    l = u.order
    zero = (0,) * u.dim
    if l == 0:
        return True, 0
    if ring.modulus is None:
        cs = u.f.coeffs
        s = 0
        while cs[s] == 0:
            s += 1
        lq = l - s
        win = u._vec_window(s + lq)
        start = s
    else:
        d0, q, _ = split_x_part(u.f)
        lq = q.degree
        win = u._vec_window(d0 + lq)
        start = d0
    if any(v != zero for v in win[start:]):
        return False, None
    d = start
    while d > 0 and win[d - 1] == zero:
        d -= 1
    return True, d


def period(u: LinRecSeq) -> tuple[int, int]:
    """Minimal preperiod d and period t of the state orbit over Z/m.

    Certifies x^d (x^t - 1) RA u = 0. Hash-based cycle detection on the
    order-l state tuple; memory O(d + t).
    """
    if u.ring.modulus is None:
        raise UnsupportedRingError("period needs a finite ring Z/m")
    l = u.order
    if l == 0:
        return 0, 1
    ring, dim, cs = u.ring, u.dim, u.f.coeffs
    state = list(u.init)
    seen: dict[tuple, int] = {}
    n = 0
    while True:
        key = tuple(state)
        if key in seen:
            return seen[key], n - seen[key]
        seen[key] = n
        acc = [0] * dim
        for i in range(l):
            ci = cs[i]
            if ci:
                vi = state[i]
                for d in range(dim):
                    acc[d] += ci * vi[d]
        state.append(tuple(ring.normalize(-a) for a in acc))
        state.pop(0)
        n += 1


def delta(u: LinRecSeq) -> list[TensorPair]:
    """Comultiplication: the l pairs (x^t RA u) (x) e_t.

    Satisfies the splitting identity
    u(n+i) = sum_t (x^t RA u)(i) * e_t(n).
    """
    if u.dim != 1:
        raise ValueError("comultiplication needs a scalar sequence")
    l = u.order
    return [
        TensorPair(shift_action(Poly.x_power(u.ring, t), u), impulse(u.f, t))
        for t in range(l)
    ]


def antipode_hurwitz(u: LinRecSeq) -> LinRecSeq:
    """The Hurwitz-side antipode: i -> (-1)^i u(i)."""
    if u.dim != 1:
        raise ValueError("antipode needs a scalar sequence")
    l = u.order
    ring = u.ring
    win = u._scalar_window(l)
    init = [win[i] if i % 2 == 0 else ring.neg(win[i]) for i in range(l)]
    return LinRecSeq(ring, negate_var(u.f), init)
