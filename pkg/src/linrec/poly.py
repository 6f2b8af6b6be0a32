"""Univariate polynomials over a Ring, coefficients ascending by degree.

Canonical form: the zero polynomial has an empty coefficient tuple;
otherwise the last coefficient is nonzero. Division is supported only by
monic divisors, which is the case that is well defined over every
commutative ring handled here.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .ring import Ring, crt


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable[int] = ()):
        cs = [ring.normalize(int(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, ())

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls(ring, (1,))

    @classmethod
    def x(cls, ring: Ring) -> "Poly":
        return cls(ring, (0, 1))

    @classmethod
    def x_power(cls, ring: Ring, d: int) -> "Poly":
        return cls(ring, (0,) * d + (1,))

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_reversible(self) -> bool:
        """Monic with a unit constant term: solvable backwards."""
        return self.is_monic() and self.ring.is_unit(self.coeffs[0] if self.coeffs else 0)

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ring.normalize(acc * v + c)
        return acc

    def _check_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.ring)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(self.ring, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __mod__(self, f: "Poly") -> "Poly":
        return rem_by_monic(self, f)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.ring!r}, {format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, ring: Ring, obj: dict) -> "Poly":
        return cls(ring, [int(c) for c in obj["coeffs"]])


def format_poly(p: Poly, var: str = "x") -> str:
    """Render descending, e.g. x^6-5x^5+14x^4-25x^3+28x^2-15x+3."""
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            xs = var if d == 1 else f"{var}^{d}"
            body = xs if mag == 1 else f"{mag}{xs}"
        parts.append(f"{sign}{body}")
    return "".join(parts)


def divmod_by_monic(a: Poly, f: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder by a monic divisor; exact over any ring."""
    a._check_ring(f)
    if not f.is_monic():
        raise ValueError("division is only defined by a monic divisor")
    l = f.degree
    if l == 0:
        return a, Poly.zero(a.ring)
    ring = a.ring
    r = list(a.coeffs)
    if len(r) <= l:
        return Poly.zero(ring), a
    h = [0] * (len(r) - l)
    fc = f.coeffs
    for i in range(len(r) - 1, l - 1, -1):
        c = r[i]
        if c:
            h[i - l] = c
            for j in range(l):
                if fc[j]:
                    r[i - l + j] = ring.sub(r[i - l + j], c * fc[j])
            r[i] = 0
    return Poly(ring, h), Poly(ring, r[:l])


def rem_by_monic(a: Poly, f: Poly) -> Poly:
    return divmod_by_monic(a, f)[1]


def _mul_mod(a: Poly, b: Poly, f: Poly) -> Poly:
    return rem_by_monic(a * b, f)


def powmod(base: Poly, n: int, f: Poly) -> Poly:
    """base^n mod f by binary exponentiation, monic f."""
    if n < 0:
        raise ValueError("negative exponent")
    if not f.is_monic():
        raise ValueError("modulus must be monic")
    if f.degree == 0:
        return Poly.zero(f.ring)
    result = Poly.one(f.ring)
    base = rem_by_monic(base, f)
    while n:
        if n & 1:
            result = _mul_mod(result, base, f)
        n >>= 1
        if n:
            base = _mul_mod(base, base, f)
    return result


def x_power_rem(n: int, f: Poly) -> Poly:
    """x^n mod f for monic f, by square and multiply."""
    if n < 0:
        raise ValueError("negative exponent; use x_power_rem_signed")
    if not f.is_monic():
        raise ValueError("modulus must be monic")
    if f.degree == 0:
        return Poly.zero(f.ring)
    if n < f.degree:
        return Poly.x_power(f.ring, n)
    return powmod(Poly.x(f.ring), n, f)


def x_inverse_rem(q: Poly) -> Poly:
    """The inverse of x in R[x]/(q) for reversible q of degree >= 1."""
    if not q.is_reversible():
        raise ValueError("x is only invertible modulo a reversible polynomial")
    if q.degree == 0:
        return Poly.zero(q.ring)
    ring = q.ring
    na0inv = ring.neg(ring.inv_unit(q.coeffs[0]))
    return Poly(ring, [ring.mul(na0inv, c) for c in q.coeffs[1:]])


def x_power_rem_signed(z: int, q: Poly) -> Poly:
    """x^z mod q for any integer z; q must be reversible."""
    if z >= 0:
        return x_power_rem(z, q)
    return powmod(x_inverse_rem(q), -z, q)


class SplitXPart(NamedTuple):
    """A monic x^d * q in the ideal of f, with q reversible when
    cofactor_unit is true."""

    d: int
    q: Poly
    cofactor_unit: bool


def split_x_part(f: Poly) -> SplitXPart:
    """Split off the x-power obstruction of a monic f.

    Returns (d, q) with x^d * q in the ideal (f), q monic and reversible
    whenever possible. Over Z this is exact trailing-coefficient
    stripping and q may fail to be reversible (flagged, not an error).
    Over Z/m the stripped cofactor is used when its constant term is a
    unit; otherwise a reversible annihilator is assembled per prime power
    p^e of m by lifting the cofactor of f mod p and raising it to the
    e-th power, then recombining the components by CRT after padding
    with powers of (x-1) to a common degree. Degrees may inflate; no
    minimality of (d, deg q) is attempted.
    """
    if not f.is_monic():
        raise ValueError("split needs a monic polynomial")
    if f.degree < 1:
        raise ValueError("split needs degree >= 1")
    ring = f.ring
    cs = f.coeffs
    s = 0
    while cs[s] == 0:
        s += 1
    cofactor = Poly(ring, cs[s:])
    if ring.is_unit(cofactor.coeffs[0]):
        return SplitXPart(s, cofactor, True)
    if ring.modulus is None:
        return SplitXPart(s, cofactor, False)

    comps = []
    for p, e in ring.factor_modulus():
        pe = p**e
        comp_ring = Ring.mod(pe)
        fbar = [c % p for c in cs]
        d0 = 0
        while fbar[d0] == 0:
            d0 += 1
        lifted = Poly(comp_ring, fbar[d0:])
        comps.append((pe, e * d0, lifted**e))
    d = max(di for _, di, _ in comps)
    dq = max(qi.degree for _, _, qi in comps)
    padded = []
    for pe, _, qi in comps:
        pad = dq - qi.degree
        if pad:
            qi = qi * (Poly(qi.ring, (-1, 1)) ** pad)
        padded.append((pe, qi))
    qcs = []
    for j in range(dq + 1):
        qcs.append(crt([(qi.coeffs[j] if j <= qi.degree else 0, pe) for pe, qi in padded]))
    q = Poly(ring, qcs)
    if not q.is_reversible():
        raise ArithmeticError("internal: recombined cofactor is not reversible")
    return SplitXPart(d, q, True)


def reciprocal(q: Poly) -> Poly:
    """q(0)^-1 * x^deg(q) * q(1/x): the monic reciprocal of a reversible q.

    Annihilates n -> u(-n) of the reverse of anything q annihilates.
    """
    if not q.is_reversible():
        raise ValueError("reciprocal needs a reversible polynomial")
    ring = q.ring
    inv = ring.inv_unit(q.coeffs[0])
    return Poly(ring, [ring.mul(inv, c) for c in reversed(q.coeffs)])


def negate_var(f: Poly) -> Poly:
    """(-1)^deg(f) * f(-x), monic; annihilates i -> (-1)^i u(i)."""
    if not f.is_monic():
        raise ValueError("negate_var needs a monic polynomial")
    l = f.degree
    sign = 1 if l % 2 == 0 else -1
    out = []
    for i, c in enumerate(f.coeffs):
        ci = c if i % 2 == 0 else -c
        out.append(sign * ci)
    return Poly(f.ring, out)
