"""Ground rings: arbitrary-precision integers and Z/m.

Ring values are plain Python ints kept in canonical form: any int for Z,
a representative in [0, m) for Z/m. A Ring carries the reduction, unit
and factorization logic; RingElem tags a value with its ring for code
that wants checked, self-describing elements. The heavy machinery in the
rest of the package works on raw canonical ints for speed.
"""

from __future__ import annotations

import math


class UnsupportedRingError(ValueError):
    """The operation needs a capability this ring does not have."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n."""
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to factor {n}")


def factor_int(n: int) -> list[tuple[int, int]]:
    """Prime-power factorization of n >= 2, primes ascending."""
    if n < 2:
        raise ValueError("nothing to factor below 2")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # wheel over 6k +- 1 up to a desk-scale bound, rho beyond that
    f = 7
    step = 4
    while f * f <= n and f < 1 << 20:
        if n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        else:
            f += step
            step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors.items())


def crt(residues: list[tuple[int, int]]) -> int:
    """Combine (value mod modulus) pairs with pairwise coprime moduli."""
    x, m = 0, 1
    for v, mod in residues:
        t = (v - x) * pow(m, -1, mod) % mod
        x += m * t
        m *= mod
    return x % m


class Ring:
    """The ground ring: Z when modulus is None, otherwise Z/modulus."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None):
        if modulus is not None:
            modulus = int(modulus)
            if modulus < 2:
                raise ValueError("modulus must be at least 2")
        self.modulus = modulus

    @classmethod
    def integers(cls) -> "Ring":
        return cls(None)

    @classmethod
    def mod(cls, m: int) -> "Ring":
        return cls(m)

    # -- raw canonical-int arithmetic ------------------------------------

    def normalize(self, v: int) -> int:
        return v if self.modulus is None else v % self.modulus

    def add(self, a: int, b: int) -> int:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return a - b if self.modulus is None else (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b if self.modulus is None else (a * b) % self.modulus

    def neg(self, a: int) -> int:
        return -a if self.modulus is None else (-a) % self.modulus

    def is_unit(self, a: int) -> bool:
        if self.modulus is None:
            return a in (1, -1)
        return math.gcd(a % self.modulus, self.modulus) == 1

    def inv_unit(self, a: int) -> int:
        if self.modulus is None:
            if a in (1, -1):
                return a
            raise ValueError(f"{a} is not a unit in Z")
        try:
            return pow(a % self.modulus, -1, self.modulus)
        except ValueError:
            raise ValueError(f"{a} is not a unit in Z/{self.modulus}") from None

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def factor_modulus(self) -> list[tuple[int, int]]:
        """Prime-power factorization of the modulus, primes ascending."""
        if self.modulus is None:
            raise UnsupportedRingError("factor_modulus needs a finite ring Z/m")
        return factor_int(self.modulus)

    # -- elements and serialization --------------------------------------

    def __call__(self, v: int) -> "RingElem":
        return RingElem(v, self)

    def elem(self, v: int) -> "RingElem":
        return RingElem(v, self)

    def to_json(self) -> dict:
        if self.modulus is None:
            return {"kind": "int"}
        return {"kind": "mod", "modulus": str(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> "Ring":
        kind = obj.get("kind")
        if kind == "int":
            return cls.integers()
        if kind == "mod":
            return cls.mod(int(obj["modulus"]))
        raise ValueError(f"unknown ring kind {kind!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("Ring", self.modulus))

    def __repr__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


class RingElem:
    """A canonical ring value tagged with its ring.

    Mixing elements of distinct rings raises ValueError. Plain ints on
    either side of an operator are lifted into the element's ring.
    """

    __slots__ = ("value", "ring")

    def __init__(self, value: int, ring: Ring):
        self.value = ring.normalize(int(value))
        self.ring = ring

    def _coerce(self, other) -> int:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other.value
        if isinstance(other, int):
            return self.ring.normalize(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring.add(self.value, v), self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring.sub(self.value, v), self.ring)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring.sub(v, self.value), self.ring)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElem(self.ring.mul(self.value, v), self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring.neg(self.value), self.ring)

    def __pow__(self, n: int):
        if n < 0:
            base = self.inv_unit()
            n = -n
        else:
            base = self
        m = self.ring.modulus
        if m is None:
            return RingElem(base.value ** n, self.ring)
        return RingElem(pow(base.value, n, m), self.ring)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inv_unit(self) -> "RingElem":
        return RingElem(self.ring.inv_unit(self.value), self.ring)

    def __int__(self) -> int:
        return self.value

    __index__ = __int__

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.normalize(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.ring.modulus))

    def __repr__(self) -> str:
        if self.ring.modulus is None:
            return f"{self.value}"
        return f"{self.value} (mod {self.ring.modulus})"
