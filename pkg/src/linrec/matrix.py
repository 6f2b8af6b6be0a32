"""Dense matrices over a Ring: companion matrices, Kronecker product and
sum, and a division-free characteristic polynomial.

Characteristic polynomials use Berkowitz's algorithm, which is valid over
every commutative ring (Z/m has zero divisors, so fraction-based
elimination would be unsound). O(n^4) is fine at the sizes produced by
sequence products.
"""

from __future__ import annotations

from typing import Iterable

from .ring import Ring
from .poly import Poly


class Matrix:
    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring: Ring, data: Iterable[Iterable[int]]):
        rows = tuple(tuple(ring.normalize(int(v)) for v in row) for row in data)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged rows")
        else:
            w = 0
        self.ring = ring
        self.rows = len(rows)
        self.cols = w if rows else 0
        self.data = rows

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        if n < 0:
            raise ValueError("negative size")
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, [[0] * cols for _ in range(rows)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            self.ring,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.ring, [[c * v for v in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        norm = self.ring.normalize
        bt = list(zip(*other.data)) if other.data else []
        out = []
        for row in self.data:
            out.append([norm(sum(a * b for a, b in zip(row, col))) for col in bt])
        return Matrix(self.ring, out)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("powers need a square matrix")
        if n < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.ring, self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _check_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.data))

    def __repr__(self) -> str:
        return f"Matrix({self.ring!r}, {self.rows}x{self.cols})"

    def __str__(self) -> str:
        if not self.data:
            return "[]"
        cells = [[str(v) for v in row] for row in self.data]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for row in cells:
            lines.append("[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]")
        return "\n".join(lines)


def companion(f: Poly) -> Matrix:
    """Companion matrix of a monic f: subdiagonal ones, last column -a_i."""
    if not f.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    l = f.degree
    if l < 1:
        raise ValueError("companion matrix needs degree >= 1")
    ring = f.ring
    data = [[0] * l for _ in range(l)]
    for i in range(1, l):
        data[i][i - 1] = 1
    for i in range(l):
        data[i][l - 1] = ring.neg(f.coeffs[i])
    return Matrix(ring, data)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker (tensor) product: the block matrix [a_ij * B]."""
    a._check_ring(b)
    ring = a.ring
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.data[i][j]
                row.extend(ring.mul(aij, v) for v in b.data[k])
            out.append(row)
    return Matrix(ring, out)


def kronecker_sum(a: Matrix, b: Matrix) -> Matrix:
    """A (x) E_n + E_m (x) B for square A (m x m) and B (n x n)."""
    if a.rows != a.cols or b.rows != b.cols:
        raise ValueError("kronecker_sum needs square matrices")
    a._check_ring(b)
    em = Matrix.identity(a.ring, a.rows)
    en = Matrix.identity(b.ring, b.rows)
    return kronecker(a, en) + kronecker(em, b)


def char_poly(m: Matrix) -> Poly:
    """Characteristic polynomial det(xE - M) via Berkowitz, monic."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    ring = m.ring
    n = m.rows
    norm = ring.normalize
    data = [list(row) for row in m.data]
    c = [1]  # descending coefficients for the trailing 0x0 submatrix
    for k in range(1, n + 1):
        top = n - k
        a = data[top][top]
        t = [1, norm(-a)]
        if k > 1:
            r = data[top][top + 1 :]
            sub = [data[i][top + 1 :] for i in range(top + 1, n)]
            w = [data[i][top] for i in range(top + 1, n)]
            size = k - 1
            for j in range(2, k + 1):
                s = 0
                for idx in range(size):
                    s += r[idx] * w[idx]
                t.append(norm(-s))
                if j < k:
                    w = [norm(sum(row[i2] * w[i2] for i2 in range(size))) for row in sub]
        cn = [0] * (k + 1)
        for j, cj in enumerate(c):
            if cj:
                lim = k - j
                for i2 in range(min(len(t), lim + 1)):
                    tv = t[i2]
                    if tv:
                        cn[i2 + j] += tv * cj
        c = [norm(v) for v in cn]
    return Poly(ring, reversed(c))


def poly_at(f: Poly, m: Matrix) -> Matrix:
    """Evaluate f at a square matrix (Horner)."""
    if m.rows != m.cols:
        raise ValueError("polynomial evaluation needs a square matrix")
    if f.ring != m.ring:
        raise ValueError("ring mismatch")
    e = Matrix.identity(m.ring, m.rows)
    acc = Matrix.zeros(m.ring, m.rows, m.cols)
    for c in reversed(f.coeffs):
        acc = acc * m + e.scale(c)
    return acc
