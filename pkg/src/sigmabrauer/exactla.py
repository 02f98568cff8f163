"""Exact dense linear algebra over the rationals.

Everything in this package reduces to rank/kernel computations over Q.
The elimination workhorse is fraction-free (Bareiss-style) on integer
rows, which keeps intermediate entries as minors of the original matrix
instead of letting denominators compound.  A plain rational row
reduction (`rref`) is kept alongside it; kernels are read off the
reduced form so that coordinates of a kernel vector can be recovered by
looking at its entries in the free columns.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _to_fraction_rows(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


class RatMat:
    """Immutable matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        data = _to_fraction_rows(data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows) -> "RatMat":
        rows = _to_fraction_rows(rows)
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(n, m, rows)

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls(n, n, [[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMat":
        zero = Fraction(0)
        return cls(rows, cols, [[zero] * cols for _ in range(rows)])

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, RatMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"RatMat({self.rows}x{self.cols})"

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "RatMat":
        return RatMat(self.cols, self.rows, list(zip(*self.data)) if self.data else [])

    def __add__(self, other: "RatMat") -> "RatMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return RatMat(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "RatMat") -> "RatMat":
        return self + other.scale(-1)

    def scale(self, c) -> "RatMat":
        c = Fraction(c)
        return RatMat(self.rows, self.cols, [[c * x for x in row] for row in self.data])

    def matvec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.data
        )

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in multiplication")
        bt = other.transpose().data
        return RatMat(
            self.rows,
            other.cols,
            [
                [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in bt]
                for row in self.data
            ],
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def kron(self, other: "RatMat") -> "RatMat":
        """Kronecker product; `self` indexes the major blocks."""
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                out.append(
                    [
                        self.data[i][j] * other.data[k][l]
                        for j in range(self.cols)
                        for l in range(other.cols)
                    ]
                )
        return RatMat(self.rows * other.rows, self.cols * other.cols, out)


def vstack(ms: list[RatMat]) -> RatMat:
    if not ms:
        raise ValueError("cannot stack an empty list without a column count")
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise ValueError("column counts differ in vertical stack")
    data = [row for m in ms for row in m.data]
    return RatMat(len(data), cols, data)


def _integer_rows(m: RatMat) -> list[list[int]]:
    """Clear denominators row by row (rank and kernel are unaffected)."""
    out = []
    for row in m.data:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        out.append([int(x * lcm) for x in row])
    return out


def rank(m: RatMat) -> int:
    """Rank over Q via fraction-free Bareiss elimination."""
    a = _integer_rows(m)
    nr, nc = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        piv = None
        for i in range(r, nr):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[piv], a[r] = a[r], a[piv]
        arc = a[r][c]
        arow = a[r]
        for i in range(r + 1, nr):
            aic = a[i][c]
            ai = a[i]
            for k in range(c + 1, nc):
                ai[k] = (arc * ai[k] - aic * arow[k]) // prev
            ai[c] = 0
        prev = arc
        r += 1
    return r


def rref(m: RatMat) -> tuple[list[list[Fraction]], list[int]]:
    """Naive rational reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(row) for row in m.data]
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = None
        for i in range(r, nr):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[piv], a[r] = a[r], a[piv]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel_basis_with_free(m: RatMat) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Basis of the right null space, plus the free columns.

    Each basis vector carries the standard RREF structure: it equals 1 in
    its own free column and 0 in every other free column, so the
    coordinates of any vector in the kernel with respect to this basis
    are literally its entries at the free columns.
    """
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis, free


def kernel_basis(m: RatMat) -> list[tuple[Fraction, ...]]:
    return kernel_basis_with_free(m)[0]


def intersect_kernels(ms: list[RatMat], cols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the intersection of the kernels of the given matrices.

    For an empty list `cols` is required and the whole space comes back.
    """
    if not ms:
        if cols is None:
            raise ValueError("empty matrix list requires an explicit column count")
        return kernel_basis(RatMat.zeros(1, cols))
    if cols is not None and ms[0].cols != cols:
        raise ValueError("declared column count disagrees with the matrices")
    if any(m.cols != ms[0].cols for m in ms):
        raise ValueError("matrices must share their column count")
    return kernel_basis(vstack(ms))


def solve(m: RatMat, rhs) -> tuple[Fraction, ...] | None:
    """One exact solution of m x = rhs, or None when inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = RatMat(
        m.rows,
        m.cols + 1,
        [list(row) + [Fraction(v)] for row, v in zip(m.data, rhs)],
    )
    rows, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][m.cols]
    return tuple(x)


def inverse(m: RatMat) -> RatMat:
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    aug = RatMat(
        n, 2 * n, [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.data)]
    )
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return RatMat(n, n, [row[n:] for row in rows])
