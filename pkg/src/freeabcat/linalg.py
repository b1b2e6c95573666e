"""Exact linear algebra over Z and Z/n.

Everything here is integer arithmetic on Python ints; there is no floating
point anywhere.  Maps use the column convention: a homomorphism
ring^c -> ring^r is an r x c matrix acting on column vectors, and
composition is matrix multiplication.

Smith normal form is computed over Z with a deterministic pivot rule
(smallest nonzero absolute value, ties broken by row-major position) and
returns a full certificate P*M*Q = S with unimodular P, Q.  Matrices over
Z/n take a single code path: lift the canonical representatives to Z,
adjoin n*I where a kernel or solve needs it, and reduce the result mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import DimensionMismatch, RingMismatch


@dataclass(frozen=True)
class RingSpec:
    """Base ring: Z when modulus is None, otherwise Z/modulus (modulus >= 2)."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def is_modular(self) -> bool:
        return self.modulus is not None

    def normalize(self, value: int) -> int:
        if self.modulus is None:
            return value
        return value % self.modulus

    def is_unit(self, value: int) -> bool:
        if self.modulus is None:
            return value in (1, -1)
        return gcd(value, self.modulus) == 1

    def divides(self, a: int, b: int) -> bool:
        """True when b is a ring multiple of a."""
        if self.modulus is None:
            return b == 0 if a == 0 else b % a == 0
        g = gcd(a, self.modulus)
        return b % g == 0

    def __str__(self):
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


ZZ = RingSpec()


def Zmod(n: int) -> RingSpec:
    return RingSpec(n)


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatch(f"mixed rings {a.ring} and {b.ring}")


@dataclass(frozen=True)
class Matrix:
    """Immutable exact matrix; entries are stored row-major and, over Z/n,
    normalized to canonical representatives in [0, n)."""

    ring: RingSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        if self.ring.is_modular:
            n = self.ring.modulus
            if any(e < 0 or e >= n for e in self.entries):
                object.__setattr__(
                    self, "entries", tuple(e % n for e in self.entries)
                )

    # -- construction ------------------------------------------------

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: list[list[int]], *, cols: int | None = None) -> "Matrix":
        """Build from a list of rows; `cols` disambiguates the empty case."""
        r = len(rows)
        if r == 0:
            return cls(ring, 0, 0 if cols is None else cols, ())
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise DimensionMismatch("ragged rows")
        if cols is not None and cols != c:
            raise DimensionMismatch(f"declared cols {cols} but rows have {c}")
        return cls(ring, r, c, tuple(v for row in rows for v in row))

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "Matrix":
        ent = [0] * (n * n)
        for i in range(n):
            ent[i * n + i] = 1
        return cls(ring, n, n, tuple(ent))

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, ring: RingSpec, diag: list[int], rows: int | None = None, cols: int | None = None) -> "Matrix":
        r = len(diag) if rows is None else rows
        c = len(diag) if cols is None else cols
        ent = [0] * (r * c)
        for i, d in enumerate(diag):
            ent[i * c + i] = d
        return cls(ring, r, c, tuple(ent))

    # -- access ------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col_list(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> "Matrix":
        return Matrix(self.ring, self.rows, 1, tuple(self.col_list(j)))

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        ent = []
        for i in range(r0, r1):
            ent.extend(self.entries[i * self.cols + c0:i * self.cols + c1])
        return Matrix(self.ring, r1 - r0, c1 - c0, tuple(ent))

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    @property
    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.ring, self.rows)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_ring(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        norm = self.ring.normalize
        return Matrix(self.ring, self.rows, self.cols,
                      tuple(norm(a + b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        norm = self.ring.normalize
        return Matrix(self.ring, self.rows, self.cols,
                      tuple(norm(-a) for a in self.entries))

    def scale(self, k: int) -> "Matrix":
        norm = self.ring.normalize
        return Matrix(self.ring, self.rows, self.cols,
                      tuple(norm(k * a) for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check_same_ring(self, other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        a, b = self.to_rows(), other.to_rows()
        norm = self.ring.normalize
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                s = 0
                for k in range(self.cols):
                    s += ai[k] * b[k][j]
                out.append(norm(s))
        return Matrix(self.ring, self.rows, other.cols, tuple(out))

    def transpose(self) -> "Matrix":
        ent = []
        for j in range(self.cols):
            for i in range(self.rows):
                ent.append(self.entries[i * self.cols + j])
        return Matrix(self.ring, self.cols, self.rows, tuple(ent))

    def lift(self) -> "Matrix":
        """The same entries viewed over Z (canonical representatives)."""
        return Matrix(ZZ, self.rows, self.cols, self.entries)

    def reduce(self, ring: RingSpec) -> "Matrix":
        return Matrix(ring, self.rows, self.cols, self.entries)

    def __repr__(self):
        return f"Matrix({self.ring}, {self.rows}x{self.cols}, {self.to_rows()})"


# -- stacking and products ----------------------------------------------


def hstack(*mats: Matrix) -> Matrix:
    if not mats:
        raise DimensionMismatch("hstack of nothing")
    ring, rows = mats[0].ring, mats[0].rows
    for m in mats[1:]:
        if m.ring != ring:
            raise RingMismatch("hstack over mixed rings")
        if m.rows != rows:
            raise DimensionMismatch("hstack with differing row counts")
    ent = []
    for i in range(rows):
        for m in mats:
            ent.extend(m.entries[i * m.cols:(i + 1) * m.cols])
    return Matrix(ring, rows, sum(m.cols for m in mats), tuple(ent))


def vstack(*mats: Matrix) -> Matrix:
    if not mats:
        raise DimensionMismatch("vstack of nothing")
    ring, cols = mats[0].ring, mats[0].cols
    ent = []
    for m in mats:
        if m.ring != ring:
            raise RingMismatch("vstack over mixed rings")
        if m.cols != cols:
            raise DimensionMismatch("vstack with differing column counts")
        ent.extend(m.entries)
    return Matrix(ring, sum(m.rows for m in mats), cols, tuple(ent))


def block(rows_of_blocks: list[list[Matrix]]) -> Matrix:
    return vstack(*[hstack(*row) for row in rows_of_blocks])


def block_diagonal(*mats: Matrix) -> Matrix:
    ring = mats[0].ring
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Matrix.zeros(ring, rows, cols).to_rows()
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out[r0 + i][c0:c0 + m.cols] = m.row_list(i)
        r0 += m.rows
        c0 += m.cols
    return Matrix.from_rows(ring, out, cols=cols)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) equals a[i,j] * b."""
    _check_same_ring(a, b)
    norm = a.ring.normalize
    rows, cols = a.rows * b.rows, a.cols * b.cols
    ent = [0] * (rows * cols)
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            v = a.entry(i1, j1)
            if v == 0:
                continue
            for i2 in range(b.rows):
                base = (i1 * b.rows + i2) * cols + j1 * b.cols
                for j2 in range(b.cols):
                    ent[base + j2] = norm(v * b.entry(i2, j2))
    return Matrix(a.ring, rows, cols, tuple(ent))


def vec_row(m: Matrix) -> Matrix:
    """Row-major vectorization as a column vector.

    The two identities used throughout the package:
        vec_row(A @ X) = kron(A, I_q) @ vec_row(X)   for X with q columns,
        vec_row(X @ B) = kron(I_p, B^T) @ vec_row(X) for X with p rows.
    """
    return Matrix(m.ring, m.rows * m.cols, 1, m.entries)


def unvec_row(v: Matrix, rows: int, cols: int) -> Matrix:
    if v.cols != 1 or v.rows != rows * cols:
        raise DimensionMismatch("unvec_row shape mismatch")
    return Matrix(v.ring, rows, cols, v.entries)


# -- Smith normal form ---------------------------------------------------


@dataclass(frozen=True)
class SnfResult:
    """Certified Smith normal form: P @ M @ Q == S, P and Q unimodular,
    diagonal of S nonnegative (over Z) and a divisibility chain."""

    S: Matrix
    P: Matrix
    Q: Matrix

    def diagonal(self) -> list[int]:
        k = min(self.S.rows, self.S.cols)
        return [self.S.entry(i, i) for i in range(k)]


def _row_sub(a: list[list[int]], i: int, t: int, q: int):
    if q:
        ai, at = a[i], a[t]
        for j in range(len(ai)):
            ai[j] -= q * at[j]


def _col_sub(a: list[list[int]], j: int, t: int, q: int):
    if q:
        for row in a:
            row[j] -= q * row[t]


def _snf_int(m: Matrix) -> SnfResult:
    r, c = m.rows, m.cols
    a = m.to_rows()
    p = Matrix.identity(ZZ, r).to_rows()
    q = Matrix.identity(ZZ, c).to_rows()

    t = 0
    while t < min(r, c):
        # deterministic pivot: least |value|, then row-major position
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                v = a[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            p[t], p[pi] = p[pi], p[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in q:
                row[t], row[pj] = row[pj], row[t]
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            p[t] = [-v for v in p[t]]

        piv = a[t][t]
        dirty = False
        for i in range(t + 1, r):
            if a[i][t]:
                quo = a[i][t] // piv
                _row_sub(a, i, t, quo)
                _row_sub(p, i, t, quo)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if a[t][j]:
                quo = a[t][j] // piv
                _col_sub(a, j, t, quo)
                _col_sub(q, j, t, quo)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue  # a smaller pivot appeared; reselect

        # pivot must divide the whole trailing block for the chain
        bad = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if a[i][j] % piv:
                    bad = j
                    break
            if bad is not None:
                break
        if bad is not None:
            for row in a:
                row[t] += row[bad]
            for row in q:
                row[t] += row[bad]
            continue
        t += 1

    return SnfResult(
        Matrix.from_rows(ZZ, a, cols=c),
        Matrix.from_rows(ZZ, p, cols=r),
        Matrix.from_rows(ZZ, q, cols=c),
    )


def snf(m: Matrix) -> SnfResult:
    """Smith normal form with certificate, over the matrix's own ring.

    Over Z/n the canonical lift is put in integer Smith form and the
    certificate is reduced mod n; integer divisibility and det = +-1
    survive the reduction, so all invariants hold in the quotient ring.
    """
    if not m.ring.is_modular:
        return _snf_int(m)
    res = _snf_int(m.lift())
    return SnfResult(res.S.reduce(m.ring), res.P.reduce(m.ring), res.Q.reduce(m.ring))


# -- solving and kernels -------------------------------------------------


def _solve_int(a: Matrix, b: Matrix) -> Matrix | None:
    res = _snf_int(a)
    c = (res.P @ b).col_list(0)
    k = min(a.rows, a.cols)
    y = [0] * a.cols
    for i in range(a.rows):
        d = res.S.entry(i, i) if i < k else 0
        if d == 0:
            if c[i]:
                return None
        else:
            quo, rem = divmod(c[i], d)
            if rem:
                return None
            if i < a.cols:
                y[i] = quo
    return res.Q @ Matrix(ZZ, a.cols, 1, tuple(y))


def solve_linear(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution x of a @ x = b, or None when the system is unsolvable."""
    _check_same_ring(a, b)
    if b.cols != 1 or b.rows != a.rows:
        raise DimensionMismatch("right-hand side must be a column of matching height")
    if not a.ring.is_modular:
        return _solve_int(a, b)
    n = a.ring.modulus
    aug = hstack(a.lift(), Matrix.diagonal(ZZ, [n] * a.rows))
    x = _solve_int(aug, b.lift())
    if x is None:
        return None
    return x.submatrix(0, a.cols, 0, 1).reduce(a.ring)


def kernel_gens(a: Matrix) -> Matrix:
    """Columns generating {x : a @ x = 0} over the matrix's ring.

    Over Z the columns are a lattice basis of the kernel; over Z/n they
    are a generating set (the lift gains n*I columns, so multiples of n
    in each coordinate are accounted for).
    """
    if not a.ring.is_modular:
        res = _snf_int(a)
        k = min(a.rows, a.cols)
        free = [j for j in range(a.cols) if j >= k or res.S.entry(j, j) == 0]
        if not free:
            return Matrix.zeros(a.ring, a.cols, 0)
        cols = [res.Q.col_list(j) for j in free]
        return Matrix.from_rows(ZZ, [[col[i] for col in cols] for i in range(a.cols)],
                                cols=len(free))
    n = a.ring.modulus
    aug = hstack(a.lift(), Matrix.diagonal(ZZ, [n] * a.rows))
    full = kernel_gens(aug)
    top = full.submatrix(0, a.cols, 0, full.cols).reduce(a.ring)
    keep = [j for j in range(top.cols) if any(top.entry(i, j) for i in range(top.rows))]
    if len(keep) == top.cols:
        return top
    return Matrix.from_rows(a.ring, [[top.entry(i, j) for j in keep] for i in range(top.rows)],
                            cols=len(keep))


def preimage_gens(f: Matrix, t: Matrix) -> Matrix:
    """Columns generating {x : f @ x lies in the column span of t}."""
    _check_same_ring(f, t)
    if f.rows != t.rows:
        raise DimensionMismatch("preimage target lives in a different ambient")
    full = kernel_gens(hstack(f, t))
    top = full.submatrix(0, f.cols, 0, full.cols)
    keep = [j for j in range(top.cols) if any(top.entry(i, j) for i in range(top.rows))]
    return Matrix.from_rows(f.ring, [[top.entry(i, j) for j in keep] for i in range(top.rows)],
                            cols=len(keep)) if len(keep) != top.cols else top


def in_span(v: Matrix, gens: Matrix) -> bool:
    """Membership of a column vector in a column span, over the ring."""
    return solve_linear(gens, v) is not None


def det(m: Matrix) -> int:
    """Exact determinant (Bareiss); reduced mod n for modular rings."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return m.ring.normalize(1)
    a = m.lift().to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return m.ring.normalize(sign * a[n - 1][n - 1])


def is_unimodular(m: Matrix) -> bool:
    return m.ring.is_unit(det(m))


def product_order(factors) -> int | None:
    """Number of elements presented by an invariant-factor list; None if infinite."""
    if any(f == 0 for f in factors):
        return None
    return prod(factors) if factors else 1
