"""Dense exact matrices: rank, null spaces, solving, block assembly.

Matrices are row-major lists over a coefficient field from `fields`.
Elimination over Q runs on cleared-denominator integer rows (cross
multiplication with per-row gcd normalization), which is much faster
than Fraction arithmetic on every cell; prime fields use plain modular
elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(field, nrows, ncols):
        z = field.zero
        return Matrix(field, [[z] * ncols for _ in range(nrows)], ncols)

    @staticmethod
    def identity(field, n):
        m = Matrix.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @staticmethod
    def from_int_rows(field, rows, ncols=None):
        conv = field.from_int
        return Matrix(field, [[conv(x) for x in r] for r in rows], ncols)

    @staticmethod
    def column(field, entries):
        return Matrix(field, [[x] for x in entries], 1)

    # -- basics --------------------------------------------------------

    def copy(self):
        return Matrix(self.field, self.rows, self.ncols)

    def entry(self, i, j):
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        raise TypeError("Matrix is unhashable")

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"

    def is_zero(self):
        z = self.field.is_zero
        return all(z(x) for r in self.rows for x in r)

    def transpose(self):
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._check_same_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [
                [add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [
                [sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape()} * {other.shape()}")
        f = self.field
        add, mul, zero, is_zero = f.add, f.mul, f.zero, f.is_zero
        bt = other.transpose().rows
        out = []
        for ra in self.rows:
            row = []
            for cb in bt:
                acc = zero
                for a, b in zip(ra, cb):
                    if not is_zero(a) and not is_zero(b):
                        acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(f, out, other.ncols)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        f = self.field
        out = []
        for r in self.rows:
            acc = f.zero
            for a, b in zip(r, vec):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def shape(self):
        return (self.nrows, self.ncols)

    def _check_same_shape(self, other):
        if self.shape() != other.shape():
            raise ValueError(f"shape mismatch {self.shape()} vs {other.shape()}")

    # -- block assembly -------------------------------------------------

    @staticmethod
    def hstack(field, mats, nrows=None):
        mats = list(mats)
        if not mats:
            return Matrix.zeros(field, nrows or 0, 0)
        n = mats[0].nrows
        rows = [[] for _ in range(n)]
        for m in mats:
            if m.nrows != n:
                raise ValueError("hstack: row count mismatch")
            for i in range(n):
                rows[i].extend(m.rows[i])
        return Matrix(field, rows, sum(m.ncols for m in mats))

    @staticmethod
    def vstack(field, mats, ncols=None):
        mats = list(mats)
        if not mats:
            return Matrix.zeros(field, 0, ncols or 0)
        c = mats[0].ncols
        rows = []
        for m in mats:
            if m.ncols != c:
                raise ValueError("vstack: column count mismatch")
            rows.extend(m.rows)
        return Matrix(field, rows, c)

    @staticmethod
    def block_diag(field, mats):
        nr = sum(m.nrows for m in mats)
        nc = sum(m.ncols for m in mats)
        out = Matrix.zeros(field, nr, nc)
        r0 = c0 = 0
        for m in mats:
            for i, row in enumerate(m.rows):
                out.rows[r0 + i][c0 : c0 + m.ncols] = row
            r0 += m.nrows
            c0 += m.ncols
        return out

    # -- elimination-based operations ------------------------------------

    def rank(self):
        return len(_echelon(self)[1])

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column list)."""
        rows, pivots = _rref_rows(self)
        m = Matrix.zeros(self.field, self.nrows, self.ncols)
        for i, r in enumerate(rows):
            m.rows[i] = list(r)
        return m, pivots

    def kernel_basis(self):
        """Basis of the right null space, as a list of column vectors."""
        rows, pivots = _rref_rows(self)
        f = self.field
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for fcol in free:
            v = [f.zero] * self.ncols
            v[fcol] = f.one
            for i, p in enumerate(pivots):
                v[p] = f.neg(rows[i][fcol])
            basis.append(v)
        return basis

    def solve(self, b):
        """A particular solution of self * x = b, or None if inconsistent."""
        if len(b) != self.nrows:
            raise ValueError("solve: rhs length mismatch")
        aug = Matrix.hstack(self.field, [self, Matrix.column(self.field, b)])
        rows, pivots = _rref_rows(aug)
        f = self.field
        if self.ncols in pivots:
            return None
        x = [f.zero] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = rows[i][self.ncols]
        return x

    def solve_matrix(self, b):
        """Solve self * X = B columnwise; None if any column is inconsistent."""
        cols = []
        bt = b.transpose().rows
        for col in bt:
            x = self.solve(col)
            if x is None:
                return None
            cols.append(x)
        return Matrix(self.field, [list(r) for r in zip(*cols)] if cols else [], len(cols)) \
            if cols else Matrix.zeros(self.field, self.ncols, 0)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        inv = self.solve_matrix(Matrix.identity(self.field, self.nrows))
        if inv is None or (self.nrows and inv.rank() != self.nrows):
            return None
        return inv

    def column_space_basis(self):
        """Matrix whose columns span the column space (pivot columns)."""
        _, pivots = _rref_rows(self)
        cols = [[self.rows[i][j] for i in range(self.nrows)] for j in pivots]
        return Matrix(self.field, [list(r) for r in zip(*cols)] if cols else
                      [[] for _ in range(self.nrows)], len(pivots))

    def row_space_rows(self):
        """Canonical (RREF) spanning rows of the row space, zero rows dropped."""
        rows, pivots = _rref_rows(self)
        return [list(rows[i]) for i in range(len(pivots))]


# -- elimination engines -------------------------------------------------


def _int_rows(m: Matrix):
    """Clear denominators: integer row list plus nothing else (Q only)."""
    out = []
    for row in m.rows:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x.numerator * (den // x.denominator)) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _echelon_q(m: Matrix):
    rows = _int_rows(m)
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        best = None
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                a = abs(v)
                if best is None or a < best:
                    best, piv = a, i
                    if a == 1:
                        break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pv = prow[c]
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if v:
                g = gcd(pv, v)
                a, b = pv // g, v // g
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = a * ri[j] - b * prow[j]
                g2 = 0
                for x in ri:
                    g2 = gcd(g2, x)
                if g2 > 1:
                    for j in range(c, ncols):
                        ri[j] //= g2
        pivots.append(c)
        r += 1
    return rows[: len(pivots)], pivots


def _echelon_p(m: Matrix):
    p = m.field.p
    rows = [[x % p for x in row] for row in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        for j in range(c, ncols):
            prow[j] = prow[j] * inv % p
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if v:
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - v * prow[j]) % p
        pivots.append(c)
        r += 1
    return rows[: len(pivots)], pivots


def _echelon(m: Matrix):
    if m.field.characteristic == 0:
        return _echelon_q(m)
    return _echelon_p(m)


def _rref_rows(m: Matrix):
    """Reduced echelon rows over the field (list of lists), plus pivots."""
    f = m.field
    rows, pivots = _echelon(m)
    if f.characteristic == 0:
        rows = [[Fraction(x) for x in row] for row in rows]
    # normalize pivots to 1, then clear above
    for i in range(len(pivots) - 1, -1, -1):
        p = pivots[i]
        inv = f.div(f.one, rows[i][p])
        rows[i] = [f.mul(inv, x) for x in rows[i]]
        for k in range(i):
            v = rows[k][p]
            if not f.is_zero(v):
                rows[k] = [f.sub(a, f.mul(v, b)) for a, b in zip(rows[k], rows[i])]
    return rows, pivots


def intersect_row_spaces(field, rows_u, rows_v, ncols):
    """Canonical basis rows of span(rows_u) ∩ span(rows_v)."""
    if not rows_u or not rows_v:
        return []
    mu = Matrix(field, rows_u, ncols)
    mv = Matrix(field, rows_v, ncols)
    # x = a·U = b·V  <=>  [U^T | -V^T] (a,b)^T = 0
    stacked = Matrix.hstack(field, [mu.transpose(), (-mv).transpose()])
    combos = stacked.kernel_basis()
    vecs = []
    for w in combos:
        a = w[: mu.nrows]
        vec = [field.zero] * ncols
        for coef, row in zip(a, mu.rows):
            if not field.is_zero(coef):
                vec = [field.add(x, field.mul(coef, y)) for x, y in zip(vec, row)]
        vecs.append(vec)
    if not vecs:
        return []
    return Matrix(field, vecs, ncols).row_space_rows()
