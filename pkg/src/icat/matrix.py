"""Exact dense matrices over Q or F_p, plus the linear-algebra primitives
every categorical construction is built from: deterministic kernel bases,
cokernel projections, factorizations through inclusions/projections, and
Kronecker products.

Conventions (fixed for the whole package):
  * a linear map V -> W with dim V = n, dim W = m is an m x n matrix acting
    on column vectors;
  * tensor products use the row-major basis ordering e_i (x) e_j |-> i*n2 + j,
    so `tensor` is the plain Kronecker product;
  * kernel bases are in reduced column echelon form with pivot rows in
    increasing order, which makes every constructed basis canonical.
"""

from __future__ import annotations

import os

from .errors import NoFactorization, NotInvertible, ShapeMismatch
from .fields import Field

if os.environ.get("ICAT_PURE_PYTHON"):
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel_c as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _kernel


def kernel_backend() -> str:
    """Which compute kernel was selected at import ("c" or "python")."""
    return _kernel.backend_name()


class Matrix:
    """Immutable exact matrix tied to a field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows, nrows=None, ncols=None):
        rows = [list(r) for r in rows]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            if nrows == 0:
                raise ShapeMismatch("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(tuple(r) for r in rows)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(field, m, n):
        z = field.zero
        return Matrix(field, [[z] * n for _ in range(m)], m, n)

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @staticmethod
    def from_int_rows(field, rows, nrows=None, ncols=None):
        return Matrix(field, [[field.from_int(x) for x in r] for r in rows], nrows, ncols)

    @staticmethod
    def column(field, entries):
        return Matrix(field, [[x] for x in entries], len(entries), 1)

    @staticmethod
    def from_columns(field, cols, nrows):
        if not cols:
            return Matrix(field, [[] for _ in range(nrows)], nrows, 0)
        return Matrix(field, [[c[i] for c in cols] for i in range(nrows)], nrows, len(cols))

    # -- basics -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        if self.nrows * self.ncols == 0:
            return f"Matrix({self.nrows}x{self.ncols})"
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check_field(self, other):
        if self.field != other.field:
            raise ShapeMismatch("matrices over different fields")

    def __matmul__(self, other):
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        rows = _kernel.mat_mul(
            [list(r) for r in self.rows], [list(r) for r in other.rows],
            self.nrows, self.ncols, other.ncols, self.field.zero,
        )
        return Matrix(self.field, rows, self.nrows, other.ncols)

    def __add__(self, other):
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("shape mismatch in +")
        return Matrix(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.nrows, self.ncols,
        )

    def __sub__(self, other):
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("shape mismatch in -")
        rows = _kernel.mat_sub([list(r) for r in self.rows], [list(r) for r in other.rows], self.nrows, self.ncols)
        return Matrix(self.field, rows, self.nrows, self.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-x for x in r] for r in self.rows], self.nrows, self.ncols)

    def scale(self, c):
        return Matrix(self.field, [[c * x for x in r] for r in self.rows], self.nrows, self.ncols)

    def transpose(self):
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.ncols, self.nrows,
        )

    @property
    def T(self):
        return self.transpose()

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.rows for x in r)

    def is_identity(self):
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    def col(self, j) -> "Matrix":
        return Matrix(self.field, [[self.rows[i][j]] for i in range(self.nrows)], self.nrows, 1)

    def hstack(self, other):
        self._check_field(other)
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack row mismatch")
        return Matrix(
            self.field,
            [list(a) + list(b) for a, b in zip(self.rows, other.rows)],
            self.nrows, self.ncols + other.ncols,
        )

    def vstack(self, other):
        self._check_field(other)
        if self.ncols != other.ncols:
            raise ShapeMismatch("vstack column mismatch")
        return Matrix(self.field, [list(r) for r in self.rows] + [list(r) for r in other.rows],
                      self.nrows + other.nrows, self.ncols)

    # -- elimination ----------------------------------------------------

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = _kernel.rref(rows, self.nrows, self.ncols)
        return Matrix(self.field, rows, self.nrows, self.ncols), pivots

    def rank(self):
        return len(self.rref()[1])

    def inverse(self):
        if self.nrows != self.ncols:
            raise NotInvertible(f"{self.nrows}x{self.ncols} matrix is not square")
        try:
            inv = factor_left(self, Matrix.identity(self.field, self.nrows))
        except NoFactorization:
            raise NotInvertible("matrix is singular") from None
        return inv


# -- the four spec operations -----------------------------------------


def kernel_basis(f: Matrix) -> Matrix:
    """Canonical basis of ker f, as the columns of a cols(f) x k matrix.

    The basis is the unique one in reduced column echelon form (pivot rows
    increasing, leading entries 1), so constructed subspaces compare
    entrywise across runs.
    """
    red, pivots = f.rref()
    free = [j for j in range(f.ncols) if j not in pivots]
    z, o = f.field.zero, f.field.one
    cols = []
    for j in free:
        v = [z] * f.ncols
        v[j] = o
        for r, p in enumerate(pivots):
            v[p] = -red.rows[r][j]
        cols.append(v)
    raw = Matrix.from_columns(f.field, cols, f.ncols)
    reduced, piv = raw.T.rref()
    if len(piv) != len(free):  # columns of a kernel basis are independent
        raise ShapeMismatch("internal error: dependent kernel basis")
    return reduced.T


def cokernel_projection(f: Matrix) -> Matrix:
    """Canonical projection onto coker f: a q x rows(f) matrix P with P@f = 0
    and q = rows(f) - rank(f).  Its transpose is the canonical kernel basis of
    f transposed, so dualization is an involution on the nose."""
    return kernel_basis(f.T).T


def factor_left(iota: Matrix, f: Matrix) -> Matrix:
    """The unique g with iota @ g = f, for an injective iota.

    Raises NoFactorization when f's columns leave the column space of iota
    (for verification code this failure is itself the certificate).
    """
    iota._check_field(f)
    if iota.nrows != f.nrows:
        raise ShapeMismatch("factor_left: row mismatch")
    k = iota.ncols
    red, pivots = iota.hstack(f).rref()
    if len([p for p in pivots if p < k]) != k:
        raise NoFactorization("inclusion does not have full column rank")
    for p in pivots:
        if p >= k:
            raise NoFactorization(f"column {p - k} does not factor through the inclusion")
    rows = [list(red.rows[i][k:]) for i in range(k)]
    return Matrix(f.field, rows, k, f.ncols)


def factor_right(p: Matrix, f: Matrix) -> Matrix:
    """The unique g with g @ p = f, for a surjective p whose kernel f kills."""
    return factor_left(p.T, f.T).T


def solve_right(a: Matrix, b: Matrix) -> Matrix:
    """A particular solution x of a @ x = b (free coordinates zero),
    deterministic; raises NoFactorization when some column is unsolvable."""
    a._check_field(b)
    if a.nrows != b.nrows:
        raise ShapeMismatch("solve_right: row mismatch")
    red, pivots = a.hstack(b).rref()
    for p in pivots:
        if p >= a.ncols:
            raise NoFactorization(f"column {p - a.ncols} is not in the column space")
    z = a.field.zero
    rows = [[z] * b.ncols for _ in range(a.ncols)]
    for r, p in enumerate(pivots):
        for j in range(b.ncols):
            rows[p][j] = red.rows[r][a.ncols + j]
    return Matrix(a.field, rows, a.ncols, b.ncols)


def tensor(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product, matching the row-major convention on bases."""
    f._check_field(g)
    rows = _kernel.mat_kron(
        [list(r) for r in f.rows], [list(r) for r in g.rows],
        f.nrows, f.ncols, g.nrows, g.ncols, f.field.zero,
    )
    return Matrix(f.field, rows, f.nrows * g.nrows, f.ncols * g.ncols)


def tensor_all(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = tensor(out, m)
    return out


def matrix_solution_space(field, nrows, ncols, residual):
    """Basis (list of matrices) of {X : residual(X) = 0} for a residual that
    is linear in X and returns one stacked matrix of conditions."""
    z, o = field.zero, field.one
    cols = []
    for j in range(ncols):
        for i in range(nrows):
            probe_rows = [[z] * ncols for _ in range(nrows)]
            probe_rows[i][j] = o
            r = residual(Matrix(field, probe_rows, nrows, ncols))
            cols.append([r.rows[p][q] for p in range(r.nrows) for q in range(r.ncols)])
    if not cols:
        return []
    big = Matrix.from_columns(field, cols, len(cols[0]))
    basis = kernel_basis(big)
    out = []
    for bcol in range(basis.ncols):
        rows = [[z] * ncols for _ in range(nrows)]
        for j in range(ncols):
            for i in range(nrows):
                rows[i][j] = basis.rows[j * nrows + i][bcol]
        out.append(Matrix(field, rows, nrows, ncols))
    return out
