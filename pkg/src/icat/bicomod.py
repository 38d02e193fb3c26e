"""Comonoids, bicomodules, and the cotensor product.

The cotensor M [] N of a C-D-bicomodule with a D-E-bicomodule is computed
as the kernel of  rho_M (x) N  -  M (x) lambda_N  inside M (x) N; its basis is
the canonical reduced one from `matrix.kernel_basis`, so every constructed
object has bit-stable structure matrices.  Maps between cotensors are
always expressed on those canonical bases via `factor_left`; a factorization
failure is the certificate that an input map was not bicolinear.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import ComonoidMismatch, NotComonoidMap, ShapeMismatch
from .matrix import Matrix, factor_left, kernel_basis, tensor
from .report import Report, law_check


class Comonoid:
    """A coalgebra (C, delta, counit) given by structure matrices."""

    __slots__ = ("field", "dim", "delta", "counit")

    def __init__(self, delta: Matrix, counit: Matrix):
        dim = counit.ncols
        if counit.nrows != 1:
            raise ShapeMismatch("counit must be a 1 x dim matrix")
        if (delta.nrows, delta.ncols) != (dim * dim, dim):
            raise ShapeMismatch("delta must be a dim^2 x dim matrix")
        if delta.field != counit.field:
            raise ShapeMismatch("delta and counit over different fields")
        self.field = delta.field
        self.dim = dim
        self.delta = delta
        self.counit = counit

    def __eq__(self, other):
        if not isinstance(other, Comonoid):
            return NotImplemented
        return self.delta == other.delta and self.counit == other.counit

    def __hash__(self):
        return hash((self.delta, self.counit))

    def __repr__(self):
        return f"Comonoid(dim={self.dim})"

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)


class Bicomodule:
    """A C-D-bicomodule (M, lambda, rho): lambda: M -> C (x) M, rho: M -> M (x) D."""

    __slots__ = ("left", "right", "dim", "lam", "rho")

    def __init__(self, left: Comonoid, right: Comonoid, lam: Matrix, rho: Matrix):
        dim = lam.ncols
        if rho.ncols != dim:
            raise ShapeMismatch("lambda and rho disagree on dim")
        if lam.nrows != left.dim * dim:
            raise ShapeMismatch("lambda must be a (dim C * dim M) x dim M matrix")
        if rho.nrows != dim * right.dim:
            raise ShapeMismatch("rho must be a (dim M * dim D) x dim M matrix")
        self.left = left
        self.right = right
        self.dim = dim
        self.lam = lam
        self.rho = rho

    @property
    def field(self):
        return self.lam.field

    def __eq__(self, other):
        if not isinstance(other, Bicomodule):
            return NotImplemented
        return (
            self.left == other.left
            and self.right == other.right
            and self.lam == other.lam
            and self.rho == other.rho
        )

    def __hash__(self):
        return hash((self.lam, self.rho))

    def __repr__(self):
        return f"Bicomodule(dim={self.dim}, left={self.left.dim}, right={self.right.dim})"

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)


def regular_bicomodule(c: Comonoid) -> Bicomodule:
    """C as a C-C-bicomodule, both coactions the comultiplication."""
    return Bicomodule(c, c, c.delta, c.delta)


def verify_comonoid(c: Comonoid) -> Report:
    i = c.identity()
    lhs = tensor(c.delta, i) @ c.delta
    rhs = tensor(i, c.delta) @ c.delta
    return Report("comonoid", (
        law_check("comonoid.coassoc", "(delta (x) id) . delta = (id (x) delta) . delta", lhs, rhs),
        law_check("comonoid.counit_left", "(counit (x) id) . delta = id", tensor(c.counit, i) @ c.delta, i),
        law_check("comonoid.counit_right", "(id (x) counit) . delta = id", tensor(i, c.counit) @ c.delta, i),
    ))


def verify_bicomodule(m: Bicomodule) -> Report:
    im = m.identity()
    ic = m.left.identity()
    idd = m.right.identity()
    return Report("bicomodule", (
        law_check("bicomodule.left_counit", "(counit (x) id) . lambda = id",
                  tensor(m.left.counit, im) @ m.lam, im),
        law_check("bicomodule.left_coassoc", "(delta (x) id) . lambda = (id (x) lambda) . lambda",
                  tensor(m.left.delta, im) @ m.lam, tensor(ic, m.lam) @ m.lam),
        law_check("bicomodule.right_counit", "(id (x) counit) . rho = id",
                  tensor(im, m.right.counit) @ m.rho, im),
        law_check("bicomodule.right_coassoc", "(rho (x) id) . rho = (id (x) delta) . rho",
                  tensor(m.rho, idd) @ m.rho, tensor(im, m.right.delta) @ m.rho),
        law_check("bicomodule.coactions_commute", "(id (x) rho) . lambda = (lambda (x) id) . rho",
                  tensor(ic, m.rho) @ m.lam, tensor(m.lam, idd) @ m.rho),
    ))


class Cotensor:
    """The cotensor M []_D N with its canonical basis.

    `inclusion` embeds the cotensor into M (x) N; `result` is the induced
    C-E-bicomodule structure on it.
    """

    __slots__ = ("dim", "inclusion", "result", "factors")

    def __init__(self, dim, inclusion, result, factors):
        self.dim = dim
        self.inclusion = inclusion
        self.result = result
        self.factors = factors

    def __repr__(self):
        return f"Cotensor(dim={self.dim})"


@lru_cache(maxsize=None)
def cotensor(m: Bicomodule, n: Bicomodule) -> Cotensor:
    if m.right != n.left:
        raise ComonoidMismatch("middle comonoids differ")
    iota = kernel_basis(tensor(m.rho, n.identity()) - tensor(m.identity(), n.lam))
    lam = factor_left(tensor(m.left.identity(), iota), tensor(m.lam, n.identity()) @ iota)
    rho = factor_left(tensor(iota, n.right.identity()), tensor(m.identity(), n.rho) @ iota)
    result = Bicomodule(m.left, n.right, lam, rho)
    return Cotensor(iota.ncols, iota, result, (m, n))


def cotensor_map(f: Matrix, g: Matrix, src: Cotensor, dst: Cotensor) -> Matrix:
    """The unique h with iota_dst . h = (f (x) g) . iota_src.

    NoFactorization here certifies that (f, g) were not bicolinear.
    """
    return factor_left(dst.inclusion, tensor(f, g) @ src.inclusion)


def chain_inclusion(mods: Sequence[Bicomodule]) -> Matrix:
    """Canonical basis of the n-fold cotensor M1 [] ... [] Mn inside the
    full tensor product, as the joint kernel of all adjacent relations."""
    return _chain_inclusion_cached(tuple(mods))


@lru_cache(maxsize=None)
def _chain_inclusion_cached(mods) -> Matrix:
    if not mods:
        raise ShapeMismatch("empty cotensor chain")
    field = mods[0].field
    dims = [m.dim for m in mods]
    total = 1
    for d in dims:
        total *= d
    if len(mods) == 1:
        return Matrix.identity(field, total)
    blocks = []
    for i in range(len(mods) - 1):
        a, b = mods[i], mods[i + 1]
        if a.right != b.left:
            raise ComonoidMismatch(f"chain link {i}: middle comonoids differ")
        rel = tensor(a.rho, b.identity()) - tensor(a.identity(), b.lam)
        pre = 1
        for d in dims[:i]:
            pre *= d
        post = 1
        for d in dims[i + 2:]:
            post *= d
        blocks.append(tensor(Matrix.identity(field, pre), tensor(rel, Matrix.identity(field, post))))
    stacked = blocks[0]
    for bl in blocks[1:]:
        stacked = stacked.vstack(bl)
    return kernel_basis(stacked)


def is_comonoid_map(f: Matrix, src: Comonoid, dst: Comonoid) -> bool:
    if (f.nrows, f.ncols) != (dst.dim, src.dim):
        raise ShapeMismatch("comonoid map has wrong shape")
    return dst.delta @ f == tensor(f, f) @ src.delta and dst.counit @ f == src.counit


def induce_left(f: Matrix, dst: Comonoid, a: Bicomodule) -> Bicomodule:
    """Push the left coaction of `a` forward along a comonoid map f: C -> D."""
    if not is_comonoid_map(f, a.left, dst):
        raise NotComonoidMap("left induction along a non-comonoid-map")
    return Bicomodule(dst, a.right, tensor(f, a.identity()) @ a.lam, a.rho)


def induce_right(f: Matrix, dst: Comonoid, a: Bicomodule) -> Bicomodule:
    """Push the right coaction of `a` forward along a comonoid map D -> E."""
    if not is_comonoid_map(f, a.right, dst):
        raise NotComonoidMap("right induction along a non-comonoid-map")
    return Bicomodule(a.left, dst, a.lam, tensor(a.identity(), f) @ a.rho)


def iterate_coaction(m: Bicomodule, n: int) -> Matrix:
    """The n-fold left coaction M -> C^(x n) (x) M."""
    if n < 1:
        raise ShapeMismatch("iterate_coaction needs n >= 1")
    out = m.lam
    c_dim = m.left.dim
    for k in range(1, n):
        out = tensor(Matrix.identity(m.field, c_dim ** k), m.lam) @ out
    return out


# -- canonical unit isomorphisms ---------------------------------------


def left_unit_cotensor(m: Bicomodule) -> Cotensor:
    return cotensor(regular_bicomodule(m.left), m)


def right_unit_cotensor(m: Bicomodule) -> Cotensor:
    return cotensor(m, regular_bicomodule(m.right))


def lambda_factor(m: Bicomodule, cot: Cotensor = None) -> Matrix:
    """The invertible factorization of lambda through C []_C M (an iso M -> C [] M)."""
    if cot is None:
        cot = left_unit_cotensor(m)
    return factor_left(cot.inclusion, m.lam)


def rho_factor(m: Bicomodule, cot: Cotensor = None) -> Matrix:
    """The invertible factorization of rho through M []_D D (an iso M -> M [] D)."""
    if cot is None:
        cot = right_unit_cotensor(m)
    return factor_left(cot.inclusion, m.rho)


def left_counit_collapse(m: Bicomodule, cot: Cotensor = None) -> Matrix:
    """(counit (x) M) restricted to C [] M: the inverse of `lambda_factor`."""
    if cot is None:
        cot = left_unit_cotensor(m)
    return tensor(m.left.counit, m.identity()) @ cot.inclusion


def right_counit_collapse(m: Bicomodule, cot: Cotensor = None) -> Matrix:
    """(M (x) counit) restricted to M [] D: the inverse of `rho_factor`."""
    if cot is None:
        cot = right_unit_cotensor(m)
    return tensor(m.identity(), m.right.counit) @ cot.inclusion
