"""Internal categories, internal functors, and internal natural
transformations, with vertical (convolution) and horizontal (Godement)
composition.

An internal category is a comonoid C of objects together with a monoid
(A, m, u) in C-bicomodules: m: A []_C A -> A is written on the canonical
cotensor basis, u: C -> A.  The left coaction of A encodes codomains, the
right coaction domains.
"""

from __future__ import annotations

from functools import cached_property

from .bicomod import (
    Bicomodule,
    Comonoid,
    Cotensor,
    chain_inclusion,
    cotensor,
    is_comonoid_map,
    iterate_coaction,
    lambda_factor,
    left_unit_cotensor,
    regular_bicomodule,
    rho_factor,
    right_unit_cotensor,
)
from .errors import (
    DomainMismatch,
    GodementMismatch,
    IdentityMismatch,
    NoFactorization,
    ShapeMismatch,
)
from .matrix import Matrix, factor_left, tensor
from .report import Check, Report, flag_check, law_check


class InternalCategory:
    def __init__(self, objects: Comonoid, morphisms: Bicomodule, mult: Matrix, unit: Matrix):
        if morphisms.left != objects or morphisms.right != objects:
            raise ShapeMismatch("morphism object must be a C-C-bicomodule over the object comonoid")
        self.objects = objects
        self.morphisms = morphisms
        self.mult = mult
        self.unit = unit
        if (unit.nrows, unit.ncols) != (morphisms.dim, objects.dim):
            raise ShapeMismatch("unit must be a dim A x dim C matrix")
        if (mult.nrows, mult.ncols) != (morphisms.dim, self.square.dim):
            raise ShapeMismatch("mult must be a dim A x dim(A [] A) matrix")

    @cached_property
    def square(self) -> Cotensor:
        return cotensor(self.morphisms, self.morphisms)

    @cached_property
    def left_unit(self) -> Cotensor:
        return left_unit_cotensor(self.morphisms)

    @cached_property
    def right_unit(self) -> Cotensor:
        return right_unit_cotensor(self.morphisms)

    def __eq__(self, other):
        if not isinstance(other, InternalCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.morphisms, self.mult, self.unit))

    def __repr__(self):
        return f"InternalCategory(objects={self.objects.dim}, morphisms={self.morphisms.dim})"


def trivial_internal_category(c: Comonoid) -> InternalCategory:
    """(C, C): the comonoid itself as morphism object, composition the
    canonical C []_C C ~ C collapse, identities the identity matrix."""
    reg = regular_bicomodule(c)
    cc = cotensor(reg, reg)
    mult = tensor(c.counit, c.identity()) @ cc.inclusion
    return InternalCategory(c, reg, mult, c.identity())


def convolve(target: InternalCategory, c: Comonoid, m1: Matrix, m2: Matrix) -> Matrix:
    """The convolution m_B . (m1 [] m2) . delta_C of two maps C -> B."""
    h = factor_left(target.square.inclusion, tensor(m1, m2) @ c.delta)
    return target.mult @ h


class InternalFunctor:
    def __init__(self, src: InternalCategory, dst: InternalCategory, f0: Matrix, f1: Matrix):
        if (f0.nrows, f0.ncols) != (dst.objects.dim, src.objects.dim):
            raise ShapeMismatch("f0 must be a dim D x dim C matrix")
        if (f1.nrows, f1.ncols) != (dst.morphisms.dim, src.morphisms.dim):
            raise ShapeMismatch("f1 must be a dim B x dim A matrix")
        self.src = src
        self.dst = dst
        self.f0 = f0
        self.f1 = f1

    def __eq__(self, other):
        if not isinstance(other, InternalFunctor):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and self.f0 == other.f0
            and self.f1 == other.f1
        )

    def __hash__(self):
        return hash((self.f0, self.f1))

    def __repr__(self):
        return f"InternalFunctor({self.src!r} -> {self.dst!r})"

    @cached_property
    def induced_morphisms(self) -> Bicomodule:
        """The source morphism object with both coactions pushed along f0."""
        a = self.src.morphisms
        return Bicomodule(
            self.dst.objects,
            self.dst.objects,
            tensor(self.f0, a.identity()) @ a.lam,
            tensor(a.identity(), self.f0) @ a.rho,
        )


def identity_functor(ic: InternalCategory) -> InternalFunctor:
    return InternalFunctor(ic, ic, ic.objects.identity(), ic.morphisms.identity())


def compose_functors(g: InternalFunctor, f: InternalFunctor) -> InternalFunctor:
    if f.dst != g.src:
        raise DomainMismatch("functors are not composable")
    return InternalFunctor(f.src, g.dst, g.f0 @ f.f0, g.f1 @ f.f1)


class NatTrans:
    """alpha: f => g, carried by a matrix C -> B."""

    def __init__(self, source: InternalFunctor, target: InternalFunctor, mat: Matrix):
        if source.src != target.src or source.dst != target.dst:
            raise DomainMismatch("natural transformation needs parallel functors")
        if (mat.nrows, mat.ncols) != (source.dst.morphisms.dim, source.src.objects.dim):
            raise ShapeMismatch("natural transformation must be a dim B x dim C matrix")
        self.source = source
        self.target = target
        self.mat = mat

    def __eq__(self, other):
        if not isinstance(other, NatTrans):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"NatTrans({self.mat!r})"


def verify_internal_category(ic: InternalCategory) -> Report:
    a = ic.morphisms
    c = ic.objects
    ia, ic_, sq = a.identity(), c.identity(), ic.square
    checks = []

    checks.append(law_check(
        "intcat.mult_left_colinear", "lambda . m = (id (x) m) . lambda_square",
        a.lam @ ic.mult, tensor(ic_, ic.mult) @ sq.result.lam))
    checks.append(law_check(
        "intcat.mult_right_colinear", "rho . m = (m (x) id) . rho_square",
        a.rho @ ic.mult, tensor(ic.mult, ic_) @ sq.result.rho))
    checks.append(law_check(
        "intcat.unit_left_colinear", "lambda . u = (id (x) u) . delta",
        a.lam @ ic.unit, tensor(ic_, ic.unit) @ c.delta))
    checks.append(law_check(
        "intcat.unit_right_colinear", "rho . u = (u (x) id) . delta",
        a.rho @ ic.unit, tensor(ic.unit, ic_) @ c.delta))

    try:
        chain3 = chain_inclusion([a, a, a])
        left = _mult_on_first_pair(ic, chain3)
        right = _mult_on_last_pair(ic, chain3)
        checks.append(law_check(
            "intcat.assoc", "m . (m [] id) = m . (id [] m)",
            ic.mult @ left, ic.mult @ right))
    except NoFactorization as e:
        checks.append(flag_check("intcat.assoc", "m . (m [] id) = m . (id [] m)", False,
                                 {"reason": str(e)}))

    try:
        lf = lambda_factor(a, ic.left_unit)
        u_box_a = factor_left(sq.inclusion, tensor(ic.unit, ia) @ ic.left_unit.inclusion)
        checks.append(law_check(
            "intcat.unit_left", "m . (u [] id) = id", ic.mult @ u_box_a @ lf, ia))
    except NoFactorization as e:
        checks.append(flag_check("intcat.unit_left", "m . (u [] id) = id", False, {"reason": str(e)}))

    try:
        rf = rho_factor(a, ic.right_unit)
        a_box_u = factor_left(sq.inclusion, tensor(ia, ic.unit) @ ic.right_unit.inclusion)
        checks.append(law_check(
            "intcat.unit_right", "m . (id [] u) = id", ic.mult @ a_box_u @ rf, ia))
    except NoFactorization as e:
        checks.append(flag_check("intcat.unit_right", "m . (id [] u) = id", False, {"reason": str(e)}))

    return Report("internal category", tuple(checks))


def _mult_on_first_pair(ic: InternalCategory, chain3: Matrix) -> Matrix:
    """(m [] id): A [] A [] A -> A [] A on canonical bases."""
    a = ic.morphisms
    j = factor_left(tensor(ic.square.inclusion, a.identity()), chain3)
    return factor_left(ic.square.inclusion, tensor(ic.mult, a.identity()) @ j)


def _mult_on_last_pair(ic: InternalCategory, chain3: Matrix) -> Matrix:
    a = ic.morphisms
    j = factor_left(tensor(a.identity(), ic.square.inclusion), chain3)
    return factor_left(ic.square.inclusion, tensor(a.identity(), ic.mult) @ j)


def iterate_mult(ic: InternalCategory, n: int) -> Matrix:
    """The (n-1)-fold composite A^[](n+1) -> A on canonical chain bases,
    collapsing the leftmost pair first; n >= 1 (n = 1 gives m itself)."""
    if n < 1:
        raise ShapeMismatch("iterate_mult needs n >= 1")
    a = ic.morphisms
    iota = chain_inclusion([a] * (n + 1))
    cur = Matrix.identity(a.field, iota.ncols)
    for k in range(n + 1, 2, -1):  # collapse k slots to k - 1
        rest = Matrix.identity(a.field, a.dim ** (k - 2))
        first_pair = factor_left(tensor(ic.square.inclusion, rest), iota)
        collapsed = tensor(ic.mult, rest) @ first_pair
        iota = chain_inclusion([a] * (k - 1))
        cur = factor_left(iota, collapsed) @ cur
    return ic.mult @ cur


def verify_functor(f: InternalFunctor) -> Report:
    src, dst = f.src, f.dst
    a, b = src.morphisms, dst.morphisms
    checks = []
    checks.append(law_check(
        "functor.f0_comultiplicative", "delta_D . f0 = (f0 (x) f0) . delta_C",
        dst.objects.delta @ f.f0, tensor(f.f0, f.f0) @ src.objects.delta))
    checks.append(law_check(
        "functor.f0_counital", "counit_D . f0 = counit_C",
        dst.objects.counit @ f.f0, src.objects.counit))

    ind = f.induced_morphisms
    checks.append(law_check(
        "functor.f1_left_colinear", "lambda_B . f1 = (id (x) f1) . (f0 (x) id) . lambda_A",
        b.lam @ f.f1, tensor(dst.objects.identity(), f.f1) @ ind.lam))
    checks.append(law_check(
        "functor.f1_right_colinear", "rho_B . f1 = (f1 (x) id) . (id (x) f0) . rho_A",
        b.rho @ f.f1, tensor(f.f1, dst.objects.identity()) @ ind.rho))

    try:
        ind_sq = cotensor(ind, ind)
        canon = factor_left(ind_sq.inclusion, src.square.inclusion)
        f1f1 = factor_left(dst.square.inclusion, tensor(f.f1, f.f1) @ ind_sq.inclusion)
        checks.append(law_check(
            "functor.multiplicative", "m_B . (f1 [] f1) = f1 . m_A",
            dst.mult @ f1f1 @ canon, f.f1 @ src.mult))
    except NoFactorization as e:
        checks.append(flag_check("functor.multiplicative", "m_B . (f1 [] f1) = f1 . m_A",
                                 False, {"reason": str(e)}))

    checks.append(law_check(
        "functor.unital", "f1 . u_A = u_B . f0", f.f1 @ src.unit, dst.unit @ f.f0))
    return Report("internal functor", tuple(checks))


def verify_nat(alpha: NatTrans) -> Report:
    f, g = alpha.source, alpha.target
    src, dst = f.src, f.dst
    a, b = src.morphisms, dst.morphisms
    c, d = src.objects, dst.objects
    checks = []

    lam_ind = tensor(g.f0, c.identity()) @ c.delta
    rho_ind = tensor(c.identity(), f.f0) @ c.delta
    checks.append(law_check(
        "nat.left_colinear", "lambda_B . alpha = (id (x) alpha) . (g0 (x) id) . delta",
        b.lam @ alpha.mat, tensor(d.identity(), alpha.mat) @ lam_ind))
    checks.append(law_check(
        "nat.right_colinear", "rho_B . alpha = (alpha (x) id) . (id (x) f0) . delta",
        b.rho @ alpha.mat, tensor(alpha.mat, d.identity()) @ rho_ind))

    try:
        top = dst.mult @ factor_left(
            dst.square.inclusion,
            tensor(g.f1, alpha.mat) @ src.right_unit.inclusion,
        ) @ rho_factor(a, src.right_unit)
        bottom = dst.mult @ factor_left(
            dst.square.inclusion,
            tensor(alpha.mat, f.f1) @ src.left_unit.inclusion,
        ) @ lambda_factor(a, src.left_unit)
        checks.append(law_check(
            "nat.hexagon",
            "m_B . (g1 [] alpha) . rho = m_B . (alpha [] f1) . lambda",
            top, bottom))
    except NoFactorization as e:
        checks.append(flag_check(
            "nat.hexagon", "m_B . (g1 [] alpha) . rho = m_B . (alpha [] f1) . lambda",
            False, {"reason": str(e)}))
    return Report("natural transformation", tuple(checks))


def identity_nat(f: InternalFunctor) -> NatTrans:
    via_unit_a = f.f1 @ f.src.unit
    via_unit_b = f.dst.unit @ f.f0
    if via_unit_a != via_unit_b:
        raise IdentityMismatch("f1 . u_A differs from u_B . f0; the functor is not unital")
    return NatTrans(f, f, via_unit_a)


def vertical_compose(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """The convolution beta * alpha: source of beta must be target of alpha."""
    if beta.source != alpha.target:
        raise DomainMismatch("vertical composition needs beta.source == alpha.target")
    mat = convolve(alpha.source.dst, alpha.source.src.objects, beta.mat, alpha.mat)
    return NatTrans(alpha.source, beta.target, mat)


def whisker_left(h: InternalFunctor, alpha: NatTrans) -> NatTrans:
    """h_1 alpha: h f => h g for alpha: f => g with cod(alpha's functors) = dom h."""
    if alpha.source.dst != h.src:
        raise DomainMismatch("whisker_left: middle category mismatch")
    return NatTrans(
        compose_functors(h, alpha.source), compose_functors(h, alpha.target), h.f1 @ alpha.mat
    )


def whisker_right(alpha: NatTrans, h: InternalFunctor) -> NatTrans:
    """alpha h_0: f h => g h for alpha: f => g with dom(alpha's functors) = cod h."""
    if h.dst != alpha.source.src:
        raise DomainMismatch("whisker_right: middle category mismatch")
    return NatTrans(
        compose_functors(alpha.source, h), compose_functors(alpha.target, h), alpha.mat @ h.f0
    )


def horizontal_compose(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """The Godement product beta . alpha: hf => kg, computed as
    beta g0 * h1 alpha and cross-checked against k1 alpha * beta f0."""
    if alpha.source.dst != beta.source.src:
        raise DomainMismatch("horizontal composition needs matching middle category")
    first = vertical_compose(whisker_right(beta, alpha.target), whisker_left(beta.source, alpha))
    second = vertical_compose(whisker_left(beta.target, alpha), whisker_right(beta, alpha.source))
    if first.mat != second.mat:
        raise GodementMismatch("beta g0 * h1 alpha differs from k1 alpha * beta f0")
    return first
