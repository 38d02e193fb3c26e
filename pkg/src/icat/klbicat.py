"""The Kleisli-completion bicategory of bicomodules.

Objects are internal categories; a 1-cell (C, A) -> (D, B) is a bicomodule
M with a structure map phi: A []_C M -> M []_D B compatible with
multiplication and units; a 2-cell is a map chi: M -> N []_D B.  Internal
functors, their vertical dual, and cofunctors all embed here (embed_phi,
embed_phi_hat, embed_psi); the vertical dual is reached through an explicit
mirror adapter that swaps left and right structures, not a second code path.
"""

from __future__ import annotations

from functools import cached_property

from .bicomod import (
    Bicomodule,
    chain_inclusion,
    cotensor,
    lambda_factor,
    left_unit_cotensor,
    regular_bicomodule,
    rho_factor,
    right_unit_cotensor,
)
from .cofun import Cofunctor, Cotrans
from .errors import DomainMismatch, NoFactorization, NotPhiImage, ShapeMismatch
from .intcat import InternalCategory, InternalFunctor, NatTrans
from .matrix import Matrix, factor_left, tensor
from .report import Report, flag_check, law_check


class KlOneCell:
    def __init__(self, src: InternalCategory, dst: InternalCategory,
                 carrier: Bicomodule, phi: Matrix):
        if carrier.left != src.objects or carrier.right != dst.objects:
            raise ShapeMismatch("carrier must be a C-D-bicomodule")
        self.src = src
        self.dst = dst
        self.carrier = carrier
        self.phi = phi
        if (phi.nrows, phi.ncols) != (self.cod_cotensor.dim, self.dom_cotensor.dim):
            raise ShapeMismatch("phi must map A [] M to M [] B on canonical bases")

    @cached_property
    def dom_cotensor(self):
        return cotensor(self.src.morphisms, self.carrier)

    @cached_property
    def cod_cotensor(self):
        return cotensor(self.carrier, self.dst.morphisms)

    def __eq__(self, other):
        if not isinstance(other, KlOneCell):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and self.carrier == other.carrier
            and self.phi == other.phi
        )

    def __hash__(self):
        return hash((self.carrier, self.phi))


class KlTwoCell:
    def __init__(self, source: KlOneCell, target: KlOneCell, chi: Matrix):
        if source.src != target.src or source.dst != target.dst:
            raise DomainMismatch("2-cell needs parallel 1-cells")
        self.source = source
        self.target = target
        self.chi = chi
        if (chi.nrows, chi.ncols) != (target.cod_cotensor.dim, source.carrier.dim):
            raise ShapeMismatch("chi must map M to N [] B on canonical bases")
        self.src = source.src
        self.dst = source.dst

    def __eq__(self, other):
        if not isinstance(other, KlTwoCell):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.chi == other.chi

    def __hash__(self):
        return hash(self.chi)


def identity_kl_onecell(ic: InternalCategory) -> KlOneCell:
    """Carrier C; phi the canonical A [] C ~ A ~ C [] A comparison."""
    a = ic.morphisms
    collapse = tensor(a.identity(), ic.objects.counit) @ ic.right_unit.inclusion
    phi = lambda_factor(a, ic.left_unit) @ collapse
    return KlOneCell(ic, ic, regular_bicomodule(ic.objects), phi)


def identity_kl_twocell(x: KlOneCell) -> KlTwoCell:
    chi = factor_left(
        x.cod_cotensor.inclusion,
        tensor(x.carrier.identity(), x.dst.unit) @ x.carrier.rho,
    )
    return KlTwoCell(x, x, chi)


def verify_kl_onecell(x: KlOneCell) -> Report:
    src, dst = x.src, x.dst
    a, b, m = src.morphisms, dst.morphisms, x.carrier
    dom, cod = x.dom_cotensor, x.cod_cotensor
    c_id, d_id = src.objects.identity(), dst.objects.identity()
    checks = []

    checks.append(law_check(
        "kl1.phi_left_colinear", "lambda_cod . phi = (id (x) phi) . lambda_dom",
        cod.result.lam @ x.phi, tensor(c_id, x.phi) @ dom.result.lam))
    checks.append(law_check(
        "kl1.phi_right_colinear", "rho_cod . phi = (phi (x) id) . rho_dom",
        cod.result.rho @ x.phi, tensor(x.phi, d_id) @ dom.result.rho))

    try:
        t = chain_inclusion([a, a, m])
        # right-then-down: A [] phi, then phi [] B, then M [] m_B
        j = factor_left(tensor(a.identity(), dom.inclusion), t)
        x1 = factor_left(chain_inclusion([a, m, b]),
                         tensor(a.identity(), cod.inclusion @ x.phi) @ j)
        t2 = chain_inclusion([a, m, b])
        j2 = factor_left(tensor(dom.inclusion, b.identity()), t2)
        x2 = factor_left(chain_inclusion([m, b, b]),
                         tensor(cod.inclusion @ x.phi, b.identity()) @ j2 @ x1)
        t3 = chain_inclusion([m, b, b])
        j3 = factor_left(tensor(m.identity(), dst.square.inclusion), t3)
        path1 = factor_left(cod.inclusion,
                            tensor(m.identity(), dst.mult) @ j3 @ x2)
        # down-then-right: m_A [] M, then phi
        j4 = factor_left(tensor(src.square.inclusion, m.identity()), t)
        path2 = x.phi @ factor_left(dom.inclusion, tensor(src.mult, m.identity()) @ j4)
        checks.append(law_check(
            "kl1.mult_compat",
            "(M [] m_B) . (phi [] B) . (A [] phi) = phi . (m_A [] M)",
            path1, path2))
    except NoFactorization as e:
        checks.append(flag_check("kl1.mult_compat", "multiplication square", False,
                                 {"reason": str(e)}))

    try:
        c_m = left_unit_cotensor(m)
        lf = factor_left(c_m.inclusion, m.lam)
        u_box = factor_left(dom.inclusion, tensor(src.unit, m.identity()) @ c_m.inclusion)
        m_d = right_unit_cotensor(m)
        rf = factor_left(m_d.inclusion, m.rho)
        box_u = factor_left(cod.inclusion, tensor(m.identity(), dst.unit) @ m_d.inclusion)
        checks.append(law_check(
            "kl1.unit_compat", "phi . (u_A [] M) = M [] u_B",
            x.phi @ u_box @ lf, box_u @ rf))
    except NoFactorization as e:
        checks.append(flag_check("kl1.unit_compat", "unit triangle", False, {"reason": str(e)}))
    return Report("KL 1-cell", tuple(checks))


def verify_kl_twocell(two: KlTwoCell) -> Report:
    x, y = two.source, two.target
    src, dst = x.src, x.dst
    a, b = src.morphisms, dst.morphisms
    m, n = x.carrier, y.carrier
    checks = []

    checks.append(law_check(
        "kl2.chi_left_colinear", "lambda_cod . chi = (id (x) chi) . lambda_M",
        y.cod_cotensor.result.lam @ two.chi,
        tensor(src.objects.identity(), two.chi) @ m.lam))
    checks.append(law_check(
        "kl2.chi_right_colinear", "rho_cod . chi = (chi (x) id) . rho_M",
        y.cod_cotensor.result.rho @ two.chi,
        tensor(two.chi, dst.objects.identity()) @ m.rho))

    try:
        t = chain_inclusion([n, b, b])
        j = factor_left(tensor(n.identity(), dst.square.inclusion), t)
        collapse = tensor(n.identity(), dst.mult) @ j

        left = factor_left(
            t, tensor(y.cod_cotensor.inclusion @ two.chi, b.identity())
            @ x.cod_cotensor.inclusion @ x.phi)
        path1 = factor_left(y.cod_cotensor.inclusion, collapse @ left)

        t2 = chain_inclusion([a, n, b])
        x1 = factor_left(
            t2, tensor(a.identity(), y.cod_cotensor.inclusion @ two.chi) @ x.dom_cotensor.inclusion)
        j2 = factor_left(tensor(y.dom_cotensor.inclusion, b.identity()), t2)
        x2 = factor_left(
            t, tensor(y.cod_cotensor.inclusion @ y.phi, b.identity()) @ j2 @ x1)
        path2 = factor_left(y.cod_cotensor.inclusion, collapse @ x2)
        checks.append(law_check(
            "kl2.square",
            "(N [] m_B) . (chi [] B) . phi = (N [] m_B) . (psi [] B) . (A [] chi)",
            path1, path2))
    except NoFactorization as e:
        checks.append(flag_check("kl2.square", "2-cell square", False, {"reason": str(e)}))
    return Report("KL 2-cell", tuple(checks))


def kl_vertical(chi2: KlTwoCell, chi1: KlTwoCell) -> KlTwoCell:
    if chi2.source != chi1.target:
        raise DomainMismatch("kl_vertical needs chi2.source == chi1.target")
    dst = chi1.dst
    b = dst.morphisms
    q = chi2.target.carrier
    t = chain_inclusion([q, b, b])
    lifted = factor_left(
        t, tensor(chi2.target.cod_cotensor.inclusion @ chi2.chi, b.identity())
        @ chi1.target.cod_cotensor.inclusion @ chi1.chi)
    j = factor_left(tensor(q.identity(), dst.square.inclusion), t)
    chi = factor_left(
        chi2.target.cod_cotensor.inclusion,
        tensor(q.identity(), dst.mult) @ j @ lifted)
    return KlTwoCell(chi1.source, chi2.target, chi)


def kl_compose_onecells(y: KlOneCell, x: KlOneCell) -> KlOneCell:
    """The wreath-style composite (M []_D M', (M [] phi') . (phi [] M'))."""
    if x.dst != y.src:
        raise DomainMismatch("1-cells are not composable")
    a = x.src.morphisms
    bp = y.dst.morphisms
    m, mp = x.carrier, y.carrier
    mm = cotensor(m, mp)

    t0 = chain_inclusion([a, m, mp])
    dom_new = cotensor(a, mm.result)
    start = factor_left(t0, tensor(a.identity(), mm.inclusion) @ dom_new.inclusion)
    j = factor_left(tensor(x.dom_cotensor.inclusion, mp.identity()), t0)
    t1 = chain_inclusion([m, x.dst.morphisms, mp])
    x1 = factor_left(t1, tensor(x.cod_cotensor.inclusion @ x.phi, mp.identity()) @ j @ start)
    j2 = factor_left(tensor(m.identity(), y.dom_cotensor.inclusion), t1)
    t2 = chain_inclusion([m, mp, bp])
    x2 = factor_left(t2, tensor(m.identity(), y.cod_cotensor.inclusion @ y.phi) @ j2 @ x1)
    cod_new = cotensor(mm.result, bp)
    finish = factor_left(t2, tensor(mm.inclusion, bp.identity()) @ cod_new.inclusion)
    phi = finish.inverse() @ x2
    return KlOneCell(x.src, y.dst, mm.result, phi)


def kl_horizontal(chi2: KlTwoCell, chi1: KlTwoCell) -> KlTwoCell:
    """Horizontal composite of 2-cells across a common middle category."""
    if chi1.dst != chi2.src:
        raise DomainMismatch("kl_horizontal needs matching middle category")
    src_cell = kl_compose_onecells(chi2.source, chi1.source)
    dst_cell = kl_compose_onecells(chi2.target, chi1.target)
    b = chi1.dst.morphisms
    bp = chi2.dst.morphisms
    m, mp = chi1.source.carrier, chi2.source.carrier
    n, np_ = chi1.target.carrier, chi2.target.carrier

    mm = cotensor(m, mp)
    # chi [] M'
    t1 = chain_inclusion([n, b, mp])
    x1 = factor_left(
        t1, tensor(chi1.target.cod_cotensor.inclusion @ chi1.chi, mp.identity()) @ mm.inclusion)
    # N [] phi'
    j = factor_left(tensor(n.identity(), chi2.source.dom_cotensor.inclusion), t1)
    t2 = chain_inclusion([n, mp, bp])
    x2 = factor_left(
        t2, tensor(n.identity(), chi2.source.cod_cotensor.inclusion @ chi2.source.phi) @ j @ x1)
    # N [] chi' [] B'
    t3 = chain_inclusion([n, np_, bp, bp])
    x3 = factor_left(
        t3,
        tensor(n.identity(),
               tensor(chi2.target.cod_cotensor.inclusion @ chi2.chi, bp.identity())) @ t2 @ x2)
    # N [] N' [] m_B'
    j3 = factor_left(
        tensor(n.identity(), tensor(np_.identity(), chi2.dst.square.inclusion)), t3)
    t4 = chain_inclusion([n, np_, bp])
    x4 = factor_left(
        t4, tensor(n.identity(), tensor(np_.identity(), chi2.dst.mult)) @ j3 @ x3)
    nn = cotensor(n, np_)
    finish = factor_left(t4, tensor(nn.inclusion, bp.identity()) @ dst_cell.cod_cotensor.inclusion)
    return KlTwoCell(src_cell, dst_cell, finish.inverse() @ x4)


# -- embeddings ---------------------------------------------------------


def embed_phi(f: InternalFunctor) -> KlOneCell:
    """The 1-cell (C^f, (C [] f1) . lambda_A) carried by the twisted objects."""
    src, dst = f.src, f.dst
    a = src.morphisms
    c = src.objects
    carrier = Bicomodule(c, dst.objects, c.delta,
                         tensor(c.identity(), f.f0) @ c.delta)
    dom = cotensor(a, carrier)
    cod = cotensor(carrier, dst.morphisms)
    collapse = tensor(a.identity(), c.counit) @ dom.inclusion
    phi = factor_left(cod.inclusion, tensor(c.identity(), f.f1) @ a.lam @ collapse)
    return KlOneCell(src, dst, carrier, phi)


def embed_phi_2cell(alpha: NatTrans) -> KlTwoCell:
    """chi_alpha = (C^g [] alpha) . delta_C between the embedded functors."""
    f, g = alpha.source, alpha.target
    src = f.src
    c = src.objects
    x, y = embed_phi(f), embed_phi(g)
    chi = factor_left(y.cod_cotensor.inclusion,
                      tensor(c.identity(), alpha.mat) @ c.delta)
    return KlTwoCell(x, y, chi)


def phi_local_lift(chi: KlTwoCell, f: InternalFunctor, g: InternalFunctor) -> NatTrans:
    """Recover the natural transformation alpha with embed_phi_2cell(alpha) = chi."""
    if chi.source != embed_phi(f) or chi.target != embed_phi(g):
        raise NotPhiImage("2-cell is not carried by the embeddings of the given functors")
    c = f.src.objects
    b = f.dst.morphisms
    alpha = tensor(c.counit, b.identity()) @ chi.target.cod_cotensor.inclusion @ chi.chi
    return NatTrans(f, g, alpha)


# -- the mirror adapter for the 1-cell-reversed bicategory --------------


def swap_matrix(field, m: int, n: int) -> Matrix:
    """The flip V (x) W -> W (x) V on row-major bases."""
    z, o = field.zero, field.one
    rows = [[z] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            rows[j * m + i][i * n + j] = o
    return Matrix(field, rows, m * n, m * n)


def mirror_bicomodule(m: Bicomodule) -> Bicomodule:
    lam = swap_matrix(m.field, m.dim, m.right.dim) @ m.rho
    rho = swap_matrix(m.field, m.left.dim, m.dim) @ m.lam
    return Bicomodule(m.right, m.left, lam, rho)


def mirror_internal_category(ic: InternalCategory) -> InternalCategory:
    mir = mirror_bicomodule(ic.morphisms)
    sq = cotensor(mir, mir)
    cmp = factor_left(ic.square.inclusion,
                      swap_matrix(mir.field, mir.dim, mir.dim) @ sq.inclusion)
    return InternalCategory(ic.objects, mir, ic.mult @ cmp, ic.unit)


def mirror_functor(f: InternalFunctor) -> InternalFunctor:
    return InternalFunctor(mirror_internal_category(f.src), mirror_internal_category(f.dst),
                           f.f0, f.f1)


def mirror_nat(alpha: NatTrans) -> NatTrans:
    """2-cells reverse under the mirror: alpha: f => g becomes g* => f*."""
    return NatTrans(mirror_functor(alpha.target), mirror_functor(alpha.source), alpha.mat)


def embed_phi_hat(f: InternalFunctor) -> KlOneCell:
    """The 1-cell-reversed embedding, realized as embed_phi of the mirrored
    functor: its carrier is the mirror of ^f C and its structure map is
    (f1 [] C) . rho_A read in mirrored coordinates."""
    return embed_phi(mirror_functor(f))


def embed_phi_hat_2cell(alpha: NatTrans) -> KlTwoCell:
    return embed_phi_2cell(mirror_nat(alpha))


def embed_psi(f: Cofunctor) -> KlOneCell:
    """Cofunctors land in KL with carrier ^f D and phi = f1 up to the
    canonical ^f B ~ ^f D []_D B identification."""
    carrier = f.lifted_objects
    cod = cotensor(carrier, f.dst.morphisms)
    phi = factor_left(cod.inclusion, f.dst.morphisms.lam @ f.f1)
    return KlOneCell(f.src, f.dst, carrier, phi)


def embed_psi_2cell(alpha: Cotrans) -> KlTwoCell:
    x, y = embed_psi(alpha.source), embed_psi(alpha.target)
    chi = factor_left(y.cod_cotensor.inclusion, alpha.target.dst.morphisms.lam @ alpha.mat)
    return KlTwoCell(x, y, chi)
