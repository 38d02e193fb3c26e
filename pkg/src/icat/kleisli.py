"""Adjunctions, bi-natural isomorphisms, monads, and the three Kleisli-type
constructions.

The Kleisli object of a monad (t, mu, eta) on (C, A) lives on the cotensor
C^t []_C A; the co-Kleisli object of a comonad on A []_C ^g C; the Kleisli
object of an opmonad on ^t A.  Multiplications follow the closed formulas,
with every implicit rebracketing realized as an explicit factorization, and
a second, independent construction path through the KL bicategory is kept
for cross-validation (`kleisli_object_via_wreath`).
"""

from __future__ import annotations

from functools import cached_property

from .bicomod import (
    Bicomodule,
    chain_inclusion,
    cotensor,
    cotensor_map,
    iterate_coaction,
    regular_bicomodule,
)
from .cofun import Cofunctor, Cotrans, co_horizontal, co_vertical, compose_cofunctors, identity_cotrans
from .errors import (
    DomainMismatch,
    NoFactorization,
    NotBiNatural,
    NotInvertible,
    NotIsomorphism,
    NotTAlgebra,
    ShapeMismatch,
)
from .intcat import (
    InternalCategory,
    InternalFunctor,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nat,
    iterate_mult,
    verify_functor,
    verify_internal_category,
    verify_nat,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from .klbicat import embed_phi, embed_phi_2cell
from .matrix import Matrix, factor_left, tensor
from .report import Report, flag_check, law_check


class Adjunction:
    """l -| r with counit eps: lr => 1 and unit eta: 1 => rl."""

    def __init__(self, l: InternalFunctor, r: InternalFunctor, eps: NatTrans, eta: NatTrans):
        if l.src != r.dst or l.dst != r.src:
            raise DomainMismatch("adjoint functors must run in opposite directions")
        if eps.source != compose_functors(l, r) or eps.target != identity_functor(l.dst):
            raise DomainMismatch("eps must be a 2-cell lr => 1")
        if eta.source != identity_functor(l.src) or eta.target != compose_functors(r, l):
            raise DomainMismatch("eta must be a 2-cell 1 => rl")
        self.l = l
        self.r = r
        self.eps = eps
        self.eta = eta

    def __eq__(self, other):
        if not isinstance(other, Adjunction):
            return NotImplemented
        return (self.l, self.r, self.eps, self.eta) == (other.l, other.r, other.eps, other.eta)


class BiNatural:
    """theta: D^r [] A -> B [] ^l C, optionally with its inverse."""

    def __init__(self, theta: Matrix, theta_inv: Matrix = None):
        self.theta = theta
        self.theta_inv = theta_inv

    def __eq__(self, other):
        if not isinstance(other, BiNatural):
            return NotImplemented
        return self.theta == other.theta and self.theta_inv == other.theta_inv


class Monad:
    def __init__(self, t: InternalFunctor, mu: NatTrans, eta: NatTrans):
        if t.src != t.dst:
            raise DomainMismatch("a monad lives on an endofunctor")
        if mu.source != compose_functors(t, t) or mu.target != t:
            raise DomainMismatch("mu must be a 2-cell tt => t")
        if eta.source != identity_functor(t.src) or eta.target != t:
            raise DomainMismatch("eta must be a 2-cell 1 => t")
        self.t = t
        self.mu = mu
        self.eta = eta

    def __eq__(self, other):
        if not isinstance(other, Monad):
            return NotImplemented
        return (self.t, self.mu, self.eta) == (other.t, other.mu, other.eta)


class TAlgebra:
    def __init__(self, y: InternalFunctor, sigma: NatTrans):
        self.y = y
        self.sigma = sigma

    def __eq__(self, other):
        if not isinstance(other, TAlgebra):
            return NotImplemented
        return self.y == other.y and self.sigma == other.sigma


class Comonad:
    def __init__(self, g: InternalFunctor, delta: NatTrans, eps: NatTrans):
        if g.src != g.dst:
            raise DomainMismatch("a comonad lives on an endofunctor")
        if delta.source != g or delta.target != compose_functors(g, g):
            raise DomainMismatch("delta must be a 2-cell g => gg")
        if eps.source != g or eps.target != identity_functor(g.src):
            raise DomainMismatch("eps must be a 2-cell g => 1")
        self.g = g
        self.delta = delta
        self.eps = eps


class Opmonad:
    def __init__(self, t: Cofunctor, mu: Cotrans, eta: Cotrans):
        if t.src != t.dst:
            raise DomainMismatch("an opmonad lives on an endo-cofunctor")
        if mu.source != compose_cofunctors(t, t) or mu.target != t:
            raise DomainMismatch("mu must be a cotransformation tt => t")
        if eta.target != t:
            raise DomainMismatch("eta must be a cotransformation 1 => t")
        self.t = t
        self.mu = mu
        self.eta = eta


def identity_monad(ic: InternalCategory) -> Monad:
    ident = identity_functor(ic)
    u = identity_nat(ident)
    return Monad(ident, NatTrans(ident, ident, u.mat), NatTrans(ident, ident, u.mat))


def identity_comonad(ic: InternalCategory) -> Comonad:
    ident = identity_functor(ic)
    u = identity_nat(ident)
    return Comonad(ident, NatTrans(ident, ident, u.mat), NatTrans(ident, ident, u.mat))


def identity_opmonad(ic: InternalCategory) -> Opmonad:
    from .cofun import identity_cofunctor

    t = identity_cofunctor(ic)
    return Opmonad(t, Cotrans(compose_cofunctors(t, t), t, ic.unit), Cotrans(t, t, ic.unit))


# -- verification -------------------------------------------------------


def verify_adjunction(a: Adjunction) -> Report:
    checks = [
        flag_check("adjunction.l", "left adjoint is a functor", verify_functor(a.l).ok),
        flag_check("adjunction.r", "right adjoint is a functor", verify_functor(a.r).ok),
        flag_check("adjunction.eps_natural", "counit is natural", verify_nat(a.eps).ok),
        flag_check("adjunction.eta_natural", "unit is natural", verify_nat(a.eta).ok),
    ]
    tri1 = vertical_compose(whisker_right(a.eps, a.l), whisker_left(a.l, a.eta))
    checks.append(law_check("adjunction.triangle_left", "eps l0 * l1 eta = l",
                            tri1.mat, identity_nat(a.l).mat))
    tri2 = vertical_compose(whisker_left(a.r, a.eps), whisker_right(a.eta, a.r))
    checks.append(law_check("adjunction.triangle_right", "r1 eps * eta r0 = r",
                            tri2.mat, identity_nat(a.r).mat))
    return Report("adjunction", tuple(checks))


def verify_monad(m: Monad) -> Report:
    checks = [
        flag_check("monad.functor", "underlying endofunctor", verify_functor(m.t).ok),
        flag_check("monad.mu_natural", "mu is natural", verify_nat(m.mu).ok),
        flag_check("monad.eta_natural", "eta is natural", verify_nat(m.eta).ok),
    ]
    assoc_l = vertical_compose(m.mu, whisker_left(m.t, m.mu))
    assoc_r = vertical_compose(m.mu, whisker_right(m.mu, m.t))
    checks.append(law_check("monad.assoc", "mu * t1 mu = mu * mu t0", assoc_l.mat, assoc_r.mat))
    ident = identity_nat(m.t).mat
    checks.append(law_check("monad.unit_left", "mu * t1 eta = t",
                            vertical_compose(m.mu, whisker_left(m.t, m.eta)).mat, ident))
    checks.append(law_check("monad.unit_right", "mu * eta t0 = t",
                            vertical_compose(m.mu, whisker_right(m.eta, m.t)).mat, ident))
    return Report("monad", tuple(checks))


def verify_comonad(g: Comonad) -> Report:
    checks = [
        flag_check("comonad.functor", "underlying endofunctor", verify_functor(g.g).ok),
        flag_check("comonad.delta_natural", "delta is natural", verify_nat(g.delta).ok),
        flag_check("comonad.eps_natural", "eps is natural", verify_nat(g.eps).ok),
    ]
    co_l = vertical_compose(whisker_left(g.g, g.delta), g.delta)
    co_r = vertical_compose(whisker_right(g.delta, g.g), g.delta)
    checks.append(law_check("comonad.coassoc", "g1 delta * delta = delta g0 * delta",
                            co_l.mat, co_r.mat))
    ident = identity_nat(g.g).mat
    checks.append(law_check("comonad.counit_left", "g1 eps * delta = g",
                            vertical_compose(whisker_left(g.g, g.eps), g.delta).mat, ident))
    checks.append(law_check("comonad.counit_right", "eps g0 * delta = g",
                            vertical_compose(whisker_right(g.eps, g.g), g.delta).mat, ident))
    return Report("comonad", tuple(checks))


def verify_opmonad(t: Opmonad) -> Report:
    from .cofun import verify_cofunctor, verify_cotrans

    checks = [
        flag_check("opmonad.cofunctor", "underlying endo-cofunctor", verify_cofunctor(t.t).ok),
        flag_check("opmonad.mu_conatural", "mu is a cotransformation", verify_cotrans(t.mu).ok),
        flag_check("opmonad.eta_conatural", "eta is a cotransformation", verify_cotrans(t.eta).ok),
    ]
    one = identity_cotrans(t.t)
    assoc_l = co_vertical(t.mu, co_horizontal(one, t.mu))
    assoc_r = co_vertical(t.mu, co_horizontal(t.mu, one))
    checks.append(law_check("opmonad.assoc", "mu *_ (t ._ mu) = mu *_ (mu ._ t)",
                            assoc_l.mat, assoc_r.mat))
    checks.append(law_check("opmonad.unit_left", "mu *_ (t ._ eta) = t",
                            co_vertical(t.mu, co_horizontal(one, t.eta)).mat, one.mat))
    checks.append(law_check("opmonad.unit_right", "mu *_ (eta ._ t) = t",
                            co_vertical(t.mu, co_horizontal(t.eta, one)).mat, one.mat))
    return Report("opmonad", tuple(checks))


# -- adjunctions vs bi-natural isomorphisms -----------------------------


def _binatural_spaces(l: InternalFunctor, r: InternalFunctor):
    """(dom, cod) cotensors: D^r []_C A and B []_D ^l C."""
    src, dst = l.src, l.dst
    d_r = Bicomodule(dst.objects, src.objects, dst.objects.delta,
                     tensor(dst.objects.identity(), r.f0) @ dst.objects.delta)
    l_c = Bicomodule(dst.objects, src.objects,
                     tensor(l.f0, src.objects.identity()) @ src.objects.delta,
                     src.objects.delta)
    dom = cotensor(d_r, src.morphisms)
    cod = cotensor(dst.morphisms, l_c)
    return d_r, l_c, dom, cod


def adjunction_to_binatural(a: Adjunction) -> BiNatural:
    """theta = (m_B [] C) . (eps [] l1 [] C) . (D^r [] rho), with the inverse
    (D^r [] m_A) . (D [] r1 [] eta) . (lambda [] C)."""
    l, r = a.l, a.r
    src, dst = l.src, l.dst
    aa, bb = src.morphisms, dst.morphisms
    _, _, dom, cod = _binatural_spaces(l, r)
    ic_c = src.objects.identity()
    id_d = dst.objects.identity()

    w = tensor(a.eps.mat, tensor(l.f1, ic_c)) @ tensor(id_d, aa.rho) @ dom.inclusion
    w2 = factor_left(tensor(dst.square.inclusion, ic_c), w)
    theta = factor_left(cod.inclusion, tensor(dst.mult, ic_c) @ w2)

    v = tensor(id_d, tensor(r.f1, a.eta.mat)) @ tensor(bb.lam, ic_c) @ cod.inclusion
    v2 = factor_left(tensor(id_d, src.square.inclusion), v)
    theta_inv = factor_left(dom.inclusion, tensor(id_d, src.mult) @ v2)

    if not (theta @ theta_inv).is_identity() or not (theta_inv @ theta).is_identity():
        raise NotBiNatural("the two composites of theta and its inverse are not identities")
    return BiNatural(theta, theta_inv)


def verify_binatural(th: BiNatural, l: InternalFunctor, r: InternalFunctor) -> Report:
    src, dst = l.src, l.dst
    aa, bb = src.morphisms, dst.morphisms
    d_r, l_c, dom, cod = _binatural_spaces(l, r)
    ic_c = src.objects.identity()
    id_d = dst.objects.identity()
    checks = []

    checks.append(law_check(
        "binatural.left_colinear", "lambda_cod . theta = (id (x) theta) . lambda_dom",
        cod.result.lam @ th.theta, tensor(id_d, th.theta) @ dom.result.lam))
    checks.append(law_check(
        "binatural.right_colinear", "rho_cod . theta = (theta (x) id) . rho_dom",
        cod.result.rho @ th.theta, tensor(th.theta, ic_c) @ dom.result.rho))

    try:
        b_r = Bicomodule(dst.objects, src.objects, bb.lam,
                         tensor(bb.identity(), r.f0) @ bb.rho)
        dom1 = cotensor(b_r, aa)
        t = chain_inclusion([bb, d_r, aa])
        x = factor_left(t, tensor(bb.rho, aa.identity()) @ dom1.inclusion)
        j = factor_left(tensor(bb.identity(), dom.inclusion), t)
        t2 = chain_inclusion([bb, bb, l_c])
        x2 = factor_left(t2, tensor(bb.identity(), cod.inclusion @ th.theta) @ j @ x)
        j2 = factor_left(tensor(dst.square.inclusion, ic_c), t2)
        path1 = factor_left(cod.inclusion, tensor(dst.mult, ic_c) @ j2 @ x2)

        t3 = chain_inclusion([d_r, aa, aa])
        x3 = factor_left(
            t3, tensor(id_d, tensor(r.f1, aa.identity())) @ tensor(bb.lam, aa.identity())
            @ dom1.inclusion)
        j3 = factor_left(tensor(id_d, src.square.inclusion), t3)
        path2 = th.theta @ factor_left(dom.inclusion, tensor(id_d, src.mult) @ j3 @ x3)
        checks.append(law_check(
            "binatural.covariant",
            "(m_B [] C) . (B [] theta) . (rho [] A) = theta . (D [] m_A) . (D [] r1 [] A) . (lambda [] A)",
            path1, path2))
    except NoFactorization as e:
        checks.append(flag_check("binatural.covariant", "first diagram", False,
                                 {"reason": str(e)}))

    try:
        t4 = chain_inclusion([d_r, aa, aa])
        j4 = factor_left(tensor(dom.inclusion, aa.identity()), t4)
        v5 = tensor(cod.inclusion @ th.theta, aa.rho) @ j4
        l_id = identity_nat(l).mat
        v6 = tensor(bb.identity(), tensor(l_id, tensor(l.f1, ic_c))) @ v5
        t5 = chain_inclusion([bb, bb, bb, l_c])
        x5 = factor_left(t5, v6)
        j5 = factor_left(tensor(chain_inclusion([bb, bb, bb]), ic_c), t5)
        m2 = iterate_mult(dst, 2)
        path3 = factor_left(cod.inclusion, tensor(m2, ic_c) @ j5 @ x5)

        j6 = factor_left(tensor(id_d, src.square.inclusion), t4)
        path4 = th.theta @ factor_left(dom.inclusion, tensor(id_d, src.mult) @ j6)
        checks.append(law_check(
            "binatural.contravariant",
            "(m2_B [] C) . (B [] l [] l1 [] C) . (theta [] rho) = theta . (D^r [] m_A)",
            path3, path4))
    except NoFactorization as e:
        checks.append(flag_check("binatural.contravariant", "second diagram", False,
                                 {"reason": str(e)}))

    if th.theta_inv is not None:
        checks.append(law_check("binatural.inverse_left", "theta . theta_inv = id",
                                th.theta @ th.theta_inv,
                                Matrix.identity(th.theta.field, th.theta.nrows)))
        checks.append(law_check("binatural.inverse_right", "theta_inv . theta = id",
                                th.theta_inv @ th.theta,
                                Matrix.identity(th.theta.field, th.theta.ncols)))
    return Report("bi-natural map", tuple(checks))


def binatural_to_adjunction(l: InternalFunctor, r: InternalFunctor, th: BiNatural) -> Adjunction:
    """eps = m_B . (B [] l) . theta . (D [] r) . delta_D and
    eta = m_A . (r [] A) . theta_inv . (l [] C) . delta_C."""
    if th.theta_inv is None or not (th.theta @ th.theta_inv).is_identity() \
            or not (th.theta_inv @ th.theta).is_identity():
        raise NotInvertible("theta must come with a two-sided inverse")
    rep = verify_binatural(th, l, r)
    if not rep.ok:
        raise NotBiNatural("theta fails the bi-naturality diagrams")
    src, dst = l.src, l.dst
    _, _, dom, cod = _binatural_spaces(l, r)
    r_id = identity_nat(r).mat
    l_id = identity_nat(l).mat

    s1 = factor_left(dom.inclusion, tensor(dst.objects.identity(), r_id) @ dst.objects.delta)
    s3 = tensor(dst.morphisms.identity(), l_id) @ cod.inclusion @ th.theta @ s1
    eps_mat = dst.mult @ factor_left(dst.square.inclusion, s3)
    eps = NatTrans(compose_functors(l, r), identity_functor(dst), eps_mat)

    t1 = factor_left(cod.inclusion, tensor(l_id, src.objects.identity()) @ src.objects.delta)
    t3 = tensor(r_id, src.morphisms.identity()) @ dom.inclusion @ th.theta_inv @ t1
    eta_mat = src.mult @ factor_left(src.square.inclusion, t3)
    eta = NatTrans(identity_functor(src), compose_functors(r, l), eta_mat)
    return Adjunction(l, r, eps, eta)


def monad_of_adjunction(a: Adjunction) -> Monad:
    """(rl, r1 eps l0, eta)."""
    t = compose_functors(a.r, a.l)
    mu = whisker_left(a.r, whisker_right(a.eps, a.l))
    return Monad(t, mu, a.eta)


# -- Kleisli objects ----------------------------------------------------


def twisted_objects(m: Monad) -> Bicomodule:
    """C^t: the object comonoid with its right coaction twisted by t0."""
    c = m.t.src.objects
    return Bicomodule(c, c, c.delta, tensor(c.identity(), m.t.f0) @ c.delta)


def kleisli_object(m: Monad) -> InternalCategory:
    ic = m.t.src
    c = ic.objects
    aa = ic.morphisms
    ia, icd = aa.identity(), c.identity()

    at_cot = cotensor(twisted_objects(m), aa)
    a_t = at_cot.result
    u_t = factor_left(at_cot.inclusion, tensor(icd, m.eta.mat) @ c.delta)

    a_twist = Bicomodule(c, c, aa.lam, tensor(ia, m.t.f0) @ aa.rho)
    dom = cotensor(a_t, a_t)
    big = tensor(at_cot.inclusion, at_cot.inclusion) @ dom.inclusion
    contracted = tensor(icd, tensor(ia, tensor(c.counit, ia))) @ big
    t_chain = chain_inclusion([twisted_objects(m), a_twist, aa])
    x = factor_left(t_chain, contracted)

    v = tensor(c.delta, Matrix.identity(aa.field, aa.dim ** 2)) @ t_chain @ x
    v2 = tensor(icd, tensor(m.mu.mat, tensor(m.t.f1, ia))) @ v
    x2 = factor_left(tensor(icd, chain_inclusion([aa, aa, aa])), v2)
    m_t = factor_left(at_cot.inclusion, tensor(icd, iterate_mult(ic, 2)) @ x2)
    return InternalCategory(c, a_t, m_t, u_t)


def kleisli_object_via_wreath(m: Monad) -> InternalCategory:
    """Independent construction path: push the monad through the functor
    embedding into the KL bicategory and form the wreath product there."""
    ic = m.t.src
    c = ic.objects
    aa = ic.morphisms
    ia, icd = aa.identity(), c.identity()
    cell = embed_phi(m.t)
    chi_mu = embed_phi_2cell(m.mu)
    chi_eta = embed_phi_2cell(m.eta)

    ct = cell.carrier
    at_cot = cell.cod_cotensor  # C^t [] A, the carrier of the wreath product
    a_t = at_cot.result
    u_t = chi_eta.chi

    ctt = Bicomodule(c, c, c.delta,
                     tensor(icd, m.t.f0 @ m.t.f0) @ c.delta)
    a_twist = Bicomodule(c, c, aa.lam, tensor(ia, m.t.f0) @ aa.rho)

    dom = cotensor(a_t, a_t)
    big = tensor(at_cot.inclusion, at_cot.inclusion) @ dom.inclusion
    contracted = tensor(icd, tensor(ia, tensor(c.counit, ia))) @ big
    t1 = chain_inclusion([ct, a_twist, aa])
    x1 = factor_left(t1, contracted)

    # middle slot A^t ~ A [] C^t, then phi_t, landing in C^t [] C^t [] A [] A
    expand = tensor(icd, tensor(aa.rho, ia)) @ t1 @ x1
    t2 = chain_inclusion([ct, aa, ct, aa])
    x2 = factor_left(t2, expand)
    j = factor_left(tensor(icd, tensor(cell.dom_cotensor.inclusion, ia)), t2)
    applied = tensor(icd, tensor(at_cot.inclusion @ cell.phi, ia)) @ j @ x2
    t3 = chain_inclusion([ct, ct, aa, aa])
    x3 = factor_left(t3, applied)

    # contract C^t [] C^t to C^(tt), then multiply the two A's
    shrink = tensor(icd, tensor(c.counit, Matrix.identity(aa.field, aa.dim ** 2))) @ t3 @ x3
    t4 = chain_inclusion([ctt, aa, aa])
    x4 = factor_left(t4, shrink)
    j2 = factor_left(tensor(icd, ic.square.inclusion), t4)
    collapsed = tensor(icd, ic.mult) @ j2 @ x4
    t5 = cotensor(ctt, aa)
    x5 = factor_left(t5.inclusion, collapsed)

    # chi_mu [] A, then the final multiplication
    lifted = tensor(at_cot.inclusion @ chi_mu.chi, ia) @ t5.inclusion @ x5
    t6 = chain_inclusion([ct, aa, aa])
    x6 = factor_left(t6, lifted)
    j3 = factor_left(tensor(icd, ic.square.inclusion), t6)
    m_t = factor_left(at_cot.inclusion, tensor(icd, ic.mult) @ j3 @ x6)
    return InternalCategory(c, a_t, m_t, u_t)


def kleisli_adjunction(m: Monad) -> Adjunction:
    ic = m.t.src
    c, aa = ic.objects, ic.morphisms
    ia, icd = aa.identity(), c.identity()
    kl = kleisli_object(m)
    at_cot = cotensor(twisted_objects(m), aa)

    r1 = ic.mult @ factor_left(ic.square.inclusion,
                               tensor(m.mu.mat, m.t.f1) @ at_cot.inclusion)
    r = InternalFunctor(kl, ic, m.t.f0, r1)

    lam2 = iterate_coaction(aa, 2)
    w = tensor(icd, tensor(m.eta.mat, ia)) @ lam2
    w2 = factor_left(tensor(icd, ic.square.inclusion), w)
    l1 = factor_left(at_cot.inclusion, tensor(icd, ic.mult) @ w2)
    l = InternalFunctor(ic, kl, icd, l1)

    eps_mat = factor_left(at_cot.inclusion, tensor(icd, identity_nat(m.t).mat) @ c.delta)
    eps = NatTrans(compose_functors(l, r), identity_functor(kl), eps_mat)
    eta = NatTrans(identity_functor(ic), compose_functors(r, l), m.eta.mat)
    return Adjunction(l, r, eps, eta)


# -- the Theta correspondence -------------------------------------------


def verify_talgebra(m: Monad, alg: TAlgebra) -> Report:
    checks = [
        flag_check("talgebra.y", "underlying functor", verify_functor(alg.y).ok),
        flag_check("talgebra.sigma_natural", "sigma is natural", verify_nat(alg.sigma).ok),
    ]
    checks.append(law_check(
        "talgebra.unit", "sigma * y1 eta = y",
        vertical_compose(alg.sigma, whisker_left(alg.y, m.eta)).mat,
        identity_nat(alg.y).mat))
    checks.append(law_check(
        "talgebra.assoc", "sigma * y1 mu = sigma * sigma t0",
        vertical_compose(alg.sigma, whisker_left(alg.y, m.mu)).mat,
        vertical_compose(alg.sigma, whisker_right(alg.sigma, m.t)).mat))
    return Report("t-algebra", tuple(checks))


def theta_correspondence(m: Monad, alg: TAlgebra) -> InternalFunctor:
    """Theta(y, sigma) = (y0, m_B . (sigma [] y1)) out of the Kleisli object."""
    if not verify_talgebra(m, alg).ok:
        raise NotTAlgebra("the pair (y, sigma) fails the algebra laws")
    ic = m.t.src
    kl = kleisli_object(m)
    dst = alg.y.dst
    at_cot = cotensor(twisted_objects(m), ic.morphisms)
    f1 = dst.mult @ factor_left(dst.square.inclusion,
                                tensor(alg.sigma.mat, alg.y.f1) @ at_cot.inclusion)
    return InternalFunctor(kl, dst, alg.y.f0, f1)


def theta_inverse(m: Monad, g: InternalFunctor) -> TAlgebra:
    """Theta^(-1)(g) = (g l, g1 eps) for g out of the Kleisli object."""
    adj = kleisli_adjunction(m)
    if g.src != adj.l.dst:
        raise DomainMismatch("g must have the Kleisli object as its source")
    y = compose_functors(g, adj.l)
    sigma = NatTrans(compose_functors(y, m.t), y, g.f1 @ adj.eps.mat)
    return TAlgebra(y, sigma)


def talg_pushforward(f: InternalFunctor, m: Monad, alg: TAlgebra) -> TAlgebra:
    """f^t(y, sigma) = (f y, f1 sigma)."""
    if f.src != alg.y.dst:
        raise DomainMismatch("pushforward functor must start at the algebra's target")
    return TAlgebra(compose_functors(f, alg.y), whisker_left(f, alg.sigma))


# -- comonads and the co-Kleisli object ---------------------------------


def lifted_objects_of_comonad(g: Comonad) -> Bicomodule:
    """^g C: the object comonoid with its left coaction twisted by g0."""
    c = g.g.src.objects
    return Bicomodule(c, c, tensor(g.g.f0, c.identity()) @ c.delta, c.delta)


def cokleisli_object(g: Comonad) -> InternalCategory:
    ic = g.g.src
    c, aa = ic.objects, ic.morphisms
    ia, icd = aa.identity(), c.identity()

    ga_cot = cotensor(aa, lifted_objects_of_comonad(g))
    ga = ga_cot.result
    u_g = factor_left(ga_cot.inclusion, tensor(g.eps.mat, icd) @ c.delta)

    a_twist = Bicomodule(c, c, tensor(g.g.f0, ia) @ aa.lam, aa.rho)
    dom = cotensor(ga, ga)
    big = tensor(ga_cot.inclusion, ga_cot.inclusion) @ dom.inclusion
    contracted = tensor(ia, tensor(c.counit, tensor(ia, icd))) @ big
    t_chain = chain_inclusion([aa, a_twist, lifted_objects_of_comonad(g)])
    x = factor_left(t_chain, contracted)

    v = tensor(Matrix.identity(aa.field, aa.dim ** 2), c.delta) @ t_chain @ x
    v2 = tensor(ia, tensor(g.g.f1, tensor(g.delta.mat, icd))) @ v
    x2 = factor_left(tensor(chain_inclusion([aa, aa, aa]), icd), v2)
    m_g = factor_left(ga_cot.inclusion, tensor(iterate_mult(ic, 2), icd) @ x2)
    return InternalCategory(c, ga, m_g, u_g)


def mate_comonad(a: Adjunction, m: Monad) -> Comonad:
    """The comonad structure on l mated to a monad structure on r = t."""
    if a.l.src != a.l.dst:
        raise DomainMismatch("mates need an adjunction of endofunctors")
    if m.t != a.r:
        raise DomainMismatch("the monad must live on the right adjoint")
    l, r = a.l, a.r
    iota, sigma = a.eta, a.eps
    ll = compose_functors(l, l)
    a1 = whisker_left(l, iota)
    a2 = whisker_left(compose_functors(l, r), whisker_right(iota, l))
    a3 = whisker_left(l, whisker_right(m.mu, ll))
    a4 = whisker_right(sigma, ll)
    delta = vertical_compose(a4, vertical_compose(a3, vertical_compose(a2, a1)))
    eps = vertical_compose(sigma, whisker_left(l, m.eta))
    return Comonad(l, delta, eps)


def compare_kleisli_cokleisli(m: Monad, g: Comonad, th: BiNatural) -> Report:
    """Certify theta: A_r -> lA as an isomorphism of internal categories."""
    kl = kleisli_object(m)
    ckl = cokleisli_object(g)
    checks = []
    if th.theta_inv is None or not (th.theta @ th.theta_inv).is_identity() \
            or not (th.theta_inv @ th.theta).is_identity():
        checks.append(flag_check("kleisli_iso.invertible", "theta is invertible", False))
        raise NotIsomorphism(Report("Kleisli vs co-Kleisli", tuple(checks)))
    checks.append(flag_check("kleisli_iso.invertible", "theta is invertible", True))
    checks.append(law_check("kleisli_iso.unit", "theta . u_t = u_g",
                            th.theta @ kl.unit, ckl.unit))
    try:
        box = cotensor_map(th.theta, th.theta, kl.square, ckl.square)
        checks.append(law_check("kleisli_iso.mult", "theta . m_t = m_g . (theta [] theta)",
                                th.theta @ kl.mult, ckl.mult @ box))
    except NoFactorization as e:
        checks.append(flag_check("kleisli_iso.mult", "theta . m_t = m_g . (theta [] theta)",
                                 False, {"reason": str(e)}))
    report = Report("Kleisli vs co-Kleisli", tuple(checks))
    if not report.ok:
        raise NotIsomorphism(report)
    return report


# -- opmonads ------------------------------------------------------------


def opmonad_kleisli(t: Opmonad) -> InternalCategory:
    """The internal category on ^t A with m = m2 . (mu [] t1 [] A) . (lambda [] lambda)
    and unit the opmonad's own unit."""
    ic = t.t.src
    c, aa = ic.objects, ic.morphisms
    ia, icd = aa.identity(), c.identity()

    ta = Bicomodule(c, c, tensor(t.t.f0, ia) @ aa.lam, aa.rho)
    dom = cotensor(ta, ta)
    spread = tensor(aa.lam, aa.lam) @ dom.inclusion
    mid = factor_left(tensor(icd, tensor(t.t.domain_cotensor.inclusion, ia)), spread)
    v = tensor(t.mu.mat, tensor(t.t.f1, ia)) @ mid
    x = factor_left(chain_inclusion([aa, aa, aa]), v)
    m_t = iterate_mult(ic, 2) @ x
    return InternalCategory(c, ta, m_t, t.eta.mat)
