"""Internal cofunctors and natural cotransformations.

A cofunctor (C, A) -> (D, B) lifts along a comonoid map f0: D -> C: its
morphism part f1 is defined on the cotensor A []_C (f0-induced D) and lands
in the f0-induced B.  All the displayed rebracketing isomorphisms are
realized as explicit invertible matrices through `factor_left`, never as
silent identifications.
"""

from __future__ import annotations

from functools import cached_property

from .bicomod import (
    Bicomodule,
    chain_inclusion,
    cotensor,
    is_comonoid_map,
    regular_bicomodule,
    right_counit_collapse,
)
from .errors import DomainMismatch, NoFactorization, ShapeMismatch
from .intcat import InternalCategory
from .matrix import Matrix, factor_left, tensor
from .report import Report, flag_check, law_check


def induced_left_comodule(f0: Matrix, c_target, m: Bicomodule) -> Bicomodule:
    """The bicomodule m with its left coaction pushed along f0 (no law check)."""
    return Bicomodule(c_target, m.right, tensor(f0, m.identity()) @ m.lam, m.rho)


class Cofunctor:
    def __init__(self, src: InternalCategory, dst: InternalCategory, f0: Matrix, f1: Matrix):
        if (f0.nrows, f0.ncols) != (src.objects.dim, dst.objects.dim):
            raise ShapeMismatch("cofunctor f0 must be a dim C x dim D matrix (it maps D -> C)")
        self.src = src
        self.dst = dst
        self.f0 = f0
        self.f1 = f1
        if (f1.nrows, f1.ncols) != (dst.morphisms.dim, self.domain_cotensor.dim):
            raise ShapeMismatch("cofunctor f1 must be a dim B x dim(A [] fD) matrix")

    @cached_property
    def lifted_objects(self) -> Bicomodule:
        """^f D: the target objects as a C-D-bicomodule via f0."""
        d = self.dst.objects
        return induced_left_comodule(self.f0, self.src.objects, regular_bicomodule(d))

    @cached_property
    def lifted_morphisms(self) -> Bicomodule:
        """^f B: the target morphisms as a C-D-bicomodule via f0."""
        return induced_left_comodule(self.f0, self.src.objects, self.dst.morphisms)

    @cached_property
    def domain_cotensor(self):
        return cotensor(self.src.morphisms, self.lifted_objects)

    def __eq__(self, other):
        if not isinstance(other, Cofunctor):
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
        return f"Cofunctor({self.src!r} -> {self.dst!r})"


def identity_cofunctor(ic: InternalCategory) -> Cofunctor:
    """f0 = id and f1 the canonical collapse A []_C C -> A."""
    f1 = right_counit_collapse(ic.morphisms, ic.right_unit)
    return Cofunctor(ic, ic, ic.objects.identity(), f1)


class Cotrans:
    """alpha: f => g between cofunctors, carried by a matrix ^f D -> ^g B."""

    def __init__(self, source: Cofunctor, target: Cofunctor, mat: Matrix):
        if source.src != target.src or source.dst != target.dst:
            raise DomainMismatch("cotransformation needs parallel cofunctors")
        if (mat.nrows, mat.ncols) != (source.dst.morphisms.dim, source.dst.objects.dim):
            raise ShapeMismatch("cotransformation must be a dim B x dim D matrix")
        self.source = source
        self.target = target
        self.mat = mat

    def __eq__(self, other):
        if not isinstance(other, Cotrans):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)


def identity_cotrans(f: Cofunctor) -> Cotrans:
    return Cotrans(f, f, f.dst.unit)


def verify_cofunctor(f: Cofunctor) -> Report:
    src, dst = f.src, f.dst
    a, b = src.morphisms, dst.morphisms
    c, d = src.objects, dst.objects
    checks = []
    checks.append(flag_check(
        "cofunctor.f0_comonoid_map", "delta_C . f0 = (f0 (x) f0) . delta_D and counit_C . f0 = counit_D",
        is_comonoid_map(f.f0, d, c)))

    dom = f.domain_cotensor
    fb = f.lifted_morphisms
    checks.append(law_check(
        "cofunctor.f1_left_colinear", "lambda_fB . f1 = (id (x) f1) . lambda_dom",
        fb.lam @ f.f1, tensor(c.identity(), f.f1) @ dom.result.lam))
    checks.append(law_check(
        "cofunctor.f1_right_colinear", "rho_B . f1 = (f1 (x) id) . rho_dom",
        fb.rho @ f.f1, tensor(f.f1, d.identity()) @ dom.result.rho))

    try:
        top, bottom = _cofunctor_mult_square(f)
        checks.append(law_check(
            "cofunctor.multiplicative",
            "m_B . (f1 [] id) . (A [] lambda_B) . (A [] f1) = f1 . (m_A [] id)",
            top, bottom))
    except NoFactorization as e:
        checks.append(flag_check("cofunctor.multiplicative", "multiplication square", False,
                                 {"reason": str(e)}))

    try:
        unit_map = factor_left(dom.inclusion, tensor(src.unit @ f.f0, d.identity()) @ d.delta)
        checks.append(law_check(
            "cofunctor.unital", "f1 . (u_A [] id) = u_B", f.f1 @ unit_map, dst.unit))
    except NoFactorization as e:
        checks.append(flag_check("cofunctor.unital", "f1 . (u_A [] id) = u_B", False,
                                 {"reason": str(e)}))
    return Report("cofunctor", tuple(checks))


def _cofunctor_mult_square(f: Cofunctor):
    src, dst = f.src, f.dst
    a, b = src.morphisms, dst.morphisms
    ia, ib = a.identity(), b.identity()
    idd = dst.objects.identity()
    fd = f.lifted_objects
    dom = f.domain_cotensor

    t = chain_inclusion([a, a, fd])
    # top path: apply f1 to the last two slots, expand B along lambda, apply
    # f1 to the first two slots, multiply
    j = factor_left(tensor(ia, dom.inclusion), t)
    into_afb = factor_left(cotensor(a, f.lifted_morphisms).inclusion, tensor(ia, f.f1) @ j)
    afb_incl = cotensor(a, f.lifted_morphisms).inclusion
    expanded = tensor(ia, b.lam) @ afb_incl @ into_afb
    t2 = chain_inclusion([a, fd, b])
    y = factor_left(t2, expanded)
    j2 = factor_left(tensor(dom.inclusion, ib), t2)
    into_bb = factor_left(dst.square.inclusion, tensor(f.f1, ib) @ j2 @ y)
    top = dst.mult @ into_bb
    # bottom path: multiply the first two slots, then f1
    j3 = factor_left(tensor(src.square.inclusion, idd), t)
    w = factor_left(dom.inclusion, tensor(src.mult, idd) @ j3)
    bottom = f.f1 @ w
    return top, bottom


def verify_cotrans(alpha: Cotrans) -> Report:
    f, g = alpha.source, alpha.target
    src, dst = f.src, f.dst
    b = dst.morphisms
    c, d = src.objects, dst.objects
    checks = []

    fd = f.lifted_objects
    gb = g.lifted_morphisms
    checks.append(law_check(
        "cotrans.left_colinear", "(g0 (x) id) . lambda_B . alpha = (id (x) alpha) . lambda_fD",
        gb.lam @ alpha.mat, tensor(c.identity(), alpha.mat) @ fd.lam))
    checks.append(law_check(
        "cotrans.right_colinear", "rho_B . alpha = (alpha (x) id) . delta_D",
        b.rho @ alpha.mat, tensor(alpha.mat, d.identity()) @ d.delta))

    try:
        top, bottom = _cotrans_pentagon(alpha)
        checks.append(law_check(
            "cotrans.conaturality",
            "m_B . (g1 [] id) . (A [] lambda) . (A [] alpha) = m_B . (alpha [] id) . lambda . f1",
            top, bottom))
    except NoFactorization as e:
        checks.append(flag_check("cotrans.conaturality", "co-naturality diagram", False,
                                 {"reason": str(e)}))
    return Report("cotransformation", tuple(checks))


def _cotrans_pentagon(alpha: Cotrans):
    f, g = alpha.source, alpha.target
    src, dst = f.src, f.dst
    a, b = src.morphisms, dst.morphisms
    ia, ib = a.identity(), b.identity()

    dom = f.domain_cotensor
    # top: A [] alpha, then expand along lambda_B, then g1 [] B, then m_B
    a_gb = cotensor(a, g.lifted_morphisms)
    x = factor_left(a_gb.inclusion, tensor(ia, alpha.mat) @ dom.inclusion)
    expanded = tensor(ia, b.lam) @ a_gb.inclusion @ x
    t = chain_inclusion([a, g.lifted_objects, b])
    y = factor_left(t, expanded)
    j = factor_left(tensor(g.domain_cotensor.inclusion, ib), t)
    into_bb = factor_left(dst.square.inclusion, tensor(g.f1, ib) @ j @ y)
    top = dst.mult @ into_bb
    # bottom: f1, expand along lambda_B, alpha [] B, m_B
    d_b = cotensor(regular_bicomodule(dst.objects), b)
    k = factor_left(d_b.inclusion, b.lam @ f.f1)
    into_bb2 = factor_left(dst.square.inclusion, tensor(alpha.mat, ib) @ d_b.inclusion @ k)
    bottom = dst.mult @ into_bb2
    return top, bottom


def compose_cofunctors(h: Cofunctor, f: Cofunctor) -> Cofunctor:
    """h composed after f; object part f0 . h0, morphism part the three-step
    composite through A [] fD [] hD'."""
    if f.dst != h.src:
        raise DomainMismatch("cofunctors are not composable")
    src = f.src
    a = src.morphisms
    ia = a.identity()
    dprime = h.dst.objects
    idp = dprime.identity()

    f0_new = f.f0 @ h.f0
    lifted = induced_left_comodule(f0_new, src.objects, regular_bicomodule(dprime))
    dom_new = cotensor(a, lifted)
    hd = h.lifted_objects  # ^h D' over D-D'
    t = chain_inclusion([a, f.lifted_objects, hd])
    expand = factor_left(t, tensor(ia, tensor(h.f0, idp) @ dprime.delta) @ dom_new.inclusion)
    j = factor_left(tensor(f.domain_cotensor.inclusion, idp), t)
    b_hd = cotensor(h.src.morphisms, hd)
    y = factor_left(b_hd.inclusion, tensor(f.f1, idp) @ j @ expand)
    f1_new = h.f1 @ y
    return Cofunctor(src, h.dst, f0_new, f1_new)


def co_vertical(beta: Cotrans, alpha: Cotrans) -> Cotrans:
    """beta *_ alpha = m_B . (beta [] B) . lambda . alpha."""
    if beta.source != alpha.target:
        raise DomainMismatch("co_vertical needs beta.source == alpha.target")
    dst = alpha.source.dst
    b = dst.morphisms
    d_b = cotensor(regular_bicomodule(dst.objects), b)
    k = factor_left(d_b.inclusion, b.lam @ alpha.mat)
    into_bb = factor_left(dst.square.inclusion, tensor(beta.mat, b.identity()) @ d_b.inclusion @ k)
    return Cotrans(alpha.source, beta.target, dst.mult @ into_bb)


def co_horizontal(beta: Cotrans, alpha: Cotrans) -> Cotrans:
    """beta ._ alpha: the five-step composite ^(hf) D' -> ... -> ^(kg) B'."""
    f, g = alpha.source, alpha.target
    h, k = beta.source, beta.target
    if f.dst != h.src:
        raise DomainMismatch("co_horizontal needs matching middle category")
    dprime = h.dst.objects
    bprime = h.dst.morphisms
    idp, ibp = dprime.identity(), bprime.identity()
    ib = f.dst.morphisms.identity()

    hf = compose_cofunctors(h, f)
    kg = compose_cofunctors(k, g)
    # step 1: ^(hf) D' ~ ^f D []_D ^h D'
    pair = cotensor(f.lifted_objects, h.lifted_objects)
    x = factor_left(pair.inclusion, tensor(h.f0, idp) @ dprime.delta)
    # step 2: alpha [] beta
    gb_kb = cotensor(g.lifted_morphisms, induced_left_comodule(
        k.f0, k.src.objects, k.dst.morphisms))
    y = factor_left(gb_kb.inclusion, tensor(alpha.mat, beta.mat) @ pair.inclusion @ x)
    # step 3: expand the second factor along lambda_B'
    expanded = tensor(ib, bprime.lam) @ gb_kb.inclusion @ y
    t = chain_inclusion([g.lifted_morphisms, k.lifted_objects, bprime])
    z = factor_left(t, expanded)
    # step 4: k1 on the first two slots
    j = factor_left(tensor(k.domain_cotensor.inclusion, ibp), t)
    into_bb = factor_left(h.dst.square.inclusion, tensor(k.f1, ibp) @ j @ z)
    # step 5: multiply
    return Cotrans(hf, kg, h.dst.mult @ into_bb)
