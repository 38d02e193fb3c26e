import itertools

import pytest

from icat.errors import DomainMismatch, NotBiNatural, NotInvertible, NotIsomorphism, NotTAlgebra
from icat.fields import QQ
from icat.fixtures import (
    f2_trivial_category,
    f3_category,
    f3_ceiling_functor,
    f3_floor_adjunction,
    f3_monad_parts,
    unit_matrix,
)
from icat.intcat import (
    InternalFunctor,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nat,
    verify_functor,
    verify_internal_category,
    verify_nat,
    vertical_compose,
    whisker_left,
)
from icat.kleisli import (
    Adjunction,
    BiNatural,
    Comonad,
    Monad,
    Opmonad,
    TAlgebra,
    adjunction_to_binatural,
    binatural_to_adjunction,
    cokleisli_object,
    compare_kleisli_cokleisli,
    identity_comonad,
    identity_monad,
    identity_opmonad,
    kleisli_adjunction,
    kleisli_object,
    kleisli_object_via_wreath,
    mate_comonad,
    monad_of_adjunction,
    opmonad_kleisli,
    talg_pushforward,
    theta_correspondence,
    theta_inverse,
    verify_adjunction,
    verify_comonad,
    verify_monad,
    verify_opmonad,
    verify_talgebra,
)
from icat.matrix import Matrix


class TestAdjunction:
    def test_identity_adjunction(self):
        f3 = f3_category()
        ident = identity_functor(f3)
        one = identity_nat(ident)
        adj = Adjunction(ident, ident, NatTrans(ident, ident, one.mat),
                         NatTrans(ident, ident, one.mat))
        assert verify_adjunction(adj).ok

    def test_floor_ceiling(self):
        assert verify_adjunction(f3_floor_adjunction()).ok

    def test_scaled_counit_fails(self):
        adj = f3_floor_adjunction()
        two = QQ.from_int(2)
        bad = Adjunction(adj.l, adj.r, NatTrans(adj.eps.source, adj.eps.target,
                                                adj.eps.mat.scale(two)), adj.eta)
        rep = verify_adjunction(bad)
        assert not rep.ok
        assert any("triangle" in c.law for c in rep.failures)


class TestBiNatural:
    def test_identity_adjunction_theta_is_unit_comparison(self):
        f3 = f3_category()
        ident = identity_functor(f3)
        one = identity_nat(ident)
        adj = Adjunction(ident, ident, NatTrans(ident, ident, one.mat),
                         NatTrans(ident, ident, one.mat))
        th = adjunction_to_binatural(adj)
        assert verify_binatural_ok(th, adj)
        # domain C [] A and codomain A [] C are both canonically A; theta is
        # the composite comparison, hence invertible
        th.theta.inverse()

    def test_floor_adjunction_round_trips(self):
        adj = f3_floor_adjunction()
        th = adjunction_to_binatural(adj)
        assert verify_binatural_ok(th, adj)
        back = binatural_to_adjunction(adj.l, adj.r, th)
        assert back.eps.mat == adj.eps.mat and back.eta.mat == adj.eta.mat
        th2 = adjunction_to_binatural(back)
        assert th2.theta == th.theta and th2.theta_inv == th.theta_inv

    def test_kleisli_theta_is_identity(self):
        m = f3_monad_parts()
        adj = kleisli_adjunction(m)
        th = adjunction_to_binatural(adj)
        assert th.theta.is_identity()
        assert th.theta_inv.is_identity()

    def test_perturbed_theta_fails(self):
        from icat.kleisli import verify_binatural

        adj = f3_floor_adjunction()
        th = adjunction_to_binatural(adj)
        two = QQ.from_int(2)
        bad = BiNatural(th.theta.scale(two), th.theta_inv)
        rep = verify_binatural(bad, adj.l, adj.r)
        assert not rep.ok

    def test_non_invertible_rejected(self):
        adj = f3_floor_adjunction()
        th = adjunction_to_binatural(adj)
        with pytest.raises(NotInvertible):
            binatural_to_adjunction(adj.l, adj.r, BiNatural(th.theta, None))


def verify_binatural_ok(th, adj):
    from icat.kleisli import verify_binatural

    return verify_binatural(th, adj.l, adj.r).ok


class TestMonad:
    def test_f3_monad(self):
        assert verify_monad(f3_monad_parts()).ok

    def test_identity_monads(self):
        for ic in (f3_category(), f2_trivial_category()):
            assert verify_monad(identity_monad(ic)).ok

    def test_perturbed_unit_fails(self):
        m = f3_monad_parts()
        bad_eta = NatTrans(m.eta.source, m.eta.target, m.eta.mat.scale(QQ.from_int(2)))
        rep = verify_monad(Monad(m.t, m.mu, bad_eta))
        assert not rep.ok

    def test_monad_of_floor_adjunction_is_ceiling(self):
        adj = f3_floor_adjunction()
        m = monad_of_adjunction(adj)
        assert verify_monad(m).ok
        assert m.t.f0 == f3_ceiling_functor().f0
        assert m.t.f1 == f3_ceiling_functor().f1


class TestKleisliObject:
    def test_identity_monad_gives_isomorphic_copy(self):
        f3 = f3_category()
        kl = kleisli_object(identity_monad(f3))
        assert verify_internal_category(kl).ok
        assert kl.morphisms.dim == f3.morphisms.dim
        # the canonical comparison C [] A ~ A intertwines the structures
        from icat.bicomod import lambda_factor

        cmp = lambda_factor(f3.morphisms, f3.left_unit)
        assert cmp @ f3.unit == kl.unit
        from icat.bicomod import cotensor_map

        box = cotensor_map(cmp, cmp, f3.square, kl.square)
        assert cmp @ f3.mult == kl.mult @ box

    def test_f3_kleisli_is_4_dimensional(self):
        kl = kleisli_object(f3_monad_parts())
        assert kl.morphisms.dim == 4
        assert verify_internal_category(kl).ok

    def test_wreath_path_agrees(self):
        for m in (identity_monad(f3_category()), f3_monad_parts(),
                  identity_monad(f2_trivial_category())):
            assert kleisli_object(m) == kleisli_object_via_wreath(m)

    def test_kleisli_idempotence(self):
        # the Kleisli object of the identity monad on a Kleisli object is
        # isomorphic to it via the canonical comparison
        kl = kleisli_object(f3_monad_parts())
        kl2 = kleisli_object(identity_monad(kl))
        from icat.bicomod import cotensor_map, lambda_factor

        cmp = lambda_factor(kl.morphisms, kl.left_unit)
        box = cotensor_map(cmp, cmp, kl.square, kl2.square)
        assert cmp @ kl.mult == kl2.mult @ box
        assert cmp @ kl.unit == kl2.unit


class TestKleisliAdjunction:
    def test_adjunction_verifies_and_recovers_monad(self):
        for m in (identity_monad(f3_category()), f3_monad_parts(),
                  identity_monad(f2_trivial_category())):
            adj = kleisli_adjunction(m)
            assert verify_adjunction(adj).ok
            rec = monad_of_adjunction(adj)
            assert rec.t.f0 == m.t.f0 and rec.t.f1 == m.t.f1
            assert rec.mu.mat == m.mu.mat and rec.eta.mat == m.eta.mat

    def test_unit_is_monad_unit(self):
        m = f3_monad_parts()
        assert kleisli_adjunction(m).eta.mat == m.eta.mat


class TestTheta:
    def test_canonical_algebra_round_trip(self):
        m = f3_monad_parts()
        alg = TAlgebra(m.t, m.mu)
        assert verify_talgebra(m, alg).ok
        g = theta_correspondence(m, alg)
        assert verify_functor(g).ok
        back = theta_inverse(m, g)
        assert back.y == alg.y and back.sigma.mat == alg.sigma.mat

    def test_identity_monad_collapses(self):
        f3 = f3_category()
        im = identity_monad(f3)
        ident = identity_functor(f3)
        alg = TAlgebra(ident, NatTrans(ident, ident, identity_nat(ident).mat))
        g = theta_correspondence(im, alg)
        assert verify_functor(g).ok

    def test_not_talgebra_rejected(self):
        m = f3_monad_parts()
        bad = TAlgebra(m.t, NatTrans(m.mu.source, m.mu.target, m.mu.mat.scale(QQ.from_int(2))))
        with pytest.raises(NotTAlgebra):
            theta_correspondence(m, bad)

    def test_pushforward(self):
        m = f3_monad_parts()
        alg = TAlgebra(m.t, m.mu)
        pf = talg_pushforward(m.t, m, alg)
        assert verify_talgebra(m, pf).ok


class TestComonadAndMates:
    def test_identity_comonad(self):
        assert verify_comonad(identity_comonad(f3_category())).ok

    def test_mate_of_ceiling_monad(self):
        adj = f3_floor_adjunction()
        m = f3_monad_parts()
        mono_r = Monad(adj.r, m.mu, m.eta)
        g = mate_comonad(adj, mono_r)
        assert verify_comonad(g).ok

    def test_cokleisli_of_identity_comonad(self):
        f3 = f3_category()
        ckl = cokleisli_object(identity_comonad(f3))
        assert verify_internal_category(ckl).ok
        assert ckl.morphisms.dim == f3.morphisms.dim

    def test_cokleisli_of_mate_and_theta_isomorphism(self):
        adj = f3_floor_adjunction()
        m = f3_monad_parts()
        mono_r = Monad(adj.r, m.mu, m.eta)
        g = mate_comonad(adj, mono_r)
        ckl = cokleisli_object(g)
        assert verify_internal_category(ckl).ok
        assert ckl.morphisms.dim == 4
        th = adjunction_to_binatural(adj)
        rep = compare_kleisli_cokleisli(mono_r, g, th)
        assert rep.ok

    def test_perturbed_theta_is_not_isomorphism(self):
        adj = f3_floor_adjunction()
        m = f3_monad_parts()
        mono_r = Monad(adj.r, m.mu, m.eta)
        g = mate_comonad(adj, mono_r)
        th = adjunction_to_binatural(adj)
        bad = BiNatural(th.theta @ th.theta_inv @ th.theta, th.theta_inv)  # still invertible
        two = QQ.from_int(2)
        bad = BiNatural(th.theta.scale(two), th.theta_inv.scale(QQ.one / two))
        with pytest.raises(NotIsomorphism):
            compare_kleisli_cokleisli(mono_r, g, bad)

    def test_mate_requires_endo(self):
        m = f3_monad_parts()
        adj = kleisli_adjunction(m)
        with pytest.raises(DomainMismatch):
            mate_comonad(adj, m)


class TestOpmonad:
    def test_identity_opmonads(self):
        for ic in (f3_category(), f2_trivial_category()):
            om = identity_opmonad(ic)
            assert verify_opmonad(om).ok
            ta = opmonad_kleisli(om)
            assert ta.mult == ic.mult and ta.unit == ic.unit
            assert verify_internal_category(ta).ok

    def test_perturbed_opmonad_unit_fails(self):
        ic = f2_trivial_category()
        om = identity_opmonad(ic)
        from icat.cofun import Cotrans

        bad_eta = Cotrans(om.eta.source, om.eta.target, om.eta.mat.scale(QQ.from_int(2)))
        rep = verify_opmonad(Opmonad(om.t, om.mu, bad_eta))
        assert not rep.ok
