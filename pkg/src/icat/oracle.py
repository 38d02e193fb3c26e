"""Classical finite categories and monads: the brute-force oracle.

Everything here is plain set-level bookkeeping (objects, morphism lists,
composition tables), linearized into the exact engine through grouplike
coalgebras.  The single load-bearing property: the internal Kleisli
construction of a linearized monad must match the linearized classical
Kleisli category under a basis bijection.
"""

from __future__ import annotations

import itertools

from .bicomod import Bicomodule
from .errors import LawViolation, Mismatch
from .fields import QQ
from .intcat import InternalCategory, InternalFunctor, NatTrans
from .matrix import Matrix

class FiniteCategory:
    """Objects and morphisms by name, with dom/cod maps, a composition table
    keyed by (after, first), and an identity assignment."""

    def __init__(self, objects, morphisms, compose, identities):
        self.objects = list(objects)
        self.morphisms = dict(morphisms)      # name -> (dom, cod)
        self.compose = dict(compose)          # (g, f) -> g . f   for cod f = dom g
        self.identities = dict(identities)    # object -> identity morphism
        self._check()

    def _check(self):
        for name, (dom, cod) in self.morphisms.items():
            if dom not in self.objects or cod not in self.objects:
                raise LawViolation(f"morphism {name} has unknown endpoints")
        for obj, ident in self.identities.items():
            dom, cod = self.morphisms[ident]
            if dom != obj or cod != obj:
                raise LawViolation(f"identity of {obj} is not an endomorphism")
        for g, f in itertools.product(self.morphisms, repeat=2):
            f_dom, f_cod = self.morphisms[f]
            g_dom, g_cod = self.morphisms[g]
            if f_cod == g_dom:
                if (g, f) not in self.compose:
                    raise LawViolation(f"missing composite {g} . {f}")
                c_dom, c_cod = self.morphisms[self.compose[(g, f)]]
                if (c_dom, c_cod) != (f_dom, g_cod):
                    raise LawViolation(f"composite {g} . {f} has wrong endpoints")
            elif (g, f) in self.compose:
                raise LawViolation(f"table defines non-composable {g} . {f}")
        for f, (dom, cod) in self.morphisms.items():
            if self.compose[(f, self.identities[dom])] != f:
                raise LawViolation(f"{f} . id != {f}")
            if self.compose[(self.identities[cod], f)] != f:
                raise LawViolation(f"id . {f} != {f}")
        for h in self.morphisms:
            for g in self.morphisms:
                for f in self.morphisms:
                    if self.morphisms[f][1] == self.morphisms[g][0] \
                            and self.morphisms[g][1] == self.morphisms[h][0]:
                        if self.compose[(h, self.compose[(g, f)])] != \
                                self.compose[(self.compose[(h, g)], f)]:
                            raise LawViolation("composition is not associative")

    def hom(self, a, b):
        return [f for f, (dom, cod) in self.morphisms.items() if dom == a and cod == b]


class SetMonad:
    """A monad on a finite category by tables."""

    def __init__(self, category: FiniteCategory, on_objects, on_morphisms, unit, mult):
        self.category = category
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        self.unit = dict(unit)    # object a -> morphism a -> T a
        self.mult = dict(mult)    # object a -> morphism T T a -> T a
        self._check()

    def _check(self):
        c = self.category
        t_obj, t_mor = self.on_objects, self.on_morphisms
        for f, (dom, cod) in c.morphisms.items():
            if c.morphisms[t_mor[f]] != (t_obj[dom], t_obj[cod]):
                raise LawViolation(f"T({f}) has wrong endpoints")
        for a in c.objects:
            if c.morphisms[t_mor[c.identities[a]]] != (t_obj[a], t_obj[a]) \
                    or t_mor[c.identities[a]] != c.identities[t_obj[a]]:
                raise LawViolation("T does not preserve identities")
        for (g, f), gf in c.compose.items():
            if c.compose[(t_mor[g], t_mor[f])] != t_mor[gf]:
                raise LawViolation("T does not preserve composition")
        for a in c.objects:
            if c.morphisms[self.unit[a]] != (a, t_obj[a]):
                raise LawViolation("unit component has wrong endpoints")
            if c.morphisms[self.mult[a]] != (t_obj[t_obj[a]], t_obj[a]):
                raise LawViolation("mult component has wrong endpoints")
        for f, (dom, cod) in c.morphisms.items():
            if c.compose[(self.unit[cod], f)] != c.compose[(t_mor[f], self.unit[dom])]:
                raise LawViolation("unit is not natural")
            ttf = t_mor[t_mor[f]]
            if c.compose[(self.mult[cod], ttf)] != c.compose[(t_mor[f], self.mult[dom])]:
                raise LawViolation("mult is not natural")
        for a in c.objects:
            ta = t_obj[a]
            if c.compose[(self.mult[a], self.unit[ta])] != c.identities[ta]:
                raise LawViolation("left unit law fails")
            if c.compose[(self.mult[a], t_mor[self.unit[a]])] != c.identities[ta]:
                raise LawViolation("right unit law fails")
            if c.compose[(self.mult[a], t_mor[self.mult[a]])] != \
                    c.compose[(self.mult[a], self.mult[t_obj[ta]])]:
                raise LawViolation("mult is not associative")


def classical_kleisli(c: FiniteCategory, t: SetMonad) -> FiniteCategory:
    """Objects of c; hom(a, b) = hom_c(a, T b); composition through mult."""
    morphisms = {}
    for f, (dom, cod) in c.morphisms.items():
        for b in c.objects:
            if t.on_objects[b] == cod:
                morphisms[(f, b)] = (dom, b)
    compose = {}
    for (g, b2), (g_dom, _) in morphisms.items():
        for (f, b1), (f_dom, f_b) in morphisms.items():
            if f_b == g_dom:
                # g . f in Kleisli: mult_b2 . T(g) . f
                composite = c.compose[(t.mult[b2], c.compose[(t.on_morphisms[g], f)])]
                compose[((g, b2), (f, b1))] = (composite, b2)
    identities = {a: (t.unit[a], a) for a in c.objects}
    return FiniteCategory(c.objects, morphisms, compose, identities)


def linearize(c: FiniteCategory, field=QQ) -> InternalCategory:
    """Grouplike coalgebra on objects; morphism space spanned by morphisms,
    coactions by cod/dom labels; composition and identities from the tables."""
    from .bicomod import Comonoid
    from .fixtures import unit_matrix

    objs = list(c.objects)
    mors = list(c.morphisms)
    n, m = len(objs), len(mors)
    obj_ix = {o: i for i, o in enumerate(objs)}
    mor_ix = {f: i for i, f in enumerate(mors)}

    comon = Comonoid(
        unit_matrix(field, n * n, n, [(i * n + i, i) for i in range(n)]),
        Matrix(field, [[field.one] * n], 1, n),
    )
    lam = unit_matrix(field, n * m, m,
                      [(obj_ix[c.morphisms[f][1]] * m + mor_ix[f], mor_ix[f]) for f in mors])
    rho = unit_matrix(field, m * n, m,
                      [(mor_ix[f] * n + obj_ix[c.morphisms[f][0]], mor_ix[f]) for f in mors])
    bicomod = Bicomodule(comon, comon, lam, rho)

    pairs = [(g, f) for g in mors for f in mors
             if c.morphisms[g][0] == c.morphisms[f][1]]
    pairs.sort(key=lambda p: mor_ix[p[0]] * m + mor_ix[p[1]])
    mult = unit_matrix(field, m, len(pairs),
                       [(mor_ix[c.compose[p]], col) for col, p in enumerate(pairs)])
    unit = unit_matrix(field, m, n, [(mor_ix[c.identities[o]], obj_ix[o]) for o in objs])
    return InternalCategory(comon, bicomod, mult, unit)


def linearize_monad(c: FiniteCategory, t: SetMonad, field=QQ):
    """The internal monad carried by the linearization."""
    from .fixtures import unit_matrix
    from .intcat import compose_functors, identity_functor
    from .kleisli import Monad

    ic = linearize(c, field)
    objs, mors = list(c.objects), list(c.morphisms)
    obj_ix = {o: i for i, o in enumerate(objs)}
    mor_ix = {f: i for i, f in enumerate(mors)}
    n, m = len(objs), len(mors)
    t0 = unit_matrix(field, n, n, [(obj_ix[t.on_objects[o]], obj_ix[o]) for o in objs])
    t1 = unit_matrix(field, m, m, [(mor_ix[t.on_morphisms[f]], mor_ix[f]) for f in mors])
    fun = InternalFunctor(ic, ic, t0, t1)
    mu = NatTrans(compose_functors(fun, fun), fun,
                  unit_matrix(field, m, n, [(mor_ix[t.mult[o]], obj_ix[o]) for o in objs]))
    eta = NatTrans(identity_functor(ic), fun,
                   unit_matrix(field, m, n, [(mor_ix[t.unit[o]], obj_ix[o]) for o in objs]))
    return Monad(fun, mu, eta)


def _setlike_labels(ic: InternalCategory):
    """Extract (cod, dom) labels of every morphism basis vector, or raise
    Mismatch when a coaction is not a relabelled unit matrix."""
    a = ic.morphisms
    n, m = ic.objects.dim, a.dim
    cods, doms = [], []
    one = ic.objects.delta.field.one
    for j in range(m):
        hits = [i for i in range(n * m) if a.lam.rows[i][j] != a.lam.field.zero]
        if len(hits) != 1 or a.lam.rows[hits[0]][j] != one or hits[0] % m != j:
            raise Mismatch("left coaction is not set-like")
        cods.append(hits[0] // m)
        hits = [i for i in range(m * n) if a.rho.rows[i][j] != a.rho.field.zero]
        if len(hits) != 1 or a.rho.rows[hits[0]][j] != one or hits[0] // n != j:
            raise Mismatch("right coaction is not set-like")
        doms.append(hits[0] % n)
    return cods, doms


def compare(internal: InternalCategory, classical: FiniteCategory):
    """Search for a basis bijection matching the internal category with the
    linearized classical one; Mismatch if none exists.  The permutation
    search is restricted to hom-sets by (dom, cod) signature."""
    lin = linearize(classical, internal.objects.delta.field)
    if internal.objects.dim != lin.objects.dim or internal.morphisms.dim != lin.morphisms.dim:
        raise Mismatch("dimension mismatch with the classical tables")
    cods_i, doms_i = _setlike_labels(internal)
    cods_l, doms_l = _setlike_labels(lin)
    n, m = internal.objects.dim, internal.morphisms.dim
    field = internal.objects.delta.field

    for obj_perm in itertools.permutations(range(n)):
        # group internal morphisms by their relabelled signature
        sig_i = {}
        sig_l = {}
        for j in range(m):
            sig_i.setdefault((obj_perm[cods_i[j]], obj_perm[doms_i[j]]), []).append(j)
            sig_l.setdefault((cods_l[j], doms_l[j]), []).append(j)
        if set(sig_i) != set(sig_l) or \
                any(len(sig_i[s]) != len(sig_l[s]) for s in sig_i):
            continue
        groups = sorted(sig_i)
        for choice in itertools.product(
                *[itertools.permutations(sig_l[s]) for s in groups]):
            mor_map = {}
            for s, perm in zip(groups, choice):
                for src, dst in zip(sig_i[s], perm):
                    mor_map[src] = dst
            p_obj = Matrix(field, [[field.one if obj_perm[j] == i else field.zero
                                    for j in range(n)] for i in range(n)], n, n)
            p_mor = Matrix(field, [[field.one if mor_map[j] == i else field.zero
                                    for j in range(m)] for i in range(m)], m, m)
            if _structures_match(internal, lin, p_obj, p_mor):
                return p_obj, p_mor
    raise Mismatch("no basis bijection matches the classical tables")


def _structures_match(internal, lin, p_obj, p_mor) -> bool:
    from .bicomod import cotensor_map
    from .errors import NoFactorization
    from .matrix import tensor

    if tensor(p_obj, p_obj) @ internal.objects.delta != lin.objects.delta @ p_obj:
        return False
    if lin.objects.counit @ p_obj != internal.objects.counit:
        return False
    if tensor(p_obj, p_mor) @ internal.morphisms.lam != lin.morphisms.lam @ p_mor:
        return False
    if tensor(p_mor, p_obj) @ internal.morphisms.rho != lin.morphisms.rho @ p_mor:
        return False
    if p_mor @ internal.unit != lin.unit @ p_obj:
        return False
    try:
        box = cotensor_map(p_mor, p_mor, internal.square, lin.square)
    except NoFactorization:
        return False
    return p_mor @ internal.mult == lin.mult @ box


def poset_category() -> FiniteCategory:
    """The poset 0 <= 1 as a finite category."""
    return FiniteCategory(
        ["0", "1"],
        {"id0": ("0", "0"), "id1": ("1", "1"), "f": ("0", "1")},
        {("id0", "id0"): "id0", ("id1", "id1"): "id1",
         ("id1", "f"): "f", ("f", "id0"): "f"},
        {"0": "id0", "1": "id1"},
    )


def ceiling_monad(c: FiniteCategory = None) -> SetMonad:
    c = c or poset_category()
    return SetMonad(
        c,
        {"0": "1", "1": "1"},
        {"id0": "id1", "id1": "id1", "f": "id1"},
        {"0": "f", "1": "id1"},
        {"0": "id1", "1": "id1"},
    )
