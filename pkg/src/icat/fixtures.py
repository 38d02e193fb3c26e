"""Programmatic builders for the standard fixtures.

The same objects are shipped as JSON documents under ``icat/fixtures/`` and
loaded through the document parser; `tests/test_document.py` pins the two
representations against each other.  Numbering:

  F1  unit comonoid over Q
  F2  grouplike coalgebra on two points {x, y}
  F3  linearized poset category 0 <= 1 over F2, with its ceiling monad
  F4  group algebra Q[Z/2]
  F5  Sweedler coring A (x)_B A for A = F4, B = Q
  F6  Hopf-Galois instance H = A = Q[Z/2], coaction = delta, B = Q
  F7  4-dimensional matrix coalgebra
"""

from __future__ import annotations

import importlib.resources as resources

from .bicomod import Bicomodule, Comonoid
from .fields import QQ
from .intcat import InternalCategory, InternalFunctor, NatTrans, trivial_internal_category
from .matrix import Matrix


def unit_matrix(field, nrows, ncols, entries):
    """Matrix with 1 at each (row, col) of `entries`, 0 elsewhere."""
    rows = [[field.zero] * ncols for _ in range(nrows)]
    for i, j in entries:
        rows[i][j] = field.one
    return Matrix(field, rows, nrows, ncols)


def unit_comonoid(field=QQ) -> Comonoid:
    """F1: the base field as a comonoid."""
    return Comonoid(Matrix.identity(field, 1), Matrix.identity(field, 1))


def grouplike_comonoid(n, field=QQ) -> Comonoid:
    """The linearization of an n-point set: delta(x) = x (x) x, counit = 1."""
    delta = unit_matrix(field, n * n, n, [(i * n + i, i) for i in range(n)])
    counit = Matrix(field, [[field.one] * n], 1, n)
    return Comonoid(delta, counit)


def f2_comonoid(field=QQ) -> Comonoid:
    """F2: grouplikes {x, y}; x is basis vector 0, y is 1."""
    return grouplike_comonoid(2, field)


def f2_trivial_category(field=QQ) -> InternalCategory:
    """The trivial internal category (C, C) on F2."""
    return trivial_internal_category(f2_comonoid(field))


def matrix_comonoid(field=QQ) -> Comonoid:
    """F7: the 4-dimensional matrix coalgebra on basis E11, E12, E21, E22."""
    n = 2
    dim = n * n
    delta_entries = []
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for k in range(n):
                row = (i * n + k) * dim + (k * n + j)  # E_ik (x) E_kj
                delta_entries.append((row, col))
    delta = unit_matrix(field, dim * dim, dim, delta_entries)
    counit = unit_matrix(field, 1, dim, [(0, 0), (0, 3)])
    return Comonoid(delta, counit)


def f3_category(field=QQ) -> InternalCategory:
    """F3: the poset 0 <= 1 linearized.  Objects x (= 0), y (= 1); morphism
    basis id0, id1, f with f: 0 -> 1.  Left coaction labels codomains,
    right coaction labels domains."""
    c = f2_comonoid(field)
    # lambda: id0 -> x (x) id0, id1 -> y (x) id1, f -> y (x) f
    lam = unit_matrix(field, 6, 3, [(0, 0), (4, 1), (5, 2)])
    # rho: id0 -> id0 (x) x, id1 -> id1 (x) y, f -> f (x) x
    rho = unit_matrix(field, 6, 3, [(0, 0), (3, 1), (4, 2)])
    a = Bicomodule(c, c, lam, rho)
    # composable pairs in canonical (row-major) order:
    # (id0,id0) -> id0, (id1,id1) -> id1, (id1,f) -> f, (f,id0) -> f
    mult = unit_matrix(field, 3, 4, [(0, 0), (1, 1), (2, 2), (2, 3)])
    unit = unit_matrix(field, 3, 2, [(0, 0), (1, 1)])
    return InternalCategory(c, a, mult, unit)


def f3_ceiling_functor(ic: InternalCategory = None) -> InternalFunctor:
    """The idempotent endofunctor t with t(0) = t(1) = 1."""
    if ic is None:
        ic = f3_category()
    field = ic.objects.delta.field
    t0 = unit_matrix(field, 2, 2, [(1, 0), (1, 1)])
    t1 = unit_matrix(field, 3, 3, [(1, 0), (1, 1), (1, 2)])
    return InternalFunctor(ic, ic, t0, t1)


def f3_monad_parts(ic: InternalCategory = None):
    """(t, mu, eta) for the ceiling monad on F3."""
    from .intcat import compose_functors  # local import to keep module load light
    from .kleisli import Monad

    if ic is None:
        ic = f3_category()
    t = f3_ceiling_functor(ic)
    field = ic.objects.delta.field
    tt = compose_functors(t, t)
    mu = NatTrans(tt, t, unit_matrix(field, 3, 2, [(1, 0), (1, 1)]))
    from .intcat import identity_functor

    eta = NatTrans(identity_functor(ic), t, unit_matrix(field, 3, 2, [(2, 0), (1, 1)]))
    return Monad(t, mu, eta)


def f4_algebra(field=QQ):
    """F4: the group algebra Q[Z/2] on basis 1, g."""
    from .coring import Algebra

    mult = unit_matrix(field, 2, 4, [(0, 0), (1, 1), (1, 2), (0, 3)])
    unit = unit_matrix(field, 2, 1, [(0, 0)])
    return Algebra(mult, unit)


def rationals_algebra(field=QQ):
    from .coring import Algebra

    one = Matrix.identity(field, 1)
    return Algebra(one, one)


def f5_context(field=QQ):
    """F5: the Sweedler coring data A (x)_B A for A = Q[Z/2], B = Q."""
    from .coring import SweedlerContext

    a = f4_algebra(field)
    b = rationals_algebra(field)
    return SweedlerContext(b, a, a.unit)


def f5_coring(field=QQ):
    return f5_context(field).coring


def f6_hopf_galois(field=QQ):
    """F6: H = A = Q[Z/2], coaction the grouplike comultiplication, B = Q."""
    from .coring import HopfGaloisInstance

    a = f4_algebra(field)
    delta = unit_matrix(field, 4, 2, [(0, 0), (3, 1)])
    counit = Matrix(field, [[field.one, field.one]], 1, 2)
    antipode = Matrix.identity(field, 2)
    return HopfGaloisInstance(a, delta, counit, antipode, a, delta)


def f3_floor_adjunction(ic: InternalCategory = None):
    """The endo-adjunction floor -| ceiling on F3: l(a) = 0, r(a) = 1.

    Unit and counit are the unique fillers; the right adjoint is the
    ceiling monad's functor.
    """
    from .intcat import compose_functors, identity_functor
    from .kleisli import Adjunction

    if ic is None:
        ic = f3_category()
    field = ic.objects.delta.field
    l0 = unit_matrix(field, 2, 2, [(0, 0), (0, 1)])
    l1 = unit_matrix(field, 3, 3, [(0, 0), (0, 1), (0, 2)])
    l = InternalFunctor(ic, ic, l0, l1)
    r = f3_ceiling_functor(ic)
    ident = identity_functor(ic)
    # eps: l r => 1 picks the unique morphism 0 -> b; eta: 1 => r l is the monad unit
    eps = NatTrans(compose_functors(l, r), ident, unit_matrix(field, 3, 2, [(0, 0), (2, 1)]))
    eta = NatTrans(ident, compose_functors(r, l), unit_matrix(field, 3, 2, [(2, 0), (1, 1)]))
    return Adjunction(l, r, eps, eta)


# -- fixture documents ----------------------------------------------------


def load(name: str):
    """Parse one of the shipped fixture documents (f1 ... f7)."""
    from .document import parse

    text = resources.files("icat").joinpath("fixtures", f"{name}.json").read_text("utf-8")
    return parse(text)


def fixture_raws():
    """The raw document dictionaries for every shipped fixture file,
    regenerated from the programmatic builders."""
    from . import document as dm
    from .cofun import identity_cofunctor
    from .coring import (
        sweedler_kleisli_coring,
        sweedler_twisting_datum,
        unit_monad_data,
    )
    from .kleisli import identity_opmonad
    from .matrix import tensor

    field = QQ
    raws = {}

    f1 = unit_comonoid()
    point = trivial_internal_category(f1)
    raws["f1"] = {
        **dm.field_to_raw(field),
        "comonoids": {"F1": dm.comonoid_to_raw(field, f1)},
        "bicomodules": {"F1_regular": dm.bicomodule_to_raw(field, point.morphisms, "F1", "F1")},
        "internal_categories": {"point": dm.internal_category_to_raw(
            field, point, "F1", "F1_regular")},
        "tasks": {"check": {"command": "verify"}},
    }

    c2 = f2_comonoid()
    triv = f2_trivial_category()
    id_cof = identity_cofunctor(triv)
    swap = unit_matrix(field, 2, 2, [(0, 1), (1, 0)])
    from .cofun import Cofunctor

    shell = Cofunctor(triv, triv, swap, Matrix.zeros(field, 2, 2))
    swap_f1 = tensor(c2.counit, c2.identity()) @ shell.domain_cotensor.inclusion
    om = identity_opmonad(triv)
    raws["f2"] = {
        **dm.field_to_raw(field),
        "comonoids": {"F2": dm.comonoid_to_raw(field, c2)},
        "bicomodules": {"F2_regular": dm.bicomodule_to_raw(field, triv.morphisms, "F2", "F2")},
        "internal_categories": {"trivial": dm.internal_category_to_raw(
            field, triv, "F2", "F2_regular")},
        "cofunctors": {
            "identity": {"source": "trivial", "target": "trivial",
                         "f0": dm.matrix_to_raw(field, id_cof.f0),
                         "f1": dm.matrix_to_raw(field, id_cof.f1)},
            "swap": {"source": "trivial", "target": "trivial",
                     "f0": dm.matrix_to_raw(field, swap),
                     "f1": dm.matrix_to_raw(field, swap_f1)},
        },
        "cotransformations": {"unit": {"source": "identity", "target": "identity",
                                       "matrix": dm.matrix_to_raw(field, triv.unit)}},
        "opmonads": {"identity_opmonad": {"cofunctor": "identity",
                                          "mu": dm.matrix_to_raw(field, om.mu.mat),
                                          "eta": dm.matrix_to_raw(field, om.eta.mat)}},
        "tasks": {"opkleisli": {"command": "opkleisli", "opmonad": "identity_opmonad"}},
    }

    f3 = f3_category()
    t = f3_ceiling_functor(f3)
    monad = f3_monad_parts(f3)
    adj = f3_floor_adjunction(f3)
    from .intcat import identity_functor

    ident = identity_functor(f3)
    raws["f3"] = {
        **dm.field_to_raw(field),
        "comonoids": {"F2": dm.comonoid_to_raw(field, f3.objects)},
        "bicomodules": {"arrows": dm.bicomodule_to_raw(field, f3.morphisms, "F2", "F2")},
        "internal_categories": {"F3": dm.internal_category_to_raw(field, f3, "F2", "arrows")},
        "functors": {
            "identity": {"source": "F3", "target": "F3",
                         "f0": dm.matrix_to_raw(field, ident.f0),
                         "f1": dm.matrix_to_raw(field, ident.f1)},
            "ceiling": {"source": "F3", "target": "F3",
                        "f0": dm.matrix_to_raw(field, t.f0),
                        "f1": dm.matrix_to_raw(field, t.f1)},
            "floor": {"source": "F3", "target": "F3",
                      "f0": dm.matrix_to_raw(field, adj.l.f0),
                      "f1": dm.matrix_to_raw(field, adj.l.f1)},
        },
        "naturals": {"eta": {"source": "identity", "target": "ceiling",
                             "matrix": dm.matrix_to_raw(field, monad.eta.mat)}},
        "monads": {"ceiling_monad": {"functor": "ceiling",
                                     "mu": dm.matrix_to_raw(field, monad.mu.mat),
                                     "eta": dm.matrix_to_raw(field, monad.eta.mat)}},
        "adjunctions": {"floor_ceiling": {"left": "floor", "right": "ceiling",
                                          "eps": dm.matrix_to_raw(field, adj.eps.mat),
                                          "eta": dm.matrix_to_raw(field, adj.eta.mat)}},
        "finite_categories": {"poset": {
            "objects": ["0", "1"],
            "morphisms": {"id0": ["0", "0"], "id1": ["1", "1"], "f": ["0", "1"]},
            "composition": [["id0", "id0", "id0"], ["id1", "id1", "id1"],
                            ["id1", "f", "f"], ["f", "id0", "f"]],
            "identities": {"0": "id0", "1": "id1"},
        }},
        "set_monads": {"ceiling_tables": {
            "category": "poset",
            "objects": {"0": "1", "1": "1"},
            "morphisms": {"id0": "id1", "id1": "id1", "f": "id1"},
            "unit": {"0": "f", "1": "id1"},
            "mult": {"0": "id1", "1": "id1"},
        }},
        "tasks": {
            "kleisli": {"command": "kleisli", "monad": "ceiling_monad"},
            "adjoint": {"command": "adjoint-check", "adjunction": "floor_ceiling"},
            "theta": {"command": "theta", "adjunction": "floor_ceiling"},
            "oracle": {"command": "oracle-compare", "category": "poset",
                       "monad": "ceiling_tables"},
        },
    }

    a4 = f4_algebra()
    raws["f4"] = {
        **dm.field_to_raw(field),
        "algebras": {"F4": {"mult": dm.matrix_to_raw(field, a4.mult),
                            "unit": dm.matrix_to_raw(field, a4.unit)}},
        "tasks": {"check": {"command": "verify"}},
    }

    ctx = f5_context()
    b = rationals_algebra()
    d_id = unit_monad_data(ctx, unit_matrix(field, 2, 1, [(0, 0)]))
    d_g = unit_monad_data(ctx, unit_matrix(field, 2, 1, [(1, 0)]))
    kleisli_g = sweedler_kleisli_coring(d_g)
    datum = sweedler_twisting_datum(d_g)
    raws["f5"] = {
        **dm.field_to_raw(field),
        "algebras": {
            "F4": {"mult": dm.matrix_to_raw(field, a4.mult),
                   "unit": dm.matrix_to_raw(field, a4.unit)},
            "Q": {"mult": dm.matrix_to_raw(field, b.mult),
                  "unit": dm.matrix_to_raw(field, b.unit)},
        },
        "bimodules": {"F5_carrier": dm.bimodule_over_to_raw(field, ctx.carrier, "F4", "F4")},
        "corings": {
            "sweedler": dm.coring_to_raw(field, ctx.coring, "F4", "F5_carrier"),
            "kleisli_g": dm.coring_to_raw(field, kleisli_g, "F4", "F5_carrier"),
        },
        "algebra_maps": {"unit_map": {"source": "Q", "target": "F4",
                                      "matrix": dm.matrix_to_raw(field, a4.unit)}},
        "sweedler_data": {
            "identity_data": {"map": "unit_map",
                              "t": [field.format(d_id.t.rows[i][0]) for i in range(4)],
                              "m": [field.format(d_id.m.rows[i][0]) for i in range(2)],
                              "u": [field.format(d_id.u.rows[i][0]) for i in range(2)]},
            "unit_g_data": {"map": "unit_map",
                            "t": [field.format(d_g.t.rows[i][0]) for i in range(4)],
                            "m": [field.format(d_g.m.rows[i][0]) for i in range(2)],
                            "u": [field.format(d_g.u.rows[i][0]) for i in range(2)]},
        },
        "twisting_data": {"sweedler_datum": {
            "source": "kleisli_g", "target": "sweedler",
            "l": dm.matrix_to_raw(field, datum.l),
            "r": dm.matrix_to_raw(field, datum.r),
            "theta": dm.matrix_to_raw(field, datum.theta),
        }},
        "tasks": {
            "sweedler": {"command": "sweedler", "data": "unit_g_data"},
            "twist": {"command": "twist", "datum": "sweedler_datum"},
        },
    }

    hg = f6_hopf_galois()
    raws["f6"] = {
        **dm.field_to_raw(field),
        "algebras": {"F4": {"mult": dm.matrix_to_raw(field, a4.mult),
                            "unit": dm.matrix_to_raw(field, a4.unit)}},
        "hopf_galois": {"F6": {
            "hopf": "F4", "algebra": "F4",
            "hopf_delta": dm.matrix_to_raw(field, hg.hopf_delta),
            "hopf_counit": dm.matrix_to_raw(field, hg.hopf_counit),
            "antipode": dm.matrix_to_raw(field, hg.antipode),
            "coaction": dm.matrix_to_raw(field, hg.coaction),
        }},
        "tasks": {"galois": {"command": "hopf-galois", "instance": "F6"}},
    }

    c7 = matrix_comonoid()
    m7 = trivial_internal_category(c7)
    raws["f7"] = {
        **dm.field_to_raw(field),
        "comonoids": {"F7": dm.comonoid_to_raw(field, c7)},
        "bicomodules": {"F7_regular": dm.bicomodule_to_raw(field, m7.morphisms, "F7", "F7")},
        "internal_categories": {"matrix_units": dm.internal_category_to_raw(
            field, m7, "F7", "F7_regular")},
        "tasks": {"check": {"command": "verify"}},
    }
    return raws


def write_fixture_files(directory) -> None:
    """Regenerate the shipped fixture documents (used by the repo generator
    and the drift test)."""
    import json
    import pathlib

    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name, raw in fixture_raws().items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(raw, sort_keys=True, indent=2) + "\n", "utf-8")
