"""The input document format.

A document is a single JSON object: the field declared once at top level
({"field": "Q"} or {"field": "Fp", "p": 5}), then named definitions grouped
by kind, each given by structure matrices (row-major nested arrays of exact
scalars: integers, or "p/q" strings over Q) or by reference to earlier
names.  `parse` resolves everything into engine objects; `serialize` emits
canonical JSON (sorted keys) so that output documents are byte-stable and
parse back to equal objects.
"""

from __future__ import annotations

import json

from .bicomod import Bicomodule, Comonoid
from .cofun import Cofunctor, Cotrans
from .coring import (
    Algebra,
    Bimodule,
    Coring,
    HopfGaloisInstance,
    SweedlerContext,
    SweedlerMonadData,
    TwistingDatum,
)
from .errors import BadScalar, IcatError, ParseError, UnresolvedReference
from .fields import Field, field_from_spec
from .intcat import InternalCategory, InternalFunctor, NatTrans, compose_functors, identity_functor
from .kleisli import Adjunction, Comonad, Monad, Opmonad
from .matrix import Matrix
from .oracle import FiniteCategory, SetMonad

SECTIONS = (
    "comonoids", "bicomodules", "internal_categories", "functors", "naturals",
    "monads", "comonads", "adjunctions", "cofunctors", "cotransformations",
    "opmonads", "algebras", "bimodules", "corings", "algebra_maps",
    "sweedler_data", "twisting_data", "hopf_galois", "finite_categories",
    "set_monads", "matrices", "tasks",
)


class Document:
    def __init__(self, field: Field, raw: dict):
        self.field = field
        self.raw = raw
        for section in SECTIONS:
            setattr(self, section, {})

    def lookup(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            raise UnresolvedReference(f"{section[:-1].replace('_', ' ')} {name!r} is not defined")
        return table[name]

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return self.raw == other.raw


def _matrix(doc: Document, rows, nrows=None, ncols=None, where="matrix") -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where} must be a nested array")
    try:
        entries = [[doc.field.parse(x) for x in r] for r in rows]
    except BadScalar as e:
        raise BadScalar(f"{where}: {e}") from None
    if nrows is None:
        nrows = len(entries)
    if ncols is None:
        if not entries:
            raise ParseError(f"{where}: cannot infer width of an empty matrix")
        ncols = len(entries[0])
    return Matrix(doc.field, entries, nrows, ncols)


def _column(doc: Document, entries, where="vector") -> Matrix:
    if not isinstance(entries, list):
        raise ParseError(f"{where} must be an array of scalars")
    return _matrix(doc, [[x] for x in entries], where=where)


def parse(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(raw, dict):
        raise ParseError("document must be a JSON object")
    if "field" not in raw:
        raise ParseError('document must declare a "field"')
    field = field_from_spec(raw["field"], raw.get("p"))
    for key in raw:
        if key not in SECTIONS and key not in ("field", "p"):
            raise ParseError(f"unknown top-level section {key!r}")
    doc = Document(field, _canonical(raw))
    _build(doc, raw)
    return doc


def serialize(doc: Document) -> str:
    return json.dumps(doc.raw, sort_keys=True, indent=2) + "\n"


def _canonical(raw):
    return json.loads(json.dumps(raw, sort_keys=True))


def _build(doc: Document, raw: dict):
    for name, spec in raw.get("comonoids", {}).items():
        doc.comonoids[name] = Comonoid(
            _matrix(doc, spec["delta"], where=f"comonoid {name} delta"),
            _matrix(doc, spec["counit"], where=f"comonoid {name} counit"),
        )
    for name, spec in raw.get("bicomodules", {}).items():
        doc.bicomodules[name] = Bicomodule(
            doc.lookup("comonoids", spec["left"]),
            doc.lookup("comonoids", spec["right"]),
            _matrix(doc, spec["lambda"], where=f"bicomodule {name} lambda"),
            _matrix(doc, spec["rho"], where=f"bicomodule {name} rho"),
        )
    for name, spec in raw.get("internal_categories", {}).items():
        doc.internal_categories[name] = InternalCategory(
            doc.lookup("comonoids", spec["objects"]),
            doc.lookup("bicomodules", spec["morphisms"]),
            _matrix(doc, spec["mult"], where=f"internal category {name} mult"),
            _matrix(doc, spec["unit"], where=f"internal category {name} unit"),
        )
    for name, spec in raw.get("functors", {}).items():
        doc.functors[name] = InternalFunctor(
            doc.lookup("internal_categories", spec["source"]),
            doc.lookup("internal_categories", spec["target"]),
            _matrix(doc, spec["f0"], where=f"functor {name} f0"),
            _matrix(doc, spec["f1"], where=f"functor {name} f1"),
        )
    for name, spec in raw.get("naturals", {}).items():
        doc.naturals[name] = NatTrans(
            doc.lookup("functors", spec["source"]),
            doc.lookup("functors", spec["target"]),
            _matrix(doc, spec["matrix"], where=f"natural {name}"),
        )
    for name, spec in raw.get("monads", {}).items():
        t = doc.lookup("functors", spec["functor"])
        tt = compose_functors(t, t)
        doc.monads[name] = Monad(
            t,
            NatTrans(tt, t, _matrix(doc, spec["mu"], where=f"monad {name} mu")),
            NatTrans(identity_functor(t.src), t,
                     _matrix(doc, spec["eta"], where=f"monad {name} eta")),
        )
    for name, spec in raw.get("comonads", {}).items():
        g = doc.lookup("functors", spec["functor"])
        doc.comonads[name] = Comonad(
            g,
            NatTrans(g, compose_functors(g, g),
                     _matrix(doc, spec["delta"], where=f"comonad {name} delta")),
            NatTrans(g, identity_functor(g.src),
                     _matrix(doc, spec["eps"], where=f"comonad {name} eps")),
        )
    for name, spec in raw.get("adjunctions", {}).items():
        l = doc.lookup("functors", spec["left"])
        r = doc.lookup("functors", spec["right"])
        doc.adjunctions[name] = Adjunction(
            l, r,
            NatTrans(compose_functors(l, r), identity_functor(l.dst),
                     _matrix(doc, spec["eps"], where=f"adjunction {name} eps")),
            NatTrans(identity_functor(l.src), compose_functors(r, l),
                     _matrix(doc, spec["eta"], where=f"adjunction {name} eta")),
        )
    for name, spec in raw.get("cofunctors", {}).items():
        doc.cofunctors[name] = Cofunctor(
            doc.lookup("internal_categories", spec["source"]),
            doc.lookup("internal_categories", spec["target"]),
            _matrix(doc, spec["f0"], where=f"cofunctor {name} f0"),
            _matrix(doc, spec["f1"], where=f"cofunctor {name} f1"),
        )
    for name, spec in raw.get("cotransformations", {}).items():
        doc.cotransformations[name] = Cotrans(
            doc.lookup("cofunctors", spec["source"]),
            doc.lookup("cofunctors", spec["target"]),
            _matrix(doc, spec["matrix"], where=f"cotransformation {name}"),
        )
    for name, spec in raw.get("opmonads", {}).items():
        from .cofun import compose_cofunctors, identity_cofunctor

        t = doc.lookup("cofunctors", spec["cofunctor"])
        doc.opmonads[name] = Opmonad(
            t,
            Cotrans(compose_cofunctors(t, t), t,
                    _matrix(doc, spec["mu"], where=f"opmonad {name} mu")),
            Cotrans(identity_cofunctor(t.src), t,
                    _matrix(doc, spec["eta"], where=f"opmonad {name} eta")),
        )
    for name, spec in raw.get("algebras", {}).items():
        doc.algebras[name] = Algebra(
            _matrix(doc, spec["mult"], where=f"algebra {name} mult"),
            _matrix(doc, spec["unit"], where=f"algebra {name} unit"),
        )
    for name, spec in raw.get("bimodules", {}).items():
        doc.bimodules[name] = Bimodule(
            doc.lookup("algebras", spec["left"]),
            doc.lookup("algebras", spec["right"]),
            _matrix(doc, spec["lact"], where=f"bimodule {name} lact"),
            _matrix(doc, spec["ract"], where=f"bimodule {name} ract"),
        )
    for name, spec in raw.get("corings", {}).items():
        doc.corings[name] = Coring(
            doc.lookup("algebras", spec["base"]),
            doc.lookup("bimodules", spec["carrier"]),
            _matrix(doc, spec["delta"], where=f"coring {name} delta"),
            _matrix(doc, spec["counit"], where=f"coring {name} counit"),
        )
    for name, spec in raw.get("algebra_maps", {}).items():
        doc.algebra_maps[name] = SweedlerContext(
            doc.lookup("algebras", spec["source"]),
            doc.lookup("algebras", spec["target"]),
            _matrix(doc, spec["matrix"], where=f"algebra map {name}"),
        )
    for name, spec in raw.get("sweedler_data", {}).items():
        ctx = doc.lookup("algebra_maps", spec["map"])
        doc.sweedler_data[name] = SweedlerMonadData(
            ctx,
            _column(doc, spec["t"], where=f"sweedler data {name} t"),
            _column(doc, spec["m"], where=f"sweedler data {name} m"),
            _column(doc, spec["u"], where=f"sweedler data {name} u"),
        )
    for name, spec in raw.get("twisting_data", {}).items():
        doc.twisting_data[name] = TwistingDatum(
            doc.lookup("corings", spec["source"]),
            doc.lookup("corings", spec["target"]),
            _matrix(doc, spec["l"], where=f"twisting datum {name} l"),
            _matrix(doc, spec["r"], where=f"twisting datum {name} r"),
            _matrix(doc, spec["theta"], where=f"twisting datum {name} theta"),
        )
    for name, spec in raw.get("hopf_galois", {}).items():
        doc.hopf_galois[name] = HopfGaloisInstance(
            doc.lookup("algebras", spec["hopf"]),
            _matrix(doc, spec["hopf_delta"], where=f"hopf_galois {name} hopf_delta"),
            _matrix(doc, spec["hopf_counit"], where=f"hopf_galois {name} hopf_counit"),
            _matrix(doc, spec["antipode"], where=f"hopf_galois {name} antipode"),
            doc.lookup("algebras", spec["algebra"]),
            _matrix(doc, spec["coaction"], where=f"hopf_galois {name} coaction"),
        )
    for name, spec in raw.get("finite_categories", {}).items():
        doc.finite_categories[name] = FiniteCategory(
            spec["objects"],
            {m: tuple(ends) for m, ends in spec["morphisms"].items()},
            {(g, f): h for g, f, h in spec["composition"]},
            spec["identities"],
        )
    for name, spec in raw.get("set_monads", {}).items():
        doc.set_monads[name] = SetMonad(
            doc.lookup("finite_categories", spec["category"]),
            spec["objects"], spec["morphisms"], spec["unit"], spec["mult"],
        )
    for name, rows in raw.get("matrices", {}).items():
        doc.matrices[name] = _matrix(doc, rows, where=f"matrix {name}")
    doc.tasks = dict(raw.get("tasks", {}))


# -- serialization of engine objects into document fragments -------------


def matrix_to_raw(field: Field, m: Matrix):
    return [[field.format(x) for x in row] for row in m.rows]


def comonoid_to_raw(field, c: Comonoid):
    return {"delta": matrix_to_raw(field, c.delta), "counit": matrix_to_raw(field, c.counit)}


def bicomodule_to_raw(field, m: Bicomodule, left: str, right: str):
    return {"left": left, "right": right,
            "lambda": matrix_to_raw(field, m.lam), "rho": matrix_to_raw(field, m.rho)}


def internal_category_to_raw(field, ic: InternalCategory, objects: str, morphisms: str):
    return {"objects": objects, "morphisms": morphisms,
            "mult": matrix_to_raw(field, ic.mult), "unit": matrix_to_raw(field, ic.unit)}


def coring_to_raw(field, c: Coring, base: str, carrier: str):
    return {"base": base, "carrier": carrier,
            "delta": matrix_to_raw(field, c.delta), "counit": matrix_to_raw(field, c.counit)}


def bimodule_over_to_raw(field, m, left: str, right: str):
    return {"left": left, "right": right,
            "lact": matrix_to_raw(field, m.lact), "ract": matrix_to_raw(field, m.ract)}


def field_to_raw(field: Field):
    if field.name == "Q":
        return {"field": "Q"}
    return {"field": "Fp", "p": field.p}


def internal_category_document(field, ic: InternalCategory, name: str) -> Document:
    """A standalone document carrying one constructed internal category."""
    raw = field_to_raw(field)
    raw["comonoids"] = {f"{name}_objects": comonoid_to_raw(field, ic.objects)}
    raw["bicomodules"] = {f"{name}_morphisms": bicomodule_to_raw(
        field, ic.morphisms, f"{name}_objects", f"{name}_objects")}
    raw["internal_categories"] = {name: internal_category_to_raw(
        field, ic, f"{name}_objects", f"{name}_morphisms")}
    return parse(serialize_raw(raw))


def coring_document(field, c: Coring, name: str) -> Document:
    raw = field_to_raw(field)
    raw["algebras"] = {f"{name}_base": {
        "mult": matrix_to_raw(field, c.base.mult), "unit": matrix_to_raw(field, c.base.unit)}}
    raw["bimodules"] = {f"{name}_carrier": bimodule_over_to_raw(
        field, c.carrier, f"{name}_base", f"{name}_base")}
    raw["corings"] = {name: coring_to_raw(field, c, f"{name}_base", f"{name}_carrier")}
    return parse(serialize_raw(raw))


def matrices_document(field, named: dict) -> Document:
    raw = field_to_raw(field)
    raw["matrices"] = {k: matrix_to_raw(field, v) for k, v in named.items()}
    return parse(serialize_raw(raw))


def serialize_raw(raw: dict) -> str:
    return json.dumps(raw, sort_keys=True, indent=2) + "\n"
