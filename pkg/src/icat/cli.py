"""Command-line surface: one subcommand per construction.

Exit codes: 0 when every check passes, 1 when at least one law fails (the
report is still emitted), 2 on input errors.  ICAT_FIELD (e.g. "Q" or
"Fp:5") overrides the document's field, as does --field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import document as doc_mod
from .bicomod import cotensor, verify_bicomodule, verify_comonoid
from .cofun import verify_cofunctor, verify_cotrans
from .coring import (
    canonical_map,
    hopf_grouplikes,
    is_grouplike,
    kleisli_twisting_datum,
    mu_action,
    sweedler_kleisli_adjunction,
    sweedler_kleisli_coring,
    sweedler_kleisli_cross_check,
    translation_map,
    twist_corings,
    verify_algebra,
    verify_bimodule,
    verify_coring,
    verify_hopf_galois,
    verify_sweedler_monad_data,
    verify_twisting_datum,
)
from .errors import BadScalar, IcatError, ParseError, UnresolvedReference
from .intcat import verify_functor, verify_internal_category, verify_nat
from .kleisli import (
    adjunction_to_binatural,
    binatural_to_adjunction,
    cokleisli_object,
    kleisli_object,
    kleisli_object_via_wreath,
    opmonad_kleisli,
    verify_adjunction,
    verify_binatural,
    verify_comonad,
    verify_monad,
    verify_opmonad,
)
from .matrix import tensor
from .oracle import classical_kleisli, compare, linearize_monad
from .report import Report, flag_check, law_check

VERIFIERS = (
    ("comonoids", verify_comonoid),
    ("bicomodules", verify_bicomodule),
    ("internal_categories", verify_internal_category),
    ("functors", verify_functor),
    ("naturals", verify_nat),
    ("monads", verify_monad),
    ("comonads", verify_comonad),
    ("adjunctions", verify_adjunction),
    ("cofunctors", verify_cofunctor),
    ("cotransformations", verify_cotrans),
    ("opmonads", verify_opmonad),
    ("algebras", verify_algebra),
    ("bimodules", verify_bimodule),
    ("corings", verify_coring),
    ("sweedler_data", verify_sweedler_monad_data),
    ("twisting_data", verify_twisting_datum),
    ("hopf_galois", verify_hopf_galois),
)


def run(doc: doc_mod.Document, task: dict):
    """Dispatch one task; returns (Report, output Document or None)."""
    command = task.get("command")
    if command == "verify":
        return _run_verify(doc, task), None
    if command == "cotensor":
        left = doc.lookup("bicomodules", task["left"])
        right = doc.lookup("bicomodules", task["right"])
        cot = cotensor(left, right)
        rep = verify_bicomodule(cot.result).named(
            f"cotensor ({task['left']} [] {task['right']}), dim {cot.dim}")
        out = doc_mod.matrices_document(doc.field, {"inclusion": cot.inclusion,
                                                    "lambda": cot.result.lam,
                                                    "rho": cot.result.rho})
        return rep, out
    if command == "kleisli":
        m = doc.lookup("monads", task["monad"])
        kl = kleisli_object(m)
        wreath = kleisli_object_via_wreath(m)
        checks = list(verify_internal_category(kl).checks)
        checks.append(law_check("kleisli.dual_path_mult",
                                "direct formula = wreath path (multiplication)",
                                kl.mult, wreath.mult))
        checks.append(law_check("kleisli.dual_path_unit",
                                "direct formula = wreath path (unit)", kl.unit, wreath.unit))
        rep = Report(f"Kleisli object of {task['monad']}", tuple(checks))
        return rep, doc_mod.internal_category_document(doc.field, kl, "kleisli")
    if command == "cokleisli":
        g = doc.lookup("comonads", task["comonad"])
        ckl = cokleisli_object(g)
        rep = verify_internal_category(ckl).named(f"co-Kleisli object of {task['comonad']}")
        return rep, doc_mod.internal_category_document(doc.field, ckl, "cokleisli")
    if command == "opkleisli":
        t = doc.lookup("opmonads", task["opmonad"])
        ta = opmonad_kleisli(t)
        rep = verify_internal_category(ta).named(f"opmonad Kleisli object of {task['opmonad']}")
        return rep, doc_mod.internal_category_document(doc.field, ta, "opkleisli")
    if command == "adjoint-check":
        adj = doc.lookup("adjunctions", task["adjunction"])
        return verify_adjunction(adj).named(f"adjunction {task['adjunction']}"), None
    if command == "theta":
        adj = doc.lookup("adjunctions", task["adjunction"])
        th = adjunction_to_binatural(adj)
        checks = list(verify_binatural(th, adj.l, adj.r).checks)
        back = binatural_to_adjunction(adj.l, adj.r, th)
        checks.append(law_check("theta.round_trip_eps", "recovered counit matches",
                                back.eps.mat, adj.eps.mat))
        checks.append(law_check("theta.round_trip_eta", "recovered unit matches",
                                back.eta.mat, adj.eta.mat))
        rep = Report(f"bi-natural isomorphism of {task['adjunction']}", tuple(checks))
        out = doc_mod.matrices_document(doc.field, {"theta": th.theta, "theta_inv": th.theta_inv})
        return rep, out
    if command == "twist":
        td = doc.lookup("twisting_data", task["datum"])
        checks = list(verify_twisting_datum(td).checks)
        c_tw, d_tw = twist_corings(td)
        checks += list(verify_coring(c_tw).named("C_theta").checks)
        checks += list(verify_coring(d_tw).named("D^theta").checks)
        ktd = kleisli_twisting_datum(td)
        ct2, dt2 = twist_corings(ktd)
        checks.append(law_check("twist.termination_c", "C_thetabar = C_theta (comultiplication)",
                                ct2.delta, c_tw.delta))
        checks.append(law_check("twist.termination_e", "C_thetabar = C_theta (counit)",
                                ct2.counit, c_tw.counit))
        checks.append(law_check("twist.termination_back_c", "(C_theta)^thetabar = C",
                                dt2.delta, td.target.delta))
        checks.append(law_check("twist.termination_back_e", "(C_theta)^thetabar = C (counit)",
                                dt2.counit, td.target.counit))
        rep = Report(f"twisting datum {task['datum']}", tuple(checks))
        out = doc_mod.coring_document(doc.field, c_tw, "c_twisted")
        return rep, out
    if command == "sweedler":
        d = doc.lookup("sweedler_data", task["data"])
        checks = list(verify_sweedler_monad_data(d).checks)
        kl = sweedler_kleisli_coring(d)
        checks += list(verify_coring(kl).named("Kleisli coring").checks)
        mt = d.ctx.carrier.lact @ tensor(d.m, d.t)
        checks.append(flag_check("sweedler.mt_grouplike",
                                 "m t is group-like in the Kleisli coring",
                                 is_grouplike(mt, kl)))
        _, _, adj_rep = sweedler_kleisli_adjunction(d)
        checks += list(adj_rep.checks)
        checks += list(sweedler_kleisli_cross_check(d).checks)
        rep = Report(f"Sweedler data {task['data']}", tuple(checks))
        return rep, doc_mod.coring_document(doc.field, kl, "kleisli_coring")
    if command == "hopf-galois":
        hg = doc.lookup("hopf_galois", task["instance"])
        checks = list(verify_hopf_galois(hg).checks)
        can = canonical_map(hg)
        tau = translation_map(hg)  # NotGalois propagates when can is singular
        checks.append(flag_check("hg.galois", "canonical map is bijective", True))
        out_mats = {"can": can, "tau": tau}
        central = hg.sweedler.central_elements
        for i, x in enumerate(hopf_grouplikes(hg)):
            cols = [mu_action(hg, central.col(j), x) for j in range(central.ncols)]
            table = cols[0]
            for c in cols[1:]:
                table = table.hstack(c)
            out_mats[f"mu_action_grouplike_{i}"] = table
        rep = Report(f"Hopf-Galois instance {task['instance']}", tuple(checks))
        return rep, doc_mod.matrices_document(doc.field, out_mats)
    if command == "oracle-compare":
        cat = doc.lookup("finite_categories", task["category"])
        sm = doc.lookup("set_monads", task["monad"])
        internal = kleisli_object(linearize_monad(cat, sm, doc.field))
        classical = classical_kleisli(cat, sm)
        p_obj, p_mor = compare(internal, classical)
        rep = Report(
            f"oracle comparison for {task['monad']}",
            (flag_check("oracle.match", "internal Kleisli object matches the classical tables",
                        True),))
        out = doc_mod.matrices_document(doc.field, {"object_bijection": p_obj,
                                                    "morphism_bijection": p_mor})
        return rep, out
    raise UnresolvedReference(f"unknown command {command!r}")


def _run_verify(doc: doc_mod.Document, task: dict) -> Report:
    target = task.get("target")
    checks = []
    found = False
    for section, verifier in VERIFIERS:
        for name, obj in getattr(doc, section).items():
            if target is not None and name != target:
                continue
            found = True
            sub = verifier(obj)
            for c in sub.checks:
                checks.append(flag_check(f"{name}.{c.law}", c.anchor, c.passed, c.witness))
    if target is not None and not found:
        raise UnresolvedReference(f"no verifiable object named {target!r}")
    for section in ("finite_categories", "set_monads"):
        for name in getattr(doc, section):
            if target is None or name == target:
                checks.append(flag_check(f"{name}.laws", "tables satisfy the defining laws", True))
    return Report("verify", tuple(checks))


def _load(path: str, field_override=None) -> doc_mod.Document:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if field_override:
        raw = json.loads(text)
        name, _, p = field_override.partition(":")
        raw["field"] = name
        if p:
            raw["p"] = int(p)
        elif name != "Q":
            raw.pop("p", None)
        text = json.dumps(raw)
    return doc_mod.parse(text)


def _emit(report: Report, out_doc, args) -> None:
    if args.report == "json":
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(report.render_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            if out_doc is not None:
                fh.write(doc_mod.serialize(out_doc))
            else:
                fh.write(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="icat",
        description="Exact verification of internal categories, Kleisli objects, and corings.",
    )
    parser.add_argument("--report", choices=("text", "json"), default="text")
    parser.add_argument("--field", default=os.environ.get("ICAT_FIELD"),
                        help='field override, e.g. "Q" or "Fp:5"')
    parser.add_argument("--out", help="write the constructed structures to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify every named object in the document")
    p.add_argument("file")
    p.add_argument("--target", help="verify only this name")

    p = sub.add_parser("cotensor", help="cotensor product of two bicomodules")
    p.add_argument("file")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("kleisli", help="Kleisli object of a monad (both construction paths)")
    p.add_argument("file")
    p.add_argument("--monad", required=True)

    p = sub.add_parser("cokleisli", help="co-Kleisli object of a comonad")
    p.add_argument("file")
    p.add_argument("--comonad", required=True)

    p = sub.add_parser("opkleisli", help="Kleisli object of an opmonad")
    p.add_argument("file")
    p.add_argument("--opmonad", required=True)

    p = sub.add_parser("adjoint-check", help="triangular identities of an adjunction")
    p.add_argument("file")
    p.add_argument("--adjunction", required=True)

    p = sub.add_parser("theta", help="bi-natural isomorphism of an adjunction, with round trip")
    p.add_argument("file")
    p.add_argument("--adjunction", required=True)

    p = sub.add_parser("twist", help="twisted corings of a twisting datum, with termination")
    p.add_argument("file")
    p.add_argument("--datum", required=True)

    p = sub.add_parser("sweedler", help="Kleisli coring of Sweedler monad data")
    p.add_argument("file")
    p.add_argument("--data", required=True)

    p = sub.add_parser("hopf-galois", help="canonical map, translation map, and the induced action")
    p.add_argument("file")
    p.add_argument("--instance", required=True)

    p = sub.add_parser("oracle-compare", help="internal Kleisli object vs classical tables")
    p.add_argument("file")
    p.add_argument("--category", required=True)
    p.add_argument("--monad", required=True)

    args = parser.parse_args(argv)
    task = {"command": args.command}
    for key in ("target", "left", "right", "monad", "comonad", "opmonad",
                "adjunction", "datum", "data", "instance", "category"):
        if getattr(args, key, None) is not None:
            task[key] = getattr(args, key)

    try:
        doc = _load(args.file, args.field)
    except (ParseError, UnresolvedReference, BadScalar, OSError, json.JSONDecodeError,
            ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    try:
        report, out_doc = run(doc, task)
    except UnresolvedReference as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except IcatError as e:
        failure = Report(args.command, (flag_check(
            f"error.{type(e).__name__}", str(e), False),))
        _emit(failure, None, args)
        return 1
    _emit(report, out_doc, args)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
