"""Command-line front end.  All input and output is JSON.

Exit codes: 0 success, 1 bad input, 2 a mathematical self-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from . import rep_theory as rt
from .bredon import e1, e2, element_order, gamma_q, h0_presentation, h0_to_group, verify_suite
from .burnside import j1, j1_matrix, table_of_marks, weyl_orders
from .category import apply_char_map, char_map_matrix, mor_set
from .errors import EqEulerError, InputError, MathematicalInconsistency
from .gcomplex import (
    builtin_rep_sphere,
    objects,
    orbifold_table,
    pushforward_to_point,
    s3_sphere3,
    s3_sphere5,
    summary,
    universal_euler_char,
)
from .group_core import FIELD_TAGS, f_conjugacy_classes, subgroup_classes, weyl_group


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def _order_json(n):
    return "infinity" if n is None else n


# --- sections --------------------------------------------------------------


def group_section(G):
    classes = subgroup_classes(G)
    subgroups = []
    for cl in classes:
        H = cl.representative
        subgroups.append(
            {
                "index": cl.index,
                "order": H.order,
                "members": list(H.members),
                "conjugates": len(cl.conjugates),
                "cyclic": H.is_cyclic,
                "weyl_order": weyl_group(G, H).order,
            }
        )
    return {
        "order": G.order,
        "degree": G.degree,
        "elements": [list(p.images) for p in G.elements],
        "generators": list(G.generators),
        "exponent": G.exponent,
        "abelian": G.is_abelian,
        "subgroup_classes": subgroups,
        "conjugacy_classes": {tag: [list(c) for c in f_conjugacy_classes(G, tag).classes] for tag in FIELD_TAGS},
    }


def reps_section(G, field_tag):
    table = rt.char_table_complex(G)
    out = {
        "field": field_tag,
        "classes": [list(c) for c in table.classes.classes],
        "class_representatives": list(table.classes.representatives),
        "exponent": table.exponent,
    }
    if field_tag == "C":
        out["irreducibles"] = [
            {"degree": d, "character": list(chi), "fs_indicator": rt.fs_indicator(G, chi)}
            for d, chi in zip(table.degrees, table.irreducibles)
        ]
    else:
        out["irreducibles"] = [
            {
                "degree": b.degree,
                "character": list(b.character),
                "constituents": list(b.constituents),
                "multiplier": b.multiplier,
                "kind": b.kind,
            }
            for b in rt.f_irreducibles(G, field_tag)
        ]
    out["f_classes"] = [list(c) for c in f_conjugacy_classes(G, field_tag).classes]
    out["hs_matrix"] = rt.hs_matrix(G, field_tag)
    return out


def marks_section(G, field_tag="R"):
    return {
        "table_of_marks": [list(r) for r in table_of_marks(G)],
        "weyl_orders": list(weyl_orders(G)),
        "j1_field": field_tag,
        "j1": [list(r) for r in j1_matrix(G, field_tag)],
    }


def objects_section(X):
    return [
        {
            "index": x.index,
            "subgroup_class": x.class_index,
            "subgroup_order": x.subgroup.order,
            "component": x.component,
            "basepoint": x.basepoint,
            "orbit": list(x.orbit),
            "isotropy_order": x.isotropy_order,
        }
        for x in objects(X)
    ]


def category_section(X):
    objs = objects(X)
    return {
        "objects": objects_section(X),
        "mor_cardinalities": [[len(mor_set(X, y, x)) for x in objs] for y in objs],
        "char_map": char_map_matrix(X),
    }


def euler_section(X, field_tag):
    chi = universal_euler_char(X)
    P = h0_presentation(X, field_tag)
    c1 = e1(chi)
    cls = e2(c1) if field_tag == "R" else c1
    checks = verify_suite(X)
    return {
        "complex": {
            "vertices": X.vertex_count,
            "dimension": X.dimension,
            "f_vector": X.f_vector(),
            "euler_characteristic": X.euler_characteristic(),
            "fixed_sets": summary(X),
        },
        "objects": objects_section(X),
        "universal_euler_char": list(chi.coeffs),
        "char_map_of_euler_char": list(apply_char_map(X, chi)),
        "orbifold_euler_chars": list(orbifold_table(X)),
        "pushforward_to_point": list(pushforward_to_point(chi).coeffs),
        "j1_of_pushforward": list(j1(pushforward_to_point(chi)).coeffs),
        "h0": {
            "field": field_tag,
            "generators": P.ngens,
            "free_rank": P.presentation.free_rank,
            "torsion": list(P.presentation.torsion),
            "invariant_factors": list(P.presentation.factors),
        },
        "e1_class": {"vector": list(c1.vector), "normal_form": list(c1.normal_form)},
        "class": {
            "field": field_tag,
            "vector": list(cls.vector),
            "normal_form": list(cls.normal_form),
            "order": _order_json(element_order(cls)),
            "pushforward_to_group": list(h0_to_group(X, cls).coeffs),
        },
        "gamma_q": gamma_q(X),
        "verification": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in checks],
        "note": (
            "the class is the image of the universal Euler characteristic in H_0 with coefficients in the"
            " representation ring; the equivariant Euler class in KO-homology is its image under a further"
            " map that is not computed here"
        ),
    }


# --- commands -------------------------------------------------------------


def _report(raw, **sections):
    out = {"tool": "eqeuler", "version": io.VERSION, "inputs": {k: io.fingerprint(v) for k, v in raw.items()}}
    out.update(sections)
    return out


def cmd_group_info(args):
    data = io.read_json(args.group)
    G = io.group_from_json(data)
    return _report({"group": data}, group=group_section(G))


def cmd_reps(args):
    data = io.read_json(args.group)
    G = io.group_from_json(data)
    return _report({"group": data}, reps=reps_section(G, args.field))


def cmd_marks(args):
    data = io.read_json(args.group)
    G = io.group_from_json(data)
    return _report({"group": data}, marks=marks_section(G, args.field))


def cmd_category(args):
    G, X, raw = io.load_inputs(args.inputs)
    return _report(raw, category=category_section(X))


def cmd_euler(args):
    G, X, raw = io.load_inputs(args.inputs)
    report = _report(raw, euler=euler_section(X, args.field))
    if not all(r["passed"] for r in report["euler"]["verification"]):
        raise VerificationFailed(report)
    return report


def cmd_verify(args):
    G, X, raw = io.load_inputs(args.inputs)
    checks = verify_suite(X)
    report = _report(
        raw,
        verification=[{"name": r.name, "passed": r.passed, "detail": r.detail} for r in checks],
        passed=all(r.passed for r in checks),
    )
    if not report["passed"]:
        raise VerificationFailed(report)
    return report


def cmd_builtin(args):
    if args.name == "s3-sphere3":
        X = s3_sphere3()
    elif args.name == "s3-sphere5":
        X = s3_sphere5()
    else:
        if not args.spec:
            raise InputError("rep-sphere needs a spec file")
        spec = io.read_json(args.spec)
        if not isinstance(spec, dict) or "group" not in spec or "pieces" not in spec:
            raise InputError('rep-sphere spec needs "group" and "pieces"')
        G = io.group_from_json(spec["group"])
        if not isinstance(spec["pieces"], list) or not all(isinstance(p, dict) for p in spec["pieces"]):
            raise InputError("pieces must be a list of objects")
        try:
            X = builtin_rep_sphere(G, spec["pieces"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed piece data: {exc}") from None
    return io.bundle(X.group, X)


def build_parser():
    p = argparse.ArgumentParser(prog="eqeuler", description="Equivariant Euler characteristics and Bredon H_0.")
    p.add_argument("--out", help="write the JSON result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("group-info", help="order, elements, subgroup classes, F-conjugacy classes")
    s.add_argument("group")
    s.set_defaults(func=cmd_group_info)

    s = sub.add_parser("reps", help="representation data")
    reps_sub = s.add_subparsers(dest="what", required=True)
    t = reps_sub.add_parser("table", help="character table over C, R or Q")
    t.add_argument("group")
    t.add_argument("--field", choices=["C", "R", "Q"], default="C")
    t.set_defaults(func=cmd_reps)

    s = sub.add_parser("marks", help="table of marks and the map to the representation ring")
    s.add_argument("group")
    s.add_argument("--field", choices=["R", "Q", "C"], default="R")
    s.set_defaults(func=cmd_marks)

    for name, func, helptext in (
        ("category", cmd_category, "objects, morphism counts and the character map"),
        ("euler", cmd_euler, "universal Euler characteristic and its H_0 class"),
        ("verify", cmd_verify, "run all consistency checks"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("inputs", nargs="+", help="bundle file, or group file and complex file ('-' for stdin)")
        if name == "euler":
            s.add_argument("--field", choices=["R", "Q"], default="R")
        s.set_defaults(func=func)

    s = sub.add_parser("builtin", help="emit a built-in group and complex bundle")
    s.add_argument("name", choices=["s3-sphere3", "s3-sphere5", "rep-sphere"])
    s.add_argument("spec", nargs="?", help="piece specification for rep-sphere")
    s.set_defaults(func=cmd_builtin)

    for s in sub.choices.values():
        s.add_argument("--out", help="write the JSON result here instead of stdout", default=argparse.SUPPRESS)
    return p


def _emit(obj, path):
    text = io.dumps(obj)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(exc):
    sys.stderr.write(json.dumps(exc.to_json(), sort_keys=True) + "\n")


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = getattr(args, "out", None)
    try:
        result = args.func(args)
    except VerificationFailed as exc:
        _emit(exc.report, out)
        return 2
    except MathematicalInconsistency as exc:
        _error(exc)
        return 2
    except EqEulerError as exc:
        _error(exc)
        return 1
    _emit(result, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
