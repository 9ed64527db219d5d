"""Command-line front end: ``curvestab <verb> [options]``.

Exit status is 0 on success, 1 for invalid input and 2 when an internal
consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import render
from .auslander import (QuiverModule, enumerate_submodule_types, ext_dims,
                        projective_resolution)
from .curve_model import (conductor_lookup, small_nr_presentation,
                          validate_curve_config)
from .errors import CurveStabError, InvariantError, ValidationError
from .genus import G
from .moduli_geometry import (fiber_description, flip_data, moduli_dim,
                              wall_crossing_report)
from .numerical_k import NumClass, euler, euler_auslander
from .serialize import dumps, jsonable, rat
from .stability import StabilityParams, check_condition, support_check, support_constants
from .walls import ParamRegion, chambers, enumerate_walls

VERBS = ("walls", "chambers", "flip", "euler", "dim", "support", "auslander",
         "conductor", "report")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message, "arguments")


def _common(p):
    p.add_argument("--preset")
    p.add_argument("--spec", help="curve spec JSON file")
    p.add_argument("--class", dest="classes", action="append", default=[],
                   help="numerical class, e.g. 6,1,6 (repeat for pairs)")
    p.add_argument("--params", help="stability parameters as JSON")
    p.add_argument("--t")
    p.add_argument("--delta1")
    p.add_argument("--delta2")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--genus", type=int)
    g.add_argument("--genus-symbolic", action="store_true")
    p.add_argument("--format", default="md", choices=["md", "markdown", "csv", "json"])


def build_parser():
    parser = _Parser(prog="curvestab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    for verb in VERBS:
        p = sub.add_parser(verb)
        _common(p)
        if verb == "conductor":
            p.add_argument("kind", nargs="?", default="table")
            p.add_argument("param", nargs="?", type=int)
            p.add_argument("--multiplicities")
        if verb == "auslander":
            p.add_argument("--n", type=int)
            p.add_argument("--module", dest="modules", action="append", default=[])
    return parser


def _curve(args):
    if args.spec and args.preset:
        raise ValidationError("give either --preset or --spec", "arguments")
    if args.spec:
        try:
            with open(args.spec) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read curve spec: {exc}", "spec") from exc
        return validate_curve_config(raw)
    if args.preset:
        return validate_curve_config(args.preset)
    raise ValidationError("a curve is required (--preset or --spec)", "arguments")


def _classes(args, curve, count=1):
    if len(args.classes) < count:
        raise ValidationError(f"need {count} --class argument(s)", "arguments")
    try:
        return [NumClass.parse(c, curve) for c in args.classes]
    except (ValueError, json.JSONDecodeError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"bad class: {exc}", "class") from exc


def _genus(args):
    return args.genus if args.genus is not None else G


def _params(args, curve):
    try:
        if args.params:
            return StabilityParams.from_json(json.loads(args.params), curve)
        if args.t is not None:
            return StabilityParams.node_path(Fraction(args.t))
        if args.delta1 is not None or args.delta2 is not None:
            return StabilityParams.tacnode(Fraction(args.delta1 or 0), Fraction(args.delta2 or 0))
    except (ValueError, ZeroDivisionError, KeyError, json.JSONDecodeError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"bad parameters: {exc}", "params") from exc
    raise ValidationError("parameters required (--params, --t or --delta1/--delta2)",
                          "arguments")


def _fmt(args):
    return "md" if args.format == "markdown" else args.format


def cmd_walls(args):
    curve = _curve(args)
    (v,) = _classes(args, curve)[:1]
    g = _genus(args)
    rep = wall_crossing_report(v, curve, g=g)
    fmt = _fmt(args)
    if fmt == "json":
        return dumps({"v": v, "walls": [
            {"label": lab, "equation": wl.hyperplane.equation(), "locus": wl.locus,
             "decompositions": [{"u": d.pu, "mu": d.mu, "w": d.pw, "mw": d.mw}
                                for d in wl.decomps],
             "simple": wl.simple, "numerical": wl.numerical}
            for lab, wl in zip(rep.wall_labels, rep.walls)]}, args.genus)
    if curve.kind == "node":
        flips = dict(rep.flips)
        rows = render.node_wall_rows(rep.walls, rep.wall_labels, flips, args.genus)
        if fmt == "csv":
            rows = [[r[0], r[1], f"{wl.main.mw};{wl.main.mu}", r[2], r[3]]
                    for r, wl in zip(rows, rep.walls)]
            return render.table(["t", "decomposition", "multiplicities", "simple", "flipped locus"],
                                rows, "csv")
        return render.table(render.NODE_HEADER, rows)
    rows = render.plane_wall_rows(rep.walls, rep.wall_labels)
    if fmt == "csv":
        rows = [[r[3], f"{r[1]} + {r[2]}", f"{wl.main.mu};{wl.main.mw}",
                 "Yes" if wl.simple else "No"] for r, wl in zip(rows, rep.walls)]
        return render.table(["equation", "decomposition", "multiplicities", "simple"], rows, "csv")
    return render.table(render.PLANE_HEADER, rows)


def cmd_chambers(args):
    curve = _curve(args)
    (v,) = _classes(args, curve)[:1]
    region = ParamRegion.for_curve(curve)
    walls = enumerate_walls(v, region, curve)
    chs = chambers(v, curve, region, walls)
    labels = [f"W{i + 1}" for i in range(len(walls))]
    fmt = _fmt(args)
    if fmt == "json":
        return dumps([{"label": c.label, "sample": c.sample,
                       "bounding": [labels[i] for i in c.bounding]} for c in chs])
    out = render.table(["Chamber", "Sample", "Bounding walls"],
                       render.chamber_rows(chs, labels), fmt)
    if fmt == "md" and region.dim == 2:
        out += "\n```\n" + render.ascii_triangle(chs) + "```\n"
    return out


def cmd_flip(args):
    curve = _curve(args)
    g = _genus(args)
    cls = _classes(args, curve)
    if len(cls) == 2:
        fds = [("-", flip_data((cls[0], cls[1]), curve, g))]
    else:
        rep = wall_crossing_report(cls[0], curve, g=g)
        fds = list(rep.flips)
        if args.t is not None:
            t = Fraction(args.t)
            fds = [(lab, fd) for lab, fd in fds if fd.t == t]
    if _fmt(args) == "json":
        return dumps([{"wall": lab, "u": fd.u, "w": fd.w, "b": fd.b, "c": fd.c,
                       "base_dim": fd.base_dim, "locus_dims": fd.locus_dims,
                       "t": fd.t} for lab, fd in fds], args.genus)
    rows = [[lab, "-" if fd.t is None else rat(fd.t), fd.u, fd.w, render._val(fd.b, args.genus),
             render._val(fd.c, args.genus), render.flip_text(fd, args.genus)] for lab, fd in fds]
    return render.table(["Wall", "t", "u", "w", "b", "c", "Flipped locus"], rows, _fmt(args))


def cmd_euler(args):
    curve = _curve(args)
    u, w = _classes(args, curve, 2)[:2]
    val = euler(u, w, curve, _genus(args))
    if _fmt(args) == "json":
        return dumps({"u": u, "w": w, "chi": val}, args.genus)
    return f"{render._val(val, args.genus)}\n"


def cmd_dim(args):
    curve = _curve(args)
    (v,) = _classes(args, curve)[:1]
    val = moduli_dim(v, curve, _genus(args))
    if _fmt(args) == "json":
        return dumps({"v": v, "dim": val}, args.genus)
    return f"{render._val(val, args.genus)}\n"


def cmd_support(args):
    curve = _curve(args)
    params = _params(args, curve)
    if not check_condition(params, curve):
        raise ValidationError("parameters violate the region condition", "region")
    consts = support_constants(params, curve)
    doc = {"P0": consts.P0, "Q1": consts.Q1, "P1": consts.P1}
    if args.classes:
        (v,) = _classes(args, curve)[:1]
        doc["v"] = v
        doc["holds"] = support_check(params, curve, v)
    if _fmt(args) == "json":
        return dumps(doc)
    rows = [[k, rat(x) if isinstance(x, Fraction) else str(x)] for k, x in doc.items()]
    return render.table(["quantity", "value"], rows, _fmt(args))


def _module(text):
    try:
        return QuiverModule.from_json(json.loads(text))
    except (KeyError, ValueError, TypeError, json.JSONDecodeError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"bad module literal: {exc}", "module") from exc


def cmd_auslander(args):
    fmt = _fmt(args)
    if args.modules:
        mods = [_module(x) for x in args.modules]
        if len(mods) == 1:
            res = projective_resolution(mods[0])
            terms = [f"P1^{a} + P2^{b}" for a, b, _ in res.terms]
            if fmt == "json":
                return dumps({"length": res.length, "terms": terms})
            return "\n".join(f"Q_{i} = {t}" for i, t in enumerate(terms)) + "\n"
        h, e1, e2 = ext_dims(mods[0], mods[1])
        chi = euler_auslander(*mods[0].dims, *mods[1].dims)
        if fmt == "json":
            return dumps({"hom": h, "ext1": e1, "ext2": e2, "chi": chi})
        return render.table(["Hom", "Ext^1", "Ext^2", "chi"], [[h, e1, e2, chi]], fmt)
    n = args.n if args.n is not None else 2
    curve = validate_curve_config("tacnode")
    g = _genus(args)
    dims = {p: moduli_dim(NumClass.for_curve([1, 0, p[0], p[1]], curve), curve, g)
            for p in enumerate_submodule_types(n)} if n == 2 else None
    if fmt == "json":
        return dumps({"n": n, "types": sorted(enumerate_submodule_types(n)),
                      "dims": {f"{a},{b}": x for (a, b), x in (dims or {}).items()}}, args.genus)
    if dims is None:
        pairs = sorted(enumerate_submodule_types(n))
        return render.table(["l1", "l2"], pairs, fmt)
    rows = render.ell_table_rows(n, dims, args.genus)
    return render.table(rows[0][:1] + [str(x) for x in rows[0][1:]], rows[1:], fmt)


def cmd_conductor(args):
    fmt = _fmt(args)
    if args.multiplicities:
        mult = [int(x) for x in args.multiplicities.split(",")]
        desc = small_nr_presentation(mult)
        gens, rels = desc.presentation
        if fmt == "json":
            return dumps({"generators": gens, "relations": rels,
                          "embedding_dimension": desc.embedding_dimension})
        return (f"generators: {', '.join(gens)}\nrelations: {', '.join(rels)}\n"
                f"embedding dimension: {desc.embedding_dimension}\n")
    if args.kind == "table":
        return render.table(["Singularity", "Local equation", "Conductor"],
                            render.conductor_rows(), fmt)
    desc = conductor_lookup(args.kind, args.param)
    if fmt == "json":
        return dumps({"kind": desc.kind, "conductor": desc.conductor_display,
                      "generators": desc.conductor, "note": desc.note})
    out = desc.conductor_display + "\n"
    if desc.note:
        args.stderr.write(f"note: {desc.note}\n")
    return out


def cmd_report(args):
    curve = _curve(args)
    (v,) = _classes(args, curve)[:1]
    rep = wall_crossing_report(v, curve, g=_genus(args))
    if _fmt(args) == "json":
        return dumps(rep, args.genus)
    return render.report_markdown(rep, args.genus)


COMMANDS = {name: globals()[f"cmd_{name}"] for name in VERBS}


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, run the verb and write its document; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if not args.verb:
            raise ValidationError("missing verb; choose one of " + ", ".join(VERBS), "arguments")
        args.stderr = stderr
        doc = COMMANDS[args.verb](args)
    except InvariantError as exc:
        stderr.write(f"invariant failure: {exc}\n")
        return 2
    except ValidationError as exc:
        stderr.write(json.dumps({"error": str(exc), "invariant": exc.invariant}) + "\n")
        return 1
    except CurveStabError as exc:
        stderr.write(json.dumps({"error": str(exc), "invariant": type(exc).__name__}) + "\n")
        return 1
    stdout.write(doc)
    return 0


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
