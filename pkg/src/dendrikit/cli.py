"""Command-line front end.

Exit codes: 0 success/valid, 1 invalid input structure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize as ser
from .bimodule import check_bimodule
from .deformation import deform, enumerate_complements, validate_deformation
from .dendriform import FIXTURES, KINDS, check_dendriform, induce
from .errors import DendriError, ParseError, ReportError, SchemaError, UnknownTable
from .extending import (abelian_semidirect, bicrossed_product, cocycle_product, nonabelian_product,
                        unified_product, validate_cocycle_system, validate_datum, validate_matched_pair,
                        validate_nonabelian_system)
from .extension import check_extension, extract_datum, rebuild_extension
from .field import QQ, field_from_spec
from .flag import classify_flags, datum_to_flag, flag_to_extension, validate_flag
from .tables import VERIFIERS, verify_table

CHECKS = {
    "dendriform": ("algebra", check_dendriform),
    "algebra": ("algebra", check_dendriform),
    "bimodule": ("bimodule", check_bimodule),
    "datum": ("datum", validate_datum),
    "matched-pair": ("datum", validate_matched_pair),
    "cocycle": ("datum", validate_cocycle_system),
    "nonabelian": ("datum", validate_nonabelian_system),
    "extension": ("extension", check_extension),
    "flag": ("flag", validate_flag),
}

PRODUCTS = {
    "unified": ("datum", unified_product),
    "bicrossed": ("datum", bicrossed_product),
    "cocycle": ("datum", cocycle_product),
    "nonabelian": ("datum", nonabelian_product),
    "abelian": ("bimodule", abelian_semidirect),
}


class UsageError(DendriError):
    pass


def _read(path: str):
    """A JSON document from a file, or a fixture name such as ``exD``."""
    if path in FIXTURES and not os.path.exists(path):
        return path
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc


def _field(args):
    return field_from_spec(args.field) if args.field else None


def _load(path: str, kind: str, args):
    return ser.load(_read(path), kind, _field(args))[1]


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else ser.dumps(payload, args.pretty)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _doc_type(doc) -> str | None:
    if isinstance(doc, str):
        return "algebra"
    return doc.get("type") if isinstance(doc, dict) else None


def cmd_check(args) -> int:
    doc = _read(args.path)
    what = args.what or _doc_type(doc)
    if what not in CHECKS:
        raise SchemaError(f"cannot tell what to check; pass --what ({', '.join(CHECKS)})")
    kind, check = CHECKS[what]
    _, obj = ser.load(doc, kind, _field(args))
    rep = check(obj)
    F = getattr(obj, "field", None)
    if args.json:
        _emit(args, ser.report_to_json(rep, F))
    else:
        fmt = F.format if F is not None else str
        lines = [f"{what}: valid"] if rep.ok else [f"{what}: invalid"] + rep.lines(fmt, limit=args.limit)
        if not rep.ok and len(rep.violations) > args.limit:
            lines.append(f"... {len(rep.violations) - args.limit} more")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if rep.ok else 1


def cmd_tables(args) -> int:
    F = field_from_spec(args.field) if args.field else QQ
    which = args.which or sorted(VERIFIERS)
    results = []
    for w in which:
        if w not in VERIFIERS:
            raise UnknownTable(f"no table {w}; choose 1-5")
        results.append(verify_table(w, F))
    if args.json:
        _emit(args, [{"table": r.which, "title": r.title, "field": r.field.name, "ok": r.ok,
                      "rows": [{"label": row.label, "status": row.status, "detail": row.detail} for row in r.rows],
                      "notes": r.notes} for r in results])
    else:
        _emit(args, "\n\n".join(r.render() for r in results) + "\n")
    return 0 if all(r.ok for r in results) else 1


def cmd_product(args) -> int:
    kind, build = PRODUCTS[args.kind]
    obj = _load(args.path, kind, args)
    prod = build(obj)
    _emit(args, ser.algebra_to_json(prod.algebra))
    return 0


def cmd_extract(args) -> int:
    ext = _load(args.path, "extension", args)
    w = extract_datum(ext)
    if args.flag:
        _emit(args, ser.flag_to_json(datum_to_flag(w)))
    else:
        _emit(args, ser.datum_to_json(w))
    return 0


def cmd_extend(args) -> int:
    """The extension built from a datum or flag datum."""
    doc = _read(args.path)
    kind = args.what or _doc_type(doc)
    if kind == "flag":
        fd = ser.load(doc, "flag", _field(args))[1]
        rep = validate_flag(fd)
        if not rep.ok:
            raise ReportError("flag datum fails validation", rep)
        ext = flag_to_extension(fd)
    elif kind == "datum":
        ext = rebuild_extension(ser.load(doc, "datum", _field(args))[1])
    else:
        raise SchemaError("extend needs a datum or a flag document")
    _emit(args, ser.extension_to_json(ext))
    return 0


def cmd_classify_flag(args) -> int:
    F = field_from_spec(args.field) if args.field else None
    doc = _read(args.algebra)
    alg = ser.algebra_from_json(doc, F)
    cls = classify_flags(alg, workers=args.threads)
    fmt = alg.field.format

    def tuples(group):
        return [[fmt(v) for v in fd.values()] for fd in group]

    out = {"algebra": args.algebra if isinstance(doc, str) else "inline", "field": alg.field.name,
           "valid": len(cls.valid), "orbits": len(cls.orbits),
           "cohomology_classes": len(cls.cohomology_classes),
           "representatives": tuples(cls.representatives)}
    if args.orbits:
        out["orbit_members"] = [tuples(o) for o in cls.orbits]
        out["cohomology_members"] = [tuples(c) for c in cls.cohomology_classes]
    _emit(args, out)
    return 0


def cmd_complements(args) -> int:
    ext = _load(args.path, "extension", args)
    cls = enumerate_complements(ext, workers=args.threads)
    F = ext.field
    out = {"field": F.name, "index": cls.index,
           "deformations": [ser.matrix_to_json(d) for d in cls.deformations],
           "classes": [[ser.matrix_to_json(d) for d in c] for c in cls.classes],
           "complements": [ser.matrix_to_json(c.basis) for c in cls.complements]}
    _emit(args, out)
    return 0


def cmd_derive(args) -> int:
    alg = _load(args.path, "algebra", args)
    _emit(args, ser.induced_to_json(induce(alg, args.to)))
    return 0


def cmd_deform(args) -> int:
    w = _load(args.path, "datum", args)
    raw = _read(args.d)
    if isinstance(raw, dict):
        raw = raw.get("d", raw.get("matrix"))
    d = ser.matrix_from_json(w.field, raw, w.base.dim, w.vdim)
    rep = validate_deformation(w, d)
    if not rep.ok:
        raise ReportError("not a deformation map", rep)
    _emit(args, ser.algebra_to_json(deform(w, d)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q or gf:p (default: the file's own field, else q)")
    common.add_argument("--out", help="write output here instead of standard output")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--json", action="store_true", help="JSON output where text is the default")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default DENDRIKIT_THREADS)")

    p = argparse.ArgumentParser(prog="dendrikit", description="Dendriform algebras and their extending structures.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="validate an object")
    c.add_argument("path")
    c.add_argument("--what", choices=sorted(CHECKS))
    c.add_argument("--limit", type=int, default=20, help="violations to print")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("tables", parents=[common], help="regenerate and verify the reference tables")
    t.add_argument("--which", type=int, action="append", help="table number (repeatable; default all)")
    t.set_defaults(func=cmd_tables)

    pr = sub.add_parser("product", parents=[common], help="build a product algebra")
    pr.add_argument("path")
    pr.add_argument("--kind", choices=sorted(PRODUCTS), default="unified")
    pr.set_defaults(func=cmd_product)

    e = sub.add_parser("extract", parents=[common], help="read the extending datum off an extension")
    e.add_argument("path")
    e.add_argument("--flag", action="store_true", help="emit a flag datum (codimension 1 only)")
    e.set_defaults(func=cmd_extract)

    x = sub.add_parser("extend", parents=[common], help="build the extension of a datum or flag datum")
    x.add_argument("path")
    x.add_argument("--what", choices=["datum", "flag"])
    x.set_defaults(func=cmd_extend)

    cf = sub.add_parser("classify-flag", parents=[common], help="orbits of flag datums over GF(p)")
    cf.add_argument("--algebra", required=True, help="fixture name or algebra JSON file")
    cf.add_argument("--orbits", action="store_true", help="list every orbit's members")
    cf.set_defaults(func=cmd_classify_flag)

    co = sub.add_parser("complements", parents=[common], help="complements and the index [E:D] over GF(p)")
    co.add_argument("path")
    co.set_defaults(func=cmd_complements)

    d = sub.add_parser("derive", parents=[common], help="induced associative, preLie or Lie algebra")
    d.add_argument("path")
    d.add_argument("--to", choices=KINDS, required=True)
    d.set_defaults(func=cmd_derive)

    df = sub.add_parser("deform", parents=[common], help="the deformed algebra V_d")
    df.add_argument("path")
    df.add_argument("--d", required=True, help="JSON matrix of d: V -> D")
    df.set_defaults(func=cmd_deform)
    return p


def _fail(args, message: str, rep=None) -> None:
    sys.stdout.write(f"error: {message}\n")
    if rep is not None:
        fmt = str
        for line in rep.lines(fmt, limit=getattr(args, "limit", 20)):
            sys.stdout.write(f"  {line}\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ReportError as exc:
        _fail(args, str(exc), exc.report)
        return 1
    except (ParseError, SchemaError, UsageError, UnknownTable) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except DendriError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
