"""JSON encoding of every object the CLI reads or writes.

Scalars are strings ("3", "-1/2").  Nested objects inherit the
enclosing "field" (default "q").  An algebra may be given inline or as
a built-in fixture name such as "exD".
"""

from __future__ import annotations

import json

from .bimodule import DendriformBimodule
from .dendriform import FIXTURES, DendriformAlgebra, InducedAlgebra
from .errors import ParseError, SchemaError
from .extending import MAP_NAMES, ExtendingDatum, map_shape
from .extension import Extension
from .field import QQ, Field, field_from_spec
from .flag import ENDOS, FUNCTIONALS, FlagDatum
from .linalg import BilinearMap, LinMap


def _field(obj: dict, inherited: Field | None) -> Field:
    if "field" in obj:
        return field_from_spec(obj["field"])
    return inherited or QQ


def _need(obj, key):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise SchemaError(f"missing key {key!r}")
    return obj[key]


def _int(obj, key) -> int:
    v = _need(obj, key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise SchemaError(f"{key!r} must be a non-negative integer")
    return v


def scalar_to_json(F: Field, a) -> str:
    return F.format(a)


def scalar_from_json(F: Field, s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"scalar must be a string or integer, got {s!r}")
    return F.parse(str(s))


def vector_to_json(F: Field, v) -> list:
    return [F.format(a) for a in v]


def vector_from_json(F: Field, data, n: int | None = None) -> tuple:
    if not isinstance(data, list):
        raise SchemaError("vector must be a list")
    if n is not None and len(data) != n:
        raise SchemaError(f"vector must have length {n}, got {len(data)}")
    return tuple(scalar_from_json(F, s) for s in data)


def bilinear_to_json(B: BilinearMap) -> dict:
    F = B.field
    return {"left": B.left, "right": B.right, "target": B.target,
            "c": [[vector_to_json(F, v) for v in row] for row in B.c]}


def bilinear_from_json(F: Field, data, shape: tuple | None = None) -> BilinearMap:
    left, right, target = _int(data, "left"), _int(data, "right"), _int(data, "target")
    if shape is not None and (left, right, target) != tuple(shape):
        raise SchemaError(f"bilinear map has shape {(left, right, target)}, expected {tuple(shape)}")
    c = _need(data, "c")
    if not isinstance(c, list) or len(c) != left or any(not isinstance(r, list) or len(r) != right for r in c):
        raise SchemaError(f"'c' must be a {left}x{right} array of vectors")
    entries = tuple(tuple(vector_from_json(F, v, target) for v in row) for row in c)
    return BilinearMap(F, left, right, target, entries)


def matrix_to_json(M: LinMap) -> list:
    return [vector_to_json(M.field, r) for r in M.m]


def matrix_from_json(F: Field, data, rows: int | None = None, cols: int | None = None) -> LinMap:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise SchemaError("matrix must be a list of rows")
    if rows is not None and len(data) != rows:
        raise SchemaError(f"matrix must have {rows} rows, got {len(data)}")
    width = cols if cols is not None else (len(data[0]) if data else 0)
    m = [vector_from_json(F, r, width) for r in data]
    return LinMap.from_rows(F, m, width)


def algebra_to_json(alg: DendriformAlgebra) -> dict:
    return {"type": "algebra", "field": alg.field.name, "dim": alg.dim,
            "succ": bilinear_to_json(alg.succ), "prec": bilinear_to_json(alg.prec)}


def algebra_from_json(data, inherited: Field | None = None) -> DendriformAlgebra:
    if isinstance(data, str):
        if data not in FIXTURES:
            raise SchemaError(f"unknown algebra fixture {data!r}")
        return FIXTURES[data](inherited or QQ)
    F = _field(data, inherited)
    n = _int(data, "dim")
    return DendriformAlgebra(F, n, bilinear_from_json(F, _need(data, "succ"), (n, n, n)),
                             bilinear_from_json(F, _need(data, "prec"), (n, n, n)))


def induced_to_json(alg: InducedAlgebra) -> dict:
    return {"type": "induced", "kind": alg.kind, "field": alg.field.name, "dim": alg.dim,
            "product": bilinear_to_json(alg.product)}


def bimodule_to_json(bm: DendriformBimodule) -> dict:
    out = {"type": "bimodule", "field": bm.field.name, "base": algebra_to_json(bm.base), "vdim": bm.vdim}
    for name in ("tr1", "tr2", "tl1", "tl2"):
        out[name] = bilinear_to_json(getattr(bm, name))
    return out


def bimodule_from_json(data, inherited: Field | None = None) -> DendriformBimodule:
    F = _field(data, inherited)
    base = algebra_from_json(_need(data, "base"), F)
    m = _int(data, "vdim")
    n = base.dim
    shapes = {"tr1": (n, m, m), "tr2": (n, m, m), "tl1": (m, n, m), "tl2": (m, n, m)}
    maps = {k: bilinear_from_json(F, data[k], s) if k in data else BilinearMap.zero(F, *s)
            for k, s in shapes.items()}
    return DendriformBimodule(base, m, **maps)


def datum_to_json(w: ExtendingDatum) -> dict:
    out = {"type": "datum", "field": w.field.name, "base": algebra_to_json(w.base), "vdim": w.vdim}
    for name in MAP_NAMES:
        out[name] = bilinear_to_json(getattr(w, name))
    return out


def datum_from_json(data, inherited: Field | None = None) -> ExtendingDatum:
    F = _field(data, inherited)
    base = algebra_from_json(_need(data, "base"), F)
    m = _int(data, "vdim")
    maps = {}
    for name in MAP_NAMES:
        shape = map_shape(name, base.dim, m)
        maps[name] = bilinear_from_json(F, data[name], shape) if name in data else BilinearMap.zero(F, *shape)
    return ExtendingDatum(base, m, **maps)


def extension_to_json(ext: Extension) -> dict:
    out = {"type": "extension", "field": ext.field.name, "algebra": algebra_to_json(ext.total),
           "subdim": ext.subdim}
    if ext.retraction is not None:
        out["retraction"] = matrix_to_json(ext.retraction)
    return out


def extension_from_json(data, inherited: Field | None = None) -> Extension:
    F = _field(data, inherited)
    alg = algebra_from_json(_need(data, "algebra"), F)
    n = _int(data, "subdim")
    if n > alg.dim:
        raise SchemaError("subdim exceeds the algebra's dimension")
    rho = None
    if data.get("retraction") is not None:
        rho = matrix_from_json(F, data["retraction"], n, alg.dim)
    return Extension(alg, n, rho)


def flag_to_json(fd: FlagDatum) -> dict:
    F = fd.field
    out = {"type": "flag", "field": F.name, "base": algebra_to_json(fd.base)}
    for name in FUNCTIONALS:
        out[name] = vector_to_json(F, getattr(fd, name))
    for name in ENDOS:
        out[name] = matrix_to_json(getattr(fd, name))
    out["a1"], out["a2"] = vector_to_json(F, fd.a1), vector_to_json(F, fd.a2)
    out["k1"], out["k2"] = F.format(fd.k1), F.format(fd.k2)
    return out


def flag_from_json(data, inherited: Field | None = None) -> FlagDatum:
    F = _field(data, inherited)
    base = algebra_from_json(data.get("base", "exD"), F)
    n = base.dim
    zero_v = ["0"] * n
    zero_m = [["0"] * n for _ in range(n)]
    funcs = [vector_from_json(F, data.get(k, zero_v), n) for k in FUNCTIONALS]
    endos = [matrix_from_json(F, data.get(k, zero_m), n, n) for k in ENDOS]
    a1 = vector_from_json(F, data.get("a1", zero_v), n)
    a2 = vector_from_json(F, data.get("a2", zero_v), n)
    k1 = scalar_from_json(F, data.get("k1", "0"))
    k2 = scalar_from_json(F, data.get("k2", "0"))
    return FlagDatum(base, *funcs, *endos, a1, a2, k1, k2)


def report_to_json(rep, F: Field | None = None) -> dict:
    fmt = F.format if F is not None else str
    return {"ok": rep.ok,
            "violations": [{"label": v.label, "line": v.line, "where": list(v.where),
                            "lhs": [fmt(a) for a in v.lhs], "rhs": [fmt(a) for a in v.rhs]}
                           for v in rep.violations]}


LOADERS = {
    "algebra": algebra_from_json,
    "bimodule": bimodule_from_json,
    "datum": datum_from_json,
    "extension": extension_from_json,
    "flag": flag_from_json,
}


def load(data, what: str | None = None, field: Field | None = None):
    """Parse a decoded JSON document; ``what`` overrides its "type" key."""
    if isinstance(data, str) and (what in (None, "algebra", "dendriform")):
        return "algebra", algebra_from_json(data, field)
    kind = what or (data.get("type") if isinstance(data, dict) else None)
    if kind == "dendriform":
        kind = "algebra"
    if kind not in LOADERS:
        raise SchemaError(f"unknown or missing object type {kind!r}")
    try:
        return kind, LOADERS[kind](data, field)
    except (KeyError, TypeError, IndexError) as exc:
        raise SchemaError(f"malformed {kind}: {exc}") from exc


def loads(text: str, what: str | None = None, field: Field | None = None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return load(data, what, field)


def dumps(obj: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"
