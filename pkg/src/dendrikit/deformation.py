"""Deformation maps, deformed algebras V_d and dendriform complements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from itertools import product

from .dendriform import DendriformAlgebra, check_dendriform, check_morphism
from .errors import (DimMismatch, InfiniteField, InvalidDatum, InvalidDeformation,
                     NotAComplement, SingularDelta)
from .extending import ExtendingDatum, validate_datum
from .extension import Extension, extract_datum, normalize
from .field import Field
from .linalg import BilinearMap, LinMap, unit_vec, vadd, vsub
from .parallel import pmap
from .report import ValidationReport
from .unionfind import UnionFind


@dataclass(frozen=True)
class DeformationMap:
    datum: ExtendingDatum
    d: LinMap  # V -> D, n x m


@dataclass(frozen=True)
class Complement:
    ext: Extension
    basis: LinMap  # columns span the complement, in E's coordinates


def _check_shape(w: ExtendingDatum, d: LinMap) -> None:
    if (d.rows, d.cols) != (w.base.dim, w.vdim):
        raise DimMismatch(f"d must be {w.base.dim}x{w.vdim}, got {d.rows}x{d.cols}")


def _require_valid(w: ExtendingDatum) -> None:
    rep = validate_datum(w)
    if not rep.ok:
        raise InvalidDatum("not an extending structure", rep)


def _deformation_report(w: ExtendingDatum, d: LinMap) -> ValidationReport:
    F, m, D = w.field, w.vdim, w.base
    eV = [unit_vec(F, m, k) for k in range(m)]
    rep = ValidationReport()
    pairs = (("succ", D.succ, w.tr1, w.tl1, w.lh1, w.rh1, w.f1, w.sv),
             ("prec", D.prec, w.tr2, w.tl2, w.lh2, w.rh2, w.f2, w.pv))
    for i, j in product(range(m), repeat=2):
        x, y = eV[i], eV[j]
        dx, dy = d(x), d(y)
        for line, (name, op, tr, tl, lh, rh, f, vop) in enumerate(pairs, 1):
            lhs = vsub(F, op(dx, dy), d(vop(x, y)))
            rhs = d(vadd(F, tr(dx, y), tl(x, dy)))
            for t in (lh(dx, y), rh(x, dy), f(x, y)):
                rhs = vsub(F, rhs, t)
            rep.check(f"deformation {name}", (i, j), lhs, rhs, line)
    return rep


def validate_deformation(w: ExtendingDatum, d: LinMap) -> ValidationReport:
    """The two deformation identities on every pair of V-basis vectors."""
    _check_shape(w, d)
    _require_valid(w)
    return _deformation_report(w, d)


def _deformed(w: ExtendingDatum, d: LinMap) -> DendriformAlgebra:
    F, m = w.field, w.vdim
    eV = [unit_vec(F, m, k) for k in range(m)]

    def table(vop, tr, tl):
        return BilinearMap.from_function(
            F, m, m, m, lambda i, j: vadd(F, vop(eV[i], eV[j]), vadd(F, tr(d(eV[i]), eV[j]), tl(eV[i], d(eV[j])))))

    return DendriformAlgebra(F, m, table(w.sv, w.tr1, w.tl1), table(w.pv, w.tr2, w.tl2))


def deform(w: ExtendingDatum, d: LinMap | DeformationMap) -> DendriformAlgebra:
    """V_d: x ≻_d y = x ≻_V y + d(x) ▷1 y + x ◁1 d(y), and likewise for ≺."""
    if isinstance(d, DeformationMap):
        d = d.d
    rep = validate_deformation(w, d)
    if not rep.ok:
        raise InvalidDeformation("not a deformation map", rep)
    return _deformed(w, d)


def _closed(E: DendriformAlgebra, cols: list) -> ValidationReport:
    """Products of the given vectors stay in their span."""
    F = E.field
    M = LinMap.from_columns(F, cols, E.dim)
    rep = ValidationReport()
    for i, j in product(range(len(cols)), repeat=2):
        for name, op in (("succ", E.s), ("prec", E.p)):
            v = op(cols[i], cols[j])
            if M.solve(v) is None:
                rep.add(f"closed {name}", (i, j), v, ())
    return rep


def check_complement(comp: Complement) -> ValidationReport:
    ext, B = comp.ext, comp.basis
    F, n, N = ext.field, ext.subdim, ext.total.dim
    rep = ValidationReport()
    if B.rows != N or B.cols != N - n:
        rep.add("dimension", (), (B.rows, B.cols), (N, N - n))
        return rep
    joint = LinMap.from_columns(F, ext.inclusion().columns() + B.columns(), N)
    if joint.rank() != N:
        rep.add("transversal", (), (joint.rank(),), (N,))
    rep.extend(_closed(ext.total, B.columns()))
    return rep


def _require_complement(comp: Complement) -> None:
    rep = check_complement(comp)
    if not rep.ok:
        raise NotAComplement("not a dendriform complement of D", rep)


def _embedding_report(norm: Extension, d: LinMap, Vd: DendriformAlgebra) -> ValidationReport:
    """x ↦ (d(x), x) is an injective algebra morphism V_d → E."""
    F, n, m = norm.field, norm.subdim, norm.vdim
    phi = LinMap.from_columns(F, [d.column(k) + unit_vec(F, m, k) for k in range(m)], n + m)
    rep = ValidationReport()
    E = norm.total
    for i, j in product(range(m), repeat=2):
        x, y = unit_vec(F, m, i), unit_vec(F, m, j)
        rep.check("embedding succ", (i, j), phi(Vd.s(x, y)), E.s(phi(x), phi(y)))
        rep.check("embedding prec", (i, j), phi(Vd.p(x, y)), E.p(phi(x), phi(y)))
    if phi.rank() != m:
        rep.add("embedding injective", (), (phi.rank(),), (m,))
    return rep


def _to_deformation(ext: Extension, comp: Complement) -> LinMap:
    norm, P = normalize(ext)
    F, n, m = ext.field, ext.subdim, ext.vdim
    B = P.inverse().compose(comp.basis)
    U = LinMap.from_rows(F, B.m[:n], m)
    W = LinMap.from_rows(F, B.m[n:], m)
    return U.compose(W.inverse())


def _to_complement(ext: Extension, d: LinMap) -> Complement:
    _, P = normalize(ext)
    F, n, m = ext.field, ext.subdim, ext.vdim
    cols = [d.column(k) + unit_vec(F, m, k) for k in range(m)]
    return Complement(ext, P.compose(LinMap.from_columns(F, cols, n + m)))


def _same_span(F: Field, a: LinMap, b: LinMap) -> bool:
    joint = LinMap.from_columns(F, a.columns() + b.columns(), a.rows)
    return joint.rank() == a.rank() == b.rank()


def complement_to_deformation(ext: Extension, comp: Complement) -> DeformationMap:
    """Δ1: d = −d̃|_V, where d̃ is the retraction with kernel ``comp``."""
    _require_complement(comp)
    w = extract_datum(ext)
    d = _to_deformation(ext, comp)
    rep = _deformation_report(w, d)
    norm, _ = normalize(ext)
    rep.extend(_embedding_report(norm, d, _deformed(w, d)))
    if not rep.ok:
        raise InvalidDeformation("complement did not yield a deformation map", rep)
    return DeformationMap(w, d)


def deformation_to_complement(ext: Extension, d: LinMap | DeformationMap) -> Complement:
    """Δ2: the complement {d(x) + x}; both round trips are verified."""
    if isinstance(d, DeformationMap):
        d = d.d
    w = extract_datum(ext)
    _check_shape(w, d)
    rep = _deformation_report(w, d)
    if not rep.ok:
        raise InvalidDeformation("not a deformation map", rep)
    comp = _to_complement(ext, d)
    _require_complement(comp)
    if _to_deformation(ext, comp) != d:
        raise InvalidDeformation("Δ1 ∘ Δ2 is not the identity")
    if not _same_span(ext.field, _to_complement(ext, _to_deformation(ext, comp)).basis, comp.basis):
        raise InvalidDeformation("Δ2 ∘ Δ1 is not the identity")
    return comp


def _equivalence_report(w: ExtendingDatum, d: LinMap, d2: LinMap, delta: LinMap) -> ValidationReport:
    F, m = w.field, w.vdim
    eV = [unit_vec(F, m, k) for k in range(m)]
    rep = ValidationReport()
    for i, j in product(range(m), repeat=2):
        x, y = eV[i], eV[j]
        dx, dy = delta(x), delta(y)
        for line, (name, vop, tr, tl) in enumerate(
                (("succ", w.sv, w.tr1, w.tl1), ("prec", w.pv, w.tr2, w.tl2)), 1):
            lhs = vsub(F, vop(dx, dy), delta(vop(x, y)))
            rhs = vadd(F, delta(tr(d(x), y)), delta(tl(x, d(y))))
            rhs = vsub(F, rhs, tr(d2(dx), dy))
            rhs = vsub(F, rhs, tl(dx, d2(dy)))
            rep.check(f"equivalence {name}", (i, j), lhs, rhs, line)
    return rep


def check_deformation_equivalence(w: ExtendingDatum, d: LinMap, d2: LinMap, delta: LinMap) -> ValidationReport:
    """d ∼ d2 through the automorphism δ of V.

    ``info["isomorphism"]`` records the independent check that δ is an
    algebra isomorphism V_d → V_d2.
    """
    _check_shape(w, d)
    _check_shape(w, d2)
    if (delta.rows, delta.cols) != (w.vdim, w.vdim):
        raise DimMismatch("δ must be an endomorphism of V")
    if not delta.is_invertible():
        raise SingularDelta("δ must be invertible")
    rep = _equivalence_report(w, d, d2, delta)
    rep.info["isomorphism"] = check_morphism(delta, _deformed(w, d), _deformed(w, d2)).ok
    return rep


def _matrices(F: Field, rows: int, cols: int):
    for entries in product(F.elements(), repeat=rows * cols):
        yield LinMap.from_rows(F, [entries[r * cols:(r + 1) * cols] for r in range(rows)], cols)


def _key(M: LinMap) -> tuple:
    return tuple(a for r in M.m for a in r)


def _valid_chunk(w: ExtendingDatum, first_row: tuple) -> list[tuple]:
    F, n, m = w.field, w.base.dim, w.vdim
    out = []
    for rest in product(F.elements(), repeat=(n - 1) * m):
        entries = first_row + rest
        d = LinMap.from_rows(F, [entries[r * m:(r + 1) * m] for r in range(n)], m)
        if _deformation_report(w, d).ok:
            out.append(entries)
    return out


def enumerate_deformations(w: ExtendingDatum, workers: int | None = None) -> list[LinMap]:
    """Every deformation map of ``w`` over its finite field, in entry order."""
    F, n, m = w.field, w.base.dim, w.vdim
    if not F.is_finite():
        raise InfiniteField("enumeration needs a finite field")
    _require_valid(w)
    firsts = list(product(F.elements(), repeat=m))
    found = sorted(e for chunk in pmap(partial(_valid_chunk, w), firsts, workers) for e in chunk)
    return [LinMap.from_rows(F, [e[r * m:(r + 1) * m] for r in range(n)], m) for e in found]


@dataclass
class ComplementClassification:
    datum: ExtendingDatum
    deformations: list  # LinMap, all valid deformation maps
    classes: list  # lists of LinMap under ∼
    complements: list  # Complement per deformation map, same order

    @property
    def index(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> list:
        return [c[0] for c in self.classes]


def enumerate_complements(ext: Extension, field: Field | None = None,
                          workers: int | None = None) -> ComplementClassification:
    """All complements of D in E over GF(p), grouped into isomorphism classes."""
    if field is not None and field != ext.field:
        raise DimMismatch("classification field differs from the extension's field")
    if not ext.field.is_finite():
        raise InfiniteField("enumeration needs a finite field")
    w = extract_datum(ext)
    F, m = w.field, w.vdim
    ds = enumerate_deformations(w, workers)
    deformed = {_key(d): _deformed(w, d) for d in ds}
    autos = [M for M in _matrices(F, m, m) if M.is_invertible()]
    uf = UnionFind(deformed)
    keys = sorted(deformed)
    for a_i, a in enumerate(keys):
        for b in keys[a_i + 1:]:
            if uf.find(a) == uf.find(b):
                continue
            if any(check_morphism(delta, deformed[a], deformed[b]).ok for delta in autos):
                uf.union(a, b)
    by_key = {_key(d): d for d in ds}
    classes = [[by_key[k] for k in cls] for cls in uf.classes()]
    complements = [_to_complement(ext, d) for d in ds]
    return ComplementClassification(w, ds, classes, complements)


def check_dendriform_deformation(w: ExtendingDatum, d: LinMap) -> ValidationReport:
    """V_d satisfies the dendriform axioms."""
    return check_dendriform(deform(w, d))
