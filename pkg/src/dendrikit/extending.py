"""Extending datums, their validity conditions, and unified products.

Map names inside an ``ExtendingDatum``:

    tr1, tr2   ▷1, ▷2   D×V→V        tl1, tl2   ◁1, ◁2   V×D→V
    rh1, rh2   ⇀1, ⇀2   V×D→D        lh1, lh2   ↼1, ↼2   D×V→D
    f1, f2     cocycles V×V→D        sv, pv     ≻_V, ≺_V V×V→V

The unified product on D×V puts the D coordinates first.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

from .bimodule import BOTH, DendriformBimodule, action_report, check_bimodule
from .dendriform import (
    ASSOCIATIVE,
    LIE,
    PRELIE,
    DendriformAlgebra,
    InducedAlgebra,
    check_dendriform,
    induced_product,
)
from .errors import (
    DimMismatch,
    InvalidCocycleSystem,
    InvalidDatum,
    InvalidInput,
    InvalidMatchedPair,
    InvalidNonabelianSystem,
)
from .field import Field
from .linalg import BilinearMap, unit_vec, vadd, vsub, zero_vec
from .report import ValidationReport

MAP_NAMES = ("tr1", "tr2", "tl1", "tl2", "rh1", "rh2", "lh1", "lh2", "f1", "f2", "sv", "pv")


def map_shape(name: str, n: int, m: int) -> tuple[int, int, int]:
    return {
        "tr": (n, m, m), "tl": (m, n, m), "rh": (m, n, n),
        "lh": (n, m, n), "f": (m, m, n), "sv": (m, m, m), "pv": (m, m, m),
    }[name.rstrip("12")]


@dataclass(frozen=True)
class ExtendingDatum:
    base: DendriformAlgebra
    vdim: int
    tr1: BilinearMap
    tr2: BilinearMap
    tl1: BilinearMap
    tl2: BilinearMap
    rh1: BilinearMap
    rh2: BilinearMap
    lh1: BilinearMap
    lh2: BilinearMap
    f1: BilinearMap
    f2: BilinearMap
    sv: BilinearMap
    pv: BilinearMap

    def __post_init__(self):
        n, m = self.base.dim, self.vdim
        for name in MAP_NAMES:
            shape = map_shape(name, n, m)
            if getattr(self, name).shape() != shape:
                raise DimMismatch(f"{name} has shape {getattr(self, name).shape()}, expected {shape}")

    @classmethod
    def build(cls, base: DendriformAlgebra, vdim: int, **maps) -> "ExtendingDatum":
        """Missing maps default to zero."""
        unknown = set(maps) - set(MAP_NAMES)
        if unknown:
            raise TypeError(f"unknown maps {sorted(unknown)}")
        F, n = base.field, base.dim
        full = {name: maps.get(name) or BilinearMap.zero(F, *map_shape(name, n, vdim)) for name in MAP_NAMES}
        return cls(base, vdim, **full)

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def dim(self) -> int:
        return self.base.dim + self.vdim

    def maps(self) -> dict:
        return {name: getattr(self, name) for name in MAP_NAMES}

    def with_maps(self, **maps) -> "ExtendingDatum":
        return replace(self, **maps)

    def bimodule(self) -> DendriformBimodule:
        return DendriformBimodule(self.base, self.vdim, self.tr1, self.tr2, self.tl1, self.tl2)

    def v_algebra(self) -> DendriformAlgebra:
        return DendriformAlgebra(self.field, self.vdim, self.sv, self.pv)

    def zero_maps(self, *names: str) -> "ExtendingDatum":
        F, n, m = self.field, self.base.dim, self.vdim
        return replace(self, **{k: BilinearMap.zero(F, *map_shape(k, n, m)) for k in names})


class _Ops:
    """Vector-level shorthands for the maps of a datum."""

    def __init__(self, w: ExtendingDatum):
        F = self.F = w.field
        self.n, self.m = w.base.dim, w.vdim
        add = lambda A, B: A.add(B)  # noqa: E731
        self.s, self.p = w.base.succ.apply, w.base.prec.apply
        self.st = add(w.base.succ, w.base.prec).apply
        self.sV, self.pV = w.sv.apply, w.pv.apply
        self.stV = add(w.sv, w.pv).apply
        self.l1, self.l2, self.l = w.tr1.apply, w.tr2.apply, add(w.tr1, w.tr2).apply
        self.r1, self.r2, self.r = w.tl1.apply, w.tl2.apply, add(w.tl1, w.tl2).apply
        self.h1, self.h2, self.h = w.rh1.apply, w.rh2.apply, add(w.rh1, w.rh2).apply
        self.g1, self.g2, self.g = w.lh1.apply, w.lh2.apply, add(w.lh1, w.lh2).apply
        self.f1, self.f2, self.f = w.f1.apply, w.f2.apply, add(w.f1, w.f2).apply
        self.eD = [unit_vec(F, self.n, i) for i in range(self.n)]
        self.eV = [unit_vec(F, self.m, i) for i in range(self.m)]

    def plus(self, *vs):
        out = vs[0]
        for v in vs[1:]:
            out = vadd(self.F, out, v)
        return out


def _group_equations(o: _Ops, group: int):
    """Yield (line, where, lhs, rhs) for one of the groups (D2)-(D12)."""
    P = o.plus
    s, p, st, sV, pV, stV = o.s, o.p, o.st, o.sV, o.pV, o.stV
    l1, l2, l, r1, r2, r = o.l1, o.l2, o.l, o.r1, o.r2, o.r
    h1, h2, h, g1, g2, g = o.h1, o.h2, o.h, o.g1, o.g2, o.g
    f1, f2, f = o.f1, o.f2, o.f
    D, V = range(o.n), range(o.m)
    eD, eV = o.eD, o.eV

    if group == 2:
        for i, j, k in product(D, D, V):
            a, b, x = eD[i], eD[j], eV[k]
            yield 1, (i, j, k), g1(st(a, b), x), P(s(a, g1(b, x)), g1(a, l1(b, x)))
            yield 2, (i, j, k), g2(p(a, b), x), P(p(a, g(b, x)), g2(a, l(b, x)))
            yield 3, (i, j, k), g2(s(a, b), x), P(s(a, g2(b, x)), g1(a, l2(b, x)))
    elif group == 3:
        for k, i, j in product(V, D, D):
            x, a, b = eV[k], eD[i], eD[j]
            yield 1, (k, i, j), P(s(h(x, a), b), h1(r(x, a), b)), h1(x, s(a, b))
            yield 2, (k, i, j), P(p(h2(x, a), b), h2(r2(x, a), b)), h2(x, st(a, b))
            yield 3, (k, i, j), P(p(h1(x, a), b), h2(r1(x, a), b)), h1(x, p(a, b))
    elif group == 4:
        for i, k, j in product(D, V, D):
            a, x, b = eD[i], eV[k], eD[j]
            yield 1, (i, k, j), P(s(g(a, x), b), h1(l(a, x), b)), P(s(a, h1(x, b)), g1(a, r1(x, b)))
            yield 2, (i, k, j), P(p(g2(a, x), b), h2(l2(a, x), b)), P(p(a, h(x, b)), g2(a, r(x, b)))
            yield 3, (i, k, j), P(p(g1(a, x), b), h2(l1(a, x), b)), P(s(a, h2(x, b)), g1(a, r2(x, b)))
    elif group == 5:
        for k1, k2, i in product(V, V, D):
            x, y, a = eV[k1], eV[k2], eD[i]
            yield 1, (k1, k2, i), P(s(f(x, y), a), h1(stV(x, y), a)), P(h1(x, h1(y, a)), f1(x, r1(y, a)))
            yield 2, (k1, k2, i), P(p(f2(x, y), a), h2(pV(x, y), a)), P(h2(x, h(y, a)), f2(x, r(y, a)))
            yield 3, (k1, k2, i), P(p(f1(x, y), a), h2(sV(x, y), a)), P(h1(x, h2(y, a)), f1(x, r2(y, a)))
    elif group == 6:
        for k1, k2, i in product(V, V, D):
            x, y, a = eV[k1], eV[k2], eD[i]
            yield 1, (k1, k2, i), r1(stV(x, y), a), P(r1(x, h1(y, a)), sV(x, r1(y, a)))
            yield 2, (k1, k2, i), r2(pV(x, y), a), P(r2(x, h(y, a)), pV(x, r(y, a)))
            yield 3, (k1, k2, i), r2(sV(x, y), a), P(r1(x, h2(y, a)), sV(x, r2(y, a)))
    elif group == 7:
        for i, k1, k2 in product(D, V, V):
            a, x, y = eD[i], eV[k1], eV[k2]
            yield 1, (i, k1, k2), P(g1(g(a, x), y), f1(l(a, x), y)), P(s(a, f1(x, y)), g1(a, sV(x, y)))
            yield 2, (i, k1, k2), P(g2(g2(a, x), y), f2(l2(a, x), y)), P(p(a, f(x, y)), g2(a, stV(x, y)))
            yield 3, (i, k1, k2), P(g2(g1(a, x), y), f2(l1(a, x), y)), P(s(a, f2(x, y)), g1(a, pV(x, y)))
    elif group == 8:
        for i, k1, k2 in product(D, V, V):
            a, x, y = eD[i], eV[k1], eV[k2]
            yield 1, (i, k1, k2), P(l1(g(a, x), y), sV(l(a, x), y)), l1(a, sV(x, y))
            yield 2, (i, k1, k2), P(l2(g2(a, x), y), pV(l2(a, x), y)), l2(a, stV(x, y))
            yield 3, (i, k1, k2), P(l2(g1(a, x), y), pV(l1(a, x), y)), l1(a, pV(x, y))
    elif group == 9:
        for k1, i, k2 in product(V, D, V):
            x, a, y = eV[k1], eD[i], eV[k2]
            yield 1, (k1, i, k2), P(g1(h(x, a), y), f1(r(x, a), y)), P(h1(x, g1(a, y)), f1(x, l1(a, y)))
            yield 2, (k1, i, k2), P(g2(h2(x, a), y), f2(r2(x, a), y)), P(h2(x, g(a, y)), f2(x, l(a, y)))
            yield 3, (k1, i, k2), P(g2(h1(x, a), y), f2(r1(x, a), y)), P(h1(x, g2(a, y)), f1(x, l2(a, y)))
    elif group == 10:
        for k1, i, k2 in product(V, D, V):
            x, a, y = eV[k1], eD[i], eV[k2]
            yield 1, (k1, i, k2), P(l1(h(x, a), y), sV(r(x, a), y)), P(r1(x, g1(a, y)), sV(x, l1(a, y)))
            yield 2, (k1, i, k2), P(l2(h2(x, a), y), pV(r2(x, a), y)), P(r2(x, g(a, y)), pV(x, l(a, y)))
            yield 3, (k1, i, k2), P(l2(h1(x, a), y), pV(r1(x, a), y)), P(r1(x, g2(a, y)), sV(x, l2(a, y)))
    elif group == 11:
        for k1, k2, k3 in product(V, V, V):
            x, y, z = eV[k1], eV[k2], eV[k3]
            yield 1, (k1, k2, k3), P(g1(f(x, y), z), f1(stV(x, y), z)), P(h1(x, f1(y, z)), f1(x, sV(y, z)))
            yield 2, (k1, k2, k3), P(g2(f2(x, y), z), f2(pV(x, y), z)), P(h2(x, f(y, z)), f2(x, stV(y, z)))
            yield 3, (k1, k2, k3), P(g2(f1(x, y), z), f2(sV(x, y), z)), P(h1(x, f2(y, z)), f1(x, pV(y, z)))
    elif group == 12:
        for k1, k2, k3 in product(V, V, V):
            x, y, z = eV[k1], eV[k2], eV[k3]
            yield 1, (k1, k2, k3), P(l1(f(x, y), z), sV(stV(x, y), z)), P(r1(x, f1(y, z)), sV(x, sV(y, z)))
            yield 2, (k1, k2, k3), P(l2(f2(x, y), z), pV(pV(x, y), z)), P(r2(x, f(y, z)), pV(x, stV(y, z)))
            yield 3, (k1, k2, k3), P(l2(f1(x, y), z), pV(sV(x, y), z)), P(r1(x, f2(y, z)), sV(x, pV(y, z)))
    else:
        raise ValueError(f"no condition group {group}")


def _groups_report(w: ExtendingDatum, groups: dict[int, str]) -> ValidationReport:
    """Check the listed groups, reporting each under the given label."""
    o = _Ops(w)
    rep = ValidationReport()
    for group, label in groups.items():
        for line, where, lhs, rhs in _group_equations(o, group):
            rep.check(label, where, lhs, rhs, line)
    return rep


def _bimodule_lines(rep: ValidationReport, label: str) -> ValidationReport:
    """Relabel a bimodule report: left 1-3, right 4-6, compatibility 7-9."""
    offset = {"left": 0, "right": 3, "bimodule": 6}
    out = ValidationReport()
    out.extend(rep, lambda v: replace(v, label=label, line=offset[v.label] + v.line))
    return out


def validate_datum(w: ExtendingDatum) -> ValidationReport:
    """Conditions (D1)-(D12); an empty report means the datum is an extending structure."""
    rep = _bimodule_lines(check_bimodule(w.bimodule()), "(D1)")
    rep.extend(_groups_report(w, {g: f"(D{g})" for g in range(2, 13)}))
    return rep


@dataclass(frozen=True)
class ProductAlgebra:
    algebra: DendriformAlgebra
    provenance: str
    datum: ExtendingDatum | None = None


def unified_algebra(w: ExtendingDatum) -> DendriformAlgebra:
    """The two products of the unified product, without checking validity."""
    o = _Ops(w)
    F, n, m = o.F, o.n, o.m

    def product_map(s, g, h, f, l, r, sv):
        def fn(i, j):
            a = o.eD[i] if i < n else zero_vec(F, n)
            x = o.eV[i - n] if i >= n else zero_vec(F, m)
            b = o.eD[j] if j < n else zero_vec(F, n)
            y = o.eV[j - n] if j >= n else zero_vec(F, m)
            return o.plus(s(a, b), g(a, y), h(x, b), f(x, y)) + o.plus(l(a, y), r(x, b), sv(x, y))
        return BilinearMap.from_function(F, n + m, n + m, n + m, fn)

    succ = product_map(o.s, o.g1, o.h1, o.f1, o.l1, o.r1, o.sV)
    prec = product_map(o.p, o.g2, o.h2, o.f2, o.l2, o.r2, o.pV)
    return DendriformAlgebra(F, n + m, succ, prec)


def unified_product(w: ExtendingDatum) -> ProductAlgebra:
    rep = validate_datum(w)
    if not rep.ok:
        raise InvalidDatum("extending datum fails (D1)-(D12)", rep)
    return ProductAlgebra(unified_algebra(w), "unified", w)


@dataclass(frozen=True)
class InducedDatum:
    """An associative, preLie or Lie extending datum induced from a dendriform one."""

    kind: str
    base: InducedAlgebra
    vdim: int
    maps: dict

    def product(self) -> InducedAlgebra:
        F, n, m = self.base.field, self.base.dim, self.vdim
        M = {k: v.apply for k, v in self.maps.items()}
        mul = self.base.mul
        zD, zV = zero_vec(F, n), zero_vec(F, m)

        def split(i):
            if i < n:
                return unit_vec(F, n, i), zV
            return zD, unit_vec(F, m, i - n)

        def plus(*vs):
            out = vs[0]
            for v in vs[1:]:
                out = vadd(F, out, v)
            return out

        def fn(i, j):
            a, x = split(i)
            b, y = split(j)
            if self.kind == LIE:
                d = plus(mul(a, b), vsub(F, M["act_d"](x, b), M["act_d"](y, a)), M["f"](x, y))
                v = plus(vsub(F, M["act_v"](x, b), M["act_v"](y, a)), M["v"](x, y))
            else:
                d = plus(mul(a, b), M["right_d"](a, y), M["left_d"](x, b), M["f"](x, y))
                v = plus(M["left_v"](a, y), M["right_v"](x, b), M["v"](x, y))
            return d + v

        prod = BilinearMap.from_function(F, n + m, n + m, n + m, fn)
        return InducedAlgebra(self.kind, F, n + m, prod)


def induce_datum(w: ExtendingDatum, kind: str) -> InducedDatum:
    """Induced datum of the given kind.

    Associative and preLie datums use the keys left_v (D×V→V), right_v
    (V×D→V), left_d (V×D→D), right_d (D×V→D), f and v.  Lie datums use
    act_v (x◀a), act_d (x▶a), f and v.
    """
    kind = kind.lower()
    F, n, m = w.field, w.base.dim, w.vdim
    base = InducedAlgebra(kind, F, n, induced_product(w.base.succ, w.base.prec, kind))
    v = induced_product(w.sv, w.pv, kind)
    if kind == ASSOCIATIVE:
        maps = {
            "left_v": w.tr1.add(w.tr2), "right_v": w.tl1.add(w.tl2),
            "left_d": w.rh1.add(w.rh2), "right_d": w.lh1.add(w.lh2),
            "f": w.f1.add(w.f2), "v": v,
        }
    elif kind == PRELIE:
        maps = {
            "left_v": w.tr1.sub(w.tl2.swap()),
            "right_v": w.tl1.sub(w.tr2.swap()),
            "left_d": w.rh1.sub(w.lh2.swap()),
            "right_d": w.lh1.sub(w.rh2.swap()),
            "f": w.f1.sub(w.f2.swap()), "v": v,
        }
    elif kind == LIE:
        f = w.f1.add(w.f2)
        maps = {
            "act_v": w.tl1.add(w.tl2).sub(w.tr1.add(w.tr2).swap()),
            "act_d": w.rh1.add(w.rh2).sub(w.lh1.add(w.lh2).swap()),
            "f": f.sub(f.swap()), "v": v,
        }
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return InducedDatum(kind, base, m, maps)


# Special cases of the unified product.  Each takes a datum whose
# unused maps are zero and has its own validator and product formula.

def _nonzero(w: ExtendingDatum, names) -> ValidationReport:
    rep = ValidationReport()
    for name in names:
        B = getattr(w, name)
        if not B.is_zero():
            rep.add("(shape)", (), (name,), ("0",))
    return rep


def _algebra_report(alg: DendriformAlgebra, label: str) -> ValidationReport:
    out = ValidationReport()
    out.extend(check_dendriform(alg), lambda v: replace(v, label=f"{label} {v.label}"))
    return out


def validate_matched_pair(mp: ExtendingDatum) -> ValidationReport:
    """(M1)-(M7); f1, f2 must vanish and V must be a dendriform algebra."""
    rep = _nonzero(mp, ("f1", "f2"))
    rep.extend(_algebra_report(mp.v_algebra(), "(V)"))
    rep.extend(_bimodule_lines(check_bimodule(mp.bimodule()), "(M1)"))
    dual = action_report(mp.sv, mp.pv, mp.rh1, mp.rh2, mp.lh1, mp.lh2, BOTH)
    rep.extend(dual, lambda v: replace(v, label="(M1)", line=9 + {"left": 0, "right": 3, "bimodule": 6}[v.label] + v.line))
    rep.extend(_groups_report(mp, {2: "(M2)", 3: "(M3)", 4: "(M4)", 6: "(M5)", 8: "(M6)", 10: "(M7)"}))
    return rep


def _sum_product(w: ExtendingDatum, use: set) -> DendriformAlgebra:
    """Unified-product formula restricted to the maps in ``use``."""
    return unified_algebra(w.zero_maps(*[k for k in MAP_NAMES if k not in use]))


def bicrossed_product(mp: ExtendingDatum) -> ProductAlgebra:
    rep = validate_matched_pair(mp)
    if not rep.ok:
        raise InvalidMatchedPair("not a matched pair", rep)
    F, n, m = mp.field, mp.base.dim, mp.vdim
    D, V = mp.base, mp.v_algebra()

    # (a,x)≻(b,y) = (a≻b + a↼1y + x⇀1b, a▷1y + x◁1b + x≻_V y)
    def build(dprod, vprod, g, h, l, r):
        def fn(i, j):
            a = unit_vec(F, n, i) if i < n else zero_vec(F, n)
            x = unit_vec(F, m, i - n) if i >= n else zero_vec(F, m)
            b = unit_vec(F, n, j) if j < n else zero_vec(F, n)
            y = unit_vec(F, m, j - n) if j >= n else zero_vec(F, m)
            d = vadd(F, vadd(F, dprod(a, b), g(a, y)), h(x, b))
            v = vadd(F, vadd(F, l(a, y), r(x, b)), vprod(x, y))
            return d + v
        return BilinearMap.from_function(F, n + m, n + m, n + m, fn)

    succ = build(D.s, V.s, mp.lh1.apply, mp.rh1.apply, mp.tr1.apply, mp.tl1.apply)
    prec = build(D.p, V.p, mp.lh2.apply, mp.rh2.apply, mp.tr2.apply, mp.tl2.apply)
    return ProductAlgebra(DendriformAlgebra(F, n + m, succ, prec), "bicrossed", mp)


def validate_cocycle_system(cs: ExtendingDatum) -> ValidationReport:
    """(C1)-(C8) with ⇀ and ↼ trivial; V must be a D-bimodule."""
    rep = _nonzero(cs, ("rh1", "rh2", "lh1", "lh2"))
    rep.extend(_bimodule_lines(check_bimodule(cs.bimodule()), "(bimodule)"))
    rep.extend(_groups_report(cs, {g: f"(C{g - 4})" for g in range(5, 13)}))
    return rep


def cocycle_product(cs: ExtendingDatum) -> ProductAlgebra:
    rep = validate_cocycle_system(cs)
    if not rep.ok:
        raise InvalidCocycleSystem("not a cocycle semidirect system", rep)
    alg = _sum_product(cs, {"tr1", "tr2", "tl1", "tl2", "f1", "f2", "sv", "pv"})
    return ProductAlgebra(alg, "cocycle semidirect", cs)


def validate_nonabelian_system(ns: ExtendingDatum) -> ValidationReport:
    """(S1)-(S3) with ⇀, ↼ and f trivial; V must be a dendriform algebra."""
    rep = _nonzero(ns, ("rh1", "rh2", "lh1", "lh2", "f1", "f2"))
    rep.extend(_algebra_report(ns.v_algebra(), "(V)"))
    rep.extend(_bimodule_lines(check_bimodule(ns.bimodule()), "(bimodule)"))
    rep.extend(_groups_report(ns, {6: "(S1)", 8: "(S2)", 10: "(S3)"}))
    return rep


def nonabelian_product(ns: ExtendingDatum) -> ProductAlgebra:
    rep = validate_nonabelian_system(ns)
    if not rep.ok:
        raise InvalidNonabelianSystem("not a nonabelian semidirect system", rep)
    alg = _sum_product(ns, {"tr1", "tr2", "tl1", "tl2", "sv", "pv"})
    return ProductAlgebra(alg, "nonabelian semidirect", ns)


def abelian_semidirect(bm: DendriformBimodule) -> ProductAlgebra:
    """D ⋉ V with V carrying the zero products."""
    rep = check_bimodule(bm)
    if not rep.ok:
        raise InvalidInput("not a bimodule", rep)
    w = ExtendingDatum.build(bm.base, bm.vdim, tr1=bm.tr1, tr2=bm.tr2, tl1=bm.tl1, tl2=bm.tl2)
    alg = _sum_product(w, {"tr1", "tr2", "tl1", "tl2"})
    return ProductAlgebra(alg, "abelian semidirect", w)


def direct_sum_datum(base: DendriformAlgebra, v: DendriformAlgebra) -> ExtendingDatum:
    """The datum whose unified product is the direct sum D ⊕ V."""
    return ExtendingDatum.build(base, v.dim, sv=v.succ, pv=v.prec)


__all__ = [
    "MAP_NAMES", "ExtendingDatum", "ProductAlgebra", "InducedDatum", "validate_datum",
    "unified_algebra", "unified_product", "induce_datum", "validate_matched_pair",
    "bicrossed_product", "validate_cocycle_system", "cocycle_product",
    "validate_nonabelian_system", "nonabelian_product", "abelian_semidirect",
    "direct_sum_datum", "map_shape",
]
