"""Flag datums: extending structures through a one-dimensional space.

A flag datum of D is (l1, l2, r1, r2, p1, p2, q1, q2, a1, a2, k1, k2)
with l, r functionals on D, p, q endomorphisms of D, a1, a2 in D and
k1, k2 scalars.  Functionals are stored as their values on the basis,
endomorphisms as ``LinMap``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from itertools import product

from .dendriform import DendriformAlgebra
from .errors import DimMismatch, InfiniteField, InvalidFlag, WrongVDim, ZeroH0
from .extending import ExtendingDatum
from .extension import Extension
from .field import Field
from .linalg import BilinearMap, LinMap, unit_vec, vadd, vscale, vsub, zero_vec
from .parallel import pmap
from .report import ValidationReport
from .unionfind import UnionFind

FUNCTIONALS = ("l1", "l2", "r1", "r2")
ENDOS = ("p1", "p2", "q1", "q2")


@dataclass(frozen=True)
class FlagDatum:
    base: DendriformAlgebra
    l1: tuple
    l2: tuple
    r1: tuple
    r2: tuple
    p1: LinMap
    p2: LinMap
    q1: LinMap
    q2: LinMap
    a1: tuple
    a2: tuple
    k1: object
    k2: object

    def __post_init__(self):
        n = self.base.dim
        for name in FUNCTIONALS + ("a1", "a2"):
            if len(getattr(self, name)) != n:
                raise DimMismatch(f"{name} must have length {n}")
        for name in ENDOS:
            M = getattr(self, name)
            if (M.rows, M.cols) != (n, n):
                raise DimMismatch(f"{name} must be {n}x{n}")

    @property
    def field(self) -> Field:
        return self.base.field

    @classmethod
    def from_values(cls, base: DendriformAlgebra, values) -> "FlagDatum":
        """Build from the flat value sequence produced by ``values()``.

        For a 1-dim base this is the familiar 12-tuple.  Endomorphisms are
        read column by column (the coordinates of p(e_0), p(e_1), ...).
        """
        F, n = base.field, base.dim
        vals = [F.coerce(v) if not isinstance(v, str) else F.parse(v) for v in values]
        if len(vals) != 4 * n + 4 * n * n + 2 * n + 2:
            raise DimMismatch(f"expected {4 * n + 4 * n * n + 2 * n + 2} values, got {len(vals)}")
        it = iter(vals)
        take = lambda k: tuple(next(it) for _ in range(k))  # noqa: E731
        funcs = [take(n) for _ in FUNCTIONALS]
        endos = [LinMap.from_columns(F, [take(n) for _ in range(n)], n) for _ in ENDOS]
        a1, a2 = take(n), take(n)
        k1, k2 = next(it), next(it)
        return cls(base, *funcs, *endos, a1, a2, k1, k2)

    def values(self) -> tuple:
        out = []
        for name in FUNCTIONALS:
            out.extend(getattr(self, name))
        for name in ENDOS:
            for col in getattr(self, name).columns():
                out.extend(col)
        out.extend(self.a1)
        out.extend(self.a2)
        out.extend((self.k1, self.k2))
        return tuple(out)

    def key(self) -> tuple:
        """Sort key: raw values in the canonical order."""
        return self.values()

    def formatted(self) -> tuple:
        return tuple(self.field.format(v) for v in self.values())


def _functional(F: Field, coeffs):
    def ev(v):
        acc = F.zero
        for c, x in zip(coeffs, v):
            acc = F.add(acc, F.mul(c, x))
        return acc
    return ev


class _FlagOps:
    def __init__(self, fd: FlagDatum):
        F = self.F = fd.field
        D = fd.base
        self.n = D.dim
        self.s, self.p, self.st = D.s, D.p, D.star
        for name in FUNCTIONALS:
            setattr(self, name, _functional(F, getattr(fd, name)))
        self.P1, self.P2, self.Q1, self.Q2 = fd.p1.apply, fd.p2.apply, fd.q1.apply, fd.q2.apply
        self.a1, self.a2, self.k1, self.k2 = fd.a1, fd.a2, fd.k1, fd.k2
        self.e = [unit_vec(F, self.n, i) for i in range(self.n)]

    def add(self, *vs):
        out = vs[0]
        for v in vs[1:]:
            out = vadd(self.F, out, v)
        return out

    def sc(self, c, v):
        return vscale(self.F, c, v)

    def kadd(self, *cs):
        out = self.F.zero
        for c in cs:
            out = self.F.add(out, c)
        return out

    def kmul(self, a, b):
        return self.F.mul(a, b)


def _flag_equations(o: _FlagOps, group: int):
    """Yield (line, where, lhs, rhs); scalar identities use 1-tuples."""
    F = o.F
    s, p, st, add, sc, K, M = o.s, o.p, o.st, o.add, o.sc, o.kadd, o.kmul
    l1, l2, r1, r2 = o.l1, o.l2, o.r1, o.r2
    P1, P2, Q1, Q2 = o.P1, o.P2, o.Q1, o.Q2
    e, n = o.e, o.n
    zD = zero_vec(F, n)

    if group == 1:
        for i, j in product(range(n), repeat=2):
            a, b = e[i], e[j]
            yield 1, (i, j), (l1(st(a, b)),), (M(l1(a), l1(b)),)
            yield 2, (i, j), (l2(p(a, b)),), (M(l2(a), K(l1(b), l2(b))),)
            yield 3, (i, j), (l2(s(a, b)),), (M(l1(a), l2(b)),)
            yield 4, (i, j), (M(K(r1(a), r2(a)), r1(b)),), (r1(s(a, b)),)
            yield 5, (i, j), (M(r2(a), r2(b)),), (r2(st(a, b)),)
            yield 6, (i, j), (M(r1(a), r2(b)),), (r1(p(a, b)),)
            yield 7, (i, j), (M(l2(a), r1(b)),), (F.zero,)
    elif group == 2:
        for i, j in product(range(n), repeat=2):
            a, b = e[i], e[j]
            yield 1, (i, j), Q1(st(a, b)), add(s(a, Q1(b)), sc(l1(b), Q1(a)))
            yield 2, (i, j), Q2(p(a, b)), add(p(a, add(Q1(b), Q2(b))), sc(K(l1(b), l2(b)), Q2(a)))
            yield 3, (i, j), Q2(s(a, b)), add(s(a, Q2(b)), sc(l2(b), Q1(a)))
    elif group == 3:
        for i, j in product(range(n), repeat=2):
            a, b = e[i], e[j]
            yield 1, (i, j), add(s(add(P1(a), P2(a)), b), sc(K(r1(a), r2(a)), P1(b))), P1(s(a, b))
            yield 2, (i, j), add(p(P2(a), b), sc(r2(a), P2(b))), P2(st(a, b))
            yield 3, (i, j), add(p(P1(a), b), sc(r1(a), P2(b))), P1(p(a, b))
    elif group == 4:
        for i, j in product(range(n), repeat=2):
            a, b = e[i], e[j]
            yield 1, (i, j), add(s(add(Q1(a), Q2(a)), b), sc(K(l1(a), l2(a)), P1(b))), \
                add(s(a, P1(b)), sc(r1(b), Q1(a)))
            yield 2, (i, j), add(p(Q2(a), b), sc(l2(a), P2(b))), \
                add(p(a, add(P1(b), P2(b))), sc(K(r1(b), r2(b)), Q2(a)))
            yield 3, (i, j), add(p(Q1(a), b), sc(l1(a), P2(b))), add(s(a, P2(b)), sc(r2(b), Q1(a)))
    elif group in range(5, 13):
        for i in range(n):
            a = e[i]
            yield from _single(o, group, i, a, zD)
    else:
        raise ValueError(f"no flag condition group {group}")


def _single(o: _FlagOps, group: int, i: int, a, zD):
    F = o.F
    s, p, add, sc, K, M = o.s, o.p, o.add, o.sc, o.kadd, o.kmul
    l1, l2, r1, r2 = o.l1, o.l2, o.r1, o.r2
    P1, P2, Q1, Q2 = o.P1, o.P2, o.Q1, o.Q2
    a1, a2, k1, k2 = o.a1, o.a2, o.k1, o.k2
    w = (i,)
    if group == 5:
        yield 1, w, add(s(add(a1, a2), a), sc(K(k1, k2), P1(a))), add(P1(P1(a)), sc(r1(a), a1))
        yield 2, w, add(p(a2, a), sc(k2, P2(a))), add(P2(add(P1(a), P2(a))), sc(K(r1(a), r2(a)), a2))
        yield 3, w, add(p(a1, a), sc(k1, P2(a))), add(P1(P2(a)), sc(r2(a), a1))
    elif group == 6:
        yield 1, w, (M(k2, r1(a)),), (r1(P1(a)),)
        yield 2, w, (K(r2(add(P1(a), P2(a))), M(k2, r1(a))),), (F.zero,)
        yield 3, w, (r1(P2(a)),), (F.zero,)
    elif group == 7:
        yield 1, w, add(Q1(add(Q1(a), Q2(a))), sc(K(l1(a), l2(a)), a1)), add(s(a, a1), sc(k1, Q1(a)))
        yield 2, w, add(Q2(Q2(a)), sc(l2(a), a2)), add(p(a, add(a1, a2)), sc(K(k1, k2), Q2(a)))
        yield 3, w, add(Q2(Q1(a)), sc(l1(a), a2)), add(s(a, a2), sc(k2, Q1(a)))
    elif group == 8:
        yield 1, w, (K(l1(add(Q1(a), Q2(a))), M(l2(a), k1)),), (F.zero,)
        yield 2, w, (l2(Q2(a)),), (M(l2(a), k1),)
        yield 3, w, (l2(Q1(a)),), (F.zero,)
    elif group == 9:
        yield 1, w, add(Q1(add(P1(a), P2(a))), sc(K(r1(a), r2(a)), a1)), add(P1(Q1(a)), sc(l1(a), a1))
        yield 2, w, add(Q2(P2(a)), sc(r2(a), a2)), add(P2(add(Q1(a), Q2(a))), sc(K(l1(a), l2(a)), a2))
        yield 3, w, add(Q2(P1(a)), sc(r1(a), a2)), add(P1(Q2(a)), sc(l2(a), a1))
    elif group == 10:
        yield 1, w, (K(l1(add(P1(a), P2(a))), M(K(r1(a), r2(a)), k1)),), (K(r1(Q1(a)), M(k1, l1(a))),)
        yield 2, w, (K(l2(P2(a)), M(r2(a), k2)),), (K(r2(add(Q1(a), Q2(a))), M(k2, K(l1(a), l2(a)))),)
        yield 3, w, (K(l2(P1(a)), M(r1(a), k2)),), (K(r1(Q2(a)), M(k1, l2(a))),)
    # the remaining groups do not depend on a; report them once
    elif i == 0 and group == 11:
        yield 1, (), add(Q1(add(a1, a2)), sc(k2, a1)), P1(a1)
        yield 2, (), Q2(a2), add(P2(add(a1, a2)), sc(k1, a2))
        yield 3, (), add(Q2(a1), sc(k1, a2)), add(P1(a2), sc(k2, a1))
    elif i == 0 and group == 12:
        yield 1, (), (K(l1(add(a1, a2)), M(k2, k1)),), (r1(a1),)
        yield 2, (), (l2(a2),), (K(r2(add(a1, a2)), M(k2, k1)),)
        yield 3, (), (l2(a1),), (r1(a2),)


def flag_report(fd: FlagDatum, groups=range(1, 13), stop_early: bool = False) -> ValidationReport:
    o = _FlagOps(fd)
    rep = ValidationReport()
    for g in groups:
        for line, where, lhs, rhs in _flag_equations(o, g):
            if not rep.check(f"(F{g})", where, lhs, rhs, line) and stop_early:
                return rep
    return rep


def validate_flag(fd: FlagDatum) -> ValidationReport:
    return flag_report(fd)


def _holds(fd: FlagDatum, groups) -> bool:
    return flag_report(fd, groups, stop_early=True).ok


def flag_to_datum(fd: FlagDatum) -> ExtendingDatum:
    """Φ: the extending structure through V = k{x}."""
    F, n = fd.field, fd.base.dim

    def left(func):
        return BilinearMap.from_function(F, n, 1, 1, lambda i, j: (func[i],))

    def right(func):
        return BilinearMap.from_function(F, 1, n, 1, lambda i, j: (func[j],))

    def vd(M):  # x ⇀ a = p(a)
        return BilinearMap.from_function(F, 1, n, n, lambda i, j: M.column(j))

    def dv(M):  # a ↼ x = q(a)
        return BilinearMap.from_function(F, n, 1, n, lambda i, j: M.column(i))

    def vv(vec):
        return BilinearMap.from_function(F, 1, 1, len(vec), lambda i, j: vec)

    return ExtendingDatum(
        fd.base, 1,
        tr1=left(fd.l1), tr2=left(fd.l2), tl1=right(fd.r1), tl2=right(fd.r2),
        rh1=vd(fd.p1), rh2=vd(fd.p2), lh1=dv(fd.q1), lh2=dv(fd.q2),
        f1=vv(fd.a1), f2=vv(fd.a2), sv=vv((fd.k1,)), pv=vv((fd.k2,)),
    )


def datum_to_flag(w: ExtendingDatum) -> FlagDatum:
    if w.vdim != 1:
        raise WrongVDim(f"flag datums need vdim 1, got {w.vdim}")
    F, n = w.field, w.base.dim
    return FlagDatum(
        w.base,
        tuple(w.tr1.c[i][0][0] for i in range(n)), tuple(w.tr2.c[i][0][0] for i in range(n)),
        tuple(w.tl1.c[0][i][0] for i in range(n)), tuple(w.tl2.c[0][i][0] for i in range(n)),
        LinMap.from_columns(F, [w.rh1.c[0][j] for j in range(n)], n),
        LinMap.from_columns(F, [w.rh2.c[0][j] for j in range(n)], n),
        LinMap.from_columns(F, [w.lh1.c[i][0] for i in range(n)], n),
        LinMap.from_columns(F, [w.lh2.c[i][0] for i in range(n)], n),
        w.f1.c[0][0], w.f2.c[0][0], w.sv.c[0][0][0], w.pv.c[0][0][0],
    )


def flag_to_extension(fd: FlagDatum) -> Extension:
    """The (n+1)-dim algebra on D ⊕ k{x}, x being the last basis vector."""
    F, n = fd.field, fd.base.dim
    D = fd.base

    def table(B, l, r, P, Q, a, k):
        def fn(i, j):
            if i < n and j < n:
                return B.c[i][j] + (F.zero,)
            if i < n:  # e_i · x = q(e_i) + l(e_i) x
                return Q.column(i) + (l[i],)
            if j < n:  # x · e_j = p(e_j) + r(e_j) x
                return P.column(j) + (r[j],)
            return tuple(a) + (k,)
        return BilinearMap.from_function(F, n + 1, n + 1, n + 1, fn)

    succ = table(D.succ, fd.l1, fd.r1, fd.p1, fd.q1, fd.a1, fd.k1)
    prec = table(D.prec, fd.l2, fd.r2, fd.p2, fd.q2, fd.a2, fd.k2)
    return Extension(DendriformAlgebra(F, n + 1, succ, prec), n)


@dataclass(frozen=True)
class FlagWitness:
    g0: tuple  # element of D
    h0: object  # nonzero scalar


def flag_act(fd: FlagDatum, w: FlagWitness) -> FlagDatum:
    """The flag datum reached from ``fd`` through φ(a, x) = (a + g0 x̄, h0 x̄).

    (g, h) with g(x) = g0, h(x) = h0 x is then a morphism from the unified
    product of ``fd`` to that of the result.
    """
    F, D = fd.field, fd.base
    h0 = F.coerce(w.h0)
    if F.is_zero(h0):
        raise ZeroH0("h0 must be nonzero")
    if len(w.g0) != D.dim:
        raise DimMismatch("g0 must lie in D")
    inv = F.inv(h0)
    inv2 = F.mul(inv, inv)
    g0 = tuple(F.coerce(c) for c in w.g0)
    o = _FlagOps(fd)
    n = D.dim

    def endo(M, func, op, left_g0: bool):
        cols = []
        for j in range(n):
            a = o.e[j]
            prod = op(g0, a) if left_g0 else op(a, g0)
            cols.append(vscale(F, inv, vsub(F, vadd(F, M.apply(a), vscale(F, func(a), g0)), prod)))
        return LinMap.from_columns(F, cols, n)

    p1 = endo(fd.p1, o.r1, D.s, True)
    p2 = endo(fd.p2, o.r2, D.p, True)
    q1 = endo(fd.q1, o.l1, D.s, False)
    q2 = endo(fd.q2, o.l2, D.p, False)

    def avec(a, k, Q, P, l, r, op):
        v = vadd(F, a, vscale(F, k, g0))
        v = vsub(F, v, Q.apply(g0))
        v = vsub(F, v, vscale(F, l(g0), g0))
        v = vadd(F, v, op(g0, g0))
        v = vsub(F, v, P.apply(g0))
        v = vsub(F, v, vscale(F, r(g0), g0))
        return vscale(F, inv2, v)

    a1 = avec(fd.a1, fd.k1, fd.q1, fd.p1, o.l1, o.r1, D.s)
    a2 = avec(fd.a2, fd.k2, fd.q2, fd.p2, o.l2, o.r2, D.p)
    k1 = F.mul(inv, F.sub(F.sub(fd.k1, o.l1(g0)), o.r1(g0)))
    k2 = F.mul(inv, F.sub(F.sub(fd.k2, o.l2(g0)), o.r2(g0)))
    return FlagDatum(D, fd.l1, fd.l2, fd.r1, fd.r2, p1, p2, q1, q2, a1, a2, k1, k2)


def compose_witness(F: Field, w: FlagWitness, w2: FlagWitness) -> FlagWitness:
    """Acting by ``w`` then ``w2`` equals acting by the result."""
    g0 = vadd(F, w.g0, vscale(F, w.h0, w2.g0))
    return FlagWitness(g0, F.mul(w.h0, w2.h0))


def inverse_witness(F: Field, w: FlagWitness) -> FlagWitness:
    inv = F.inv(w.h0)
    return FlagWitness(vscale(F, F.neg(inv), w.g0), inv)


def witness_pair(F: Field, w: FlagWitness):
    """The (g, h) equivalence pair of a flag witness."""
    from .extension import EquivalencePair
    return EquivalencePair(LinMap.from_columns(F, [tuple(w.g0)], len(w.g0)), LinMap.from_rows(F, [[w.h0]]))


def witness_map(fd: FlagDatum, w: FlagWitness) -> LinMap:
    """ψ(e_i) = e_i, ψ(x) = g0 + h0 x on the (n+1)-dim extension."""
    F, n = fd.field, fd.base.dim
    cols = [unit_vec(F, n + 1, i) for i in range(n)] + [tuple(w.g0) + (w.h0,)]
    return LinMap.from_columns(F, cols, n + 1)


def witnesses(F: Field, n: int, cohomologous: bool = False):
    if not F.is_finite():
        raise InfiniteField("witness enumeration needs a finite field")
    hs = [F.one] if cohomologous else [h for h in F.elements() if not F.is_zero(h)]
    for g0 in product(F.elements(), repeat=n):
        for h0 in hs:
            yield FlagWitness(tuple(g0), h0)


def find_flag_witness(fd: FlagDatum, target: FlagDatum, cohomologous: bool = False) -> FlagWitness | None:
    """Smallest witness w (by (g0, h0)) with flag_act(fd, w) = target, over GF(p)."""
    for w in witnesses(fd.field, fd.base.dim, cohomologous):
        if flag_act(fd, w) == target:
            return w
    return None


def _extend_stage(alg: DendriformAlgebra, lr: tuple) -> list[tuple]:
    """All valid flag value tuples whose functional part is ``lr``."""
    F, n = alg.field, alg.dim
    els = F.elements()
    z = (F.zero,) * (4 * n * n + 2 * n + 2)
    out = []
    nq = 2 * n * n
    for qv in product(els, repeat=nq):
        cand = lr + (F.zero,) * nq + qv + z[2 * nq:]
        if not _holds(FlagDatum.from_values(alg, cand), (2,)):
            continue
        for pv in product(els, repeat=nq):
            cand = lr + pv + qv + z[2 * nq:]
            if not _holds(FlagDatum.from_values(alg, cand), (3, 4)):
                continue
            for kv in product(els, repeat=2):
                cand = lr + pv + qv + (F.zero,) * (2 * n) + kv
                if not _holds(FlagDatum.from_values(alg, cand), (6, 8, 10)):
                    continue
                for av in product(els, repeat=2 * n):
                    cand = lr + pv + qv + av + kv
                    if _holds(FlagDatum.from_values(alg, cand), (5, 7, 9, 11, 12)):
                        out.append(cand)
    return out


@dataclass
class FlagClassification:
    valid: list  # FlagDatum, sorted by key
    orbits: list  # lists of FlagDatum under ≡
    cohomology_classes: list  # lists of FlagDatum under ≈

    @property
    def representatives(self) -> list:
        return [orb[0] for orb in self.orbits]

    def orbit_of(self, fd: FlagDatum) -> int:
        for i, orb in enumerate(self.orbits):
            if fd in orb:
                return i
        raise KeyError("flag datum is not valid")


def enumerate_flags(alg: DendriformAlgebra, workers: int | None = None) -> list[FlagDatum]:
    """Every valid flag datum of ``alg`` over its finite field, sorted."""
    F, n = alg.field, alg.dim
    if not F.is_finite():
        raise InfiniteField("enumeration needs a finite field")
    stage1 = []
    for lr in product(F.elements(), repeat=4 * n):
        cand = lr + (F.zero,) * (4 * n * n + 2 * n + 2)
        if _holds(FlagDatum.from_values(alg, cand), (1,)):
            stage1.append(lr)
    chunks = pmap(partial(_extend_stage, alg), stage1, workers)
    vals = sorted(v for chunk in chunks for v in chunk)
    return [FlagDatum.from_values(alg, v) for v in vals]


def classify_flags(alg: DendriformAlgebra, field: Field | None = None,
                   workers: int | None = None) -> FlagClassification:
    """Orbits of valid flag datums under ≡ (any h0) and ≈ (h0 = 1)."""
    if field is not None and field != alg.field:
        raise DimMismatch("classification field differs from the algebra's field")
    valid = enumerate_flags(alg, workers)
    keyed = {fd.key(): fd for fd in valid}

    def partition(cohomologous):
        uf = UnionFind(keyed)
        for k, fd in keyed.items():
            for w in witnesses(alg.field, alg.dim, cohomologous):
                image = flag_act(fd, w).key()
                if image not in keyed:
                    raise InvalidFlag("the action left the set of valid flag datums")
                uf.union(k, image)
        return [[keyed[k] for k in cls] for cls in uf.classes()]

    return FlagClassification(valid, partition(False), partition(True))


def require_valid(fd: FlagDatum) -> None:
    rep = validate_flag(fd)
    if not rep.ok:
        raise InvalidFlag("flag datum fails (F1)-(F12)", rep)
