"""Bimodules over a dendriform algebra."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from itertools import product

from .dendriform import DendriformAlgebra, check_dendriform
from .errors import DimMismatch, InfiniteField, InvalidInput
from .field import Field
from .linalg import BilinearMap, LinMap, unit_vec, vadd
from .parallel import pmap
from .report import ValidationReport

LEFT, RIGHT, BOTH = "left", "right", "both"


@dataclass(frozen=True)
class DendriformBimodule:
    """Actions ▷1, ▷2 (tr1, tr2) and ◁1, ◁2 (tl1, tl2) of ``base`` on a vdim-space."""

    base: DendriformAlgebra
    vdim: int
    tr1: BilinearMap
    tr2: BilinearMap
    tl1: BilinearMap
    tl2: BilinearMap

    def __post_init__(self):
        n, m = self.base.dim, self.vdim
        for name, shape in (("tr1", (n, m, m)), ("tr2", (n, m, m)), ("tl1", (m, n, m)), ("tl2", (m, n, m))):
            if getattr(self, name).shape() != shape:
                raise DimMismatch(f"{name} has shape {getattr(self, name).shape()}, expected {shape}")

    @property
    def field(self) -> Field:
        return self.base.field

    @classmethod
    def trivial(cls, base: DendriformAlgebra, vdim: int) -> "DendriformBimodule":
        F, n = base.field, base.dim
        left = BilinearMap.zero(F, n, vdim, vdim)
        right = BilinearMap.zero(F, vdim, n, vdim)
        return cls(base, vdim, left, left, right, right)

    @classmethod
    def from_scalars(cls, base: DendriformAlgebra, l1, l2, r1, r2) -> "DendriformBimodule":
        """1-dim module over a base: each action is given by its values on the base vectors."""
        F, n = base.field, base.dim

        def left(vals):
            vals = _as_list(vals, n)
            return BilinearMap.from_function(F, n, 1, 1, lambda i, j: (vals[i],))

        def right(vals):
            vals = _as_list(vals, n)
            return BilinearMap.from_function(F, 1, n, 1, lambda i, j: (vals[j],))

        return cls(base, 1, left(l1), left(l2), right(r1), right(r2))

    def scalars(self) -> tuple:
        """Flattened action coefficients (▷1, ▷2, ◁1, ◁2), in basis order."""
        out = []
        for b in (self.tr1, self.tr2, self.tl1, self.tl2):
            out.extend(a for row in b.c for v in row for a in v)
        return tuple(out)


def _as_list(vals, n):
    if isinstance(vals, (list, tuple)):
        return list(vals)
    return [vals] * n if n == 1 else list(vals)


def action_report(bs: BilinearMap, bp: BilinearMap, tr1, tr2, tl1, tl2,
                  sides: str = BOTH) -> ValidationReport:
    """The module identities for actions of the algebra (bs, bp) on a space.

    ``bs``/``bp`` need not form a valid algebra; this is reused for the
    action of V on D in a matched pair.
    """
    F = bs.field
    n = bs.left
    m = tr1.right if sides != RIGHT else tl1.left
    eD = [unit_vec(F, n, i) for i in range(n)]
    eV = [unit_vec(F, m, i) for i in range(m)]

    def s(a, b):
        return bs.apply(a, b)

    def p(a, b):
        return bp.apply(a, b)

    def star(a, b):
        return vadd(F, s(a, b), p(a, b))

    def l1(a, x):
        return tr1.apply(a, x)

    def l2(a, x):
        return tr2.apply(a, x)

    def lt(a, x):
        return vadd(F, l1(a, x), l2(a, x))

    def r1(x, a):
        return tl1.apply(x, a)

    def r2(x, a):
        return tl2.apply(x, a)

    def rt(x, a):
        return vadd(F, r1(x, a), r2(x, a))

    rep = ValidationReport()
    for i, j, k in product(range(n), range(n), range(m)):
        a, b, x = eD[i], eD[j], eV[k]
        if sides in (LEFT, BOTH):
            rep.check("left", (i, j, k), l1(star(a, b), x), l1(a, l1(b, x)), 1)
            rep.check("left", (i, j, k), l2(p(a, b), x), l2(a, lt(b, x)), 2)
            rep.check("left", (i, j, k), l2(s(a, b), x), l1(a, l2(b, x)), 3)
        if sides in (RIGHT, BOTH):
            rep.check("right", (k, i, j), r1(rt(x, a), b), r1(x, s(a, b)), 1)
            rep.check("right", (k, i, j), r2(r2(x, a), b), r2(x, star(a, b)), 2)
            rep.check("right", (k, i, j), r2(r1(x, a), b), r1(x, p(a, b)), 3)
    if sides == BOTH:
        for i, k, j in product(range(n), range(m), range(n)):
            a, x, b = eD[i], eV[k], eD[j]
            rep.check("bimodule", (i, k, j), r1(lt(a, x), b), l1(a, r1(x, b)), 1)
            rep.check("bimodule", (i, k, j), r2(l2(a, x), b), l2(a, rt(x, b)), 2)
            rep.check("bimodule", (i, k, j), r2(l1(a, x), b), l1(a, r2(x, b)), 3)
    return rep


def _check(bm: DendriformBimodule, sides: str) -> ValidationReport:
    return action_report(bm.base.succ, bm.base.prec, bm.tr1, bm.tr2, bm.tl1, bm.tl2, sides)


def check_left_module(bm: DendriformBimodule) -> ValidationReport:
    return _check(bm, LEFT)


def check_right_module(bm: DendriformBimodule) -> ValidationReport:
    return _check(bm, RIGHT)


def check_bimodule(bm: DendriformBimodule) -> ValidationReport:
    return _check(bm, BOTH)


def check_associative_bimodule(bm: DendriformBimodule) -> ValidationReport:
    """V as a bimodule over (D, ⋆) via ▷ = ▷1+▷2 and ◁ = ◁1+◁2."""
    F, n, m = bm.field, bm.base.dim, bm.vdim
    star = bm.base.succ.add(bm.base.prec)
    lt, rt = bm.tr1.add(bm.tr2), bm.tl1.add(bm.tl2)
    eD = [unit_vec(F, n, i) for i in range(n)]
    eV = [unit_vec(F, m, i) for i in range(m)]
    rep = ValidationReport()
    for i, j, k in product(range(n), range(n), range(m)):
        a, b, x = eD[i], eD[j], eV[k]
        rep.check("assoc left", (i, j, k), lt(star(a, b), x), lt(a, lt(b, x)))
        rep.check("assoc right", (k, i, j), rt(rt(x, a), b), rt(x, star(a, b)))
        rep.check("assoc middle", (i, k, j), rt(lt(a, x), b), lt(a, rt(x, b)))
    return rep


def regular_module(alg: DendriformAlgebra) -> DendriformBimodule:
    rep = check_dendriform(alg)
    if not rep.ok:
        raise InvalidInput("not a dendriform algebra", rep)
    return DendriformBimodule(alg, alg.dim, alg.succ, alg.prec, alg.succ, alg.prec)


def check_module_morphism(phi: LinMap, src: DendriformBimodule, dst: DendriformBimodule,
                          sides: str = BOTH) -> ValidationReport:
    if src.base != dst.base:
        raise DimMismatch("modules over different base algebras")
    if (phi.cols, phi.rows) != (src.vdim, dst.vdim):
        raise DimMismatch(f"map is {phi.rows}x{phi.cols}, modules have dims {src.vdim} -> {dst.vdim}")
    F, n = src.field, src.base.dim
    eD = [unit_vec(F, n, i) for i in range(n)]
    eV = [unit_vec(F, src.vdim, i) for i in range(src.vdim)]
    rep = ValidationReport()
    for i, k in product(range(n), range(src.vdim)):
        a, x = eD[i], eV[k]
        if sides in (LEFT, BOTH):
            rep.check("left 1", (i, k), phi(src.tr1(a, x)), dst.tr1(a, phi(x)))
            rep.check("left 2", (i, k), phi(src.tr2(a, x)), dst.tr2(a, phi(x)))
        if sides in (RIGHT, BOTH):
            rep.check("right 1", (k, i), phi(src.tl1(x, a)), dst.tl1(phi(x), a))
            rep.check("right 2", (k, i), phi(src.tl2(x, a)), dst.tl2(phi(x), a))
    rep.info["isomorphism"] = rep.ok and phi.is_invertible()
    return rep


def _scan_chunk(alg: DendriformAlgebra, first: tuple) -> list[tuple]:
    """All valid coefficient tuples whose ▷1 part equals ``first``."""
    F, n = alg.field, alg.dim
    out = []
    for rest in product(F.elements(), repeat=3 * n):
        vals = first + rest
        bm = DendriformBimodule.from_scalars(alg, vals[:n], vals[n:2 * n], vals[2 * n:3 * n], vals[3 * n:])
        if check_bimodule(bm).ok:
            out.append(vals)
    return out


def enumerate_bimodules(alg: DendriformAlgebra, vdim: int = 1, field: Field | None = None,
                        workers: int | None = None) -> list[DendriformBimodule]:
    """Every 1-dim bimodule over ``alg`` on a finite field, in lexicographic order."""
    F = field or alg.field
    if F != alg.field:
        raise DimMismatch("enumeration field differs from the algebra's field")
    if not F.is_finite():
        raise InfiniteField("enumeration needs a finite field")
    if vdim != 1:
        raise ValueError("only vdim 1 is supported")
    n = alg.dim
    firsts = list(product(F.elements(), repeat=n))
    chunks = pmap(partial(_scan_chunk, alg), firsts, workers)
    n4 = [v for chunk in chunks for v in chunk]
    return [DendriformBimodule.from_scalars(alg, v[:n], v[n:2 * n], v[2 * n:3 * n], v[3 * n:])
            for v in sorted(n4)]
