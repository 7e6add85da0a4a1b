"""Dendriform algebras, their axioms and morphisms, and induced structures."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DimMismatch, FieldMismatch, InvalidInput
from .field import QQ, Field, field_from_spec
from .linalg import BilinearMap, LinMap, Vec, unit_vec, vadd, vsub, zero_vec
from .report import ValidationReport

ASSOCIATIVE = "associative"
PRELIE = "prelie"
LIE = "lie"
KINDS = (ASSOCIATIVE, PRELIE, LIE)


@dataclass(frozen=True)
class DendriformAlgebra:
    field: Field
    dim: int
    succ: BilinearMap
    prec: BilinearMap

    def __post_init__(self):
        for b in (self.succ, self.prec):
            if b.shape() != (self.dim,) * 3:
                raise DimMismatch(f"product has shape {b.shape()}, expected {(self.dim,) * 3}")
            if b.field != self.field:
                raise FieldMismatch("product lives over a different field")

    @classmethod
    def from_tables(cls, field, dim: int, succ: dict, prec: dict) -> "DendriformAlgebra":
        """Build from sparse ``{(i, j): coefficient vector}`` tables."""
        field = field_from_spec(field)
        return cls(field, dim,
                   BilinearMap.from_entries(field, dim, dim, dim, succ),
                   BilinearMap.from_entries(field, dim, dim, dim, prec))

    @classmethod
    def zero(cls, field, dim: int) -> "DendriformAlgebra":
        field = field_from_spec(field)
        z = BilinearMap.zero(field, dim, dim, dim)
        return cls(field, dim, z, z)

    def s(self, u: Vec, v: Vec) -> Vec:
        return self.succ.apply(u, v)

    def p(self, u: Vec, v: Vec) -> Vec:
        return self.prec.apply(u, v)

    def star(self, u: Vec, v: Vec) -> Vec:
        return vadd(self.field, self.s(u, v), self.p(u, v))

    def basis(self) -> list[Vec]:
        return [unit_vec(self.field, self.dim, i) for i in range(self.dim)]

    def is_valid(self) -> bool:
        return check_dendriform(self).ok


def check_dendriform(alg: DendriformAlgebra) -> ValidationReport:
    """Check the three dendriform axioms on every basis triple."""
    rep = ValidationReport()
    e = alg.basis()
    for i, j, k in product(range(alg.dim), repeat=3):
        x, y, z = e[i], e[j], e[k]
        rep.check("axiom (1)", (i, j, k), alg.s(alg.star(x, y), z), alg.s(x, alg.s(y, z)))
        rep.check("axiom (2)", (i, j, k), alg.p(alg.p(x, y), z), alg.p(x, alg.star(y, z)))
        rep.check("axiom (3)", (i, j, k), alg.p(alg.s(x, y), z), alg.s(x, alg.p(y, z)))
    return rep


@dataclass(frozen=True)
class InducedAlgebra:
    kind: str
    field: Field
    dim: int
    product: BilinearMap

    def mul(self, u: Vec, v: Vec) -> Vec:
        return self.product.apply(u, v)

    def check(self) -> ValidationReport:
        return check_induced(self)


def check_induced(alg: InducedAlgebra) -> ValidationReport:
    """Associativity, the left preLie identity, or antisymmetry plus Jacobi."""
    rep = ValidationReport()
    F, m = alg.field, alg.mul
    e = [unit_vec(F, alg.dim, i) for i in range(alg.dim)]
    if alg.kind == LIE:
        for i, j in product(range(alg.dim), repeat=2):
            rep.check("antisymmetry", (i, j), m(e[i], e[j]), tuple(F.neg(a) for a in m(e[j], e[i])))
    for i, j, k in product(range(alg.dim), repeat=3):
        x, y, z = e[i], e[j], e[k]
        if alg.kind == ASSOCIATIVE:
            rep.check("associativity", (i, j, k), m(m(x, y), z), m(x, m(y, z)))
        elif alg.kind == PRELIE:
            lhs = vsub(F, m(m(x, y), z), m(x, m(y, z)))
            rhs = vsub(F, m(m(y, x), z), m(y, m(x, z)))
            rep.check("left preLie", (i, j, k), lhs, rhs)
        elif alg.kind == LIE:
            jac = vadd(F, vadd(F, m(x, m(y, z)), m(y, m(z, x))), m(z, m(x, y)))
            rep.check("jacobi", (i, j, k), jac, zero_vec(F, alg.dim))
        else:
            raise ValueError(f"unknown kind {alg.kind!r}")
    return rep


def induced_product(succ: BilinearMap, prec: BilinearMap, kind: str) -> BilinearMap:
    """The induced product built from a pair of dendriform-shaped maps.

    Associative: x≻y + x≺y.  PreLie: x≻y − y≺x.  Lie: commutator of the
    associative product.
    """
    star = succ.add(prec)
    if kind == ASSOCIATIVE:
        return star
    if kind == PRELIE:
        return succ.sub(prec.swap())
    if kind == LIE:
        return star.sub(star.swap())
    raise ValueError(f"unknown kind {kind!r}")


def induce(alg: DendriformAlgebra, kind: str) -> InducedAlgebra:
    rep = check_dendriform(alg)
    if not rep.ok:
        raise InvalidInput("not a dendriform algebra", rep)
    kind = kind.lower()
    return InducedAlgebra(kind, alg.field, alg.dim, induced_product(alg.succ, alg.prec, kind))


def check_morphism(phi: LinMap, src: DendriformAlgebra, dst: DendriformAlgebra) -> ValidationReport:
    if (phi.cols, phi.rows) != (src.dim, dst.dim):
        raise DimMismatch(f"map is {phi.rows}x{phi.cols}, algebras have dims {src.dim} -> {dst.dim}")
    rep = ValidationReport()
    e = src.basis()
    for i, j in product(range(src.dim), repeat=2):
        x, y = e[i], e[j]
        rep.check("succ", (i, j), phi(src.s(x, y)), dst.s(phi(x), phi(y)))
        rep.check("prec", (i, j), phi(src.p(x, y)), dst.p(phi(x), phi(y)))
    rep.info["isomorphism"] = rep.ok and phi.is_invertible()
    return rep


def direct_sum(a: DendriformAlgebra, b: DendriformAlgebra) -> DendriformAlgebra:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    F, n, m = a.field, a.dim, b.dim
    z = zero_vec(F, n + m)

    def block(A: BilinearMap, B: BilinearMap):
        def fn(i, j):
            if i < n and j < n:
                return A.c[i][j] + zero_vec(F, m)
            if i >= n and j >= n:
                return zero_vec(F, n) + B.c[i - n][j - n]
            return z
        return BilinearMap.from_function(F, n + m, n + m, n + m, fn)

    return DendriformAlgebra(F, n + m, block(a.succ, b.succ), block(a.prec, b.prec))


def transport(alg: DendriformAlgebra, P: LinMap) -> DendriformAlgebra:
    """The same algebra written in the basis given by the columns of P.

    Writing u = P u', the new products are P⁻¹(P u' ≻ P v').
    """
    F, n = alg.field, alg.dim
    Pinv = P.inverse()
    cols = P.columns()

    def via(B):
        return BilinearMap.from_function(F, n, n, n, lambda i, j: Pinv(B.apply(cols[i], cols[j])))

    return DendriformAlgebra(F, n, via(alg.succ), via(alg.prec))


def ex_d(field=QQ) -> DendriformAlgebra:
    """1-dim: e1≻e1 = e1, e1≺e1 = 0."""
    return DendriformAlgebra.from_tables(field, 1, {(0, 0): (1,)}, {})


def ex_b(field=QQ) -> DendriformAlgebra:
    """1-dim: e1≻e1 = 0, e1≺e1 = e1."""
    return DendriformAlgebra.from_tables(field, 1, {}, {(0, 0): (1,)})


def ex_e(field=QQ) -> DendriformAlgebra:
    """2-dim algebra with e1 spanning a copy of exD."""
    return DendriformAlgebra.from_tables(
        field, 2,
        {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (2, 0), (1, 1): (0, 2)},
        {(0, 1): (2, -1), (1, 1): (4, -2)},
    )


FIXTURES = {"exD": ex_d, "exB": ex_b, "exE": ex_e}


def fixture(name: str, field=QQ) -> DendriformAlgebra:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    return FIXTURES[name](field_from_spec(field))
