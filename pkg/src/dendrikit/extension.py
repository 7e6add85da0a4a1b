"""Extensions D ⊂ E, the datum they induce, equivalences and splittings."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from itertools import product

from .bimodule import BOTH, LEFT, RIGHT, DendriformBimodule, check_module_morphism
from .dendriform import DendriformAlgebra, check_dendriform, check_morphism, transport
from .errors import DimMismatch, FieldMismatch, InfiniteField, NotAnExtension, NotASplitting
from .extending import MAP_NAMES, ExtendingDatum, unified_product
from .field import Field
from .linalg import BilinearMap, LinMap, is_zero_vec, unit_vec, vadd, vsub
from .report import ValidationReport


@dataclass(frozen=True)
class Extension:
    """A dendriform algebra ``total`` whose first ``subdim`` basis vectors span D.

    ``retraction`` (subdim rows) defaults to the coordinate projection
    onto the D-block.
    """

    total: DendriformAlgebra
    subdim: int
    retraction: LinMap | None = None

    @property
    def field(self) -> Field:
        return self.total.field

    @property
    def vdim(self) -> int:
        return self.total.dim - self.subdim

    def rho(self) -> LinMap:
        if self.retraction is not None:
            return self.retraction
        F, n, N = self.field, self.subdim, self.total.dim
        return LinMap.from_columns(F, [unit_vec(F, n, j) if j < n else (F.zero,) * n for j in range(N)], n)

    def inclusion(self) -> LinMap:
        F, n, N = self.field, self.subdim, self.total.dim
        return LinMap.from_columns(F, [unit_vec(F, N, i) for i in range(n)], N)

    def base(self) -> DendriformAlgebra:
        n, E = self.subdim, self.total
        F = self.field
        return DendriformAlgebra(
            F, n,
            BilinearMap.from_function(F, n, n, n, lambda i, j: E.succ.c[i][j][:n]),
            BilinearMap.from_function(F, n, n, n, lambda i, j: E.prec.c[i][j][:n]),
        )


def check_extension(ext: Extension) -> ValidationReport:
    rep = ValidationReport()
    E, n, N, F = ext.total, ext.subdim, ext.total.dim, ext.field
    rep.extend(check_dendriform(E))
    for i, j in product(range(n), repeat=2):
        for name, B in (("succ", E.succ), ("prec", E.prec)):
            tail = B.c[i][j][n:]
            if not is_zero_vec(F, tail):
                rep.add(f"subalgebra {name}", (i, j), tail, (F.zero,) * len(tail))
    rho = ext.rho()
    if (rho.rows, rho.cols) != (n, N):
        rep.add("retraction shape", (), (rho.rows, rho.cols), (n, N))
        return rep
    ri = rho.compose(ext.inclusion())
    if ri != LinMap.identity(F, n):
        rep.add("retraction", (), tuple(a for r in ri.m for a in r), tuple(a for r in LinMap.identity(F, n).m for a in r))
    return rep


def normalize(ext: Extension) -> tuple[Extension, LinMap]:
    """Rewrite ``ext`` in a basis where the retraction is the coordinate projection.

    Returns the normalized extension and the change of basis P whose
    columns are the new basis in old coordinates: D's basis followed by
    v_j = e_{n+j} − ιρ(e_{n+j}), a basis of ker ρ.
    """
    rep = check_extension(ext)
    if not rep.ok:
        raise NotAnExtension("not an extension with a retraction", rep)
    if ext.retraction is None:
        return ext, LinMap.identity(ext.field, ext.total.dim)
    F, n, N = ext.field, ext.subdim, ext.total.dim
    iota, rho = ext.inclusion(), ext.rho()
    cols = [unit_vec(F, N, i) for i in range(n)]
    for j in range(n, N):
        e = unit_vec(F, N, j)
        cols.append(vsub(F, e, iota(rho(e))))
    P = LinMap.from_columns(F, cols, N)
    return Extension(transport(ext.total, P), n), P


def extract_datum(ext: Extension) -> ExtendingDatum:
    """The extending structure of D through V = ker ρ read off from E."""
    norm, _ = normalize(ext)
    E, n, m, F = norm.total, norm.subdim, norm.vdim, norm.field
    D = norm.base()

    def block(B: BilinearMap, rows, cols, part):
        lo, hi = (0, n) if part == "D" else (n, n + m)
        left = [i for i in (range(n) if rows == "D" else range(n, n + m))]
        right = [j for j in (range(n) if cols == "D" else range(n, n + m))]
        return BilinearMap.from_function(F, len(left), len(right), hi - lo,
                                         lambda i, j: B.c[left[i]][right[j]][lo:hi])

    maps = {}
    for idx, B in (("1", E.succ), ("2", E.prec)):
        maps["tr" + idx] = block(B, "D", "V", "V")
        maps["lh" + idx] = block(B, "D", "V", "D")
        maps["tl" + idx] = block(B, "V", "D", "V")
        maps["rh" + idx] = block(B, "V", "D", "D")
        maps["f" + idx] = block(B, "V", "V", "D")
    maps["sv"] = block(E.succ, "V", "V", "V")
    maps["pv"] = block(E.prec, "V", "V", "V")
    return ExtendingDatum(D, m, **maps)


def rebuild_extension(w: ExtendingDatum) -> Extension:
    return Extension(unified_product(w).algebra, w.base.dim)


def datums_equal(a: ExtendingDatum, b: ExtendingDatum) -> bool:
    return a.base == b.base and a.vdim == b.vdim and all(getattr(a, k) == getattr(b, k) for k in MAP_NAMES)


@dataclass(frozen=True)
class EquivalencePair:
    g: LinMap  # V -> D
    h: LinMap  # V -> V


def _same_shape(w: ExtendingDatum, w2: ExtendingDatum, pair: EquivalencePair) -> None:
    if w.field != w2.field:
        raise FieldMismatch("datums over different fields")
    if w.base != w2.base or w.vdim != w2.vdim:
        raise DimMismatch("datums have different base algebras or vdim")
    n, m = w.base.dim, w.vdim
    if (pair.g.rows, pair.g.cols) != (n, m) or (pair.h.rows, pair.h.cols) != (m, m):
        raise DimMismatch("pair has the wrong shape")


def check_datum_equivalence(w: ExtendingDatum, w2: ExtendingDatum, pair: EquivalencePair) -> ValidationReport:
    """Conditions (E1)-(E5) for (g, h) from ``w`` to ``w2``."""
    _same_shape(w, w2, pair)
    F, n, m = w.field, w.base.dim, w.vdim
    g, h = pair.g, pair.h
    eD = [unit_vec(F, n, i) for i in range(n)]
    eV = [unit_vec(F, m, i) for i in range(m)]
    D = w.base

    def plus(*vs):
        out = vs[0]
        for v in vs[1:]:
            out = vadd(F, out, v)
        return out

    rep = ValidationReport()
    mm = check_module_morphism(h, w.bimodule(), w2.bimodule(), BOTH)
    rep.extend(mm, lambda v: replace(v, label="(E1)"))
    idx = (("1", D.s, w.rh1, w2.rh1, w.tl1, w.lh1, w2.lh1, w.tr1, w2.tr1, w2.tl1, w.f1, w2.f1, w.sv, w2.sv),
           ("2", D.p, w.rh2, w2.rh2, w.tl2, w.lh2, w2.lh2, w.tr2, w2.tr2, w2.tl2, w.f2, w2.f2, w.pv, w2.pv))
    for line, (_, op, rh, rh_, tl, lh, lh_, tr, tr_, tl_, f, f_, vop, vop_) in enumerate(idx, 1):
        for k, i in product(range(m), range(n)):
            x, a = eV[k], eD[i]
            rep.check("(E2)", (k, i), plus(rh(x, a), g(tl(x, a))), plus(op(g(x), a), rh_(h(x), a)), line)
            rep.check("(E3)", (i, k), plus(lh(a, x), g(tr(a, x))), plus(op(a, g(x)), lh_(a, h(x))), line)
        for k1, k2 in product(range(m), repeat=2):
            x, y = eV[k1], eV[k2]
            rep.check("(E4)", (k1, k2), plus(f(x, y), g(vop(x, y))),
                      plus(op(g(x), g(y)), lh_(g(x), h(y)), rh_(h(x), g(y)), f_(h(x), h(y))), line)
            rep.check("(E5)", (k1, k2), h(vop(x, y)),
                      plus(tr_(g(x), h(y)), tl_(h(x), g(y)), vop_(h(x), h(y))), line)
    bij = h.is_invertible()
    rep.info["bijective"] = bij
    rep.info["equivalent"] = rep.ok and bij
    rep.info["cohomologous"] = rep.ok and h == LinMap.identity(F, m)
    return rep


def build_phi(pair: EquivalencePair, w: ExtendingDatum, w2: ExtendingDatum) -> LinMap:
    """φ(a, x) = (a + g(x), h(x)) on D×V."""
    _same_shape(w, w2, pair)
    F, n, m = w.field, w.base.dim, w.vdim
    cols = [unit_vec(F, n + m, i) for i in range(n)]
    for k in range(m):
        cols.append(pair.g.column(k) + pair.h.column(k))
    return LinMap.from_columns(F, cols, n + m)


def _all_matrices(F: Field, rows: int, cols: int):
    for vals in product(F.elements(), repeat=rows * cols):
        yield LinMap(F, rows, cols, tuple(tuple(vals[r * cols:(r + 1) * cols]) for r in range(rows)))


def find_equivalence(w: ExtendingDatum, w2: ExtendingDatum, cohomologous: bool = False) -> EquivalencePair | None:
    """Lexicographically smallest (g, h) with h invertible satisfying (E1)-(E5), over GF(p)."""
    F, n, m = w.field, w.base.dim, w.vdim
    if not F.is_finite():
        raise InfiniteField("witness search needs a finite field")
    hs = [LinMap.identity(F, m)] if cohomologous else [h for h in _all_matrices(F, m, m) if h.is_invertible()]
    for g in _all_matrices(F, n, m):
        for h in hs:
            pair = EquivalencePair(g, h)
            if check_datum_equivalence(w, w2, pair).ok:
                return pair
    return None


UNIFIED = "unified"
BICROSSED = "bicrossed"
COCYCLE = "cocycle semidirect"
NONABELIAN = "nonabelian semidirect"
ABELIAN = "abelian semidirect"
DIRECT_SUM = "direct sum"


@dataclass(frozen=True)
class RetractionClass:
    left_module: bool
    right_module: bool
    bimodule: bool
    algebra: bool
    projection_algebra: bool
    product_kind: str


def product_kind(w: ExtendingDatum) -> str:
    z = {k: getattr(w, k).is_zero() for k in MAP_NAMES}
    no_dual = z["rh1"] and z["rh2"] and z["lh1"] and z["lh2"]
    no_f = z["f1"] and z["f2"]
    no_act = z["tr1"] and z["tr2"] and z["tl1"] and z["tl2"]
    no_v = z["sv"] and z["pv"]
    if no_dual and no_f and no_act:
        return DIRECT_SUM
    if no_dual and no_f and no_v:
        return ABELIAN
    if no_dual and no_f:
        return NONABELIAN
    if no_dual:
        return COCYCLE
    if no_f:
        return BICROSSED
    return UNIFIED


def _regular_restricted(ext: Extension) -> DendriformBimodule:
    """E as a D-bimodule through ≻_E, ≺_E restricted to D × E and E × D."""
    E, n, N, F = ext.total, ext.subdim, ext.total.dim, ext.field
    tr = [BilinearMap.from_function(F, n, N, N, lambda i, j, B=B: B.c[i][j]) for B in (E.succ, E.prec)]
    tl = [BilinearMap.from_function(F, N, n, N, lambda i, j, B=B: B.c[i][j]) for B in (E.succ, E.prec)]
    return DendriformBimodule(ext.base(), N, tr[0], tr[1], tl[0], tl[1])


def _regular(alg: DendriformAlgebra) -> DendriformBimodule:
    return DendriformBimodule(alg, alg.dim, alg.succ, alg.prec, alg.succ, alg.prec)


def classify_retraction(ext: Extension) -> RetractionClass:
    """Which structures ρ (and the projection π onto V) preserve.

    Each flag is computed by checking ρ or π directly as a morphism.
    """
    norm, _ = normalize(ext)
    w = extract_datum(norm)
    rho = norm.rho()
    B, A = _regular_restricted(norm), _regular(norm.base())
    left = check_module_morphism(rho, B, A, LEFT).ok
    right = check_module_morphism(rho, B, A, RIGHT).ok
    alg = check_morphism(rho, norm.total, norm.base()).ok
    pi = projection(norm)
    proj = check_morphism(pi, norm.total, w.v_algebra()).ok
    return RetractionClass(left, right, left and right, alg, proj, product_kind(w))


def projection(ext: Extension) -> LinMap:
    """π: E → V, the coordinate projection onto the V-block (normalized ext)."""
    F, n, N = ext.field, ext.subdim, ext.total.dim
    return LinMap.from_columns(F, [(F.zero,) * (N - n) if j < n else unit_vec(F, N - n, j - n)
                                   for j in range(N)], N - n)


def detect_factorization(ext: Extension) -> ExtendingDatum | None:
    """The matched pair when V = ker ρ is a subalgebra of E, else None."""
    w = extract_datum(ext)
    if w.f1.is_zero() and w.f2.is_zero():
        return w
    return None


# Short exact sequences 0 → A → B → C → 0.

LEFT_MODULE, RIGHT_MODULE, BIMODULE, DENDRIFORM = "left module", "right module", "bimodule", "dendriform"
_SIDES = {LEFT_MODULE: LEFT, RIGHT_MODULE: RIGHT, BIMODULE: BOTH}


@dataclass(frozen=True)
class ShortExactSeq:
    left: object
    middle: object
    right: object
    iota: LinMap
    pi: LinMap
    category: str

    @property
    def field(self) -> Field:
        return self.iota.field

    def is_morphism(self, f: LinMap, src, dst) -> ValidationReport:
        if self.category == DENDRIFORM:
            return check_morphism(f, src, dst)
        return check_module_morphism(f, src, dst, _SIDES[self.category])

    def check(self) -> ValidationReport:
        rep = ValidationReport()
        iota, pi = self.iota, self.pi
        if iota.rank() != iota.cols:
            rep.add("iota injective", (), (iota.rank(),), (iota.cols,))
        if pi.rank() != pi.rows:
            rep.add("pi surjective", (), (pi.rank(),), (pi.rows,))
        if not pi.compose(iota).is_zero() or iota.rank() + pi.rank() != iota.rows:
            rep.add("exactness", (), (), ())
        rep.extend(self.is_morphism(iota, self.left, self.middle), lambda v: replace(v, label="iota " + v.label))
        rep.extend(self.is_morphism(pi, self.middle, self.right), lambda v: replace(v, label="pi " + v.label))
        return rep


def module_sequence(ext: Extension, category: str = BIMODULE) -> ShortExactSeq:
    """0 → D → E → V → 0 in a module category over D."""
    norm, _ = normalize(ext)
    w = extract_datum(norm)
    return ShortExactSeq(_regular(norm.base()), _regular_restricted(norm), w.bimodule(),
                         norm.inclusion(), projection(norm), category)


def algebra_sequence(ext: Extension) -> ShortExactSeq:
    """0 → D → E → (V, ≻_V, ≺_V) → 0 in the dendriform category."""
    norm, _ = normalize(ext)
    w = extract_datum(norm)
    return ShortExactSeq(norm.base(), norm.total, w.v_algebra(), norm.inclusion(), projection(norm), DENDRIFORM)


def _preimages(seq: ShortExactSeq, x) -> list:
    """Two preimages of x under π: a solution and the same shifted by im ι."""
    y = seq.pi.solve(x)
    if y is None:
        raise NotASplitting("π is not surjective")
    out = [y]
    if seq.iota.cols:
        out.append(vadd(seq.field, y, seq.iota.column(0)))
    return out


def _split_report(seq: ShortExactSeq, rho: LinMap) -> ValidationReport:
    rep = ValidationReport()
    F = seq.field
    ri = rho.compose(seq.iota)
    if ri != LinMap.identity(F, seq.iota.cols):
        rep.add("rho iota = id", (), (), ())
        return rep
    rep.extend(seq.is_morphism(rho, seq.middle, seq.left))
    return rep


def _right_from_left(seq: ShortExactSeq, rho: LinMap) -> LinMap:
    F = seq.field
    N = seq.iota.rows
    proj = LinMap.identity(F, N).sub(seq.iota.compose(rho))
    cols = []
    for j in range(seq.pi.rows):
        images = [proj(y) for y in _preimages(seq, unit_vec(F, seq.pi.rows, j))]
        if any(im != images[0] for im in images):
            raise NotASplitting("s depends on the choice of preimage")
        cols.append(images[0])
    return LinMap.from_columns(F, cols, N)


def left_split_to_right(seq: ShortExactSeq, rho: LinMap) -> LinMap:
    """s(x) = (id − ιρ)(π⁻¹(x)) for a module-morphism retraction ρ."""
    if seq.category == DENDRIFORM:
        raise NotASplitting("use alg_left_split_to_right for algebra sequences")
    rep = _split_report(seq, rho)
    if not rep.ok:
        raise NotASplitting("ρ is not a left splitting", rep)
    s = _right_from_left(seq, rho)
    _verify_section(seq, s)
    return s


def _verify_section(seq: ShortExactSeq, s: LinMap) -> None:
    F = seq.field
    rep = ValidationReport()
    if seq.pi.compose(s) != LinMap.identity(F, seq.pi.rows):
        rep.add("pi s = id", (), (), ())
    else:
        rep.extend(seq.is_morphism(s, seq.right, seq.middle))
    if not rep.ok:
        raise NotASplitting("s is not a right splitting", rep)


def right_split_to_left(seq: ShortExactSeq, s: LinMap) -> LinMap:
    """ρ(y) = ι⁻¹(y − sπ(y)) for a module-morphism section s."""
    _verify_section(seq, s)
    F = seq.field
    N = seq.iota.rows
    cols = []
    for j in range(N):
        y = unit_vec(F, N, j)
        w = vsub(F, y, s(seq.pi(y)))
        a = seq.iota.solve(w)
        if a is None:
            raise NotASplitting("y − sπ(y) is not in the image of ι")
        cols.append(a)
    rho = LinMap.from_columns(F, cols, seq.iota.cols)
    rep = _split_report(seq, rho)
    if not rep.ok:
        raise NotASplitting("constructed ρ is not a left splitting", rep)
    return rho


def alg_left_split_to_right(seq: ShortExactSeq, rho: LinMap) -> LinMap:
    if seq.category != DENDRIFORM:
        raise NotASplitting("expected a dendriform-category sequence")
    rep = _split_report(seq, rho)
    if not rep.ok:
        raise NotASplitting("ρ is not an algebra-morphism retraction", rep)
    s = _right_from_left(seq, rho)
    _verify_section(seq, s)
    return s


def _left_inverse(seq: ShortExactSeq) -> LinMap:
    """Some ρ0 with ρ0 ι = id."""
    F = seq.field
    iota = seq.iota
    # rows of ρ0 solve ι^T r = e_i
    rows = []
    for i in range(iota.cols):
        r = iota.transpose().solve(unit_vec(F, iota.cols, i))
        rows.append(r)
    return LinMap.from_rows(F, rows, iota.rows)


@dataclass
class SplittingSearch:
    splittings: list
    all_parameters: bool = False
    info: dict = dc_field(default_factory=dict)


def find_left_splittings(seq: ShortExactSeq) -> SplittingSearch:
    """All retractions ρ that are morphisms in the sequence's category.

    Every left inverse of ι has the form ρ0 + Yπ.  Over GF(p) all Y are
    tried.  Over the rationals only the case dim A = dim C = 1 is
    handled: the conditions are polynomials of degree at most two in the
    single parameter, solved exactly.
    """
    F = seq.field
    rho0 = _left_inverse(seq)
    a, c = seq.iota.cols, seq.pi.rows
    if F.is_finite():
        found = []
        for Y in _all_matrices(F, a, c):
            rho = rho0.add(Y.compose(seq.pi))
            if seq.is_morphism(rho, seq.middle, seq.left).ok:
                found.append(rho)
        return SplittingSearch(found, info={"searched": len(F.elements()) ** (a * c)})
    if a * c != 1:
        raise InfiniteField("rational search only handles a one-parameter family")
    direction = LinMap.from_rows(F, [[1]]).compose(seq.pi)

    def member(t):
        return rho0.add(direction.scale(t))

    return _solve_family(F, member, lambda t: seq.is_morphism(member(t), seq.middle, seq.left))


def _solve_family(F: Field, member, check) -> SplittingSearch:
    """Exact roots of a family whose conditions are quadratic in one parameter."""
    samples = [F.coerce(t) for t in (0, 1, 2)]
    reports = [check(t) for t in samples]
    # a condition is identified by its label and basis tuple; its residual
    # lhs − rhs is sampled at t = 0, 1, 2 and interpolated.
    residuals: dict = {}
    for idx, (t, rep) in enumerate(zip(samples, reports)):
        for v in rep.violations:
            for comp, (x, y) in enumerate(zip(v.lhs, v.rhs)):
                residuals.setdefault((v.label, v.where, comp), [F.zero] * 3)[idx] = F.sub(x, y)
    if not residuals:
        return SplittingSearch([], all_parameters=True)
    candidates: set | None = None
    for r0, r1, r2 in residuals.values():
        # r(t) = c0 + c1 t + c2 t^2 through (0, r0), (1, r1), (2, r2)
        c0 = r0
        c2 = (r2 - 2 * r1 + r0) / 2
        c1 = r1 - r0 - c2
        roots = _quadratic_roots(F, c0, c1, c2)
        if roots is None:
            continue
        candidates = roots if candidates is None else candidates & roots
    if candidates is None:
        return SplittingSearch([], all_parameters=True)
    found = [member(t) for t in sorted(candidates) if check(t).ok]
    return SplittingSearch(found, info={"candidates": sorted(candidates)})


def _quadratic_roots(F: Field, c0, c1, c2) -> set | None:
    """Rational roots of c0 + c1 t + c2 t²; None when identically zero."""
    if c2 == 0 and c1 == 0:
        return None if c0 == 0 else set()
    if c2 == 0:
        return {-c0 / c1}
    disc = c1 * c1 - 4 * c2 * c0
    r = F.sqrt(disc)
    if r is None:
        return set()
    return {(-c1 + r) / (2 * c2), (-c1 - r) / (2 * c2)}


def find_right_splittings(seq: ShortExactSeq) -> list:
    """All sections s = s0 + ιZ that are morphisms, over GF(p)."""
    F = seq.field
    if not F.is_finite():
        raise InfiniteField("exhaustive search needs a finite field")
    s0 = LinMap.from_columns(F, [seq.pi.solve(unit_vec(F, seq.pi.rows, j)) for j in range(seq.pi.rows)],
                             seq.iota.rows)
    found = []
    for Z in _all_matrices(F, seq.iota.cols, seq.pi.rows):
        s = s0.add(seq.iota.compose(Z))
        if seq.is_morphism(s, seq.right, seq.middle).ok:
            found.append(s)
    return found


def transport_bimodule(bm: DendriformBimodule, P: LinMap) -> DendriformBimodule:
    """The same bimodule in the basis given by the columns of P."""
    F, n, m = bm.field, bm.base.dim, bm.vdim
    Pinv = P.inverse()
    cols = P.columns()
    eD = [unit_vec(F, n, i) for i in range(n)]
    tr = [BilinearMap.from_function(F, n, m, m, lambda i, j, B=B: Pinv(B.apply(eD[i], cols[j])))
          for B in (bm.tr1, bm.tr2)]
    tl = [BilinearMap.from_function(F, m, n, m, lambda i, j, B=B: Pinv(B.apply(cols[i], eD[j])))
          for B in (bm.tl1, bm.tl2)]
    return DendriformBimodule(bm.base, m, tr[0], tr[1], tl[0], tl[1])


def bimodule_direct_sum(a: DendriformBimodule, c: DendriformBimodule) -> DendriformBimodule:
    if a.base != c.base:
        raise DimMismatch("bimodules over different bases")
    F, n, p, q = a.field, a.base.dim, a.vdim, c.vdim
    zp, zq = (F.zero,) * p, (F.zero,) * q

    def left(A, C):
        return BilinearMap.from_function(F, n, p + q, p + q,
                                         lambda i, j: A.c[i][j] + zq if j < p else zp + C.c[i][j - p])

    def right(A, C):
        return BilinearMap.from_function(F, p + q, n, p + q,
                                         lambda i, j: A.c[i][j] + zq if i < p else zp + C.c[i - p][j])

    return DendriformBimodule(a.base, p + q, left(a.tr1, c.tr1), left(a.tr2, c.tr2),
                              right(a.tl1, c.tl1), right(a.tl2, c.tl2))


def split_sequence(a: DendriformBimodule, c: DendriformBimodule, P: LinMap | None = None,
                   category: str = BIMODULE) -> ShortExactSeq:
    """0 → A → A⊕C → C → 0, optionally rewritten in the basis P of the middle."""
    F, p, q = a.field, a.vdim, c.vdim
    B = bimodule_direct_sum(a, c)
    iota = LinMap.from_columns(F, [unit_vec(F, p + q, i) for i in range(p)], p + q)
    pi = LinMap.from_columns(F, [(F.zero,) * q if j < p else unit_vec(F, q, j - p) for j in range(p + q)], q)
    if P is not None:
        B = transport_bimodule(B, P)
        iota = P.inverse().compose(iota)
        pi = pi.compose(P)
    return ShortExactSeq(a, B, c, iota, pi, category)
