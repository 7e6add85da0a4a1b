"""The nine acceptance criteria, one test each, one PASS/FAIL line each."""

from __future__ import annotations

import random
from dataclasses import replace

import oracles
from helpers import VERDICTS, flag_pool, random_extension, random_invertible

from dendrikit.bimodule import enumerate_bimodules
from dendrikit.deformation import complement_to_deformation, deformation_to_complement, enumerate_deformations
from dendrikit.dendriform import KINDS, check_dendriform, check_induced, ex_b, ex_d, ex_e, induce
from dendrikit.extending import MAP_NAMES, ExtendingDatum, induce_datum, map_shape, unified_algebra, validate_datum
from dendrikit.extension import (BIMODULE, Extension, LEFT_MODULE, RIGHT_MODULE, algebra_sequence, datums_equal,
                                 extract_datum, find_left_splittings, left_split_to_right, normalize,
                                 rebuild_extension, right_split_to_left, split_sequence)
from dendrikit.field import QQ, gf
from dendrikit.flag import FlagDatum, classify_flags, flag_to_datum, flag_to_extension
from dendrikit.linalg import BilinearMap, LinMap
from dendrikit.tables import (FAMILIES, TABLE3, TABLE3_K, TABLE4, TABLE4_K, family_flag, verify_table1,
                              verify_table2, verify_table3, verify_table4, verify_table5)

GF2, GF3 = gf(2), gf(3)


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_fixtures():
    bad = []
    for name, make in (("exD", ex_d), ("exB", ex_b), ("exE", ex_e)):
        alg = make(QQ)
        if not check_dendriform(alg).ok:
            bad.append(name)
        for kind in KINDS:
            if not check_induced(induce(alg, kind)).ok:
                bad.append(f"{name}/{kind}")
    record(1, not bad, "fixtures and induced algebras valid" if not bad else f"failures: {bad}")


def test_criterion_2_bimodules():
    t1 = verify_table1(QQ)
    problems = [r.label for r in t1.rows if r.ok is not True]
    for F in (GF2, GF3):
        p = F.characteristic
        found = {tuple(int(a) for a in bm.scalars()) for bm in enumerate_bimodules(ex_d(F))}
        if found != oracles.bimodules(1, 0, p):
            problems.append(f"enumeration over {F.name} differs from the oracle")
    record(2, not problems, f"{len(t1.rows)} columns valid over q; GF(2), GF(3) solution sets match"
           if not problems else f"{problems}")


def _library_partition(cls, attr: str) -> set:
    return {frozenset(oracles.algebra_tables(flag_to_extension(fd).total) for fd in group)
            for group in getattr(cls, attr)}


def test_criterion_3_flag_classification():
    t2 = verify_table2(QQ)
    problems = [r.label for r in t2.rows if r.ok is not True]
    t2p = verify_table2(GF3)
    problems += [f"gf:3 {r.label}" for r in t2p.rows if r.ok is False]
    cls = classify_flags(ex_d(GF3))
    sols = oracles.one_dim_extensions(1, 0, 3)
    if {oracles.algebra_tables(flag_to_extension(fd).total) for fd in cls.valid} != sols:
        problems.append("valid set differs from the oracle")
    if _library_partition(cls, "orbits") != oracles.orbits(sols, 3):
        problems.append("orbit partition differs from the oracle")
    if _library_partition(cls, "cohomology_classes") != oracles.orbits(sols, 3, cohomologous=True):
        problems.append("cohomology partition differs from the oracle")
    record(3, not problems, f"16 cases and witnesses verified; gf:3 {len(cls.valid)} valid flags, "
           f"{len(cls.orbits)} orbits match the oracle; representatives in distinct orbits"
           if not problems else f"{problems}")


def test_criterion_4_matched_pairs():
    results = [verify_table3(QQ), verify_table4(QQ)]
    bad = [f"table {r.which} {row.label}" for r in results for row in r.rows if row.ok is not True]
    total = sum(len(r.rows) for r in results)
    ok = not bad and (len(TABLE3), len(TABLE4), TABLE3_K, TABLE4_K) == (10, 3, (1, 0), (0, 1)) and total == 13
    record(4, ok, f"{total} matched pairs, bicrossed products and factorizations verified" if ok else f"{bad}")


def test_criterion_5_deformations():
    t5 = verify_table5(QQ)
    bad = [r.label for r in t5.rows if r.ok is not True]
    indices = [r for r in t5.rows if r.label.endswith("index")]
    ok = not bad and len(indices) == 16
    record(5, ok, f"{len(t5.rows)} rows verified; indices over gf:3 for all 16 cases" if ok else f"{bad}")


def test_criterion_6_round_trips():
    rng = random.Random(6)
    bad = 0
    for subdim in (1, 2):
        for _ in range(100):
            ext = random_extension(rng, 3, subdim)
            w = extract_datum(ext)
            back = rebuild_extension(w)
            if not validate_datum(w).ok or back.total != normalize(ext)[0].total:
                bad += 1
            if not datums_equal(extract_datum(back), w):
                bad += 1
    deformations = 0
    for p in (2, 3):
        for fd in flag_pool(p):
            ext = flag_to_extension(fd)
            for d in enumerate_deformations(flag_to_datum(fd)):
                deformations += 1
                comp = deformation_to_complement(ext, d)
                if complement_to_deformation(ext, comp).d != d:
                    bad += 1
                again = deformation_to_complement(ext, complement_to_deformation(ext, comp))
                if not _same_span(again.basis, comp.basis):
                    bad += 1
    record(6, bad == 0, f"200 extensions over gf:3 and {deformations} deformation maps over gf:2, gf:3 round-trip"
           if not bad else f"{bad} round-trip failures")


def _same_span(a: LinMap, b: LinMap) -> bool:
    joint = LinMap.from_columns(a.field, a.columns() + b.columns(), a.rows)
    return joint.rank() == a.rank() == b.rank()


def _random_map(rng, F, shape):
    els = F.elements()
    return BilinearMap.from_function(F, *shape, lambda i, j: tuple(rng.choice(els) for _ in range(shape[2])))


def _perturb(rng, w):
    name = rng.choice(MAP_NAMES)
    B = getattr(w, name)
    i, j, k = rng.randrange(B.left), rng.randrange(B.right), rng.randrange(B.target)
    c = [[list(v) for v in row] for row in B.c]
    c[i][j][k] = w.field.add(c[i][j][k], w.field.one)
    return w.with_maps(**{name: replace(B, c=tuple(tuple(tuple(v) for v in row) for row in c))})


def _full_random(rng, base):
    return ExtendingDatum(base, 1, **{k: _random_map(rng, base.field, map_shape(k, base.dim, 1)) for k in MAP_NAMES})


def test_criterion_7_biconditional():
    rng = random.Random(7)
    mismatches = valid = 0
    for t in range(200):
        w = extract_datum(random_extension(rng, 3, rng.choice((1, 2))))
        if t % 3 == 1:
            w = _perturb(rng, w)
        elif t % 3 == 2:
            w = _full_random(rng, rng.choice((ex_d(GF3), ex_b(GF3), ex_e(GF3), w.base)))
        a = validate_datum(w).ok
        b = check_dendriform(unified_algebra(w)).ok
        valid += a
        mismatches += a != b
    record(7, mismatches == 0 and 0 < valid < 200,
           f"200 tuples ({valid} valid), zero mismatches" if mismatches == 0 else f"{mismatches} mismatches")


def _fixture_datums():
    yield from (flag_to_datum(family_flag(QQ, n)) for n in FAMILIES)
    for rows, k in ((TABLE3, TABLE3_K), (TABLE4, TABLE4_K)):
        for vals in rows:
            yield flag_to_datum(FlagDatum.from_values(ex_d(QQ), vals + (0, 0) + k))
    yield extract_datum(Extension(ex_e(QQ), 1))


def test_criterion_8_functors():
    bad, count = [], 0
    for w in _fixture_datums():
        assert validate_datum(w).ok
        count += 1
        for kind in KINDS:
            left = induce(unified_algebra(w), kind).product
            right = induce_datum(w, kind).product().product
            if left != right:
                bad.append((count, kind))
    record(8, not bad, f"{count} datums x {len(KINDS)} kinds commute" if not bad else f"{bad}")


def test_criterion_9_splittings():
    problems = []
    for F in (GF3, QQ):
        fd = family_flag(F, 14, q=0, k1=1)
        seq = algebra_sequence(flag_to_extension(fd))
        s = LinMap.from_columns(F, [(0, 1)], 2)
        if seq.pi.compose(s) != LinMap.identity(F, 1) or not seq.is_morphism(s, seq.right, seq.middle).ok:
            problems.append(f"s(e2) = e2 is not a right splitting over {F.name}")
        search = find_left_splittings(seq)
        if search.splittings or search.all_parameters:
            problems.append(f"left splitting found over {F.name}")
    rng = random.Random(9)
    round_trips = 0
    for _ in range(50):
        D = rng.choice((ex_d(GF3), ex_b(GF3)))
        mods = enumerate_bimodules(D)
        a, c = rng.choice(mods), rng.choice(mods)
        category = rng.choice((BIMODULE, LEFT_MODULE, RIGHT_MODULE))
        seq = split_sequence(a, c, random_invertible(rng, GF3, 2), category)
        rhos = find_left_splittings(seq).splittings
        if not rhos:
            problems.append("split sequence without a left splitting")
            continue
        rho = rng.choice(rhos)
        s = left_split_to_right(seq, rho)
        if right_split_to_left(seq, s) != rho or left_split_to_right(seq, right_split_to_left(seq, s)) != s:
            problems.append("round trip failed")
        round_trips += 1
    record(9, not problems, f"no algebra left splitting over gf:3 or q; {round_trips} module round trips"
           if not problems else f"{problems}")

