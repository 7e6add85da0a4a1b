import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import flag_pool, random_extension, random_invertible
from dendrikit.bimodule import enumerate_bimodules
from dendrikit.dendriform import check_morphism, direct_sum, ex_b, ex_d, ex_e
from dendrikit.errors import NotAnExtension, NotASplitting
from dendrikit.extending import direct_sum_datum, unified_algebra, validate_datum
from dendrikit.extension import (BIMODULE, DENDRIFORM, LEFT_MODULE, RIGHT_MODULE, EquivalencePair, Extension,
                                 algebra_sequence, build_phi, check_datum_equivalence, check_extension,
                                 classify_retraction, datums_equal, detect_factorization, extract_datum,
                                 find_equivalence, find_left_splittings, find_right_splittings, left_split_to_right,
                                 module_sequence, normalize, rebuild_extension, right_split_to_left, split_sequence)
from dendrikit.field import QQ, gf
from dendrikit.flag import FlagDatum, FlagWitness, flag_act, flag_to_datum, flag_to_extension, witness_pair
from dendrikit.linalg import LinMap
from dendrikit.tables import family_flag

F3 = gf(3)
seeds = st.integers(0, 10**6)


def test_extension_checks():
    ext = Extension(ex_e(QQ), 1)
    assert check_extension(ext).ok
    # a retraction that is not a left inverse of the inclusion
    bad = Extension(ex_e(QQ), 1, LinMap.from_rows(QQ, [[2, 0]]))
    assert not check_extension(bad).ok
    with pytest.raises(NotAnExtension):
        normalize(bad)


def test_exe_datum():
    w = extract_datum(Extension(ex_e(QQ), 1))
    assert validate_datum(w).ok
    assert w.base == ex_d(QQ)
    assert rebuild_extension(w).total == ex_e(QQ)


@given(seeds, st.sampled_from([1, 2]))
def test_extract_rebuild_round_trip(seed, subdim):
    ext = random_extension(random.Random(seed), 3, subdim)
    w = extract_datum(ext)
    assert validate_datum(w).ok
    back = rebuild_extension(w)
    assert back.total == normalize(ext)[0].total
    assert datums_equal(extract_datum(back), w)


@given(seeds)
def test_normalize_is_an_isomorphism(seed):
    ext = random_extension(random.Random(seed), 3, 1)
    norm, P = normalize(ext)
    assert check_morphism(P, norm.total, ext.total).info["isomorphism"]


@given(st.sampled_from(flag_pool(3)), st.integers(0, 2), st.integers(1, 2))
def test_flag_action_gives_equivalent_datums(fd, g0, h0):
    w = FlagWitness((g0,), h0)
    w1, w2 = flag_to_datum(fd), flag_to_datum(flag_act(fd, w))
    pair = witness_pair(F3, w)
    rep = check_datum_equivalence(w1, w2, pair)
    assert rep.ok and rep.info["equivalent"]
    assert rep.info["cohomologous"] == (h0 == 1)
    phi = build_phi(pair, w1, w2)
    assert check_morphism(phi, unified_algebra(w1), unified_algebra(w2)).info["isomorphism"]


def test_find_equivalence():
    a = flag_to_datum(family_flag(F3, 1))
    b = flag_to_datum(FlagDatum.from_values(ex_d(F3), (1, -1) + (0,) * 10))
    pair = find_equivalence(a, b)
    assert pair is not None and check_datum_equivalence(a, b, pair).ok
    c = flag_to_datum(FlagDatum.from_values(ex_d(F3), (0, 0, 1) + (0,) * 9))
    assert find_equivalence(b, c) is None


def test_not_equivalent_pair_reports():
    w = flag_to_datum(family_flag(QQ, 3))
    pair = EquivalencePair(LinMap.from_rows(QQ, [[5]]), LinMap.from_rows(QQ, [[1]]))
    rep = check_datum_equivalence(w, w, pair)
    assert not rep.ok and not rep.info["equivalent"]


def test_product_kinds_and_factorization():
    w = direct_sum_datum(ex_d(QQ), ex_b(QQ))
    cls = classify_retraction(rebuild_extension(w))
    assert cls.algebra and cls.bimodule and cls.projection_algebra
    assert cls.product_kind == "direct sum"
    with_cocycle = rebuild_extension(flag_to_datum(family_flag(QQ, 1)))
    assert detect_factorization(with_cocycle) is None
    mp = flag_to_datum(FlagDatum.from_values(ex_d(QQ), (1, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0)))
    assert datums_equal(detect_factorization(rebuild_extension(mp)), mp)


@pytest.mark.parametrize("category", [BIMODULE, LEFT_MODULE, RIGHT_MODULE])
def test_module_sequences_are_exact(category):
    for fd in flag_pool(3)[:20]:
        seq = module_sequence(flag_to_extension(fd), category)
        assert seq.check().ok


def test_algebra_sequence_is_exact():
    seq = algebra_sequence(flag_to_extension(family_flag(QQ, 14, q=0, k1=1)))
    assert seq.check().ok and seq.category == DENDRIFORM
    # D is not an ideal of exE, so π fails to be a morphism
    assert algebra_sequence(Extension(ex_e(QQ), 1)).check().failed("pi succ")


def test_split_sequence_round_trips():
    rng = random.Random(4)
    mods = enumerate_bimodules(ex_d(F3))
    for _ in range(20):
        seq = split_sequence(rng.choice(mods), rng.choice(mods), random_invertible(rng, F3, 2))
        assert seq.check().ok
        lefts = find_left_splittings(seq).splittings
        rights = find_right_splittings(seq)
        assert lefts and rights
        # the two constructions are inverse bijections between the solution sets
        assert sorted(left_split_to_right(seq, r).m for r in lefts) == sorted(s.m for s in rights)
        for s in rights:
            assert left_split_to_right(seq, right_split_to_left(seq, s)) == s


def test_bad_splittings_raise():
    mods = enumerate_bimodules(ex_d(F3))
    seq = split_sequence(mods[0], mods[-1])
    with pytest.raises(NotASplitting):
        left_split_to_right(seq, LinMap.from_rows(F3, [[2, 0]]))
    with pytest.raises(NotASplitting):
        right_split_to_left(seq, LinMap.from_columns(F3, [(0, 0)], 2))
    alg_seq = algebra_sequence(Extension(ex_e(QQ), 1))
    with pytest.raises(NotASplitting):
        left_split_to_right(alg_seq, LinMap.from_rows(QQ, [[1, 0]]))


def test_non_split_algebra_extension():
    for F in (F3, QQ):
        seq = algebra_sequence(flag_to_extension(family_flag(F, 14, q=0, k1=1)))
        s = LinMap.from_columns(F, [(0, 1)], 2)
        assert seq.is_morphism(s, seq.right, seq.middle).ok
        assert find_left_splittings(seq).splittings == []


def test_split_algebra_extension_has_splitting():
    E = direct_sum(ex_d(QQ), ex_b(QQ))
    search = find_left_splittings(algebra_sequence(Extension(E, 1)))
    assert search.splittings or search.all_parameters
