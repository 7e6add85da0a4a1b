import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import flag_pool
from dendrikit.dendriform import DendriformAlgebra, check_dendriform, check_morphism, ex_b, ex_d, ex_e
from dendrikit.errors import DimMismatch, InfiniteField, WrongVDim, ZeroH0
from dendrikit.extending import validate_datum
from dendrikit.extension import Extension, extract_datum
from dendrikit.field import QQ, gf
from dendrikit.flag import (FlagDatum, FlagWitness, classify_flags, compose_witness, datum_to_flag,
                            enumerate_flags, find_flag_witness, flag_act, flag_to_datum, flag_to_extension,
                            inverse_witness, validate_flag, witness_map, witnesses)
from dendrikit.tables import family_flag, verify_table2

F2, F3, F5 = gf(2), gf(3), gf(5)
EXE_FLAG = (1, -1, 0, 0, 2, 0, 0, 2, 0, 4, 2, -2)

tuples3 = st.lists(st.integers(0, 2), min_size=12, max_size=12)
witness3 = st.tuples(st.integers(0, 2), st.integers(1, 2))


def test_values_round_trip():
    fd = FlagDatum.from_values(ex_d(QQ), ["1", "-1/2"] + [0] * 10)
    assert FlagDatum.from_values(ex_d(QQ), fd.values()) == fd
    assert fd.formatted()[:2] == ("1", "-1/2")
    with pytest.raises(DimMismatch):
        FlagDatum.from_values(ex_d(QQ), (0,) * 11)
    assert len(FlagDatum.from_values(ex_e(QQ), (0,) * 30).values()) == 30


def test_exe_is_a_flag_extension():
    fd = datum_to_flag(extract_datum(Extension(ex_e(QQ), 1)))
    assert fd.values() == EXE_FLAG
    assert validate_flag(fd).ok
    assert flag_to_extension(fd).total == ex_e(QQ)


def test_datum_to_flag_needs_vdim_one():
    from dendrikit.extending import ExtendingDatum
    with pytest.raises(WrongVDim):
        datum_to_flag(ExtendingDatum.build(ex_d(QQ), 2))


@given(tuples3)
def test_flag_conditions_match_datum_conditions(vals):
    fd = FlagDatum.from_values(ex_d(F3), vals)
    assert datum_to_flag(flag_to_datum(fd)) == fd
    ok = validate_flag(fd).ok
    assert ok == validate_datum(flag_to_datum(fd)).ok
    assert ok == check_dendriform(flag_to_extension(fd).total).ok


@given(st.lists(st.integers(0, 1), min_size=30, max_size=30))
def test_flag_conditions_two_dim_base(vals):
    fd = FlagDatum.from_values(ex_e(F2), vals)
    assert validate_flag(fd).ok == check_dendriform(flag_to_extension(fd).total).ok


@given(st.sampled_from(flag_pool(3)), witness3, witness3)
def test_action_is_a_group_action(fd, a, b):
    w, w2 = FlagWitness((a[0],), a[1]), FlagWitness((b[0],), b[1])
    moved = flag_act(fd, w)
    assert validate_flag(moved).ok
    assert flag_act(moved, w2) == flag_act(fd, compose_witness(F3, w, w2))
    assert flag_act(moved, inverse_witness(F3, w)) == fd
    assert flag_act(fd, FlagWitness((0,), 1)) == fd
    # ψ(x) = g0 + h0 x is an isomorphism from the original extension onto the acted one
    assert check_morphism(witness_map(fd, w), flag_to_extension(fd).total,
                          flag_to_extension(moved).total).info["isomorphism"]


def test_zero_h0():
    with pytest.raises(ZeroH0):
        flag_act(family_flag(QQ, 1), FlagWitness((0,), 0))


def test_case_one_orbit_step():
    rep = FlagDatum.from_values(ex_d(QQ), (1, -1) + (0,) * 10)
    assert flag_act(rep, FlagWitness((-1,), 1)).values() == (1, -1, 0, 0, 1, 0, 0, 1, 0, 1, 1, -1)
    assert flag_act(family_flag(QQ, 1), FlagWitness((1,), 1)) == rep


def test_case_six_and_seven_split_on_a1():
    fd = family_flag(QQ, 6, k1=2)
    assert validate_flag(fd).ok
    # with a1 = 0 the first (F5) line reads a1 = a1, so the tuple stays valid:
    # it is the neighbouring family at s = 1
    moved = FlagDatum.from_values(ex_d(QQ), fd.values()[:8] + (0,) + fd.values()[9:])
    assert validate_flag(moved).ok
    assert moved == family_flag(QQ, 7, s=1, k1=2)
    cls = classify_flags(ex_d(F5))
    assert cls.orbit_of(family_flag(F5, 6, k1=2)) != cls.orbit_of(family_flag(F5, 7, s=1, k1=2))


def test_f5_violation_is_labelled():
    # a1 = e with r1 = 0: (F5) line 1 reads e = 0
    fd = FlagDatum.from_values(ex_d(QQ), (0,) * 8 + (1, 0, 0, 0))
    rep = validate_flag(fd)
    assert rep.failed("(F5)")
    assert any(v.label == "(F5)" and v.line == 1 for v in rep.violations)


def test_witness_search():
    fd = family_flag(F3, 2)
    target = FlagDatum.from_values(ex_d(F3), (1, -1) + (0,) * 9 + (1,))
    w = find_flag_witness(target, fd)
    assert w is not None and flag_act(target, w) == fd
    assert find_flag_witness(target, FlagDatum.from_values(ex_d(F3), (0, 0, 1) + (0,) * 9)) is None
    with pytest.raises(InfiniteField):
        list(witnesses(QQ, 1))


def _partition(groups):
    return {frozenset(oracles.algebra_tables(flag_to_extension(fd).total) for fd in g) for g in groups}


@pytest.mark.parametrize("make, p", [(ex_d, 2), (ex_b, 2), (ex_b, 3),
                                     (lambda F: DendriformAlgebra.zero(F, 1), 2),
                                     (lambda F: DendriformAlgebra.zero(F, 1), 3)])
def test_classification_matches_oracle(make, p):
    D = make(gf(p))
    s, t = int(D.succ.c[0][0][0]), int(D.prec.c[0][0][0])
    sols = oracles.one_dim_extensions(s, t, p)
    cls = classify_flags(D)
    assert {oracles.algebra_tables(flag_to_extension(fd).total) for fd in cls.valid} == sols
    assert _partition(cls.orbits) == oracles.orbits(sols, p)
    assert _partition(cls.cohomology_classes) == oracles.orbits(sols, p, cohomologous=True)


def test_known_counts():
    c3 = classify_flags(ex_d(F3))
    assert (len(c3.valid), len(c3.orbits), len(c3.cohomology_classes)) == (72, 17, 24)
    c2 = classify_flags(ex_d(F2))
    assert (len(c2.valid), len(c2.orbits), len(c2.cohomology_classes)) == (32, 17, 17)
    assert len(enumerate_flags(ex_d(F5))) == 200
    with pytest.raises(KeyError):
        c3.orbit_of(FlagDatum.from_values(ex_d(F3), (1,) * 12))
    with pytest.raises(InfiniteField):
        enumerate_flags(ex_d(QQ))


def test_representatives_distinct_over_gf5():
    res = verify_table2(F5)
    row = next(r for r in res.rows if r.label == "representatives in distinct orbits")
    assert row.ok
    assert res.ok
