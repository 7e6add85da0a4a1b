import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from dendrikit.dendriform import (ASSOCIATIVE, KINDS, LIE, PRELIE, DendriformAlgebra, check_dendriform,
                                  check_induced, check_morphism, direct_sum, ex_b, ex_d, ex_e, fixture, induce,
                                  transport)
from dendrikit.errors import DimMismatch, FieldMismatch, InvalidInput
from dendrikit.field import QQ, gf
from dendrikit.linalg import BilinearMap, LinMap

F2, F3 = gf(2), gf(3)


def broken():
    return DendriformAlgebra.from_tables(QQ, 1, {(0, 0): (1,)}, {(0, 0): (1,)})


@pytest.mark.parametrize("make", [ex_d, ex_b, ex_e])
@pytest.mark.parametrize("F", [QQ, F2, F3, gf(5)])
def test_fixtures_valid(make, F):
    alg = make(F)
    assert check_dendriform(alg).ok
    for kind in KINDS:
        assert check_induced(induce(alg, kind)).ok


def test_broken_reports_first_axiom():
    rep = check_dendriform(broken())
    assert not rep.ok
    assert rep.violations[0].describe() == "axiom (1) fails at (0,0,0): lhs [2] != rhs [1]"
    with pytest.raises(InvalidInput):
        induce(broken(), ASSOCIATIVE)


def test_induced_products_on_exe():
    E = ex_e(QQ)
    e1, e2 = (1, 0), (0, 1)
    assoc = induce(E, ASSOCIATIVE)
    assert assoc.mul(e1, e2) == (2, 0)
    prelie = induce(E, PRELIE)
    # x ≻ y − y ≺ x
    assert prelie.mul(e1, e2) == (0, 1)
    assert prelie.mul(e2, e1) == (0, 1)
    lie = induce(E, LIE)
    assert lie.mul(e1, e2) == (0, 0)


def test_fixture_lookup():
    assert fixture("exD", "gf:3") == ex_d(F3)
    with pytest.raises(KeyError):
        fixture("exZ")


def test_construction_errors():
    z = BilinearMap.zero(QQ, 1, 1, 1)
    with pytest.raises(DimMismatch):
        DendriformAlgebra(QQ, 2, z, z)
    with pytest.raises(FieldMismatch):
        DendriformAlgebra(F3, 1, z, z)
    with pytest.raises(DimMismatch):
        check_morphism(LinMap.identity(QQ, 2), ex_d(QQ), ex_d(QQ))


def test_morphisms():
    D = ex_d(QQ)
    assert check_morphism(LinMap.identity(QQ, 1), D, D).info["isomorphism"]
    assert check_morphism(LinMap.zero(QQ, 1, 1), D, D).ok
    assert not check_morphism(LinMap.from_rows(QQ, [[2]]), D, D).ok
    # exB is not isomorphic to exD: no nonzero scalar works
    assert not check_morphism(LinMap.from_rows(QQ, [[1]]), D, ex_b(QQ)).ok


def test_direct_sum():
    S = direct_sum(ex_d(QQ), ex_b(QQ))
    assert check_dendriform(S).ok
    assert S.s((1, 0), (1, 0)) == (1, 0)
    assert S.p((0, 1), (0, 1)) == (0, 1)
    assert S.s((1, 0), (0, 1)) == (0, 0)
    with pytest.raises(FieldMismatch):
        direct_sum(ex_d(QQ), ex_d(F3))


tensor = st.lists(st.integers(0, 1), min_size=16, max_size=16)


def _from_flat(F, c):
    def fn(flat):
        return BilinearMap.from_function(F, 2, 2, 2, lambda i, j: flat[4 * i + 2 * j: 4 * i + 2 * j + 2])
    return DendriformAlgebra(F, 2, fn(c[:8]), fn(c[8:]))


@given(tensor)
def test_axioms_agree_with_oracle(c):
    alg = _from_flat(F2, c)
    S, P = oracles.algebra_tables(alg)
    assert check_dendriform(alg).ok == oracles.is_dendriform(S, P, 2)


@given(st.sampled_from([ex_e, lambda F: direct_sum(ex_d(F), ex_b(F))]),
       st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_transport_is_isomorphism(make, entries):
    alg = make(F3)
    P = LinMap.from_rows(F3, [entries[:2], entries[2:]], 2)
    if not P.is_invertible():
        return
    new = transport(alg, P)
    assert check_dendriform(new).ok
    rep = check_morphism(P, new, alg)
    assert rep.ok and rep.info["isomorphism"]


@given(st.sampled_from([ex_d, ex_b, ex_e]), st.sampled_from(KINDS))
def test_induced_structures_hold(make, kind):
    assert check_induced(induce(make(gf(5)), kind)).ok
