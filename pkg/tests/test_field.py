from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dendrikit.errors import DenominatorZero, DivisionByZero, FieldMismatch, InfiniteField, ParseError
from dendrikit.field import QQ, enumerate_field, field_from_spec, gf, parse_scalar, scalar_arith

PRIMES = [2, 3, 5, 7, 11]
fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


@pytest.mark.parametrize("spec, expected", [("q", QQ), ("QQ", QQ), ("gf:3", gf(3)), ("GF(5)", gf(5)), (7, gf(7))])
def test_field_from_spec(spec, expected):
    assert field_from_spec(spec) == expected


@pytest.mark.parametrize("spec", ["gf:4", "gf:1", "reals", ""])
def test_bad_field_spec(spec):
    with pytest.raises((ParseError, ValueError)):
        field_from_spec(spec)


def test_parse_and_format():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.format(QQ.parse("4/2")) == "2"
    assert gf(5).parse("1/2") == 3
    assert gf(5).parse("-1") == 4
    with pytest.raises(DenominatorZero):
        QQ.parse("1/0")
    with pytest.raises(DenominatorZero):
        gf(3).parse("1/3")
    with pytest.raises(ParseError):
        QQ.parse("abc")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        gf(7).inv(0)
    with pytest.raises(DivisionByZero):
        parse_scalar("1", "gf:3") / parse_scalar("3", "gf:3")


def test_scalar_field_mismatch():
    with pytest.raises(FieldMismatch):
        parse_scalar("1", "q") + parse_scalar("1", "gf:3")
    with pytest.raises(FieldMismatch):
        gf(3).coerce(1.5)


def test_elements():
    assert [s.value for s in enumerate_field("gf:5")] == [0, 1, 2, 3, 4]
    with pytest.raises(InfiniteField):
        QQ.elements()


def test_scalar_arith():
    a, b = parse_scalar("2/3", "q"), parse_scalar("1/6", "q")
    assert str(scalar_arith(a, b, "+")) == "5/6"
    assert str(scalar_arith(a, b, "/")) == "4"
    assert str(gf(7)(3) * 5) == "1"
    with pytest.raises(ValueError):
        scalar_arith(a, b, "^")


@pytest.mark.parametrize("p", PRIMES)
def test_sqrt_mod_p(p):
    F = gf(p)
    squares = {a * a % p for a in range(p)}
    for a in F.elements():
        r = F.sqrt(a)
        assert (r is not None) == (a in squares)
        if r is not None:
            assert F.mul(r, r) == a


def test_sqrt_rational():
    assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert QQ.sqrt(Fraction(2)) is None
    assert QQ.sqrt(Fraction(-1)) is None


@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    F = QQ
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a != 0:
        assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = gf(p)
    a, b, c = F.coerce(a), F.coerce(b), F.coerce(c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from(PRIMES), fractions)
def test_reduction_is_a_homomorphism(p, q):
    F = gf(p)
    if q.denominator % p == 0:
        return
    # reduction of q + 1 and 2q agree with field arithmetic on the reduction
    assert F.from_fraction(q + 1) == F.add(F.from_fraction(q), 1)
    assert F.from_fraction(2 * q) == F.mul(2, F.from_fraction(q))
