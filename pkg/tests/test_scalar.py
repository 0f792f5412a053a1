from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cseq.exact import GaussianRational, as_scalar, format_scalar, make, parse_scalar

from conftest import scalars_st


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", Fraction(3)),
        ("-7/4", Fraction(-7, 4)),
        ("6/8", Fraction(3, 4)),
        ("1/2+3/4i", make(Fraction(1, 2), Fraction(3, 4))),
        ("1/2 + 3/4 i", make(Fraction(1, 2), Fraction(3, 4))),
        ("2-i", make(2, -1)),
        ("2i", make(0, 2)),
        ("-i", make(0, -1)),
        ("5+0i", Fraction(5)),
    ],
)
def test_parse(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["1/0", "3+1/0i", "", "abc", "1.5", "1//2", "i i"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_real_results_collapse_to_fraction():
    z = make(1, 2)
    w = z - make(0, 2)
    assert isinstance(w, Fraction) and w == 1
    norm = z * z.conjugate()
    assert isinstance(norm, Fraction) and norm == 5
    assert isinstance(z, GaussianRational)


def test_canonical_form():
    x = parse_scalar("-6/8")
    assert x.numerator == -3 and x.denominator == 4


def test_as_scalar_rejects_float_and_bool():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)


@given(scalars_st)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(scalars_st, scalars_st)
def test_additive_inverse(a, b):
    assert (a + b) - b == a


@given(scalars_st, scalars_st)
def test_multiplicative_inverse(a, b):
    if b != 0:
        assert (a * b) / b == a


@given(scalars_st, scalars_st, scalars_st)
def test_distributive_and_associative(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)


@given(scalars_st, scalars_st)
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(scalars_st)
def test_matches_complex_arithmetic(a):
    from cseq.exact.scalar import to_complex

    b = make(Fraction(3, 7), Fraction(-2, 5))
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9 * (1 + abs(to_complex(a)))


@given(st.integers(-10, 10), st.integers(1, 10))
def test_mixed_int_interop(p, q):
    z = make(Fraction(p, q), 1)
    assert z + 1 - 1 == z
    assert 2 * z == z + z
