import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat27.ring import (
    OMEGA,
    ONE,
    Eisenstein,
    RootOfMinusOne,
    embed_complex,
    omega_power,
)

small = st.fractions(min_value=-50, max_value=50, max_denominator=30)
eis = st.builds(Eisenstein, small, small)
nonzero = eis.filter(bool)


def rand_eis(rng, nonzero=False):
    while True:
        x = Eisenstein(Fraction(rng.randint(-40, 40), rng.randint(1, 12)),
                       Fraction(rng.randint(-40, 40), rng.randint(1, 12)))
        if x or not nonzero:
            return x


def test_omega_squared():
    assert OMEGA * OMEGA == Eisenstein(-1, 1)


def test_omega_cubed_and_sixth():
    assert OMEGA**3 == Eisenstein(-1)
    assert OMEGA**6 == ONE


def test_identity():
    rng = random.Random(1)
    for _ in range(50):
        x = rand_eis(rng)
        assert ONE * x == x


def test_inverse_examples():
    # (0 + w)(a + b w) = -b + (a + b) w = 1  =>  b = -1, a = 1
    assert OMEGA.inverse() == Eisenstein(1, -1)
    assert OMEGA * Eisenstein(1, -1) == ONE
    assert ONE.inverse() == ONE
    assert Eisenstein(-1).inverse() == Eisenstein(-1)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Eisenstein(0).inverse()


@pytest.mark.parametrize(
    "e, expected",
    [(0, (1, 0)), (1, (0, 1)), (2, (-1, 1)), (3, (-1, 0)), (4, (0, -1)), (5, (1, -1)), (6, (1, 0)), (-1, (1, -1))],
)
def test_omega_power(e, expected):
    assert omega_power(e) == Eisenstein(*expected)
    assert omega_power(e) == OMEGA ** (e % 6)


def test_root_of_minus_one():
    for e in (1, 3, 5):
        assert RootOfMinusOne(e).value ** 3 == Eisenstein(-1)
    for e in (0, 2, 4, 6):
        with pytest.raises(ValueError):
            RootOfMinusOne(e)


def test_embedding_examples():
    assert abs(embed_complex(OMEGA) - complex(0.5, math.sqrt(3) / 2)) < 1e-15
    assert abs(embed_complex(OMEGA) - cmath.exp(1j * math.pi / 3)) < 1e-15
    assert embed_complex(Eisenstein(-1)) == -1
    assert abs(embed_complex(OMEGA**3) + 1) < 1e-15


def test_embedding_high_precision():
    import mpmath

    z = embed_complex(OMEGA, precision=200)
    with mpmath.workprec(200):
        assert abs(z - mpmath.expjpi(mpmath.mpf(1) / 3)) < mpmath.mpf(2) ** -190


def test_str_grammar_and_parse():
    x = Eisenstein(Fraction(-2, 3), Fraction(1, 3))
    assert str(x) == "-2/3 + 1/3*w"
    assert Eisenstein.parse(str(x)) == x
    assert str(Eisenstein(1, -1)) == "1 + -1*w"
    assert Eisenstein.parse("1 + -1*w") == Eisenstein(1, -1)
    with pytest.raises(ValueError):
        Eisenstein.parse("1 - w")


def test_no_float_coefficients():
    with pytest.raises(TypeError):
        Eisenstein(0.5, 0)


def test_canonical_fractions():
    x = Eisenstein(Fraction(2, 4), Fraction(-6, 3))
    assert (x.a.numerator, x.a.denominator) == (1, 2)
    assert (x.b.numerator, x.b.denominator) == (-2, 1)


@given(eis, eis, eis)
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x
    assert x - x == 0


@given(eis, eis)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x.norm() == 0) == (not x)


@given(nonzero)
def test_inverse_property(x):
    assert x * x.inverse() == ONE


@settings(max_examples=200)
@given(eis, eis)
def test_embedding_homomorphism(x, y):
    assert abs(embed_complex(x * y) - embed_complex(x) * embed_complex(y)) < 1e-12 * max(1, abs(embed_complex(x * y)))
    assert abs(embed_complex(x + y) - embed_complex(x) - embed_complex(y)) < 1e-12
    assert abs(embed_complex(x.conjugate()) - embed_complex(x).conjugate()) < 1e-12
