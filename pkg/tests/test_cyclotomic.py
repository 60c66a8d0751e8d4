import cmath
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cycalc.cyclotomic import Zeta24, determinant, projectively_equal

exps = st.integers(0, 47)
small = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=8, max_size=8)


def test_root_of_unity_relations():
    z = Zeta24.root(1)
    assert z**24 == 1
    assert z**12 == -1
    assert (Zeta24.root(8) ** 2 + Zeta24.root(8) + 1).is_zero()  # primitive cube root
    assert Zeta24.root(4) + Zeta24.root(20) == 1  # 2 cos(pi/3)


@given(exps, exps)
def test_root_multiplication(a, b):
    assert Zeta24.root(a) * Zeta24.root(b) == Zeta24.root(a + b)


@given(small, small)
def test_matches_complex_arithmetic(a, b):
    x, y = Zeta24(a), Zeta24(b)
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9
    assert abs(complex(x + y) - complex(x) - complex(y)) < 1e-9


def test_rendering():
    assert str(Zeta24()) == "0"
    assert str(Zeta24.root(0)) == "1"
    assert str(Zeta24.root(12)) == "-1"
    assert str(Zeta24.root(5)) == "zeta24^5"
    assert str(Zeta24([Fraction(1, 2), 1])) == "1/2 + (1)*zeta24^1"
    assert abs(complex(Zeta24.root(3)) - cmath.exp(2j * cmath.pi / 8)) < 1e-12


def test_determinant():
    one, z = Zeta24.root(0), Zeta24.root(6)  # z = i
    assert determinant([[one, z], [z, one]]) == 2
    assert determinant([]) == 1


def test_projective_equality():
    p = [Zeta24.root(0), Zeta24.root(4), Zeta24()]
    q = [Zeta24.root(7), Zeta24.root(11), Zeta24()]
    assert projectively_equal(p, q)
    assert not projectively_equal(p, [Zeta24.root(0), Zeta24.root(8), Zeta24()])
