import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycalc import riemann_roch as rr
from cycalc.errors import InconsistentDiagramError


def test_c2_restriction_values():
    assert rr.c2_restriction(-2) == -3
    assert rr.c2_restriction(-1) == 0


def test_c2_restriction_is_affine_with_slope_three():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", rr.ExtrapolationWarning)
        values = [rr.c2_restriction(b) for b in range(-5, 4)]
    assert all(b - a == 3 for a, b in zip(values, values[1:]))


def test_c2_restriction_warns_outside_supported_twists():
    with pytest.warns(rr.ExtrapolationWarning):
        assert rr.c2_restriction(0) == 3


@pytest.mark.parametrize("k, chi", [(16, 1), (1, Fraction(1, 16)), (0, 0)])
def test_chi_of_resolution_without_branch(k, chi):
    assert rr.chi_of_resolution(0, k) == chi


def test_chi_of_resolution_rejects_negative_k():
    with pytest.raises(ValueError):
        rr.chi_of_resolution(0, -1)


def test_solve_isolated_count():
    assert rr.solve_isolated_count(1) == 16
    assert rr.solve_isolated_count(Fraction(1, 2)) == 8
    with pytest.raises(InconsistentDiagramError):
        rr.solve_isolated_count(Fraction(1, 3))
    with pytest.raises(InconsistentDiagramError):
        rr.solve_isolated_count(-1)


def test_solve_isolated_count_zero_is_flagged():
    with pytest.warns(rr.FixedPointFreeWarning):
        assert rr.solve_isolated_count(0) == 0


def test_minus_K_dot_c2():
    assert rr.minus_K_dot_c2(0) == 24
    assert rr.minus_K_dot_c2(1) == Fraction(45, 2)
    assert rr.minus_K_dot_c2(8) == 12
    with pytest.raises(ValueError):
        rr.minus_K_dot_c2(-1)


@given(st.integers(0, 200))
def test_chi_is_one_for_every_N(N):
    assert rr.chi_of_resolution(rr.minus_K_dot_c2(N), N) == 1


@given(st.fractions(min_value=0, max_value=10).map(lambda q: Fraction(round(q * 16), 16)))
def test_count_round_trips(chi):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", rr.FixedPointFreeWarning)
        assert rr.solve_isolated_count(chi) * rr.PER_POINT_CHI == chi


class TestDerivation:
    def test_concludes_sixteen(self):
        trace, k = rr.sixteen_point_derivation()
        assert k == 16
        assert trace[-1] == "k = 16"

    def test_trace_records_each_ingredient(self):
        text = "\n".join(rr.sixteen_point_derivation()[0])
        assert "K_X = 0" in text
        assert "2K_Yt + S_Yt = sum F_i" in text
        assert "= -3" in text
        assert "chi(O_Yt) = k/16" in text
        assert "k=1: 1/16, k=2: 1/8, k=3: 3/16" in text

    def test_other_samples_agree(self):
        assert rr.sixteen_point_derivation((2, 5, 7))[1] == 16
