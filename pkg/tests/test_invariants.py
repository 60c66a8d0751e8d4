from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from cycalc import invariants as inv
from cycalc.tables import load_dataset, load_quotients

# h^{1,2} of the Picard-rank-one smooth Fano threefolds, keyed by (s, H'^3).
# Independent of the shipped e(Y) fixture: e(Y) = 4 - 2 h^{1,2}.
FANO_H12 = {
    (2, 2): 52, (2, 4): 30, (2, 6): 20, (2, 8): 14, (2, 10): 10, (2, 12): 7,
    (2, 14): 5, (2, 16): 3, (2, 18): 2, (2, 22): 0,
    (4, 1): 21, (4, 2): 10, (4, 3): 5, (4, 4): 2, (4, 5): 0,
    (6, 2): 0, (8, 1): 0,
}


def ci_surface_euler(ambient_dim, degrees):
    """e of a smooth complete intersection surface in P^n, from c(T) = (1+h)^{n+1} / prod(1 + d h)."""
    h = sp.Symbol("h")
    c = sp.series((1 + h) ** (ambient_dim + 1) / sp.Mul(*[1 + d * h for d in degrees]), h, 0, 3).removeO()
    return int(c.coeff(h, 2)) * sp.Mul(*degrees)


def test_h3_of_cover():
    assert inv.h3_of_cover(Fraction(1, 2)) == 1
    assert inv.h3_of_cover(4) == 8
    with pytest.raises(ValueError):
        inv.h3_of_cover(0)


@pytest.mark.parametrize(
    "s, N, h3, hc2",
    [(10, 1, 1, 34), (2, 0, 4, 52), (8, 0, 2, 44), (6, 0, 4, 52), (4, 8, 2, 20), (2, 0, 44, 92)],
)
def test_hc2_of_cover(s, N, h3, hc2):
    assert inv.hc2_of_cover(s, N, h3) == hc2


def test_hc2_rejects_zero_s():
    with pytest.raises(ValueError):
        inv.hc2_of_cover(0, 0, 1)


@given(st.sampled_from([2, 4, 6, 8, 10]), st.integers(0, 8), st.integers(1, 44), st.integers(1, 44))
def test_hc2_slope_depends_only_on_s_and_N(s, N, a, b):
    da = inv.hc2_of_cover(s, N, a) - Fraction(s * s, 4) * a
    db = inv.hc2_of_cover(s, N, b) - Fraction(s * s, 4) * b
    assert da == db


@given(st.integers(0, 8), st.integers(1, 44))
def test_index_two_rows_follow_h3_plus_48_minus_3N(N, h3):
    assert inv.hc2_of_cover(2, N, h3) == h3 + 48 - 3 * N


class TestSurfaceEuler:
    def test_octic_in_p3(self):
        Y = inv.QuotientData(1, 8, 0).model()
        assert inv.surface_euler(Y, 8 * Y.cls("H'")) == ci_surface_euler(3, [8]) == 304

    def test_sextic_section_of_quadric(self):
        Y = inv.QuotientData(2, 6, 0).model()
        assert inv.surface_euler(Y, 6 * Y.cls("H'")) == ci_surface_euler(4, [2, 6]) == 264

    def test_quartic_section_of_cubic(self):
        Y = inv.QuotientData(3, 4, 0).model()
        assert inv.surface_euler(Y, 4 * Y.cls("H'")) == ci_surface_euler(4, [3, 4])

    def test_weighted_quotient_branch(self):
        Y = inv.QuotientData(Fraction(1, 2), 10, 1).model()
        assert inv.surface_euler(Y, 10 * Y.cls("H'")) == 295


def test_euler_of_cover():
    assert inv.euler_of_cover(4, 295, 1) == -288
    assert inv.euler_of_cover(4, 304, 0) == -296
    assert inv.euler_of_cover(4, 264, 0) == -256


@pytest.mark.parametrize(
    "r_half, s", [(Fraction(1, 2), 2), (1, 2), (2, 4), (3, 6), (4, 8), (Fraction(5, 2), 10)]
)
def test_s_from_fano_index(r_half, s):
    assert inv.s_from_fano_index(r_half) == s


def test_s_from_fano_index_errors():
    with pytest.raises(ValueError):
        inv.s_from_fano_index(7)
    with pytest.raises(ValueError):
        inv.s_from_fano_index(Fraction(1, 2), cartier_multiple=1)


class TestComputeInvariants:
    def test_weighted_example(self):
        out = inv.compute_invariants(10, 1, Fraction(1, 2), euler_Y=4)
        assert out == {"h3": 1, "hc2": 34, "euler_S": 295, "e": -288}

    def test_without_euler(self):
        assert set(inv.compute_invariants(2, 0, 2)) == {"h3", "hc2"}

    def test_explicit_surface_euler_wins(self):
        assert inv.compute_invariants(8, 0, 1, euler_Y=4, euler_S=300)["e"] == -292

    def test_smooth_quotient_needs_integral_degree(self):
        with pytest.raises(ValueError):
            inv.compute_invariants(2, 0, Fraction(1, 2))

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            inv.compute_invariants(2, 0, 2.0)


def test_fixture_matches_classical_hodge_numbers():
    q = load_quotients()
    for (s, d), h12 in FANO_H12.items():
        assert q[("smooth_fano", 0, s, 2 * d)].euler_Y == 4 - 2 * h12


def test_smooth_fano_rows_reproduced_from_classical_data():
    rows = [r for r in load_dataset() if r.family.value == "smooth_fano"]
    assert len(rows) == 17
    for r in rows:
        d = Fraction(r.h3, 2)
        out = inv.compute_invariants(r.s, 0, d, euler_Y=4 - 2 * FANO_H12[(r.s, int(d))])
        assert out["h3"] == r.h3 and out["hc2"] == r.hc2
        assert [e.value for e in r.e_values] == [out["e"]]


def test_all_table_outputs_integral():
    for r in load_dataset():
        out = inv.compute_invariants(r.s, r.N, Fraction(r.h3, 2))
        assert out["h3"].denominator == 1 and out["hc2"].denominator == 1
