import itertools

import pytest

from cycalc import fermat
from cycalc.cyclotomic import Zeta24, projectively_equal
from cycalc.errors import CertificationError, NotZeroDimensionalError, SemiInvarianceError

EQS = "2:1,1,1,1,1,1;4:1,1,1,1,1,1"


@pytest.fixture(scope="module")
def counted():
    return fermat.count_fixed_points(fermat.conic_quartic_system())


def evaluate(system, point):
    return [sum((Zeta24.rational(c) * x**e.degree for c, x in zip(e.coeffs, point)), Zeta24()) for e in system.equations]


class TestConicQuartic:
    def test_sixteen_points(self, counted):
        assert counted.count == 16
        assert [s.count for s in counted.strata] == [8, 8]
        assert [s.support for s in counted.strata] == [(0, 1, 2), (3, 4, 5)]

    def test_both_paths_agree_and_are_certified(self, counted):
        for s in counted.strata:
            assert s.groebner_count == s.enumeration_count == 8
            assert s.enumeration_mode == "cyclotomic"
            assert s.transversal and s.bezout_consistent
        assert len(counted.to_json()["certificates"]) == 16
        assert all(c.mode == "cyclotomic" and c.minor_value != "0" for s in counted.strata for c in s.certificates)

    def test_points_satisfy_equations_exactly(self, counted):
        for p in counted.points:
            assert all(v.is_zero() for v in evaluate(counted.system, p))

    def test_points_fixed_distinct_and_involutive(self, counted):
        signs = counted.system.signs.signs
        pts = counted.points
        assert fermat.points_distinct(pts)
        for p in pts:
            once = [x if s == 1 else -x for s, x in zip(signs, p)]
            twice = [x if s == 1 else -x for s, x in zip(signs, once)]
            assert projectively_equal(once, list(p))
            assert twice == list(p)

    def test_listed_point_pattern(self, counted):
        listed = {tuple(str(x) for x in p) for p in fermat.list_fixed_points(counted.system, counted)}
        assert ("0", "0", "0", "1", "zeta24^4", "zeta24^8") in listed
        assert len(listed) == 16

    def test_permuting_within_blocks(self):
        base = [(1, 2, 3, 1, 1, 5), (1, 1, 1, 2, 1, 1)]
        counts = set()
        for neg, pos in [((0, 1, 2), (3, 4, 5)), ((2, 0, 1), (5, 3, 4))]:
            order = neg + pos
            eqs = ";".join(f"{d}:" + ",".join(str(c[i]) for i in order) for d, c in zip((2, 4), base))
            counts.add(fermat.count_fixed_points(fermat.FermatSystem.parse(5, eqs, "-,-,-,+,+,+")).count)
        assert counts == {16}

    def test_other_sign_patterns(self):
        assert fermat.count_fixed_points(fermat.FermatSystem.parse(5, EQS, "+,+,+,-,-,-")).count == 16
        assert fermat.count_fixed_points(fermat.FermatSystem.parse(5, EQS, "-,+,-,+,-,+")).count == 16


class TestEdgeCases:
    def test_identity_is_flagged(self):
        result = fermat.count_fixed_points(fermat.FermatSystem.parse(5, EQS, "-,-,-,-,-,-"))
        assert result.identity and result.count is None
        assert "identity" in result.notes[0]

    def test_quadric_only_is_positive_dimensional(self):
        with pytest.raises(NotZeroDimensionalError) as info:
            fermat.count_fixed_points(fermat.FermatSystem.parse(5, "2:1,1,1,1,1,1", "-,-,-,+,+,+"))
        assert info.value.stratum == (0, 1, 2)

    def test_empty_system_on_points(self):
        result = fermat.count_fixed_points(fermat.FermatSystem.parse(1, "", "-,+"))
        assert result.count == 2
        assert [[str(x) for x in p] for p in result.points] == [["1", "0"], ["0", "1"]]

    def test_point_stratum_killed_by_equation(self):
        assert fermat.count_fixed_points(fermat.FermatSystem.parse(1, "2:1,1", "-,+")).count == 0

    def test_conic_on_a_line(self):
        result = fermat.count_fixed_points(fermat.FermatSystem.parse(3, "2:1,1,1,1", "-,-,+,+"))
        assert result.count == 4
        assert all(s.bezout_consistent for s in result.strata)

    def test_numeric_path_for_general_coefficients(self):
        sys_ = fermat.FermatSystem.parse(5, "2:1,2,3,1,1,1;4:1,1,1,2,1,5", "-,-,-,+,+,+")
        result = fermat.count_fixed_points(sys_)
        assert result.count == 16
        assert {s.enumeration_mode for s in result.strata} == {"numeric"}
        pts = fermat.list_fixed_points(sys_, result)
        assert fermat.points_distinct(pts)
        for p in pts:
            for e in sys_.equations:
                assert abs(sum(complex(c) * x**e.degree for c, x in zip(e.coeffs, p))) < 1e-9

    def test_semi_invariance_checked(self):
        with pytest.raises(SemiInvarianceError):
            fermat.FermatSystem.parse(2, "3:1,1,1", "-,+,+")

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            fermat.FermatSystem.parse(5, "2:1,1,1", "-,-,-,+,+,+")
        with pytest.raises(ValueError):
            fermat.FermatSystem.parse(5, "2", "-,-,-,+,+,+")
        with pytest.raises(ValueError):
            fermat.FermatSystem.parse(5, EQS, "-,-,+")

    def test_disagreement_is_fatal(self, monkeypatch):
        monkeypatch.setattr(fermat, "_cyclotomic_points", lambda *a: ([], []))
        with pytest.raises(CertificationError, match="disagrees"):
            fermat.count_fixed_points(fermat.conic_quartic_system())


def test_canonical_order(counted):
    keys = [tuple(-1 if x.is_zero() else x.root_exponent() for x in p) for p in counted.strata[0].points]
    assert keys == sorted(keys)
    assert all(itertools.starmap(lambda a, b: a != b, zip(keys, keys[1:])))
