import dataclasses
from fractions import Fraction

import pytest

from cycalc import tables
from cycalc.errors import ChecksumError, DatasetError
from cycalc.invariants import hc2_of_cover


@pytest.fixture(scope="module")
def rows():
    return tables.load_dataset()


def failures(rows):
    return [c.name for c in tables.validate_all(rows).failures]


class TestLoad:
    def test_row_counts(self, rows):
        counts = {f: sum(r.family is f for r in rows) for f in tables.Family}
        assert len(rows) == 50
        assert counts == {
            tables.Family.SMOOTH_FANO: 17,
            tables.Family.FANO_ENRIQUES: 3,
            tables.Family.INDEX_HALF: 29,
            tables.Family.P1112: 1,
        }

    def test_first_row(self, rows):
        r = rows[0]
        assert (r.family, r.N, r.s, r.h3, r.hc2) == (tables.Family.SMOOTH_FANO, 0, 2, 4, 52)
        assert r.e_values == (tables.EValue(-256),)

    def test_blank_e_cell(self, rows):
        (r,) = [r for r in rows if r.family is tables.Family.INDEX_HALF and r.N == 2 and r.h3 == 10]
        assert r.e_values == ()

    def test_weighted_entry(self, rows):
        (r,) = [r for r in rows if r.family is tables.Family.P1112]
        assert (r.N, r.s, r.h3, r.hc2, r.e_cell) == (1, 10, 1, 34, "-288")

    def test_multi_valued_starred_cells(self, rows):
        multi = [r for r in rows if len(r.e_values) > 1]
        assert multi and all(e.starred for r in multi for e in r.e_values)

    def test_byte_identical_round_trip(self, rows):
        assert tables.dump_tsv(rows).encode() == tables._shipped_bytes()

    def test_checksum(self, monkeypatch):
        original = tables._shipped_bytes()
        monkeypatch.setattr(tables, "_shipped_bytes", lambda: original.replace(b"\t52\t", b"\t53\t", 1))
        with pytest.raises(ChecksumError):
            tables.load_dataset()

    def test_env_override(self, tmp_path, monkeypatch, rows):
        path = tmp_path / "t.tsv"
        path.write_text(tables.dump_tsv(rows[:3]))
        monkeypatch.setenv(tables.ENV_VAR, str(path))
        assert len(tables.load_dataset()) == 3

    @pytest.mark.parametrize(
        "text",
        ["nope\n", "\t".join(tables.HEADER) + "\nsmooth_fano\t0\n", "\t".join(tables.HEADER) + "\nbogus\t0\t2\t4\t52\t\t\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(DatasetError):
            tables.parse_tsv(text)


class TestValidate:
    def test_shipped_dataset_passes(self, rows):
        report = tables.validate_all(rows)
        assert report.passed, report.failures
        assert [c.name for c in report.anomalies] == ["euler-candidate:32"]

    def test_every_identity_holds_exactly(self, rows):
        for r in rows:
            assert hc2_of_cover(r.s, r.N, r.h3) == r.hc2

    def test_perturbed_hc2(self, rows):
        bad = list(rows)
        bad[5] = dataclasses.replace(bad[5], hc2=bad[5].hc2 + 1)
        assert failures(bad) == ["identity:5"]

    def test_sharpness(self, rows):
        trimmed = [r for r in rows if r.h3 != 44]
        assert "sharp:h3=44" in failures(trimmed)

    def test_odd_euler_anomaly_is_not_a_failure(self, rows):
        r = rows[32]
        assert (r.N, r.h3, r.hc2, r.e_cell) == (2, 30, 72, "-95*")

    def test_slope_constant_per_s_and_N(self, rows):
        seen = {}
        for r in rows:
            v = r.hc2 - Fraction(r.s * r.s, 4) * r.h3
            assert seen.setdefault((r.s, r.N), v) == v

    def test_index_half_congruence(self, rows):
        assert all((r.h3 - r.N) % 4 == 0 for r in rows if r.family is tables.Family.INDEX_HALF)


def mutations(row):
    yield "N", [row.N - 1, row.N + 1]
    yield "s", [v for v in range(1, 12) if v != row.s]
    yield "h3", [row.h3 - 1, row.h3 + 1]
    yield "hc2", [row.hc2 - 1, row.hc2 + 1]
    yield "family", [f for f in tables.Family if f is not row.family]


def test_every_single_field_mutation_is_detected(rows):
    missed = []
    for i, row in enumerate(rows):
        for field, values in mutations(row):
            for v in values:
                bad = list(rows)
                bad[i] = dataclasses.replace(row, **{field: v})
                if tables.validate_all(bad).passed:
                    missed.append((i, field, v))
        plain = [j for j, e in enumerate(row.e_values) if not e.starred]
        for j in plain:
            for delta in (-2, -1, 1, 2):
                es = list(row.e_values)
                es[j] = tables.EValue(es[j].value + delta)
                bad = list(rows)
                bad[i] = dataclasses.replace(row, e_values=tuple(es))
                if tables.validate_all(bad).passed:
                    missed.append((i, "e", delta))
    assert missed == []


class TestQuery:
    def test_n_eight(self, rows):
        hits = tables.query(rows, N=8)
        assert len(hits) == 3 and {r.family for r in hits} == {tables.Family.FANO_ENRIQUES}

    def test_s_ten(self, rows):
        assert [r.family for r in tables.query(rows, s=10)] == [tables.Family.P1112]

    def test_beyond_bound(self, rows):
        assert tables.query(rows, h3=(45, None)) == []

    def test_stable_order(self, rows):
        hits = tables.query(rows, hc2=(40, 60))
        assert hits == sorted(hits, key=lambda r: r.sort_key)
        assert tables.query(rows, family="index_half", h3=(1, 5)) == tables.query(rows, family=tables.Family.INDEX_HALF, h3=(None, 5))

    @pytest.mark.parametrize("rng", [(5, 1), (1,), ("a", 2), (1.5, 3)])
    def test_malformed_range(self, rows, rng):
        with pytest.raises(ValueError):
            tables.query(rows, h3=rng)
