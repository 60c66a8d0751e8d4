import importlib
import inspect
import json
import subprocess
import sys
from collections import Counter

import pytest

from cycalc import cli

DECIC_ARGS = [
    "fixlocus", "wps", "--weights", "1,1,1,2,5", "--degree", "10",
    "--poly", "x^10+y^10+z^10+w^5-t^2", "--signs", "+,+,+,+,-",
]
FERMAT_ARGS = ["fermat", "count", "--ambient", "5", "--eqs", "2:1,1,1,1,1,1;4:1,1,1,1,1,1", "--signs", "-,-,-,+,+,+"]

# one invocation per subcommand that exercises every operation it owns
FULL_INVOCATIONS = {
    "theorem sixteen": ["theorem", "sixteen", "--format", "json"],
    "invariants compute": ["invariants", "compute", "--n", "1", "--d", "1/2", "--fano-index", "5/2", "--euler-y", "4"],
    "fixlocus wps": DECIC_ARGS + ["--quotient"],
    "fermat count": FERMAT_ARGS + ["--list"],
    "tables validate": ["tables", "validate"],
    "tables query": ["tables", "query", "--n", "8"],
}


def run(argv):
    result = cli.dispatch(argv)
    return result.exit_code, result


def payload(argv):
    code, result = run(argv)
    return code, json.loads(result.render_json())


class TestExamples:
    def test_theorem_text_ends_with_k_16(self):
        code, result = run(["theorem", "sixteen"])
        assert code == 0
        assert result.human_text.splitlines()[-1] == "k = 16"

    def test_theorem_json(self):
        code, doc = payload(["theorem", "sixteen", "--format", "json"])
        assert code == 0 and doc["k"] == 16 and doc["schema"] == "cycalc/1"

    def test_tables_validate(self):
        code, doc = payload(["tables", "validate"])
        assert code == 0 and doc["report"]["passed"]

    def test_validate_failure_exit_code(self, tmp_path):
        from cycalc import tables

        rows = tables.load_dataset()
        text = tables.dump_tsv(rows).replace("\t52\t-256\t", "\t53\t-256\t", 1)
        path = tmp_path / "bad.tsv"
        path.write_text(text)
        code, doc = payload(["tables", "validate", "--dataset", str(path)])
        assert code == 1
        assert [f["name"] for f in doc["report"]["failures"]] == ["identity:0"]

    def test_invariants(self):
        code, doc = payload(["invariants", "compute", "--s", "10", "--n", "1", "--d", "1/2"])
        assert code == 0
        assert (doc["h3"], doc["hc2"]) == ("1", "34")
        assert "e" not in doc

    def test_invariants_with_euler(self):
        _, doc = payload(["invariants", "compute", "--s", "8", "--n", "0", "--d", "1", "--euler-y", "4"])
        assert doc["e"] == "-296" and doc["euler_S"] == "304"

    def test_rationals_render_as_strings(self):
        _, doc = payload(["invariants", "compute", "--s", "10", "--n", "1", "--d", "1/2"])
        assert doc["input"]["d"] == "1/2" and doc["minus_K_dot_c2"] == "45/2"

    def test_query_tsv(self):
        code, result = run(["tables", "query", "--n", "8", "--format", "tsv"])
        assert code == 0
        lines = result.human_text.strip().splitlines()
        assert lines[0].split("\t")[0] == "family" and len(lines) == 4

    def test_fixlocus(self):
        code, doc = payload(DECIC_ARGS + ["--quotient", "--reported-point", "0,0,0,0,1"])
        assert code == 0
        assert doc["hypersurface"]["surfaces"] == 1
        assert doc["hypersurface"]["isolated_points"] == [["0", "0", "0", "1", "1"]]
        assert doc["quotient_projection"]["passed"]
        assert doc["quotient_projection"]["reported_point_on_hypersurface"] is False

    def test_fermat(self):
        code, doc = payload(FERMAT_ARGS)
        assert code == 0 and doc["count"] == 16
        assert [s["count"] for s in doc["strata"]] == [8, 8]


class TestErrors:
    def test_unknown_subcommand(self, capsys):
        assert cli.main(["frobnicate"]) == 2
        assert "usage:" in capsys.readouterr().err

    def test_missing_action(self):
        assert run(["tables"])[0] == 2

    def test_module_error_is_json(self, capsys):
        assert cli.main(["fermat", "count", "--ambient", "5", "--eqs", "2:1,1,1,1,1,1", "--signs", "-,-,-,+,+,+"]) == 1
        doc = json.loads(capsys.readouterr().out)
        assert doc["error"]["type"] == "NotZeroDimensionalError"
        assert doc["schema"] == "cycalc/1"

    def test_bad_polynomial(self):
        argv = [a if a != "x^10+y^10+z^10+w^5-t^2" else "x^10 + w^5 + x^5*t" for a in DECIC_ARGS]
        code, doc = payload(argv)
        assert code == 1 and doc["error"]["type"] == "SemiInvarianceError"

    def test_fano_index_conflict(self):
        code, doc = payload(["invariants", "compute", "--s", "4", "--n", "1", "--d", "1/2", "--fano-index", "5/2"])
        assert code == 1 and "contradicts" in doc["error"]["message"]


def test_byte_identical_output():
    for argv in FULL_INVOCATIONS.values():
        first = cli.dispatch(argv).render_json()
        assert cli.dispatch(argv).render_json() == first


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "cycalc", "theorem", "sixteen"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip().endswith("k = 16")


def test_routing_covers_every_operation_once():
    assert set(Counter(cli.ROUTING.values())) == set(FULL_INVOCATIONS)
    for name in cli.ROUTING:
        mod, fn = name.split(".")
        assert inspect.isfunction(getattr(importlib.import_module(f"cycalc.{mod}"), fn))


@pytest.mark.parametrize("op", sorted(cli.ROUTING))
def test_operation_reached_from_its_owning_subcommand(op, monkeypatch):
    mod_name, fn_name = op.split(".")
    original = getattr(importlib.import_module(f"cycalc.{mod_name}"), fn_name)
    calls = []

    def spy(*args, **kwargs):
        calls.append(1)
        return original(*args, **kwargs)

    for mod in list(sys.modules.values()):
        if getattr(mod, "__name__", "").startswith("cycalc") and getattr(mod, fn_name, None) is original:
            monkeypatch.setattr(mod, fn_name, spy)
    owner = cli.ROUTING[op]
    cli.dispatch(FULL_INVOCATIONS[owner])
    assert calls, f"{op} not reached from {owner}"
