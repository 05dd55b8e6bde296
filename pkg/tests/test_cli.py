"""CLI: subcommand behavior, JSON output stability, exit codes."""

import json
import subprocess
import sys

import pytest

from hyperval.cli import main

FIELDS = "fields"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestSubcommands:
    def test_field_validate(self, capsys):
        code, out = run_cli(capsys, "field", "--field", f"{FIELDS}/q5sqrt5.json")
        assert code == 0
        assert json.loads(out)["ok"]

    def test_bounds_q2sqrt2(self, capsys):
        code, out = run_cli(capsys, "bounds", "--field", f"{FIELDS}/q2sqrt2.json")
        data = json.loads(out)
        assert code == 0
        assert data["m_p1"] == "3/2"
        assert data["n_min_paper"] == 7 and data["n_min_conservative"] == 13
        assert data["de_over_e2_violated"] is True

    def test_hf_class(self, capsys):
        code, out = run_cli(capsys, "hf", "class", "--field", f"{FIELDS}/q2.json",
                            "--n", "2", "--elem", "6")
        assert code == 0
        assert json.loads(out)["class"] == "pi^1 * (3)"

    def test_hf_axioms(self, capsys):
        code, out = run_cli(capsys, "hf", "axioms", "--field", f"{FIELDS}/q5.json",
                            "--n", "1", "--window", "3")
        assert code == 0
        assert json.loads(out)["ok"]

    def test_expand(self, capsys):
        code, out = run_cli(capsys, "expand", "--field", f"{FIELDS}/q5.json",
                            "--elem", "10", "--level", "1")
        assert code == 0
        assert json.loads(out)["digits"] == ["0", "2"]

    def test_gauss_expand(self, capsys):
        code, out = run_cli(capsys, "gauss", "expand", "--p", "2", "--level", "1",
                            "--elem", "(1)/(1+t)")
        assert code == 0
        data = json.loads(out)
        assert data["digits"][0] == ["(1)/(1 + t)", "(1)/(1 + t)"]

    def test_hom_search(self, capsys):
        code, out = run_cli(capsys, "hom", "search",
                            "--src", f"{FIELDS}/q5sqrt5.json",
                            "--dst", f"{FIELDS}/q5sqrt20.json",
                            "--n", "1", "--iso")
        assert code == 0
        assert json.loads(out)["count"] == 2

    def test_hom_lift_from_search_output(self, capsys, tmp_path):
        code, out = run_cli(capsys, "hom", "search",
                            "--src", f"{FIELDS}/q5sqrt5.json",
                            "--dst", f"{FIELDS}/q5sqrt20.json",
                            "--n", "1", "--iso")
        spec = json.loads(out)["homs"][0]
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(spec))
        code, out = run_cli(capsys, "hom", "lift", "--spec", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["verification"]["ok"] and data["induces_hom"]["agree"]

    def test_logic_translate_and_eval(self, capsys):
        code, out = run_cli(capsys, "logic", "translate", "--p", "2", "--e", "1",
                            "--n", "2", "--sentence", "x | y")
        assert code == 0
        assert json.loads(out)["translated"] == "nu(x) <= nu(y)"
        code, out = run_cli(capsys, "logic", "eval",
                            "--model", f"{FIELDS}/q5sqrt5.json", "--side", "vhf",
                            "--radius", "6", "--sentence", "exists x. x*x = phat")
        assert code == 0
        assert json.loads(out)["status"] == "true"

    def test_preset_list_and_run(self, capsys):
        code, out = run_cli(capsys, "preset", "list")
        assert code == 0
        names = {p["name"] for p in json.loads(out)}
        assert "quadratic-q5" in names and "wild-q2sqrt2" in names
        code, out = run_cli(capsys, "preset", "run", "axioms-q5")
        assert code == 0
        assert json.loads(out)["digest_ok"]


class TestExitCodes:
    def test_domain_error_is_2(self, capsys):
        code, _ = run_cli(capsys, "field", "--field", "no/such/file.json")
        assert code == 2

    def test_budget_error_is_3(self, capsys, tmp_path):
        big = {"p": 5, "f": 1, "e": 1, "eis": [-5, 1], "h": [0, 1], "N": 40, "n": 8}
        path = tmp_path / "big.json"
        path.write_text(json.dumps(big))
        code, _ = run_cli(capsys, "hf", "axioms", "--field", str(path), "--n", "8")
        assert code == 3

    def test_bad_sentence_is_2(self, capsys):
        code, _ = run_cli(capsys, "logic", "parse", "--lang", "vhf",
                          "--sentence", "exists x x")
        assert code == 2


class TestDeterminism:
    def test_byte_stable_outputs(self, capsys):
        runs = []
        for _ in range(2):
            _, out = run_cli(capsys, "hom", "search",
                             "--src", f"{FIELDS}/q5sqrt5.json",
                             "--dst", f"{FIELDS}/q5sqrt5.json",
                             "--n", "1", "--iso")
            runs.append(out)
        assert runs[0] == runs[1]

    def test_console_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hyperval", "bounds",
             "--field", f"{FIELDS}/q5sqrt5.json"],
            capture_output=True, text=True, cwd=".")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["m_p1"] == "1/2"
