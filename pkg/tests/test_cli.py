import json

import pytest

from skewtab import expansion_from_json, skew_pieri, parse_shape
from skewtab.cli import build_parser, run, term_lines

EXPAND_LINES = [
    "+ s[3,2,2]",
    "- s[3,2,2,1/1]",
    "+ s[3,2,2,2/1,1]",
    "- s[3,3,2/1]",
    "+ s[3,3,2,1/1,1]",
    "- s[4,2,2/1]",
    "+ s[4,2,2,1/1,1]",
    "+ s[4,3,2/1,1]",
    "+ s[5,2,2/1,1]",
]

BIG_BASE = "7,5,4,1,1/3,1"
BIG_T = "7,6,4,4,1/3,1: [1,2,2,5][1,2,2,3,6][2,2,3,4][3,5,7,7][9]"
BIG_DT = "7,6,4,3,1/2,1: [1,1,2,2,5][2,2,2,3,6][2,3,4,7][3,5,7][9]"


class TestExpand:
    def test_text_golden(self, capsys):
        assert run(["expand", "3,2,2/1,1", "--h", "2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == EXPAND_LINES

    def test_json_round_trip(self, capsys):
        assert run(["expand", "3,2,2/1,1", "--h", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["basis"] == "skew"
        got = expansion_from_json(payload)
        assert got.same_terms(skew_pieri(parse_shape("3,2,2/1,1"), 2))

    def test_dual_flag(self, capsys):
        assert run(["expand", "2,1", "--h", "2", "--dual"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["+ s[2,1,1,1]", "+ s[2,2,1]", "+ s[3,1,1]", "+ s[3,2]"]

    def test_compact_spelling_matches(self, capsys):
        assert run(["expand", "322/11", "--h", "2"]) == 0
        assert capsys.readouterr().out.splitlines() == EXPAND_LINES


class TestProduct:
    def test_schur_rule_golden(self, capsys):
        assert run(["product", "2,1", "2,1", "--rule", "schur"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == [
            "+ s[2,2,1,1]",
            "+ s[2,2,2]",
            "+ s[3,1,1,1]",
            "+ 2*s[3,2,1]",
            "+ s[3,3]",
            "+ s[4,1,1]",
            "+ s[4,2]",
        ]

    def test_skew_lr_default_agrees_with_schur(self, capsys):
        assert run(["product", "2,1/1", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["basis"] == "skew"
        got = expansion_from_json(payload).to_schur()
        assert run(["product", "2,1/1", "2", "--rule", "schur", "--format", "json"]) == 0
        want = expansion_from_json(json.loads(capsys.readouterr().out))
        assert got == want


class TestVerify:
    def test_perp_text(self, capsys):
        assert run(["verify", "perp", "--max-deg", "2", "--max-n", "2"]) == 0
        out = capsys.readouterr().out
        assert "cases:" in out
        assert out.strip().endswith("ok: True")

    def test_involution_json(self, capsys):
        assert run(
            ["verify", "involution", "--max-outer", "3", "--max-n", "1", "--format", "json"]
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True
        assert payload["failures"] == []
        assert payload["contexts"] > 0

    def test_skew_lr_sweep(self, capsys):
        assert run(["verify", "skew-lr", "--max-outer", "3", "--max-outer-b", "2"]) == 0
        assert "ok: True" in capsys.readouterr().out

    def test_skew_pieri_sweep(self, capsys):
        assert run(["verify", "skew-pieri", "--max-outer", "3", "--max-n", "1"]) == 0
        assert "ok: True" in capsys.readouterr().out


class TestTrace:
    def test_downward_text(self, capsys):
        assert run(["trace", "slide", BIG_BASE, BIG_T, "--op", "D"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == f"D over base {BIG_BASE}"
        assert out[1] == f"start: {BIG_T}"
        assert out[2] == "reverse: entry 5 along (2,6) -> (1,7), exits at row 0"
        assert out[-1] == f"result: {BIG_DT}"
        kinds = [line.split(":")[0] for line in out[2:-1] if not line.startswith("  state")]
        assert kinds == ["reverse"] * 4 + ["external"] * 3

    def test_phi_round_trip_via_json(self, capsys):
        assert run(["trace", "slide", BIG_BASE, BIG_T, "--op", "phi", "--format", "json"]) == 0
        first = json.loads(capsys.readouterr().out)
        assert first["op"] == "phi"
        assert first["result"] == BIG_DT
        assert run(
            ["trace", "slide", BIG_BASE, first["result"], "--op", "phi", "--format", "json"]
        ) == 0
        second = json.loads(capsys.readouterr().out)
        assert second["result"] == BIG_T

    def test_upward_inverts_downward(self, capsys):
        assert run(["trace", "slide", BIG_BASE, BIG_DT, "--op", "U"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[-1] == f"result: {BIG_T}"

    def test_json_step_schema(self, capsys):
        assert run(["trace", "slide", BIG_BASE, BIG_T, "--op", "D", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == {"op", "base", "input", "steps", "result"}
        step = payload["steps"][0]
        assert set(step) == {"kind", "entry", "path", "landing_row", "tableau"}
        assert step["kind"] == "reverse"
        assert step["entry"] == 5
        # paths are stored bottom row first regardless of traversal direction
        assert step["path"] == [[1, 7], [2, 6]]
        assert step["landing_row"] == 0


class TestErrors:
    def test_bad_shape_exits_2(self, capsys):
        assert run(["expand", "bogus/shape", "--h", "1"]) == 2
        err = capsys.readouterr().err
        assert err.startswith("error:")

    def test_bad_tableau_exits_2(self, capsys):
        assert run(["trace", "slide", "2,1/1", "2,1/1: [1]"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_unknown_flag_exits_2(self, capsys):
        assert run(["expand", "2,1", "--h", "1", "--frobnicate"]) == 2

    def test_missing_subcommand_exits_2(self, capsys):
        assert run([]) == 2

    def test_failing_sweep_exits_1(self, capsys, monkeypatch):
        import skewtab.cli as cli

        monkeypatch.setattr(
            cli, "verify_perp_range", lambda *a, **k: {"cases": 1, "failures": ["boom"]}
        )
        assert run(["verify", "perp"]) == 1
        out = capsys.readouterr().out
        assert "FAIL: boom" in out

    def test_parser_prog_name(self):
        assert build_parser().prog == "skewtab"

    def test_term_lines_rejects_other_types(self):
        with pytest.raises(TypeError):
            term_lines(42)
