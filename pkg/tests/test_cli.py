import json

import pytest

from vknot.cli import CliConfig, run
from vknot.invariants import parse_poly

TREFOIL = "O1+ O2+ U1+ U2+"


def test_writhe(capsys):
    assert run(["writhe", TREFOIL]) == 0
    assert capsys.readouterr().out == "t - 2 + t^-1\n"


def test_writhe_json_round_trips(capsys):
    assert run(["--format", "json", "writhe", TREFOIL]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert parse_poly(payload["polynomial"]) == parse_poly("t + t^-1 - 2")
    assert payload["coeffs"] == {"1": 1, "0": -2, "-1": 1}


def test_validate_errors(capsys):
    assert run(["validate", "O1+ O1+"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "chord 1" in captured.err
    assert run(["validate", "O2+ U2+"]) == 0
    assert "canonical code 'O1+ U1+'" in capsys.readouterr().out


def test_index_table(capsys):
    assert run(["--format", "json", "index", "O1+ O2- O3- U1+ U3- U2-"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["writhe"] == -1
    assert {row["chord"]: row["index"] for row in payload["chords"]} == {1: 2, 2: 1, 3: 1}
    assert run(["index", TREFOIL]) == 0
    assert "w(D) = 2" in capsys.readouterr().out


def test_graph_formats(capsys):
    assert run(["graph", TREFOIL, "--format", "dot"]) == 0
    assert "v1 -> v2;" in capsys.readouterr().out
    assert run(["graph", TREFOIL]) == 0
    assert json.loads(capsys.readouterr().out) == {"vertices": {"1": 1, "2": 1}, "edges": [[1, 2]]}


def test_equiv(capsys):
    assert run(["equiv", TREFOIL, TREFOIL]) == 0
    assert capsys.readouterr().out.strip().endswith("YES")
    assert run(["equiv", TREFOIL, "O1+ O2- O3- U1+ U3- U2-"]) == 1
    assert capsys.readouterr().out.strip().endswith("NO")


def test_equiv_with_search(capsys):
    assert run(["--format", "json", "equiv", TREFOIL, "O1+ U1+ O2+ O3+ U2+ U3+", "--depth", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["equivalent"]
    assert [s["kind"] for s in payload["trace"]["steps"]] == ["R1_add"]
    assert run(["equiv", TREFOIL, TREFOIL, "--depth", "9"]) == 2


def test_realizable(capsys):
    assert run(["realizable", "t - 1"]) == 1
    assert capsys.readouterr().out == "NO (f(1) = 0, f'(1) = 1)\n"
    assert run(["realizable", "t^2 - 2t + 1"]) == 0
    assert capsys.readouterr().out.startswith("YES")


def test_realize_then_writhe(capsys):
    text = "t^3 - 3t + 2"
    assert run(["realize", text]) == 0
    code = capsys.readouterr().out.strip()
    assert run(["writhe", code]) == 0
    assert capsys.readouterr().out.strip() == text
    assert run(["realize", "t - 1"]) == 2


def test_switch(capsys):
    assert run(["switch", TREFOIL, "1"]) == 0
    assert capsys.readouterr().out == "U1- O2+ O1- U2+\n"
    assert run(["switch", TREFOIL, "5"]) == 2


def test_move_list_apply_replay(capsys):
    assert run(["--format", "json", "move", "list", "O1+ U1+", "--kind", "R1_remove"]) == 0
    assert len(json.loads(capsys.readouterr().out)["sites"]) == 1

    assert run(["--format", "json", "move", "apply", TREFOIL, "--kind", "R1_add", "--site", "0"]) == 0
    applied = json.loads(capsys.readouterr().out)
    assert applied["code"] == "O3+ U3+ O1+ O2+ U1+ U2+"

    trace = json.dumps(applied["trace"])
    assert run(["--format", "json", "move", "replay", trace]) == 0
    replayed = json.loads(capsys.readouterr().out)
    assert replayed["code"] == applied["code"]
    assert replayed["steps"] == 1


def test_move_apply_random_is_seeded(capsys):
    assert run(["move", "apply", TREFOIL, "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert run(["move", "apply", TREFOIL, "--seed", "3"]) == 0
    assert capsys.readouterr().out == first
    assert "seed: 3" in first


def test_fuzz(capsys):
    assert run(["fuzz", "--n", "4", "--moves", "10", "--seed", "3", "--count", "2"]) == 0
    out = capsys.readouterr().out
    assert "seed 3: PASS" in out and "seed 4: PASS" in out
    assert "2/2 runs passed" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "w.txt"
    assert run(["--out", str(target), "writhe", TREFOIL]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text() == "t - 2 + t^-1\n"


def test_file_input(tmp_path, capsys):
    source = tmp_path / "code.txt"
    source.write_text(TREFOIL + "\n")
    assert run(["writhe", "--file", str(source)]) == 0
    assert capsys.readouterr().out == "t - 2 + t^-1\n"


def test_equiv_and_switch_read_files(tmp_path, capsys):
    first = tmp_path / "a.txt"
    first.write_text(TREFOIL + "\n")
    second = tmp_path / "b.txt"
    second.write_text("O1+ U1+ O2+ O3+ U2+ U3+\n")
    assert run(["equiv", "--file1", str(first), "--file2", str(second)]) == 0
    assert capsys.readouterr().out.endswith("YES\n")
    assert run(["equiv", "--file1", str(first), TREFOIL]) == 0
    assert capsys.readouterr().out.endswith("YES\n")
    assert run(["equiv", TREFOIL]) == 2
    assert run(["equiv", "--file1", str(first), TREFOIL, TREFOIL]) == 2
    capsys.readouterr()
    assert run(["switch", "--file", str(first), "1"]) == 0
    assert capsys.readouterr().out == "U1- O2+ O1- U2+\n"


def test_equiv_help_states_scope(capsys):
    assert run(["equiv", "-h"]) == 0
    assert "virtual knot diagrams" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["bogus"]) == 2
    assert run(["writhe"]) == 2
    assert run(["--depth-cap", "0", "writhe", TREFOIL]) == 2
    assert run(["--help"]) == 0


def test_cli_config():
    assert CliConfig().depth_cap == 6
    with pytest.raises(ValueError):
        CliConfig(max_vertices=0)
    with pytest.raises(ValueError):
        CliConfig(output_format="yaml")
