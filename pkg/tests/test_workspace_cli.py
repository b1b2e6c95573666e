"""Workspace JSON parsing and the command line surface.

The golden command outputs here are frozen strings: changing any of them
is an interface break, not a refactor.
"""

import json
import pathlib
import subprocess
import sys

import pytest

from freeabcat import Matrix, ZZ, Zmod
from freeabcat.cli import main
from freeabcat.errors import WorkspaceError
from freeabcat.workspace import (
    load_workspace,
    parse_workspace,
    resolve_ref,
    workspace_to_text,
)

REPO = pathlib.Path(__file__).resolve().parent.parent
EXAMPLE = REPO / "scripts" / "example_workspace.json"


def test_example_workspace_roundtrip_is_identity():
    ws = load_workspace(str(EXAMPLE))
    text = workspace_to_text(ws)
    again = parse_workspace(json.loads(text))
    assert workspace_to_text(again) == text
    assert ws.ring == ZZ
    assert resolve_ref(ws, "chain:X_ex").ranks == (1, 2, 1)
    assert resolve_ref(ws, "module:presented").invariant_factors == (6,)


def test_workspace_rejects_unknown_section(tmp_path):
    bad = tmp_path / "ws.json"
    bad.write_text('{"ring": "Z", "gadgets": {}}')
    with pytest.raises(WorkspaceError, match="gadgets"):
        load_workspace(str(bad))


def test_workspace_rejects_bad_names():
    with pytest.raises(WorkspaceError, match="name"):
        parse_workspace({"ring": "Z", "modules": {"a b": {"invariant_factors": []}}})


def test_workspace_requires_matching_object_ring():
    data = {"ring": "Z",
            "modules": {"m": {"ring": {"Zmod": 4}, "invariant_factors": [2]}}}
    with pytest.raises(WorkspaceError, match="ring"):
        parse_workspace(data)


def test_matrix_dict_form_for_zero_row_shapes():
    data = {"ring": {"Zmod": 4},
            "matrices": {"flat": {"shape": [0, 2], "entries": []}}}
    ws = parse_workspace(data)
    assert ws.matrices["flat"] == Matrix.zeros(Zmod(4), 0, 2)


def _run(argv: list[str], capsys) -> tuple[int, str, str]:
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


W = ["-w", str(EXAMPLE)]


def test_cli_member_golden(capsys):
    code, out, _ = _run(["member", "chain:X_ex", "module:Z4"] + W, capsys)
    assert code == 0
    assert out == "false\n"
    code, out, _ = _run(["member", "chain:X_ex", "module:Z2", "--json"] + W, capsys)
    assert code == 0
    assert json.loads(out) == {"member": True}


def test_cli_convert_golden(capsys):
    code, out, _ = _run(
        ["convert", "chain:X_ex", "--to", "pair", "--convention", "paper"] + W,
        capsys)
    assert code == 0
    assert out == ("convention = paper-row\n"
                   "U (1x2) = [[-1, 2]]\n"
                   "V (2x1) = [[0], [-1]]\n")


def test_cli_eval_golden(capsys):
    code, out, _ = _run(["eval", "chain:X_ex", "module:Z4", "--json"] + W, capsys)
    assert code == 0
    assert json.loads(out) == {"invariant_factors": [2]}
    code, out, _ = _run(["eval", "square:SQ_ex", "module:Z4", "--json"] + W, capsys)
    assert code == 0
    assert json.loads(out) == {"invariant_factors": [2]}


def test_cli_snf_golden(capsys):
    code, out, _ = _run(["snf", "matrix:demo", "--json"] + W, capsys)
    assert code == 0
    got = json.loads(out)
    assert got["S"] == [[2, 0], [0, 4]]
    # P demo Q = S with unimodular P, Q
    assert got["P"] == [[1, 0], [3, -1]]
    assert got["Q"] == [[1, -2], [0, 1]]


def test_cli_dual_pair_golden(capsys):
    code, out, _ = _run(["dual", "pair:P_ex"] + W, capsys)
    assert code == 0
    assert out == ("convention = paper-row\n"
                   "U (1x2) = [[0, -1]]\n"
                   "V (2x1) = [[-1], [2]]\n")


def test_cli_iszero_and_homgroup(capsys):
    code, out, _ = _run(["iszero", "chain:embed1", "--json"] + W, capsys)
    assert code == 0 and json.loads(out) == {"is_zero": False}
    code, out, _ = _run(["homgroup", "chain:embed1", "chain:embed1", "--json"] + W,
                        capsys)
    assert code == 0 and json.loads(out) == {"invariant_factors": [0]}


def test_cli_kernel_cokernel_image(capsys):
    code, out, _ = _run(["kernel", "morphism:doubling", "--json"] + W, capsys)
    assert code == 0
    got = json.loads(out)
    assert set(got) == {"object", "morphism"}
    assert got["object"]["ranks"] == [0, 1, 1]
    code, out, _ = _run(["cokernel", "morphism:doubling", "--json"] + W, capsys)
    assert code == 0
    assert json.loads(out)["object"]["ranks"] == [1, 1, 0]
    code, out, _ = _run(["image", "morphism:collapse", "--json"] + W, capsys)
    assert code == 0
    got = json.loads(out)
    assert set(got) == {"object", "mono", "epi"}


def test_cli_member_family_and_pair(capsys):
    code, out, _ = _run(["member", "family:two_torsion", "module:V4"] + W, capsys)
    assert code == 0 and out == "true\n"
    code, out, _ = _run(["member", "family:everything", "module:free1"] + W, capsys)
    assert code == 0 and out == "true\n"
    code, out, _ = _run(["member", "pair:P_col", "module:Z6"] + W, capsys)
    assert code == 0 and out == "false\n"


def test_cli_exit_codes(tmp_path, capsys):
    code, _, err = _run(["eval", "chain:nope", "module:Z4"] + W, capsys)
    assert code == 1 and "nope" in err

    code, _, err = _run(["eval", "module:Z4", "module:Z4"] + W, capsys)
    assert code == 1  # wrong kind of reference

    code, _, err = _run(["eval", "chain:X_ex", "module:Z4",
                         "-w", str(tmp_path / "absent.json")], capsys)
    assert code == 1 and "absent.json" in err

    broken = tmp_path / "broken.json"
    broken.write_text('{"ring": "Z",,}')
    code, _, err = _run(["eval", "chain:X_ex", "module:Z4", "-w", str(broken)],
                        capsys)
    assert code == 1
    assert "broken.json:1:" in err  # parse location survives to stderr

    code, _, err = _run(["dual", "pair:P_col"] + W, capsys)
    assert code == 2 and "convention" in err.lower()


def test_cli_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "freeabcat.cli",
         "eval", "chain:X_ex", "module:Z4", "--json", "-w", str(EXAMPLE)],
        capture_output=True, text=True, cwd=str(REPO))
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"invariant_factors": [2]}


def test_cli_selftest_passes(capsys):
    code, out, _ = _run(["selftest", "--json"] + W, capsys)
    assert code == 0
    got = json.loads(out)
    assert got["ok"] is True
    assert len(got["results"]) == 8


def test_cli_selftest_with_battery_override(capsys):
    code, out, _ = _run(["selftest", "--battery", "Z2", "module:free1"] + W, capsys)
    assert code == 0
    assert out.count("PASS") == 8
