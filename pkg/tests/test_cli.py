import io
import json
import sys

import pytest

from ctring.cli import composition, main


def run_cli(capsys, argv, stdin=None):
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            status = main(argv)
        finally:
            sys.stdin = old
    else:
        status = main(argv)
    out = capsys.readouterr().out
    return status, out


def test_composition_parser():
    assert composition("3,2") == (3, 2)
    assert composition("2^30") == (2,) * 30
    assert composition("4,2^3,1") == (4, 2, 2, 2, 1)
    import argparse

    with pytest.raises(argparse.ArgumentTypeError):
        composition("3,x")
    with pytest.raises(argparse.ArgumentTypeError):
        composition("-1,2")


def test_usage_error_names_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hilbert", "--alpha", "3,x", "--beta", "2,2,1"])
    assert exc.value.code == 2
    err = capsys.readouterr().err
    assert "--alpha" in err and "malformed composition" in err


def test_hilbert_json(capsys):
    status, out = run_cli(capsys, ["hilbert", "--alpha", "3,2", "--beta", "2,2,1"])
    assert status == 0
    assert json.loads(out) == {
        "alpha": [3, 2],
        "beta": [2, 2, 1],
        "coeffs": ["1", "2", "2"],
    }


def test_hilbert_all_methods_agree(capsys):
    status, out = run_cli(
        capsys,
        ["hilbert", "--alpha", "3,2", "--beta", "2,2,1", "--method", "all"],
    )
    assert status == 0
    assert json.loads(out)["coeffs"] == ["1", "2", "2"]


def test_hilbert_csv(capsys):
    status, out = run_cli(
        capsys, ["hilbert", "--alpha", "3,2", "--beta", "2,2,1", "--csv"]
    )
    assert status == 0
    assert out.splitlines() == ["degree,coefficient", "0,1", "1,2", "2,2"]


def test_rsk_stdin(capsys):
    matrix = "1 2 0 1\n0 0 2 1\n3 0 1 1\n"
    status, out = run_cli(capsys, ["rsk", "--matrix", "-"], stdin=matrix)
    assert status == 0
    payload = json.loads(out)
    assert payload["P"] == [[1, 1, 1, 1, 2, 2, 3], [2, 3, 3, 3], [3]]
    assert payload["Q"] == [[1, 1, 1, 1, 3, 3, 4], [2, 2, 3, 4], [4]]
    assert payload["shape"] == [7, 4, 1]
    assert payload["zigzag"] == 7


def test_rsk_from_file(tmp_path, capsys):
    path = tmp_path / "matrix.txt"
    path.write_text("1 2 0 1\n0 0 2 1\n3 0 1 1\n")
    status, out = run_cli(capsys, ["rsk", "--matrix", str(path)])
    assert status == 0
    assert json.loads(out)["zigzag"] == 7


def test_rsk_from_json_matrix(capsys):
    blob = '{"rows": 1, "cols": 2, "entries": [[1, 2]]}'
    status, out = run_cli(capsys, ["rsk", "--matrix", "-"], stdin=blob)
    assert status == 0
    assert json.loads(out)["P"] == [[1, 1, 1]]


def test_zigzag_inline(capsys):
    status, out = run_cli(
        capsys, ["zigzag", "--matrix", "1 2 0 1;0 0 2 1;3 0 1 1"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["zigzag"] == 7
    assert payload["witness"] == [[1, 1], [1, 2], [2, 3], [2, 4], [3, 4]]


def test_standard_basis(capsys):
    status, out = run_cli(
        capsys, ["standard-basis", "--alpha", "3,2", "--beta", "2,2,1"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["dimension"] == "5"
    assert payload["hilbert"] == ["1", "2", "2"]
    assert {tuple(map(tuple, m["entries"])) for m in payload["standard_monomials"]} == {
        ((0, 0, 0), (0, 0, 0)),
        ((0, 0, 0), (0, 0, 1)),
        ((0, 0, 0), (0, 1, 0)),
        ((0, 0, 0), (0, 1, 1)),
        ((0, 0, 0), (0, 2, 0)),
    }


def test_figure1(capsys):
    status, out = run_cli(capsys, ["figure1", "--family", "2", "--upto", "3"])
    assert status == 0
    assert json.loads(out)["coeffs"] == ["1", "841", "354061", "99222341"]


def test_verify_exit_code(capsys):
    status, out = run_cli(capsys, ["verify", "--alpha", "3,2", "--beta", "2,2,1"])
    assert status == 0
    payload = json.loads(out)
    assert payload["standard_equals_matrix_ball"] is True


def test_lefschetz(capsys):
    status, out = run_cli(capsys, ["lefschetz", "--alpha", "3,2", "--beta", "2,2,1"])
    assert status == 0
    payload = json.loads(out)
    assert payload["min_zigzag"] == 3
    assert payload["violations"] == []


def test_frobenius(capsys):
    status, out = run_cli(capsys, ["frobenius", "--mu", "3,2", "--nu", "2,2,1"])
    assert status == 0
    payload = json.loads(out)
    dims = [entry["dimension"] for entry in payload["decomposition"]]
    assert dims == ["1", "2", "2"]


def test_ehrhart(capsys):
    status, out = run_cli(
        capsys, ["ehrhart", "--alpha", "3,2", "--beta", "2,2,1", "--upto", "1"]
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["series"][0]["coeffs"] == ["1"]
    assert payload["series"][1]["coeffs"] == ["1", "2", "2"]


def test_conjectures_small(capsys):
    status, out = run_cli(
        capsys,
        [
            "conjectures",
            "--max-n",
            "4",
            "--lefschetz-n",
            "3",
            "--dominance-n",
            "3",
        ],
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["total_violations"] == 0


def test_sweep(capsys):
    status, out = run_cli(capsys, ["sweep", "--max-n", "4", "--max-len", "2"])
    assert status == 0
    payload = json.loads(out)
    assert payload["failures"] == []
    assert payload["conjecture_violations"] == []
    assert payload["pairs"] == sum((n + 2) ** 2 for n in range(5))


def test_sweep_vacuous(capsys):
    status, out = run_cli(capsys, ["sweep", "--max-n", "0", "--max-len", "2"])
    assert status == 0
    assert json.loads(out)["failures"] == []


def test_determinism(capsys):
    _, first = run_cli(capsys, ["hilbert", "--alpha", "2,2", "--beta", "2,1,1"])
    _, second = run_cli(capsys, ["hilbert", "--alpha", "2,2", "--beta", "2,1,1"])
    assert first == second


def test_cache_roundtrip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CTRING_CACHE_DIR", str(tmp_path))
    status, _ = run_cli(capsys, ["hilbert", "--alpha", "2,2", "--beta", "2,2"])
    assert status == 0
    cache_file = tmp_path / "kostka-cache-v1.json"
    assert cache_file.exists()
    data = json.loads(cache_file.read_text())
    assert data["version"] == 1 and data["kostka"]
    # a second run loads the cache and still answers correctly
    status, out = run_cli(capsys, ["hilbert", "--alpha", "2,2", "--beta", "2,2"])
    assert status == 0
    assert json.loads(out)["coeffs"] == ["1", "1", "1"]
