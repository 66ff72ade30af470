import io
import json

import pytest

from src.cli import run


@pytest.fixture
def kalck_path(fixtures_dir):
    return str(fixtures_dir / "kalck.alg")


def _run(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def test_info(kalck_path):
    code, out = _run(["info", kalck_path, "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "info"
    assert data["algebra"]["dim"] == 7
    assert data["cartan"] == [[1, 0, 1], [1, 1, 0], [1, 1, 1]]
    assert data["radical_dim"] == 4
    assert data["global_dimension"] == {"value": 3}


def test_ext_degree(kalck_path):
    code, out = _run(["ext", kalck_path, "S1", "P2", "--degree", "2"])
    assert code == 0
    assert "dim: 1" in out


def test_ext_all_degrees(kalck_path):
    code, out = _run(["ext", kalck_path, "S2", "S2", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["dims"] == [1, 0, 0, 1, 0, 0]
    assert data["certified"] is True


def test_ext_beyond_resolution_cap_is_undetermined(kalck_path):
    code, out = _run(["ext", kalck_path, "S2", "S2", "--degree", "3", "--resolution-cap", "1"])
    assert code == 2
    assert "undetermined" in out


def test_qh_check_exit_codes(kalck_path):
    assert _run(["qh-check", kalck_path, "--ordering", "1,3,2"])[0] == 0
    assert _run(["qh-check", kalck_path, "--ordering", "1,2,3"])[0] == 1


def test_qh_check_all_methods_agree(kalck_path):
    code, out = _run(["qh-check", kalck_path, "--ordering", "3,1,2", "--method", "all", "--format", "json"])
    assert code == 0
    assert json.loads(out)["agree"] is True


def test_qh_search(kalck_path):
    code, out = _run(["qh-search", kalck_path, "--format", "json", "--jobs", "2"])
    assert code == 0
    assert json.loads(out)["orderings"] == [["1", "3", "2"], ["3", "1", "2"]]


def test_heredity_and_coloc(kalck_path):
    assert _run(["heredity", kalck_path, "--idempotent", "e2", "--homological"])[0] == 0
    assert _run(["heredity", kalck_path, "--idempotent", "e1"])[0] == 1
    assert _run(["coloc", kalck_path, "--idempotent", "e1"])[0] == 1


def test_exceptional_strict(kalck_path):
    assert _run(["exceptional", kalck_path, "--modules", "S1,P2,P3"])[0] == 0
    assert _run(["exceptional", kalck_path, "--modules", "S1,P2,P3", "--strict"])[0] == 1


def test_module_file_next_to_algebra(kalck_path):
    code, out = _run(["filt", kalck_path, "kalck_delta2.mod", "--ordering", "1,3,2"])
    assert code == 0


def test_tilting_and_standardise(kalck_path):
    assert _run(["tilting", kalck_path, "S1 + P2 + P3"])[0] == 1
    code, out = _run(["standardise", kalck_path, "--modules", "S1,P2,P3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["standardisation"]["generator_dims"] == [1, 2, 3]


@pytest.mark.parametrize("argv", [
    ["info", "no/such/file.alg"],
    ["frobnicate"],
    ["ext", "KALCK", "S9", "S1"],
    ["qh-check", "KALCK", "--ordering", "1,1,2"],
    ["heredity", "KALCK", "--idempotent", "e7"],
    ["resolve", "KALCK", "S1", "--resolution-cap", "-1"],
])
def test_input_errors(kalck_path, argv):
    argv = [kalck_path if a == "KALCK" else a for a in argv]
    assert _run(argv)[0] == 3


def test_output_file(kalck_path, tmp_path):
    target = tmp_path / "coloc.json"
    code, _ = _run(["coloc", kalck_path, "--idempotent", "e2", "--output", str(target)])
    assert code == 0
    assert json.loads(target.read_text(encoding="utf-8"))["verdict"] == "true"


def test_qh_check_all_methods_on_both_orderings(kalck_path):
    for ordering in ("1,3,2", "3,1,2"):
        code, out = _run(["qh-check", kalck_path, "--ordering", ordering, "--method", "all", "--format", "json"])
        assert code == 0
        assert json.loads(out)["agree"] is True


def test_internal_error_is_not_a_false_verdict(kalck_path, monkeypatch):
    from src.cli import runner

    def broken(args, ctx):
        raise RuntimeError("broken command")

    monkeypatch.setitem(runner.COMMANDS, "info", broken)
    assert _run(["info", kalck_path])[0] == runner.EXIT_INTERNAL_ERROR == 4
