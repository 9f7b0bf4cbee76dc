import json
from pathlib import Path

import pytest

from relmod import scenarios
from relmod.cli import main
from relmod.oracles import BSOracle
from relmod.presentations import Y, load_presentation


def test_verify_single_scenario(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", "gen-xz"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("PASS gen-xz (2 steps")
    assert lines[-1] == "1/1 scenarios passed"


def test_verify_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", "--json", "thm4.3-chi"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [r["id"] for r in reports] == ["thm4.3-chi"]
    assert reports[0]["status"] == "pass"
    assert set(reports[0]) == {"id", "status", "steps", "ms"}


def test_verify_all(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", "--all", "--json", "--jobs", "4"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [r["id"] for r in reports] == scenarios.scenario_ids()


def test_verify_failure_exit_code(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> None:
    wrong = BSOracle(2, 5, family="z", family_word=Y.word(4))
    default_context = scenarios.ScenarioContext
    monkeypatch.setattr(scenarios, "ScenarioContext", lambda: default_context(bs=wrong))
    assert main(["verify", "gen-xz"]) == 1
    out = capsys.readouterr().out
    assert "FAIL gen-xz" in out
    assert "expected True, got False" in out
    assert out.splitlines()[-1] == "0/1 scenarios passed"


def test_verify_rejects_unknown_id() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "no-such-scenario"])
    assert excinfo.value.code == 2


def test_nf(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["nf", "--group", "bs:2,3", "x y^-1 x^-1"]) == 0
    assert capsys.readouterr().out == "x y x^-1 y^-3\n"


def test_nf_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["nf", "--group", "amalgam:2,3:x,y", "--json", "x^2 y^-3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["nf"] == "1"
    assert data["word"] == "x^2 y^-3"


def test_fox_matches_golden(capsys: pytest.CaptureFixture[str], test_data: Path) -> None:
    assert main(["fox", "--group", "bs:2,3", "--word", "x y^2 x^-1 y^-3"]) == 0
    assert capsys.readouterr().out == (test_data / "bs23_fox.txt").read_text()


def test_fox_single_generator(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["fox", "--group", "bs:2,3", "--word", "x y^2 x^-1 y^-3", "--wrt", "x"]) == 0
    assert capsys.readouterr().out == "d/dx: 1*1 + -1*y^3\n"
    assert main(["fox", "--group", "free:x,y", "--word", "x^2", "--wrt", "x", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"x": [[1, "1"], [1, "x"]]}


def test_ball_stats(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["ball", "--group", "free:x,y", "--radius", "2", "--stats"]) == 0
    assert capsys.readouterr().out.splitlines() == ["vertices: 17", "edges: 16", "growth: 1 4 12"]


def test_ball_custom_gens(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["ball", "--group", "bs:2,3", "--gens", "x; y^4", "--radius", "1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "vertices: 5"


def test_ball_dot(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["ball", "--group", "free:x,y", "--radius", "1", "--dot"]) == 0
    assert "v0" in capsys.readouterr().out


def test_ball_budget_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["ball", "--group", "free:x,y", "--radius", "3", "--budget", "5"]) == 2
    assert "relmod: error: ball of radius 3 exceeds the vertex budget of 5" in capsys.readouterr().err


def test_chi(capsys: pytest.CaptureFixture[str], test_data: Path) -> None:
    assert main(["chi", str(test_data / "bs23.pres")]) == 0
    assert capsys.readouterr().out == "0\n"


def test_chi_missing_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    assert main(["chi", str(tmp_path / "missing.pres")]) == 2
    assert "relmod: error" in capsys.readouterr().err


def test_double_to_file(capsys: pytest.CaptureFixture[str], test_data: Path, tmp_path: Path) -> None:
    out = tmp_path / "doubled.pres"
    code = main(["double", str(test_data / "bs23.pres"), "--ids", "x; y^4", "--out", str(out)])
    assert code == 0
    assert capsys.readouterr().out == "chi: 1\n"
    assert load_presentation(out) == load_presentation(test_data / "doubled_bs23.pres")


def test_double_to_stdout(capsys: pytest.CaptureFixture[str], test_data: Path) -> None:
    assert main(["double", str(test_data / "bs23.pres"), "--ids", "x; y^4"]) == 0
    out = capsys.readouterr().out
    assert out == (test_data / "doubled_bs23.pres").read_text() + "chi: 1\n"


def test_trefoil_ki(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["trefoil-ki", "--i", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "gens: x y x' y'"
    assert "rel: x^5 x'^-5" in lines
    assert "rel: y^7 y'^-7" in lines
    assert lines[-2:] == ["chi: 1", "generating set verified: True"]


@pytest.mark.parametrize(
    "argv",
    [
        ["nf", "--group", "bogus:1", "x"],
        ["nf", "--group", "bs:2,3", "x^"],
        ["nf", "--group", "bs:2,3", "t"],
        ["trefoil-ki", "--i", "-1"],
    ],
)
def test_errors_exit_with_two(argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(argv) == 2
    assert "relmod: error: " in capsys.readouterr().err
