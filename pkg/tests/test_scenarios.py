import pytest

from relmod.errors import UnknownScenarioError
from relmod.oracles import BSOracle, ChainAmalgamOracle, CyclicAmalgamOracle
from relmod.presentations import Y, u
from relmod.scenarios import (
    CATALOG,
    ScenarioContext,
    ScenarioReport,
    ScenarioStep,
    run_all,
    run_scenario,
    scenario_ids,
)

BS25 = BSOracle(2, 5, family="z", family_word=Y.word(4))


@pytest.fixture(scope="module")
def ctx() -> ScenarioContext:
    return ScenarioContext()


def test_catalog_ids() -> None:
    assert scenario_ids() == list(CATALOG)
    assert scenario_ids()[0] == "gen-xz"
    assert {"thm1.1-beta", "thm4.3-chi", "thm4.4-chi", "oracle-crosscheck", "hom-negative"} <= set(CATALOG)
    assert len(set(scenario_ids())) == len(CATALOG)


@pytest.mark.parametrize("scenario_id", scenario_ids())
def test_scenario_passes(scenario_id: str, ctx: ScenarioContext) -> None:
    report = run_scenario(scenario_id, ctx)
    failed = [step for step in report.steps if not step.passed]
    assert report.passed, failed
    assert report.id == scenario_id
    assert report.steps
    assert report.ms >= 0


def test_unknown_scenario() -> None:
    with pytest.raises(UnknownScenarioError, match="no-such-scenario"):
        run_scenario("no-such-scenario")
    with pytest.raises(UnknownScenarioError):
        run_all(["gen-xz", "no-such-scenario"])
    with pytest.raises(KeyError):
        run_scenario("no-such-scenario")


def test_run_all_keeps_requested_order(ctx: ScenarioContext) -> None:
    ids = ["thm4.3-chi", "gen-xz", "lemma2.2-cyclic"]
    reports = run_all(ids, ctx, jobs=3)
    assert [r.id for r in reports] == ids
    assert all(r.passed for r in reports)


def test_run_all_parallel_matches_serial(ctx: ScenarioContext) -> None:
    ids = ["lemma2.1-commutator", "lemma2.2-images", "cor1.2-tietze", "hom-negative"]
    serial = run_all(ids, ctx)
    parallel = run_all(ids, ctx, jobs=4)
    assert [r.steps for r in serial] == [r.steps for r in parallel]


def test_wrong_bs_oracle_fails_generation() -> None:
    report = run_scenario("gen-xz", ScenarioContext(bs=BS25))
    assert report.status == "fail"
    assert not report.steps[0].passed
    assert report.steps[0].expected == "True"
    assert report.steps[0].actual == "False"


def test_wrong_bs_oracle_fails_beta() -> None:
    report = run_scenario("thm1.1-beta", ScenarioContext(bs=BS25))
    assert not report.passed
    assert report.steps[-1].desc == "runs without error"
    assert report.steps[-1].actual.startswith("NotARelatorError")


def test_beta_needs_bs_oracle() -> None:
    report = run_scenario("thm1.1-beta", ScenarioContext(bs=CyclicAmalgamOracle(u(0), u(1), 3, 2)))
    assert not report.passed
    assert report.steps[-1].actual.startswith("RelmodError")


def test_swapped_amalgam_fails_crosscheck() -> None:
    swapped = CyclicAmalgamOracle(u(0), u(1), 2, 3)
    report = run_scenario("oracle-crosscheck", ScenarioContext(vertex_pair=swapped, sample_size=100))
    assert not report.passed
    assert report.steps[0].actual != "0"


def test_crosscheck_sample_size() -> None:
    small = ScenarioContext(chain=ChainAmalgamOracle("u", 3, 2, 0, 1), sample_size=50)
    assert run_scenario("oracle-crosscheck", small).passed


def test_step_and_report_models() -> None:
    step = ScenarioStep(desc="chi", expected="1", actual="1")
    assert step.passed
    assert not ScenarioStep(desc="chi", expected="1", actual="0").passed
    report = ScenarioReport(id="thm4.3-chi", status="pass", steps=[step], ms=1.5)
    assert report.to_dict() == {
        "id": "thm4.3-chi",
        "status": "pass",
        "steps": [{"desc": "chi", "expected": "1", "actual": "1"}],
        "ms": 1.5,
    }


def test_report_dict_is_json_ready(ctx: ScenarioContext) -> None:
    data = run_scenario("thm4.3-chi", ctx).to_dict()
    assert data["status"] == "pass"
    assert [s["expected"] for s in data["steps"]] == ["1", "1", "True"]
