import math
import os
from pathlib import Path

import pytest

coindoe = pytest.importorskip("coindoe")

SCENARIOS = Path(os.environ.get(
    "COINDOE_SCENARIO_DIR", Path(__file__).resolve().parents[2] / "scenarios"))


@pytest.fixture(scope="module")
def s1():
    return coindoe.load_scenario(str(SCENARIOS / "s1.scn"))


@pytest.fixture(scope="module")
def ctx(s1):
    return s1.context()


def test_scenario_fields(s1):
    assert s1.depth == 1
    assert s1.seed == 0
    assert s1.points == 4
    assert s1.h_cap is None


def test_ball_sizes(ctx):
    assert [len(ctx.reps(1, n)) for n in range(4)] == [1, 5, 17, 53]
    assert ctx.reps(2, 0) == ["e"]


def test_single_letter_cocycle(ctx):
    f = ctx.config(1, 0, [1])
    assert ctx.beta("g:1", f) == "g:3"
    assert ctx.alpha("g:3", ctx.config(2, 0, [1])) == "g:1"
    assert ctx.beta("h:1", f) == "h:1"


def test_omega_theta_roundtrip(ctx):
    for seed in range(20):
        f = ctx.sample(1, 2, seed)
        g = ctx.omega(f)
        assert g.values[0] == f.values[0]
        assert ctx.theta(g) == f


def test_config_text_roundtrip(ctx):
    f = ctx.sample(1, 1, 5)
    assert ctx.parse_config(1, f.serialize()) == f


def test_all_suites_pass(ctx):
    reports = coindoe.run_all(ctx, depth=1, configs=20)
    assert set(reports) == set(coindoe.SUITES)
    for name, report in reports.items():
        assert report["suite"] == name
        assert report["status"] == "pass", report
    push = reports["pushforward"]
    assert push["instance"]["mode"] == "exact"
    assert push["statistics"]["cells_hit"] == 1024


def test_reports_are_deterministic(ctx):
    a = coindoe.run_suite(ctx, "inverse", depth=2, configs=10, seed=3)
    b = coindoe.run_suite(ctx, "inverse", depth=2, configs=10, seed=3)
    assert a == b


def test_errors_map_to_exceptions(ctx):
    with pytest.raises(coindoe.NotAGroup):
        coindoe.load_scenario(str(SCENARIOS / "bad_group.scn"))
    with pytest.raises(coindoe.BudgetExceeded):
        ctx.check_pushforward(2, "exact")
    with pytest.raises(coindoe.TruncationExceeded):
        ctx.diagram(ctx.sample(1, 1, 0), 2)
    with pytest.raises(coindoe.ParseError):
        coindoe.parse_scenario("[G1]\ncyclic x\n")
    assert issubclass(coindoe.ParseError, coindoe.CoindoeError)


def test_diagram_is_dot(ctx):
    dot = ctx.diagram(ctx.sample(1, 1, 0), 1)
    assert dot.startswith("digraph")
    assert dot.count("subgraph cluster_") == 5
    try:
        import pydot
    except ImportError:
        return
    (graph,) = pydot.graph_from_dot_data(dot)
    assert len(graph.get_subgraphs()) == 5


def test_entropy():
    assert math.isclose(coindoe.entropy(["1/4"] * 4), math.log(4), abs_tol=1e-9)
    assert coindoe.entropy(["1/1"]) == 0.0


def test_integer_free_factor():
    s = coindoe.load_scenario(str(SCENARIOS / "integers_h.scn"))
    assert s.h_cap == 2
    ctx = s.context()
    assert ctx.h_cap == 2
    assert coindoe.run_suite(ctx, "inverse", depth=1, configs=50)["status"] == "pass"
