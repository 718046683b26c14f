import json

import pytest

from cohom7 import catalog as cat
from cohom7 import classifier as cl
from cohom7 import obstructions as ob
from cohom7.lie_core import algebra


@pytest.fixture(scope="module")
def report():
    return cl.run_classification()


def _case(report, g, k):
    key = (algebra(g).text(), algebra(k).text())
    return next(c for c in report.cases if (c.g.text(), c.k.text()) == key)


def test_case_groups():
    groups = cl.enumerate_cases()
    assert groups[1] == [] and groups[3] == []
    assert len(groups[0]) == 8 and len(groups[2]) == 4


def test_unsupported_dimension():
    with pytest.raises(cl.UnsupportedDimension):
        cl.enumerate_cases(6)


def test_completeness_against_abstract_pairs():
    keys = {c.key for cs in cl.enumerate_cases().values() for c in cs}
    for g, k in cat.abstract_pairs():
        classes = [e for e in cat.embeddings_of_dim(g, k.dim) if e.sub == k]
        if not classes:
            assert cat.catalog_covers(g, k) == "excluded"
        elif all(cat.contains_ideal(g, e) is not None for e in classes):
            assert (g.text(), k.text()) not in keys
        else:
            assert (g.text(), k.text()) in keys
    assert keys <= set(cl.HANDLERS)


def test_ideal_filter_drops_center_circle():
    dropped = {e.id for e in cl.excluded_by_ideal()}
    assert "t1+a1+a1|t1-center" in dropped
    assert "t1+b2|t2+a1" in dropped


@pytest.mark.parametrize(
    "g,k,kind",
    [
        ("a2", "t2", "DiffeoSphere"),
        ("b2", "t1+a1", "Impossible"),
        ("g2", "a2", "DiffeoSphere"),
        ("3a1", "t3", "Impossible"),
        ("a1+a2", "t2+a1", "Impossible"),
        ("a1+b2", "t1+2a1", "DiffeoSphere"),
        ("a3", "t1+a2", "Impossible"),
        ("b3", "a3", "DiffeoSphere"),
        ("t1+a2", "a1", "DiffeoSphere"),
        ("3a1", "a1", "DiffeoSphere"),
        ("t1+2a1", "t1", "DiffeoSphere"),
        ("2a1", "trivial", "Survivor"),
    ],
)
def test_case_verdicts(report, g, k, kind):
    assert _case(report, g, k).verdict.kind == kind


def test_su3_torus_branches(report):
    c = _case(report, "a2", "t2")
    kinds = {b.label: b.verdict.kind for b in c.branches}
    assert kinds == {"H ≠ H'": "DiffeoSphere", "H = H'": "Impossible"}


def test_row1_filter_chain(report):
    c = _case(report, "t1+a2", "a1")
    irr = next(b for b in c.branches if b.label == "k = su2-irr")
    filters = [s.filter for s in irr.steps]
    assert "totally_geodesic_by_ineffectivity" in filters
    frankel = next(s for s in irr.steps if s.filter == "frankel")
    assert (frankel.args, frankel.result) == ({"d1": 5, "d2": 5, "n": 7}, "MustIntersect")
    red = next(b for b in c.branches if b.label == "k = su2-red")
    assert next(s for s in red.steps if s.filter == "fixed_dim").result == 3
    assert any(n.kind == "Boundary" for n in red.notes)


def test_row2_values(report):
    c = _case(report, "3a1", "a1")
    two = next(b for b in c.branches if b.label == "k = su2-diag01")
    assert next(s for s in two.steps if s.filter == "fixed_dim").result == 4
    three = next(b for b in c.branches if b.label == "k = su2-diag012")
    assert next(s for s in three.steps if s.filter == "contains_ideal").result == "a1"


def test_row3_main_argument(report):
    c = _case(report, "t1+2a1", "t1")
    main = next(b for b in c.branches if "missing the center" in b.label)
    res = {s.filter: s.result for s in main.steps[-7:]}
    assert res["torus_modules_equivalent"] is False
    assert res["root_restrictions_independent"] is True
    assert res["sphere_pair"] is False
    assert any(n.kind == "Emendation" for n in main.notes)
    deg = next(b for b in c.branches if b.label == "k = t1-deg1")
    assert next(s for s in deg.steps if s.filter == "fixed_dim").result == 5


def test_product_with_so5_gap(report):
    c = _case(report, "a1+b2", "t1+2a1")
    assert any(n.kind == "Gap" for n in c.notes)
    circle = next(s for s in c.trace if s.filter == "fixed_dim_of_sub")
    assert circle.result == 5


def test_every_step_replays(report):
    steps = report.all_steps()
    assert len(steps) > 100
    for s in steps:
        assert s.replay() == s.result, s


def test_unknown_filter_name_is_rejected():
    with pytest.raises(KeyError):
        cl.Tracer().run("nope", "")


def test_threaded_run_is_identical(report):
    threaded = cl.run_classification(jobs=4)
    assert cl.report_json(threaded) == cl.report_json(report)


def test_missing_handler_is_incomplete(monkeypatch):
    case = cl.find_case("g2", "a2")
    monkeypatch.delitem(cl.HANDLERS, ("g2", "a2"))
    with pytest.raises(cl.IncompleteAnalysis):
        cl.evaluate_case(case)


def test_undeclared_survivor_is_incomplete(monkeypatch):
    case = cl.find_case("g2", "a2")
    monkeypatch.setitem(cl.HANDLERS, ("g2", "a2"), cl._survivor)
    with pytest.raises(cl.IncompleteAnalysis):
        cl.evaluate_case(case)


def test_report_json_shape(report):
    doc = json.loads(cl.report_json(report))
    for c in doc["cases"]:
        assert set(c) >= {"d", "g", "k", "candidates", "verdict", "trace"}
    assert doc["survivors"] == ["2a1 / trivial"]
    assert doc["theorem_holds"] is True


def test_find_case_unknown():
    with pytest.raises(KeyError):
        cl.find_case("a1+a1", "a1")


def test_verdict_combination():
    s = ob.Verdict(ob.DIFFEO_SPHERE, (("x", "[AA]"),))
    i = ob.Verdict(ob.IMPOSSIBLE, (("y", "[Fr]"),))
    b = lambda v: cl.Branch("b", v, [])
    assert cl._combine([b(i), b(s)]).kind == ob.DIFFEO_SPHERE
    assert cl._combine([b(i), b(i)]).kind == ob.IMPOSSIBLE
    assert cl._combine([b(i), b(ob.Verdict(ob.SURVIVOR))]).kind == ob.SURVIVOR
