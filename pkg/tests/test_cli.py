import io
import json

import pytest

from tamecluster.cli import main
from tamecluster.dot import parse_dot_edges
from tamecluster.instances import SpecError, bundled_names, parse_spec


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_bundled_instances_present():
    assert bundled_names() == ["d12-example1", "d4-final", "d4-repaired", "ej2", "kronecker"]


def test_syntax_error_is_positioned():
    with pytest.raises(SpecError) as e:
        parse_spec('{"quiver": {"vertices": 2,\n "arrows": [[1, 2]] ', "x.json")
    assert e.value.where.startswith("x.json:2:")


@pytest.mark.parametrize("doc, where", [
    ({"tilting": []}, "$"),
    ({"quiver": {"vertices": 2, "arrows": [[1, 3]]}, "tilting": []}, "$.quiver.arrows[0]"),
    ({"quiver": {"vertices": 2, "arrows": [[1, 2]]}, "tilting": [{"kind": "weird"}]}, "$.tilting[0].kind"),
    ({"quiver": {"vertices": 2, "arrows": [[1, 2]]}, "tilting": [{"kind": "preinjective", "vertex": 1}]},
     "$.tilting[0]"),
    ({"quiver": {"vertices": 2, "arrows": [[1, 2], [2, 1]]}, "tilting": []}, "$.quiver"),
    ({"quiver": {"vertices": 2, "arrows": []}, "tilting": [], "options": {"colour": 1}}, "$.options.colour"),
])
def test_malformed_specs(doc, where):
    with pytest.raises(SpecError) as e:
        parse_spec(json.dumps(doc))
    assert e.value.where == where


def test_validate_exit_codes(tmp_path):
    code, text = run("validate", "--spec", "kronecker")
    assert code == 0 and "rigid: yes" in text
    code, text = run("validate", "--spec", "d4-final")
    assert code == 1 and "not rigid" in text
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, text = run("validate", "--spec", str(bad))
    assert code == 1 and "bad.json:1:2" in text
    code, text = run("validate", "--spec", "no-such-instance")
    assert code == 1


def test_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    c1, t1 = run("torsion", "--spec", "d12-example1", "--json", str(a))
    c2, t2 = run("torsion", "--spec", "d12-example1", "--json", str(b))
    assert c1 == c2 == 0 and t1 == t2 and a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert sorted(rep["cone_levels"]) == [1, 2, 4]
    assert sorted(len(c["summands"]) for c in rep["maximal_cones"]) == [1, 2, 4]


def test_generator_manifest_json(tmp_path):
    j = tmp_path / "g.json"
    code, _ = run("generator", "--spec", "d4-repaired", "--json", str(j))
    rep = json.loads(j.read_text())
    assert code == 0 and rep["cogenerator"] and rep["torsion_contained"]
    assert rep["cones"] == [["T1:E1^1"]]


def test_gldim_verdicts(tmp_path):
    j = tmp_path / "v.json"
    code, text = run("gldim", "--spec", "ej2", "--json", str(j))
    v = json.loads(j.read_text())["verdict"]
    assert code == 0 and v["w_rep_dim"] == 3 and v["cogenerator"] is False and v["rep_dim"] is None
    assert v["missing_injectives"] == ["T1:E2^1"]
    # the minimal slice is reported honestly as a failed witness
    code, _ = run("gldim", "--spec", "ej2", "--no-cogenerator", "--json", str(j))
    v = json.loads(j.read_text())["verdict"]
    assert code == 2 and v["gl_dim_end"] == 4 and v["w_rep_dim"] is None


def test_gldim_cutoff_overrun(tmp_path):
    j = tmp_path / "v.json"
    code, _ = run("gldim", "--spec", "kronecker", "--cutoff", "1", "--json", str(j))
    v = json.loads(j.read_text())["verdict"]
    assert code == 2 and "cutoff" in v["gl_dim_error"]


def _check_dot(text):
    nodes, edges = parse_dot_edges(text)
    assert nodes and all(a in nodes and b in nodes for a, b in edges)
    return nodes, edges


def test_dot_outputs():
    code, text = run("dot", "--spec", "d12-example1", "--component", "tube:R")
    assert code == 0
    nodes, edges = _check_dot(text)
    assert len(nodes) == 10 * 12
    # cone and torsion attributes on the right nodes
    assert '"R:E7^4" [' in text and 'cone="W3"' in text.split('"R:E7^4" [')[1].split("\n")[0]
    assert 'torsion="true"' in text.split('"R:E9^2" [')[1].split("\n")[0]
    code, text = run("dot", "--spec", "ej2", "--component", "preinjective")
    _check_dot(text)
    code, text = run("dot", "--spec", "ej2", "--component", "bquiver")
    nodes, edges = _check_dot(text)
    assert len(nodes) == 6 and len(edges) == 7
    code, text = run("dot", "--spec", "ej2", "--component", "nonsense")
    assert code == 1


def test_figures(tmp_path):
    code, _ = run("torsion", "--spec", "d4-repaired", "--figures", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "d4-repaired-tube-T1.png", "d4-repaired-tube-T2.png", "d4-repaired-tube-T3.png"]


def test_verify_small_run(tmp_path):
    j = tmp_path / "v.json"
    code, _ = run("verify", "--spec", "kronecker", "--limit", "5", "--json", str(j))
    rep = json.loads(j.read_text())
    assert rep["summary"]["samples"] == 5
    assert rep["summary"]["approximation"] == 5 and rep["summary"]["pd_le_1"] == 5
    assert code == (0 if rep["summary"]["exact"] == 5 else 2)
