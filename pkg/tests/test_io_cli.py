import json

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from conftest import P, P2
from wskit.cli import cli_main
from wskit.errors import ParseError, SelfIntersecting
from wskit.geometry import validate_polygon
from wskit.io import parse_instance, render_svg, serialize
from wskit.visibility import visibility_region


def test_parse_examples():
    poly, pts = parse_instance('{"vertices":[[0,0],[2,0],[2,2],[0,2]]}')
    assert poly.n == 4 and pts is None
    poly, pts = parse_instance('{"vertices":[[0,0],[2,0],[2,2],[0,2]], "points":[["1/3", 1]]}')
    assert pts == [P(mpq(1, 3), 1)]
    with pytest.raises(SelfIntersecting):
        parse_instance('{"vertices":[[0,0],[2,2],[2,0],[0,2]]}')
    for bad in ['{"vertices":[[0,0],[1.5,0],[0,1]]}', "{", '{"points":[]}', '{"vertices":[[0,"1/0"],[1,0],[0,1]]}']:
        with pytest.raises(ParseError):
            parse_instance(bad)


small = st.fractions(min_value=0, max_value=10, max_denominator=50).map(lambda f: mpq(f.numerator, f.denominator))


@given(st.lists(st.tuples(small, small), min_size=0, max_size=5))
def test_round_trip(raw):
    poly = validate_polygon([(0, 0), (10, 0), (10, 10), (0, 10)])
    pts = [P(x, y) for x, y in raw]
    again, got = parse_instance(serialize(poly, pts))
    assert again == poly and got == pts


def test_svg(square, p2, p2_points):
    s = render_svg(square)
    assert s.count("<path") == 1
    regs = [visibility_region(p2, q) for q in p2_points[:2]]
    s = render_svg(p2, regions=regs, witnesses=p2_points[:2])
    assert s.count("<path") == 3 and s.count("<circle") == 2
    assert s == render_svg(p2, regions=regs, witnesses=p2_points[:2])


def _run(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def files(tmp_path):
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return {
        "convex": write("convex.json", {"vertices": [[0, 0], [2, 0], [2, 2], [0, 2]]}),
        "p2": write("p2.json", {"vertices": [[str(x), str(y)] for x, y in P2],
                                "points": [[1, "5/2"], [11, "5/2"], [6, "5/2"]]}),
        "bowtie": write("bowtie.json", {"vertices": [[0, 0], [2, 2], [2, 0], [0, 2]]}),
        "tmp": tmp_path,
    }


def test_cli_ws_exact(capsys, files):
    code, out = _run(capsys, "ws-exact", files["convex"])
    doc = json.loads(out)
    assert code == 0 and doc["size"] == 1 and doc["guarantee"] == "1"
    code, out = _run(capsys, "ws-exact", files["p2"])
    assert code == 0 and json.loads(out)["size"] == 2


def test_cli_ws_approx(capsys, files):
    code, out = _run(capsys, "ws-approx", files["p2"], "--eps", "1")
    doc = json.loads(out)
    assert code == 0 and doc["size"] >= 1 and doc["guarantee"] == "1/2"
    for x, y in doc["witnesses"]:
        assert isinstance(x, str) and isinstance(y, str)


def test_cli_errors(capsys, files):
    assert _run(capsys, "validate", files["bowtie"])[0] == 2
    assert _run(capsys, "validate", files["convex"])[0] == 0
    assert _run(capsys, "nope")[0] == 1
    assert _run(capsys, "ws-approx", files["p2"])[0] == 1
    assert _run(capsys, "ws-approx", files["p2"], "--eps", "0")[0] == 1
    assert _run(capsys, "disws", files["convex"])[0] == 1
    assert _run(capsys, "visibility", files["p2"], "--point", "50,50")[0] == 2
    assert _run(capsys, "validate", str(files["tmp"] / "missing.json"))[0] == 1


def test_cli_other_commands(capsys, files):
    code, out = _run(capsys, "disws", files["p2"])
    assert code == 0 and json.loads(out)["witnesses"] == [["1", "5/2"], ["11", "5/2"]]
    svg = str(files["tmp"] / "v.svg")
    code, out = _run(capsys, "visibility", files["p2"], "--point", "1,5/2", "--svg", svg)
    assert code == 0 and ["19/4", "0"] in json.loads(out)["region"]
    assert open(svg).read().startswith("<?xml")
    code, out = _run(capsys, "candidates", files["convex"], "--k", "1")
    assert code == 0 and json.loads(out)["size"] == 16
    code, out = _run(capsys, "candidates", files["p2"], "--k", "1", "--mode", "q1")
    assert code == 0
    code, out = _run(capsys, "strings", files["p2"])
    doc = json.loads(out)
    assert code == 0 and doc["isomorphic"] and doc["sig_edges"] == [[0, 2], [1, 2]]
    code, out = _run(capsys, "gen", "--comb", "2", "--seed", "3")
    assert code == 0 and len(json.loads(out)["vertices"]) == 16
    code, out = _run(capsys, "gen", "--random", "8", "--seed", "1", "--points", "3")
    assert code == 0 and len(json.loads(out)["points"]) == 3
    assert _run(capsys, "gen", "--seed", "1")[0] == 1
    code, out = _run(capsys, "oracle", "intersection", files["p2"], "--a", "1,5/2", "--b", "11,5/2", "--density", "400")
    assert code == 0 and json.loads(out) == {"common_sample": False}
    code, out = _run(capsys, "oracle", "mis", files["p2"])
    assert code == 0 and json.loads(out) == {"mis": 2}
    code, out = _run(capsys, "oracle", "lower-bound", files["p2"], "--density", "4")
    assert code == 0 and json.loads(out)["lower_bound"] == 2
