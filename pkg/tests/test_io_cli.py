import csv
import json
from pathlib import Path

import pytest

from obsrep import Graph, io, verify
from obsrep.cli import run
from obsrep.construct import represent_bipartite, represent_subcolored
from obsrep.drawing import certify
from obsrep.geom import mpq
from obsrep.model import Subcoloring

GOLDEN = Path(__file__).parent / "golden"


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_rep_round_trip():
    H = Graph(5, [(0, 3), (1, 4), (2, 3)])
    rep = represent_bipartite(H, [0, 1, 2], [3, 4])
    back = io.rep_from_json(json.loads(json.dumps(io.rep_to_json(rep))))
    assert back.placement == rep.placement and back.obstacles == rep.obstacles
    assert back.rules == rep.rules and back.tags == rep.tags
    assert verify(H, back).passed


def test_fan_rules_round_trip():
    G = Graph(4, [(0, 1), (2, 3)])
    rep = represent_subcolored(G, Subcoloring((0,) * 4, (0, 0, 1, 1)))
    back = io.rep_from_json(json.loads(json.dumps(io.rep_to_json(rep))))
    assert back.rules == rep.rules


def test_drawing_round_trip():
    D = certify(3, 4).drawing
    back = io.drawing_from_json(json.loads(json.dumps(io.drawing_to_json(D))))
    assert back == D and back.epsilon == D.epsilon


def test_plain_writes_exact_strings():
    assert io.plain({"a": [mpq(1, 3)]}) == {"a": ["1/3"]}


def test_construct_and_verify(tmp_path, capsys):
    g = write(tmp_path / "g.json", {"n": 5, "edges": [[0, 3], [1, 4], [2, 4]]})
    out = tmp_path / "r.json"
    assert run(["construct", "--input", g, "--method", "bipartite", "--out", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True
    assert run(["verify", "--graph", g, "--rep", str(out)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    # tamper: drop every obstacle
    d = json.loads(out.read_text())
    d["obstacles"], d["tags"] = [], []
    bad = write(tmp_path / "bad.json", d)
    assert run(["verify", "--graph", g, "--rep", bad]) == 1


@pytest.mark.parametrize("method,extra", [
    ("cobipartite", {}), ("split", {"clique": [0], "independent": [1, 2, 3]}),
    ("general", {}), ("subcolor", {}),
])
def test_construct_methods(tmp_path, method, extra):
    edges = [[0, 1], [0, 2], [0, 3]] if method != "cobipartite" else [[0, 2], [1, 3]]
    g = write(tmp_path / "g.json", dict({"n": 4, "edges": edges}, **extra))
    assert run(["construct", "--input", g, "--method", method, "--out", str(tmp_path / "r.json")]) == 0


def test_bad_flags_and_inputs(tmp_path):
    assert run(["construct", "--input", "x", "--method", "magic", "--out", "y"]) == 2
    assert run(["verify", "--graph", str(tmp_path / "missing.json"), "--rep", "r"]) == 2
    g = write(tmp_path / "g.json", {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})
    assert run(["construct", "--input", g, "--method", "bipartite", "--out", str(tmp_path / "r")]) == 2
    assert run(["bench", "--sizes", "0"]) == 2


def test_arrangement_stats(capsys):
    assert run(["arrangement", "--regular", "3", "3", "--stats"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["vertices"] == 13 and stats["boundedFaces"] == 12 and stats["euler"] is True


def test_extremal_commands(tmp_path, capsys):
    assert run(["extremal", "thm4", "--n", "8", "--h", "3", "--demo", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["incidentEdges"] >= out["bound"]
    assert run(["extremal", "g1", "--n", "6", "--seed", "2", "--out", str(tmp_path / "r.json"),
                "--graph-out", str(tmp_path / "g.json")]) == 0
    capsys.readouterr()
    assert run(["verify", "--graph", str(tmp_path / "g.json"), "--rep", str(tmp_path / "r.json")]) == 0
    assert run(["extremal", "thm5", "--n", "6", "--M", "48"]) == 0
    assert run(["extremal", "thm5", "--n", "4", "--M", "4"]) == 2


def test_golden_svg(tmp_path):
    out = tmp_path / "k33.svg"
    assert run(["export-svg", "--drawing", str(GOLDEN / "k33_regular.json"), "--out", str(out)]) == 0
    assert out.read_text() == (GOLDEN / "k33_regular.svg").read_text()


def test_bench_csv(tmp_path):
    out = tmp_path / "b.csv"
    assert run(["bench", "--sizes", "2,3", "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["op", "size", "millis"]
    assert {r[0] for r in rows[1:]} == {"certify_epsilon", "arrangement"}
