"""Command line behaviour: exit codes, JSON round trips, DOT output, sweeps."""

import json

from lrw1 import cli
from lrw1.graph import parse_graph, serialize_graph
from lrw1.named import caterpillar_graph, cycle_graph, house_graph, net_graph, path_graph
from lrw1.recognizer import OrderingCertificate, verify_certificate


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_recognize_caterpillar_exit_0(tmp_path, capsys):
    path = _write(tmp_path, "cat.edges", serialize_graph(caterpillar_graph(3, [1, 1, 0])))
    assert cli.main(["recognize", path]) == 0
    out = capsys.readouterr().out
    assert "linear rank-width <= 1" in out


def test_recognize_c5_exit_1(tmp_path, capsys):
    path = _write(tmp_path, "c5.edges", serialize_graph(cycle_graph(5)))
    assert cli.main(["recognize", path]) == 1
    out = capsys.readouterr().out
    assert "hole(5)" in out
    assert "0 1 2 3 4" in out


def test_recognize_malformed_exit_2(tmp_path, capsys):
    path = _write(tmp_path, "bad.edges", "2 1\n0 0\n")
    assert cli.main(["recognize", path]) == 2
    assert "error" in capsys.readouterr().err


def test_recognize_missing_file_exit_2(capsys):
    assert cli.main(["recognize", "/nonexistent/graph.edges"]) == 2


def test_recognize_graph6_autodetect(tmp_path, capsys):
    path = _write(tmp_path, "g.g6", serialize_graph(cycle_graph(5), "graph6"))
    assert cli.main(["recognize", path]) == 1


def test_recognize_verify_flag(tmp_path):
    path = _write(tmp_path, "net.edges", serialize_graph(net_graph()))
    assert cli.main(["recognize", "--verify", path]) == 1


def test_json_round_trip(tmp_path, capsys):
    for g in [caterpillar_graph(2, [1, 2]), cycle_graph(5), net_graph(), cycle_graph(8)]:
        path = _write(tmp_path, "g.edges", serialize_graph(g))
        cli.main(["recognize", "--json", path])
        payload = json.loads(capsys.readouterr().out)
        cert = cli.certificate_from_json(g, payload)
        assert verify_certificate(g, cert)
        assert cli.certificate_to_json(g, cert) == payload


def test_json_schema_fields(tmp_path, capsys):
    path = _write(tmp_path, "net.edges", serialize_graph(net_graph()))
    cli.main(["recognize", "--json", path])
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "lrw_ge_2"
    assert payload["obstruction"]["family"] == "dh_star3"
    assert isinstance(payload["obstruction"]["catalog_index"], int)
    path = _write(tmp_path, "p.edges", serialize_graph(path_graph(4)))
    cli.main(["recognize", "--json", path])
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"status": "lrw_le_1", "ordering": [0, 1, 2, 3]}


def test_decompose_p4(tmp_path, capsys):
    path = _write(tmp_path, "p4.edges", serialize_graph(path_graph(4)))
    assert cli.main(["decompose", path]) == 0
    out = capsys.readouterr().out
    assert out.count("block") == 2
    assert "star" in out
    assert "split tree is a path: yes" in out


def test_decompose_net_dot_outputs(tmp_path, capsys):
    path = _write(tmp_path, "net.edges", serialize_graph(net_graph()))
    sd = tmp_path / "sd.dot"
    tree = tmp_path / "tree.dot"
    assert cli.main(["decompose", path, "--dot-sd", str(sd), "--dot-tree", str(tree)]) == 0
    out = capsys.readouterr().out
    assert out.count("block") == 4
    assert "split tree is a path: no" in out
    assert "style=dashed" in sd.read_text()
    assert tree.read_text().startswith("graph split_tree {")


def test_decompose_house_exit_1(tmp_path, capsys):
    path = _write(tmp_path, "house.edges", serialize_graph(house_graph()))
    assert cli.main(["decompose", path]) == 1
    assert "not distance hereditary" in capsys.readouterr().out


def test_decompose_disconnected_exit_2(tmp_path, capsys):
    path = _write(tmp_path, "two.edges", "4 2\n0 1\n2 3\n")
    assert cli.main(["decompose", path]) == 2


def test_lrw_exact(tmp_path, capsys):
    for g, want in [(cycle_graph(5), 2), (path_graph(6), 1), (parse_graph("1 0"), 0)]:
        path = _write(tmp_path, "g.edges", serialize_graph(g))
        assert cli.main(["lrw-exact", path]) == 0
        assert f"linear rank-width = {want}" in capsys.readouterr().out


def test_lrw_exact_too_large(tmp_path, capsys):
    path = _write(tmp_path, "big.edges", serialize_graph(path_graph(12)))
    assert cli.main(["lrw-exact", path]) == 2


def test_crosscheck_small(capsys):
    assert cli.main(["crosscheck", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "6 connected graphs on 4 vertices checked" in out


def test_crosscheck_missing_fixtures(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("LRW1_FIXTURES", str(tmp_path / "absent"))
    assert cli.main(["crosscheck", "--max-n", "3"]) == 2
    assert "missing fixture" in capsys.readouterr().err


def test_crosscheck_detects_corrupted_recognizer(monkeypatch, capsys):
    # mutation probe: a recognizer that accepts everything must be caught
    from lrw1 import recognizer

    monkeypatch.setattr(
        recognizer, "recognize", lambda g: OrderingCertificate(tuple(range(g.n)))
    )
    assert cli.main(["crosscheck", "--max-n", "5"]) == 1
    assert "disagreement" in capsys.readouterr().out


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(serialize_graph(cycle_graph(5))))
    assert cli.main(["recognize"]) == 1
