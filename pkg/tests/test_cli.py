import json

import minorlab as ml
from minorlab import formats
from minorlab.cli import main


def write_graph(tmp_path, G, name="g.el"):
    path = tmp_path / name
    formats.write_edge_list(G, path)
    return str(path)


def test_generate_then_check_round_trip(tmp_path, capsys):
    out = str(tmp_path / "k.el")
    assert main(["generate", "--construction", "bipartite", "--a", "4", "--b", "4",
                 "--p", "1.0", "--out", out]) == 0
    G = formats.read_edge_list(out)
    assert G == ml.complete_bipartite(4, 4)


def test_generate_lower_bound_and_connectivity(tmp_path):
    out = str(tmp_path / "g.el")
    assert main(["generate", "--construction", "lower-bound", "--a", "30", "--b", "30",
                 "--t", "4", "--eps", "0.05", "--seed", "3", "--out", out]) == 0
    assert formats.read_edge_list(out).n == 60
    assert main(["generate", "--construction", "connectivity", "--t", "5", "--k", "3",
                 "--out", out]) == 0
    assert formats.read_edge_list(out).n == 6


def test_check_petersen_negative_verdict(tmp_path, capsys):
    path = write_graph(tmp_path, ml.petersen_graph())
    code = main(["check", path, "--t", "6"])
    out = capsys.readouterr().out
    assert code == 1
    assert "k6_minor=NotFound" in out
    assert "hadwiger=5" in out
    assert "alpha=4" in out
    assert "kappa=3" in out
    assert "degeneracy=3" in out
    assert "independence_bound_ok=true" in out


def test_check_finds_and_prints_model(tmp_path, capsys):
    path = write_graph(tmp_path, ml.complete_graph(5))
    code = main(["check", path, "--t", "5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "k5_minor=Found" in out
    assert "# t=5 valid=true" in out


def test_check_malformed_file_names_line(tmp_path, capsys):
    path = tmp_path / "bad.el"
    path.write_text("p 3 1\n0 zebra\n")
    code = main(["check", str(path), "--t", "3"])
    err = capsys.readouterr().err
    assert code == 2
    assert "line 2" in err


def test_check_budget_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path, ml.petersen_graph())
    code = main(["check", path, "--t", "6", "--budget", "4"])
    assert code == 3


def test_color_degeneracy_writes_coloring(tmp_path, capsys):
    path = write_graph(tmp_path, ml.petersen_graph())
    out = str(tmp_path / "c.txt")
    code = main(["color", path, "--strategy", "degeneracy", "--list-size", "4",
                 "--out", out])
    assert code == 0
    coloring = formats.parse_coloring((tmp_path / "c.txt").read_text())
    assert ml.verify_list_coloring(ml.petersen_graph(), ml.uniform_lists(10, 4),
                                   coloring)


def test_color_with_list_file(tmp_path):
    G = ml.cycle_graph(4)
    path = write_graph(tmp_path, G)
    lists = [frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2}), frozenset({0, 1})]
    lists_path = tmp_path / "lists.txt"
    lists_path.write_text(formats.lists_to_str(lists))
    out = str(tmp_path / "c.txt")
    code = main(["color", path, "--strategy", "exact", "--lists", str(lists_path),
                 "--out", out])
    assert code == 0
    coloring = formats.parse_coloring((tmp_path / "c.txt").read_text())
    assert ml.verify_list_coloring(G, lists, coloring)


def test_color_failure_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path, ml.complete_graph(4))
    code = main(["color", path, "--strategy", "exact", "--list-size", "3"])
    assert code == 1


def test_color_minorfree_strategy(tmp_path):
    path = write_graph(tmp_path, ml.petersen_graph())
    out = str(tmp_path / "c.txt")
    code = main(["color", path, "--strategy", "minorfree", "--list-size", "12",
                 "--d", "6", "--seed", "4", "--out", out])
    assert code == 0


def test_color_multipartite_strategy(tmp_path):
    path = write_graph(tmp_path, ml.complete_multipartite([3, 3]))
    out = str(tmp_path / "c.txt")
    code = main(["color", path, "--strategy", "multipartite", "--list-size", "8",
                 "--trials", "32", "--out", out])
    assert code == 0


def test_decompose_command_round_trips(tmp_path):
    G = ml.complete_graph(13)
    path = write_graph(tmp_path, G)
    out = str(tmp_path / "d.txt")
    assert main(["decompose", path, "--k", "2", "--out", out]) == 0
    D = formats.parse_decomposition((tmp_path / "d.txt").read_text())
    assert ml.check_decomposition(G, D) == []


def test_decompose_precondition_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path, ml.path_graph(5))
    assert main(["decompose", path, "--k", "1"]) == 2


def test_bounds_json_output(tmp_path, capsys):
    code = main(["bounds", "--t", "4", "--eps", "0.5", "--a", "40", "--b", "40",
                 "--n-vertices", "80"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert abs(doc["values"]["density_forcing_threshold"] - 15.0714) < 1e-3


def test_bounds_input_error(tmp_path, capsys):
    assert main(["bounds", "--t", "2"]) == 2


def test_experiment_command_writes_reports(tmp_path, capsys):
    out_dir = str(tmp_path / "exp")
    code = main(["experiment", "--suite", "bounds", "--trials", "8", "--seed", "2",
                 "--out-dir", out_dir])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["suite"] == "bounds"
    assert (tmp_path / "exp" / "bounds.csv").exists()
    assert (tmp_path / "exp" / "bounds.json").exists()


def test_experiment_unknown_suite(tmp_path, capsys):
    assert main(["experiment", "--suite", "mystery"]) == 2


def test_check_json_format(tmp_path, capsys):
    path = write_graph(tmp_path, ml.petersen_graph())
    code = main(["check", path, "--t", "6", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 1
    assert doc["hadwiger"] == 5 and doc["k6_minor"] == "NotFound"


def test_bounds_text_format(capsys):
    code = main(["bounds", "--t", "4", "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("density_forcing_threshold=")
