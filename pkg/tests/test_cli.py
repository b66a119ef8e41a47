import json

from cyclehom.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_closed_form_euler_json(capsys):
    code, out = invoke(capsys, "closed-form", "euler-cycle", "-m", "6",
                       "-n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"value": 13}


def test_homology_phi_cycle(capsys):
    code, out = invoke(capsys, "homology", "phi", "-m", "2", "-n", "7",
                       "--gap", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    nonzero = [g for g in obj["groups"] if g["betti"] or g["torsion"]]
    assert nonzero == [{"dim": 1, "betti": 1, "torsion": []}]


def test_crosscheck_pass(capsys):
    code, out = invoke(capsys, "crosscheck", "ind-cycle", "-m", "9")
    assert code == 0
    assert out.startswith("PASS")


def test_crosscheck_hom_cycle(capsys):
    code, out = invoke(capsys, "crosscheck", "hom-cycle", "-m", "5", "-n", "4")
    assert code == 0
    assert out.startswith("PASS")


def test_grind_trace(capsys):
    code, out = invoke(capsys, "grind", "--north", "2", "--east", "5",
                       "--gap", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].startswith("thin garland:")
    assert all(l.startswith("collapse ") for l in lines[:-1])


def test_e2_closed_json(capsys):
    code, out = invoke(capsys, "e2", "-m", "6", "-n", "4", "--ring", "Z2",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 6 and obj["ring"] == "Z2"
    assert {"group": "Z2^3", "p": 3, "q": 4} in obj["entries"]


def test_output_deterministic(capsys):
    argv = ("e2", "-m", "7", "-n", "5", "--format", "json")
    _, first = invoke(capsys, *argv)
    _, second = invoke(capsys, *argv)
    assert first == second


def test_csv_format(capsys):
    code, out = invoke(capsys, "homology", "ind", "-g", "C6",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "dim,betti,torsion"


def test_usage_error_exit_two(capsys):
    assert run(["homology", "nope"]) == 2
    assert run(["homology", "hom", "-t", "Q9", "-g", "K3"]) == 2


def test_max_cells_exit_one(capsys):
    assert run(["homology", "hom", "-t", "C5", "-g", "K9",
                "--max-cells", "500"]) == 1


def test_graph_file_input(tmp_path, capsys):
    path = tmp_path / "graph.txt"
    from cyclehom.graphs import cycle, to_text
    path.write_text(to_text(cycle(6)))
    code, out = invoke(capsys, "homology", "ind", "-g", str(path),
                       "--format", "json")
    assert code == 0
    nonzero = [g for g in json.loads(out)["groups"]
               if g["betti"] or g["torsion"]]
    assert nonzero == [{"dim": 1, "betti": 2, "torsion": []}]
