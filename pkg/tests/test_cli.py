import json

from stringdet.cli import main
from stringdet.families import generate_example


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_validate_ok(tmp_path, capsys):
    doc = generate_example("zigzag4")
    path = write(tmp_path, "q.txt", doc)
    assert main(["validate", path]) == 0
    assert "VALID" in capsys.readouterr().out


def test_validate_cycle(tmp_path, capsys):
    doc = "vertices: 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n"
    path = write(tmp_path, "cycle.txt", doc)
    assert main(["validate", path]) == 2
    out = capsys.readouterr().out
    assert "INVALID" in out and "tree" in out


def test_validate_parse_error(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "nonsense\n")
    assert main(["validate", path]) == 1


def test_classify_and_ideals(tmp_path, capsys):
    path = write(tmp_path, "q.txt", generate_example("fan5", variant="both"))
    assert main(["classify", path, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["classes"]["4"] == "fork source"
    assert main(["ideals", path, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vertex_ideals"]["3"]["kind"] == "zero"
    assert payload["vertex_ideals"]["3"]["witness"] == 4
    assert payload["vertex_ideals"]["4"] is None


def test_determiners_fan5(tmp_path, capsys):
    path = write(tmp_path, "q.txt", generate_example("fan5", variant="both"))
    assert main(["determiners", path, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["projective_determiners"] == [1, 2, 3, 5]
    assert payload["formula_value"] == 8
    assert payload["dynkin"]["shape"] == "D"


def test_check_agreement(tmp_path, capsys):
    path = write(tmp_path, "q.txt", generate_example("crossing-tree", levels=1))
    assert main(["check", path, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["agree"] is True
    assert payload["engine"]["total"] == 8
    assert payload["oracle"]["total"] == 8


def test_check_text_output(tmp_path, capsys):
    path = write(tmp_path, "q.txt", generate_example("zigzag4"))
    assert main(["check", path]) == 0
    assert "AGREE" in capsys.readouterr().out


def test_oracle_guard(tmp_path, capsys):
    path = write(tmp_path, "q.txt", generate_example("crossing-tree", levels=1))
    assert main(["oracle", path, "--max-nodes", "5"]) == 1
    assert "max-nodes" in capsys.readouterr().err


def test_oracle_output(tmp_path, capsys):
    path = write(tmp_path, "q.txt", generate_example("line", n=3))
    assert main(["oracle", path, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["total"] == 4  # 2n - 2 for the single-sink line
    assert payload["indecomposables"] == 6


def test_export_dot(tmp_path):
    src = write(tmp_path, "q.txt", generate_example("zigzag4"))
    quiver_out = tmp_path / "quiver.dot"
    ar_out = tmp_path / "ar.dot"
    assert main(["export-dot", src, "-o", str(quiver_out),
                 "--ar-output", str(ar_out)]) == 0
    assert "digraph quiver" in quiver_out.read_text()
    text = ar_out.read_text()
    assert "digraph ar_quiver" in text and "rank=same" in text


def test_gen_example_to_file(tmp_path):
    out = tmp_path / "gen.txt"
    assert main(["gen-example", "crossing6", "-o", str(out)]) == 0
    body = out.read_text()
    assert body.startswith("vertices: 1, 2, 3, 4, 5, 6")
    assert main(["validate", str(out)]) == 0


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["gen-example", "nonesuch"]) == 1
    assert main(["validate", "/no/such/file"]) == 1


def test_single_vertex_unsupported_for_reports(tmp_path, capsys):
    path = write(tmp_path, "one.txt", "vertices: 1\n")
    assert main(["validate", path]) == 0
    capsys.readouterr()
    assert main(["oracle", path, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["total"] == 0
    # the counting formula needs at least two vertices
    assert main(["determiners", path]) == 1
    assert "two vertices" in capsys.readouterr().err


def test_stdin_input(tmp_path, capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(generate_example("zigzag4")))
    assert main(["validate", "-"]) == 0
