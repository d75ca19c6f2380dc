import json

import pytest

from shirshov.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_divide_found_and_not_found(capsys):
    code, out, _ = run(capsys, "divide", "cba", "--n", "3")
    assert code == 0 and "c > b > a" in out
    code, out, _ = run(capsys, "divide", "abc", "--n", "2")
    assert code == 1 and out.strip() == "none"


def test_divide_strong_json(capsys):
    code, out, _ = run(capsys, "divide", "ccbbaa", "--n", "3", "--strong", "--periods", "1", "--exp", "2",
                       "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["format"] == "shirshov/1" and rec["witness"]["periods"] == ["c", "b", "a"]


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "divide", "--n", "2")[0] == 2
    f = tmp_path / "w.txt"
    f.write_text("cba\n")
    assert run(capsys, "divide", "cba", "--file", str(f), "--n", "2")[0] == 2
    assert run(capsys, "divide", "--file", str(f), "--n", "2")[0] == 0
    with pytest.raises(SystemExit) as exc:
        main(["divide"])
    assert exc.value.code == 2


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--l", "3", "--n", "4")
    assert code == 0
    assert any(line.split()[2:4] == ["beth2", "15"] for line in out.splitlines())
    code, out, _ = run(capsys, "bounds", "--l", "3", "--n", "4", "--format", "csv")
    assert out.startswith("l,n,name,value")


def test_extremal_command(capsys, tmp_path):
    code, out, _ = run(capsys, "extremal", "--n", "4", "--l", "10", "--no-strong", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["blocks"] == 12
    assert rec["certificate"]["measured_height"] >= 2
    word_file = tmp_path / "word.txt"
    code, out, _ = run(capsys, "extremal", "--n", "4", "--l", "9", "--word-file", str(word_file))
    assert word_file.exists() and (tmp_path / "word.json").exists()
    assert "strongly 4-divisible: False" in out


def test_height_and_omega(capsys):
    word = "ab" * 7 + "c" + "ac" * 7
    code, out, _ = run(capsys, "height", word, "--period-len", "2", "--exp", "6")
    assert code == 0 and out.startswith("small selective height 2")
    code, out, _ = run(capsys, "height", word, "--period-len", "2", "--exp", "6", "--large")
    assert "large selective height 1" in out
    code, out, _ = run(capsys, "omega", word, "--period-len", "2", "--n", "3", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["audit"]["ok"] and rec["coloring"]["colors"] == 2
    code, out, _ = run(capsys, "omega", word, "--period-len", "2", "--n", "3", "--format", "dot")
    assert out.startswith("graph G {")


def test_rauzy_command(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    fig = tmp_path / "g.png"
    code, out, _ = run(capsys, "rauzy", "ab" * 10, "--order", "2", "--dot", str(dot), "--figure", str(fig))
    assert code == 0 and "ab -> ba: 9 *" in out
    assert dot.read_text().startswith("digraph rauzy") and fig.stat().st_size > 0


def test_encode_and_beth(capsys, tmp_path):
    fam = tmp_path / "fam.json"
    fam.write_text(json.dumps({"length": 4, "alphabet": 2, "cycles": ["aaab", "aabb"]}))
    code, out, _ = run(capsys, "encode", "pair", "--family", str(fam), "--n", "3", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["encoded"]["length"] == 2 and rec["decodes_back"]
    code, out, _ = run(capsys, "encode", "pad", "--family", str(fam), "--n", "3")
    assert code == 0
    code, out, _ = run(capsys, "beth-search", "--t", "2", "--l", "2", "--n", "3")
    assert code == 0 and out.startswith("lower bound 1")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bounds")
    assert code == 0 and out.startswith("PASS bounds")
    code, out, _ = run(capsys, "verify", "--suite", "dilworth", "--scale", "tiny", "--format", "json")
    assert json.loads(out)["suites"][0]["passed"]


def test_extremal_figure(capsys, tmp_path):
    fig = tmp_path / "sweep.png"
    code, _, _ = run(capsys, "extremal", "--n", "4", "--l", "10", "--no-strong", "--figure", str(fig))
    assert code == 0 and fig.stat().st_size > 0
