"""End-to-end command-line behaviour, including the rendered report formats."""

import json

import pytest

from lefschetz.cli import main
from lefschetz.families import word_B
from lefschetz.word_dsl import serialize

from helpers import REPORT_KEYS


@pytest.fixture
def word_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_analyze_family_b(word_file, capsys):
    path = word_file("b.lfw", "genus: 2\nword: B\n")
    code = main(["analyze", path])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    assert list(data) == REPORT_KEYS
    assert data["sigma"] == -18
    assert data["chi"] == 26
    assert data["betti"] == [1, 0, 24, 0, 1]
    assert data["double_cover_base"] == "odd"
    assert data["cover_parameter"] == {"numerator": 3, "denominator": 1}
    assert all(v["passed"] for v in data["verdicts"])


def test_analyze_json_is_byte_stable(word_file, capsys):
    path = word_file("b.lfw", "genus: 2\nword: B\n")
    main(["analyze", path])
    first = capsys.readouterr().out
    main(["analyze", path])
    second = capsys.readouterr().out
    assert first == second
    assert first.endswith("\n")


def test_analyze_failing_verdict_exits_2(word_file, capsys):
    path = word_file("e1.lfw", "genus: 1\nword: E(1)\n")
    code = main(["analyze", path])
    data = json.loads(capsys.readouterr().out)
    assert code == 2
    failed = [v["name"] for v in data["verdicts"] if not v["passed"]]
    assert failed == ["wp_positivity"]


def test_analyze_missing_file(capsys):
    code = main(["analyze", "/no/such/file.lfw"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out == ""
    assert "cannot read" in captured.err


def test_analyze_parse_error_position(word_file, capsys):
    path = word_file("bad.lfw", "genus: 2\nword: c6\n")
    code = main(["analyze", path])
    err = capsys.readouterr().err
    assert code == 1
    assert "line 2, column 7" in err


def test_analyze_csv_and_text(word_file, capsys):
    path = word_file("a.lfw", "genus: 2\nword: A\n")
    assert main(["analyze", path, "--format", "csv"]) == 0
    csv_out = capsys.readouterr().out
    header, row = csv_out.strip().split("\n")
    assert "verdict_global_relation" in header
    assert len(header.split(",")) == len(row.split(","))
    assert main(["analyze", path, "--format", "text"]) == 0
    text_out = capsys.readouterr().out
    assert "signature: -12" in text_out
    assert "Pass global_relation" in text_out


def test_analyze_figure_output(word_file, tmp_path, capsys):
    path = word_file("e1.lfw", "genus: 1\nword: E(1)\n")
    figure = tmp_path / "report.png"
    main(["analyze", path, "--figure", str(figure)])
    capsys.readouterr()
    assert figure.exists() and figure.stat().st_size > 0


def test_analyze_hyperelliptic_flag(word_file, capsys):
    path = word_file("b.lfw", "genus: 2\nword: B\n")
    assert main(["analyze", path, "--assume-hyperelliptic"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert "endo_equality" in [v["name"] for v in data["verdicts"]]


def test_generate_then_analyze(tmp_path, capsys):
    out = tmp_path / "h3.lfw"
    assert main(["generate", "--family", "H", "--genus", "3", "-o", str(out)]) == 0
    assert main(["analyze", str(out)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["sigma"] == -32
    assert data["twist_count"] == 56


def test_generate_to_stdout(capsys):
    assert main(["generate", "--family", "B"]) == 0
    assert capsys.readouterr().out == serialize(word_B())


def test_generate_genus_guards(capsys):
    assert main(["generate", "--family", "A", "--genus", "3"]) == 1
    assert "genus-2" in capsys.readouterr().err
    assert main(["generate", "--family", "H"]) == 1
    assert "--genus" in capsys.readouterr().err
    assert main(["generate", "--family", "H", "--genus", "1"]) == 1
    capsys.readouterr()


def test_sum_then_check(word_file, tmp_path, capsys):
    a = word_file("a.lfw", "genus: 2\nword: A\n")
    b = word_file("b.lfw", "genus: 2\nword: B\n")
    out = tmp_path / "ab.lfw"
    assert main(["sum", a, b, "-o", str(out)]) == 0
    assert main(["check", str(out)]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 3
    assert all(line.startswith("Pass") for line in lines)


def test_sum_genus_mismatch(word_file, capsys):
    a = word_file("a.lfw", "genus: 2\nword: A\n")
    e = word_file("e.lfw", "genus: 1\nword: E(1)\n")
    assert main(["sum", a, e]) == 1
    assert capsys.readouterr().err != ""


def test_check_torelli_failure(word_file, capsys):
    path = word_file("sep.lfw", "genus: 2\nword: s1^3\n")
    code = main(["check", path])
    out = capsys.readouterr().out
    assert code == 2
    assert "NotRealizable" in out
    assert "Fail torelli_realizable" in out


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 5
    assert all(line.startswith("Pass") for line in lines)


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["analyze"]) == 1
    assert main(["generate", "--family", "Z"]) == 1
    capsys.readouterr()
