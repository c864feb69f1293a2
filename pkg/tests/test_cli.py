import subprocess
import sys

import pytest

from junctionlab.cli import (
    bfile_lines,
    build_flowchart,
    ceil_shaded_arc_rows,
    check_dot_text,
    flowchart_dot,
    lint_flowchart,
    main,
    parse_number,
)


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "junctionlab.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_parse_number():
    assert parse_number("101", 10) == 101
    assert parse_number("10^{13}+1", 10) == 10**13 + 1
    assert parse_number("2^{12}+6", 2) == 4102
    with pytest.raises(Exception):
        parse_number("garbage", 10)


def test_gen_and_count(capsys):
    assert main(["gen", "--base", "10", "10^{13}+1"]) == 0
    out = capsys.readouterr().out
    assert out == "9999999999892\n9999999999901\n10000000000000\n"
    assert main(["count", "--base", "10", "101"]) == 0
    assert capsys.readouterr().out == "2\n"
    assert main(["gen", "--base", "10", "1"]) == 0
    assert capsys.readouterr().out == ""


def test_streams_and_bfile(capsys):
    assert main(["self", "--base", "10", "--limit", "5"]) == 0
    assert capsys.readouterr().out == "1\n3\n5\n7\n9\n"
    assert main(["junction", "--base", "10", "--limit", "2", "--bfile"]) == 0
    assert capsys.readouterr().out == "1 101\n2 103\n"
    rc, _, err = run_cli("self", "--base", "10", "--limit", "0")
    assert rc == 2 and "limit" in err


def test_bfile_format():
    text = bfile_lines([5, 7, 11], offset=1)
    assert text == "1 5\n2 7\n3 11\n"
    assert not any(line != line.rstrip() for line in text.splitlines())


def test_ktable_output(capsys):
    assert main(["ktable", "--base", "10", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "10^{24}+102" in out
    assert main(["ktable", "--base", "2", "--n", "16"]) == 0
    out = capsys.readouterr().out
    assert "2^{8207}+8208" in out
    assert main(["ktable", "--base", "6", "--n", "3"]) == 0
    out = capsys.readouterr().out
    for s in ["6^{9}+44", "6^{9}+5", "6^{9}+1", "6^{9}+7", "6^{9}+3"]:
        assert s in out


def test_ktable_decimal_never_truncates(capsys):
    assert main(["ktable", "--base", "10", "--n", "5", "--format", "decimal"]) == 0
    out = capsys.readouterr().out
    assert str(10**24 + 102) in out
    assert "<overflow>" in out  # rows at n=5 exceed the digit budget
    assert "..." not in out


def test_ktable_quasi(capsys):
    assert main(["ktable", "--base", "10", "--n", "8", "--format", "quasi"]) == 0
    out = capsys.readouterr().out
    assert "C(8)+C(4)+C(2)+K_0(1)" in out


def test_flowchart_file_output(tmp_path):
    out = tmp_path / "chart.gv"
    assert main(["flowchart", "--base", "2", "--n", "4", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("digraph junction_b2 {")
    assert check_dot_text(text) == []
    assert "K_b2_n1_i0" in text and "E_b2_n4" in text


def test_flowchart_structure_all_bases():
    for b in range(2, 11):
        ch = build_flowchart(b, 16)
        assert lint_flowchart(ch) == []
        assert check_dot_text(flowchart_dot(ch)) == []


def test_flowchart_shaded_arc_absences():
    for b, absent in [(4, {13, 15, 16}), (7, {13, 15, 16}),
                      (9, {8, 9, 10, 11, 12, 13, 14, 16})]:
        ch = build_flowchart(b, 16)
        assert set(ch.enodes) - ceil_shaded_arc_rows(ch) == absent
    ch = build_flowchart(2, 2)
    assert len(ch.knodes) == 2 and ch.enodes == [2]


def test_flowchart_determinism(tmp_path):
    a = flowchart_dot(build_flowchart(5, 10))
    b = flowchart_dot(build_flowchart(5, 10))
    assert a == b


def test_verify_suite_exit_codes():
    rc, out, _ = run_cli("verify", "--suite", "fixtures")
    assert rc == 0 and "8/8 checks passed" in out
    rc, out, _ = run_cli("verify", "--suite", "oracle", "--base", "4", "--limit", "5000")
    assert rc == 0 and "[PASS] oracle b=4" in out


def test_out_flag_writes_file(tmp_path):
    path = tmp_path / "selfs.txt"
    assert main(["self", "--base", "10", "--limit", "5", "--out", str(path)]) == 0
    assert path.read_text() == "1\n3\n5\n7\n9\n"


def test_cache_cap_env(monkeypatch):
    import junctionlab.inverse as inv

    monkeypatch.setenv("JUNCTIONLAB_CACHE_CAP", "4")
    inv._CACHE_CAP_READ = False
    inv.clear_cache()
    try:
        for u in range(200, 260):
            inv.count_generators(u, 10)
        assert len(inv._F_CACHE[10]) <= 4
    finally:
        inv.set_cache_cap(None)
        inv.clear_cache()
    assert inv.count_generators(101, 10) == 2
