from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from stt_forest import cli
from stt_forest.bench import TSV_HEADER, RunReport, run, write_tsv
from stt_forest.workloads import gen_urc


def rows(text: str) -> list[list[str]]:
    return [line.split("\t") for line in text.strip().splitlines()]


def test_bench_urc_to_stdout(capsys):
    assert cli.main(["bench", "urc", "--impl", "all", "--n", "64", "--m", "500"]) == 0
    table = rows(capsys.readouterr().out)
    assert tuple(table[0]) == TSV_HEADER
    names = [r[0] for r in table[1:]]
    assert names[0] == "link-cut" and "oracle" in names and len(names) == 11
    assert len({r[6] for r in table[1:]}) == 1


def test_bench_to_file_parallel_and_repeats(tmp_path):
    out = tmp_path / "t.tsv"
    argv = ["bench", "degenerate", "--impl", "greedy,mtr", "--n", "200", "--repeats", "3",
            "--parallel", "--out", str(out)]
    assert cli.main(argv) == 0
    table = rows(out.read_text())
    assert [r[0] for r in table[1:]] == ["greedy", "mtr"]
    assert all(r[1] == "degenerate" and r[3] == "399" for r in table[1:])


def test_bench_rooted_and_weights(capsys):
    assert cli.main(["bench", "lca", "--impl", "all", "--n", "50", "--evert"]) == 0
    table = rows(capsys.readouterr().out)
    assert {r[0] for r in table[1:]} == {"greedy", "2p", "l2p", "mtr", "link-cut", "simple"}
    assert all(r[1] == "lca-evert" for r in table[1:])
    assert len({r[6] for r in table[1:]}) == 1
    assert cli.main(["bench", "noisy", "--impl", "l2p", "--n", "300", "--sigma", "30",
                     "--weights", "sum", "--engine", "python"]) == 0


def test_bench_unknown_impl(capsys):
    assert cli.main(["bench", "urc", "--impl", "splay-9000", "--n", "10", "--m", "10"]) == 2
    assert "unknown" in capsys.readouterr().err
    assert cli.main(["bench", "lca", "--impl", "1-cut", "--n", "10"]) == 2


def test_verify_passes(capsys):
    assert cli.main(["verify", "--n", "40", "--m", "800", "--seeds", "2", "--rooted"]) == 0
    assert "all implementations match" in capsys.readouterr().out
    assert cli.main(["verify", "--n", "40", "--m", "800", "--weights", "max"]) == 0


def test_verify_reports_mismatch(monkeypatch, capsys):
    real = cli.run

    def broken(script, impl, *a, **kw):
        rep = real(script, impl, *a, **kw)
        if impl.name == "l2p":
            rep.checksum ^= 1
        return rep

    monkeypatch.setattr(cli, "run", broken)
    assert cli.main(["verify", "--n", "30", "--m", "300"]) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_msf_random_and_synthetic(capsys):
    assert cli.main(["msf", "--random", "--n", "200", "--m", "1000", "--impl", "stable-greedy,link-cut"]) == 0
    table = rows(capsys.readouterr().out)
    assert tuple(table[0]) == cli.MSF_HEADER
    assert [r[0] for r in table[1:]] == ["stable-greedy", "link-cut", "kruskal"]
    assert len({r[4] for r in table[1:]}) == 1
    assert cli.main(["msf", "--synthetic", "--n", "100", "--impl", "mtr"]) == 0


def test_msf_input_file(tmp_path, capsys):
    path = tmp_path / "c.txt"
    path.write_text("a b 2000\nb c 2000\na c 2001\na c 2002\n")
    assert cli.main(["msf", "--input", str(path), "--impl", "greedy"]) == 0
    table = rows(capsys.readouterr().out)
    assert table[1][4] == str(2 * 2**32 - 3)  # a-c twice (W-2) plus one W-1 edge
    bad = tmp_path / "bad.txt"
    bad.write_text("a b 2001\na c 2000\n")
    assert cli.main(["msf", "--input", str(bad)]) == 2


def test_run_report_row():
    r = RunReport("x", "urc", 10, 20, 1.5, 7, 255)
    assert r.row() == "x\turc\t10\t20\t1.5000\t7\t00000000000000ff"
    with pytest.raises(ValueError):
        run(gen_urc(4, 4, 0), "greedy", repeats=0)


def test_write_tsv_without_header():
    import io

    buf = io.StringIO()
    write_tsv([RunReport("x", "urc", 1, 1, 0.0, 0, 0)], buf, header=False)
    assert buf.getvalue().count("\n") == 1


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "stt_forest", "bench", "urc", "--impl", "greedy", "--n", "20", "--m", "50"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.startswith("impl\tworkload")


def test_experiment_script_quick(tmp_path):
    script = Path(__file__).parent.parent / "scripts" / "run_experiments.py"
    subprocess.run(
        [sys.executable, str(script), "--quick", "--only", "degenerate,noisy", "--out", str(tmp_path)],
        check=True, capture_output=True,
    )
    assert rows((tmp_path / "noisy.tsv").read_text())[0] == list(TSV_HEADER)
    assert (tmp_path / "degenerate.tsv").exists()
