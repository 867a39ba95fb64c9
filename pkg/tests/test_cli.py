from __future__ import annotations

import csv
import json
import shutil
import subprocess

import pytest

from t1p.cli import main, read_expected
from t1p.families import catalog_small, gen_planted_t1p
from t1p.io import format_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, g=None, text=None):
        p = tmp_path / name
        p.write_text(text if text is not None else format_edge_list(g))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_k5(capsys, write):
    code, out, _ = run(capsys, "recognize", write("k5.txt", catalog_small("K5")))
    obj = json.loads(out)
    assert code == 0 and obj["is_t1p"] and obj["count"] == 15
    assert len(obj["witness"]["crossings"]) == 1


def test_recognize_text(capsys, write):
    code, out, _ = run(capsys, "recognize", write("k5.txt", catalog_small("K5")), "--format", "text")
    assert out.strip() == "T1P: yes  embeddings: 15  crossings: 1"


def test_recognize_k7_rejected(capsys, write):
    code, out, _ = run(capsys, "recognize", write("k7.txt", catalog_small("K7")))
    assert code == 1
    assert json.loads(out) == {"count": 0, "is_t1p": False, "reason": "contains K7",
                               "schema": 1, "trace_len": 0, "witness": None}


def test_empty_input(capsys, write):
    code, _, err = run(capsys, "recognize", write("empty.txt", text=""))
    assert code == 2 and "no edges" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "count", str(tmp_path / "none.txt"))
    assert code == 2 and "cannot read" in err


def test_count_text(capsys, write):
    code, out, _ = run(capsys, "count", write("h6.txt", catalog_small("H6")), "--format", "text")
    assert (code, out.strip()) == (0, "6")


def test_oracle_match(capsys, write):
    code, out, _ = run(capsys, "oracle", write("h7.txt", catalog_small("H7")), "--format", "text")
    assert code == 0
    assert out.splitlines() == ["oracle: 4", "pipeline: 4", "MATCH"]


def test_oracle_too_large(capsys, write):
    g = gen_planted_t1p(14, 3, seed=1).graph
    code, _, _ = run(capsys, "oracle", write("big.txt", g), "--oracle-limit", "10")
    assert code == 2


def test_witness_and_trace(capsys, write, tmp_path):
    out_path, trace_path = tmp_path / "w.json", tmp_path / "t.jsonl"
    g = gen_planted_t1p(15, 4, seed=2).graph
    code, _, _ = run(capsys, "witness", write("g.txt", g), "-o", str(out_path),
                     "--trace", str(trace_path))
    assert code == 0
    assert set(json.loads(out_path.read_text())) == {"skeleton_rotations", "crossings"}
    lines = trace_path.read_text().splitlines()
    assert lines and all("kind" in json.loads(x) for x in lines)


def test_witness_rejected(capsys, write):
    code, out, err = run(capsys, "witness", write("h1.txt", catalog_small("H1")))
    assert code == 1 and out == "" and "no witness" in err


def test_time_budget_exit(capsys, write):
    g = gen_planted_t1p(40, 15, seed=1).graph
    code, _, err = run(capsys, "recognize", write("g.txt", g), "--time-budget", "0")
    assert code == 3 and "timeout" in err


def test_generate_two_star(capsys):
    code, out, _ = run(capsys, "generate", "two-star", "full", "6")
    assert code == 0 and len(out.splitlines()) == 24


def test_generate_triangulation(capsys):
    code, out, _ = run(capsys, "generate", "triangulation", "100", "--seed", "7")
    assert len(out.splitlines()) == 294
    _, again, _ = run(capsys, "generate", "triangulation", "100", "--seed", "7")
    assert out == again


def test_generate_errors(capsys):
    assert run(capsys, "generate", "two-star", "nope", "6")[0] == 2
    assert run(capsys, "generate", "catalog", "K9")[0] == 2
    assert run(capsys, "generate", "moebius", "3")[0] == 2


def test_generate_planted_shortfall(capsys):
    code, out, err = run(capsys, "generate", "planted", "6", "9")
    assert code == 0 and "placed only" in err and out


def test_read_expected_header(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("# expected_count: 7\n0 1\n")
    assert read_expected(p) == 7
    p.write_text("0 1\n")
    assert read_expected(p) is None


def test_corpus_with_reports(capsys, write, tmp_path):
    write("k5.txt", catalog_small("K5"))
    write("h1.txt", catalog_small("H1"))
    write("h7.txt", text="# expected_count: 4\n" + format_edge_list(catalog_small("H7")))
    write("notes.md", text="ignored")
    csv_path, png_path = tmp_path / "out.csv", tmp_path / "out.png"
    code, out, _ = run(capsys, "corpus", str(tmp_path), "--csv", str(csv_path),
                       "--plot", str(png_path))
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["name"] for r in rows] == ["h1.txt", "h7.txt", "k5.txt"]
    assert all(r["status"] == "MATCH" for r in rows)
    with open(csv_path) as fh:
        table = list(csv.DictReader(fh))
    assert [r["count"] for r in table] == ["0", "4", "15"]
    assert png_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_corpus_mismatch(capsys, write, tmp_path):
    write("k5.txt", text="# expected_count: 3\n" + format_edge_list(catalog_small("K5")))
    code, out, _ = run(capsys, "corpus", str(tmp_path), "--format", "text")
    assert code == 1 and "MISMATCH" in out


def test_corpus_timeout(capsys, write, tmp_path):
    write("g.txt", gen_planted_t1p(40, 15, seed=1).graph)
    code, out, _ = run(capsys, "corpus", str(tmp_path), "--time-budget", "0")
    assert code == 3 and json.loads(out)["rows"][0]["status"] == "TIMEOUT"


def test_corpus_bad_directory(capsys, tmp_path):
    assert run(capsys, "corpus", str(tmp_path / "nope"))[0] == 2
    assert run(capsys, "corpus", str(tmp_path))[0] == 2


def test_bench(capsys, tmp_path):
    code, out, _ = run(capsys, "bench", "30", "60", "--csv", str(tmp_path / "b.csv"))
    assert code == 0 and "log-log slope" in out
    assert (tmp_path / "b.csv").read_text().count("\n") == 3


@pytest.mark.skipif(shutil.which("t1p") is None, reason="console script not installed")
def test_console_script(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(format_edge_list(catalog_small("K4")))
    done = subprocess.run(["t1p", "count", str(p), "--format", "text"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "4"
