import csv
import json

import pytest

from hookcert.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_payload(capsys):
    code, out, _ = _run(capsys, "dims", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 4
    assert sorted(int(d) for d in payload["full"]) == [1, 2, 3]
    assert sorted(int(d) for d in payload["halved"]) == [1, 3]
    assert payload["differ"] is True


def test_dims_rejects_out_of_band(capsys):
    code, _, err = _run(capsys, "dims", "--n", "2")
    assert code == 2
    assert "error" in err.lower()


def test_witness_small(capsys):
    code, out, _ = _run(capsys, "witness", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["witness"] == [3, 1, 1]
    assert payload["dim_full"] == "6"
    assert payload["dim_half"] == "3"
    assert payload["separates"] is True


def test_witness_tiny_weight_uses_degree_sets(capsys):
    code, out, _ = _run(capsys, "witness", "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "degree-sets"
    assert payload["separates"] is True


def test_witness_beyond_certified_range(capsys):
    code, _, err = _run(capsys, "witness", "--n", "700")
    assert code == 2
    assert "certified" in err


def test_naive_single_weight(capsys):
    code, out, _ = _run(capsys, "naive", "--k", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("k=3 even: verified")
    assert "witness=[4,2,1,1]" in lines[0]
    assert lines[1].startswith("k=3 odd: verified")
    assert "witness=[4,1,1,1]" in lines[1]


def test_report_schema_and_meta(tmp_path, capsys):
    path = tmp_path / "band.jsonl"
    code, _, _ = _run(
        capsys,
        "verify-fact",
        "--k-min", "35", "--k-max", "36",
        "--parity", "both",
        "--report", str(path),
        "--canonical",
    )
    assert code == 0
    lines = path.read_text().splitlines()
    meta = json.loads(lines[0])["meta"]
    assert meta["k_min"] == 35 and meta["k_max"] == 36
    assert "workers" not in meta
    recs = [json.loads(line) for line in lines[1:]]
    assert [(r["parity"], r["k"]) for r in recs] == [
        ("even", 35), ("even", 36), ("odd", 35), ("odd", 36),
    ]
    for r in recs:
        assert r["status"] == "verified"
        assert r["millis"] == 0  # canonical zeroes timings
        assert r["counterexamples"] == []
        assert r["tuples"] > 0 and r["partitions"] > 0
        assert r["claim"] == "fact" and r["method"] == "pruned"
        assert isinstance(r["prime_sub"], list) and len(r["prime_sub"]) == 2


def test_canonical_reports_are_worker_count_invariant(tmp_path, capsys):
    paths = []
    for workers in ("1", "2"):
        path = tmp_path / f"w{workers}.jsonl"
        code, _, _ = _run(
            capsys,
            "verify-fact",
            "--k-min", "35", "--k-max", "38",
            "--workers", workers,
            "--report", str(path),
            "--canonical",
        )
        assert code == 0
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_resume_completes_a_partial_report(tmp_path, capsys):
    path = tmp_path / "resume.jsonl"
    _run(capsys, "verify-fact", "--k-min", "35", "--k-max", "35",
         "--report", str(path), "--canonical")
    code, _, _ = _run(
        capsys,
        "verify-fact",
        "--k-min", "35", "--k-max", "37",
        "--report", str(path),
        "--resume", "--canonical",
    )
    assert code == 0
    recs = [json.loads(l) for l in path.read_text().splitlines()[1:]]
    assert [(r["parity"], r["k"]) for r in recs] == [
        ("even", 35), ("even", 36), ("even", 37),
        ("odd", 35), ("odd", 36), ("odd", 37),
    ]


def test_csv_report(tmp_path, capsys):
    path = tmp_path / "band.csv"
    code, _, _ = _run(
        capsys,
        "verify-fact",
        "--k-min", "35", "--k-max", "35", "--parity", "odd",
        "--report", str(path), "--format", "csv", "--canonical",
    )
    assert code == 0
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows[0]["k"] == "35" and rows[0]["status"] == "verified"


def test_scan_gaps_verdicts(capsys):
    code, out, _ = _run(capsys, "scan-gaps", "--from", "337", "--to", "600")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "11 exceptions in [337, 600]"
    body = lines[:-1]
    ks = [int(line.split(":")[0].removeprefix("k=")) for line in body]
    assert ks == [337, 467, 468, 509, 523, 524, 525, 526, 527, 528, 529]
    assert all(line.endswith("discharged") for line in body)
    assert body[0] == "k=337: next prime 347 (gap 10 > window 9), discharged"


def test_bad_arguments_exit_2(capsys):
    assert _run(capsys, "verify-fact", "--k-min", "1")[0] == 2
    assert _run(capsys, "verify-fact", "--k-max", "400")[0] == 2
    assert _run(capsys, "naive", "--k", "90")[0] == 2
