import json

import pytest

from dicksonperm import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    records = [json.loads(line) for line in out.strip().splitlines()]
    return code, records


def test_eval_text(capsys):
    assert run(capsys, "eval", "3", "1", "5", "2") == (0, "2\n", "")
    assert run(capsys, "eval", "1", "1", "99", "41")[1] == "41\n"
    assert run(capsys, "eval", "0", "1", "10", "7")[1] == "2\n"
    assert run(capsys, "eval", "3", "1", "5", "2", "--recurrence")[1] == "2\n"


def test_eval_json_round_trips(capsys):
    code, records = run_json(capsys, "eval", "6", "1", "1000000000", "3")
    assert code == 0
    (rec,) = records
    assert rec["result"]["value"] == "322"
    assert rec["inputs"] == {"k": "6", "a": "1", "n": "1000000000", "u": "3"}
    assert rec["method"] == "fast"
    assert json.loads(json.dumps(rec)) == rec
    # integer payloads stay strings so 53-bit JSON consumers cannot truncate
    assert all(isinstance(v, str) for v in rec["inputs"].values())


def test_eval_check_modes(capsys):
    code, out, _ = run(capsys, "eval", "12345", "1", "997", "5", "--check")
    assert code == 0

    broken = lambda p, u: 0
    orig = cli.eval_fast
    cli.eval_fast = broken
    try:
        code, _, err = run(capsys, "eval", "3", "1", "5", "2", "--check")
    finally:
        cli.eval_fast = orig
    assert code == 3
    assert "MISMATCH" in err


def test_is_perm(capsys):
    assert run(capsys, "is-perm", "3", "5")[1] == "no\n"
    assert run(capsys, "is-perm", "5", "7")[1] == "yes\n"
    assert run(capsys, "is-perm", "7", "15", "--method", "brute")[1] == "yes\n"
    code, records = run_json(capsys, "is-perm", "5", "7", "--method", "v")
    assert records[0]["result"]["is_permutation"] is True
    assert records[0]["method"] == "gcd_v"


def test_profile(capsys):
    code, out, _ = run(capsys, "profile", "15")
    assert code == 0
    assert "w=12" in out and "v=24" in out
    code, records = run_json(capsys, "profile", "8")
    assert records[0]["result"] == {"n": "8", "e": "3", "l0": "6", "ls": [], "w": "6", "v": "12"}


def test_solve(capsys):
    assert run(capsys, "solve", "2", "6", "5", "9")[1] == "x = 14 (mod 18)\n"
    assert run(capsys, "solve", "1", "4", "2", "6")[1] == "no solution\n"
    code, _, err = run(capsys, "solve", "2", "6", "5")
    assert code == 2 and "pairs" in err


def test_kernel(capsys):
    code, out, _ = run(capsys, "kernel", "15")
    assert code == 0
    assert "{1, 5, 7, 11}" in out

    code, out, _ = run(capsys, "kernel", "8")
    assert "{1, 5}" in out

    code, records = run_json(capsys, "kernel", "45", "--witnesses")
    rec = records[0]
    assert rec["result"]["kernel"] == ["1", "11"]
    assert rec["result"]["witnesses"]["11"] == ["11", "11"]


def test_order(capsys):
    code, records = run_json(capsys, "order", "7")
    assert records[0]["result"]["order"] == "2"
    assert records[0]["method"] == "closed_form"  # auto picks closed for primes

    code, records = run_json(capsys, "order", "105")
    assert records[0]["result"]["order"] == "2"
    assert records[0]["method"] == "kernel_enum"

    code, records = run_json(capsys, "order", "1")
    assert records[0]["result"]["order"] == "1"
    assert records[0]["method"] == "trivial"

    code, records = run_json(capsys, "order", "45", "--method", "oracle")
    assert records[0]["result"]["order"] == "2"


def test_order_error_codes(capsys):
    code, _, err = run(capsys, "order", "2500", "--method", "oracle")
    assert code == 5  # past the oracle cap

    code, _, err = run(capsys, "order", str(1000000007 * 1000000009))
    assert code == 4  # w(n) overflows the 63-bit range

    code, _, err = run(capsys, "order", "45", "--method", "closed")
    assert code == 2


def test_table_with_input_file(tmp_path, capsys):
    src = tmp_path / "ns.txt"
    src.write_text("7\n105\n")
    # batch input emits one JSON record per line without needing --json
    code, out, _ = run(capsys, "table", "--input", str(src))
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert code == 0
    assert [r["result"]["n"] for r in records] == ["7", "105"]
    assert [r["result"]["order"] for r in records] == ["2", "2"]
    assert all(r["elapsed_ms"] >= 0 for r in records)


def test_table_csv_and_figures(tmp_path, capsys):
    out_csv = tmp_path / "orders.csv"
    figdir = tmp_path / "figs"
    code = cli.main(["table", "--min", "2", "--max", "40",
                     "--out", str(out_csv), "--figures", str(figdir)])
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "n,w,phi_w,kernel_size,order,method"
    assert len(lines) == 40  # header + rows for 2..40
    pngs = sorted(p.name for p in figdir.glob("*.png"))
    assert pngs == ["group_order_vs_n.png", "kernel_size_counts.png"]
    assert all((figdir / p).stat().st_size > 1000 for p in pngs)
    capsys.readouterr()


def test_table_csv_stdout(capsys):
    code, out, _ = run(capsys, "table", "--min", "2", "--max", "5")
    rows = out.strip().splitlines()
    assert rows[0].startswith("n,") and len(rows) == 5


def test_table_requires_bounds(capsys):
    code, _, err = run(capsys, "table")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "25")
    assert code == 0
    assert "PASS" in out

    code, _, err = run(capsys, "verify", "--max-n", "99999")
    assert code == 5


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["order"])  # missing n
    assert exc.value.code == 2
    capsys.readouterr()

    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()
