import json

import pytest

from signed_eulerian.cli import main, parse_table_csv, parse_table_json
from signed_eulerian.triangles import bundle

from conftest import GOLDEN_B


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_table_pretty_row(capsys):
    status, out = run(capsys, "table", "--kind", "D", "--n-max", "10")
    assert status == 0
    row9 = next(line for line in out.splitlines() if line.strip().startswith("n = 9"))
    assert row9.split("|")[1].split() == ["1", "22", "-32", "-86", "190", "-86", "-32", "22", "1"]


def test_table_paper_range_starts_at_two(capsys):
    _, out = run(capsys, "table", "--kind", "B", "--paper-range")
    rows = [line for line in out.splitlines() if "n =" in line]
    assert rows[0].strip().startswith("n = 2") and len(rows) == 9
    for line in rows:
        n = int(line.split("|")[0].split("=")[1])
        assert [int(v) for v in line.split("|")[1].split()] == GOLDEN_B[n]


def test_table_csv(capsys):
    _, out = run(capsys, "table", "--kind", "B", "--n-max", "2", "--format", "csv")
    assert out == "# kind=B n=1\n1,\n# kind=B n=2\n0,1\n"
    _, out = run(capsys, "table", "--kind", "A", "--n-max", "1")
    assert out.splitlines()[-1].split("|")[1].split() == ["1"]


@pytest.mark.parametrize("kind", "ABCD")
def test_table_round_trips(capsys, kind):
    _, text = run(capsys, "table", "--kind", kind, "--n-max", "30", "--format", "csv")
    assert parse_table_csv(text) == bundle(30)[kind]
    _, text = run(capsys, "table", "--kind", kind, "--n-max", "30", "--format", "json")
    doc = json.loads(text)
    assert set(doc) == {"meta", "kind", "rows"}
    assert all(isinstance(v, str) for r in doc["rows"] for v in r["values"])
    assert parse_table_json(text) == bundle(30)[kind]


def test_table_out_path(capsys, tmp_path):
    target = tmp_path / "d.csv"
    status, out = run(capsys, "table", "--kind", "D", "--n-max", "5", "--format", "csv",
                      "--out", str(target))
    assert status == 0 and out == ""
    assert parse_table_csv(target.read_text()) == bundle(5).D


def test_bad_flags_exit_2(capsys):
    assert usage_error(capsys, "table", "--kind", "E") == 2
    assert usage_error(capsys, "table", "--kind", "A", "--n-max", "0") == 2
    assert usage_error(capsys, "nonsense") == 2
    assert usage_error(capsys, "verify", "--threads", "0") == 2


def test_verify_all_passes(capsys):
    status, out = run(capsys, "verify", "--suite", "all", "--n-max", "9")
    assert status == 0
    assert out.rstrip().endswith("RESULT: PASS")
    for suite in ("symmetry", "odd-recurrence", "even-cross", "oracle", "thm3.1", "thm5.1",
                  "cor3.2", "cor4.3", "divisibility"):
        assert f"\n{suite}: " in out


def test_verify_divisibility_pair(capsys):
    status, out = run(capsys, "verify", "--suite", "divisibility", "--n", "9", "--p", "3")
    assert status == 0
    assert "9 | 2133" in out and "27 | 12798" in out


@pytest.mark.parametrize("argv", [["--n", "9"], ["--n", "9", "--p", "5"], ["--n", "8", "--p", "2"]])
def test_verify_divisibility_guards(capsys, argv):
    assert usage_error(capsys, "verify", "--suite", "divisibility", *argv) == 2


def test_verify_fault_injection(capsys):
    status, out = run(capsys, "verify", "--suite", "symmetry", "--n-max", "10",
                      "--inject-fault", "B:8:2", "--format", "json")
    assert status == 1
    doc = json.loads(out)
    assert [(v["n"], v["k"]) for v in doc["violations"]] == [(8, 2)]
    assert usage_error(capsys, "verify", "--inject-fault", "B:8") == 2
    assert usage_error(capsys, "verify", "--inject-fault", "B:80:2") == 2


def test_verify_csv(capsys):
    status, out = run(capsys, "verify", "--suite", "even-cross", "--n-max", "4", "--format", "csv")
    lines = out.splitlines()
    assert status == 0
    assert lines[0] == "suite,identity,n,k,lhs,relation,rhs,ok"
    assert len(lines) == 1 + 2 * (2 + 4)


def test_orbit(capsys):
    status, out = run(capsys, "orbit", "1324", "--format", "json")
    doc = json.loads(out)["orbit"]
    assert status == 0
    assert (doc["period"], doc["k"], doc["sign_class"], doc["parity"], doc["d"]) == (8, 2, "-", "odd", 4)
    assert [m["permutation"] for m in doc["members"] if m["canonical"]] == ["1243", "1342", "1423", "1324"]
    _, out = run(capsys, "orbit", "12345", "--format", "json")
    assert json.loads(out)["orbit"]["period"] == 1
    _, out = run(capsys, "orbit", "14253", "--format", "json")
    per = json.loads(out)["orbit"]["period"]
    assert per % 3 == 0 and 5 % (per // 3) == 0
    status, out = run(capsys, "orbit", "1,10,2,3,4,5,6,7,8,9")
    assert status == 0 and "period" in out


@pytest.mark.parametrize("literal", ["1224", "12a", "0123"])
def test_orbit_rejects_bad_literal(capsys, literal):
    assert usage_error(capsys, "orbit", literal) == 2


def test_census(capsys):
    status, out = run(capsys, "census", "--n", "5", "--k", "2", "--format", "json")
    entry = json.loads(out)["census"][0]
    assert status == 0
    assert entry["alpha"] == {"1": 0, "5": 1} and entry["gamma"] == {"1": 1, "5": 1}
    assert all(ch["ok"] for ch in entry["checks"])
    status, out = run(capsys, "census", "--n", "5", "--k", "4")
    assert status == 0 and "PASS sum d alpha_d = B_{n-1,k-1} [n=5 k=4]: 1 == 1" in out
    status, out = run(capsys, "census", "--n", "7", "--format", "csv")
    assert status == 0 and out.startswith("n,k,tally,d,count\n")


def test_census_rejects_even_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census", "--n", "6", "--k", "2"])
    assert exc.value.code == 2
    assert "census requires odd n" in capsys.readouterr().err


def test_special(capsys):
    _, out = run(capsys, "special", "--n", "5", "--ell", "3", "--format", "json")
    assert json.loads(out)["special"] == {"n": 5, "ell": 3, "permutation": "14253",
                                          "inversions": 3, "epsilon": 0}
    _, out = run(capsys, "special", "--n", "5", "--ell", "1", "--format", "csv")
    assert out.splitlines()[1] == "5,1,12345,0,1"
    assert usage_error(capsys, "special", "--n", "9", "--ell", "3") == 2


def test_counts(capsys):
    status, out = run(capsys, "counts", "--n", "5", "--format", "csv")
    assert status == 0
    assert out.splitlines()[3] == "2,15,18,15,18,66,30,36,-6"
    assert usage_error(capsys, "counts", "--n", "11") == 2
