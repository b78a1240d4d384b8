import io
import json

import pytest

from cycloclass.cli import main
from cycloclass.norm_solver import NormVerdict
from cycloclass.stickelberger import ResidueGenerationVerdict


def run(argv) -> tuple[int, str]:
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_resgen_23_human():
    code, text = run(["resgen", "--ell", "23"])
    assert code == 0
    assert "R = {1}" in text
    lines = text.splitlines()
    assert lines[0].startswith("ell=23 f=1: IN_R")
    assert "f=2: NOT_IN_R" in lines[1]
    assert "f=11: NOT_IN_R" in lines[2]
    assert "f=22: NOT_IN_R" in lines[3]


def test_resgen_single_f_json_round_trip():
    code, text = run(["resgen", "--ell", "23", "--f", "11", "--json"])
    assert code == 0
    assert text.endswith("\n")
    verdict = ResidueGenerationVerdict.from_dict(json.loads(text))
    assert verdict.status == "NOT_IN_R"
    assert verdict.tested_element == "{1,5}"
    assert json.dumps(verdict.to_dict()) + "\n" == text


def test_resgen_rejects_non_prime():
    code, _ = run(["resgen", "--ell", "4"])
    assert code == 2


def test_resgen_rejects_large_ell_without_flag(tmp_path):
    # not in the shipped table at all
    code, _ = run(["resgen", "--ell", "103"])
    assert code == 2
    # present in a custom table, but ell >= 100 still needs the flag
    alt = tmp_path / "t.txt"
    alt.write_text("103 1 9069094643165\n")
    code, _ = run(["resgen", "--ell", "103", "--table", str(alt)])
    assert code == 2
    code, text = run(
        ["resgen", "--ell", "103", "--table", str(alt), "--assume-h-plus-one"]
    )
    assert code == 0
    assert "h_plus_equals_one" in text


def test_resgen_tsv_header():
    code, text = run(["resgen", "--ell", "23", "--tsv"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "ell\tf\tstatus\treason\tassumptions"
    assert lines[1].startswith("23\t1\tIN_R")


def test_scan_tsv_rows():
    code, text = run(["scan", "--ell-min", "3", "--ell-max", "29", "--tsv"])
    assert code == 0
    lines = text.splitlines()
    assert "23\t2\tNOT_IN_R\tcoset_trace_not_in_ideal\t" in text
    assert any(line.startswith("29\t14\tNOT_IN_R") for line in lines)
    # rows sorted by (ell, f)
    keys = [tuple(map(int, ln.split("\t")[:2])) for ln in lines[1:]]
    assert keys == sorted(keys)


def test_scan_small_range_all_in_r():
    code, text = run(["scan", "--ell-min", "3", "--ell-max", "19", "--tsv"])
    assert code == 0
    rows = text.splitlines()[1:]
    assert rows
    assert all(row.split("\t")[2] == "IN_R" for row in rows)


def test_scan_empty_range():
    code, text = run(["scan", "--ell-min", "24", "--ell-max", "28", "--tsv"])
    assert code == 0
    assert text.splitlines() == ["ell\tf\tstatus\treason\tassumptions"]


def test_scan_parallel_matches_serial():
    serial = run(["scan", "--ell-min", "3", "--ell-max", "31", "--json"])
    parallel = run(
        ["scan", "--ell-min", "3", "--ell-max", "31", "--json", "--parallel", "2"]
    )
    assert serial == parallel
    assert serial[0] == 0


def test_scan_json_lines_parse():
    code, text = run(["scan", "--ell-min", "23", "--ell-max", "23", "--json"])
    assert code == 0
    verdicts = [
        ResidueGenerationVerdict.from_dict(json.loads(line))
        for line in text.splitlines()
    ]
    assert [v.f for v in verdicts] == [1, 2, 11, 22]


def test_stickelberger_basis_output():
    code, text = run(["stickelberger", "--ell", "23", "basis"])
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 12  # f_1..f_11 and N
    assert lines[0].endswith("{2,5,9,11,13,15,16,17,19,20,22}")
    assert lines[-1].startswith("   N")


def test_stickelberger_member_not_in_ideal():
    code, text = run(["stickelberger", "--ell", "23", "member", "--element", "{1,5}"])
    assert code == 0
    assert "NOT in the Stickelberger ideal" in text


def test_stickelberger_member_trace():
    code, text = run(["stickelberger", "--ell", "23", "member", "--element", "N"])
    assert code == 0
    assert "is in the Stickelberger ideal" in text
    assert "1*N" in text


def test_stickelberger_member_json():
    code, text = run(
        ["stickelberger", "--ell", "23", "member", "--element", "{1,5}", "--json"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["membership"]["tag"] == "not_in_ideal"


def test_stickelberger_member_parse_error():
    code, _ = run(["stickelberger", "--ell", "23", "member", "--element", "{1,"])
    assert code == 2


def test_norm_check_examples():
    code, text = run(["norm-check", "--ell", "23", "--a", "2048"])
    assert code == 0 and "SOLVABLE" in text.splitlines()[0]
    code, text = run(["norm-check", "--ell", "23", "--a", "-1"])
    assert code == 0 and "NOT_SOLVABLE" in text
    code, text = run(["norm-check", "--ell", "23", "--a", "1/2048", "--json"])
    assert code == 0
    verdict = NormVerdict.from_dict(json.loads(text))
    assert verdict.status == "SOLVABLE"
    assert json.dumps(verdict.to_dict()) + "\n" == text


def test_norm_check_parse_error():
    code, _ = run(["norm-check", "--ell", "23", "--a", "junk"])
    assert code == 2


def test_env_var_table(tmp_path, monkeypatch):
    alt = tmp_path / "tiny.txt"
    alt.write_text("23 1 3\n")
    monkeypatch.setenv("STICKELBERGER_TABLE", str(alt))
    code, _ = run(["resgen", "--ell", "23"])
    assert code == 0
    code, _ = run(["resgen", "--ell", "5"])  # absent from override table
    assert code == 2


def test_report_matches_golden(golden_dir):
    code, text = run(["report", "--ell", "23"])
    assert code == 0
    assert text == (golden_dir / "report_ell23.txt").read_text()


def test_kummer_supports_match_golden(golden_dir):
    code, text = run(["stickelberger", "--ell", "23", "basis", "--tsv"])
    assert code == 0
    got = {}
    for line in text.splitlines()[1:]:
        _, name, support = line.split("\t")
        got[name] = support
    expected = {}
    for line in (golden_dir / "kummer_supports_ell23.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        name, support = line.split("\t")
        expected[name] = support
    assert got == expected
