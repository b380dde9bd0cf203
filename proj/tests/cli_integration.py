#!/usr/bin/env python3
"""End-to-end checks of the charvar CLI: exit codes, schemas, determinism."""

import json
import subprocess
import sys

FAILURES = []


def run(*args):
    return subprocess.run(
        [BINARY, *args], capture_output=True, text=True, timeout=300
    )


def check(name, condition, detail=""):
    if condition:
        print(f"ok {name}")
    else:
        print(f"FAIL {name} {detail}")
        FAILURES.append(name)


def check_exit(name, expected, *args):
    r = run(*args)
    check(name, r.returncode == expected,
          f"expected exit {expected}, got {r.returncode}; stderr: {r.stderr.strip()[:200]}")
    return r


def test_betti_documents():
    r = check_exit("betti_x0_g2", 0, "betti", "--space", "X0", "--genus", "2")
    doc = json.loads(r.stdout)
    check("betti_x0_g2_values",
          doc["betti"] == ["1", "0", "1", "0", "1", "0", "17"], doc["betti"])
    check("betti_x0_g2_truncation", doc["truncation"] == "exact")
    check("betti_x0_g2_space", doc["space"] == "X0")
    check("betti_x0_g2_provenance",
          isinstance(doc["provenance"], list) and len(doc["provenance"]) >= 1)

    r = check_exit("betti_symprod", 0, "betti", "--space", "SymProd",
                   "--n", "1", "--genus", "4")
    doc = json.loads(r.stdout)
    check("betti_symprod_values", doc["betti"] == ["1", "8", "1"], doc["betti"])
    check("betti_symprod_label", doc["space"] == "SymProd(1)")

    r = check_exit("betti_x0eq_truncated", 0, "betti", "--space", "X0eq",
                   "--genus", "2", "--truncate", "6")
    doc = json.loads(r.stdout)
    check("betti_x0eq_values",
          doc["betti"] == ["1", "0", "1", "4", "2", "4", "23"], doc["betti"])
    check("betti_x0eq_truncation", doc["truncation"] == 6)

    r = check_exit("betti_truncated_poly", 0, "betti", "--space", "X0",
                   "--genus", "2", "--truncate", "3")
    doc = json.loads(r.stdout)
    check("betti_truncated_poly_values",
          doc["betti"] == ["1", "0", "1", "0"] and doc["truncation"] == 3)

    r = check_exit("betti_prymcover", 0, "betti", "--space", "PrymCover",
                   "--n", "0", "--genus", "2")
    doc = json.loads(r.stdout)
    check("betti_prymcover_values", doc["betti"] == ["16"], doc["betti"])

    r = check_exit("betti_req", 0, "betti", "--space", "Req", "--genus", "2",
                   "--truncate", "8")
    doc = json.loads(r.stdout)
    check("betti_req_values",
          doc["betti"] == ["1", "4", "8", "16", "33", "56", "85", "124", "163"],
          doc["betti"])

    r = check_exit("betti_csv", 0, "betti", "--space", "X0", "--genus", "2",
                   "--format", "csv")
    check("betti_csv_bytes",
          r.stdout == "degree,betti\n0,1\n1,0\n2,1\n3,0\n4,1\n5,0\n6,17\n",
          repr(r.stdout))

    r = check_exit("betti_latex", 0, "betti", "--space", "X0", "--genus", "2",
                   "--format", "latex")
    check("betti_latex_shape", r.stdout.startswith("\\begin{tabular}")
          and "6 & 17" in r.stdout)


def test_determinism():
    for i, args in enumerate((
        ("betti", "--space", "X0", "--genus", "5"),
        ("betti", "--space", "Xeq", "--genus", "3", "--truncate", "12"),
        ("torelli-table", "--genus", "3"),
        ("table1",),
        ("verify", "--genus-max", "5"),
    )):
        a = run(*args)
        b = run(*args)
        check(f"determinism_{i}_{args[0]}",
              a.returncode == b.returncode and a.stdout == b.stdout
              and a.stdout != "")


def test_exit_codes():
    check_exit("usage_unknown_space", 2, "betti", "--space", "Nope",
               "--genus", "2")
    check_exit("usage_low_genus", 2, "betti", "--space", "X0", "--genus", "1")
    check_exit("usage_genus_cap", 2, "betti", "--space", "X0", "--genus", "65")
    check_exit("usage_raised_cap", 0, "--genus-cap", "70", "betti", "--space",
               "R0", "--genus", "65")
    check_exit("usage_series_needs_truncate", 2, "betti", "--space", "X0eq",
               "--genus", "2")
    check_exit("usage_n_on_poly_space", 2, "betti", "--space", "X0",
               "--genus", "2", "--n", "1")
    check_exit("usage_missing_n", 2, "betti", "--space", "SymProd",
               "--genus", "2")
    check_exit("usage_odd_flags_space", 2, "betti", "--space", "PSLodd",
               "--genus", "2")
    check_exit("usage_unknown_option", 2, "betti", "--space", "X0",
               "--genus", "2", "--frobnicate")
    check_exit("usage_verify_low", 2, "verify", "--genus-max", "1")
    check_exit("usage_missing_subcommand", 2)
    check_exit("help_exits_zero", 0, "--help")
    check_exit("corrupted_betti", 3, "betti", "--space", "X0", "--genus", "3",
               "--corrupt-formula-hook")
    check_exit("corrupted_betti_series", 3, "betti", "--space", "X0eq",
               "--genus", "2", "--truncate", "4", "--corrupt-formula-hook")
    r = check_exit("corrupted_verify", 1, "verify", "--genus-max", "3",
                   "--corrupt-formula-hook")
    check("corrupted_verify_reports", "FAIL" in r.stdout and
          "c_polynomiality" in r.stdout, r.stdout[:200])


def test_verify():
    r = check_exit("verify_ok", 0, "verify", "--genus-max", "6")
    check("verify_ok_report", "all checks passed" in r.stdout, r.stdout[:200])
    seq = run("verify", "--genus-max", "6")
    par = run("verify", "--genus-max", "6", "--jobs", "3")
    check("verify_jobs_deterministic",
          seq.stdout == par.stdout and par.returncode == 0)


def test_torelli_tables():
    r = check_exit("torelli_even_g3", 0, "torelli-table", "--genus", "3")
    doc = json.loads(r.stdout)
    check("torelli_even_g3_truncation", doc["truncation"] == 12)
    rows = doc["decomposition"]
    check("torelli_even_g3_rows", len(rows) == 13, len(rows))
    by_degree = {row["degree"]: row for row in rows}
    check("torelli_even_g3_prym",
          by_degree[10]["prym"] == "378"
          and all(row["prym"] == "0" for d, row in by_degree.items() if d != 10))
    check("torelli_even_g3_invariant",
          by_degree[10]["total"] == "411" and by_degree[10]["invariant"] == "33")
    check("torelli_even_g3_flags",
          by_degree[10]["torelli_trivial"] is False
          and by_degree[10]["prym_torelli_trivial"] is True
          and by_degree[11]["torelli_trivial"] is True)
    check("torelli_even_g3_betti_column",
          doc["betti"][10] == "411" and doc["betti"][0] == "1")

    r = check_exit("torelli_odd_g2", 0, "torelli-table", "--genus", "2",
                   "--odd")
    doc = json.loads(r.stdout)
    rows = {row["degree"]: row for row in doc["decomposition"]}
    check("torelli_odd_g2_prym",
          rows[5]["prym"] == "30" and rows[5]["total"] is None
          and rows[6]["prym"] == "0")
    check("torelli_odd_g2_betti_empty", doc["betti"] == [])

    r = check_exit("torelli_csv", 0, "torelli-table", "--genus", "2", "--odd",
                   "--format", "csv")
    check("torelli_csv_unknowns", "5,unknown,unknown,30,false,true" in r.stdout,
          repr(r.stdout))
    check_exit("torelli_odd_truncate_rejected", 2, "torelli-table", "--genus",
               "2", "--odd", "--truncate", "8")


def test_table1():
    r = check_exit("table1_json", 0, "table1")
    doc = json.loads(r.stdout)
    rows = doc["rows"]
    check("table1_row_count", len(rows) == 12, len(rows))
    flags = [row["trivial"] for row in rows]
    check("table1_flags",
          flags == [True, True, False, False, False, True,
                    False, False, True, True, False, False], flags)
    by_space = {row["space"]: row["trivial"] for row in rows}
    check("table1_lookup",
          by_space["H*_eq(R0(pi))"] is True and by_space["H*_eq(X0(pi))"] is False)
    r = check_exit("table1_latex", 0, "table1", "--format", "latex")
    check("table1_latex_shape", "& yes &" in r.stdout and "& no &" in r.stdout)
    check_exit("table1_csv_rejected", 2, "table1", "--format", "csv")


def main():
    test_betti_documents()
    test_determinism()
    test_exit_codes()
    test_verify()
    test_torelli_tables()
    test_table1()
    if FAILURES:
        print(f"{len(FAILURES)} integration check(s) failed")
        return 1
    print("all integration checks passed")
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("usage: cli_integration.py <path-to-charvar>")
        sys.exit(2)
    BINARY = sys.argv[1]
    sys.exit(main())
