"""End-to-end checks of the circnorm executable: exit codes, the output
schema, CSV tables, and run-to-run determinism.

usage: cli_contract.py <circnorm-binary> <schema.json>
"""

import json
import subprocess
import sys

import jsonschema

BINARY, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)
jsonschema.Draft7Validator.check_schema(SCHEMA)
VALIDATOR = jsonschema.Draft7Validator(SCHEMA)

failures = []


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def check(cond, label):
    print(("ok   " if cond else "FAIL ") + label)
    if not cond:
        failures.append(label)


def record(*args, expect_exit=0):
    code, out, err = run(*args)
    label = " ".join(args)
    check(code == expect_exit, f"{label}: exit {code} (want {expect_exit}) {err.strip()}")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError:
        check(False, f"{label}: stdout is one JSON document")
        return None
    errors = sorted(VALIDATOR.iter_errors(doc), key=str)
    check(not errors, f"{label}: validates against schema" + (f" ({errors[0].message})" if errors else ""))
    return doc


def methods(doc):
    return {m["method"]: m for m in doc["results"]["methods"]}


# seq
doc = record("seq", "--id", "fibonacci", "--n", "5")
check(doc and doc["results"]["terms"] == ["0", "1", "1", "2", "3"], "seq fibonacci 5 terms")
doc = record("seq", "--id", "lucas", "--n", "1", "--sum")
check(doc and doc["results"]["terms"] == ["2"] and doc["results"]["prefix_sum"] == "2", "seq lucas 1 --sum")
doc = record("seq", "--id", "custom", "--spec", "k=2;coef=1,1;init=0,1", "--n", "5")
check(doc and doc["results"]["terms"] == ["0", "1", "1", "2", "3"], "custom spec aliases fibonacci")
doc = record("seq", "--id", "pell", "--n", "120", "--sum")
check(doc and doc["results"]["closed_form_matches"] is True, "pell 120 closed form matches")

# norm
doc = record("norm", "--id", "fibonacci", "--n", "4", "--methods", "all")
if doc:
    m = methods(doc)
    check(m["sum"]["exact_value"] == "4" and abs(m["dft"]["value"] - 4) < 1e-10
          and abs(m["power"]["value"] - 4) < 1e-8 and doc["results"]["agrees"], "norm fibonacci 4 all")
doc = record("norm", "--id", "pell", "--n", "1", "--methods", "sum")
check(doc and methods(doc)["sum"]["exact_value"] == "0" and len(doc["results"]["methods"]) == 1,
      "norm pell 1 sum")
doc = record("norm", "--id", "perrin", "--n", "6", "--methods", "all")
check(doc and methods(doc)["sum"]["exact_value"] == "15", "norm perrin 6 exact 15")
doc = record("norm", "--id", "fibonacci", "--n", "200")
check(doc and not methods(doc)["dft"]["computed"] and doc["results"]["agrees"], "guards skip dft/power")
doc = record("norm", "--id", "custom", "--spec", "k=1;coef=-1;init=1", "--n", "3", expect_exit=1)
check(doc and doc["results"]["error"]["kind"] == "NegativeEntry", "NegativeEntry is a structured error")

# verify
doc = record("verify", "--id", "fibonacci", "--n-max", "60")
if doc:
    s = doc["results"]["sequences"][0]
    check(s["identity"]["closed_form_matches"] == 60 and s["norm"]["agreements"] == 60, "verify fibonacci 60")
doc = record("verify", "--id", "perrin", "--n-max", "50")
if doc:
    s = doc["results"]["sequences"][0]
    check(s["identity"]["closed_form_matches"] == 50 and s["identity"]["published_form_matches"] == 0
          and len(s["findings"]) == 1, "verify perrin 50 finding")
doc = record("verify", "--id", "all", "--n-max", "1")
check(doc and sum(len(s["rows"]) for s in doc["results"]["sequences"]) == 4, "verify all 1 has 4 rows")
doc = record("verify", "--id", "all", "--n-max", "40", "--rel-tol", "1e-300", expect_exit=1)
check(doc and doc["results"]["passed"] is False, "impossible tolerance fails verify")

code, out, _ = run("verify", "--id", "perrin", "--n-max", "3", "--format", "csv")
check(code == 0 and out.splitlines()[0].startswith("sequence,n,direct_sum") and len(out.splitlines()) == 4,
      "verify csv table")

# bench
doc = record("bench", "--id", "pell", "--n", "256,1024", "--reps", "5")
check(doc and all(r["agrees"] for r in doc["results"]["rows"]), "bench pell agrees")
doc = record("bench", "--id", "fibonacci", "--n", "1", "--reps", "1")
check(doc and len(doc["results"]["rows"]) == 1, "bench trivial row")
doc = record("bench", "--id", "lucas", "--n", "64", "--reps", "3")
check(doc and all(r["agrees"] for r in doc["results"]["rows"]), "bench lucas 64 agrees")
code, out, _ = run("bench", "--id", "lucas", "--n", "8,16", "--reps", "1", "--format", "csv")
check(code == 0 and len(out.splitlines()) == 1 + 2 * 3, "bench csv table")

# usage errors
for args in (["seq", "--id", "fibonacci", "--n", "0"],
             ["seq", "--id", "nope", "--n", "3"],
             ["seq", "--id", "custom", "--n", "3"],
             ["seq", "--id", "custom", "--spec", "k=2;coef=1;init=0,1", "--n", "3"],
             ["norm", "--id", "pell", "--n", "3", "--methods", "svd"],
             ["bench", "--id", "pell", "--n", "4,,8"],
             ["verify", "--id", "all"],
             ["frobnicate"],
             []):
    code, out, _ = run(*args)
    check(code == 2 and out == "", f"usage error: {' '.join(args) or '(no args)'} -> exit {code}")

# determinism
for args in (["verify", "--id", "all", "--n-max", "45"],
             ["norm", "--id", "perrin", "--n", "64"],
             ["seq", "--id", "pell", "--n", "300", "--sum"]):
    a, b = run(*args), run(*args)
    check(a == b, f"deterministic: {' '.join(args)}")
bench = [json.loads(run("bench", "--id", "lucas", "--n", "16,32", "--reps", "2")[1]) for _ in range(2)]
for doc in bench:
    for row in doc["results"]["rows"]:
        for m in row["methods"]:
            m["median_seconds"] = None
check(bench[0] == bench[1], "bench deterministic apart from timings")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
