#!/usr/bin/env python3
"""End-to-end checks of the xch command line. Usage: cli_test.py <xch> <source dir>"""

import json
import os
import subprocess
import sys

import jsonschema

XCH = sys.argv[1]
ROOT = sys.argv[2]
CATALOG = os.path.join(ROOT, "catalog", "catalog.json")
DATA = os.path.join(ROOT, "tests", "data")

with open(os.path.join(ROOT, "schema", "report.schema.json")) as f:
    REPORT_SCHEMA = json.load(f)
with open(os.path.join(ROOT, "schema", "problem.schema.json")) as f:
    PROBLEM_SCHEMA = json.load(f)

failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("XCH_BUDGET", None)
    if env:
        full_env.update(env)
    p = subprocess.run([XCH, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout


def run_json(*args, env=None):
    code, out = run(*args, "--format", "json", env=env)
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    return code, report


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def dims(report, i=0):
    return [d["dim"] for d in report["homology"][i]["degrees"]]


# problem files
for path in [CATALOG] + [os.path.join(DATA, n) for n in ("peiffer.json", "fp.json", "no_splitting.json")]:
    with open(path) as f:
        try:
            jsonschema.validate(json.load(f), PROBLEM_SCHEMA)
            check(True, "problem schema accepts " + os.path.basename(path))
        except jsonschema.ValidationError as e:
            check(False, "problem schema accepts %s: %s" % (os.path.basename(path), e.message))

# exit codes
code, r = run_json("validate", CATALOG)
check(code == 0 and r["status"] == "pass", "validate catalog exits 0")
check(all(v["valid"] for v in r["validations"]), "every catalog object is valid")

code, out = run("validate", os.path.join(DATA, "peiffer.json"))
check(code == 1 and "(r=e, r'=e)" in out, "Peiffer failure exits 1 with a witness")

code, r = run_json("validate", os.path.join(DATA, "malformed.json"))
check(code == 2 and r["error"]["kind"] == "parse" and r["error"]["line"] == 3, "malformed JSON exits 2 with a line")

code, _ = run("compute", CATALOG, "--object", "X_id_K1")
check(code == 2, "missing --what exits 2")

code, r = run_json("compute", CATALOG, "--object", "X_id_U2", "--what", "hc", "--budget", "10")
check(code == 3 and r["error"]["budget"] == 10 and r["error"]["estimate"] > 10, "budget exceeded exits 3")
code, _ = run("compute", CATALOG, "--object", "X_id_U2", "--what", "hc", env={"XCH_BUDGET": "10"})
check(code == 3, "XCH_BUDGET is honoured")

code, out = run("compute", os.path.join(DATA, "fp.json"), "--object", "X_id_U2", "--what", "xihc")
check(code == 1 and "requires characteristic zero" in out, "xihc over F_p is refused")
code, r = run_json("compute", os.path.join(DATA, "fp.json"), "--object", "X_zero_U2", "--what", "hc")
check(code == 0 and dims(r) == [2, 0, 2, 0], "HC over F_7 of (0,U2,0)")

code, r = run_json("verify", os.path.join(DATA, "no_splitting.json"), "--theorem", "excision", "--object", "E")
check(code == 1 and "splittings" in r["error"]["message"], "extension without splittings is reported")

code, _ = run("compute", CATALOG, "--object", "nothing", "--what", "hc")
check(code != 0, "unknown object is an error")

# values
code, r = run_json("compute", CATALOG, "--object", "X_id_K1", "--what", "hc")
check(code == 0 and dims(r) == [0, 0, 0, 0], "HC(X_id_K1) vanishes")
code, r = run_json("compute", CATALOG, "--object", "X_id_K1", "--what", "xihc", "--max-degree", "2")
check(code == 0 and dims(r) == [1, 0, 1], "xiHC(X_id_K1) = 1, 0, 1")
code, r = run_json("compute", CATALOG, "--object", "K1", "--what", "hc")
check(code == 0 and dims(r) == [1, 0, 1, 0], "HC(K1) = 1, 0, 1, 0")
code, r = run_json("compute", CATALOG, "--object", "X_zero_U2", "--what", "hh", "--max-degree", "2", "--bases")
check(code == 0 and dims(r) == [2, 0, 0] and len(r["homology"][0]["degrees"][0]["basis"]) == 2,
      "HH(X_zero_U2) with representatives")
code, r = run_json("compute", CATALOG, "--object", "X_inc_U2", "--what", "relhc", "--max-degree", "2")
code2, r2 = run_json("compute", CATALOG, "--object", "X_inc_U2", "--what", "xihc", "--max-degree", "2")
check(code == 0 and code2 == 0 and dims(r) == dims(r2), "relative HC matches xiHC for X_inc_U2")

for args in (("five-term", "X_bimod", None), ("connes", "X_id_K1", "3"), ("relat", "X_inc_U2", "2"),
             ("corollary-corx", "X_inc_D2", "3"), ("lemma-3.7", "X_bimod", "2"), ("connection", "X_id_U2", "2"),
             ("beta-gamma", "X_zero_Z2", None), ("excision", "E_exc", "2")):
    extra = ["--max-degree", args[2]] if args[2] else []
    code, r = run_json("verify", CATALOG, "--theorem", args[0], "--object", args[1], *extra)
    check(code == 0 and all(v["passed"] for v in r["verifications"]), "%s on %s" % (args[0], args[1]))

code, r = run_json("verify", CATALOG, "--theorem", "connes")
check(code == 0 and len(r["verifications"]) == 11, "connes on every crossed module")

code, r = run_json("run", CATALOG)
check(code == 0 and r["status"] == "pass", "catalog task list")

# formats and determinism
code_t, text = run("compute", CATALOG, "--object", "X_id_U2", "--what", "hc")
code_j, r = run_json("compute", CATALOG, "--object", "X_id_U2", "--what", "hc")
lines = [l.split() for l in text.splitlines() if l.strip().startswith("n=")]
check(code_t == code_j and [int(l[2]) for l in lines] == dims(r), "text and json agree")

for args in (("compute", CATALOG, "--object", "X_id_U2", "--what", "hc", "--bases"),
             ("verify", CATALOG, "--theorem", "five-term"),
             ("verify", CATALOG, "--theorem", "excision"),
             ("run", CATALOG)):
    one = run(*args, "--threads", "1", "--format", "json")
    eight = run(*args, "--threads", "8", "--format", "json")
    check(one == eight, "1 and 8 threads agree on " + " ".join(args[:1] + args[2:]))

code, r = run_json("compute", CATALOG, "--object", "K1", "--what", "hc", "--timing")
check("seconds" in r, "--timing adds the wall-clock time")
code, r = run_json("compute", CATALOG, "--object", "K1", "--what", "hc")
check("seconds" not in r, "reports are deterministic without --timing")

print("%d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
