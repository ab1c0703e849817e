#!/usr/bin/env python3
"""End-to-end checks of the ghull command-line tool and its exit-code contract."""

import json
import subprocess
import sys
import tempfile
import os

GHULL = sys.argv[1]
failures = 0


def run(*args, **kw):
    return subprocess.run([GHULL, *args], capture_output=True, text=True, **kw)


def check(name, cond, detail=""):
    global failures
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {name} {detail}")
    if not cond:
        failures += 1


with tempfile.TemporaryDirectory() as tmp:
    code_path = os.path.join(tmp, "c.json")

    # construct a [7,2] hull-1 code and write it out
    r = run("construct", "--theorem", "3.1", "--p", "3", "--e", "1", "--m", "2",
            "--t", "2", "--r", "1", "--k", "2", "--l", "1", "--out", code_path)
    check("construct 3.1 exit 0", r.returncode == 0, r.stderr.strip())
    check("construct reports hull dim 1", "dim=1" in r.stdout)
    first = open(code_path, "rb").read()

    # verify round-trip, byte-stable re-serialization
    r = run("verify", code_path, "--e", "1", "--exact-distance")
    check("verify exit 0", r.returncode == 0, r.stderr.strip())
    check("verify agreement", "method_agreement=yes" in r.stdout)
    r = run("construct", "--theorem", "3.1", "--p", "3", "--e", "1", "--m", "2",
            "--t", "2", "--r", "1", "--k", "2", "--l", "1", "--out", code_path)
    check("re-construct byte-stable", open(code_path, "rb").read() == first)

    # hull subcommand prints a basis
    r = run("hull", code_path, "--e", "1")
    check("hull exit 0", r.returncode == 0, r.stderr.strip())
    check("hull basis rows", "basis rows: 1" in r.stdout)

    # eaqecc on the fixture: [[7,1,6;4]]
    r = run("eaqecc", code_path, "--e", "1")
    check("eaqecc exit 0", r.returncode == 0, r.stderr.strip())
    check("eaqecc [[7,1,6;4]]", "[[7,1,6;4]]" in r.stdout, r.stdout)

    # usage errors -> exit 2
    r = run("construct", "--theorem", "3.1", "--p", "3", "--e", "1", "--m", "3",
            "--t", "2", "--r", "1", "--k", "2", "--l", "1")
    check("odd m exit 2", r.returncode == 2, str(r.returncode))
    check("odd m message", "m must be even" in r.stderr, r.stderr)
    r = run("nonsense")
    check("unknown subcommand exit 2", r.returncode == 2)

    # tampered fixture: zero one multiplier -> verify exit 4 naming the check
    doc = json.loads(first)
    doc["v"][0] = [0] * len(doc["v"][0])
    bad_path = os.path.join(tmp, "bad.json")
    with open(bad_path, "w") as f:
        json.dump(doc, f)
    r = run("verify", bad_path, "--e", "1")
    check("tampered multiplier exit 4", r.returncode == 4, str(r.returncode))
    check("tampered message", "multiplier zero" in r.stderr, r.stderr)

    # theorem 4.2 pipeline from the named full-field seed
    r = run("construct", "--theorem", "4.2", "--seed", "full-field", "--p", "3",
            "--h", "3", "--e", "1", "--k", "7", "--l", "3")
    check("construct 4.2 exit 0", r.returncode == 0, r.stderr.strip())
    check("construct 4.2 [28,7]", "[28,7]" in r.stdout and "dim=3" in r.stdout, r.stdout)

    # tables reproduce the published large constants
    out = os.path.join(tmp, "t.csv")
    r = run("table", "--theorem", "5.5", "--p", "5", "--m", "4", "--r", "3",
            "--e", "3", "--t", "31", "--k", "1..3", "--l", "0", "--out", out)
    check("table 5.5 exit 0", r.returncode == 0, r.stderr.strip())
    csv = open(out).read()
    check("table 5.5 n", "60546876" in csv, csv[:200])
    r = run("table", "--theorem", "5.6", "--p", "3", "--h", "16", "--e", "4",
            "--t", "73", "--k", "1..2", "--l", "0", "--format", "json", "--out", "-")
    check("table 5.6 exit 0", r.returncode == 0, r.stderr.strip())
    check("table 5.6 n", '"38795194"' in r.stdout, r.stdout[:200])
    r = run("table", "--theorem", "5.6", "--p", "3", "--h", "3", "--e", "1", "--t", "1")
    check("table invalid ranges exit 2", r.returncode == 2, str(r.returncode))

    # --jobs is accepted
    r = run("--jobs", "4", "eaqecc", code_path, "--e", "1")
    check("--jobs accepted", r.returncode == 0, r.stderr.strip())

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
