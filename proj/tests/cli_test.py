"""End-to-end checks of the g24check executable: exit codes, exports,
determinism across processes and the report schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BINARY, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


with open(SCHEMA, encoding="utf-8") as fh:
    schema = json.load(fh)


def valid(report_text):
    try:
        jsonschema.validate(json.loads(report_text), schema)
        return True
    except jsonschema.ValidationError as err:
        print(err)
        return False


check = run("check")
expect(check.returncode == 0, "check exits 0")
expect("Separating subsets B_1, B_2, B_3, C ... OK" in check.stdout, "check prints the partition stage line")
expect("dimension 64 counterexample" in check.stdout, "check prints the verdict")

first = run("report", "--with-uniqueness")
second = run("report", "--with-uniqueness", "--serial", "--threads", "1")
expect(first.returncode == 0, "report exits 0")
expect(first.stdout == second.stdout, "two report runs are byte-identical (parallel vs serial)")
expect(valid(first.stdout), "pass report matches the schema")
report = json.loads(first.stdout)
expect(report["overall"] == "pass", "report overall is pass")
expect(report["uniqueness"]["count"] == 1, "uniqueness count is 1")

flipped = run("report", "--inject-flip", "0,1")
expect(flipped.returncode == 1, "flipped edge exits 1")
expect(valid(flipped.stdout), "failure report matches the schema")
srg = [s for s in json.loads(flipped.stdout)["stages"] if s["name"] == "srg"][0]
expect(srg["status"] == "failed" and "pair (0,1)" in srg["witness"], "srg stage names the flipped pair")

starved = run("report", "--with-uniqueness", "--uniqueness-budget", "10")
expect(starved.returncode == 2, "exhausted uniqueness budget exits 2")
expect(valid(starved.stdout), "inconclusive report matches the schema")
expect(json.loads(starved.stdout)["overall"] == "inconclusive", "report overall is inconclusive")

timed = run("report", "--timings", "--with-clebsch-check")
expect(timed.returncode == 0 and valid(timed.stdout), "report with timings matches the schema")

graph = run("export-graph").stdout.splitlines()
expect(graph[0] == "p edge 416 20800" and len(graph) == 20801, "DIMACS export has header and 20800 edges")
graph_json = json.loads(run("export-graph", "--format", "json").stdout)
expect(len(graph_json["edges"]) == 20800, "JSON graph export has 20800 edges")

isosets = run("export-isosets").stdout.splitlines()
expect(len(isosets) == 416 and all(len(r.split(",")) == 16 for r in isosets), "iso-set CSV is 416 x 16")
vectors = run("export-vectors").stdout.splitlines()
expect(len(vectors) == 416 and all(len(r.split(",")) == 417 for r in vectors), "vector CSV is 416 x 417")
cover = run("export-cover").stdout.splitlines()
expect(len(cover) == 64 and all(len(r.split(",")) == 9 for r in cover), "cover CSV is 64 x 9")

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "report.json")
    out = run("check", "--out", path)
    expect(out.returncode == 0 and os.path.exists(path), "check --out writes the report")
    with open(path, encoding="utf-8") as fh:
        expect(valid(fh.read()), "written report matches the schema")
    bad = os.path.join(tmp, "missing", "x.csv")
    res = run("export-isosets", "--out", bad)
    expect(res.returncode == 3 and bad in res.stderr, "unwritable output exits 3 and names the path")

expect(run("--bogus").returncode == 3, "unknown flag exits 3")
expect(run("frobnicate").returncode == 3, "unknown command exits 3")
expect(run("check", "--primes", "4,7").returncode == 3, "non-prime modulus exits 3")
expect(run("check", "--primes", "7").returncode == 3, "a single prime exits 3")
expect(run("check", "--format", "xml").returncode == 3, "unknown format exits 3")

if failures:
    print(f"{len(failures)} check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
