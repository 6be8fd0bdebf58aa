"""Runs the CLI, validates every JSON output against the shipped schemas and
checks exit codes and byte-identical repeat runs."""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = Path(sys.argv[2])

registry = Registry()
for path in SCHEMAS.glob("*.schema.json"):
    schema = json.loads(path.read_text())
    registry = registry.with_resource(schema["$id"], Resource.from_contents(schema))

failures = []


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.pop("FSPLIT_WORKERS", None)
    full_env.pop("FSPLIT_RANK_CEILING", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def expect(cond, message):
    if not cond:
        failures.append(message)
        print("FAIL:", message)


def validated(args, schema_id, code=0, env=None):
    proc = run(args, env)
    expect(proc.returncode == code, f"{args}: exit {proc.returncode}, expected {code}: {proc.stderr.strip()}")
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        expect(False, f"{args}: output is not JSON ({e})")
        return None
    validator = jsonschema.Draft202012Validator(
        registry.contents(schema_id), registry=registry
    )
    errors = sorted(validator.iter_errors(doc), key=str)
    expect(not errors, f"{args}: schema errors {[e.message for e in errors[:3]]}")
    return doc


doc = validated(["enum", "--rank", "3"], "enum.schema.json")
if doc:
    expect(doc["count"] == 28 and doc["class_count"] == 25, "enum --rank 3 counts")
doc = validated(["enum", "--rank", "3", "--thick-only"], "enum.schema.json")
if doc:
    expect(doc["count"] == 22, "enum --thick-only count")

doc = validated(["pair", "--rank", "3", "--p", "x2+,x3-", "--q", "x1-,x2+"], "pair.schema.json")
if doc:
    expect(doc["crosses"] and doc["cagey"] and doc["boundary_type"] == "cage", "pair verdicts")
doc = validated(["pair", "--rank", "3", "--p", "x2+,x3-", "--q", "x2-,x3+"], "pair.schema.json")
if doc:
    expect(doc["compatible"] and doc["circle_compatible"] and not doc["rose_compatible"], "circle pair")
validated(["pair", "--rank", "3", "--p", "x1+,x1-", "--q", "x2-,x3+"], "pair.schema.json")

with tempfile.TemporaryDirectory() as tmp:
    family = Path(tmp) / "family.json"
    family.write_text(json.dumps({"rank": 3, "family": ["x1-,x2+", "x2-,x3+"]}))
    doc = validated(["blowup", "--rank", "3", "--family", str(family)], "blowup.schema.json")
    if doc:
        expect(doc["shape"]["rose_petals"] == 2 and doc["shape"]["vertex_ranks"] == [1], "blowup rose")
    dot = run(["--format", "dot", "blowup", "--rank", "3", "--family", str(family)])
    expect(dot.returncode == 0 and dot.stdout.startswith("graph"), "blowup dot output")
    crossing = Path(tmp) / "crossing.json"
    crossing.write_text(json.dumps(["x2+,x3-", "x1-,x2+"]))
    expect(run(["blowup", "--rank", "3", "--family", str(crossing)]).returncode == 2, "crossing family exit 2")

doc = validated(["whitehead", "simple", "--rank", "2", "--word", "x1x2X1X2"], "whitehead_simple.schema.json")
if doc:
    expect(doc["simple"] is False and doc["connected_without_cut_vertex"], "commutator nonsimple")
doc = validated(["whitehead", "simple", "--rank", "2", "--word", "x1x2"], "whitehead_simple.schema.json")
if doc:
    expect(doc["simple"] is True, "x1x2 simple")

doc = validated(["kgraph", "--rank", "3"], "kgraph.schema.json")
if doc:
    expect(len(doc["roses"]) > 0 and len(doc["edges"]) > 0, "kgraph nonempty")

for lemma in ["rigid-blowup", "three-rose", "clique-rank-3", "boundary-types", "whitehead-factor"]:
    validated(["verify", lemma], "verify.schema.json")
validated(["verify", "three-rose", "--rank", "4"], "verify.schema.json")

# the full battery: its verdict is whatever the verifiers report, but the
# bytes must not change between runs or with the worker count
first = run(["verify", "all"])
second = run(["verify", "all"])
threaded = run(["verify", "all"], env={"FSPLIT_WORKERS": "4"})
expect(first.returncode in (0, 1), f"verify all exit {first.returncode}")
expect(first.stdout == second.stdout, "verify all is not byte-identical across runs")
expect(first.stdout == threaded.stdout, "verify all depends on the worker count")
validator = jsonschema.Draft202012Validator(registry.contents("verify.schema.json"), registry=registry)
expect(not list(validator.iter_errors(json.loads(first.stdout))), "verify all schema")
expect(first.returncode == (0 if json.loads(first.stdout)["passed"] else 1), "verify all exit code matches verdict")

# usage errors
for args in (["enum", "--rank", "9"], ["frobnicate"], ["pair", "--rank", "3", "--p", "x9+", "--q", "x1-"],
             ["whitehead", "simple", "--rank", "2", "--word", "x1y2"], ["verify", "nope"],
             ["verify", "three-rose", "--rank", "5"], ["enum", "--rank", "3", "--workers", "0"]):
    proc = run(args)
    expect(proc.returncode == 2, f"{args}: exit {proc.returncode}, expected 2")

# environment overrides; flags win
expect(run(["enum", "--rank", "6"], env={"FSPLIT_RANK_CEILING": "5"}).returncode == 2, "env rank ceiling")
expect(run(["enum", "--rank", "6", "--rank-ceiling", "6"], env={"FSPLIT_RANK_CEILING": "5"}).returncode == 0,
       "flag overrides env ceiling")
expect(run(["enum", "--rank", "3"], env={"FSPLIT_WORKERS": "zero"}).returncode == 2, "malformed env workers")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
