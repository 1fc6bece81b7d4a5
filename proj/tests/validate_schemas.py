import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, schemas = sys.argv[1], pathlib.Path(sys.argv[2])
global_args = ["--data-dir", sys.argv[3]] if len(sys.argv) > 3 else []
registry = Registry()
for p in schemas.glob("*.schema.json"):
    registry = registry.with_resource(p.name, Resource.from_contents(json.loads(p.read_text())))

cases = [
    ("analyze.schema.json", ["analyze", "G22"]),
    ("analyze.schema.json", ["analyze", "PD2uPD3"]),
    ("verify.schema.json", ["verify-ct", "G23", "M23"]),
    ("verify.schema.json", ["verify-nt", "PD2uPD3", "PSL3(4)", "--s", "3"]),
    ("design.schema.json", ["design", "G24", "--k", "8", "--t", "5"]),
    ("design.schema.json", ["design", "G24", "--k", "12", "--t", "6"]),
    ("screens.schema.json", ["screens"]),
    ("lattice.schema.json", ["lattice"]),
    ("coset_graph.schema.json", ["coset-graph", "G23"]),
    ("coset_graph.schema.json", ["coset-graph", "E"]),
    ("witness.schema.json", ["witness", "PD2uPD3"]),
    ("zoo_verify.schema.json", ["zoo", "verify"]),
]
bad = 0
for schema, args in cases:
    r = subprocess.run([cli, *global_args, *args], capture_output=True, text=True)
    if r.returncode not in (0, 2):
        print("FAIL", args, r.stderr.strip())
        bad += 1
        continue
    v = Draft202012Validator(json.loads((schemas / schema).read_text()), registry=registry)
    errs = list(v.iter_errors(json.loads(r.stdout)))
    for e in errs[:5]:
        print("FAIL", args, "/".join(map(str, e.absolute_path)), e.message[:200])
    bad += bool(errs)
    if not errs:
        print("ok", schema, " ".join(args))
sys.exit(1 if bad else 0)
