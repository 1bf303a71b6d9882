"""Validate `jlt --json` output for every subcommand against the committed schema."""

import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["levi", "--group", "Sp(8)", "--remove", "a4"],
    ["levi", "--group", "E7sc", "--remove", "a4"],
    ["levi", "--group", "G2", "--remove", "a1"],
    ["satake", "--group", "E7sc", "--remove", "a4", "--black", "a2,a5,a7"],
    ["satake", "--group", "GSpin(9)", "--remove", "a3", "--degrees", "1,2"],
    ["satake", "--type-a", "6", "--d", "3"],
    ["appendix-a"],
    ["weyl", "--group", "Sp(4)", "--theta", "a1"],
    ["weyl", "--group", "E8"],
    ["kottwitz", "--group", "PGL(4)"],
    ["kottwitz", "--group", "GL(3)xSO(5)"],
    ["inner-forms", "--n", "6"],
    ["globalize", "--prime", "5", "--places", "3", "--class-order", "2"],
    ["globalize", "--prime", "2", "--places", "9", "--group", "PGL(3)"],
    ["division-algebra", "--n", "6", "--inv", "v1=1/2,v2=1/3,v3=1/6"],
    ["division-algebra", "--n", "2", "--inv", "v1=1/2,oo1=1/2"],
    ["lj", "--n", "2", "--d", "2", "--element", "triv"],
    ["lj", "--n", "6", "--d", "2", "--element", "(2,4):a,b + 3*(6):c - (1,5):x,y"],
]


def main() -> int:
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in INVOCATIONS:
        proc = subprocess.run([tool, "--json", *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
            continue
        again = subprocess.run([tool, "--json", *args], capture_output=True, text=True, check=False)
        if again.stdout != proc.stdout:
            failures += 1
            print(f"FAIL {' '.join(args)}: output differs between runs")
            continue
        if json.loads(json.dumps(doc)) != doc:
            failures += 1
            print(f"FAIL {' '.join(args)}: JSON does not round-trip")
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
