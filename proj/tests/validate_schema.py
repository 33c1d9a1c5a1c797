"""Runs the CLI for every command and validates each JSON document against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]

RUNS = [
    ["certify", "--family", "geometric", "--s", "2", "--r0", "2"],
    ["certify", "--family", "power_law", "--p", "3", "--r0", "3"],
    ["certify", "--family-json", '{"kind":"explicit","factors":[]}'],
    ["eval", "--family", "geometric", "--s", "2", "--z", "1", "0"],
    ["eval", "--family-json", '{"kind":"explicit","factors":[[[0,0],[1,0],[0.5,0.5]]]}', "--z", "2", "1"],
    ["series", "--family", "geometric", "--s", "-2", "--degree", "8"],
    ["poincare", "--s", "1.5", "1.5", "--z", "2", "-1"],
    ["verify"],
    ["grid", "--family", "geometric", "--s", "2", "--grid", "0", "400", "-1", "1", "3"],
]


def main() -> int:
    with open(SCHEMA, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([CLI, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {args[0]}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {' '.join(args)}")
    csv = subprocess.run([CLI, "grid", "--family", "geometric", "--s", "2", "--grid", "-1", "1", "-1", "1", "3",
                          "--format", "csv"], capture_output=True, text=True, check=True).stdout.splitlines()
    if csv[0] != "re,im,f_re,f_im,error_bound" or len(csv) != 10:
        print("FAIL csv header or row count")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
