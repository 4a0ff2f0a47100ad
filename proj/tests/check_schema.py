"""Runs a sample of CLI commands and validates every report against the schema."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    (["der", "--algebra", "sl2", "--type=-1,1,1"], 0),
    (["der", "--algebra", "sl3", "--type=2,1,1"], 0),
    (["hl", "--algebra", "sl2"], 0),
    (["hl", "--algebra", "sp4"], 0),
    (["classify", "--d", "0,0,0,1,0"], 0),
    (["classify", "--d", "0,1,3,8,0"], 0),
    (["classify", "--d", "0,0,0,0,0"], 1),
    (["canon", "--d", "1,2,3,4,5"], 0),
    (["canon", "--d", "0,0,0,0,1"], 0),
    (["canon", "--d", "1,0,0,0,0"], 1),
    (["rep", "--m", "2", "--d", "1,1,1,1,1"], 0),
    (["rep", "--m", "3", "--d", "1,1,1,1,1"], 0),
    (["extend", "--d", "1,1,1,1,1", "--module", "2"], 0),
    (["extend", "--d", "1/2,0,1,0,-1"], 0),
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    failures = 0
    for args, want in CASES:
        proc = subprocess.run([cli] + args, capture_output=True, text=True)
        try:
            report = json.loads(proc.stdout)
            jsonschema.validate(report, schema)
            ok = proc.returncode == want
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"{' '.join(args)}: {e}")
            ok = False
        print(f"{'ok  ' if ok else 'FAIL'} {' '.join(args)} (exit {proc.returncode})")
        failures += 0 if ok else 1
    bad = subprocess.run([cli, "classify", "--d", "1,2"], capture_output=True, text=True)
    print(f"{'ok  ' if bad.returncode == 2 else 'FAIL'} malformed --d (exit {bad.returncode})")
    failures += 0 if bad.returncode == 2 else 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
