#!/usr/bin/env python3
"""Run every subcommand of the CLI and validate its JSON output, the
manifest, the rotation trace and the CSV headers against schemas/."""

import csv
import json
import shutil
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    binary, schema_dir, work = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    shutil.rmtree(work, ignore_errors=True)
    work.mkdir(parents=True)
    schemas = {p.stem: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    manifest = work / "manifest.json"
    graph = work / "g.edges"
    trace = work / "trace.jsonl"
    core_csv = work / "core.csv"
    curve_csv = work / "curve.csv"
    runs = [
        ["sample", "--n", "60", "--c", "6", "--seed", "3", "--out", str(graph)],
        ["core", "--n", "3000", "--c", "12", "--seed", "2", "--csv", str(core_csv)],
        ["core", str(graph)],
        ["cover", "--n", "3000", "--c", "12", "--seed", "2", "--paths"],
        ["cover", "--n", "40", "--c", "1", "--seed", "2"],
        ["longest-cycle", "--n", "1500", "--c", "20", "--seed", "4", "--trace", str(trace)],
        ["longest-cycle", "--n", "20000", "--c", "14", "--seed", "4", "--deficiency", "2"],
        ["oracle", "--n", "11", "--c", "4", "--seed", "5"],
        ["spectrum", "--n", "16", "--c", "4", "--seed", "5", "--lengths", "3,4,5"],
        ["spectrum", str(graph), "--lengths", "3"],
        ["validate", "--n", "14", "--c", "5", "--seed", "8"],
        ["estimate", "--target", "rho", "--c", "3", "--k", "2", "--n", "400", "--trials", "4", "--seed", "1"],
        ["estimate", "--target", "f", "--c-grid", "2,3", "--kmax", "3", "--n", "300", "--trials", "3",
         "--csv", str(curve_csv)],
        ["estimate", "--target", "pancyclic", "--c", "2", "--tol", "1e-9"],
        ["estimate", "--target", "spectrum", "--c", "2", "--lengths", "3,4"],
        ["estimate", "--target", "mc-spectrum", "--n", "200", "--c", "2", "--lengths", "3,4", "--trials", "100"],
    ]
    failures = 0
    for args in runs:
        proc = subprocess.run([binary, *args, "--manifest", str(manifest)], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
            failures += 1
            continue
        body = json.loads(proc.stdout)
        try:
            jsonschema.validate(body, schemas[body["command"]])
        except jsonschema.ValidationError as err:
            print(f"FAIL schema {' '.join(args)}: {err.message}")
            failures += 1

    proc = subprocess.run([binary, "replay", str(manifest), "--index", "3"], capture_output=True, text=True)
    body = json.loads(proc.stdout)
    jsonschema.validate(body, schemas["replay"])
    if not body["match"]:
        print("FAIL replay mismatch")
        failures += 1

    jsonschema.validate(json.loads(manifest.read_text()), schemas["manifest"])
    lines = trace.read_text().splitlines()
    if not lines:
        print("FAIL empty trace")
        failures += 1
    for line in lines:
        jsonschema.validate(json.loads(line), schemas["trace"])

    for path, schema in ((core_csv, "core"), (curve_csv, "estimate")):
        with path.open() as handle:
            header = next(csv.reader(handle))
        expected = list(schemas[schema]["x-csv-columns"])
        if header != expected:
            print(f"FAIL {path.name} header {header} != {expected}")
            failures += 1

    print(f"{len(runs)} outputs checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
