"""Run representative CLI commands and validate each report against schema/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))


def run(args, stdin=None):
    out = subprocess.run([exe, *args], input=stdin, capture_output=True, text=True, check=True)
    return out.stdout


wild = run(["gen", "wild", "--x", "4"])
case_c = run(["gen", "case-c", "--m", "3", "--n", "2", "--k", "3"])
trap = run(["gen", "trapezoid", "--m", "3", "--h", "4", "--c", "1/2", "--d", "-1/2", "--pair-m", "2", "--pair-h", "3"])
polys = json.dumps({"p": "0 0\n1 0\n0 1\n", "q": "0 0\n1 0\n1 1\n0 1\n"})

reports = {
    "bound": run(["bound", "--mode", "sections"], wild),
    "approx bound": run(["--approx", "bound", "--mode", "lines"], wild),
    "thm3": run(["check", "thm3"], case_c),
    "thm2": run(["check", "thm2"], trap),
    "sweep": run(["sweep", "--grid", "2x2", "--mode", "sections"]),
    "poly report": run(["poly", "report"], polys),
}
failed = 0
for name, text in reports.items():
    try:
        jsonschema.validate(json.loads(text), schema)
        print(f"{name}: ok")
    except jsonschema.ValidationError as e:
        failed += 1
        print(f"{name}: {e.message}")
sys.exit(1 if failed else 0)
