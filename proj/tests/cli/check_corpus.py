"""Runs the CLI regression corpus: exit codes, schema validity, golden
outputs, byte-identical reruns and printer/parser round trips."""

import argparse
import json
import pathlib
import shlex
import subprocess
import sys

import jsonschema


def run(vlab, args):
    p = subprocess.run([vlab] + args, capture_output=True)
    return p.returncode, p.stdout


def field_spec(levels):
    return "; ".join(f"{l['name']}: {l['minpoly']}" for l in levels)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("vlab")
    ap.add_argument("corpus")
    ap.add_argument("schemas")
    ap.add_argument("golden")
    ap.add_argument("--update", action="store_true")
    opt = ap.parse_args()

    schemas = {p.stem: json.loads(p.read_text()) for p in pathlib.Path(opt.schemas).glob("*.json")}
    golden = pathlib.Path(opt.golden)
    failures = []
    cases = 0
    for lineno, line in enumerate(pathlib.Path(opt.corpus).read_text().splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        schema, code, argtext = line.split("\t")
        args = shlex.split(argtext)
        cases += 1
        where = f"line {lineno}: {argtext}"
        rc, out = run(opt.vlab, args)
        rc2, out2 = run(opt.vlab, args)
        if rc != int(code):
            failures.append(f"{where}: exit {rc}, expected {code}")
        if (rc, out) != (rc2, out2):
            failures.append(f"{where}: output differs between runs")
        gfile = golden / f"{lineno:03d}.out"
        if opt.update:
            gfile.write_bytes(out)
        elif not gfile.exists() or gfile.read_bytes() != out:
            failures.append(f"{where}: output differs from {gfile.name}")
        if schema == "-":
            if out:
                failures.append(f"{where}: usage errors print nothing on stdout")
            continue
        docs = [json.loads(l) for l in out.decode().splitlines()]
        if schema != "padic-stage" and len(docs) != 1:
            failures.append(f"{where}: expected one JSON document, got {len(docs)}")
        for doc in docs:
            try:
                jsonschema.validate(doc, schemas[schema])
            except jsonschema.ValidationError as e:
                failures.append(f"{where}: schema {schema}: {e.message}")
        # printed polynomials parse back to themselves
        for doc in docs:
            if schema in ("factor", "newton", "hensel-set") and "poly" in doc:
                again = ["factor", "--poly", doc["poly"]]
                if doc["field"]:
                    again += ["--field", field_spec(doc["field"])]
                _, o = run(opt.vlab, again)
                if json.loads(o).get("poly") != doc["poly"]:
                    failures.append(f"{where}: round trip of {doc['poly']!r} failed")
    for f in failures:
        print("FAIL", f)
    print(f"{cases} cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
