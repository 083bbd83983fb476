#!/usr/bin/env python3
"""Exit codes, JSON shape and flag coverage of the rdom command line."""

import json
import subprocess
import sys

binary, data = sys.argv[1], sys.argv[2]
failures = []


def run(args, stdin=""):
    return subprocess.run([binary] + args, input=stdin, capture_output=True, text=True)


def expect(name, condition):
    if not condition:
        failures.append(name)


def records(text):
    text = text.strip()
    if text.startswith("["):
        return json.loads(text)
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# every subcommand takes --jobs and --json
commands = [
    (["family"], ""),
    (["solve"], "C~\nDhc\n"),
    (["solve", "--nerd", "ndom", "--x", "0"], "Dhc\n"),
    (["formulas", "cycle", "--n", "6"], ""),
    (["lemma1"], "DFw\n"),
    (["enumerate", "--class", "cubic", "--n", "8", "--connected"], ""),
    (["verify", "key-theorem", "--max-n", "6"], ""),
    (["verify", "cubic-bound", "--max-n", "8"], ""),
    (["verify", "known-bounds", "--max-n", "5"], ""),
    (["verify", "lemma1", "--max-n", "10"], ""),
    (["extremal", "--class", "cubic", "--n", "10"], ""),
]
for args, stdin in commands:
    r = run(args + ["--jobs", "2", "--json"], stdin)
    label = " ".join(args)
    expect(label + ": exit 0", r.returncode == 0)
    try:
        expect(label + ": JSON records", len(records(r.stdout)) > 0)
    except json.JSONDecodeError:
        failures.append(label + ": stdout is not JSON")

# family listing matches the golden file
with open(data + "/family.g6") as f:
    expect("family lines", run(["family"]).stdout.split() == f.read().split())

solved = records(run(["solve", "--json"], "C~\nI?LRCecq?\n").stdout)
expect("solve K4", solved[0]["value"] == 1 and solved[0]["witness"] == [0])
expect("solve Petersen", solved[1]["value"] == 4 and solved[1]["n"] == 10)
expect("solve fields", set(solved[0]) >= {"n", "m", "status", "value", "witness", "micros"})
infeasible = records(run(["solve", "--json", "--nerd", "dom", "--x", "0"], "@\n").stdout)
expect("solve infeasible", infeasible[0]["status"] == "infeasible")

formula = run(["formulas", "path", "--n", "7"])
expect("path formula", formula.returncode == 0 and formula.stdout.strip() == "3")

cubic = run(["enumerate", "--class", "cubic", "--n", "10", "--connected"])
expect("enumerate cubic 10", len(cubic.stdout.split()) == 19)

# violations give 1, with the summary on stderr and a report array on stdout
obs = run(["verify", "observations", "--json"])
expect("observations exit 1", obs.returncode == 1)
expect("observations summary", "FAIL obs1f" in obs.stderr and "PASS obs3" in obs.stderr)
expect("observations reports", len(json.loads(obs.stdout)) == 14)

with open(data + "/cubic_sample.g6") as f:
    sample = f.read()
ok = run(["verify", "cubic-bound", "--input", "/dev/stdin"], sample)
expect("cubic-bound input exit 0", ok.returncode == 0)
bad = run(["verify", "cubic-bound", "--input", "/dev/stdin"], sample + "Dhc\n")
expect("cubic-bound non-cubic exit 2", bad.returncode == 2)

# usage and parse errors give 2
for args, stdin in [
    ([], ""),
    (["bogus"], ""),
    (["solve"], "not graph6\n"),
    (["solve", "--nerd", "sideways"], "C~\n"),
    (["solve", "--x", "9", "--nerd", "ndom"], "C~\n"),
    (["formulas", "cycle", "--n", "2"], ""),
    (["enumerate", "--class", "cubic", "--n", "16"], ""),
    (["enumerate", "--class", "planar", "--n", "6"], ""),
    (["verify", "cubic-bound"], ""),
    (["verify", "cubic-bound", "--max-n", "8", "--input", "x.g6"], ""),
    (["lemma1"], "C~\n"),
    (["family", "--jobs", "zero"], ""),
]:
    r = run(args, stdin)
    expect("exit 2 for " + " ".join(args), r.returncode == 2)

expect("help exits 0", run(["--help"]).returncode == 0)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} CLI failures")
sys.exit(1 if failures else 0)
