"""End-to-end checks of the glperm command line: outputs, exit codes, determinism."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env, timeout=600)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def test_decompose():
    r = run("decompose", "--m", "1", "--q", "2")
    check(r.returncode == 0, "decompose m=1 q=2 exits 0")
    rows = [line for line in r.stdout.splitlines() if line.startswith(("ι", "1:", "2:"))]
    check(len(rows) == 4, "decompose m=1 q=2 lists 4 constituents")

    r = run("--format", "json", "decompose", "--m", "1", "--q", "3")
    check(r.returncode == 0, "decompose m=1 q=3 json exits 0")
    doc = json.loads(r.stdout)
    check(doc["checks"]["sum_sq"] == 15, "sum of squares at (3,1,3) is 15")
    check(doc["checks"]["dim"] == "234", "dimension at (3,1,3) is 234")
    check(len(doc["entries"]) == 7, "7 constituents at (3,1,3)")
    check(all(isinstance(e["mult"], int) and isinstance(e["degree"], str) for e in doc["entries"]),
          "multiplicities are numbers, degrees are strings")

    r = run("--format", "json", "decompose", "--m", "0", "--q", "3", "--n", "5")
    doc = json.loads(r.stdout)
    check(r.returncode == 0 and len(doc["entries"]) == 1 and doc["entries"][0]["label"] == "ι:()",
          "decompose m=0 is the trivial module")

    raw = subprocess.run([BIN, "--format", "csv", "decompose", "--m", "1", "--q", "2"], capture_output=True)
    check(raw.stdout.startswith(b"label,mult,class_size,degree\r\n"), "csv header with CRLF line ends")


def test_determinism():
    args = ("--format", "json", "stability", "--m", "1", "--q", "2", "--n-max", "5")
    a, b = run(*args), run(*args)
    check(a.returncode == 0 and a.stdout == b.stdout, "stability output is byte-identical across runs")
    env = dict(os.environ, GLPERM_THREADS="3")
    c = run(*args, env=env)
    check(c.stdout == a.stdout, "stability output does not depend on thread count")


def test_stability():
    r = run("--format", "json", "stability", "--m", "1", "--q", "2", "--n-max", "6")
    doc = json.loads(r.stdout)
    check(r.returncode == 0 and doc["observed_stability_degree"] == 3 and doc["bound_satisfied"],
          "stability m=1 q=2 degree 3")
    r = run("--format", "json", "stability", "--m", "0", "--q", "2", "--n-max", "2")
    check(r.returncode == 0 and json.loads(r.stdout)["observed_stability_degree"] == 0, "stability m=0 degree 0")
    r = run("stability", "--m", "1", "--q", "2", "--n-max", "6")
    check("observed stability degree 3" in r.stdout, "stability table footer")


def test_zigzag():
    cases = [("ι:(1)", "ι:(1,1)", "2", 2), ("", "ι:(1,1)", "5", 5), ("ι:(3)", "ι:(4)", "2", 1)]
    for src, dst, q, want in cases:
        r = run("--format", "json", "zigzag", "--from", src, "--to", dst, "--q", q)
        check(r.returncode == 0 and json.loads(r.stdout)["value"] == want, f"zigzag {src!r} -> {dst!r} at q={q}")
    r = run("zigzag", "--from", "ι:(1)", "--to", "ι:(1,1)", "--q", "2")
    check(r.stdout.strip() == "2", "zigzag plain output")


def test_oracle_and_dims():
    r = run("--format", "json", "oracle", "double-cosets", "--n", "3", "--m", "1", "--q", "2")
    check(r.returncode == 0 and json.loads(r.stdout)["value"] == 7, "oracle double cosets (3,1,2)")
    r = run("--format", "json", "oracle", "vic-count", "--m", "1", "--n", "3", "--q", "2")
    check(json.loads(r.stdout)["value"] == 28, "oracle vic count (1,3,2)")
    r = run("--format", "json", "oracle", "classes", "--n", "3", "--q", "2")
    check(json.loads(r.stdout)["value"] == 6, "oracle classes GL3(F2)")
    r = run("dims", "--m", "1", "--q", "2")
    check(r.returncode == 0, "dims exits 0")


def test_verify():
    r = run("verify", "--quick")
    lines = [json.loads(line) for line in r.stdout.splitlines()]
    check(r.returncode == 0 and lines and all(l["status"] == "pass" for l in lines), "verify --quick passes")
    r = run("verify", "--suite", "degrees", "--q", "2", "--n-max", "4")
    check(r.returncode == 0 and len(r.stdout.splitlines()) == 1, "verify degrees suite")


def test_errors():
    r = run("decompose", "--m", "1", "--q", "6")
    check(r.returncode == 2 and json.loads(r.stderr)["error"], "non prime power exits 2 with a JSON error")
    r = run("zigzag", "--from", "ι:(1", "--to", "ι:(1,1)", "--q", "2")
    check(r.returncode == 2, "malformed label exits 2")
    r = run("zigzag", "--from", "ι:(1)", "--to", "ι:(1,1,1)", "--q", "2", "--m", "1")
    check(r.returncode == 2, "norm mismatch exits 2")
    r = run("oracle", "double-cosets", "--n", "9", "--m", "3", "--q", "2")
    check(r.returncode == 2 and "guard" in r.stderr.lower(), "oversized oracle request exits 2")
    r = run("--strict", "decompose", "--m", "1", "--q", "11")
    check(r.returncode == 1, "strict mode fails when the oracle check is unavailable")
    r = run("nonsense")
    check(r.returncode == 2, "unknown subcommand exits 2")


def test_output_file():
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "out.json")
        r = run("--format", "json", "-o", path, "decompose", "--m", "1", "--q", "2")
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        check(r.returncode == 0 and r.stdout == "" and doc["checks"]["sum_sq"] == 7, "--output writes the file")


for t in (test_decompose, test_determinism, test_stability, test_zigzag, test_oracle_and_dims, test_verify,
          test_errors, test_output_file):
    t()

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
