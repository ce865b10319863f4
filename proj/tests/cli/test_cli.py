#!/usr/bin/env python3
"""Contract checks for htaut-cli: exit codes, schemas, golden output, determinism."""

import json
import math
import pathlib
import subprocess
import sys
from fractions import Fraction

import jsonschema

UPDATE = "--update" in sys.argv
args = [a for a in sys.argv[1:] if a != "--update"]
CLI, SCHEMAS, HERE = args[0], pathlib.Path(args[1]), pathlib.Path(args[2])
INPUTS, GOLDEN = HERE / "inputs", HERE / "golden"

failures = []


def fail(name, msg):
    failures.append(f"{name}: {msg}")


def run(argv, stdin=None):
    p = subprocess.run([CLI, *argv], input=stdin, capture_output=True, timeout=600)
    return p.returncode, p.stdout


def sigma(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def marked(d):
    return math.factorial(d - 2) ** 2


def check_delliptic(doc):
    for e in doc["entries"]:
        d = e["d"]
        d00 = 4 * marked(d) * (d - 1) * sigma(d)
        d01 = 2 * marked(d) * sum(sigma(i) * sigma(d - i) for i in range(1, d))
        assert Fraction(e["delta00"]["stratum_sum"]) == d00, f"delta00 d={d}"
        assert Fraction(e["delta00"]["closed_form"]) == d00
        assert Fraction(e["delta01"]["stratum_sum"]) == d01, f"delta01 d={d}"
        assert sum(Fraction(c["total"]) for c in e["delta00"]["ledger"]) == d00
        assert sum(Fraction(c["total"]) for c in e["delta01"]["ledger"]) == d01
    values = [e["delta00"]["stratum_sum"] for e in doc["entries"]]
    assert values[:3] == ["12", "32", "336"], values


def check_value(expected):
    def check(doc):
        assert doc["value"] == expected, doc["value"]
    return check


def check_pairing(expected):
    def check(doc):
        assert doc["pairing"] == expected, doc["pairing"]
    return check


def check_text(expected):
    def check(doc):
        assert doc["text"] == expected, doc["text"]
    return check


def check_verdict(expected):
    def check(doc):
        assert doc["verdict"] is expected
    return check


def check_error(kind):
    def check(doc):
        assert doc["error"]["kind"] == kind, doc["error"]
    return check


def check_labels(expected):
    def check(doc):
        assert doc["report"]["labels"] == expected, doc["report"]["labels"]
    return check


def inp(name):
    return ["--input", str(INPUTS / name)]


# name, argv, expected exit, schema, semantic check
CASES = [
    ("integrate_psi", ["integrate", *inp("integrate_psi.json")], 0, "integrate", check_value("1/24")),
    ("integrate_kappa", ["integrate", *inp("integrate_kappa.json")], 0, "integrate", check_value("5")),
    ("integrate_class", ["integrate", *inp("integrate_class.json")], 0, "integrate", check_value("13/2")),
    ("intersect_boundary", ["intersect-boundary", *inp("intersect_boundary.json")], 0, "intersect-boundary",
     check_pairing("-1")),
    ("intersect_boundary_loop", ["intersect-boundary", *inp("intersect_boundary_loop.json")], 0,
     "intersect-boundary", check_pairing("0")),
    ("validate_ggraph_valid", ["validate-ggraph", *inp("validate_ggraph_valid.json")], 0, "validate-ggraph",
     check_labels([])),
    ("validate_ggraph_invalid", ["validate-ggraph", *inp("validate_ggraph_invalid.json")], 2, "validate-ggraph",
     check_labels(["genus"])),
    ("hurwitz_single_cover", ["hurwitz-count", *inp("hurwitz_single_cover.json")], 0, "hurwitz-count",
     check_value("1")),
    ("hurwitz_flags", ["hurwitz-count", "--degree", "3", "--type", "3", "--type", "2", "--type", "2,1"], 0,
     "hurwitz-count", check_value("1")),
    ("hurwitz_two_branch", ["hurwitz-count", "--degree", "3", "--type", "2", "--type", "2", "--type", "2,1",
                            "--type", "2,1", "--marked", "2,3", "--mode", "marked"], 0, "hurwitz-count",
     check_value("4")),
    ("intersect_ggraph", ["intersect-ggraph", *inp("intersect_ggraph.json")], 0, "intersect-ggraph", None),
    ("intersect_ggraph_smooth", ["intersect-ggraph", *inp("intersect_ggraph_smooth.json")], 0,
     "intersect-ggraph", None),
    ("pullback_corestriction", ["pullback", *inp("pullback_corestriction.json")], 0, "pullback",
     check_text("2*psi_1")),
    ("pullback_restriction", ["pullback", *inp("pullback_restriction.json")], 0, "pullback", None),
    ("pullback_forgetful", ["pullback", *inp("pullback_forgetful.json")], 0, "pullback", None),
    ("pullback_target", ["pullback", *inp("pullback_target.json")], 0, "pullback", None),
    ("pullback_boundary", ["pullback", *inp("pullback_boundary.json")], 0, "pullback", None),
    ("delliptic_4", ["delliptic", "--dmax", "4", "--json"], 0, "delliptic", check_delliptic),
    ("delliptic_7_series", ["delliptic", "--dmax", "7", "--json", "--series"], 0, "delliptic", check_delliptic),
    ("qmod_e2", ["qmod-check", "--weight", "2", *inp("e2_series.json")], 0, "qmod-check", check_verdict(True)),
    ("qmod_factorial", ["qmod-check", *inp("factorial_series.json")], 0, "qmod-check", check_verdict(False)),
    ("error_negative_exponent", ["integrate", *inp("bad_integrate.json")], 2, "error", check_error("validation")),
    ("error_unsupported", ["integrate", *inp("unsupported_integrate.json")], 2, "error",
     check_error("unsupported")),
    ("error_malformed", ["integrate", *inp("malformed.json")], 2, "error", check_error("validation")),
    ("error_no_subcommand", [], 2, "error", check_error("usage")),
    ("error_dmax_range", ["delliptic", "--dmax", "1"], 2, "error", None),
]

schemas = {}


def schema(name):
    if name not in schemas:
        schemas[name] = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    return schemas[name]


def verify(name, argv, code, schema_name, check, stdin=None):
    got_code, out = run(argv, stdin)
    again_code, again = run(argv, stdin)
    if got_code != code:
        fail(name, f"exit {got_code}, expected {code}: {out[:300]!r}")
        return None
    if again_code != got_code or again != out:
        fail(name, "output differs between runs")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        fail(name, f"not JSON: {e}")
        return None
    try:
        jsonschema.validate(doc, schema(schema_name))
    except jsonschema.ValidationError as e:
        fail(name, f"schema {schema_name}: {e.message} at {list(e.absolute_path)}")
    if check:
        try:
            check(doc)
        except AssertionError as e:
            fail(name, f"check failed: {e}")
    return out


for name, argv, code, schema_name, check in CASES:
    out = verify(name, argv, code, schema_name, check)
    if out is None or code != 0:
        continue
    golden = GOLDEN / f"{name}.json"
    if UPDATE:
        GOLDEN.mkdir(exist_ok=True)
        golden.write_bytes(out)
    elif not golden.exists():
        fail(name, "missing golden file")
    elif golden.read_bytes() != out:
        fail(name, "differs from golden file")

# The emitted delta01 series fed back through qmod-check on stdin.
code, out = run(["delliptic", "--dmax", "40", "--json", "--series"])
if code != 0:
    fail("qmod_delta01", f"delliptic exit {code}")
else:
    payload = json.dumps(json.loads(out)["series"]["delta01"]).encode()
    verify("qmod_delta01", ["qmod-check", "--input", "-"], 0, "qmod-check", check_verdict(True), payload)
    verify("qmod_delta00_named", ["qmod-check", "--input", "-", "--series-name", "delta00"], 0, "qmod-check",
           check_verdict(True), out)

# Human table is plain text and still deterministic.
code, first = run(["delliptic", "--dmax", "6", "--human"])
code2, second = run(["delliptic", "--dmax", "6", "--human"])
if code != 0 or first != second or b"336" not in first:
    fail("delliptic_human", "table missing or unstable")

for f in failures:
    print("FAIL", f)
print(f"{len(CASES) + 3 - len(failures)} passed, {len(failures)} failed")
sys.exit(1 if failures else 0)
