"""Shared helpers for the test suite.

Most tests drive the library through session-spec dictionaries, the same
JSON shape the CLI consumes, so the specs double as integration coverage
of the loader.  A terminal-summary hook prints one PASS/FAIL line per
acceptance criterion at the end of every run.
"""

from __future__ import annotations

import itertools
import json
import re

import pytest

from mhag import session_from_json

# ---------------------------------------------------------------------------
# grading / group spec shorthands (JSON shapes accepted by the loader)

IDENT = "identity"
NEG = "negation"

S3_ELEMENTS = [
    (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
]


def inner(perm):
    return {"kind": "inner", "by": list(perm)}


def cyc_inv(n):
    """The inversion automorphism of Z/n as an explicit map spec."""
    return {"kind": "map", "images": [(-i) % n for i in range(n)]}


def s3_36_gradings():
    """All 36 AutPair specs (inner x inner) over S3."""
    return [[inner(g), inner(h)]
            for g, h in itertools.product(S3_ELEMENTS, S3_ELEMENTS)]


def group_instance(kind, n=None):
    if kind == "Z":
        return {"kind": "group", "group": "Z"}
    return {"kind": "group", "group": {"kind": kind, "n": n}}


def session_spec(instance, gradings=None, enum=None, corrupt=None):
    spec = {
        "scalars": "rational",
        "instance": instance,
        "gradings": gradings if gradings is not None else [[IDENT, IDENT]],
        "enum": enum if enum is not None else {"mode": "exhaustive"},
    }
    if corrupt is not None:
        spec["corrupt"] = corrupt
    return spec


def make_session(spec, **kw):
    return session_from_json(spec, **kw)


def sampled(count, seed, window=3):
    return {"mode": "sampled", "count": count, "seed": seed, "window": window}


def write_spec(tmp_path, spec, name="session.json"):
    path = tmp_path / name
    path.write_text(json.dumps(spec))
    return str(path)


@pytest.fixture
def z2_session():
    return make_session(session_spec(group_instance("cyclic", 2)))


@pytest.fixture
def z3_session_graded():
    inv = cyc_inv(3)
    return make_session(session_spec(
        group_instance("cyclic", 3),
        gradings=[[IDENT, IDENT], [IDENT, inv], [inv, IDENT], [inv, inv]]))


# ---------------------------------------------------------------------------
# acceptance summary: one PASS/FAIL line per criterion


def _criterion_no(nodeid):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", nodeid)
    return int(m.group(1)) if m else None


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status, label in (("passed", "PASS"), ("failed", "FAIL"),
                          ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            num = _criterion_no(getattr(rep, "nodeid", ""))
            if num is not None and getattr(rep, "when", "call") == "call":
                results[num] = label
        if status == "error":
            for rep in terminalreporter.stats.get(status, []):
                num = _criterion_no(getattr(rep, "nodeid", ""))
                if num is not None:
                    results.setdefault(num, "FAIL")
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(
                f"criterion {num}: {results[num]}")
