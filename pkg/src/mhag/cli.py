"""Command-line interface.

Subcommands:

``verify``          run axiom suites over a session file and emit a report
``oracle-compare``  run only the closed-form comparison suite
``export``          dump structure constants of a finite session
``eval``            apply a single structure map to explicit elements

Exit codes: 0 all checks passed, 1 at least one axiom failed (the report
is still written), 2 malformed input (bad file, schema, arguments).

Reports and exports are deterministic: the same session file, seed, and
window always produce byte-identical output.  The environment variable
``MHAG_THREADS`` caps the number of worker threads used to evaluate
checks; results are merged in a fixed order, so the thread count never
changes the report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

from .cograded import (comul_covered, crossing_apply, graded_antipode,
                       graded_counit)
from .crossed import commutation_residual, dcp_mul, twist_inv, twist_map
from .linear import LinComb, label_key
from .quasitri import r_apply
from .session import Session, SessionError, grading_to_json, session_from_json
from .suites import SUITE_NAMES, suite_axioms, _fmt, _lab


def _load_session(args) -> Session:
    try:
        with open(args.spec, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SessionError(f"cannot read spec file {args.spec!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise SessionError(f"spec file {args.spec!r} is not valid JSON: "
                           f"{exc}")
    return session_from_json(data, seed=args.seed, window=args.window)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _workers() -> int:
    raw = os.environ.get("MHAG_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise SessionError(f"MHAG_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def run_verify(S: Session, suites: List[str],
               max_workers: int = 1) -> Dict:
    """Run the named suites and assemble the overall report.

    Checks are evaluated in listed order; with several workers they run
    concurrently but are merged back in the same order, so the first
    counterexample of each check — and the report as a whole — does not
    depend on the worker count.
    """
    groups = [(name, suite_axioms(S, name)) for name in suites]
    runners = [run for _, checks in groups for _, run in checks]
    if max_workers > 1 and len(runners) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda r: r(), runners))
    else:
        results = [run() for run in runners]
    report: Dict = {"suites": [], "status": "pass"}
    pos = 0
    for name, checks in groups:
        axioms = []
        for _ in checks:
            rep = results[pos]
            pos += 1
            axioms.append(rep.to_json())
            if rep.status != "pass":
                report["status"] = "fail"
        report["suites"].append({"name": name, "axioms": axioms})
    return report


def _cmd_verify(args, suites: Optional[List[str]] = None) -> int:
    S = _load_session(args)
    if suites is None:
        if args.suite:
            suites = [s.strip() for s in args.suite.split(",") if s.strip()]
            bad = [s for s in suites if s not in SUITE_NAMES]
            if bad:
                raise SessionError(
                    f"unknown suite(s) {bad}; expected a comma-separated "
                    f"subset of {', '.join(SUITE_NAMES)}")
            if not suites:
                raise SessionError("empty --suite list")
        else:
            suites = list(SUITE_NAMES)
    report = run_verify(S, suites, _workers())
    _emit(_dump(report), args.out)
    return 0 if report["status"] == "pass" else 1


def _cmd_oracle_compare(args) -> int:
    return _cmd_verify(args, suites=["oracle"])


def export_structure(S: Session) -> Dict:
    """Structure constants of a finite session: the multiplication tensor
    of every graded component and the covered comultiplication images of
    all basis elements for every grading split, in basis-lexicographic
    order."""
    finite = S.group.is_finite if S.group is not None else True
    if not finite:
        raise SessionError("export requires a finite instance")
    P = S.P
    crossed = sorted(S.crossed_labels(), key=label_key)
    components = []
    for g in S.gradings:
        entries = []
        for x in crossed:
            for y in crossed:
                prod = dcp_mul(P, g, LinComb.unit(x), LinComb.unit(y))
                for lab, c in prod.sorted_items():
                    entries.append([_lab(S, "ab", x), _lab(S, "ab", y),
                                    _lab(S, "ab", lab), S.field.to_str(c)])
        components.append({"grading": grading_to_json(g), "mul": entries})
    splits = []
    for p in S.gradings:
        for q in S.gradings:
            images = []
            for x in crossed:
                for cover in crossed:
                    half = comul_covered(
                        P, LinComb.unit(x), p, q, LinComb.unit(cover),
                        side="right", cop_first_leg=S.cop_first_leg,
                        pair_mul=S.pair_mul)
                    images.append([_lab(S, "ab", x), _lab(S, "ab", cover),
                                   _fmt(S, "abab", half)])
            splits.append({"left": grading_to_json(p),
                           "right": grading_to_json(q),
                           "side": "right", "images": images})
    return {"gradings": [grading_to_json(g) for g in S.gradings],
            "components": components, "splits": splits}


def _cmd_export(args) -> int:
    S = _load_session(args)
    _emit(_dump(export_structure(S)), args.out)
    return 0


# --------------------------------------------------------------------------
# eval: apply one structure map to explicit elements
# --------------------------------------------------------------------------

def _parse_value(S: Session, spec, pattern: str) -> LinComb:
    """Parse ``[[label..., coeff?], ...]`` into a value whose label slots
    follow ``pattern`` ('a'/'b' per slot)."""
    A, B = S.P.A, S.P.B
    if not isinstance(spec, list):
        raise SessionError(f"element must be a list of terms, got {spec!r}")
    terms: Dict = {}
    for term in spec:
        if not isinstance(term, list) or len(term) not in (len(pattern),
                                                           len(pattern) + 1):
            raise SessionError(
                f"term {term!r} must list {len(pattern)} labels plus an "
                f"optional coefficient")
        labels = term[:len(pattern)]
        coeff = (S.field.parse(str(term[len(pattern)]))
                 if len(term) > len(pattern) else S.field.one())
        lab = tuple(A.parse_label(l) if ch == "a" else B.parse_label(l)
                    for ch, l in zip(pattern, labels))
        if len(pattern) == 1:
            lab = lab[0]
        terms[lab] = terms.get(lab, S.field.zero()) + coeff
    return LinComb({l: c for l, c in terms.items()
                    if not (c == S.field.zero())})


def _grading(S: Session, idx) -> "object":
    if not isinstance(idx, int) or not 0 <= idx < len(S.gradings):
        raise SessionError(
            f"grading index {idx!r} out of range 0..{len(S.gradings) - 1}")
    return S.gradings[idx]


def eval_op(S: Session, op: str, params: Dict) -> Dict:
    """Apply one structure map; element arguments are term lists, gradings
    are indices into the session's grading list."""
    P = S.P

    def need(key):
        if key not in params:
            raise SessionError(f"op {op!r} requires argument {key!r}")
        return params[key]

    if op == "dcp-mul":
        g = _grading(S, need("grading"))
        out = dcp_mul(P, g, _parse_value(S, need("x"), "ab"),
                      _parse_value(S, need("y"), "ab"))
        return {"op": op, "result": _fmt(S, "ab", out)}
    if op == "comul-covered":
        p = _grading(S, need("left"))
        q = _grading(S, need("right"))
        side = params.get("side", "right")
        out = comul_covered(P, _parse_value(S, need("x"), "ab"), p, q,
                            _parse_value(S, need("cover"), "ab"), side=side,
                            cop_first_leg=S.cop_first_leg,
                            pair_mul=S.pair_mul)
        return {"op": op, "result": _fmt(S, "abab", out)}
    if op == "antipode":
        g = _grading(S, need("grading"))
        out = graded_antipode(P, g, _parse_value(S, need("x"), "ab"),
                              inverse=bool(params.get("inverse", False)))
        return {"op": op, "result": _fmt(S, "ab", out)}
    if op == "counit":
        val = graded_counit(P, _parse_value(S, need("x"), "ab"))
        return {"op": op, "result": S.field.to_str(val)}
    if op == "twist":
        g = _grading(S, need("grading"))
        if "ba" in params:
            out = twist_map(P, g, _parse_value(S, params["ba"], "ba"))
            return {"op": op, "result": _fmt(S, "ab", out)}
        out = twist_inv(P, g, _parse_value(S, need("ab"), "ab"))
        return {"op": op, "result": _fmt(S, "ba", out)}
    if op == "crossing":
        t = _grading(S, need("actor"))
        q = _grading(S, need("source"))
        target, out = crossing_apply(P, t, q, _parse_value(S, need("x"),
                                                           "ab"),
                                     skew=S.skew, pair_mul=S.pair_mul)
        return {"op": op, "target": grading_to_json(target),
                "result": _fmt(S, "ab", out)}
    if op == "r-apply":
        p = _grading(S, need("left"))
        q = _grading(S, need("right"))
        uv = _parse_value(S, need("uv"), "abab")
        out = r_apply(P, p, q, uv, params.get("side", "left"), S.w)
        return {"op": op, "result": _fmt(S, "abab", out)}
    if op == "pair":
        val = P.pair(_parse_value(S, need("a"), "a"),
                     _parse_value(S, need("b"), "b"))
        return {"op": op, "result": S.field.to_str(val)}
    if op == "commutation-residual":
        g = _grading(S, need("grading"))
        lhs, rhs = commutation_residual(P, g, _parse_value(S, need("a"), "a"),
                                        _parse_value(S, need("b"), "b"),
                                        _parse_value(S, need("cover"), "ab"))
        return {"op": op, "lhs": _fmt(S, "ab", lhs),
                "rhs": _fmt(S, "ab", rhs)}
    raise SessionError(
        f"unknown op {op!r}; expected one of dcp-mul, comul-covered, "
        f"antipode, counit, twist, crossing, r-apply, pair, "
        f"commutation-residual")


def _cmd_eval(args) -> int:
    S = _load_session(args)
    try:
        params = json.loads(args.args) if args.args else {}
    except json.JSONDecodeError as exc:
        raise SessionError(f"--args is not valid JSON: {exc}")
    if not isinstance(params, dict):
        raise SessionError("--args must be a JSON object")
    result = eval_op(S, args.op, params)
    _emit(_dump(result), args.out)
    return 0


def _common_flags(sub) -> None:
    sub.add_argument("--spec", required=True,
                     help="session description file (JSON)")
    sub.add_argument("--seed", type=int, default=None,
                     help="override the sampling seed")
    sub.add_argument("--window", type=int, default=None,
                     help="override the label window for infinite instances")
    sub.add_argument("--out", default=None,
                     help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mhag",
        description="Construct group-cograded crossed products from a "
                    "dual pairing and machine-check their axioms.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_verify = subs.add_parser(
        "verify", help="run axiom suites and emit a JSON report")
    _common_flags(p_verify)
    p_verify.add_argument(
        "--suite", default=None,
        help=f"comma-separated subset of: {', '.join(SUITE_NAMES)} "
             f"(default: all)")

    p_oracle = subs.add_parser(
        "oracle-compare",
        help="compare the generic engine against closed forms")
    _common_flags(p_oracle)

    p_export = subs.add_parser(
        "export", help="dump structure constants of a finite session")
    _common_flags(p_export)

    p_eval = subs.add_parser(
        "eval", help="apply one structure map to explicit elements")
    _common_flags(p_eval)
    p_eval.add_argument("--op", required=True,
                        help="structure map to apply")
    p_eval.add_argument("--args", default="{}",
                        help="JSON object with the op's arguments")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"verify": _cmd_verify, "oracle-compare": _cmd_oracle_compare,
                "export": _cmd_export, "eval": _cmd_eval}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
