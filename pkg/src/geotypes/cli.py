"""Command-line interface: ``geotypes [--json] COMMAND FILE [ARGS]``.

Exit codes: 0 success, 1 input or validation error, 2 property violation
(truncated class, indeterminate relation), 3 budget exceeded.  Every error
also writes a one-line JSON diagnostic to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import io
from .boundary import check_injectivity, orbit, parse_label, s_code_table, u_code_table
from .codes import format_word, parse_bicode
from .core import GeometricType, admissible_words, is_mixing, realizability_warnings, validate, word_count
from .equivalence import DEFAULT_CAP, class_of, compare_types
from .errors import BudgetExceeded, GeoTypeError, IndeterminateError, InvalidGeometricType
from .refinement import refine_if_needed
from .shift import DEFAULT_BUDGET, classify, enumerate_periodic, is_admissible

OK, INPUT_ERROR, PROPERTY_VIOLATION, OVER_BUDGET = 0, 1, 2, 3


class _Failure(Exception):
    """Command failure; ``output`` is an optional (payload, lines) report to print first."""

    def __init__(self, code, kind, detail, extra=None, output=None):
        super().__init__(detail)
        self.code, self.kind, self.detail = code, kind, detail
        self.extra, self.output = extra or {}, output


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Failure(INPUT_ERROR, "io", f"{path}: {exc.strerror}") from None
    return io.loads(text)


def _code_arg(T, text):
    w = parse_bicode(text)
    if not is_admissible(T, w):
        raise _Failure(INPUT_ERROR, "inadmissible", f"code {w} is not admissible for this type")
    return w


# Each command returns (payload, table_lines, exit_code).

def cmd_validate(args):
    path = args.file
    try:
        with open(path, encoding="utf-8") as fh:
            raw = io.loads_raw(fh.read())
    except OSError as exc:
        raise _Failure(INPUT_ERROR, "io", f"{path}: {exc.strerror}") from None
    report = validate(raw)
    payload = report.as_dict()
    lines = ["valid" if report.ok else "invalid"]
    lines += [f"  {a}: {d}" for a, d in report.violations]
    if report.ok:
        warnings = realizability_warnings(GeometricType(raw["n"], raw["hv"], raw["rho"], raw["eps"]))
        payload["warnings"] = warnings
        lines += [f"  warning: {w}" for w in warnings]
        return payload, lines, OK
    raise _Failure(INPUT_ERROR, "invalid-type", "geometric type axioms violated", payload, (payload, lines))


def cmd_refine(args):
    T = _load(args.file)
    B, applied = refine_if_needed(T)
    if args.output:
        io.write_type(B, args.output)
        return {"applied": applied, "output": args.output}, [f"applied: {str(applied).lower()}"], OK
    payload = {"applied": applied, "type": io.type_to_dict(B)}
    return payload, [f"applied: {str(applied).lower()}", io.dumps(B).rstrip("\n")], OK


def cmd_incidence(args):
    T = _load(args.file)
    A = T.incidence
    payload = {"matrix": A.tolist(), "binary": T.binary, "mixing": is_mixing(A)}
    width = max(len(str(x)) for row in A.tolist() for x in row)
    lines = [" ".join(str(x).rjust(width) for x in row) for row in A.tolist()]
    lines += [f"binary: {str(T.binary).lower()}", f"mixing: {str(payload['mixing']).lower()}"]
    return payload, lines, OK


def cmd_orbit(args):
    T = _load(args.file)
    orb = orbit(T, parse_label(args.label))
    payload = orb.as_dict()
    lines = [
        "transient: " + " ".join(payload["transient"]),
        "cycle: " + " ".join(payload["cycle"]),
    ]
    return payload, lines, OK


def cmd_boundary_codes(args):
    T = _load(args.file)
    rows = [(str(lbl), str(code)) for lbl, code in s_code_table(T).items()]
    rows += [(str(lbl), str(code)) for lbl, code in u_code_table(T).items()]
    injective = check_injectivity(T)
    payload = {"codes": [{"label": a, "code": b} for a, b in rows], "injective": injective}
    lines = [f"{a}\t{b}" for a, b in rows] + [f"injective: {str(injective).lower()}"]
    return payload, lines, OK


def cmd_classify(args):
    T = _load(args.file)
    flags = classify(T, _code_arg(T, args.code))
    payload = flags.as_dict()
    lines = [f"{key}: {str(val).lower()}" for key, val in payload.items()]
    return payload, lines, OK


def cmd_class(args):
    T = _load(args.file)
    report = class_of(T, _code_arg(T, args.code), args.cap)
    payload = report.as_dict()
    lines = [str(m) for m in report.members]
    lines += [f"{a} ~{rel} {b}" for a, rel, b in payload["chain"]]
    lines.append(f"truncated: {str(report.truncated).lower()}")
    if report.truncated:
        raise _Failure(PROPERTY_VIOLATION, "truncated-class", f"class exceeds cap={args.cap}", output=(payload, lines))
    return payload, lines, OK


def cmd_compare(args):
    T1, T2 = _load(args.file), _load(args.file2)
    report = compare_types(T1, T2)
    payload = {
        "verdict": report.verdict,
        "structurally_equal": report.structurally_equal,
        "refined_equal": report.refined_equal,
    }
    return payload, [f"{k}: {v if isinstance(v, str) else str(v).lower()}" for k, v in payload.items()], OK


def cmd_words(args):
    T = _load(args.file)
    count = word_count(T.incidence, args.m)
    payload = {"m": args.m, "count": count}
    lines = [f"count: {count}"]
    if args.list:
        if count > args.budget:
            raise _Failure(OVER_BUDGET, "budget", f"{count} words exceed budget {args.budget}")
        words = [format_word(w) for w in admissible_words(T.incidence, args.m)]
        payload["words"] = words
        lines += words
    return payload, lines, OK


def cmd_periodic(args):
    T = _load(args.file)
    codes = enumerate_periodic(T, args.p, args.budget)
    payload = {"p": args.p, "codes": [str(c) for c in codes]}
    return payload, payload["codes"], OK


def build_parser():
    parser = argparse.ArgumentParser(prog="geotypes", description="Geometric types of Markov partitions.")
    parser.add_argument("--json", action="store_true", help="machine output mode")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the type axioms")
    p = add("refine", cmd_refine, "binary refinement (applied only when needed)")
    p.add_argument("-o", "--output", help="write the refined type here")
    add("incidence", cmd_incidence, "incidence matrix with binary/mixing flags")
    add("orbit", cmd_orbit, "orbit of a boundary label").add_argument("label")
    add("boundary-codes", cmd_boundary_codes, "all s- and u-boundary codes")
    add("classify", cmd_classify, "stratum flags of a code").add_argument("code")
    p = add("class", cmd_class, "T-equivalence class of a code")
    p.add_argument("code")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    add("compare", cmd_compare, "compare binary refinements").add_argument("file2")
    p = add("words", cmd_words, "count admissible words of length M")
    p.add_argument("m", type=int)
    p.add_argument("--list", action="store_true")
    p.add_argument("--budget", type=int, default=10_000)
    p = add("periodic", cmd_periodic, "periodic codes with period <= P")
    p.add_argument("p", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _emit(payload, lines, as_json, stream):
    if as_json:
        stream.write(json.dumps(payload) + "\n")
    else:
        stream.write("\n".join(lines) + "\n")


def _diagnose(kind, detail, code, extra=None):
    record = {"error": kind, "detail": detail, "exit_code": code}
    if extra:
        record.update(extra)
    sys.stderr.write(json.dumps(record) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return OK
        return _diagnose("usage", "bad command line", INPUT_ERROR)
    try:
        payload, lines, code = args.func(args)
    except _Failure as exc:
        if exc.output:
            _emit(*exc.output, args.json, sys.stdout)
        return _diagnose(exc.kind, exc.detail, exc.code, exc.extra)
    except InvalidGeometricType as exc:
        return _diagnose("invalid-type", str(exc), INPUT_ERROR, exc.report.as_dict())
    except BudgetExceeded as exc:
        return _diagnose("budget", str(exc), OVER_BUDGET)
    except IndeterminateError as exc:
        return _diagnose("indeterminate", str(exc), PROPERTY_VIOLATION)
    except GeoTypeError as exc:
        kind = re.sub(r"(?<!^)(?=[A-Z])", "-", type(exc).__name__).lower()
        return _diagnose(kind, str(exc), INPUT_ERROR)
    _emit(payload, lines, args.json, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
