"""Command-line surface: analyze, witness, verify, batch.

Problem files are flat key = value text: required keys p, vars, gens, with
gens a comma-separated list of polynomial expressions; optional keys max_q,
t_min, t_max.  '#' starts a comment.  Exit codes: 0 success, 2 malformed
input, 3 not a complete intersection, 4 resource cap exceeded, 5 witness
preconditions unmet.
"""

from __future__ import annotations

import argparse
import json
import sys

from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, RegularSequenceError, ResourceLimit
from .frobenius import CompleteIntersection, TauClass, classify_tau, compute_tau
from .invariants import analyze
from .localcoh import DEFAULT_MAX_COLUMNS, kernel_witness, verify_injectivity
from .ring import RingDescriptor, parse_polynomial

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NOT_CI = 3
EXIT_RESOURCE = 4
EXIT_NO_WITNESS = 5

_KNOWN_KEYS = ("p", "vars", "gens", "max_q", "t_min", "t_max")
_MAX_WINDOW = 20


@dataclass
class ProblemFile:
    ci: CompleteIntersection
    max_q: int | None
    t_min: int | None
    t_max: int | None


def load_problem(path: str) -> ProblemFile:
    entries: dict[str, tuple[str, int, int]] = {}
    text = Path(path).read_text()
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise ParseError(f"{path}:{line_no}: expected 'key = value'", line=line_no)
        k = key.strip()
        if k not in _KNOWN_KEYS:
            raise ParseError(f"{path}:{line_no}: unknown key {k!r}", line=line_no)
        if k in entries:
            raise ParseError(f"{path}:{line_no}: duplicate key {k!r}", line=line_no)
        value_col = len(key) + 1 + (len(value) - len(value.lstrip()))
        entries[k] = (value.strip(), line_no, value_col)
    for k in ("p", "vars", "gens"):
        if k not in entries:
            raise ParseError(f"{path}: missing required key {k!r}")

    def int_entry(k):
        value, line_no, _ = entries[k]
        try:
            return int(value)
        except ValueError:
            raise ParseError(
                f"{path}:{line_no}: {k} must be an integer, got {value!r}",
                line=line_no,
            ) from None

    p = int_entry("p")
    names, line_no, _ = entries["vars"]
    try:
        ring = RingDescriptor(p, tuple(s.strip() for s in names.split(",")))
    except ValueError as e:
        raise ParseError(f"{path}:{line_no}: {e}", line=line_no) from None
    gens_value, gens_line, gens_col = entries["gens"]
    forms = []
    offset = 0
    for chunk in gens_value.split(","):
        start = offset + (len(chunk) - len(chunk.lstrip()))
        try:
            forms.append(parse_polynomial(chunk, ring))
        except ParseError as e:
            col = gens_col + start + (e.position or 0) + 1
            raise ParseError(
                f"{path}:{gens_line}:{col}: {e}", position=e.position, line=gens_line
            ) from None
        offset += len(chunk) + 1
    ci = CompleteIntersection(ring, tuple(forms))
    return ProblemFile(
        ci=ci,
        max_q=int_entry("max_q") if "max_q" in entries else None,
        t_min=int_entry("t_min") if "t_min" in entries else None,
        t_max=int_entry("t_max") if "t_max" in entries else None,
    )


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, TauClass):
        return value.value
    return str(value)


def _print_pairs(pairs):
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k.ljust(width)}  {_fmt(v)}")


def cmd_analyze(args) -> int:
    problem = load_problem(args.path)
    report = analyze(problem.ci)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        _print_pairs(list(report.to_json_dict().items()))
    return EXIT_OK


def cmd_witness(args) -> int:
    problem = load_problem(args.path)
    tau_result = compute_tau(problem.ci)
    if not tau_result.is_m_primary:
        kind = classify_tau(tau_result)
        print(f"no witness: tau is not m-primary proper ({kind.value})", file=sys.stderr)
        if kind is TauClass.NON_F_PURE_LOCUS_POSITIVE_DIMENSIONAL:
            gens = ", ".join(str(g) for g in tau_result.tau.groebner())
            print(f"tau = ({gens})", file=sys.stderr)
        return EXIT_NO_WITNESS
    witness = kernel_witness(
        problem.ci, tau_result, max_q=args.max_q or problem.max_q
    )
    payload = dict(witness.to_json_dict(), frobenius_image_is_zero=True)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        _print_pairs(list(payload.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = load_problem(args.path)
    t_min = args.from_degree if args.from_degree is not None else problem.t_min
    t_max = args.to_degree if args.to_degree is not None else problem.t_max
    if t_min is None or t_max is None:
        print(
            "verify needs a degree window: --from/--to or t_min/t_max in the file",
            file=sys.stderr,
        )
        return EXIT_BAD_INPUT
    if t_max - t_min + 1 > _MAX_WINDOW:
        print(f"degree window is capped at {_MAX_WINDOW} degrees", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = analyze(problem.ci)
    max_cols = args.max_cols or DEFAULT_MAX_COLUMNS
    rows = []
    capped = None
    for t in range(t_min, t_max + 1):
        try:
            rows.append(verify_injectivity(problem.ci, t, max_cols=max_cols))
        except ResourceLimit as e:
            capped = str(e)
            break
    consistent, checked = _consistency(problem.ci, report, rows)
    if args.json:
        payload = {
            "rows": [r.to_json_dict() for r in rows],
            "consistent": consistent,
            "checked": checked,
        }
        if capped:
            payload["capped"] = capped
        print(json.dumps(payload, indent=2))
    else:
        print("degree  dim  kernel_dim")
        for r in rows:
            print(f"{r.degree:6d}  {r.dim_source:3d}  {r.dim_kernel:10d}")
        label = ", ".join(checked) if checked else "no applicable bound"
        print(f"consistency: {'PASS' if consistent else 'FAIL'} ({label})")
    if capped:
        print(f"stopped early: {capped}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def _consistency(ci, report, rows):
    """thmA: injective strictly below the bound, a kernel exactly at it.
    thmB: injective in negative degrees once p clears the threshold for an
    isolated singularity.  Both checked only against the rows at hand."""
    checked = []
    ok = True
    bound = report.thmA_bound
    if bound is not None:
        checked.append("thmA")
        for r in rows:
            if r.degree < bound and r.dim_kernel != 0:
                ok = False
            if r.degree == bound and r.dim_kernel < 1:
                ok = False
    if report.isolated_singularity and ci.ring.p >= report.thmB_threshold:
        checked.append("thmB")
        for r in rows:
            if r.degree < 0 and r.dim_kernel != 0:
                ok = False
    return ok, checked


def cmd_batch(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        print(f"not a directory: {directory}", file=sys.stderr)
        return EXIT_BAD_INPUT
    files = sorted(f for f in directory.iterdir() if f.is_file())
    failures = 0
    for f in files:
        try:
            report = analyze(load_problem(str(f)).ci)
            record = {"file": f.name, "ok": True, "report": report.to_json_dict()}
        except (ParseError, RegularSequenceError, ResourceLimit, ValueError, OSError) as e:
            failures += 1
            record = {
                "file": f.name,
                "ok": False,
                "error": {"exit_code": _exit_code_for(e), "message": str(e)},
            }
        print(json.dumps(record))
    if files and failures == len(files):
        return 1
    return EXIT_OK


def _exit_code_for(exc) -> int:
    if isinstance(exc, RegularSequenceError):
        return EXIT_NOT_CI
    if isinstance(exc, ResourceLimit):
        return EXIT_RESOURCE
    return EXIT_BAD_INPUT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--max-q", type=int, default=None, help="cap on denominators q")
    common.add_argument(
        "--max-cols", type=int, default=None, help="cap on matrix columns"
    )
    parser = argparse.ArgumentParser(
        prog="fsing",
        description="Frobenius invariants of graded complete intersections over F_p",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_analyze = sub.add_parser("analyze", parents=[common], help="full invariant report")
    p_analyze.add_argument("path")
    p_analyze.set_defaults(handler=cmd_analyze)
    p_witness = sub.add_parser(
        "witness", parents=[common], help="sharp Frobenius-kernel witness class"
    )
    p_witness.add_argument("path")
    p_witness.set_defaults(handler=cmd_witness)
    p_verify = sub.add_parser(
        "verify", parents=[common], help="verify injectivity degree by degree"
    )
    p_verify.add_argument("path")
    p_verify.add_argument("--from", dest="from_degree", type=int, default=None)
    p_verify.add_argument("--to", dest="to_degree", type=int, default=None)
    p_verify.set_defaults(handler=cmd_verify)
    p_batch = sub.add_parser(
        "batch", parents=[common], help="analyze every file in a directory"
    )
    p_batch.add_argument("directory")
    p_batch.set_defaults(handler=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as e:
        print(str(e), file=sys.stderr)
        return EXIT_BAD_INPUT
    except RegularSequenceError as e:
        print(f"not a complete intersection: {e}", file=sys.stderr)
        return EXIT_NOT_CI
    except ResourceLimit as e:
        print(f"resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
