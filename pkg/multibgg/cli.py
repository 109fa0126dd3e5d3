"""
Command line front end.

    python -m multibgg run corpus/res_dm_degree_two.json
    python -m multibgg toric-rr --builtin hirzebruch 3 --module m.json --format json
    python -m multibgg res-dm --ring ring.json --dm dm.json --max-iter 4

Exit status: 0 success, 2 malformed input, 3 algebraic validation failure,
4 iteration budget exhausted (the partial result is still written).
"""
import argparse
import json
import sys
from typing import List, Optional

from werkzeug.datastructures import MultiDict

from multibgg.colorized_logger import get_logger
from multibgg.errors import AlgebraicError, SchemaError
from multibgg.io.builtins import builtin_ring
from multibgg.io.serialize import field_from_json, ring_from_json
from multibgg.jobs import JOBS, JobSpec, KEYS
from multibgg.jobs.JobSpec import FORMATS
from multibgg.main import run_spec
from reports import Report

logger = get_logger('multibgg.cli')

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_ALGEBRA = 3
EXIT_TRUNCATED = 4


def _read_json(path: str, pointer: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e.strerror}", pointer) from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {e.msg} (line {e.lineno})", pointer) from None


def _json_arg(text: str, pointer: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{text!r} is not valid JSON: {e.msg}", pointer) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multibgg",
                                     description="Differential modules, BGG functors and linear strands "
                                                 "over multigraded polynomial rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=FORMATS, default=None)
    output.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    output.add_argument("--log-level", default=None)

    run = sub.add_parser("run", parents=[output], help="run a JobSpec file")
    run.add_argument("spec", metavar="JOBSPEC")

    sub.add_parser("list", help="list the available commands")

    inputs = argparse.ArgumentParser(add_help=False)
    ring = inputs.add_mutually_exclusive_group(required=True)
    ring.add_argument("--ring", metavar="FILE", help="ring description (JSON)")
    ring.add_argument("--builtin", nargs="+", metavar="NAME",
                      help="hirzebruch A | weighted-projective [W,...] | standard N")
    inputs.add_argument("--field", default=None, help="QQ (default) or ZZ/p, for --builtin")
    inputs.add_argument("--payload", metavar="FILE", help="payload object; the flags below add to it")
    inputs.add_argument("--module", metavar="FILE")
    inputs.add_argument("--dm", metavar="FILE")
    inputs.add_argument("--emodule", metavar="FILE")
    inputs.add_argument("--degree-list", metavar="FILE")
    inputs.add_argument("--degree", metavar="JSON", help="a single degree, e.g. [1,0]")
    inputs.add_argument("--index", type=int)
    inputs.add_argument("--twist", metavar="JSON")
    inputs.add_argument("--length", type=int)
    inputs.add_argument("--resolve", action="store_true", help="minimize-dm: resolve before minimizing")
    inputs.add_argument("--max-iter", type=int)
    inputs.add_argument("--iterations", type=int)
    inputs.add_argument("--theta-bound", type=int)

    for key in KEYS:
        sub.add_parser(key.value, parents=[inputs, output], help=JOBS[key].short_description)
    return parser


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    if args.ring:
        ring = ring_from_json(_read_json(args.ring, "/ring"), "/ring")
    else:
        field = field_from_json(args.field, "/ring/field")
        ring = builtin_ring(args.builtin[0], " ".join(args.builtin[1:]), field)

    payload = _read_json(args.payload, "/payload") if args.payload else {}
    if not isinstance(payload, dict):
        raise SchemaError("the payload is a JSON object", "/payload")
    for key in ("module", "dm", "emodule"):
        path = getattr(args, key)
        if path:
            payload[key] = _read_json(path, f"/payload/{key}")
    if args.degree is not None:
        payload["degree"] = _json_arg(args.degree, "/payload/degree")
    if args.twist is not None:
        payload["twist"] = _json_arg(args.twist, "/payload/twist")
    if args.index is not None:
        payload["index"] = args.index
    if args.length is not None:
        payload["length"] = args.length
    if args.resolve:
        payload["resolve"] = True

    options = MultiDict()
    if args.degree_list:
        options["degree_list"] = json.dumps(_read_json(args.degree_list, "/options/degreeList"))
    for name in ("max_iter", "iterations", "theta_bound"):
        value = getattr(args, name)
        if value is not None:
            if value < 0:
                raise SchemaError(f"--{name.replace('_', '-')} must be non-negative", f"/options/{name}")
            options[name] = value
    return JobSpec(KEYS(args.command), ring, payload, options)


def format_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if fmt == "both":
        return report.to_text() + "\n\n" + json.dumps(report.to_json(), indent=2)
    return report.to_text()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_SCHEMA

    if args.command == "list":
        for key, job in JOBS.items():
            print(f"{key.value:14} {job.title}: {job.short_description}")
        return EXIT_OK

    try:
        if args.command == "run":
            spec = JobSpec.from_json(_read_json(args.spec, ""))
        else:
            spec = spec_from_args(args)
        if args.log_level:
            spec.options["log_level"] = args.log_level
        report = run_spec(spec)
    except SchemaError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except AlgebraicError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ALGEBRA

    _emit(format_report(report, args.format or spec.format), args.out)
    if report.truncated:
        print("warning: iteration budget exhausted, result is partial", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK
