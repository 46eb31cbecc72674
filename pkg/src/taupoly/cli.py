"""Command-line front end.

Subcommands evaluate tau functions and correlators from JSON job
descriptors and emit deterministic JSON documents:

    taupoly tau-kp     --spec job.json [--out -]
    taupoly tau-bkp    --spec job.json
    taupoly correl-kp  --spec job.json
    taupoly correl-bkp --spec job.json
    taupoly expand     --spec job.json
    taupoly verify     [--spec job.json] [--suite wick] [--seed N] [--size N]

All rationals are read as integers or "p/q" strings and written in the
canonical reduced form; floats are rejected.  Exit codes: 0 success,
2 malformed job, 3 mathematical precondition violated (coincident points,
poles, containment), 4 coefficient/mode window too small.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .correlators import bkp_point_correlator, kp_pair_correlator
from .errors import DegeneratePointsError, WindowError
from .partitions import Partition, StrictPartition
from .polysys import system_from_json
from .series import FlowVector, RSeq, rat, rat_str
from .tau_bkp import expansion_q, nimmo_generalized
from .tau_kp import bialternant, expansion_rp
from .verify import run_suite

EXIT_OK = 0
EXIT_BAD_SPEC = 2
EXIT_MATH = 3
EXIT_WINDOW = 4


class SpecError(ValueError):
    """Malformed job document."""


def _require(spec: dict, key: str):
    if key not in spec:
        raise SpecError(f"missing field {key!r}")
    return spec[key]


def _parse_rationals(values) -> list:
    try:
        return [rat(v) for v in values]
    except ValueError as err:
        raise SpecError(str(err)) from err


def _parse_partition(obj) -> Partition:
    try:
        return Partition(obj)
    except (TypeError, ValueError) as err:
        raise SpecError(f"bad partition {obj!r}: {err}") from err


def _parse_strict(obj) -> StrictPartition:
    if isinstance(obj, dict):
        if not obj.get("strict", False):
            raise SpecError("strict partition object needs \"strict\": true")
        obj = obj.get("parts", [])
    try:
        return StrictPartition(obj)
    except (TypeError, ValueError) as err:
        raise SpecError(f"bad strict partition {obj!r}: {err}") from err


def _parse_rseq(obj) -> RSeq:
    try:
        return RSeq({int(j): rat(v) for j, v in obj.get("values", {}).items()},
                    int(obj["lo"]), int(obj["hi"]))
    except (KeyError, TypeError, ValueError) as err:
        raise SpecError(f"bad r-sequence: {err}") from err


def cmd_tau_kp(spec: dict) -> dict:
    lam = _parse_partition(_require(spec, "partition"))
    x = _parse_rationals(_require(spec, "x"))
    n = int(spec.get("n", len(x)))
    degree = lam.part(1) + max(n, 1)
    system = system_from_json(_require(spec, "system"), degree)
    return {"value": rat_str(bialternant(lam, n, system, x))}


def cmd_tau_bkp(spec: dict) -> dict:
    alpha = _parse_strict(_require(spec, "alpha"))
    x = _parse_rationals(_require(spec, "x"))
    degree = max(alpha.part(1), 1)
    system = system_from_json(_require(spec, "system"), degree)
    return {"value": rat_str(nimmo_generalized(alpha, system, x))}


def cmd_correl_kp(spec: dict) -> dict:
    lam = _parse_partition(_require(spec, "partition"))
    x = _parse_rationals(_require(spec, "x"))
    y = _parse_rationals(_require(spec, "y"))
    degree = max(lam.part(1), len(lam), 1)
    system = system_from_json(_require(spec, "system"), degree)
    return {"value": rat_str(kp_pair_correlator(lam, system, x, y))}


def cmd_correl_bkp(spec: dict) -> dict:
    alpha = _parse_strict(_require(spec, "alpha"))
    x = _parse_rationals(_require(spec, "x"))
    degree = max(alpha.part(1), 1)
    system = system_from_json(_require(spec, "system"), degree)
    return {"value": rat_str(bkp_point_correlator(alpha, system, x))}


def cmd_expand(spec: dict) -> dict:
    mode = spec.get("mode", "kp")
    r = _parse_rseq(_require(spec, "r"))
    if mode == "kp":
        lam = _parse_partition(_require(spec, "partition"))
        p = FlowVector.from_list(_parse_rationals(spec.get("p", [])))
        expansion = expansion_rp(lam, r, p)
        terms = {json.dumps(list(rho.parts)): rat_str(c)
                 for rho, c in expansion.items()}
    elif mode == "bkp":
        alpha = _parse_strict(_require(spec, "alpha"))
        p_b = FlowVector.from_list(_parse_rationals(spec.get("pB", []))).odd_part()
        expansion = expansion_q(alpha, r, p_b)
        terms = {json.dumps(list(beta.parts)): rat_str(c)
                 for beta, c in expansion.items()}
    else:
        raise SpecError(f"expand mode must be 'kp' or 'bkp', got {mode!r}")
    out = {"terms": terms}
    if "t" in spec:
        t = FlowVector.from_list(_parse_rationals(spec["t"]))
        if mode == "bkp":
            t = t.odd_part()
        out["value"] = rat_str(expansion.evaluate(t))
    return out


def cmd_verify(spec: dict, seed=None, size=None, suite=None) -> dict:
    name = suite or spec.get("suite", "all")
    seed = seed if seed is not None else int(spec.get("seed", 0))
    size = size if size is not None else spec.get("size")
    return run_suite(name, seed, int(size) if size is not None else None)


COMMANDS = {
    "tau-kp": cmd_tau_kp,
    "tau-bkp": cmd_tau_bkp,
    "correl-kp": cmd_correl_kp,
    "correl-bkp": cmd_correl_bkp,
    "expand": cmd_expand,
}


def _load_spec(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        spec = json.loads(text)
    except (OSError, json.JSONDecodeError) as err:
        raise SpecError(f"cannot read job spec: {err}") from err
    if not isinstance(spec, dict):
        raise SpecError("job spec must be a JSON object")
    _reject_floats(spec)
    return spec


def _reject_floats(node):
    if isinstance(node, float):
        raise SpecError(f"floats are not accepted: {node!r}")
    if isinstance(node, dict):
        for value in node.values():
            _reject_floats(value)
    elif isinstance(node, list):
        for value in node:
            _reject_floats(value)


def _emit(document: dict, out: str | None):
    text = json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taupoly",
                                     description="exact KP/BKP tau functions and correlators")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--spec", required=True, help="JSON job file ('-' for stdin)")
        p.add_argument("--out", default=None, help="output file ('-' for stdout)")
    v = sub.add_parser("verify")
    v.add_argument("--spec", default=None)
    v.add_argument("--out", default=None)
    v.add_argument("--suite", default=None, choices=["wick", "pfaffian", "all"])
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--size", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = _load_spec(args.spec)
        if args.command == "verify":
            document = cmd_verify(spec, seed=args.seed, size=args.size,
                                  suite=args.suite)
        else:
            if "command" in spec and spec["command"] != args.command:
                raise SpecError(f"job is for {spec['command']!r}, invoked as "
                                f"{args.command!r}")
            document = COMMANDS[args.command](spec)
    except SpecError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_SPEC
    except WindowError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_WINDOW
    except DegeneratePointsError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MATH
    _emit(document, args.out)
    if args.command == "verify" and document.get("failed"):
        return 1
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
