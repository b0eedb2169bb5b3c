"""Command-line interface: ``pcalm <command> ...``.

Positions use commas within a component and semicolons between the
components of a sum (``"7,5,3;3"``); shapes use the same syntax
(``"4,4,2;2,1"``).  ``--json`` prints one compact JSON record per line.
Exit status is 0 on success, 1 when a suite expected to pass finds a
counterexample, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from pcalm import gamecore as gc
from pcalm import verify, welter, young

SCHEMA_VERSION = 1
DEFAULT_MAX_BOUND = 12


class UsageError(Exception):
    pass


def max_bound() -> int:
    return int(os.environ.get("GRUNDY_MAX_BOUND", DEFAULT_MAX_BOUND))


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def record(command: str, inputs: dict, result) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "result": result}


def parse_position(text: str) -> list[tuple[int, ...]]:
    text = "".join(text.split())
    try:
        return [tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";")]
    except ValueError:
        raise UsageError(f"cannot parse position {text!r}") from None


def parse_shape(text: str) -> young.Shape:
    text = "".join(text.split())
    try:
        comps = [tuple(int(x) for x in chunk.split(",") if x) for chunk in text.split(";")]
        if len(comps) == 1:
            return young.YoungDiagram(comps[0])
        return young.DiagramTuple(tuple(young.YoungDiagram(c) for c in comps))
    except ValueError as exc:
        raise UsageError(f"cannot parse shape {text!r}: {exc}") from None


def _game(args) -> gc.GameSpec:
    try:
        spec = gc.parse_game(args.game)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None
    if args.saturate:
        try:
            spec = gc.saturate(spec, args.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return spec


def _bound(requested: int) -> int:
    cap = max_bound()
    if requested > cap:
        raise UsageError(f"bound {requested} exceeds {cap}; set GRUNDY_MAX_BOUND to raise it")
    return requested


def _shape_json(shape) -> list:
    if isinstance(shape, young.DiagramTuple):
        return [list(Y.parts) for Y in shape.diagrams]
    return list(shape.parts)


# -- commands --------------------------------------------------------------------


def cmd_sg(args) -> tuple[dict, list[str]]:
    spec = _game(args)
    parts = parse_position(args.position)
    A = sum(parts, ())
    if len(parts) > 1 and tuple(len(c) for c in parts) != spec.component_arities:
        raise UsageError(f"position {args.position} does not match arities {spec.component_arities}")
    if A not in spec.positions:
        raise UsageError(f"{A} is not a position of {spec.name}")
    bound = _bound(args.bound if args.bound is not None else max(A))
    if max(A) > bound:
        raise UsageError(f"position {A} is outside the bound {bound}")
    g, length = gc.EvalTable(spec, bound).value(A)
    inputs = {"game": args.game, "position": [list(c) for c in parts], "p": args.p, "saturate": args.saturate}
    return record("sg", inputs, {"sg": g, "lg": length}), [f"sg={g}", f"lg={length}"]


def cmd_table(args) -> tuple[dict, list[str]]:
    spec = _game(args)
    bound = _bound(args.bound)
    table = gc.EvalTable(spec, bound)
    rows = [(list(A), table.value(A)[0]) for A in spec.enumerate(bound)]
    inputs = {"game": args.game, "bound": bound, "p": args.p, "saturate": args.saturate}
    rec = record("table", inputs, {"entries": [[A, g] for A, g in rows]})
    if spec.m == 1:
        lines = ["\t".join(str(g) for _, g in rows)]
    elif spec.m == 2:
        grid = {tuple(A): g for A, g in rows}
        lines = ["\t".join(str(grid.get((i, j), "")) for j in range(bound + 1)) for i in range(bound + 1)]
    else:
        lines = ["\t".join(map(str, A)) + f"\t{g}" for A, g in rows]
    return rec, lines


def cmd_psi(args) -> tuple[dict, list[str]]:
    if args.position:
        parts = parse_position(args.shape)
        try:
            value = welter.psi_sum(args.p, parts)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        inputs = {"p": args.p, "position": [list(c) for c in parts]}
    else:
        shape = parse_shape(args.shape)
        value = young.psi_diagram(args.p, shape)
        inputs = {"p": args.p, "shape": _shape_json(shape)}
    return record("psi", inputs, {"psi": value}), [f"psi={value}"]


def cmd_hooks(args) -> tuple[dict, list[str]]:
    shape = parse_shape(args.shape)
    hooks = list(young.hook_lengths(shape))
    return record("hooks", {"shape": _shape_json(shape)}, {"hooks": hooks}), [" ".join(map(str, hooks))]


def cmd_fcount(args) -> tuple[dict, list[str]]:
    shape = parse_shape(args.shape)
    f = young.tableau_count(shape)
    result = {"f": f}
    lines = [f"f={f}"]
    if args.oracle:
        try:
            result["oracle"] = young.tableau_count_oracle(shape)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lines.append(f"oracle={result['oracle']}")
    return record("fcount", {"shape": _shape_json(shape)}, result), lines


def cmd_pprime(args) -> tuple[dict, list[str]]:
    shape = parse_shape(args.shape)
    try:
        Z = young.find_pprime_subdiagram(args.p, shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    f = young.tableau_count(Z)
    result = {"Z": _shape_json(Z), "f": f, "cells": Z.size}
    return record("pprime", {"p": args.p, "shape": _shape_json(shape)}, result), [f"Z={Z}", f"f={f}"]


def cmd_suites(args) -> tuple[list[dict], list[str]]:
    recs, lines = [], []
    for name, claim, defaults in verify.list_suites():
        recs.append(record("suites", {}, {"name": name, "claim": claim, "defaults": defaults}))
        lines.append(f"{name}\t{claim}\t{dumps(defaults)}")
    return recs, lines


def _overrides(args) -> dict:
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            params[key] = value
    for key in ("p", "bound"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    return params


def cmd_verify(args) -> tuple[list[dict], list[str], int]:
    names = [n for n, _, _ in verify.list_suites()] if args.suite == "all" else [args.suite]
    overrides = _overrides(args)
    recs, lines, status = [], [], 0
    for name in names:
        suite = verify.REGISTRY.get(name)
        if suite is None:
            raise UsageError(f"unknown suite {name!r}")
        params = {k: v for k, v in overrides.items() if k in suite.defaults or k == "only"}
        try:
            v = verify.run_suite(name, params)
        except verify.SuiteError as exc:
            raise UsageError(str(exc)) from None
        recs.append(record("verify", {"suite": name, "params": params}, v.to_dict()))
        if v.ok and v.expect == "fail":
            state = "EXPECTED-FAIL observed"
        else:
            state = "PASS" if v.ok else "FAIL"
        line = f"{state}\t{name}\tchecked={v.positions_checked}\t{v.elapsed:.2f}s"
        if v.counterexample is not None:
            line += "\tcounterexample=" + dumps(v.counterexample)
        lines.append(line)
        if not v.ok:
            status = 1
    return recs, lines, status


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pcalm", description="p-saturations of Welter's game and p'-subdiagrams")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, p_default=2):
        sp.add_argument("--p", type=int, default=p_default)
        sp.add_argument("--json", action="store_true", help="one JSON record per line")

    sp = sub.add_parser("sg", help="SG value and longest walk of a position")
    sp.add_argument("game")
    sp.add_argument("position")
    sp.add_argument("--bound", type=int)
    sp.add_argument("--saturate", action="store_true")
    common(sp)

    sp = sub.add_parser("table", help="SG values of every position up to a bound")
    sp.add_argument("game")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--saturate", action="store_true")
    common(sp)

    sp = sub.add_parser("psi", help="psi_p of a shape (or of Welter positions with --position)")
    sp.add_argument("shape")
    sp.add_argument("--position", action="store_true")
    common(sp)

    sp = sub.add_parser("hooks", help="hook-length multiset")
    sp.add_argument("shape")
    common(sp)

    sp = sub.add_parser("fcount", help="number of standard tableaux")
    sp.add_argument("shape")
    sp.add_argument("--oracle", action="store_true", help="also count by enumeration")
    common(sp)

    sp = sub.add_parser("pprime", help="subshape with psi_p cells and tableau count prime to p")
    sp.add_argument("shape")
    common(sp)

    sp = sub.add_parser("verify", help="run a verification suite, or 'all'")
    sp.add_argument("suite")
    sp.add_argument("--p", type=int)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--param", action="append", metavar="KEY=VALUE", help="JSON-valued override")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("suites", help="list registered suites")
    sp.add_argument("--json", action="store_true")
    return ap


COMMANDS = {
    "sg": cmd_sg,
    "table": cmd_table,
    "psi": cmd_psi,
    "hooks": cmd_hooks,
    "fcount": cmd_fcount,
    "pprime": cmd_pprime,
    "suites": cmd_suites,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status = 0
        if args.command == "verify":
            recs, lines, status = cmd_verify(args)
        else:
            recs, lines = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"pcalm: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        for rec in recs if isinstance(recs, list) else [recs]:
            print(dumps(rec))
    else:
        for line in lines:
            print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
