"""Named exhaustive sweeps, one per claim, each returning a :class:`Verdict`.

Every suite pits a closed form (or a constructive search) against brute-force
game evaluation.  Sweeps stop at the first counterexample and record a
``replay`` dict: rerunning the suite with those parameters checks exactly
that one instance.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Optional

from pcalm import gamecore as gc
from pcalm import welter, young
from pcalm.padic import carry_lemma_terms, mord, nim_sum, ord_p

# coordinate caps keyed by the largest component arity
BOUND_CAPS = {1: 9, 2: 9, 3: 6, 4: 4}
DEFAULT_TAIL_CAP = 3
DIAGRAM_CELL_CAP = 14
TUPLE_CELL_CAP = 10


def bound_cap(m: int) -> int:
    env = os.environ.get("GRUNDY_MAX_BOUND")
    if env:
        return int(env)
    return BOUND_CAPS.get(m, DEFAULT_TAIL_CAP)


@dataclass
class Verdict:
    suite: str
    params: dict
    passed: bool
    counterexample: Optional[dict] = None
    positions_checked: int = 0
    elapsed: float = 0.0
    expect: str = "pass"

    @property
    def ok(self) -> bool:
        """True when the outcome is the one the claim predicts."""
        return self.passed == (self.expect == "pass")

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "expect": self.expect,
            "ok": self.ok,
            "counterexample": self.counterexample,
            "positions_checked": self.positions_checked,
            "elapsed": round(self.elapsed, 3),
        }


class SuiteError(ValueError):
    """Unknown suite or parameters outside the caps."""


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    defaults: dict
    run: Callable[[dict], tuple]
    expect: str = "pass"


def _check_bound(game: gc.GameSpec, bound: int) -> None:
    cap = bound_cap(max(game.component_arities))
    if bound > cap:
        raise SuiteError(f"bound {bound} exceeds the cap {cap} for {game.name}; set GRUNDY_MAX_BOUND to raise it")


def _positions(game: gc.GameSpec, params: dict):
    if params.get("only") is not None:
        return [tuple(params["only"])]
    return game.enumerate(params["bound"])


def _fail(params: dict, only, **details) -> dict:
    replay = dict(params, only=only)
    return dict(details, replay=replay)


# -- suites ----------------------------------------------------------------------


def _sg_classical_sum(params):
    g1, g2 = gc.parse_game(params["left"]), gc.parse_game(params["right"])
    bound = params["bound"]
    whole = gc.EvalTable(gc.disjunctive_sum([g1, g2]), bound)
    t1, t2 = gc.EvalTable(g1, bound), gc.EvalTable(g2, bound)
    if params.get("only") is not None:
        pairs = [(tuple(params["only"][:g1.m]), tuple(params["only"][g1.m:]))]
    else:
        pairs = product(list(g1.enumerate(bound)), list(g2.enumerate(bound)))
    n = 0
    for A1, A2 in pairs:
        n += 1
        got, want = whole.value(A1 + A2)[0], t1.value(A1)[0] ^ t2.value(A2)[0]
        if got != want:
            return False, _fail(params, A1 + A2, sg=got, xor=want), n
    return True, None, n


def _carry_lemma(params):
    rng = random.Random(params["seed"])
    p, m = params["p"], params["m"]
    if params.get("only") is not None:
        A, B, N = params["only"]
        cases = [(list(A), list(B), N)]
    else:
        cases = []
        for _ in range(params["instances"]):
            N = rng.randrange(0, 4)
            B = [rng.randrange(0, p ** 5) for _ in range(m)]
            cases.append(([b + p**N * rng.randrange(0, p ** 3) for b in B], B, N))
    for n, (A, B, N) in enumerate(cases, 1):
        terms = carry_lemma_terms(p, A, B, N)
        if len(set(terms)) != 1:
            return False, _fail(params, [A, B, N], terms=list(terms)), n
    return True, None, len(cases)


def _saturation_criterion(params):
    p, m, bound = params["p"], params["m"], params["bound"]
    n = 0
    boxes = [tuple(params["only"])] if params.get("only") is not None else product(range(bound + 1), repeat=m)
    for C in boxes:
        if not any(C):
            continue
        n += 1
        by_definition = ord_p(p, sum(C)) == mord(p, C)
        if gc.is_saturation_move(p, C) != by_definition:
            return False, _fail(params, list(C), definition=by_definition), n
    return True, None, n


SAT3_NIM2_TABLE = ((0, 1, 2, 3), (1, 2, 0, 4), (2, 0, 1, 5), (3, 4, 5, 6))


def _saturated_nim_table(params):
    p, m, bound = params["p"], params["m"], params["bound"]
    game = gc.nim(m)
    _check_bound(game, bound)
    table = gc.EvalTable(gc.saturate(game, p), bound)
    n = 0
    for A in _positions(game, params):
        n += 1
        got = table.value(A)[0]
        want = nim_sum(p, A)
        if (p, m) == (3, 2) and max(A) <= 3 and SAT3_NIM2_TABLE[A[0]][A[1]] != want:
            raise AssertionError("frozen table disagrees with the base-p Nim-sum")
        if got != want:
            return False, _fail(params, A, sg=got, nim_sum=want), n
    return True, None, n


def _psi_vs_brute(params):
    p, m, bound = params["p"], params["m"], params["bound"]
    game = gc.welter(m)
    _check_bound(game, bound)
    table = gc.EvalTable(gc.saturate(game, p), bound)
    n = 0
    for A in _positions(game, params):
        n += 1
        got, want = table.value(A)[0], welter.psi(p, A)
        if got != want:
            return False, _fail(params, A, sg=got, psi=want), n
    return True, None, n


def _welter_self_saturated(params):
    m, bound = params["m"], params["bound"]
    game = gc.welter(m)
    _check_bound(game, bound)
    plain = gc.EvalTable(game, bound)
    n = 0
    for A in _positions(game, params):
        n += 1
        got, want = plain.value(A)[0], welter.psi(2, A)
        if got != want:
            return False, _fail(params, A, sg=got, psi=want), n
    return True, None, n


def _welter_sum(params):
    p, bound = params["p"], params["bound"]
    arities = tuple(params["arities"])
    game = welter.welter_sum(arities)
    _check_bound(game, bound)
    table = gc.EvalTable(gc.saturate(game, p), bound)
    n = 0
    for A in _positions(game, params):
        n += 1
        parts, _ = welter._as_parts(A, arities)
        got, want = table.value(A)[0], welter.psi_sum(p, parts)
        if got != want:
            return False, _fail(params, A, sg=got, psi_sum=want), n
    return True, None, n


def _calm(params):
    game = gc.parse_game(params["game"])
    _check_bound(game, params["bound"])
    report = welter.check_calm(game, params["p"], params["bound"], only=params.get("only"))
    if report.passed:
        return True, None, report.checked
    w = report.witness
    return False, _fail(params, w.A, A=list(w.A), B=list(w.B), N=w.N, lhs=w.lhs, rhs=w.rhs), report.checked


def _calm_counterexample(params):
    p = params["p"]
    game = gc.two_point_game(p)
    report = welter.check_calm(game, p, p, only=params.get("only"))
    if report.passed:
        return True, None, report.checked
    w = report.witness
    return False, _fail(params, w.A, A=list(w.A), B=list(w.B), N=w.N, lhs=w.lhs, rhs=w.rhs), report.checked


def _pn(params):
    g1, g2 = gc.parse_game(params["left"]), gc.parse_game(params["right"])
    for g in (g1, g2):
        _check_bound(g, params["bound"])
    only = params.get("only")
    if only is not None:
        only = (tuple(only[:g1.m]), tuple(only[g1.m:]))
    report = welter.check_pn(g1, g2, params["p"], params["bound"], only=only)
    if report.passed:
        return True, None, report.checked
    w = report.witness
    return False, _fail(params, list(w.A1 + w.A2), sg=w.sg_sum, p_nim_sum=w.expected), report.checked


def _full_option(params):
    """Every full position of positive length has a full option one step shorter."""
    p, m, bound = params["p"], params["m"], params["bound"]
    game = gc.welter(m)
    _check_bound(game, bound)
    table = gc.EvalTable(gc.saturate(game, p), bound)
    n = 0
    for A in _positions(game, params):
        g, length = table.value(A)
        if g != length or length == 0:
            continue
        n += 1
        if not any(table.value(B) == (length - 1, length - 1) for B in table.options(A)):
            return False, _fail(params, A, lg=length), n
    return True, None, n


def _fd_sums(params):
    p, bound = params["p"], params["bound"]
    arities = tuple(params["arities"])
    game = welter.welter_sum(arities)
    _check_bound(game, bound)
    sat = gc.saturate(game, p)
    ev = welter.TableEvaluator(sat, p, bound)
    n = 0
    for A in _positions(game, params):
        n += 1
        g = ev.whole.value(A)[0]
        B = welter.full_descendant(sat, p, A, evaluator=ev)
        parts_a, _ = welter._as_parts(A, arities)
        parts_b, _ = welter._as_parts(B, arities)
        reachable = all(welter.is_descendant_or_self(x, y) for x, y in zip(parts_a, parts_b))
        if ev.whole.value(B) != (g, g) or not reachable:
            return False, _fail(params, A, B=list(B), value=list(ev.whole.value(B)), sg=g), n
    return True, None, n


def _hook_correspondence(params):
    m, bound = params["m"], params["bound"]
    game = gc.welter(m)
    _check_bound(game, bound)
    n = 0
    for A in _positions(game, params):
        Y = young.position_to_diagram(A)
        for B in gc.options(game, A):
            n += 1
            i, j = young.move_matches_hook(A, B)
            want = young.position_to_diagram(B)
            if young.remove_hook(Y, i, j) != want or young.remove_hook_cells(Y, i, j) != want:
                return False, _fail(params, A, B=list(B), cell=[i, j]), n
    return True, None, n


def _shapes(params, k: int, cells: int):
    if params.get("only") is not None:
        return [young.as_shape(params["only"])]
    if k == 1:
        return [Y for n in range(cells + 1) for Y in young.partitions(n)]
    return [T for n in range(cells + 1) for T in young.shape_tuples(n, k)]


def _serial(shape) -> Any:
    if isinstance(shape, young.DiagramTuple):
        return [list(Y.parts) for Y in shape.diagrams]
    return list(shape.parts)


def _cell_caps(params, limit):
    if params["cells"] > limit:
        raise SuiteError(f"cells {params['cells']} exceeds the cap {limit}")


def _hook_formula(params):
    _cell_caps(params, young.ORACLE_CAP)
    n = 0
    for shape in _shapes(params, params["k"], params["cells"]):
        n += 1
        got, want = young.tableau_count(shape), young.tableau_count_oracle(shape)
        if got != want:
            return False, _fail(params, _serial(shape), hook_formula=got, oracle=want), n
    return True, None, n


def _hook_psi(params):
    p, m, bound = params["p"], params["m"], params["bound"]
    game = gc.welter(m)
    _check_bound(game, bound)
    n = 0
    for A in _positions(game, params):
        n += 1
        got, want = young.psi_diagram(p, young.position_to_diagram(A)), welter.psi(p, A)
        if got != want:
            return False, _fail(params, A, psi_diagram=got, psi=want), n
    return True, None, n


def _macdonald(params):
    p, k = params["p"], params["k"]
    _cell_caps(params, DIAGRAM_CELL_CAP if k == 1 else TUPLE_CELL_CAP)
    n = 0
    for shape in _shapes(params, k, params["cells"]):
        n += 1
        coprime = young.nu_of_fcount(p, shape) == 0
        full = young.psi_diagram(p, shape) == shape.size
        if coprime != full:
            return False, _fail(params, _serial(shape), coprime=coprime, psi_equals_size=full), n
    return True, None, n


def _pprime(params):
    p, k = params["p"], params["k"]
    _cell_caps(params, DIAGRAM_CELL_CAP if k == 1 else TUPLE_CELL_CAP)
    n = 0
    for shape in _shapes(params, k, params["cells"]):
        n += 1
        try:
            Z = young.find_pprime_subdiagram(p, shape)
        except welter.SearchExhausted as exc:
            return False, _fail(params, _serial(shape), error=str(exc)), n
        if not (shape.contains(Z) and Z.size == young.psi_diagram(p, shape) and young.nu_of_fcount(p, Z) == 0):
            return False, _fail(params, _serial(shape), Z=_serial(Z)), n
    return True, None, n


REGISTRY: dict[str, Suite] = {}


def _register(*suites: Suite) -> None:
    for s in suites:
        REGISTRY[s.name] = s


_register(
    Suite("sg-classical-sum", "SG value of a disjunctive sum is the XOR of the summands' values",
          {"left": "nim:1", "right": "nim:1", "bound": 7}, _sg_classical_sum),
    Suite("carry-lemma", "congruent vectors: ordinary and carry-free differences agree mod p^(N+1)",
          {"p": 3, "m": 4, "instances": 10000, "seed": 0}, _carry_lemma),
    Suite("saturation-criterion", "digit criterion for Sat^m_p matches ord(sum C) = mord(C)",
          {"p": 3, "m": 3, "bound": 9}, _saturation_criterion),
    Suite("saturated-nim-table", "the p-saturation of Nim has SG value the p-Nim-sum",
          {"p": 3, "m": 2, "bound": 3}, _saturated_nim_table),
    Suite("psi-vs-brute", "the p-saturation of Welter's game has SG value psi_p",
          {"p": 3, "m": 3, "bound": 6}, _psi_vs_brute),
    Suite("welter-self-saturated", "Welter's game is its own 2-saturation",
          {"m": 3, "bound": 6}, _welter_self_saturated),
    Suite("welter-sum", "saturated sums of Welter games: SG value is the p-Nim-sum of psi",
          {"p": 3, "arities": [2, 1], "bound": 6}, _welter_sum),
    Suite("calm", "Nim and Welter games are p-calm",
          {"game": "welter:3", "p": 2, "bound": 6}, _calm),
    Suite("calm-counterexample", "Gamma({0,p}, T^1) is not p-calm",
          {"p": 3}, _calm_counterexample, expect="fail"),
    Suite("pn-sum", "PN holds for a p-calm game paired with Nim^1",
          {"left": "welter:2", "right": "nim:1", "p": 3, "bound": 6}, _pn),
    Suite("pn-counterexample", "PN fails when a summand is not p-calm",
          {"left": "twopoint:3", "right": "nim:1", "p": 3, "bound": 3}, _pn, expect="fail"),
    Suite("full-option", "a full position has a full option one step shorter",
          {"p": 3, "m": 3, "bound": 6}, _full_option),
    Suite("fd-welter-sum", "saturated sums of Welter games satisfy FD",
          {"p": 2, "arities": [3, 2], "bound": 5}, _fd_sums),
    Suite("hook-correspondence", "a Welter move removes a hook of its diagram",
          {"m": 3, "bound": 6}, _hook_correspondence),
    Suite("hook-formula", "the hook formula counts standard tableaux",
          {"k": 1, "cells": 8}, _hook_formula),
    Suite("hook-psi", "psi_p from hook lengths equals psi_p of the position",
          {"p": 5, "m": 3, "bound": 6}, _hook_psi),
    Suite("macdonald", "f^Y is prime to p iff psi_p(Y) = |Y|",
          {"p": 2, "k": 1, "cells": 14}, _macdonald),
    Suite("pprime-subdiagram", "every diagram contains a p'-subdiagram with psi_p(Y) cells",
          {"p": 2, "k": 1, "cells": 12}, _pprime),
    Suite("pprime-tuples", "every tuple of diagrams contains a p'-subtuple with psi_p cells",
          {"p": 2, "k": 2, "cells": 10}, _pprime),
)


def list_suites() -> list[tuple[str, str, dict]]:
    return [(s.name, s.claim, dict(s.defaults)) for s in REGISTRY.values()]


def run_suite(name: str, params: Optional[dict] = None) -> Verdict:
    """Run one suite; ``params`` override its defaults (``only`` replays one instance)."""
    suite = REGISTRY.get(name)
    if suite is None:
        raise SuiteError(f"unknown suite {name!r}")
    merged = dict(suite.defaults)
    merged.update({k: v for k, v in (params or {}).items() if v is not None})
    unknown = set(merged) - set(suite.defaults) - {"only"}
    if unknown:
        raise SuiteError(f"suite {name} does not take {sorted(unknown)}")
    start = time.perf_counter()
    passed, counterexample, checked = suite.run(merged)
    elapsed = time.perf_counter() - start
    return Verdict(name, merged, passed, counterexample, checked, elapsed, suite.expect)
