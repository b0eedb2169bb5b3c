"""Acceptance criteria, one test each, at the stated tolerances and time limits."""

import random
import time

from conftest import ACCEPTANCE_LINES
from pcalm import gamecore as gc
from pcalm import welter, young
from pcalm.cli import main
from pcalm.padic import carry_lemma_terms, nim_sum

PRIMES = (2, 3, 5)


def report(n: int, ok: bool, title: str, detail: str) -> None:
    line = f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_01_table_one(capsys):
    t0 = time.perf_counter()
    code = main(["table", "--saturate", "--p", "3", "nim:2", "--bound", "3"])
    elapsed = time.perf_counter() - t0
    grid = [[int(x) for x in row.split("\t")] for row in capsys.readouterr().out.splitlines()]
    expected = [[0, 1, 2, 3], [1, 2, 0, 4], [2, 0, 1, 5], [3, 4, 5, 6]]
    hits = sum(grid[i][j] == expected[i][j] for i in range(4) for j in range(4)) if len(grid) == 4 else 0
    ok = code == 0 and hits == 16 and elapsed < 1
    report(1, ok, "saturated Nim table", f"{hits}/16 entries, {elapsed:.2f}s")
    assert code == 0 and hits == 16
    assert grid[1][2] == 0 and grid[3][3] == 6
    assert elapsed < 1


def test_criterion_02_base_p_nim():
    t0 = time.perf_counter()
    mismatches = checked = 0
    for p in PRIMES:
        for m, bound in ((2, 9), (3, 6)):
            table = gc.EvalTable(gc.saturate(gc.nim(m), p), bound)
            for A in gc.nim(m).enumerate(bound):
                checked += 1
                mismatches += table.value(A)[0] != nim_sum(p, A)
    elapsed = time.perf_counter() - t0
    report(2, mismatches == 0 and elapsed < 30, "base-p Nim", f"{mismatches} mismatches of {checked}, {elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 30


def test_criterion_03_psi():
    t0 = time.perf_counter()
    mismatches = checked = 0
    for p in PRIMES:
        for m, bound in ((2, 9), (3, 6)):
            table = gc.EvalTable(gc.saturate(gc.welter(m), p), bound)
            for A in gc.welter(m).enumerate(bound):
                checked += 1
                mismatches += table.value(A)[0] != welter.psi(p, A)
    points = (welter.psi(2, (7, 5, 3)), welter.psi(5, (7, 5, 3)), welter.psi(2, (6, 4, 2)))
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and points == (6, 12, 7) and elapsed < 60
    report(3, ok, "psi_p against brute force", f"{mismatches} mismatches of {checked}, points {points}, {elapsed:.1f}s")
    assert mismatches == 0
    assert points == (6, 12, 7)
    assert elapsed < 60


def test_criterion_04_welter_sums():
    t0 = time.perf_counter()
    mismatches = checked = 0
    for p in PRIMES:
        for arities in ((1, 1), (1, 2), (2, 1), (2, 2)):
            game = welter.welter_sum(arities)
            table = gc.EvalTable(gc.saturate(game, p), 6)
            for A in game.enumerate(6):
                checked += 1
                parts = (A[:arities[0]], A[arities[0]:])
                mismatches += table.value(A)[0] != welter.psi_sum(p, parts)
    point = gc.sg(gc.saturate(welter.welter_sum((3, 1)), 5), (7, 5, 3, 3))
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and point == 10 and elapsed < 120
    report(4, ok, "sums of Welter games", f"{mismatches} mismatches of {checked}, sg((7,5,3),(3))={point}, {elapsed:.1f}s")
    assert mismatches == 0
    assert point == 10
    assert elapsed < 120


def test_criterion_05_calm_verdicts():
    t0 = time.perf_counter()
    wrong = []
    for p in PRIMES:
        for game, bound in ((gc.nim(1), 9), (gc.nim(2), 9), (gc.welter(2), 9), (gc.welter(3), 6)):
            if not welter.check_calm(game, p, bound).passed:
                wrong.append(f"{game.name}@{p}")
        bad = welter.check_calm(gc.two_point_game(p), p, p)
        if bad.passed or (bad.witness.A, bad.witness.B) != ((p,), (0,)):
            wrong.append(f"two-point@{p}")
        if welter.check_pn(gc.two_point_game(p), gc.nim(1), p, p).passed:
            wrong.append(f"pn@{p}")
    elapsed = time.perf_counter() - t0
    ok = not wrong and elapsed < 60
    report(5, ok, "calmness verdicts", f"wrong verdicts {wrong or 'none'}, {elapsed:.1f}s")
    assert not wrong
    assert elapsed < 60


def test_criterion_06_full_descendants():
    t0 = time.perf_counter()
    bad, checked = [], 0
    evaluators = {}
    for p in PRIMES:
        for arities in ((3,), (3, 2)):
            sat = gc.saturate(welter.welter_sum(arities), p)
            ev = evaluators[p, arities] = welter.TableEvaluator(sat, p, 6)
            for A in sat.enumerate(6):
                checked += 1
                g = ev.whole.value(A)[0]
                B = welter.full_descendant(sat, p, A, evaluator=ev)
                reachable = all(b <= a for a, b in zip(A, B))
                if ev.whole.value(B) != (g, g) or not reachable:
                    bad.append((p, A, B))
    sat3 = gc.saturate(gc.welter(3), 2)
    ex1 = welter.full_descendant(sat3, 2, (6, 4, 2), 7, evaluator=evaluators[2, (3,)])
    sat32 = gc.saturate(welter.welter_sum((3, 2)), 2)
    ex2 = welter.full_descendant(sat32, 2, ((6, 5, 2), (3, 1)), 7, evaluator=evaluators[2, (3, 2)])
    elapsed = time.perf_counter() - t0
    ok = not bad and ex1 == (5, 3, 2) and ex2 == ((4, 3, 1), (3, 0)) and elapsed < 120
    report(6, ok, "full descendants",
           f"{len(bad)} bad of {checked}, (6,4,2)->{ex1}, ((6,5,2),(3,1))->{ex2}, {elapsed:.1f}s")
    assert not bad
    assert ex1 == (5, 3, 2)
    assert ex2 == ((4, 3, 1), (3, 0))
    assert elapsed < 120


def test_criterion_07_hook_formula():
    t0 = time.perf_counter()
    values = [young.tableau_count(s) for s in ((2, 1), (4, 3, 2), (3, 2, 2), ((4, 4, 2), (2, 1)), ((2, 2, 1), (2,)))]
    disagree = checked = 0
    for n in range(9):
        shapes = list(young.partitions(n)) + [T for k in (2, 3) for T in young.shape_tuples(n, k)]
        for s in shapes:
            checked += 1
            disagree += young.tableau_count(s) != young.tableau_count_oracle(s)
    elapsed = time.perf_counter() - t0
    ok = values == [2, 168, 21, 144144, 105] and disagree == 0 and elapsed < 30
    report(7, ok, "hook formula", f"values {values}, {disagree} oracle disagreements of {checked}, {elapsed:.1f}s")
    assert values == [2, 168, 21, 144144, 105]
    assert disagree == 0
    assert elapsed < 30


def test_criterion_08_macdonald():
    t0 = time.perf_counter()
    mismatches = checked = 0
    cases = [(p, Y) for p in PRIMES for n in range(15) for Y in young.partitions(n)]
    cases += [(p, T) for p in (2, 3) for k in (2, 3) for n in range(11) for T in young.shape_tuples(n, k)]
    for p, s in cases:
        checked += 1
        mismatches += (young.nu_of_fcount(p, s) == 0) != (young.psi_diagram(p, s) == s.size)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 120
    report(8, ok, "coprimality criterion", f"{mismatches} mismatches of {checked}, {elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 120


def test_criterion_09_pprime():
    t0 = time.perf_counter()
    bad, checked = [], 0
    cases = [(p, Y) for p in PRIMES for n in range(13) for Y in young.partitions(n)]
    cases += [(p, T) for p in (2, 3) for n in range(11) for T in young.shape_tuples(n, 2)]
    for p, s in cases:
        checked += 1
        Z = young.find_pprime_subdiagram(p, s)
        if not (s.contains(Z) and Z.size == young.psi_diagram(p, s) and young.nu_of_fcount(p, Z) == 0):
            bad.append((p, s, Z))
    ex1 = young.find_pprime_subdiagram(2, (4, 3, 2))
    ex2 = young.find_pprime_subdiagram(2, ((4, 4, 2), (2, 1)))
    want2 = young.DiagramTuple((young.YoungDiagram((2, 2, 1)), young.YoungDiagram((2,))))
    elapsed = time.perf_counter() - t0
    ok = not bad and ex1 == young.YoungDiagram((3, 2, 2)) and ex2 == want2 and elapsed < 180
    report(9, ok, "p'-subdiagrams", f"{len(bad)} bad of {checked}, (4,3,2)->{ex1}, ((4,4,2),(2,1))->{ex2}, {elapsed:.1f}s")
    assert not bad
    assert ex1 == young.YoungDiagram((3, 2, 2))
    assert ex2 == want2
    assert elapsed < 180


def test_criterion_10_carry_lemma():
    t0 = time.perf_counter()
    rng = random.Random(20240101)
    failures = 0
    for p in PRIMES:
        for _ in range(10_000):
            N = rng.randrange(0, 5)
            m = rng.randrange(1, 6)
            B = [rng.randrange(0, p ** 6) for _ in range(m)]
            A = [b + p**N * rng.randrange(0, p ** 3) for b in B]
            plain, carry_free, top = carry_lemma_terms(p, A, B, N)
            failures += not (plain == carry_free == top)
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 10
    report(10, ok, "carry lemma", f"{failures} failures of 30000, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 10
