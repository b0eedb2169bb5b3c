"""Welter's game: the closed form psi_p, p-calmness checks and full descendants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from pcalm import gamecore as gc
from pcalm.padic import digit, digits, mord, nim_sum, repdigit_allnines

Position = gc.Position


def _check_distinct(A: Sequence[int]) -> tuple[int, ...]:
    A = tuple(A)
    if len(set(A)) != len(A):
        raise ValueError(f"Welter position {A} has repeated coordinates")
    if any(a < 0 for a in A):
        raise ValueError(f"negative coordinate in {A}")
    return A


def psi(p: int, A: Sequence[int]) -> int:
    """Closed-form SG value of ``A`` in the p-saturation of Welter's game.

    The p-Nim-sum of the heaps and of ``p**(ord_p(a_i - a_j) + 1) - 1`` over
    all pairs.  At p = 2 this is Welter's own formula.
    """
    A = _check_distinct(A)
    pair_terms = [repdigit_allnines(p, a - b) for a, b in combinations(A, 2)]
    return nim_sum(p, list(A) + pair_terms)


def psi_sum(p: int, parts: Sequence[Sequence[int]]) -> int:
    return nim_sum(p, [psi(p, A) for A in parts])


def welter_lg(A: Sequence[int]) -> int:
    m = len(A)
    return sum(A) - m * (m - 1) // 2


def welter_sum(arities: Sequence[int]) -> gc.GameSpec:
    return gc.disjunctive_sum([gc.welter(m) for m in arities])


# -- calmness ------------------------------------------------------------------


@dataclass(frozen=True)
class CalmWitness:
    A: Position
    B: Position
    N: int
    lhs: int  # sg(A) - sg(B) in the saturation
    rhs: int  # sum(A) - sum(B)


@dataclass
class CalmReport:
    passed: bool
    witness: Optional[CalmWitness]
    checked: int


def check_calm(spec: gc.GameSpec, p: int, bound: int, only: Optional[Sequence[int]] = None) -> CalmReport:
    """Exhaustively test the calmness congruence inside ``[0, bound]^m``.

    Descendants are taken in ``spec`` itself, while SG values come from its
    canonical p-saturation.  ``only`` restricts the sweep to one position A.
    """
    sat = gc.saturate(spec, p)
    original = gc.EvalTable(spec, bound)
    saturated = gc.EvalTable(sat, bound)
    starts = [tuple(only)] if only is not None else spec.enumerate(bound)
    checked = 0
    for A in starts:
        gA = saturated.value(A)[0]
        for B in sorted(original.descendants(A)):
            checked += 1
            N = mord(p, [a - b for a, b in zip(A, B)])
            lhs = gA - saturated.value(B)[0]
            rhs = sum(A) - sum(B)
            if (lhs - rhs) % p ** (N + 1):
                return CalmReport(False, CalmWitness(A, B, N, lhs, rhs), checked)
    return CalmReport(True, None, checked)


@dataclass(frozen=True)
class PNWitness:
    A1: Position
    A2: Position
    sg_sum: int  # sg of the saturated sum
    expected: int  # p-Nim-sum of the saturated summands


@dataclass
class PNReport:
    passed: bool
    witness: Optional[PNWitness]
    checked: int


def check_pn(spec1: gc.GameSpec, spec2: gc.GameSpec, p: int, bound: int,
             only: Optional[tuple[Sequence[int], Sequence[int]]] = None) -> PNReport:
    """Compare sg of the saturated sum with the p-Nim-sum of saturated parts."""
    whole = gc.EvalTable(gc.saturate(gc.disjunctive_sum([spec1, spec2]), p), bound)
    t1 = gc.EvalTable(gc.saturate(spec1, p), bound)
    t2 = gc.EvalTable(gc.saturate(spec2, p), bound)
    if only is not None:
        pairs = [(tuple(only[0]), tuple(only[1]))]
    else:
        firsts = list(spec1.enumerate(bound))
        seconds = list(spec2.enumerate(bound))
        pairs = ((A1, A2) for A1 in firsts for A2 in seconds)
    checked = 0
    for A1, A2 in pairs:
        checked += 1
        got = whole.value(A1 + A2)[0]
        want = nim_sum(p, [t1.value(A1)[0], t2.value(A2)[0]])
        if got != want:
            return PNReport(False, PNWitness(A1, A2, got, want), checked)
    return PNReport(True, None, checked)


# -- full descendants ------------------------------------------------------------


def _carry_digit(p: int, alphas: Sequence[int]) -> int:
    """Largest digit index whose column sum reaches p, or -1."""
    width = max((len(digits(p, a)) for a in alphas), default=0)
    M = -1
    for L in range(width):
        if sum(digit(p, a, L) for a in alphas) >= p:
            M = L
    return M


def target_full_value(p: int, alphas: Sequence[int]) -> int:
    """Digits p-1 up to the top carrying column M, then the digits of the p-Nim-sum.

    This is the SG value of a full descendant guaranteed to exist for a sum
    whose components have values ``alphas``; it is at least their p-Nim-sum.
    """
    alpha = nim_sum(p, alphas)
    M = _carry_digit(p, alphas)
    if M < 0:
        return alpha
    return p ** (M + 1) - 1 + (alpha // p ** (M + 1)) * p ** (M + 1)


def split_target(p: int, alphas: Sequence[int], beta: int) -> list[int]:
    """Split ``beta`` into parts ``beta_i <= alphas[i]`` whose sum has no carries.

    Above the carrying column the parts copy the alphas.  In column M the
    digits of ``alphas`` are consumed greedily from the left until they total
    p - 1; the first index left strictly below its alpha digit takes p - 1 in
    every lower column.
    """
    alphas = list(alphas)
    M = _carry_digit(p, alphas)
    if M < 0:
        betas = alphas
    else:
        high = p ** (M + 1)
        col = [digit(p, a, M) for a in alphas]
        left = p - 1
        take = []
        for c in col:
            t = min(c, left)
            take.append(t)
            left -= t
        pivot = next(i for i, (t, c) in enumerate(zip(take, col)) if t < c)
        betas = []
        for i, a in enumerate(alphas):
            low = p ** M - 1 if i == pivot else 0
            betas.append((a // high) * high + take[i] * p ** M + low)
    if sum(betas) != beta or nim_sum(p, betas) != beta or any(b > a for b, a in zip(betas, alphas)):
        raise AssertionError(f"split {betas} of {beta} violates its postconditions")
    return betas


class SearchExhausted(RuntimeError):
    """No full descendant was found where one must exist."""


class TableEvaluator:
    """Brute-force SG/lg for a saturated sum of Welter games, from EvalTables."""

    def __init__(self, spec: gc.GameSpec, p: int, bound: int, table: Optional[gc.EvalTable] = None):
        self.arities = spec.component_arities
        self.whole = table if table is not None else gc.EvalTable(spec, bound)
        self.parts = [gc.EvalTable(gc.saturate(gc.welter(m), p), bound) for m in self.arities]

    def value(self, parts: Sequence[Position]) -> tuple[int, int]:
        return self.whole.value(sum(parts, ()))

    def part_value(self, i: int, A: Position) -> tuple[int, int]:
        return self.parts[i].value(A)

    def part_candidate(self, i: int, A: Position, beta: int) -> Optional[Position]:
        t = self.parts[i]
        pool = sorted(t.descendants(A) | {A})
        return next((B for B in pool if t.value(B) == (beta, beta)), None)

    def drop_options(self, parts: Sequence[Position]) -> list[Position]:
        """Options whose lg is exactly one less, lexicographically."""
        flat = sum(parts, ())
        target = self.whole.value(flat)[1] - 1
        return [X for X in self.whole.options(flat) if self.whole.value(X)[1] == target]


def _welter_arities(spec: gc.GameSpec, p: int) -> tuple[int, ...]:
    if not (isinstance(spec.moves, gc.Saturation) and spec.moves.p == p):
        raise ValueError("full_descendant expects the canonical p-saturation of a Welter sum")
    pos = spec.positions
    parts = pos.parts if isinstance(pos, gc.Product) else (pos,)
    if not all(isinstance(P, gc.DistinctCoords) for P in parts):
        raise ValueError("full_descendant expects a sum of Welter games")
    return tuple(P.m for P in parts)


def _as_parts(position, arities: Sequence[int]) -> tuple[tuple[Position, ...], bool]:
    position = tuple(position)
    nested = bool(position) and isinstance(position[0], (tuple, list))
    if nested:
        parts = tuple(tuple(c) for c in position)
    else:
        parts, i = [], 0
        for m in arities:
            parts.append(position[i:i + m])
            i += m
        parts = tuple(parts)
    if tuple(len(c) for c in parts) != tuple(arities):
        raise ValueError(f"position {position} does not match arities {tuple(arities)}")
    return parts, nested


def full_descendant(spec: gc.GameSpec, p: int, position, target_sg: Optional[int] = None,
                    table: Optional[gc.EvalTable] = None, evaluator=None):
    """A full descendant of ``position`` with SG value ``target_sg``.

    ``spec`` must be the canonical p-saturation of a sum of Welter games.
    Component values alpha_i are lifted to :func:`target_full_value`, split
    with :func:`split_target`, and each component is replaced by its
    lexicographically smallest full descendant at the split value.  The
    result is then walked down one full option at a time (lexicographically
    smallest first) until its length equals ``target_sg``.

    Returns the same shape as ``position``: a flat tuple or a tuple of parts.
    """
    arities = _welter_arities(spec, p)
    parts, nested = _as_parts(position, arities)
    for A in parts:
        _check_distinct(A)
    if evaluator is None:
        bound = table.bound if table is not None else max(max(A) for A in parts)
        evaluator = TableEvaluator(spec, p, bound, table)
    sg_here = evaluator.value(parts)[0]
    target = sg_here if target_sg is None else target_sg
    if not 0 <= target <= sg_here:
        raise ValueError(f"target {target} is not in [0, {sg_here}]")

    alphas = [evaluator.part_value(i, A)[0] for i, A in enumerate(parts)]
    beta = target_full_value(p, alphas)
    betas = split_target(p, alphas, beta)
    chosen = []
    for i, (A, b) in enumerate(zip(parts, betas)):
        B = evaluator.part_candidate(i, A, b)
        if B is None:
            raise SearchExhausted(f"component {A} has no full descendant with sg {b}")
        chosen.append(B)
    current = tuple(chosen)
    if evaluator.value(current) != (beta, beta):
        raise SearchExhausted(f"{current} is not full with sg {beta}")

    length = beta
    while length > target:
        nxt = next((X for X in evaluator.drop_options(current)
                    if evaluator.value(_as_parts(X, arities)[0]) == (length - 1, length - 1)), None)
        if nxt is None:
            raise SearchExhausted(f"full position {current} has no full option")
        current = _as_parts(nxt, arities)[0]
        length -= 1
    return current if nested else sum(current, ())


def is_descendant_or_self(A: Position, B: Position) -> bool:
    """For (saturated) Welter sums: B is reachable from A iff B <= A componentwise."""
    return len(A) == len(B) and all(b <= a for a, b in zip(A, B))


def welter_path(A: Position, B: Position) -> list[Position]:
    """A chain of Welter moves from A to B, lowering coordinates in order of target.

    Raises ValueError when B is not at most A componentwise or has repeats.
    Every step lowers one coordinate to a free value, so it is a Welter move
    and, being a unit-order move, also a move of every p-saturation.
    """
    A, B = _check_distinct(A), _check_distinct(B)
    if not is_descendant_or_self(A, B):
        raise ValueError(f"{B} is not below {A}")
    path, cur = [A], list(A)
    for s in sorted(range(len(A)), key=lambda k: B[k]):
        if cur[s] != B[s]:
            if B[s] in cur:
                raise AssertionError(f"target {B[s]} is occupied in {tuple(cur)}")
            cur[s] = B[s]
            path.append(tuple(cur))
    return path
