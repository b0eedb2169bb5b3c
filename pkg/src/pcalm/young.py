"""Young diagrams, hooks, the hook formula and p'-subdiagrams.

A diagram is stored as its weakly decreasing tuple of positive row lengths.
The bridge to Welter's game is the beta-set: a position with m distinct
coordinates is the set of first-column hook lengths of a diagram padded to
m rows, and a Welter move is a hook removal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Optional, Sequence, Union

from pcalm import gamecore as gc
from pcalm import welter
from pcalm.padic import is_prime, legendre, nim_sum, ord_p, pnorm


@dataclass(frozen=True)
class YoungDiagram:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts if x != 0)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative row length in {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{self.parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def cells(self) -> frozenset:
        return frozenset((i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1))

    def conjugate(self) -> "YoungDiagram":
        if not self.parts:
            return self
        return YoungDiagram(tuple(sum(1 for row in self.parts if row >= j) for j in range(1, self.parts[0] + 1)))

    def contains(self, other: "YoungDiagram") -> bool:
        return len(other) <= len(self) and all(a <= b for a, b in zip(other.parts, self.parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class DiagramTuple:
    diagrams: tuple[YoungDiagram, ...]

    def __post_init__(self):
        if not self.diagrams:
            raise ValueError("a diagram tuple needs at least one diagram")
        object.__setattr__(self, "diagrams", tuple(as_diagram(Y) for Y in self.diagrams))

    @property
    def size(self) -> int:
        return sum(Y.size for Y in self.diagrams)

    def contains(self, other: "DiagramTuple") -> bool:
        return len(other.diagrams) == len(self.diagrams) and all(
            Y.contains(Z) for Y, Z in zip(self.diagrams, other.diagrams))

    def __str__(self) -> str:
        return ";".join(map(str, self.diagrams))


Shape = Union[YoungDiagram, DiagramTuple]


def as_diagram(Y) -> YoungDiagram:
    return Y if isinstance(Y, YoungDiagram) else YoungDiagram(tuple(Y))


def as_shape(obj) -> Shape:
    """Accept a diagram, a diagram tuple, a tuple of ints or a tuple of tuples."""
    if isinstance(obj, (YoungDiagram, DiagramTuple)):
        return obj
    obj = tuple(obj)
    if obj and all(isinstance(x, (tuple, list, YoungDiagram)) for x in obj):
        return DiagramTuple(tuple(as_diagram(x) for x in obj))
    return YoungDiagram(obj)


def _components(shape: Shape) -> tuple[YoungDiagram, ...]:
    return shape.diagrams if isinstance(shape, DiagramTuple) else (shape,)


# -- positions <-> diagrams -------------------------------------------------------


def position_to_diagram(A: Sequence[int]) -> YoungDiagram:
    A = welter._check_distinct(A)
    m = len(A)
    ordered = sorted(A, reverse=True)
    return YoungDiagram(tuple(a - (m - 1 - i) for i, a in enumerate(ordered)))


def diagram_to_position(Y, m: int) -> tuple[int, ...]:
    """Beta-set of ``Y`` padded to m rows, in decreasing order."""
    Y = as_diagram(Y)
    if m < len(Y):
        raise ValueError(f"{m} rows cannot hold a diagram with {len(Y)} parts")
    rows = Y.parts + (0,) * (m - len(Y))
    return tuple(row + m - 1 - i for i, row in enumerate(rows))


# -- hooks -------------------------------------------------------------------------


def hook_length(Y, i: int, j: int) -> int:
    Y = as_diagram(Y)
    if not (1 <= i <= len(Y) and 1 <= j <= Y.parts[i - 1]):
        raise ValueError(f"cell ({i},{j}) is not in {Y.parts}")
    col = Y.conjugate().parts[j - 1]
    return Y.parts[i - 1] - j + col - i + 1


def hook_lengths(shape) -> tuple[int, ...]:
    """Sorted hook multiset; for a tuple the multisets are added."""
    out = []
    for Y in _components(as_shape(shape)):
        conj = Y.conjugate().parts
        for i, row in enumerate(Y.parts, 1):
            out.extend(row - j + conj[j - 1] - i + 1 for j in range(1, row + 1))
    return tuple(sorted(out))


def remove_hook(Y, i: int, j: int) -> YoungDiagram:
    """Remove the (i,j)-hook by moving beta number i down by the hook length."""
    Y = as_diagram(Y)
    h = hook_length(Y, i, j)
    beta = list(diagram_to_position(Y, len(Y)))
    beta[i - 1] -= h
    return position_to_diagram(beta)


def remove_hook_cells(Y, i: int, j: int) -> YoungDiagram:
    """The same removal done on rows: strip the rim from row i down to column j's foot."""
    Y = as_diagram(Y)
    hook_length(Y, i, j)
    rows = list(Y.parts) + [0]
    new = rows[:i - 1]
    for r in range(i - 1, len(Y)):
        new.append(min(rows[r], j - 1) + max(rows[r + 1] - j, 0))
    return YoungDiagram(tuple(new))


def move_matches_hook(A: Sequence[int], B: Sequence[int]) -> tuple[int, int]:
    """The cell (i, j) whose hook removal takes Y(A) to Y(B) for a Welter move A -> B."""
    A, B = tuple(A), tuple(B)
    if B not in gc.options(gc.welter(len(A)), A):
        raise ValueError(f"{B} is not a Welter option of {A}")
    s = next(k for k, (a, b) in enumerate(zip(A, B)) if a != b)
    a, target = A[s], B[s]
    i = sorted(A, reverse=True).index(a) + 1
    gaps = [x for x in range(a) if x not in A]
    j = gaps.index(target) + 1
    return i, j


def corner_removals(shape) -> list[Shape]:
    shape = as_shape(shape)
    comps = _components(shape)
    if all(Y.size == 0 for Y in comps):
        raise ValueError("the empty shape has no corners")
    out = []
    for k, Y in enumerate(comps):
        rows = Y.parts
        for r in range(len(rows)):
            if r + 1 == len(rows) or rows[r + 1] < rows[r]:
                smaller = YoungDiagram(rows[:r] + (rows[r] - 1,) + rows[r + 1:])
                if isinstance(shape, DiagramTuple):
                    out.append(DiagramTuple(comps[:k] + (smaller,) + comps[k + 1:]))
                else:
                    out.append(smaller)
    return out


# -- counting ----------------------------------------------------------------------


def tableau_count(shape) -> int:
    """Number of standard tableaux, by the hook formula."""
    shape = as_shape(shape)
    return factorial(shape.size) // prod(hook_lengths(shape))


ORACLE_CAP = 10


def tableau_count_oracle(shape) -> int:
    """Count standard tableaux by growing the shape one cell at a time."""
    shape = as_shape(shape)
    if shape.size > ORACLE_CAP:
        raise ValueError(f"oracle is capped at {ORACLE_CAP} cells")
    target = tuple(Y.parts for Y in _components(shape))
    return _grow((tuple(() for _ in target)), target)


@lru_cache(maxsize=None)
def _grow(current: tuple, target: tuple) -> int:
    if current == target:
        return 1
    total = 0
    for k, (rows, goal) in enumerate(zip(current, target)):
        for r in range(len(goal)):
            if r > len(rows):
                break
            have = rows[r] if r < len(rows) else 0
            if have >= goal[r] or (r and have + 1 > rows[r - 1]):
                continue
            grown = rows[:r] + (have + 1,) + rows[r + 1:]
            total += _grow(current[:k] + (grown,) + current[k + 1:], target)
    return total


def nu_of_fcount(p: int, shape) -> int:
    """Exponent of the prime p in the tableau count, by Legendre's formula."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    shape = as_shape(shape)
    return legendre(p, shape.size) - sum(ord_p(p, h) for h in hook_lengths(shape))


def psi_diagram(p: int, shape) -> int:
    """p-Nim-sum of pnorm over the hook multiset."""
    return nim_sum(p, [pnorm(p, h) for h in hook_lengths(shape)])


# -- p'-subdiagrams ------------------------------------------------------------------


def subdiagrams(Y, n: int) -> list[YoungDiagram]:
    """All diagrams with n cells inside Y, in lexicographic order of parts."""
    rows = as_diagram(Y).parts
    out = []

    def rec(r, left, cap, prefix):
        if left == 0:
            out.append(YoungDiagram(tuple(prefix)))
            return
        if r == len(rows):
            return
        for x in range(min(cap, rows[r], left), 0, -1):
            rec(r + 1, left - x, x, prefix + [x])

    rec(0, n, n, [])
    return sorted(out, key=lambda Z: Z.parts)


def _smallest_assignment(values: Sequence[int], caps: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest arrangement of ``values`` with slot k at most caps[k]."""

    def feasible(vals, cs):
        return all(v <= c for v, c in zip(sorted(vals, reverse=True), sorted(cs, reverse=True)))

    pool = sorted(values)
    if not feasible(pool, caps):
        return None
    out = []
    for k, cap in enumerate(caps):
        for v in pool:
            if v > cap:
                break
            rest = list(pool)
            rest.remove(v)
            if feasible(rest, caps[k + 1:]):
                out.append(v)
                pool = rest
                break
    return tuple(out)


class DiagramEvaluator:
    """Closed-form values for a saturated Welter sum, driven by diagrams.

    sg is psi, lg is the cell count, and the descendants of A are exactly the
    positions B <= A with distinct coordinates, so no game tree is built.
    """

    def __init__(self, p: int, arities: Sequence[int]):
        self.p = p
        self.arities = tuple(arities)

    def value(self, parts) -> tuple[int, int]:
        return welter.psi_sum(self.p, parts), sum(welter.welter_lg(A) for A in parts)

    def part_value(self, i: int, A) -> tuple[int, int]:
        return welter.psi(self.p, A), welter.welter_lg(A)

    def part_candidate(self, i: int, A, beta: int):
        Y = position_to_diagram(A)
        best = None
        for Z in subdiagrams(Y, beta):
            if psi_diagram(self.p, Z) != beta:
                continue
            B = _smallest_assignment(diagram_to_position(Z, len(A)), A)
            if B is not None and (best is None or B < best):
                best = B
        return best

    def drop_options(self, parts) -> list[tuple[int, ...]]:
        flat = sum(parts, ())
        out = []
        for k, a in enumerate(flat):
            X = flat[:k] + (a - 1,) + flat[k + 1:]
            if a and _parts_distinct(X, self.arities):
                out.append(X)
        return sorted(out)


def _parts_distinct(flat, arities) -> bool:
    i = 0
    for m in arities:
        chunk = flat[i:i + m]
        if len(set(chunk)) != m:
            return False
        i += m
    return True


def find_pprime_subdiagram(p: int, shape, rows: Optional[Sequence[int]] = None) -> Shape:
    """A subshape Z with psi_p(shape) cells and tableau count prime to p.

    Each diagram is embedded as a Welter position with ``rows[k]`` rows (its
    number of parts by default, at least 1), a full descendant is found in the
    saturated sum and its diagrams are read back.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    shape = as_shape(shape)
    comps = _components(shape)
    if rows is None:
        rows = [max(1, len(Y)) for Y in comps]
    parts = tuple(diagram_to_position(Y, m) for Y, m in zip(comps, rows))
    arities = tuple(len(A) for A in parts)
    spec = gc.saturate(welter.welter_sum(arities), p)
    found = welter.full_descendant(spec, p, parts, evaluator=DiagramEvaluator(p, arities))
    Zs = tuple(position_to_diagram(B) for B in found)
    Z = DiagramTuple(Zs) if isinstance(shape, DiagramTuple) else Zs[0]
    if not (shape.contains(Z) and Z.size == psi_diagram(p, shape) and nu_of_fcount(p, Z) == 0):
        raise welter.SearchExhausted(f"{Z} is not a p'-subshape of {shape}")
    return Z


def partitions(n: int, max_part: Optional[int] = None) -> list[YoungDiagram]:
    """All diagrams with n cells."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [YoungDiagram(())]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(YoungDiagram((first,) + rest.parts))
    return out


def shape_tuples(total: int, k: int) -> list[DiagramTuple]:
    """All k-tuples of diagrams with ``total`` cells in all."""
    out = []
    for cut in combinations(range(total + k - 1), k - 1):
        sizes = [b - a - 1 for a, b in zip((-1,) + cut, cut + (total + k - 1,))]
        groups = [[Y] for Y in partitions(sizes[0])]
        for s in sizes[1:]:
            groups = [g + [Y] for g in groups for Y in partitions(s)]
        out.extend(DiagramTuple(tuple(g)) for g in groups)
    return out
