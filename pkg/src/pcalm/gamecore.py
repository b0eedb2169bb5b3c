"""Subtraction games on N^m evaluated over finite boxes.

A game is a :class:`GameSpec`: a position set, a move set and an arity.  All
evaluation happens inside an :class:`EvalTable` with a componentwise bound.
Moves only ever subtract, so the descendants of an in-bound position stay in
bound and the bounded tables are exact.

Option enumeration for :class:`Saturation` move sets walks the whole box
``{B : 0 <= B <= A}`` and filters, which costs ``prod(a_i + 1)`` per
position.  That is fine for bounds up to about 12 with m <= 4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from pcalm.padic import digit, mord

Position = tuple[int, ...]


@lru_cache(maxsize=None)
def is_saturation_move(p: int, C: Position) -> bool:
    """Membership of ``C`` in Sat^m_p, via the digit criterion.

    With ``N = mord_p(C)``, ``C`` is a saturation move iff the N-th digits of
    its components do not sum to 0 mod p.  This agrees with the defining
    condition ``ord_p(sum C) == mord_p(C)``.
    """
    if not any(C):
        return False
    N = mord(p, C)
    return sum(digit(p, c, N) for c in C) % p != 0


# -- move sets ---------------------------------------------------------------


@dataclass(frozen=True)
class WeightOne:
    """Nim moves: take from exactly one coordinate."""

    m: int

    def contains(self, C: Position) -> bool:
        return len(C) == self.m and all(c >= 0 for c in C) and sum(1 for c in C if c) == 1

    def successors(self, A: Position) -> Iterator[Position]:
        for i, a in enumerate(A):
            for b in range(a - 1, -1, -1):
                yield A[:i] + (b,) + A[i + 1:]

    def within_saturation(self, p: int) -> bool:
        return True


@dataclass(frozen=True)
class Saturation:
    """All of Sat^m_p."""

    m: int
    p: int

    def contains(self, C: Position) -> bool:
        return len(C) == self.m and all(c >= 0 for c in C) and is_saturation_move(self.p, tuple(C))

    def successors(self, A: Position) -> Iterator[Position]:
        for B in itertools.product(*(range(a + 1) for a in A)):
            if B != A and is_saturation_move(self.p, _diff(A, B)):
                yield B

    def within_saturation(self, p: int) -> bool:
        return p == self.p


@dataclass(frozen=True)
class Explicit:
    """A finite list of move vectors."""

    m: int
    vectors: frozenset

    def __post_init__(self):
        for C in self.vectors:
            if len(C) != self.m:
                raise ValueError(f"move {C} does not have arity {self.m}")
            if any(c < 0 for c in C) or not any(C):
                raise ValueError(f"move {C} must be nonnegative and nonzero")

    def contains(self, C: Position) -> bool:
        return tuple(C) in self.vectors

    def successors(self, A: Position) -> Iterator[Position]:
        for C in sorted(self.vectors):
            if all(c <= a for c, a in zip(C, A)):
                yield _diff(A, C)

    def within_saturation(self, p: int) -> bool:
        return all(is_saturation_move(p, C) for C in self.vectors)


@dataclass(frozen=True)
class SumPad:
    """Moves of a disjunctive sum: one summand's move, zero-padded elsewhere."""

    parts: tuple

    @property
    def m(self) -> int:
        return sum(part.m for part in self.parts)

    def contains(self, C: Position) -> bool:
        hit = [i for i, c in enumerate(_split(C, self.parts)) if any(c)]
        if len(hit) != 1:
            return False
        i = hit[0]
        return self.parts[i].contains(_split(C, self.parts)[i])

    def successors(self, A: Position) -> Iterator[Position]:
        chunks = _split(A, self.parts)
        for i, part in enumerate(self.parts):
            head = sum(chunks[:i], ())
            tail = sum(chunks[i + 1:], ())
            for B in part.successors(chunks[i]):
                yield head + B + tail

    def within_saturation(self, p: int) -> bool:
        return all(part.within_saturation(p) for part in self.parts)


MoveSet = Union[WeightOne, Saturation, Explicit, SumPad]


# -- position sets -------------------------------------------------------------


@dataclass(frozen=True)
class FullGrid:
    m: int

    def __contains__(self, A: Position) -> bool:
        return len(A) == self.m and all(a >= 0 for a in A)

    def below(self, A: Position) -> Iterator[Position]:
        """Members B <= A componentwise, in lexicographic order."""
        return itertools.product(*(range(a + 1) for a in A))


@dataclass(frozen=True)
class DistinctCoords:
    """Welter positions: pairwise distinct coordinates."""

    m: int

    def __contains__(self, A: Position) -> bool:
        return len(A) == self.m and all(a >= 0 for a in A) and len(set(A)) == self.m

    def below(self, A: Position) -> Iterator[Position]:
        def rec(i, prefix, used):
            if i == len(A):
                yield prefix
                return
            for b in range(A[i] + 1):
                if b not in used:
                    yield from rec(i + 1, prefix + (b,), used | {b})

        return rec(0, (), frozenset())


@dataclass(frozen=True)
class ExplicitFinite:
    m: int
    points: frozenset

    def __post_init__(self):
        for A in self.points:
            if len(A) != self.m or any(a < 0 for a in A):
                raise ValueError(f"bad position {A} for arity {self.m}")

    def __contains__(self, A: Position) -> bool:
        return tuple(A) in self.points

    def below(self, A: Position) -> Iterator[Position]:
        return iter(sorted(B for B in self.points if all(b <= a for b, a in zip(B, A))))


@dataclass(frozen=True)
class Product:
    parts: tuple

    @property
    def m(self) -> int:
        return sum(part.m for part in self.parts)

    def __contains__(self, A: Position) -> bool:
        if len(A) != self.m:
            return False
        return all(c in part for c, part in zip(_split(A, self.parts), self.parts))

    def below(self, A: Position) -> Iterator[Position]:
        chunks = _split(A, self.parts)
        for combo in itertools.product(*(list(part.below(c)) for part, c in zip(self.parts, chunks))):
            yield sum(combo, ())


PositionSet = Union[FullGrid, DistinctCoords, ExplicitFinite, Product]


def _split(A: Sequence[int], parts) -> list[Position]:
    out, i = [], 0
    for part in parts:
        out.append(tuple(A[i:i + part.m]))
        i += part.m
    return out


def _diff(A: Position, B: Position) -> Position:
    return tuple(a - b for a, b in zip(A, B))


# -- games ---------------------------------------------------------------------


@dataclass(frozen=True)
class GameSpec:
    m: int
    positions: PositionSet
    moves: MoveSet
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("arity must be at least 1")
        if self.positions.m != self.m or self.moves.m != self.m:
            raise ValueError("positions, moves and arity disagree")

    @property
    def component_arities(self) -> tuple[int, ...]:
        if isinstance(self.positions, Product):
            return tuple(part.m for part in self.positions.parts)
        return (self.m,)

    def enumerate(self, bound: int) -> Iterator[Position]:
        """All positions with every coordinate <= bound, lexicographically."""
        return self.positions.below((bound,) * self.m)


def nim(m: int) -> GameSpec:
    return GameSpec(m, FullGrid(m), WeightOne(m), name=f"nim:{m}")


def welter(m: int) -> GameSpec:
    return GameSpec(m, DistinctCoords(m), WeightOne(m), name=f"welter:{m}")


def explicit_game(m: int, moves: Iterable[Sequence[int]], positions: Iterable[Sequence[int]] | None = None,
                  name: str = "explicit") -> GameSpec:
    P = FullGrid(m) if positions is None else ExplicitFinite(m, frozenset(tuple(A) for A in positions))
    return GameSpec(m, P, Explicit(m, frozenset(tuple(C) for C in moves)), name=name)


def two_point_game(p: int) -> GameSpec:
    """Gamma({0, p}, T^1): the smallest game that is not p-calm."""
    return GameSpec(1, ExplicitFinite(1, frozenset({(0,), (p,)})), WeightOne(1), name=f"two-point:{p}")


def disjunctive_sum(specs: Sequence[GameSpec]) -> GameSpec:
    if not specs:
        raise ValueError("need at least one summand")
    if len(specs) == 1:
        return specs[0]
    pos_parts, move_parts = [], []
    for s in specs:
        pos_parts.extend(s.positions.parts if isinstance(s.positions, Product) else [s.positions])
        move_parts.extend(s.moves.parts if isinstance(s.moves, SumPad) else [s.moves])
    m = sum(s.m for s in specs)
    name = "+".join(s.name for s in specs)
    # a sum of Nim heaps is Nim
    if all(isinstance(P, FullGrid) for P in pos_parts) and all(isinstance(S, WeightOne) for S in move_parts):
        return GameSpec(m, FullGrid(m), WeightOne(m), name=name)
    return GameSpec(m, Product(tuple(pos_parts)), SumPad(tuple(move_parts)), name=name)


def saturate(spec: GameSpec, p: int) -> GameSpec:
    """The canonical p-saturation Gamma(P, Sat^m_p).

    Raises ValueError when the moves are not contained in Sat^m_p, since the
    canonical representative is then not a p-saturation.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    if not spec.moves.within_saturation(p):
        raise ValueError(f"move set of {spec.name or spec} is not contained in Sat_{p}")
    name = f"sat{p}({spec.name})" if spec.name else ""
    return GameSpec(spec.m, spec.positions, Saturation(spec.m, p), name=name)


def options(spec: GameSpec, A: Sequence[int]) -> list[Position]:
    """Options of ``A`` in lexicographic order."""
    A = tuple(A)
    if A not in spec.positions:
        raise ValueError(f"{A} is not a position of {spec.name or spec}")
    if isinstance(spec.moves, Saturation):
        p = spec.moves.p
        return [B for B in spec.positions.below(A) if B != A and is_saturation_move(p, _diff(A, B))]
    return sorted(B for B in spec.moves.successors(A) if B in spec.positions)


# -- evaluation ----------------------------------------------------------------


class EvalTable:
    """Memo of (sg, lg) for one game inside the box [0, bound]^m.

    A table belongs to a single game; reuse it across queries on that game
    but never across games.
    """

    def __init__(self, spec: GameSpec, bound: int):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.spec = spec
        self.bound = bound
        self.memo: dict[Position, tuple[int, int]] = {}
        self._options: dict[Position, list[Position]] = {}
        self._desc: dict[Position, frozenset] = {}

    def __len__(self) -> int:
        return len(self.memo)

    def _check(self, A: Position) -> Position:
        A = tuple(A)
        if any(a > self.bound for a in A):
            raise ValueError(f"{A} exceeds the table bound {self.bound}")
        return A

    def options(self, A: Sequence[int]) -> list[Position]:
        A = self._check(A)
        opts = self._options.get(A)
        if opts is None:
            opts = self._options[A] = options(self.spec, A)
        return opts

    def value(self, A: Sequence[int]) -> tuple[int, int]:
        """(sg, lg) of ``A``."""
        A = self._check(A)
        hit = self.memo.get(A)
        if hit is not None:
            return hit
        # iterative post-order so deep cones do not hit the recursion limit
        stack = [A]
        while stack:
            X = stack[-1]
            if X in self.memo:
                stack.pop()
                continue
            opts = self.options(X)
            pending = [B for B in opts if B not in self.memo]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            g = mex(self.memo[B][0] for B in opts)
            length = 1 + max((self.memo[B][1] for B in opts), default=-1)
            self.memo[X] = (g, length)
        return self.memo[A]

    def descendants(self, A: Sequence[int]) -> frozenset:
        """Proper descendants of ``A`` (reachable by a nonempty path)."""
        A = self._check(A)
        hit = self._desc.get(A)
        if hit is not None:
            return hit
        stack = [A]
        while stack:
            X = stack[-1]
            if X in self._desc:
                stack.pop()
                continue
            opts = self.options(X)
            pending = [B for B in opts if B not in self._desc]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            acc = set(opts)
            for B in opts:
                acc |= self._desc[B]
            self._desc[X] = frozenset(acc)
        return self._desc[A]

    def fill(self) -> "EvalTable":
        """Evaluate every in-bound position."""
        for A in self.spec.enumerate(self.bound):
            self.value(A)
        return self


def _table(spec: GameSpec, A: Position, table: EvalTable | None) -> EvalTable:
    if table is None:
        return EvalTable(spec, max(A, default=0))
    if table.spec != spec:
        raise ValueError("table was built for a different game")
    return table


def sg(spec: GameSpec, A: Sequence[int], table: EvalTable | None = None) -> int:
    """Sprague-Grundy value: mex of the option values."""
    A = tuple(A)
    return _table(spec, A, table).value(A)[0]


def lg(spec: GameSpec, A: Sequence[int], table: EvalTable | None = None) -> int:
    """Length of the longest walk from ``A``."""
    A = tuple(A)
    return _table(spec, A, table).value(A)[1]


def is_full(spec: GameSpec, A: Sequence[int], table: EvalTable | None = None) -> bool:
    A = tuple(A)
    g, length = _table(spec, A, table).value(A)
    return g == length


def mex(values: Iterable[int]) -> int:
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def read_explicit(path: str) -> GameSpec:
    """Read an explicit game file.

    The first line is ``m=<arity>``, then one move vector per line, then an
    optional ``positions:`` line followed by the allowed positions.  Vectors
    are comma separated; blank lines and ``#`` comments are ignored.
    """
    with open(path) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("m="):
        raise ValueError(f"{path}: first line must be m=<arity>")
    m = int(lines[0][2:])
    moves, positions, section = [], None, "moves"
    for ln in lines[1:]:
        if ln.rstrip(":") == "positions":
            section, positions = "positions", []
            continue
        vec = tuple(int(x) for x in ln.replace(" ", "").split(","))
        (moves if section == "moves" else positions).append(vec)
    return explicit_game(m, moves, positions, name=f"explicit:{path}")


def parse_game(text: str) -> GameSpec:
    """``nim:m``, ``welter:m``, ``twopoint:p``, ``explicit:@file`` or ``sum:g1+g2+...``."""
    text = text.strip()
    if text.startswith("sum:"):
        return disjunctive_sum([parse_game(t) for t in text[4:].split("+")])
    kind, _, arg = text.partition(":")
    if kind == "explicit":
        if not arg.startswith("@"):
            raise ValueError("explicit games are read from a file: explicit:@path")
        return read_explicit(arg[1:])
    try:
        n = int(arg)
    except ValueError:
        raise ValueError(f"cannot parse game {text!r}") from None
    if kind == "nim":
        return nim(n)
    if kind == "welter":
        return welter(n)
    if kind == "twopoint":
        return two_point_game(n)
    raise ValueError(f"unknown game kind {kind!r}")
