"""Carry-free base-p arithmetic on natural numbers.

Digit vectors are little-endian: ``digits(p, a)[L]`` is the coefficient of
``p**L``.  Nothing here assumes ``p`` is prime; :func:`is_prime` is provided
for callers that need it.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence, Union


class _Infinity:
    """The order of zero.  Compares greater than every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("pcalm.INF")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Order = Union[int, _Infinity]


def _check_base(p: int) -> None:
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")


def digits(p: int, a: int) -> list[int]:
    """Base-p digits of ``a``, least significant first (``[]`` for 0)."""
    _check_base(p)
    if a < 0:
        raise ValueError("digits of a negative number")
    out = []
    while a:
        a, r = divmod(a, p)
        out.append(r)
    return out


def digit(p: int, a: int, L: int) -> int:
    """The L-th base-p digit of ``a``."""
    return (a // p**L) % p


def from_digits(p: int, ds: Sequence[int]) -> int:
    value = 0
    for d in reversed(ds):
        value = value * p + d
    return value


def _nim_add2(p: int, x: int, y: int) -> int:
    if p == 2:
        return x ^ y
    out, scale = 0, 1
    while x or y:
        x, dx = divmod(x, p)
        y, dy = divmod(y, p)
        out += ((dx + dy) % p) * scale
        scale *= p
    return out


def nim_sum(p: int, xs: Iterable[int]) -> int:
    """p-Nim-sum: digitwise addition mod p with no carries."""
    _check_base(p)
    return reduce(lambda x, y: _nim_add2(p, x, y), xs, 0)


def nim_diff(p: int, x: int, y: int) -> int:
    """Digitwise subtraction mod p with no borrows."""
    _check_base(p)
    if p == 2:
        return x ^ y
    out, scale = 0, 1
    while x or y:
        x, dx = divmod(x, p)
        y, dy = divmod(y, p)
        out += ((dx - dy) % p) * scale
        scale *= p
    return out


def ord_p(p: int, a: int) -> Order:
    """p-adic order of ``a``; :data:`INF` for ``a == 0``."""
    _check_base(p)
    if a == 0:
        return INF
    a = abs(a)
    n = 0
    while a % p == 0:
        a //= p
        n += 1
    return n


def mord(p: int, C: Sequence[int]) -> Order:
    """Minimum p-adic order over the components of ``C`` (taken by absolute value)."""
    if len(C) == 0:
        raise ValueError("mord of an empty vector is undefined")
    return min(ord_p(p, c) for c in C)


def repdigit_allnines(p: int, h: int) -> int:
    """``p**(ord_p(h) + 1) - 1``: the number whose low ord_p(h)+1 digits are all p-1."""
    if h == 0:
        raise ValueError("h must be nonzero")
    return p ** (ord_p(p, h) + 1) - 1


def pnorm(p: int, h: int) -> int:
    """Repunit with ord_p(h)+1 ones in base p."""
    if h == 0:
        raise ValueError("h must be nonzero")
    return (p ** (ord_p(p, h) + 1) - 1) // (p - 1)


def legendre(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n!``."""
    total = 0
    while n:
        n //= p
        total += n
    return total


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def carry_lemma_terms(p: int, A: Sequence[int], B: Sequence[int], N: int) -> tuple[int, int, int]:
    """Three residues mod ``p**(N+1)`` that coincide whenever every a_i = b_i mod p**N.

    They are the ordinary sum of a_i - b_i, the p-Nim-sum of a_i minus-without-borrow
    b_i, and ``p**N`` times the N-th digit of that p-Nim-sum.
    """
    if len(A) != len(B):
        raise ValueError("vectors differ in length")
    mod = p ** (N + 1)
    if any((a - b) % p**N for a, b in zip(A, B)):
        raise ValueError(f"entries are not congruent mod {p}^{N}")
    plain = sum(a - b for a, b in zip(A, B)) % mod
    carry_free = nim_sum(p, [nim_diff(p, a, b) for a, b in zip(A, B)]) % mod
    top = digit(p, carry_free, N) * p**N
    return plain, carry_free, top
