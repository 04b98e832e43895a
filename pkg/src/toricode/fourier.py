"""Exact Fourier-Motzkin elimination for small systems ``A x >= b``.

Rows are kept integral and divided by their content, so no rationals appear
until the final bounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence


def _normalize(row):
    g = 0
    for x in row:
        g = gcd(g, x)
    return tuple(x // g for x in row) if g > 1 else tuple(row)


def _eliminate(rows: set, j: int) -> set | None:
    pos, neg, out = [], [], set()
    for r in rows:
        if r[j] > 0:
            pos.append(r)
        elif r[j] < 0:
            neg.append(r)
        else:
            out.add(r)
    for a in pos:
        for b in neg:
            # (-b_j) * a + a_j * b removes x_j
            out.add(_normalize(tuple(-b[j] * x + a[j] * y for x, y in zip(a, b))))
    for r in list(out):
        if not any(r[:-1]) and r[-1] > 0:
            return None  # 0 >= positive
    return {r for r in out if any(r[:-1])}


def variable_bounds(A: Sequence[Sequence[int]], b: Sequence[int], j: int):
    """Exact range of ``x_j`` over the polyhedron ``{x : A x >= b}``.

    Returns ``(lo, hi)`` as Fractions (``None`` for an unbounded side), or
    ``None`` when the polyhedron is empty.
    """
    n = len(A[0]) if A else 0
    rows = {_normalize(tuple(r) + (bi,)) for r, bi in zip(A, b)}
    for r in list(rows):
        if not any(r[:-1]):
            if r[-1] > 0:
                return None
            rows.discard(r)
    for other in range(n):
        if other == j:
            continue
        rows = _eliminate(rows, other)
        if rows is None:
            return None
    lo = hi = None
    for r in rows:
        a, rhs = r[j], Fraction(r[-1])
        if a > 0:
            v = rhs / a
            lo = v if lo is None else max(lo, v)
        elif a < 0:
            v = rhs / a
            hi = v if hi is None else min(hi, v)
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def integer_bounds(A, b, j):
    """Like :func:`variable_bounds` but rounded inward to integers."""
    res = variable_bounds(A, b, j)
    if res is None:
        return None
    lo, hi = res
    return (None if lo is None else ceil(lo)), (None if hi is None else floor(hi))


def cone_is_trivial(A: Sequence[Sequence[int]]) -> bool:
    """True iff ``{x in R^n : A x >= 0} = {0}``."""
    if not A:
        return False
    n = len(A[0])
    zero = [0] * len(A)
    return all(variable_bounds(A, zero, j) == (0, 0) for j in range(n))
