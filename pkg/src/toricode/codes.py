"""Evaluation codes on Y_Q: graded monomial bases, generator matrices,
(N, k, d) and multigraded Hilbert function values."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Sequence

from .errors import DimensionMismatch, GuardExceeded, Unbounded
from .fourier import integer_bounds
from .gfq import Field
from .intlat import solve_int
from .points import DEFAULT_GUARD, enumerate_points
from .poly import Polynomial, Ring, buchberger
from .toric import ToricInstance


@dataclass(frozen=True)
class MonomialBasis:
    alpha: tuple
    monomials: tuple   # exponent vectors, lex descending (x_1 > ... > x_r)

    def __len__(self):
        return len(self.monomials)


@dataclass
class Code:
    N: int
    k: int
    d: int | None
    generator_matrix: list      # N rows (points) x M columns (monomials)
    rank: int
    basis: MonomialBasis | None = None


def monomials_of_degree(inst: ToricInstance, alpha: Sequence[int],
                        guard: int = DEFAULT_GUARD) -> MonomialBasis:
    """All m in N^r with beta m = alpha.

    Solutions are ``m0 + phi c``; bounds on each c_j come from Fourier-Motzkin
    on ``phi c >= -m0`` and the resulting integer box is scanned.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != inst.d:
        raise DimensionMismatch(f"degree needs {inst.d} entries, got {len(alpha)}")
    if not inst.complete:
        raise Unbounded("graded pieces are infinite-dimensional on a non-complete instance")
    r, n = inst.r, inst.n
    if inst.d:
        m0 = solve_int(inst.beta, alpha)
        if m0 is None:
            return MonomialBasis(alpha, ())
    else:
        m0 = (0,) * r
    A = inst.phi.tolist()
    b = [-x for x in m0]
    ranges = []
    for j in range(n):
        bounds = integer_bounds(A, b, j)
        if bounds is None:
            return MonomialBasis(alpha, ())
        lo, hi = bounds
        if lo is None or hi is None:
            raise Unbounded("solution set is not bounded")
        if lo > hi:
            return MonomialBasis(alpha, ())
        ranges.append(range(lo, hi + 1))
    cells = prod(len(rg) for rg in ranges)
    if cells > guard:
        raise GuardExceeded(f"monomial search box has {cells} cells")
    found = set()
    for c in product(*ranges):
        m = tuple(m0[i] + sum(inst.phi[i, j] * c[j] for j in range(n)) for i in range(r))
        if min(m, default=0) >= 0:
            found.add(m)
    return MonomialBasis(alpha, tuple(sorted(found, reverse=True)))


def evaluate_monomial(F: Field, point: Sequence[int], m: Sequence[int]) -> int:
    v = 1
    for x, e in zip(point, m):
        if e:
            v = F.mul(v, F.pow(x, e))
    return v


def evaluation_matrix(inst: ToricInstance, basis: MonomialBasis, points=None,
                      guard: int = DEFAULT_GUARD) -> list[list[int]]:
    """Row i holds the basis monomials evaluated at the i-th point representative."""
    if points is None:
        points = [p.coords for p in enumerate_points(inst, guard)]
    F = inst.field
    return [[evaluate_monomial(F, P, m) for m in basis.monomials] for P in points]


def row_echelon(F: Field, rows: list[list[int]]) -> list[list[int]]:
    """Reduced row echelon form over GF(q); returns the nonzero rows."""
    A = [list(r) for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(x, inv) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return A[:r]


def rank(F: Field, M: list[list[int]]) -> int:
    return len(row_echelon(F, M))


def _transpose(M):
    return [list(c) for c in zip(*M)]


def minimum_distance(F: Field, G: list[list[int]], guard: int = DEFAULT_GUARD) -> int | None:
    """Smallest weight of a nonzero codeword in the column space of ``G``.

    Exhaustive over codewords whose first nonzero message symbol is 1
    (scalar multiples share a weight).  ``None`` for the zero code.
    """
    basis = row_echelon(F, _transpose(G))   # rows: codeword basis
    k = len(basis)
    if k == 0:
        return None
    if F.q ** k > guard:
        raise GuardExceeded(f"q^k = {F.q ** k} exceeds the distance search guard {guard}")
    N = len(basis[0])
    best = N
    for lead in range(k):
        for tail in product(range(F.q), repeat=k - lead - 1):
            word = list(basis[lead])
            for coef, row in zip(tail, basis[lead + 1:]):
                if coef:
                    word = [F.add(x, F.mul(coef, y)) for x, y in zip(word, row)]
            w = sum(1 for x in word if x)
            if w < best:
                best = w
                if best == 1:
                    return 1
    return best


def code_params(inst: ToricInstance, alpha: Sequence[int], want_distance: bool = False,
                points=None, guard: int = DEFAULT_GUARD) -> Code:
    basis = monomials_of_degree(inst, alpha, guard)
    if points is None:
        points = [p.coords for p in enumerate_points(inst, guard)]
    G = evaluation_matrix(inst, basis, points)
    k = rank(inst.field, G) if basis.monomials else 0
    d = minimum_distance(inst.field, G, guard) if want_distance and k else None
    return Code(len(points), k, d, G, k, basis)


def hilbert_function(inst: ToricInstance, ideal_gens: Sequence[Polynomial], alpha: Sequence[int],
                     ring: Ring | None = None, guard: int = DEFAULT_GUARD) -> int:
    """Number of standard monomials of degree alpha for the ideal."""
    basis = monomials_of_degree(inst, alpha, guard)
    gens = [g for g in ideal_gens if g]
    if not gens:
        return len(basis)
    ring = ring or gens[0].ring
    leads = buchberger(gens, ring).leading_exponents()
    return sum(1 for m in basis.monomials
               if not any(all(a <= b for a, b in zip(l, m)) for l in leads))
