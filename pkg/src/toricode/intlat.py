"""Exact integer linear algebra: Hermite/Smith normal forms, kernels, lattices.

All arithmetic uses Python ints, so intermediate coefficient swell in the
normal-form computations never overflows.  Lattices are subgroups of Z^n
stored by a column-HNF basis, which makes equality a plain comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row major.

    ``rows``/``cols`` are stored explicitly so that empty shapes such as
    ``4 x 0`` survive round trips.
    """

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionMismatch(
                f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionMismatch("column count needed for a matrix without rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def _trusted(cls, rows: int, cols: int, data: tuple) -> "IntMatrix":
        # internal constructor for data already known to be well formed
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "data", data)
        return obj

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int) -> "IntMatrix":
        columns = [tuple(c) for c in columns]
        return cls(rows, len(columns),
                   tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(n, n, tuple(tuple(entries[i] if i == j else 0 for j in range(n))
                               for i in range(n)))

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.data, self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.data))

    def apply(self, v: Sequence[int]) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def scaled(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.data))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack needs equal row counts")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.data, other.data)))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack needs equal column counts")
        return IntMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def select(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "IntMatrix":
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else cols
        return IntMatrix(len(rows), len(cols),
                         tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        a = [list(r) for r in self.data]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r}, shape={self.shape})"


def as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)


class SignSplit(NamedTuple):
    plus: tuple
    minus: tuple


def sign_split(v: Sequence[int]) -> SignSplit:
    """Split ``v`` as ``plus - minus`` with disjoint nonnegative supports."""
    return SignSplit(tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v))


# -- normal forms -----------------------------------------------------------

def _col_axpy(cols, j, k, f):
    # cols[j] -= f * cols[k]
    cj, ck = cols[j], cols[k]
    for i in range(len(cj)):
        cj[i] -= f * ck[i]


def _from_cols(cols: list, m: int) -> IntMatrix:
    return IntMatrix._trusted(m, len(cols), tuple(zip(*cols)) if cols else ((),) * m)


def hnf(M) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form.

    Returns ``(H, U)`` with ``H = M @ U``, ``U`` unimodular.  The nonzero
    columns of ``H`` come first; each has a positive pivot (its first nonzero
    row), pivot rows strictly increase, and entries to the left of a pivot
    lie in ``[0, pivot)``.
    """
    M = as_matrix(M)
    m, n = M.shape
    cols = [list(c) for c in M.columns()]
    ucols = [[int(i == j) for i in range(n)] for j in range(n)]
    k = 0
    for i in range(m):
        if k == n:
            break
        while True:
            nz = [j for j in range(k, n) if cols[j][i]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: (abs(cols[j][i]), j))
            cols[k], cols[j0] = cols[j0], cols[k]
            ucols[k], ucols[j0] = ucols[j0], ucols[k]
            if len(nz) == 1:
                break
            p = cols[k][i]
            for j in range(k + 1, n):
                if cols[j][i]:
                    f = cols[j][i] // p
                    _col_axpy(cols, j, k, f)
                    _col_axpy(ucols, j, k, f)
        if k == n or cols[k][i] == 0:
            continue
        if cols[k][i] < 0:
            cols[k] = [-x for x in cols[k]]
            ucols[k] = [-x for x in ucols[k]]
        p = cols[k][i]
        for j in range(k):
            f = cols[j][i] // p
            if f:
                _col_axpy(cols, j, k, f)
                _col_axpy(ucols, j, k, f)
        k += 1
    return _from_cols(cols, m), _from_cols(ucols, n)


def hnf_rank(H: IntMatrix) -> int:
    return sum(1 for c in H.columns() if any(c))


def snf(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(D, P, K)`` with ``P @ M @ K == D``.

    Pivots are chosen by minimal absolute value; ``D`` is diagonal with
    nonnegative entries and ``d_i | d_{i+1}``.
    """
    M = as_matrix(M)
    m, n = M.shape
    A = [list(r) for r in M.data]
    P = [[int(i == j) for j in range(m)] for i in range(m)]
    K = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        A[a], A[b] = A[b], A[a]
        P[a], P[b] = P[b], P[a]

    def swap_cols(a, b):
        for R in A + K:
            R[a], R[b] = R[b], R[a]

    def row_axpy(dst, src, f):
        for R in (A, P):
            rd, rs = R[dst], R[src]
            for j in range(len(rd)):
                rd[j] -= f * rs[j]

    def col_axpy(dst, src, f):
        for R in A + K:
            R[dst] -= f * R[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < best[0]):
                    best = (abs(A[i][j]), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    row_axpy(i, t, A[i][t] // p)
            for j in range(t + 1, n):
                if A[t][j]:
                    col_axpy(j, t, A[t][j] // p)
            rest = [(abs(A[i][t]), 0, i) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), 1, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, kind, idx = min(rest)
                if kind == 0:
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            row_axpy(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            P[t] = [-x for x in P[t]]
    return (IntMatrix._trusted(m, n, tuple(map(tuple, A))),
            IntMatrix._trusted(m, m, tuple(map(tuple, P))),
            IntMatrix._trusted(n, n, tuple(map(tuple, K))))


def snf_diagonal(M) -> list[int]:
    D = snf(M)[0]
    return [D[i, i] for i in range(min(D.shape))]


def kernel_basis(M) -> IntMatrix:
    """Z-basis (columns, canonical HNF) of ``{v : M v = 0}``."""
    M = as_matrix(M)
    H, U = hnf(M)
    k = hnf_rank(H)
    return Lattice.span(U.select(cols=range(k, M.cols))).basis


def solve_int(M, v: Sequence[int]) -> tuple | None:
    """An integer ``x`` with ``M x = v``, or ``None`` if none exists."""
    M = as_matrix(M)
    if len(v) != M.rows:
        raise DimensionMismatch("right-hand side length does not match row count")
    H, U = hnf(M)
    k = hnf_rank(H)
    y = _solve_echelon(H.select(cols=range(k)), v)
    if y is None:
        return None
    return U.apply(tuple(y) + (0,) * (M.cols - k))


def _solve_echelon(B: IntMatrix, v: Sequence[int]) -> list | None:
    # B is a column-HNF basis: forward substitution down the pivot rows.
    res = list(v)
    coords = []
    for j, c in enumerate(B.columns()):
        pr = next(i for i, x in enumerate(c) if x)
        if any(res[:pr]):
            return None
        f, rem = divmod(res[pr], c[pr])
        if rem:
            return None
        coords.append(f)
        if f:
            for i in range(pr, len(res)):
                res[i] -= f * c[i]
    return coords if not any(res) else None


# -- lattices ---------------------------------------------------------------

@dataclass(frozen=True)
class Lattice:
    """Subgroup of Z^ambient_dim with a canonical column-HNF basis."""

    ambient_dim: int
    basis: IntMatrix

    @classmethod
    def span(cls, gens) -> "Lattice":
        gens = as_matrix(gens)
        H, _ = hnf(gens)
        return cls(gens.rows, H.select(cols=range(hnf_rank(H))))

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], ambient_dim: int) -> "Lattice":
        return cls.span(IntMatrix.from_columns(vectors, ambient_dim))

    @classmethod
    def full(cls, n: int) -> "Lattice":
        return cls(n, IntMatrix.identity(n))

    @classmethod
    def zero(cls, n: int) -> "Lattice":
        return cls(n, IntMatrix.zeros(n, 0))

    @property
    def rank(self) -> int:
        return self.basis.cols

    def vectors(self) -> list[tuple]:
        return self.basis.columns()

    def coordinates(self, v: Sequence[int]) -> list | None:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match lattice dimension")
        return _solve_echelon(self.basis, v)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def scaled(self, c: int) -> "Lattice":
        return Lattice.span(self.basis.scaled(c))

    def index_in(self, other: "Lattice") -> int:
        """``[other : self]``; assumes ``self`` is a full-rank sublattice of ``other``."""
        if self.rank != other.rank:
            raise DimensionMismatch("index only defined for equal-rank lattices")
        coords = []
        for v in self.vectors():
            c = other.coordinates(v)
            if c is None:
                raise ValueError("lattice is not a sublattice")
            coords.append(c)
        return abs(IntMatrix.from_columns(coords, other.rank).det())

    def __repr__(self):
        return f"Lattice(dim={self.ambient_dim}, basis={[list(v) for v in self.vectors()]})"


def _check_dims(A: Lattice, B: Lattice):
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch(
            f"lattices live in Z^{A.ambient_dim} and Z^{B.ambient_dim}")


def image_lattice(M) -> Lattice:
    return Lattice.span(M)


def lattice_sum(A: Lattice, B: Lattice) -> Lattice:
    _check_dims(A, B)
    return Lattice.span(A.basis.hstack(B.basis))


def lattice_intersect(A: Lattice, B: Lattice) -> Lattice:
    _check_dims(A, B)
    if A.rank == 0 or B.rank == 0:
        return Lattice.zero(A.ambient_dim)
    K = kernel_basis(A.basis.hstack(B.basis.scaled(-1)))
    return Lattice.span(A.basis @ K.select(rows=range(A.rank)))


def lattice_colon_int(A: Lattice, c: int) -> Lattice:
    """``{z : c z in A}``."""
    if c < 1:
        raise ValueError("colon needs a positive integer")
    if c == 1:
        return A
    meet = lattice_intersect(A, Lattice.full(A.ambient_dim).scaled(c))
    return Lattice.span(IntMatrix.from_columns(
        [[x // c for x in v] for v in meet.vectors()], A.ambient_dim))


def lattice_contains(A: Lattice, v: Sequence[int]) -> bool:
    return v in A
