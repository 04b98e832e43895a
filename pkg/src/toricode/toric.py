"""Validated toric input data: ray matrix, grading, parameter matrix, field."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, ExactnessFailure, RankDeficient, TorsionClassGroup
from .fourier import cone_is_trivial
from .gfq import Field
from .intlat import IntMatrix, hnf, hnf_rank, snf, snf_diagonal


def derive_beta(phi) -> IntMatrix:
    """Grading matrix from the Smith form of ``phi``.

    With ``P phi K = D``, the last ``r - n`` rows of ``P`` annihilate
    ``phi`` and map Z^r onto Z^d.
    """
    phi = _matrix(phi)
    r, n = phi.shape
    if r < n:
        raise RankDeficient("phi needs at least as many rows as columns")
    D, P, _ = snf(phi)
    diag = [D[i, i] for i in range(n)]
    if 0 in diag:
        raise RankDeficient("phi does not have full column rank")
    if any(x != 1 for x in diag):
        raise TorsionClassGroup(f"class group has torsion (invariant factors {diag})")
    return P.select(rows=range(n, r))


def degree_of(beta, m: Sequence[int]) -> tuple:
    return _matrix(beta).apply(m)


def _matrix(M, cols=None) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix.from_rows(M, cols)


@dataclass(frozen=True)
class ToricInstance:
    field: Field
    phi: IntMatrix
    beta: IntMatrix
    Q: IntMatrix
    complete: bool
    beta_supplied: bool = False

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def r(self) -> int:
        return self.phi.rows

    @property
    def n(self) -> int:
        return self.phi.cols

    @property
    def d(self) -> int:
        return self.r - self.n

    @property
    def s(self) -> int:
        return self.Q.rows

    @property
    def Qphi(self) -> IntMatrix:
        return self.Q @ self.phi

    def with_Q(self, Q) -> "ToricInstance":
        return validate(self.field, self.phi, Q, self.beta if self.beta_supplied else None)

    def with_beta(self, beta) -> "ToricInstance":
        return validate(self.field, self.phi, self.Q, beta)


def validate(q, phi, Q, beta=None) -> ToricInstance:
    """Check the input data and build a :class:`ToricInstance`.

    ``q`` may be an int or a :class:`Field`.  ``beta`` is derived from the
    Smith form of ``phi`` when omitted; a supplied ``beta`` is used as is
    after checking that ``0 -> Z^n -> Z^r -> Z^d -> 0`` is exact.
    Non-completeness is recorded, not raised.
    """
    field = q if isinstance(q, Field) else Field(int(q))
    phi = _matrix(phi)
    r, n = phi.shape
    Q = _matrix(Q, r)
    if Q.cols != r:
        raise DimensionMismatch(f"Q has {Q.cols} columns, expected r = {r}")
    if Q.rows < 1:
        raise DimensionMismatch("Q needs at least one row")
    if r < n or hnf_rank(hnf(phi)[0]) < n:
        raise RankDeficient("phi does not have full column rank")

    derived = derive_beta(phi)  # also rejects torsion in coker(phi)
    if beta is None:
        beta_m, supplied = derived, False
    else:
        beta_m, supplied = _matrix(beta, r), True
        if beta_m.shape != (r - n, r):
            raise DimensionMismatch(f"beta must be {r - n}x{r}, got {beta_m.rows}x{beta_m.cols}")
        if not (beta_m @ phi).is_zero():
            raise ExactnessFailure("beta * phi != 0")
        if r > n and snf_diagonal(beta_m) != [1] * (r - n):
            raise ExactnessFailure("beta is not surjective onto Z^d")

    complete = cone_is_trivial(phi.tolist()) if n else True
    return ToricInstance(field, phi, beta_m, Q, complete, supplied)
