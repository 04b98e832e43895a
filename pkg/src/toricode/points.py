"""Points of the parameterized toric set Y_Q and its size N."""
from __future__ import annotations

from itertools import product
from math import gcd, prod
from typing import NamedTuple

from .errors import GuardExceeded
from .intlat import IntMatrix, Lattice, kernel_basis, snf_diagonal
from .toric import ToricInstance

DEFAULT_GUARD = 10 ** 7


class TorusPoint(NamedTuple):
    coords: tuple   # field handles, all nonzero
    key: tuple      # discrete logs of the image under pi, in [0, q-2]
    h: tuple        # exponents of the parameter t = (eta^h_1, ..., eta^h_s)


def _check_guard(inst: ToricInstance, guard: int):
    size = (inst.q - 1) ** inst.s
    if size > guard:
        raise GuardExceeded(f"(q-1)^s = {size} exceeds the enumeration guard {guard}")


def point_key(inst: ToricInstance, coords) -> tuple:
    """Discrete logs of ``pi(P) = (P^{u_1}, ..., P^{u_n})`` for columns u_j of phi."""
    m = inst.q - 1
    logs = [inst.field.dlog(c) for c in coords]
    return tuple(sum(l * inst.phi[i, j] for i, l in enumerate(logs)) % m
                 for j in range(inst.n))


def enumerate_points(inst: ToricInstance, guard: int = DEFAULT_GUARD) -> list[TorusPoint]:
    """One representative per class of Y_Q, sorted by canonical key.

    The representative kept for a class is the first one met in
    lexicographic order of the exponent vector h.
    """
    _check_guard(inst, guard)
    m, F = inst.q - 1, inst.field
    Q, Qphi = inst.Q, inst.Qphi
    Qcols, QPcols = Q.columns(), Qphi.columns()
    seen = {}
    for h in product(range(m), repeat=inst.s):
        key = tuple(sum(a * b for a, b in zip(h, c)) % m for c in QPcols)
        if key in seen:
            continue
        coords = tuple(F.exp(sum(a * b for a, b in zip(h, c))) for c in Qcols)
        seen[key] = TorusPoint(coords, key, h)
    return [seen[k] for k in sorted(seen)]


def kernel_count(inst: ToricInstance, guard: int = DEFAULT_GUARD) -> int:
    """``|{h in {0..q-2}^s : h Q phi = 0 mod q-1}|``, the size of ker(phi_Q)."""
    _check_guard(inst, guard)
    m = inst.q - 1
    QPcols = inst.Qphi.columns()
    return sum(1 for h in product(range(m), repeat=inst.s)
               if all(sum(a * b for a, b in zip(h, c)) % m == 0 for c in QPcols))


def length_count(inst: ToricInstance, guard: int = DEFAULT_GUARD) -> int:
    total = (inst.q - 1) ** inst.s
    k = kernel_count(inst, guard)
    assert total % k == 0
    return total // k


def length_snf(inst: ToricInstance) -> int:
    """N read off the Smith form of Q phi: size of its image mod q-1."""
    m = inst.q - 1
    return prod(m // gcd(m, d) for d in snf_diagonal(inst.Qphi))


def torus_kernel_logs(inst: ToricInstance) -> Lattice:
    """Lattice of log vectors e in Z^r with ``(eta^e_1, ..., eta^e_r)`` in G = ker(pi).

    Those are the e with ``phi^T e = 0 mod q-1``.
    """
    m, r, n = inst.q - 1, inst.r, inst.n
    block = inst.phi.T.hstack(IntMatrix.identity(n).scaled(m))
    K = kernel_basis(block)
    return Lattice.span(K.select(rows=range(r)))
