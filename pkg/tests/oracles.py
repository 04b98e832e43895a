"""Independent reference computations used to check the exact kernels."""
from itertools import combinations, product
from math import gcd


def det(A):
    n = len(A)
    if n == 0:
        return 1
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    return sum((-1) ** j * A[0][j] * det([row[:j] + row[j + 1:] for row in A[1:]])
               for j in range(n))


def determinantal_divisors(A):
    """gcd of all k x k minors for k = 1..min(m, n); 0 once the rank is exceeded."""
    m, n = len(A), len(A[0]) if A else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, det([[A[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def invariant_factors(A):
    """Smith diagonal from determinantal divisors: d_k = D_k / D_{k-1}."""
    out, prev = [], 1
    for Dk in determinantal_divisors(A):
        if Dk == 0:
            out.append(0)
            prev = 0
            continue
        out.append(Dk // prev)
        prev = Dk
    return out


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def is_column_hnf(H):
    """Nonzero columns first, positive pivots strictly moving down, entries
    left of a pivot reduced into [0, pivot)."""
    m = len(H)
    cols = list(zip(*H)) if m else []
    last = -1
    seen_zero = False
    for j, c in enumerate(cols):
        nz = [i for i in range(m) if c[i]]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or c[p] <= 0:
            return False
        for k in range(j):
            if not 0 <= cols[k][p] < c[p]:
                return False
        last = p
    return True


def box_kernel(A, bound):
    """All integer v with |v_i| <= bound and A v = 0."""
    n = len(A[0])
    return [v for v in product(range(-bound, bound + 1), repeat=n)
            if all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)]


def poly_mulmod(a, b, modulus, p):
    """Schoolbook product of coefficient lists (low degree first) modulo a
    monic modulus over GF(p)."""
    k = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    for deg in range(len(out) - 1, k - 1, -1):
        c = out[deg]
        if c:
            for t in range(k + 1):
                out[deg - k + t] = (out[deg - k + t] - c * modulus[t]) % p
    out = out[:k] + [0] * (k - len(out[:k]))
    return out
