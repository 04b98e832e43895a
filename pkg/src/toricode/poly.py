"""Sparse multivariate polynomials over GF(q) with lex orders, and
Buchberger's algorithm with elimination and saturation on top.

A :class:`Ring` fixes the field, variable names and a lex priority list.
Exponent vectors handed to and returned from the public API are in the
ring's natural variable order; internally every exponent is permuted into
priority order so that Python's tuple comparison *is* the monomial order.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import OrderMismatch, ResourceGuard
from .gfq import Field
from .intlat import sign_split

DEFAULT_MAX_BASIS = 10 ** 4


class MonomialOrder:
    """Lex order given by a variable priority list (highest first)."""

    kind = "lex"

    def __init__(self, priority: Sequence[int]):
        self.priority = tuple(priority)
        if sorted(self.priority) != list(range(len(self.priority))):
            raise OrderMismatch(f"{self.priority} is not a permutation")

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.priority == other.priority

    def __hash__(self):
        return hash(self.priority)

    def __repr__(self):
        return f"MonomialOrder(lex, {list(self.priority)})"


class Ring:
    def __init__(self, field: Field, names: Sequence[str], order: Sequence[int] | MonomialOrder | None = None):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        if order is None:
            order = range(self.nvars)
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
        if len(self.order.priority) != self.nvars:
            raise OrderMismatch("order does not rank every variable")
        self._perm = self.order.priority
        inv = [0] * self.nvars
        for pos, var in enumerate(self._perm):
            inv[var] = pos
        self._inv = tuple(inv)

    @classmethod
    def standard(cls, field: Field, nvars: int, prefix: str = "x") -> "Ring":
        return cls(field, [f"{prefix}_{i + 1}" for i in range(nvars)])

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.field == other.field
                and self.names == other.names and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        ranked = " > ".join(self.names[i] for i in self._perm)
        return f"Ring(GF({self.field.q}), lex {ranked})"

    def order_string(self) -> str:
        return " > ".join(self.names[i] for i in self._perm)

    def to_internal(self, exp: Sequence[int]) -> tuple:
        return tuple(exp[i] for i in self._perm)

    def to_natural(self, exp: Sequence[int]) -> tuple:
        return tuple(exp[i] for i in self._inv)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.monomial((0,) * self.nvars)

    def monomial(self, exp: Sequence[int], coeff: int = 1) -> "Polynomial":
        return self.from_dict({tuple(exp): coeff})

    def var(self, i: int) -> "Polynomial":
        return self.monomial(tuple(int(j == i) for j in range(self.nvars)))

    def from_dict(self, terms: dict) -> "Polynomial":
        """Build from ``{natural exponent tuple: coefficient handle}``."""
        return Polynomial(self, {self.to_internal(e): c for e, c in terms.items() if c})

    def binomial(self, a: Sequence[int], b: Sequence[int]) -> "Polynomial":
        """``x^a - x^b``."""
        F = self.field
        t = {}
        for e, c in ((tuple(a), 1), (tuple(b), F.neg(1))):
            t[e] = F.add(t.get(e, 0), c)
        return self.from_dict(t)


def _lex_desc(terms: dict) -> tuple:
    return tuple(sorted(terms.items(), reverse=True))


class Polynomial:
    """Immutable polynomial; ``terms`` is sorted strictly descending."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = _lex_desc({e: c for e, c in terms.items() if c})
        self._hash = None

    def _dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> tuple:
        """Leading exponent (natural order)."""
        return self.ring.to_natural(self.terms[0][0])

    @property
    def lc(self) -> int:
        return self.terms[0][1]

    def exponents(self) -> list[tuple]:
        return [self.ring.to_natural(e) for e, _ in self.terms]

    def items(self) -> list[tuple]:
        return [(self.ring.to_natural(e), c) for e, c in self.terms]

    def support_vars(self) -> set:
        out = set()
        for e, _ in self.terms:
            out.update(self.ring._perm[i] for i, x in enumerate(e) if x)
        return out

    def is_binomial(self) -> bool:
        return len(self.terms) <= 2

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def monic(self) -> "Polynomial":
        if not self.terms or self.lc == 1:
            return self
        F = self.ring.field
        inv = F.inv(self.lc)
        return Polynomial(self.ring, {e: F.mul(c, inv) for e, c in self.terms})

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")
        F = self.ring.field
        t = self._dict()
        for e, c in other.terms:
            if sign < 0:
                c = F.neg(c)
            t[e] = F.add(t.get(e, 0), c)
        return Polynomial(self.ring, t)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms})

    def __mul__(self, other):
        F = self.ring.field
        if isinstance(other, int):
            return Polynomial(self.ring, {e: F.mul(c, other) for e, c in self.terms})
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")
        t = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = F.add(t.get(e, 0), F.mul(c1, c2))
        return Polynomial(self.ring, t)

    def evaluate(self, point: Sequence[int]) -> int:
        F = self.ring.field
        acc = 0
        for e, c in self.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = F.mul(v, F.pow(x, k))
            acc = F.add(acc, v)
        return acc

    def map_to(self, ring: Ring, var_map: Sequence[int | None]) -> "Polynomial":
        """Move to ``ring``, sending variable i to ``var_map[i]``.

        Variables mapped to ``None`` must not occur.
        """
        t = {}
        for e, c in self.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    if var_map[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]} has no image")
                    new[var_map[i]] += k
            t[tuple(new)] = c
        return ring.from_dict(t)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_monomial(names: Sequence[str], exp: Sequence[int]) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k]
    return "*".join(parts) if parts else "1"


def format_polynomial(f: Polynomial) -> str:
    """Terms in descending order, e.g. ``x_1^2*x_2 - x_4``."""
    if f.is_zero():
        return "0"
    F = f.ring.field
    out = []
    for idx, (e, c) in enumerate(f.items()):
        mono = format_monomial(f.ring.names, e)
        negative = False
        if F.k == 1 and c > F.p // 2 and F.p > 2:
            negative, c = True, F.p - c
        if c == 1:
            body = mono
        else:
            body = F.format(c) if mono == "1" else f"{F.format(c)}*{mono}"
        if idx == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)


def to_binomial(v: Sequence[int], ring: Ring) -> Polynomial:
    """``x^{v+} - x^{v-}``."""
    plus, minus = sign_split(v)
    return ring.binomial(plus, minus)


# -- Groebner bases -----------------------------------------------------------

class GroebnerBasis:
    """Reduced, monic Groebner basis sorted by ascending leading monomial."""

    def __init__(self, ring: Ring, polys: list):
        self.ring = ring
        self.polys = list(polys)
        self._red = [_reducer(g) for g in self.polys]

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self.polys == other.polys

    def leading_exponents(self) -> list[tuple]:
        return [g.lm for g in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.ring, _normal_form(f._dict(), self._red, self.ring.field))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.polys]})"


def _reducer(g: Polynomial):
    # (leading exponent, tail terms) of a monic polynomial, internal order
    return g.terms[0][0], g.terms[1:]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _normal_form(f: dict, reducers, F: Field) -> dict:
    result = {}
    f = dict(f)
    while f:
        t = max(f)
        c = f.pop(t)
        for lm, tail in reducers:
            if _divides(lm, t):
                shift = [x - y for x, y in zip(t, lm)]
                for e, gc in tail:
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    v = F.sub(f.get(e2, 0), F.mul(c, gc))
                    if v:
                        f[e2] = v
                    else:
                        f.pop(e2, None)
                break
        else:
            result[t] = c
    return result


def _monic_dict(f: dict, F: Field) -> dict:
    lc = f[max(f)]
    if lc == 1:
        return f
    inv = F.inv(lc)
    return {e: F.mul(c, inv) for e, c in f.items()}


def _spoly(f, g, F):
    (lf, tf), (lg, tg) = f, g
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    out = {}
    for (lead, tail), sign in ((f, 1), (g, -1)):
        shift = [x - y for x, y in zip(lcm, lead)]
        for e, c in tail:
            e2 = tuple(a + b for a, b in zip(e, shift))
            out[e2] = F.add(out.get(e2, 0), c if sign > 0 else F.neg(c))
    return {e: c for e, c in out.items() if c}


def _lcm(a, b) -> tuple:
    return tuple(map(max, a, b))


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Packer:
    """Exponent vectors packed into one integer for fast divisibility tests.

    Each exponent gets a field of ``width`` bits whose top bit is a guard:
    ``a | b`` iff subtracting field-wise from ``b`` with guards set borrows
    from no guard bit.
    """

    def __init__(self, nvars: int, width: int = 24):
        self.width = width
        self.guard = sum(1 << (width * i + width - 1) for i in range(nvars))
        self.limit = 1 << (width - 1)

    def pack(self, e) -> int:
        out, w = 0, self.width
        for i, x in enumerate(e):
            if x >= self.limit:
                raise ResourceGuard("exponent too large for the divisibility table")
            out |= x << (w * i)
        return out

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g


STRATEGIES = ("normal", "sugar")


def buchberger(gens: Iterable[Polynomial], ring: Ring | None = None,
               max_size: int = DEFAULT_MAX_BASIS, strategy: str = "normal") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are selected by the normal strategy (smallest lcm first, ties by
    generator index) or, with ``strategy="sugar"``, by smallest sugar degree
    first with the same tie-breaks.  Sugar keeps intermediate lex bases of
    binomial elimination ideals small; the reduced basis returned is the
    same either way.  New pairs are filtered with the Gebauer-Moller
    update, which applies the product and chain criteria; elements whose
    leading monomial becomes divisible by a newer one stop taking part in
    new pairs and in reduction.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown pair strategy {strategy!r}")
    use_sugar = strategy == "sugar"
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    F = ring.field
    pk = _Packer(ring.nvars)
    div = pk.divides
    G: list = []          # every element ever added, by index
    packed: list = []     # packed leading monomials of G
    active: list = []     # indices whose leading monomial is not redundant
    sugar: list = []      # sugar degree of each element
    pairs: dict = {}      # (i, j) -> (lcm, packed lcm), i < j
    heap: list = []

    def update(j):
        lj, pj = G[j][0], packed[j]
        lj_deg = sum(lj)
        items = []
        for i in active:
            m = _lcm(G[i][0], lj)
            items.append((m, i, pk.pack(m), _coprime(G[i][0], lj)))
        # chain criterion among the new pairs; a divisor of an lcm sorts
        # no later than it, ties broken by index
        items.sort()
        keep = []
        for pos, (m, i, pm, cop) in enumerate(items):
            if cop or not any(div(items[k][2], pm) for k in range(pos)):
                keep.append((m, i, pm, cop))
        # an lcm shared with a coprime pair is already covered by it
        coprime_lcms = {pm for _, _, pm, c in keep if c}
        # prune old pairs that the new leading monomial makes redundant
        for (a, b), (m, pm) in list(pairs.items()):
            if div(pj, pm) and _lcm(G[a][0], lj) != m and _lcm(G[b][0], lj) != m:
                del pairs[(a, b)]
        for m, i, pm, cop in keep:
            if cop or pm in coprime_lcms:
                continue
            pairs[(i, j)] = (m, pm)
            sug = max(sugar[i] + sum(m) - sum(G[i][0]), sugar[j] + sum(m) - lj_deg)
            heapq.heappush(heap, (sug if use_sugar else 0, m, j, i, sug))
        active[:] = [i for i in active if not div(pj, packed[i])]
        active.append(j)

    def push(entry, sg):
        sugar.append(sg)
        G.append(entry)
        packed.append(pk.pack(entry[0]))
        if len(G) > max_size:
            raise ResourceGuard(f"Groebner basis exceeded {max_size} elements")
        update(len(G) - 1)

    for g in gens:
        if g.ring != ring:
            raise ValueError("generator from a different ring")
        if g:
            push(_reducer(g.monic()), g.total_degree())

    while heap:
        _, lcm, j, i, sug = heapq.heappop(heap)
        if (i, j) not in pairs or pairs[(i, j)][0] != lcm:
            continue
        del pairs[(i, j)]
        h = _normal_form(_spoly(G[i], G[j], F), [G[k] for k in active], F)
        if h:
            h = _monic_dict(h, F)
            lead = max(h)
            del h[lead]
            push((lead, _lex_desc(h)), sug)

    return GroebnerBasis(ring, _reduce_basis([G[k] for k in active], ring))


def _reduce_basis(G: list, ring: Ring) -> list:
    F = ring.field
    keep = []
    for idx, (lm, tail) in enumerate(G):
        redundant = any(
            _divides(lm2, lm) and (lm2 != lm or idx2 < idx)
            for idx2, (lm2, _) in enumerate(G) if idx2 != idx)
        if not redundant:
            keep.append((lm, tail))
    keep.sort(key=lambda g: g[0])
    out = []
    for idx, (lm, tail) in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        rest = _normal_form(dict(tail), others, F)
        rest[lm] = 1
        out.append(Polynomial(ring, rest))
    return out


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(f)


def eliminate(gens: Sequence[Polynomial], drop_vars: Iterable[int], ring: Ring | None = None,
              max_size: int = DEFAULT_MAX_BASIS, strategy: str = "normal") -> list[Polynomial]:
    """Generators of ``<gens>`` intersected with the subring of kept variables.

    The ring's order must rank every dropped variable above every kept one.
    Returned polynomials live in the same ring and form a reduced Groebner
    basis of the elimination ideal.
    """
    ring = ring or gens[0].ring
    drop = set(drop_vars)
    if set(ring.order.priority[:len(drop)]) != drop:
        raise OrderMismatch("order must rank eliminated variables highest")
    gb = buchberger(gens, ring, max_size, strategy)
    return [g for g in gb if not (g.support_vars() & drop)]


def saturate(gens: Sequence[Polynomial], f: Polynomial, max_size: int = DEFAULT_MAX_BASIS,
             strategy: str = "normal") -> list[Polynomial]:
    """Generators of ``<gens> : f^inf`` via ``(<gens> + <u f - 1>) cap S``."""
    ring = f.ring
    n = ring.nvars
    big = Ring(ring.field, ring.names + ("_u",), (n,) + ring.order.priority)
    lift = list(range(n))
    lifted = [g.map_to(big, lift) for g in gens]
    lifted.append(big.var(n) * f.map_to(big, lift) - big.one())
    kept = eliminate(lifted, [n], big, max_size, strategy)
    back = lift + [None]
    return [g.map_to(ring, back) for g in kept]


def ideal_equal(A: Sequence[Polynomial], B: Sequence[Polynomial], ring: Ring | None = None) -> bool:
    ring = ring or (A[0].ring if A else B[0].ring)
    return buchberger(A, ring).polys == buchberger(B, ring).polys


def is_homogeneous_binomial(a: Sequence[int], b: Sequence[int], beta) -> bool:
    """``x^a - x^b`` is homogeneous iff ``beta (a - b) = 0``."""
    diff = [x - y for x, y in zip(a, b)]
    rows = beta.data if hasattr(beta, "data") else beta
    return all(sum(c * x for c, x in zip(row, diff)) == 0 for row in rows)


def minimal_generators(gens: Sequence[Polynomial], ring: Ring | None = None) -> list[Polynomial]:
    """Drop generators lying in the ideal of the others.

    Candidates are tried from the largest (total degree, leading monomial)
    down, so the result is deterministic.  For an ideal homogeneous in a
    positive grading the survivors form a minimal generating set.
    """
    ring = ring or gens[0].ring
    current = [g.monic() for g in gens if g]
    current = list(dict.fromkeys(current))
    order = sorted(current, key=lambda g: (g.total_degree(), g.terms[0][0]), reverse=True)
    for g in order:
        others = [h for h in current if h is not g]
        if not others:
            break
        if buchberger(others, ring).contains(g):
            current = others
    return sorted(current, key=lambda g: (g.total_degree(), g.terms[0][0]))
