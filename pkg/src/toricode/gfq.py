"""Table-driven arithmetic in GF(q), q = p^k <= 2^16.

Elements are plain ints in ``range(q)``.  An element encodes the polynomial
``a_0 + a_1 x + ... + a_{k-1} x^{k-1}`` over GF(p) as the base-p number
``a_0 + a_1 p + ...``; for prime fields this is just the residue.  Zero is
handle 0 and is never entered in the log tables.

Multiplication goes through exp/log tables, addition in extension fields
through a Zech logarithm table ``zech[n] = log(1 + eta^n)``.
"""
from __future__ import annotations

from itertools import product

from .errors import DivisionByZero, DlogOfZero, NotPrimePower, TooLarge

MAX_Q = 2 ** 16


def factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return p, k


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a, b, modulus, p):
    """Multiply coefficient lists (low degree first) modulo a monic modulus."""
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * modulus[j]) % p
    return (prod + [0] * k)[:k]


def _encode(coeffs, p):
    return sum(c * p ** i for i, c in enumerate(coeffs))


def _decode(x, p, k):
    out = []
    for _ in range(k):
        x, c = divmod(x, p)
        out.append(c)
    return out


def _order_is_full(gen_pow, q):
    # gen_pow(e) computes gen^e; full order iff gen^((q-1)/l) != 1 for all primes l | q-1.
    return all(gen_pow((q - 1) // l) != 1 for l in _prime_factors(q - 1))


class Field:
    """GF(q) with a fixed multiplicative generator ``eta``.

    For k > 1 the modulus is the lexicographically smallest monic primitive
    polynomial of degree k, coefficients compared from ``x^{k-1}`` down to
    the constant term, and ``eta`` is the class of ``x``.  For prime fields
    ``eta`` is the smallest primitive root.
    """

    def __init__(self, q: int):
        if q > MAX_Q:
            raise TooLarge(f"q = {q} exceeds the table limit {MAX_Q}")
        self.q = q
        self.p, self.k = factor_prime_power(q)
        p, k = self.p, self.k
        if k == 1:
            self.modulus = (0, 1)
            self.eta = next(g for g in range(1, q)
                            if q == 2 or _order_is_full(lambda e: pow(g, e, q), q))
            step = lambda x: x * self.eta % q
        else:
            self.modulus = self._primitive_modulus()
            self.eta = p  # the class of x
            step = lambda x: _encode(_polymulmod(_decode(x, p, k), [0, 1], self.modulus, p), p)

        self.exp_table = [0] * q
        self.log_table = [-1] * q
        x = 1
        for i in range(q - 1):
            self.exp_table[i] = x
            self.log_table[x] = i
            x = step(x)
        self.exp_table[q - 1] = 1

        # zech[n] = log(1 + eta^n), -1 when 1 + eta^n = 0
        self.zech = [-1] * (q - 1)
        for n in range(q - 1):
            s = self._add_digits(1, self.exp_table[n])
            self.zech[n] = self.log_table[s] if s else -1

    def _primitive_modulus(self):
        p, k, q = self.p, self.k, self.q
        # iterate (c_{k-1}, ..., c_0) lexicographically
        for high_first in product(range(p), repeat=k):
            low = list(reversed(high_first))
            if low[0] == 0:
                continue
            modulus = tuple(low) + (1,)

            def xpow(e):
                result, base = [1] + [0] * (k - 1), [0, 1] + [0] * (k - 2)
                while e:
                    if e & 1:
                        result = _polymulmod(result, base, modulus, p)
                    base = _polymulmod(base, base, modulus, p)
                    e >>= 1
                return _encode(result, p)

            if xpow(q - 1) == 1 and _order_is_full(xpow, q):
                return modulus
        raise AssertionError("no primitive polynomial found")  # pragma: no cover

    def _add_digits(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p, out, scale = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    # -- arithmetic ----------------------------------------------------

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.q
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log_table[a]
        z = self.zech[(self.log_table[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self.exp_table[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        if self.k == 1:
            return self.q - a
        return self.exp_table[(self.log_table[a] + (self.q - 1) // 2) % (self.q - 1)]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp_table[self.log_table[a] * e % (self.q - 1)]

    def dlog(self, a: int) -> int:
        if a == 0:
            raise DlogOfZero("discrete log of zero")
        return self.log_table[a]

    def exp(self, h: int) -> int:
        """``eta ** h`` for any integer h."""
        return self.exp_table[h % (self.q - 1)]

    def elements(self):
        return range(self.q)

    def to_poly(self, a: int) -> list[int]:
        """Coefficients (low degree first) of the polynomial encoded by ``a``."""
        return _decode(a, self.p, self.k)

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        if a == 0:
            return "0"
        return f"g^{self.log_table[a]}"

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"Field(q={self.q})"


def field_new(q: int) -> Field:
    return Field(q)
