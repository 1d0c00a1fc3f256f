"""Finite fields GF(p^e).

Elements are the integers ``0..q-1``; the base-``p`` digits of an element are
the coefficients of its polynomial representative, lowest degree first. For
``e >= 2`` the modulus is the first monic irreducible polynomial of degree
``e`` in lexicographic order of ``(c_{e-1}, ..., c_0)``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e``, or ``None``."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# polynomials over GF(p) as coefficient lists, lowest degree first

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _polymod(m, divisor, p):
                return False
    return True


def first_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Coefficients (lowest first, monic) of the first irreducible of degree ``e``."""
    for high_first in product(range(p), repeat=e):
        m = list(reversed(high_first)) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class GaloisField:
    """Arithmetic context for GF(q); immutable after construction."""

    def __init__(self, q: int):
        pe = prime_power(q)
        if pe is None:
            raise ValueError(f"q = {q} is not a prime power")
        self.q = q
        self.p, self.e = pe
        self.modulus = first_irreducible(self.p, self.e) if self.e > 1 else (0, 1)
        self._mul_table = None
        if q <= 256:
            self._mul_table = [[self._mul(a, b) for b in range(q)] for a in range(q)]

    def __repr__(self):
        return f"GaloisField({self.q})"

    @property
    def elements(self) -> range:
        return range(self.q)

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + d
        return v

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self.from_digits(-x % self.p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _polymod(prod, list(self.modulus), self.p)
        return self.from_digits(r + [0] * (self.e - len(r)))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul(a, b)

    def pow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    @cached_property
    def modulus_str(self) -> str:
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def field_make(q: int) -> GaloisField:
    return GaloisField(q)
