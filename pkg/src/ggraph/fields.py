"""Small finite fields GF(p^k), q <= 128.

Elements are encoded as integers in ``[0, q)``: the base-``p`` digits of the
integer are the coefficients of the residue polynomial, lowest degree first.
Extension fields reduce modulo a fixed Conway polynomial, so ``x`` (encoded as
``p``) is a primitive element and the encoding is canonical.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import InvalidParameter, NotAPrimePower
from .numtheory import is_prime, prime_power_parts

# Conway polynomials, coefficients lowest degree first (monic, leading 1 included).
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
}

MAX_FIELD_ORDER = 128


class GaloisField:
    """Arithmetic in GF(q) via addition tables and exp/log tables."""

    def __init__(self, q: int):
        parts = prime_power_parts(q)
        if parts is None:
            raise NotAPrimePower(f"{q} is not a prime power")
        if q > MAX_FIELD_ORDER:
            raise InvalidParameter(f"GF({q}) exceeds the supported field order {MAX_FIELD_ORDER}")
        self.q = q
        self.p, self.k = parts
        if self.k == 1:
            self.modulus = None
            self.primitive = _primitive_root(self.p)
        else:
            self.modulus = CONWAY_POLYNOMIALS[(self.p, self.k)]
            self.primitive = self.p  # the residue of x
        self._add = [[self._poly_add(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._poly_neg(a) for a in range(q)]
        self._exp = [1] * (q - 1)
        for i in range(1, q - 1):
            self._exp[i] = self._slow_mul(self._exp[i - 1], self.primitive)
        if self.q > 2 and self._slow_mul(self._exp[-1], self.primitive) != 1:
            raise AssertionError(f"generator of GF({q}) has wrong multiplicative order")
        self._log = {v: i for i, v in enumerate(self._exp)}
        if len(self._log) != q - 1:
            raise AssertionError(f"element {self.primitive} is not primitive in GF({q})")

    def __repr__(self):
        return f"GF({self.q})"

    def coefficients(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.k))

    def from_coefficients(self, coeffs) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _poly_add(self, a: int, b: int) -> int:
        ca, cb = self.coefficients(a), self.coefficients(b)
        return self.from_coefficients(x + y for x, y in zip(ca, cb))

    def _poly_neg(self, a: int) -> int:
        return self.from_coefficients(-c for c in self.coefficients(a))

    def _slow_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        ca, cb = self.coefficients(a), self.coefficients(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        mod = self.modulus
        for deg in range(len(prod) - 1, self.k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(self.k + 1):
                    prod[deg - self.k + i] = (prod[deg - self.k + i] - c * mod[i]) % self.p
        return self.from_coefficients(prod[: self.k])

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp[self._log[a] * e % (self.q - 1)]

    def power_of_primitive(self, e: int) -> int:
        return self._exp[e % (self.q - 1)]

    def label(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        if a == 0:
            return "0"
        return f"w^{self._log[a]}" if a != 1 else "1"


def _primitive_root(p: int) -> int:
    if not is_prime(p):
        raise NotAPrimePower(p)
    if p == 2:
        return 1
    for g in range(2, p):
        x, seen = 1, set()
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def galois_field(q: int) -> GaloisField:
    return GaloisField(q)
