"""GF(3^alpha) in a polynomial basis, with table-driven arithmetic.

An element is an int in [0, q): its base-3 digits are the coefficients of
the representing polynomial, lowest degree first. Addition and
multiplication go through q*q lookup tables built once per field.
"""

from __future__ import annotations

import math
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from .. import numtheory as nt

P = 3


# -- polynomials over GF(3), coefficient lists low degree first ------------


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f: Sequence[int], g: Sequence[int]) -> list[int]:
    f = _trim(list(f))
    g = _trim(list(g))
    inv_lead = pow(g[-1], P - 2, P)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % P
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % P
        _trim(f)
    return f


def poly_mulmod(f: Sequence[int], g: Sequence[int], m: Sequence[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % P
    return poly_mod(out, m)


def poly_gcd(f: Sequence[int], g: Sequence[int]) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, poly_mod(f, g)
    return f


def _x_pow_p_power(d: int, m: Sequence[int]) -> list[int]:
    """x^(3^d) mod m by repeated cubing."""
    r = poly_mod([0, 1], m)
    for _ in range(d):
        r = poly_mulmod(poly_mulmod(r, r, m), r, m)
    return r


def is_irreducible(f: Sequence[int]) -> bool:
    """Rabin's test: x^(3^n) = x mod f, and gcd(x^(3^(n/r)) - x, f) = 1 for primes r | n."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True

    def minus_x(h):
        h = list(h) + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % P
        return _trim(h)

    if minus_x(_x_pow_p_power(n, f)):
        return False
    for r in nt.factorize(n):
        if len(poly_gcd(f, minus_x(_x_pow_p_power(n // r, f)))) > 1:
            return False
    return True


def smallest_irreducible(alpha: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree alpha (c0 compared first)."""
    for low in product(range(P), repeat=alpha):
        f = list(low) + [1]
        if is_irreducible(f):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FieldContext:
    """GF(3^alpha) with a fixed modulus."""

    def __init__(self, alpha: int, modulus: Sequence[int] | None = None):
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        self.alpha = alpha
        self.q = P**alpha
        self.modulus = tuple(modulus) if modulus is not None else smallest_irreducible(alpha)
        if len(self.modulus) != alpha + 1 or self.modulus[-1] != 1:
            raise ValueError(f"modulus {self.modulus} is not monic of degree {alpha}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus} is reducible")
        self._build_tables()

    # encoding
    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        coeffs = poly_mod(coeffs, self.modulus)
        return sum(c * P**i for i, c in enumerate(coeffs))

    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.alpha):
            a, c = divmod(a, P)
            out.append(c)
        return out

    def _build_tables(self) -> None:
        q = self.q
        digits = np.array([self.to_coeffs(a) for a in range(q)], dtype=np.int64).reshape(q, self.alpha)
        weights = P ** np.arange(self.alpha, dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % P
        self.add_t = (summed @ weights).reshape(-1).tolist()
        self.neg_t = (((-digits) % P) @ weights).tolist()

        # find a primitive element, then exp/log tables
        order = q - 1
        prime_factors = list(nt.factorize(order)) if order > 1 else []
        gen = next(
            g for g in range(1, q) if all(self._slow_pow(g, order // r) != 1 for r in prime_factors)
        )
        self.generator = gen
        self.exp_t = [0] * (2 * order)
        self.log_t = [0] * q
        e = 1
        for i in range(order):
            self.exp_t[i] = e
            self.exp_t[i + order] = e
            self.log_t[e] = i
            e = self._slow_mul(e, gen)
        self.mul_t = [0] * (q * q)
        for a in range(1, q):
            la = self.log_t[a]
            row = a * q
            for b in range(1, q):
                self.mul_t[row + b] = self.exp_t[la + self.log_t[b]]
        self.inv_t = [0] + [self.exp_t[(order - self.log_t[a]) % order] for a in range(1, q)]

    def _slow_mul(self, a: int, b: int) -> int:
        return self.from_coeffs(poly_mulmod(self.to_coeffs(a), self.to_coeffs(b), self.modulus))

    def _slow_pow(self, a: int, e: int) -> int:
        r, base = 1, a
        while e:
            if e & 1:
                r = self._slow_mul(r, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return r

    # arithmetic
    def add(self, a: int, b: int) -> int:
        return self.add_t[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self.add_t[a * self.q + self.neg_t[b]]

    def neg(self, a: int) -> int:
        return self.neg_t[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_t[a * self.q + b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_t[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        order = self.q - 1
        return self.exp_t[(self.log_t[a] * e) % order]

    def frob(self, a: int) -> int:
        """The Frobenius map a -> a^3."""
        return self.pow(a, P)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not a unit")
        order = self.q - 1
        return order // math.gcd(order, self.log_t[a])

    def is_square(self, a: int) -> bool:
        return a == 0 or self.log_t[a] % 2 == 0

    def sqrt(self, a: int) -> int | None:
        if a == 0:
            return 0
        if self.log_t[a] % 2:
            return None
        return self.exp_t[self.log_t[a] // 2]

    @property
    def one(self) -> int:
        return 1

    @property
    def minus_one(self) -> int:
        return self.neg_t[1]

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % P

    @cached_property
    def add_np(self) -> np.ndarray:
        return np.array(self.add_t, dtype=np.int32).reshape(self.q, self.q)

    @cached_property
    def mul_np(self) -> np.ndarray:
        return np.array(self.mul_t, dtype=np.int32).reshape(self.q, self.q)

    def to_json(self) -> dict:
        return {"characteristic": P, "alpha": self.alpha, "q": self.q, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldContext":
        return cls(data["alpha"], data["modulus"])

    def __repr__(self) -> str:
        return f"FieldContext(alpha={self.alpha}, modulus={self.modulus})"


_FIELDS: dict[int, FieldContext] = {}


def gf_make(alpha: int) -> FieldContext:
    """The deterministic field GF(3^alpha); cached per alpha."""
    ctx = _FIELDS.get(alpha)
    if ctx is None:
        ctx = _FIELDS.setdefault(alpha, FieldContext(alpha))
    return ctx


def embedding(small: FieldContext, big: FieldContext) -> list[int]:
    """A field embedding small -> big as a lookup list (requires small.alpha | big.alpha)."""
    if big.alpha % small.alpha:
        raise ValueError("no embedding: degrees do not divide")
    # a root of small's modulus inside big
    m = small.modulus
    for beta in range(big.q):
        acc = 0
        for c in reversed(m):
            acc = big.add(big.mul(acc, beta), big.from_int(c))
        if acc == 0:
            break
    else:
        raise AssertionError("modulus has no root in the extension")
    powers = [1]
    for _ in range(small.alpha - 1):
        powers.append(big.mul(powers[-1], beta))
    out = []
    for a in range(small.q):
        acc = 0
        for c, pw in zip(small.to_coeffs(a), powers):
            acc = big.add(acc, big.mul(big.from_int(c), pw))
        out.append(acc)
    return out
