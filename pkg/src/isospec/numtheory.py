"""Arbitrary-precision number theory used throughout the toolkit.

Everything here works on plain Python ints. Factoring is trial division by
the primes below ``TRIAL_BOUND`` followed by Brent's variant of Pollard rho
with a fixed seed and an iteration budget; running out of budget raises
:class:`FactoringEffortExceeded` instead of returning a partial answer.

Primality uses a strong-pseudoprime test on the first thirteen prime bases,
which is deterministic for n < 3,317,044,064,679,887,385,961,981 (> 3e24).
Above that bound the same test is only probabilistic.
"""

from __future__ import annotations

import math
import random
from functools import reduce
from typing import Iterable, Mapping

TRIAL_BOUND = 10**6
DEFAULT_EFFORT = 2_000_000
DEFAULT_SEED = 20240601

MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


class FactoringEffortExceeded(ArithmeticError):
    """Raised when rho runs out of iterations on a composite cofactor."""

    def __init__(self, n: int, effort: int):
        super().__init__(f"could not split {n} within {effort} rho iterations")
        self.n = n
        self.effort = effort


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES: list[int] | None = None


def small_primes() -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = _sieve(TRIAL_BOUND)
    return _SMALL_PRIMES


_BLOCKS: list[tuple[list[int], int]] | None = None


def _prime_blocks() -> list[tuple[list[int], int]]:
    """The trial primes in runs of 256, each with the product of its run."""
    global _BLOCKS
    if _BLOCKS is None:
        ps = small_primes()
        runs = [ps[i : i + 256] for i in range(0, len(ps), 256)]
        _BLOCKS = [(run, math.prod(run)) for run in runs]
    return _BLOCKS


def mod_pow(a: int, e: int, m: int) -> int:
    """a**e mod m, result in [0, m)."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(a, e, m)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Factorization(dict):
    """Map prime -> exponent. ``value`` is the factored integer."""

    def __init__(self, entries: Mapping[int, int] | None = None):
        super().__init__()
        for p, e in (entries or {}).items():
            if e:
                self[p] = e

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.items():
            out *= p**e
        return out

    @property
    def primes(self) -> list[int]:
        return sorted(self)

    def check(self) -> None:
        for p, e in self.items():
            if not is_prime(p) or e <= 0:
                raise ValueError(f"bad factorization entry {p}^{e}")

    def __repr__(self) -> str:
        return "Factorization({%s})" % ", ".join(f"{p}: {self[p]}" for p in sorted(self))


def _rho_brent(n: int, rng: random.Random, effort: int) -> int:
    """Return a nontrivial factor of the odd composite n, or raise."""
    spent = 0
    while spent < effort:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
            if spent >= effort and g == 1:
                raise FactoringEffortExceeded(n, effort)
        if g == n:
            # backtrack one step at a time
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g
    raise FactoringEffortExceeded(n, effort)


_CACHE: dict[tuple[int, int, int], Factorization] = {}


def factorize(n: int, effort: int = DEFAULT_EFFORT, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization of n >= 1.

    Raises FactoringEffortExceeded if some composite cofactor resists rho
    for ``effort`` iterations.
    """
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    key = (n, effort, seed)
    hit = _CACHE.get(key)
    if hit is not None:
        return Factorization(hit)

    out: dict[int, int] = {}
    m = n
    # one gcd per block of primes; only blocks sharing a factor are walked
    for run, prod in _prime_blocks():
        if run[0] * run[0] > m:
            break
        g = math.gcd(m, prod)
        if g == 1:
            continue
        for p in run:
            if g % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                out[p] = e
    if 1 < m < TRIAL_BOUND**2:
        # no factor below the bound, so what is left is prime
        out[m] = out.get(m, 0) + 1
        m = 1
    if m > 1:
        rng = random.Random(seed ^ (n & 0xFFFFFFFF))
        stack = [m]
        while stack:
            c = stack.pop()
            if c == 1:
                continue
            if is_prime(c):
                out[c] = out.get(c, 0) + 1
                continue
            r = math.isqrt(c)
            if r * r == c:
                stack += [r, r]
                continue
            d = _rho_brent(c, rng, effort)
            stack += [d, c // d]
    result = Factorization(out)
    _CACHE.setdefault(key, result)
    return Factorization(result)


def prime_divisors(n: int, effort: int = DEFAULT_EFFORT) -> set[int]:
    """The set pi(n)."""
    return set(factorize(n, effort))


def r_part(a: int, r: int) -> int:
    """Largest power of the prime r dividing a."""
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if a < 1:
        raise ValueError("r_part needs a positive integer")
    out = 1
    while a % r == 0:
        a //= r
        out *= r
    return out


def r_prime_part(a: int, r: int) -> int:
    """a with its r-part removed."""
    return a // r_part(a, r)


def valuation(a: int, r: int) -> int:
    e = 0
    while a % r == 0:
        a //= r
        e += 1
    return e


def gcd_pow_minus(a: int, i: int, j: int) -> int:
    """gcd(a^i - 1, a^j - 1) by the closed form a^gcd(i, j) - 1."""
    if abs(a) <= 1 or i < 1 or j < 1:
        raise ValueError("need |a| > 1 and i, j >= 1")
    return abs(a ** math.gcd(i, j) - 1)


def gcd_pow_mixed(a: int, i: int, j: int) -> int:
    """gcd(a^i - 1, a^j + 1) by the closed form.

    (2, a - 1) when the 2-part of i is at most that of j, otherwise
    a^gcd(i, j) + 1.
    """
    if abs(a) <= 1 or i < 1 or j < 1:
        raise ValueError("need |a| > 1 and i, j >= 1")
    if r_part(i, 2) <= r_part(j, 2):
        return math.gcd(2, a - 1)
    return abs(a ** math.gcd(i, j) + 1)


def multiplicative_order(a: int, r: int) -> int:
    """Order of a modulo the prime r (a coprime to r)."""
    if a % r == 0:
        raise ValueError(f"{a} is not a unit mod {r}")
    t = r - 1
    for p, e in factorize(r - 1).items():
        for _ in range(e):
            if pow(a, t // p, r) == 1:
                t //= p
            else:
                break
    return t


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def primitive_prime_divisors(a: int, i: int, effort: int = DEFAULT_EFFORT) -> set[int]:
    """Primes dividing a^i - 1 but no a^j - 1 with 1 <= j < i.

    Every non-primitive prime divides a^(i/s) - 1 for some prime s | i, so
    those parts are divided out first and only the (small) remainder is
    factored.
    """
    if a <= 1 or i <= 1:
        raise ValueError("need a > 1 and i > 1")
    n = a**i - 1
    for s in factorize(i):
        g = a ** (i // s) - 1
        while True:
            d = math.gcd(n, g)
            if d == 1:
                break
            n //= d
    return set(factorize(n, effort))


def coprime_base(values: Iterable[int]) -> list[int]:
    """A gcd-free basis: pairwise coprime integers > 1 such that every input
    is a product of powers of them.
    """
    base: list[int] = []
    for v in values:
        work = [v]
        while work:
            x = work.pop()
            if x <= 1:
                continue
            for idx, b in enumerate(base):
                g = math.gcd(x, b)
                if g > 1:
                    del base[idx]
                    work += [g, b // g, x // g]
                    break
            else:
                base.append(x)
    return sorted(base)


def prime_support(values: Iterable[int], effort: int = DEFAULT_EFFORT) -> set[int]:
    """Union of the prime divisors of all values, factoring only coprime-base pieces."""
    out: set[int] = set()
    for b in coprime_base(values):
        out |= set(factorize(b, effort))
    return out


def lcm(*values: int) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)
