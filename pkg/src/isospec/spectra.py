"""Spectra of finite groups, stored as the antichain of maximal element orders.

A spectrum (the set of element orders) is closed under divisors, so it is
determined by its divisibility-maximal elements ``mu``. All operations here
work on that antichain only; nothing ever materializes the full set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable


def _maximal(values: Iterable[int]) -> tuple[int, ...]:
    vals = sorted(set(values))
    keep = []
    for i, a in enumerate(vals):
        if not any(b % a == 0 for b in vals[i + 1 :]):
            keep.append(a)
    return tuple(keep)


@dataclass(frozen=True)
class Spectrum:
    mu: tuple[int, ...]

    def __post_init__(self):
        if not self.mu:
            raise ValueError("a spectrum needs at least one element order")
        if any(not isinstance(m, int) or m < 1 for m in self.mu):
            raise ValueError(f"element orders must be positive integers: {self.mu}")
        if _maximal(self.mu) != tuple(self.mu):
            raise ValueError(f"{self.mu} is not an ascending antichain; use from_orders")

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __iter__(self):
        return iter(self.mu)

    def __len__(self) -> int:
        return len(self.mu)

    def __mul__(self, other: "Spectrum") -> "Spectrum":
        return product(self, other)

    def __pow__(self, k: int) -> "Spectrum":
        return power(self, k)

    def to_json(self) -> dict:
        return {"mu": list(self.mu)}

    @classmethod
    def from_json(cls, data: dict) -> "Spectrum":
        return from_orders(data["mu"])


TRIVIAL = Spectrum((1,))


def from_orders(orders: Iterable[int]) -> Spectrum:
    """Spectrum generated by a set of element orders (keeps the maximal ones)."""
    orders = list(orders)
    if not orders:
        raise ValueError("from_orders needs a nonempty set of orders")
    if any(n < 1 for n in orders):
        raise ValueError("element orders must be positive")
    return Spectrum(_maximal(orders))


def contains(s: Spectrum, n: int) -> bool:
    return any(m % n == 0 for m in s.mu)


def product(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Spectrum of a direct product: maximal lcms of pairs."""
    return from_orders(a * b // math.gcd(a, b) for a in s1.mu for b in s2.mu)


def power(s: Spectrum, k: int) -> Spectrum:
    if k < 1:
        raise ValueError("power needs k >= 1")
    # past |mu| factors nothing new can appear
    k = min(k, len(s.mu))
    out = s
    for _ in range(k - 1):
        out = product(out, s)
    return out


def product_of(spectra: Iterable[Spectrum]) -> Spectrum:
    return reduce(product, spectra, TRIVIAL)


def equals(s1: Spectrum, s2: Spectrum) -> bool:
    return s1.mu == s2.mu


def repl_hypotheses(sG: Spectrum, sH: Spectrum, k: int) -> bool:
    """mu(H) inside mu(G) and fewer than k elements of mu(G) missing from mu(H).

    Under these hypotheses G^k and G^(k-1) x H have the same spectrum.
    """
    if k < 1:
        raise ValueError("k must be positive")
    g, h = set(sG.mu), set(sH.mu)
    return h <= g and len(g - h) < k


def diff(s1: Spectrum, s2: Spectrum) -> dict:
    a, b = set(s1.mu), set(s2.mu)
    return {"only_left": sorted(a - b), "only_right": sorted(b - a)}
