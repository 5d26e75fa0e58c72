"""Closed-form data for the group families the toolkit knows about.

Families: ``L2`` (PSL_2(q)), ``Ree`` (the small Ree group 2G2(q), q = 3^alpha
with alpha odd and at least 3), ``J1``, ``Alt5`` and ``Dihedral`` (D_2n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import numtheory as nt
from .spectra import Spectrum, from_orders

FAMILIES = ("L2", "Ree", "J1", "Alt5", "Dihedral")

J1_ORDER = 175560
J1_MU = (6, 7, 10, 11, 15, 19)


class InvalidGroupSpec(ValueError):
    pass


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    f = nt.factorize(q)
    if len(f) != 1:
        return None
    ((p, e),) = f.items()
    return p, e


@dataclass(frozen=True)
class GroupSpec:
    family: str
    q: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidGroupSpec(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "L2":
            if self.q is None or self.q <= 3 or _prime_power(self.q) is None:
                raise InvalidGroupSpec(f"L2 needs a prime power q > 3, got {self.q}")
        elif self.family == "Ree":
            if self.q is None:
                raise InvalidGroupSpec("Ree needs q")
            pp = _prime_power(self.q)
            if pp is None or pp[0] != 3:
                raise InvalidGroupSpec(f"Ree needs q a power of 3, got {self.q}")
            if pp[1] % 2 == 0:
                raise InvalidGroupSpec(f"Ree needs an odd exponent, got q = 3^{pp[1]}")
            if pp[1] < 3:
                raise InvalidGroupSpec("Ree(3) is not simple; need q >= 27")
        elif self.family == "Dihedral":
            if self.n is None or self.n < 3:
                raise InvalidGroupSpec(f"Dihedral needs n >= 3, got {self.n}")

    @property
    def p(self) -> int:
        """Defining characteristic (L2 and Ree)."""
        if self.q is None:
            raise InvalidGroupSpec(f"{self.family} has no characteristic")
        return _prime_power(self.q)[0]

    @property
    def alpha(self) -> int:
        if self.family != "Ree":
            raise InvalidGroupSpec("alpha is only defined for Ree")
        return _prime_power(self.q)[1]

    @property
    def name(self) -> str:
        if self.family == "L2":
            return f"L2({self.q})"
        if self.family == "Ree":
            return f"2G2({self.q})"
        if self.family == "Dihedral":
            return f"D{2 * self.n}"
        return self.family

    def to_json(self) -> dict:
        out = {"family": self.family}
        if self.q is not None:
            out["q"] = self.q
        if self.n is not None:
            out["n"] = self.n
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        extra = set(data) - {"family", "q", "n"}
        if "family" not in data or extra:
            raise InvalidGroupSpec(f"bad group spec {data!r}")
        return cls(data["family"], data.get("q"), data.get("n"))


def L2(q: int) -> GroupSpec:
    return GroupSpec("L2", q=q)


def Ree(q: int) -> GroupSpec:
    return GroupSpec("Ree", q=q)


def Dihedral(n: int) -> GroupSpec:
    return GroupSpec("Dihedral", n=n)


J1 = GroupSpec("J1")
ALT5 = GroupSpec("Alt5")


def ree_sqrt3q(q: int) -> int:
    """sqrt(3q) = 3^((alpha+1)/2), exactly."""
    s = math.isqrt(3 * q)
    if s * s != 3 * q:
        raise InvalidGroupSpec(f"3q is not a square for q = {q}")
    return s


def ree_parts(q: int) -> dict[str, int]:
    """The cyclic-torus orders q - 1, q + 1, q -/+ sqrt(3q) + 1."""
    s = ree_sqrt3q(q)
    return {"q-1": q - 1, "q+1": q + 1, "q-s+1": q - s + 1, "q+s+1": q + s + 1}


def mu(g: GroupSpec) -> Spectrum:
    if g.family == "L2":
        q, p = g.q, g.p
        d = math.gcd(q - 1, 2)
        return from_orders([p, (q - 1) // d, (q + 1) // d])
    if g.family == "Ree":
        q = g.q
        s = ree_sqrt3q(q)
        return from_orders([6, 9, q - 1, (q + 1) // 2, q - s + 1, q + s + 1])
    if g.family == "J1":
        return from_orders(J1_MU)
    if g.family == "Alt5":
        return from_orders([2, 3, 5])
    return from_orders([2, g.n])


def order(g: GroupSpec) -> int:
    if g.family == "L2":
        q = g.q
        return q * (q * q - 1) // math.gcd(2, q - 1)
    if g.family == "Ree":
        q = g.q
        return q**3 * (q - 1) * (q**3 + 1)
    if g.family == "J1":
        return J1_ORDER
    if g.family == "Alt5":
        return 60
    return 2 * g.n


def out_order(g: GroupSpec) -> int:
    if g.family != "Ree":
        raise InvalidGroupSpec("out_order is only provided for Ree")
    return g.alpha


def pi(g: GroupSpec, effort: int = nt.DEFAULT_EFFORT) -> set[int]:
    """Prime divisors of |g|."""
    if g.family == "Ree":
        # q^3+1 = (q+1)(q-s+1)(q+s+1); factor the small pieces
        return {3} | nt.prime_support(ree_parts(g.q).values(), effort)
    if g.family == "L2":
        q = g.q
        return {g.p} | nt.prime_support([q - 1, q + 1], effort)
    return nt.prime_divisors(order(g), effort)


def divides_ree_order(r: int, p: int) -> bool:
    """Does the prime r divide |2G2(3^p)|? Decided by modular arithmetic only."""
    if r == 3:
        return True
    return pow(3, p, r) == 1 % r or pow(3, 3 * p, r) == r - 1


def has_abelian_sylow2(g: GroupSpec) -> bool:
    """Abelian Sylow 2-subgroup test for the catalog families.

    For L2 this is q = 3, 5 mod 8 or q even.
    """
    if g.family == "L2":
        return g.q % 2 == 0 or g.q % 8 in (3, 5)
    if g.family in ("Ree", "J1", "Alt5"):
        return True
    # Sylow 2 of D_2n is C2, C2 x C2 or dihedral of order >= 8
    return g.n % 4 != 0


def _self_check() -> None:
    if J1_ORDER != 2**3 * 3 * 5 * 7 * 11 * 19:
        raise RuntimeError("J1 order constant is corrupt")
    mu_primes = set()
    for m in J1_MU:
        mu_primes |= set(nt.factorize(m))
    if mu_primes != set(nt.factorize(J1_ORDER)):
        raise RuntimeError("J1 element orders disagree with the group order")


_self_check()
