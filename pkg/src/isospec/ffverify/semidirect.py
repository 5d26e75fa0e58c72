"""The twisted tensor module W = V (x) V^(3) of SL_2(q) and the group W x| M.

M = phi(L) x <-I_4>, with L = PSL_2(q) acting on W through phi(A) = A (x) A^(3).
Element orders of W x| M are read off coset by coset: the coset W g contains
an element of order 3|g| exactly when g has a unipotent Jordan block of size
(|g|)_3, and otherwise every element of W g has order |g|.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .. import numtheory as nt
from ..spectra import Spectrum, from_orders
from .field import FieldContext, gf_make
from .matrix import FqMatrix

EXHAUSTIVE_LIMIT = 10**8


class ConstructionError(RuntimeError):
    """The finite-field construction does not behave as claimed."""


class EnumerationTooLarge(RuntimeError):
    pass


# -- SL_2(q) ---------------------------------------------------------------


def sl2(ctx: FieldContext, a: int, b: int, c: int, d: int) -> FqMatrix:
    A = FqMatrix(ctx, 2, (a, b, c, d))
    if A.det() != 1:
        raise ValueError(f"det = {A.det()} != 1")
    return A


def iter_sl2(ctx: FieldContext, a_values=None) -> Iterator[tuple[int, int, int, int]]:
    """All (a, b, c, d) with ad - bc = 1, optionally restricted to given a."""
    F = ctx
    q = F.q
    for a in range(q) if a_values is None else a_values:
        if a:
            ia = F.inv(a)
            for b in range(q):
                for c in range(q):
                    yield a, b, c, F.mul(ia, F.add(1, F.mul(b, c)))
        else:
            for b in range(1, q):
                c = F.neg(F.inv(b))
                for d in range(q):
                    yield 0, b, c, d


def sl2_order(q: int) -> int:
    return q * (q * q - 1)


@dataclass(frozen=True)
class ClassRep:
    label: str
    matrix: FqMatrix  # 2x2 in SL_2(q)
    centralizer: int  # order of its centralizer in SL_2(q)


def sl2_class_reps(ctx: FieldContext) -> list[ClassRep]:
    """Conjugacy class representatives of SL_2(q), q odd.

    Central (+-I), four unipotent-type classes (+-[[1,1],[0,1]], +-[[1,v],[0,1]]
    with v a nonsquare), split semisimple diag(l^i, l^-i) for 1 <= i < (q-1)/2,
    and non-split semisimple as companion matrices of irreducible x^2 - t x + 1.
    """
    F = ctx
    q = F.q
    m1 = F.minus_one
    nonsq = next(v for v in range(1, q) if not F.is_square(v))
    reps = [
        ClassRep("I", sl2(F, 1, 0, 0, 1), sl2_order(q)),
        ClassRep("-I", sl2(F, m1, 0, 0, m1), sl2_order(q)),
    ]
    for sign, s in (("", 1), ("-", m1)):
        reps.append(ClassRep(f"{sign}u1", sl2(F, s, s, 0, s), 2 * q))
        reps.append(ClassRep(f"{sign}u2", sl2(F, s, F.mul(s, nonsq), 0, s), 2 * q))
    lam = F.generator
    for i in range(1, (q - 1) // 2):
        li = F.pow(lam, i)
        reps.append(ClassRep(f"split({i})", sl2(F, li, 0, 0, F.inv(li)), q - 1))
    four = F.from_int(4)
    for t in range(q):
        disc = F.sub(F.mul(t, t), four)
        if disc and not F.is_square(disc):
            # companion matrix of x^2 - t x + 1
            reps.append(ClassRep(f"nonsplit(t={t})", sl2(F, 0, m1, 1, t), q + 1))
    return reps


def check_class_equation(ctx: FieldContext, reps: list[ClassRep]) -> bool:
    return sum(sl2_order(ctx.q) // r.centralizer for r in reps) == sl2_order(ctx.q)


def sl2_conjugacy_orbits(ctx: FieldContext, reps: list[ClassRep]) -> list[set]:
    """Conjugation orbits of the given representatives, by brute force over SL_2(q).

    Used to validate the analytic class list for small q.
    """
    F = ctx
    q = F.q
    mul, add, neg = F.mul_t, F.add_t, F.neg_t

    def m2(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            add[mul[a * q + e] * q + mul[b * q + g]],
            add[mul[a * q + f] * q + mul[b * q + h]],
            add[mul[c * q + e] * q + mul[d * q + g]],
            add[mul[c * q + f] * q + mul[d * q + h]],
        )

    group = list(iter_sl2(F))
    orbits = []
    for r in reps:
        x = r.matrix.entries
        orbit = set()
        for a, b, c, d in group:
            inv = (d, neg[b], neg[c], a)
            orbit.add(m2(m2(inv, x), (a, b, c, d)))
        orbits.append(orbit)
    return orbits


# -- the representation phi ------------------------------------------------


def phi(A: FqMatrix) -> FqMatrix:
    """A (x) A^(3): SL_2(q) acting on the twisted tensor square."""
    if A.n != 2:
        raise ValueError("phi takes a 2x2 matrix")
    if A.det() != 1:
        raise ValueError("phi is defined on SL_2(q) only")
    return A.kron(A.frobenius())


def element_order(A: FqMatrix, bound: int | None = None) -> int:
    """Multiplicative order of A, found by descending from an exponent bound
    one prime at a time.

    The default bound lcm(6, q-1, q+1) is the exponent of SL_2(q) x <-1>,
    so it covers every element of M. A must satisfy A^bound = I.
    """
    if A.is_identity():
        return 1
    q = A.ctx.q
    if bound is None:
        bound = nt.lcm(6, q - 1, q + 1)
    order = 1
    for r, e in nt.factorize(bound).items():
        # the r-part of |A| is the order of A^(bound / r^e), a power of r
        h = A ** (bound // r**e)
        for _ in range(e):
            if h.is_identity():
                break
            h = h**r
            order *= r
        if not h.is_identity():
            raise ValueError(f"A^{bound} != I; bound does not cover this matrix")
    return order


def unipotent_block_sizes(A: FqMatrix) -> list[int]:
    """Sizes of the Jordan blocks of A for eigenvalue 1, largest first.

    With r_j = rank((A - I)^j), the number of blocks of size >= j is
    r_{j-1} - r_j.
    """
    n = A.n
    N = A - FqMatrix.identity(A.ctx, n)
    ranks = [n]
    power = N
    while True:
        r = power.rank()
        if r == ranks[-1]:
            break
        ranks.append(r)
        power = power @ N
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    at_least.append(0)
    sizes = []
    for j in range(1, len(at_least)):
        exactly = at_least[j - 1] - at_least[j]
        sizes += [j] * exactly
    return sorted(sizes, reverse=True)


def _powers_upto(A: FqMatrix, k: int) -> list[FqMatrix]:
    out = [FqMatrix.identity(A.ctx, A.n)]
    for _ in range(k):
        out.append(out[-1] @ A)
    return out


def coset_has_order_pk(A: FqMatrix, k: int) -> bool:
    """Does the coset W*A contain an element of order 3k (k = |A|)?

    Decided by the Jordan criterion (a unipotent block of size (k)_3) and
    cross-checked against N = I + A + ... + A^(k-1) != 0.
    """
    pw = _powers_upto(A, k)
    if not pw[k].is_identity() or any(pw[k // r].is_identity() for r in nt.factorize(k)):
        raise ValueError(f"{k} is not the order of the matrix")
    blocks = unipotent_block_sizes(A)
    by_jordan = bool(blocks) and max(blocks) == nt.r_part(k, 3)
    N = pw[0]
    for P in pw[1:k]:
        N = N + P
    by_sum = not N.is_zero()
    if by_jordan != by_sum:
        raise ConstructionError(f"Jordan criterion {by_jordan} disagrees with N != 0 test {by_sum}")
    return by_jordan


# -- the group M -----------------------------------------------------------


class WitnessGroup:
    """M = phi(PSL_2(q)) x <-I_4> inside GL_4(q)."""

    def __init__(self, ctx: FieldContext):
        if ctx.alpha % 2 == 0 or ctx.alpha < 3:
            raise ValueError("need q = 3^alpha with alpha odd and >= 3")
        self.ctx = ctx
        self.q = ctx.q
        self.order = sl2_order(ctx.q)
        self.minus_identity = FqMatrix.scalar(ctx, 4, ctx.minus_one)
        self.sl2_reps = sl2_class_reps(ctx)
        if not check_class_equation(ctx, self.sl2_reps):
            raise ConstructionError("class equation of SL_2(q) fails for the representatives")
        # a scalar matrix lies in phi(L) iff some class representative maps to it
        for r in self.sl2_reps:
            if phi(r.matrix) == self.minus_identity:
                raise ConstructionError(f"-I_4 = phi({r.label}) lies in phi(L)")

    def class_reps(self) -> Iterator[tuple[str, FqMatrix]]:
        """+-phi of the SL_2(q) class representatives (classes of M, with repeats)."""
        for r in self.sl2_reps:
            image = phi(r.matrix)
            yield r.label, image
            yield f"-({r.label})", -image

    def elements(self, a_values=None) -> Iterator[FqMatrix]:
        """Every element of M once (optionally only those from SL_2 rows with given a)."""
        F = self.ctx
        neg = F.neg_t
        for ent in iter_sl2(F, a_values):
            # one of A, -A: the one whose entry tuple is smaller
            if ent > tuple(neg[x] for x in ent):
                continue
            image = phi(FqMatrix(F, 2, ent))
            yield image
            yield -image

    def verify_exhaustive(self) -> dict:
        """Enumerate M, confirming |M| = q(q^2-1) and -I_4 not in phi(L)."""
        seen = set()
        for g in self.elements():
            seen.add(g.entries)
        images = set(phi(FqMatrix(self.ctx, 2, e)).entries for e in iter_sl2(self.ctx))
        return {
            "order": len(seen),
            "expected": self.order,
            "phi_image_size": len(images),
            "minus_identity_in_image": self.minus_identity.entries in images,
        }


def build_M(ctx: FieldContext) -> WitnessGroup:
    return WitnessGroup(ctx)


def _coset_orders(g: FqMatrix) -> tuple[int, bool]:
    k = element_order(g)
    return k, coset_has_order_pk(g, k)


def semidirect_mu(ctx: FieldContext, mode: str = "class_reps", limit: int = EXHAUSTIVE_LIMIT) -> Spectrum:
    """Maximal element orders of W x| M.

    ``exhaustive`` visits every element of M; ``class_reps`` one element per
    conjugacy class (element orders and Jordan data are class functions).
    """
    M = build_M(ctx)
    if mode == "exhaustive":
        if M.order > limit:
            raise EnumerationTooLarge(f"|M| = {M.order} exceeds the enumeration limit {limit}")
        elements = M.elements()
    elif mode == "class_reps":
        elements = (g for _, g in M.class_reps())
    else:
        raise ValueError(f"unknown mode {mode!r}")
    orders = {3}
    for g in elements:
        k, extends = _coset_orders(g)
        orders.add(k)
        if extends:
            orders.add(3 * k)
    return from_orders(orders)


def m_mu(ctx: FieldContext) -> Spectrum:
    """Maximal element orders of M itself, over class representatives."""
    return from_orders(element_order(g) for _, g in build_M(ctx).class_reps())


# -- brute force over the coset --------------------------------------------


def _vecmat(t: np.ndarray, A: FqMatrix, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    n = A.n
    out = np.zeros_like(t)
    for j in range(n):
        acc = np.zeros(t.shape[0], dtype=t.dtype)
        for i in range(n):
            a = A.entries[i * n + j]
            if a:
                acc = add[acc, mul[t[:, i], a]]
        out[:, j] = acc
    return out


def all_vectors(ctx: FieldContext, n: int) -> np.ndarray:
    idx = np.arange(ctx.q**n, dtype=np.int64)
    cols = [(idx // ctx.q**i) % ctx.q for i in range(n)]
    return np.stack(cols, axis=1).astype(np.int32)


def brute_force_coset_orders(
    A: FqMatrix, sample_size: int | None = None, seed: int = nt.DEFAULT_SEED
) -> set[int]:
    """Orders of (w, A) in W x| <A>, found by multiplying out powers.

    Uses all q^n vectors when sample_size is None or at least q^n, otherwise
    a seeded random sample (always including w = 0). The product is
    (v, A)(w, B) = (vB + w, AB), so (w, A)^s = (w(I + A + ... + A^(s-1)), A^s).
    """
    F = A.ctx
    n = A.n
    total = F.q**n
    if sample_size is None or sample_size >= total:
        W = all_vectors(F, n)
    else:
        rng = np.random.default_rng(seed)
        W = rng.integers(0, F.q, size=(sample_size, n), dtype=np.int32)
        W[0] = 0
    add, mul = F.add_np, F.mul_np
    k = element_order(A)
    t = W.copy()
    P = A
    orders = np.zeros(W.shape[0], dtype=np.int64)
    for s in range(1, 3 * k + 1):
        if P.is_identity():
            done = (orders == 0) & ~t.any(axis=1)
            orders[done] = s
            if (orders > 0).all():
                break
        t = add[_vecmat(t, A, add, mul), W]
        P = P @ A
    if (orders == 0).any():
        raise ConstructionError("some coset element has order beyond 3|A|")
    return set(int(x) for x in np.unique(orders))


def field_for_q(q: int) -> FieldContext:
    alpha = round(math.log(q, 3))
    if 3**alpha != q:
        raise ValueError(f"{q} is not a power of 3")
    return gf_make(alpha)


def sample_element(ctx: FieldContext, rng: random.Random) -> FqMatrix:
    """A uniformly random element of SL_2(q)."""
    F = ctx
    q = F.q
    idx = rng.randrange(sl2_order(q))
    if idx < (q - 1) * q * q:
        a, rest = 1 + idx // (q * q), idx % (q * q)
        b, c = divmod(rest, q)
        d = F.mul(F.inv(a), F.add(1, F.mul(b, c)))
        return FqMatrix(F, 2, (a, b, c, d))
    b, d = divmod(idx - (q - 1) * q * q, q)
    b += 1
    return FqMatrix(F, 2, (0, b, F.neg(F.inv(b)), d))


def sampled_coset_check(
    ctx: FieldContext, claimed: Spectrum, samples: int = 10_000, seed: int = nt.DEFAULT_SEED
) -> dict:
    """Brute-force orders of random elements (w, g), g a class representative of M.

    Reports orders outside the divisor closure of ``claimed`` and any coset
    where the brute-force orders contradict coset_has_order_pk.
    """
    reps = list(build_M(ctx).class_reps())
    rng = random.Random(seed)
    counts: dict[int, int] = {}
    for _ in range(samples):
        i = rng.randrange(len(reps))
        counts[i] = counts.get(i, 0) + 1
    seen: set[int] = set()
    mismatches = []
    for i in sorted(counts):
        label, g = reps[i]
        k = element_order(g)
        found = brute_force_coset_orders(g, counts[i], seed=seed + i)
        seen |= found
        extends = coset_has_order_pk(g, k)
        # w = 0 always gives order k; a sampled 3k must be allowed by the criterion
        if not found <= {k, 3 * k} or (3 * k in found and not extends):
            mismatches.append({"rep": label, "order": k, "found": sorted(found), "criterion": extends})
    outside = sorted(n for n in seen if n not in claimed)
    return {
        "samples": samples,
        "reps_sampled": len(counts),
        "orders_seen": sorted(seen),
        "outside_closure": outside,
        "criterion_mismatches": mismatches,
    }
