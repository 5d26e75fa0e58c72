"""Prime graphs GK(G) and their independent sets (cocliques)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import catalog
from . import numtheory as nt
from .spectra import Spectrum, contains

MAX_VERTICES = 64


class CocliqueError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        vs = set(self.vertices)
        for p, r in self.edges:
            if p == r:
                raise ValueError(f"self-loop at {p}")
            if p > r:
                raise ValueError("edges are stored as (smaller, larger)")
            if p not in vs or r not in vs:
                raise ValueError(f"edge {p}-{r} leaves the vertex set")

    def adjacent(self, p: int, r: int) -> bool:
        return (min(p, r), max(p, r)) in self.edges

    def is_coclique(self, verts) -> bool:
        verts = list(verts)
        if any(v not in self.vertices for v in verts):
            return False
        return not any(self.adjacent(a, b) for a, b in combinations(verts, 2))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}


def build(s: Spectrum, effort: int = nt.DEFAULT_EFFORT) -> PrimeGraph:
    """GK of a spectrum: primes of mu, with p ~ r iff p*r is an element order."""
    verts = tuple(sorted(nt.prime_support(s.mu, effort)))
    edges = frozenset((p, r) for p, r in combinations(verts, 2) if contains(s, p * r))
    return PrimeGraph(verts, edges)


def max_coclique(g: PrimeGraph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set by branch and bound on bitmasks."""
    n = len(g.vertices)
    if n > MAX_VERTICES:
        raise CocliqueError(f"graph has {n} vertices; exact search is capped at {MAX_VERTICES}")
    if n == 0:
        return 0, ()
    index = {v: i for i, v in enumerate(g.vertices)}
    # nonneighbours (excluding self) as bitmasks
    full = (1 << n) - 1
    adj = [0] * n
    for p, r in g.edges:
        adj[index[p]] |= 1 << index[r]
        adj[index[r]] |= 1 << index[p]
    free = [full & ~adj[i] & ~(1 << i) for i in range(n)]

    best = [0, 0]

    def search(chosen: int, size: int, cand: int) -> None:
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + bin(cand).count("1") <= best[0]:
            return
        # branch on the lowest-index candidate: take it, or drop it
        v = (cand & -cand).bit_length() - 1
        search(chosen | (1 << v), size + 1, cand & free[v])
        search(chosen, size, cand & ~(1 << v))

    search(0, 0, full)
    witness = tuple(g.vertices[i] for i in range(n) if best[1] >> i & 1)
    return best[0], witness


def _smallest_odd_prime(n: int, exclude: set[int], effort: int) -> int | None:
    cands = [r for r in nt.factorize(n, effort) if r != 2 and r not in exclude]
    return min(cands) if cands else None


def coclique_sigma(q: int, effort: int = nt.DEFAULT_EFFORT) -> tuple[int, int, int, int]:
    """The four-prime coclique of GK(2G2(q)), one prime from each cyclic torus.

    r1 | q-1, r2 | q+1 (odd), r3 | q-sqrt(3q)+1 and r4 | q+sqrt(3q)+1 (odd and
    not 7). Each is the smallest admissible prime.
    """
    g = catalog.Ree(q)
    parts = catalog.ree_parts(q)
    picks = []
    for key, excl in (("q-1", set()), ("q+1", set()), ("q-s+1", {7}), ("q+s+1", {7})):
        r = _smallest_odd_prime(parts[key], excl, effort)
        if r is None:
            raise CocliqueError(f"no admissible prime divides {key} = {parts[key]} for q = {q}")
        picks.append(r)
    sigma = tuple(picks)
    if len(set(sigma)) != 4:
        raise CocliqueError(f"sigma primes are not distinct: {sigma}")
    s = catalog.mu(g)
    for a, b in combinations(sigma, 2):
        if contains(s, a * b):
            raise CocliqueError(f"{a} and {b} are adjacent in GK({g.name})")
    return sigma
