"""The recognizable Ree prime sequence and the unrecognizability witnesses.

``sequence(k)`` produces p_1 = 5 < p_2 < ... where each p_i is the least prime
above p_{i-1} dividing none of |2G2(3^{p_j})|, j < i. Divisibility is decided
with modular exponentiation, so the huge group orders are never factored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from . import catalog
from . import numtheory as nt
from . import primegraph
from . import spectra
from .report import Check, run_check
from .spectra import Spectrum


@dataclass
class SequenceCertificate:
    terms: list[int]
    # one record per prime candidate rejected between consecutive terms
    skipped: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"terms": list(self.terms), "skipped": [dict(s) for s in self.skipped]}

    @classmethod
    def from_json(cls, data: dict) -> "SequenceCertificate":
        return cls(list(data["terms"]), [dict(s) for s in data.get("skipped", [])])

    def qs(self) -> list[int]:
        return [3**p for p in self.terms]


def ree_order_witness(r: int, p: int) -> str | None:
    """Why the prime r divides |2G2(3^p)|, or None if it does not."""
    if r == 3:
        return "r = 3"
    if pow(3, p, r) == 1 % r:
        return "divides q-1"
    if pow(3, 3 * p, r) == r - 1:
        return "divides q^3+1"
    return None


def sequence(k: int) -> SequenceCertificate:
    if k < 1:
        raise ValueError("sequence needs k >= 1")
    terms = [5]
    skipped: list[dict] = []
    cand = terms[-1]
    while len(terms) < k:
        cand += 2
        if not nt.is_prime(cand):
            continue
        for j, pj in enumerate(terms, start=1):
            reason = ree_order_witness(cand, pj)
            if reason:
                skipped.append({"candidate": cand, "j": j, "reason": reason})
                break
        else:
            terms.append(cand)
    return SequenceCertificate(terms, skipped)


def check_certificate(cert: SequenceCertificate) -> list[str]:
    """Re-derive every claim in a certificate; returns a list of problems."""
    problems = []
    t = cert.terms
    if not t or t[0] != 5:
        problems.append("first term must be 5")
    for a, b in zip(t, t[1:]):
        if b <= a:
            problems.append(f"terms not increasing at {a}, {b}")
    for i, p in enumerate(t):
        if not nt.is_prime(p):
            problems.append(f"{p} is not prime")
        for pj in t[:i]:
            if catalog.divides_ree_order(p, pj):
                problems.append(f"term {p} divides |2G2(3^{pj})|")
    seen = {s["candidate"] for s in cert.skipped}
    for s in cert.skipped:
        r, j = s["candidate"], s["j"]
        if not 1 <= j <= len(t) or ree_order_witness(r, t[j - 1]) != s["reason"]:
            problems.append(f"bad witness for skipped candidate {r}")
        if t[j - 1] >= r:
            problems.append(f"witness index {j} for {r} is not an earlier term")
    # minimality: every prime between terms must appear as skipped
    for a, b in zip(t, t[1:]):
        for r in range(a + 1, b):
            if nt.is_prime(r) and r not in seen:
                problems.append(f"prime {r} between {a} and {b} has no witness")
    return problems


def verify_prime_lemma(
    cert: SequenceCertificate, m_range=(), effort: int = nt.DEFAULT_EFFORT
) -> list[Check]:
    """Arithmetic facts about the sequence groups R_i = 2G2(3^{p_i})."""
    checks: list[Check] = []
    terms = cert.terms
    qs = cert.qs()

    # (a) common primes of the 3'-parts are exactly 2 and 7
    for (i, qi), (j, qj) in combinations(enumerate(qs, start=1), 2):

        def pair(qi=qi, qj=qj):
            g = math.gcd((qi - 1) * (qi**3 + 1), (qj - 1) * (qj**3 + 1))
            primes = sorted(nt.factorize(g, effort))
            return primes == [2, 7], {"gcd": g, "primes": primes}

        checks.append(run_check(f"a:common-primes({i},{j})", pair))

    # (b) no term divides any |R_j|
    def terms_avoid():
        bad = [(pi, pj) for pi in terms for pj in terms if catalog.divides_ree_order(pi, pj)]
        return not bad, {"pairs_checked": len(terms) ** 2, "violations": bad}

    checks.append(run_check("b:terms-avoid-orders", terms_avoid))

    # (c) torus factors per term
    for i, (p, q) in enumerate(zip(terms, qs), start=1):

        def tori(p=p, q=q):
            parts = catalog.ree_parts(q)
            lo, hi = parts["q-s+1"], parts["q+s+1"]
            d = {
                "q-1 has odd prime": nt.r_prime_part(q - 1, 2) > 1,
                "q+1 has odd prime": nt.r_prime_part(q + 1, 2) > 1,
                "7 divides exactly one of q-s+1, q+s+1": (lo % 7 == 0) != (hi % 7 == 0),
                "q-s+1 has prime other than 7": nt.r_prime_part(lo, 7) > 1,
                "q+s+1 has prime other than 7": nt.r_prime_part(hi, 7) > 1,
                "(q^3+1)_7 = 7": nt.r_part(q**3 + 1, 7) == 7,
                "(q-1)_2 = 2": nt.r_part(q - 1, 2) == 2,
                "(q+1)_2 = 4": nt.r_part(q + 1, 2) == 4,
            }
            return all(d.values()), {"p": p, **d}

        checks.append(run_check(f"c:tori({i})", tori))

    # (d) exponents outside the sequence bring a new prime
    for m in m_range:
        if m <= 3 or m % 2 == 0:
            raise ValueError(f"m_range entries must be odd and > 3, got {m}")

        def new_prime(m=m):
            if m in terms:
                return True, {"m": m, "note": "m is a term"}
            ppd = sorted(nt.primitive_prime_divisors(3, 6 * m, effort))
            good = [
                r
                for r in ppd
                if pow(3, 3 * m, r) == r - 1 and not any(catalog.divides_ree_order(r, p) for p in terms)
            ]
            return bool(good), {"m": m, "primitive_divisors": ppd, "witness": good[:1]}

        checks.append(run_check(f"d:new-prime(m={m})", new_prime))
    return checks


def sequence_groups(cert: SequenceCertificate) -> list[catalog.GroupSpec]:
    return [catalog.Ree(q) for q in cert.qs()]


def theorem1_ingredients(k: int, effort: int = nt.DEFAULT_EFFORT) -> list[Check]:
    """Coclique and forbidden-order facts behind recognizability of P_k."""
    cert = sequence(k)
    groups = sequence_groups(cert)
    mus = [catalog.mu(g) for g in groups]
    checks: list[Check] = []

    def folds():
        left = reduce(spectra.product, mus, spectra.TRIVIAL)
        right = reduce(lambda acc, s: spectra.product(s, acc), reversed(mus), spectra.TRIVIAL)
        return spectra.equals(left, right), {"mu_size": len(left.mu)}

    checks.append(run_check("spectrum-fold-agreement", folds))
    pk = spectra.product_of(mus)
    sigmas: list[tuple[int, ...]] = []

    def sigma_checks():
        gk = primegraph.build(pk, effort)
        out = {}
        ok = True
        for g, s in zip(groups, mus):
            sig = primegraph.coclique_sigma(g.q, effort)
            sigmas.append(sig)
            local = primegraph.build(s, effort).is_coclique(sig)
            glob = gk.is_coclique(sig)
            out[g.name] = {"sigma": list(sig), "coclique_in_R": local, "coclique_in_P": glob}
            ok &= local and glob and len(set(sig)) == 4
        return ok, out

    checks.append(run_check("sigma-cocliques", sigma_checks))

    def forbidden():
        if len(sigmas) != k:
            return False, {"reason": "sigma computation failed"}
        r3 = [s[2] for s in sigmas]
        r1 = [s[0] for s in sigmas]
        orders = {
            "2*prod(r3)": 2 * math.prod(r3),
            "3*prod(r1)": 3 * math.prod(r1),
            "7*prod(r1)": 7 * math.prod(r1),
        }
        absent = {name: not spectra.contains(pk, n) for name, n in orders.items()}
        return all(absent.values()), {"orders": orders, "absent": absent}

    checks.append(run_check("forbidden-orders", forbidden))
    return checks


# -- unrecognizable powers -------------------------------------------------


@dataclass
class Theorem2Result:
    ok: bool
    case: str
    details: dict

    def __bool__(self) -> bool:
        return self.ok


def j1_witness() -> tuple[list[catalog.GroupSpec], Spectrum, bool]:
    """H = D6 x D10 with its spectrum; the flag records that H is solvable."""
    groups = [catalog.Dihedral(3), catalog.Dihedral(5)]
    s = spectra.product_of(catalog.mu(g) for g in groups)
    return groups, s, True


def ree_witness_mu(q: int) -> Spectrum:
    """Spectrum {6, 9, q-1, (q+1)/2} of the twisted-tensor witness group for 2G2(q)."""
    catalog.Ree(q)  # validates q
    return spectra.from_orders([6, 9, q - 1, (q + 1) // 2])


def check_theorem2(case: str, q: int | None = None) -> Theorem2Result:
    if case == "j1":
        G = catalog.mu(catalog.J1)
        H = j1_witness()[1]
        k = 4
    elif case == "ree":
        if q is None:
            raise ValueError("case 'ree' needs q")
        G = catalog.mu(catalog.Ree(q))
        H = ree_witness_mu(q)
        k = 3
    else:
        raise ValueError(f"unknown case {case!r}")
    hyp = spectra.repl_hypotheses(G, H, k)
    lhs = spectra.power(G, k)
    rhs = spectra.product(spectra.power(G, k - 1), H)
    same = spectra.equals(lhs, rhs)
    details = {
        "k": k,
        "mu_G": list(G.mu),
        "mu_H": list(H.mu),
        "hypotheses": hyp,
        "isospectral": same,
        "diff": spectra.diff(lhs, rhs),
    }
    if q is not None:
        details["q"] = q
    return Theorem2Result(hyp and same, case, details)
