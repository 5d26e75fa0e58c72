"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL lines are
repeated in the terminal summary. Running this file directly as a script
does the same through pytest.
"""

import math
import random
import time

import pytest

from isospec import catalog, constructions, primegraph, spectra
from isospec import numtheory as nt
from isospec.catalog import ALT5, J1, L2, Ree
from isospec.ffverify import (
    brute_force_coset_orders,
    coset_has_order_pk,
    element_order,
    field_for_q,
    gf_make,
    phi,
    semidirect_mu,
    sl2,
    unipotent_block_sizes,
)
from isospec.ffverify.field import embedding
from isospec.ffverify.semidirect import sample_element, sampled_coset_check
from isospec.spectra import from_orders

# (criterion number, passed, detail line) for the terminal summary
RESULTS: list[tuple[int, bool, str]] = []


def report(num, title, ok, elapsed, limit=None, detail=""):
    within = limit is None or elapsed < limit
    passed = bool(ok and within)
    bound = f" (< {limit:g} s)" if limit is not None else ""
    line = f"{title}: {elapsed:.2f} s{bound}"
    if detail:
        line += f"; {detail}"
    RESULTS.append((num, passed, line))
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {line}")
    return passed


def summary_lines(results=None):
    """One PASS/FAIL line per criterion, followed by its sub-checks."""
    results = RESULTS if results is None else results
    out = []
    for num in sorted({r[0] for r in results}):
        rows = [r for r in results if r[0] == num]
        status = "PASS" if all(r[1] for r in rows) else "FAIL"
        out.append(f"criterion {num:2d}: {status}")
        out += [f"    [{'PASS' if ok else 'FAIL'}] {line}" for _, ok, line in rows]
    return out


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


# 1 ------------------------------------------------------------------------


def catalog_fidelity():
    expected = {
        J1: {6, 7, 10, 11, 15, 19},
        L2(11): {5, 6, 11},
        ALT5: {2, 3, 5},
        Ree(27): {6, 9, 14, 19, 26, 37},
    }
    return all(set(catalog.mu(g).mu) == mu for g, mu in expected.items())


def test_criterion_1_catalog_fidelity():
    ok, t = timed(catalog_fidelity)
    assert report(1, "catalog fidelity", ok, t, 1)


# 2 ------------------------------------------------------------------------


def j1_pipeline():
    g = catalog.mu(J1)
    h = spectra.product_of(catalog.mu(catalog.Dihedral(n)) for n in (3, 5))
    j4 = spectra.power(g, 4)
    return (
        spectra.equals(j4, spectra.product(spectra.power(g, 3), h))
        and spectra.equals(j4, spectra.power(g, 4))
        and not spectra.equals(spectra.power(g, 3), j4)
    )


def test_criterion_2_j1_pipeline():
    ok, t = timed(j1_pipeline)
    assert report(2, "J1^4 vs J1^3 x D6 x D10", ok, t, 1)


# 3 ------------------------------------------------------------------------


@pytest.mark.parametrize("q", [27, 243, 3**7])
def test_criterion_3_ree_formula(q):
    def check():
        g = catalog.mu(Ree(q))
        h = from_orders([6, 9, q - 1, (q + 1) // 2])
        return spectra.repl_hypotheses(g, h, 3) and spectra.equals(
            spectra.power(g, 3), spectra.product(spectra.power(g, 2), h)
        )

    ok, t = timed(check)
    assert report(3, f"Ree({q}) formula mode", ok, t, 1)


# 4 ------------------------------------------------------------------------


def test_criterion_4a_exhaustive_27(exhaustive_mu_27):
    s, t = exhaustive_mu_27
    ok = set(s.mu) == {6, 9, 26, 14}
    assert report(4, "exhaustive mu(W x| M), q = 27", ok, t, 60, f"mu = {sorted(s.mu)}")


def test_criterion_4b_class_reps_243():
    s, t = timed(lambda: semidirect_mu(field_for_q(243), mode="class_reps"))
    ok = set(s.mu) == {6, 9, 242, 122}
    assert report(4, "class-rep mu(W x| M), q = 243", ok, t, 300, f"mu = {sorted(s.mu)}")


def test_criterion_4c_sampled_cosets_243():
    F = field_for_q(243)
    claimed = from_orders([6, 9, 242, 122])
    info, t = timed(lambda: sampled_coset_check(F, claimed, samples=10_000))
    ok = not info["outside_closure"] and not info["criterion_mismatches"]
    assert report(4, "sampled coset brute force, q = 243, 10^4 cosets", ok, t, None, f"orders = {info['orders_seen']}")


# 5 ------------------------------------------------------------------------


def jordan_data():
    F = gf_make(3)
    u = phi(sl2(F, 1, 1, 0, 1))
    return (
        element_order(u) == 3
        and sorted(unipotent_block_sizes(u)) == [1, 3]
        and brute_force_coset_orders(u) == {3, 9}
        and coset_has_order_pk(u, 3)
        and element_order(-u) == 6
        and brute_force_coset_orders(-u) == {6}
        and not coset_has_order_pk(-u, 6)
    )


def test_criterion_5_jordan_data():
    ok, t = timed(jordan_data)
    assert report(5, "Jordan data of unipotent images", ok, t)


# 6 ------------------------------------------------------------------------


def modular_oracle(count):
    # written independently of constructions.sequence: exact big-integer remainders
    terms, r = [5], 5
    while len(terms) < count:
        r += 2
        if all(r % d for d in range(3, math.isqrt(r) + 1, 2)):
            if all((3**p) ** 3 * (3**p - 1) * ((3**p) ** 3 + 1) % r for p in terms):
                terms.append(r)
    return terms


def sequence_check():
    c1, c3 = constructions.sequence(1), constructions.sequence(3)
    witnesses_ok = all(
        constructions.ree_order_witness(s["candidate"], c3.terms[s["j"] - 1]) == s["reason"] for s in c3.skipped
    )
    return (
        c1.terms == [5]
        and c3.terms == [5, 13, 17] == modular_oracle(3)
        and witnesses_ok
        and not constructions.check_certificate(c3)
    )


def test_criterion_6_sequence():
    ok, t = timed(sequence_check)
    assert report(6, "sequence prefix [5, 13, 17]", ok, t, 1)


# 7 ------------------------------------------------------------------------


def prime_lemma():
    cert = constructions.sequence(4)
    checks = constructions.verify_prime_lemma(cert)
    return all(c.status.value == "VERIFIED" for c in checks) and len(checks) == 6 + 1 + 4


def test_criterion_7_prime_lemma():
    ok, t = timed(prime_lemma)
    assert report(7, "prime lemma certificates, first 4 terms", ok, t, 30)


# 8 ------------------------------------------------------------------------


def zsigmondy():
    empty = {
        (a, i)
        for a in range(2, 31)
        for i in range(2, 21)
        if not nt.primitive_prime_divisors(a, i)
    }
    return empty == {(2, 6)} | {(2**t - 1, 2) for t in range(2, 5)}


def test_criterion_8_zsigmondy():
    ok, t = timed(zsigmondy)
    assert report(8, "Zsigmondy exceptions for a <= 30, i <= 20", ok, t, 10)


# 9 ------------------------------------------------------------------------


def random_spectrum(rng, top=10**4, size=6):
    return from_orders(rng.randint(1, top) for _ in range(rng.randint(1, size)))


def property_suites():
    rng = random.Random(20240601)
    failures = []
    for _ in range(500):
        a, b, c = (random_spectrum(rng) for _ in range(3))
        if from_orders(a.mu) != a:
            failures.append(("idempotence", a))
        if spectra.product(a, b) != spectra.product(b, a):
            failures.append(("commutativity", a, b))
        if spectra.product(spectra.product(a, b), c) != spectra.product(a, spectra.product(b, c)):
            failures.append(("associativity", a, b, c))
        k = len(a.mu)
        if spectra.power(a, k + rng.randint(0, 5)) != spectra.power(a, k):
            failures.append(("stabilization", a))
    for _ in range(2000):
        x, i, j = rng.randint(2, 100), rng.randint(1, 30), rng.randint(1, 30)
        if nt.gcd_pow_minus(x, i, j) != math.gcd(x**i - 1, x**j - 1):
            failures.append(("gcd minus", x, i, j))
        if nt.gcd_pow_mixed(x, i, j) != math.gcd(x**i - 1, x**j + 1):
            failures.append(("gcd mixed", x, i, j))
    for r in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        for x in range(r + 1, 101, r):
            for i in range(1, 31):
                if nt.r_part(x**i - 1, r) != nt.r_part(i, r) * nt.r_part(x - 1, r):
                    failures.append(("lte", r, x, i))
    for _ in range(1000):
        g = random_spectrum(rng, 2000)
        h = from_orders(rng.sample(g.mu, rng.randint(1, len(g.mu))))
        k = len(set(g.mu) - set(h.mu)) + 1
        assert spectra.repl_hypotheses(g, h, k)
        rhs = spectra.product(spectra.power(g, k - 1), h) if k > 1 else h
        if not spectra.equals(spectra.power(g, k), rhs):
            failures.append(("replacement", g, h, k))
    F, E = gf_make(3), gf_make(6)
    emb = embedding(F, E)
    for _ in range(10_000):
        A, B = sample_element(F, rng), sample_element(F, rng)
        if phi(A @ B) != phi(A) @ phi(B):
            failures.append(("phi", A, B))
    done = 0
    while done < 100:
        A = sample_element(F, rng)
        t = A.trace()
        if F.sub(F.mul(t, t), F.from_int(4)) == 0:
            continue
        lam = next(z for z in range(1, E.q) if E.add(E.sub(E.mul(z, z), E.mul(emb[t], z)), 1) == 0)
        # product of the four roots and their sum, against the char poly coefficients
        roots = [E.pow(lam, k) for k in (4, 2, -2, -4)]
        cp = [emb[x] for x in phi(A).charpoly()]
        prod = 1
        total = 0
        for r in roots:
            prod = E.mul(prod, r)
            total = E.add(total, r)
        if cp[0] != prod or cp[3] != E.neg(total):
            failures.append(("char roots", A))
        done += 1
    return failures


def test_criterion_9_property_suites():
    failures, t = timed(property_suites)
    assert report(9, "seeded property suites", not failures, t, None, f"{len(failures)} failures")


# 10 -----------------------------------------------------------------------


def coclique_checks():
    gk = primegraph.build(catalog.mu(J1))
    t, w = primegraph.max_coclique(gk)
    ok = t == 4 and gk.is_coclique(w) and len(w) == 4
    qs = constructions.sequence(3).qs()
    pk = primegraph.build(spectra.product_of(catalog.mu(Ree(q)) for q in qs))
    for q in qs:
        sig = primegraph.coclique_sigma(q)
        ok &= len(set(sig)) == 4
        ok &= primegraph.build(catalog.mu(Ree(q))).is_coclique(sig)
        ok &= pk.is_coclique(sig)
    return ok


def test_criterion_10_cocliques():
    ok, t = timed(coclique_checks)
    assert report(10, "coclique checks", ok, t)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
