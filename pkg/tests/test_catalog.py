import math

import pytest
import sympy

from isospec import catalog
from isospec.catalog import ALT5, J1, Dihedral, GroupSpec, InvalidGroupSpec, L2, Ree

ALPHAS = (3, 5, 7, 9, 11, 13)


def mu_primes(g):
    out = set()
    for m in catalog.mu(g).mu:
        out |= set(sympy.primefactors(m))
    return out


@pytest.mark.parametrize(
    "g, expected",
    [
        (L2(11), (5, 6, 11)),
        (Ree(27), (6, 9, 14, 19, 26, 37)),
        (J1, (6, 7, 10, 11, 15, 19)),
        (Dihedral(5), (2, 5)),
        (ALT5, (2, 3, 5)),
    ],
)
def test_mu_examples(g, expected):
    assert catalog.mu(g).mu == expected


@pytest.mark.parametrize("g, expected", [(Ree(27), 10073444472), (L2(11), 660), (J1, 175560)])
def test_order_examples(g, expected):
    assert catalog.order(g) == expected


def test_j1_order_consistency():
    assert catalog.order(J1) == 2**3 * 3 * 5 * 7 * 11 * 19
    assert set(sympy.primefactors(catalog.order(J1))) == mu_primes(J1)


@pytest.mark.parametrize("q, expected", [(3**5, 5), (27, 3), (3**13, 13)])
def test_out_order(q, expected):
    assert catalog.out_order(Ree(q)) == expected


def test_out_order_only_for_ree():
    with pytest.raises(InvalidGroupSpec):
        catalog.out_order(J1)


@pytest.mark.parametrize(
    "g, expected",
    [(J1, {2, 3, 5, 7, 11, 19}), (Ree(27), {2, 3, 7, 13, 19, 37}), (ALT5, {2, 3, 5})],
)
def test_pi_examples(g, expected):
    assert catalog.pi(g) == expected


@pytest.mark.parametrize("r, p, expected", [(7, 5, True), (11, 5, True), (5, 5, False)])
def test_divides_ree_order_examples(r, p, expected):
    assert catalog.divides_ree_order(r, p) is expected


@pytest.mark.parametrize("alpha", [5, 7])
def test_divides_ree_order_agrees_with_factoring(alpha):
    q = 3**alpha
    pi = set(sympy.primefactors(catalog.order(Ree(q))))
    for r in sympy.primerange(2, 20000):
        assert catalog.divides_ree_order(r, alpha) == (r in pi), r


def all_test_groups():
    gs = [J1, ALT5] + [Dihedral(n) for n in range(3, 40)]
    gs += [L2(q) for q in range(4, 200) if sympy.perfect_power(q) is False and sympy.isprime(q)]
    gs += [L2(q) for q in (4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243)]
    gs += [Ree(3**a) for a in ALPHAS]
    return gs


@pytest.mark.parametrize("g", all_test_groups(), ids=lambda g: g.name)
def test_pi_is_primes_of_mu(g):
    assert catalog.pi(g) == mu_primes(g)
    # and equals the primes of the group order
    assert catalog.pi(g) == set(sympy.primefactors(catalog.order(g)))


@pytest.mark.parametrize("g", all_test_groups(), ids=lambda g: g.name)
def test_mu_divides_order(g):
    assert all(catalog.order(g) % m == 0 for m in catalog.mu(g).mu)


@pytest.mark.parametrize("alpha", ALPHAS + (15, 17, 19, 37))
def test_ree_identities(alpha):
    q = 3**alpha
    s = catalog.ree_sqrt3q(q)
    assert s == 3 ** ((alpha + 1) // 2)
    parts = catalog.ree_parts(q)
    n = catalog.order(Ree(q))
    for v in (q - 1, (q + 1) // 2, q - s + 1, q + s + 1):
        assert n % v == 0
    assert (q + 1) * parts["q-s+1"] * parts["q+s+1"] == q**3 + 1


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 243])
def test_l2_odd_torus_parts_coprime(q):
    assert math.gcd((q - 1) // 2, (q + 1) // 2) == 1


def test_l2_small_isomorphisms():
    # L2(4) and L2(5) are both Alt5
    assert catalog.mu(L2(4)) == catalog.mu(ALT5) == catalog.mu(L2(5))


def test_has_abelian_sylow2():
    for q in (4, 8, 16, 32, 64, 128):
        assert catalog.has_abelian_sylow2(L2(q))
    for q in range(5, 300):
        if sympy.isprime(q) or (sympy.perfect_power(q) and q % 2):
            try:
                g = L2(q)
            except InvalidGroupSpec:
                continue
            assert catalog.has_abelian_sylow2(g) == (q % 8 in (3, 5))
    assert catalog.has_abelian_sylow2(J1)
    assert catalog.has_abelian_sylow2(Ree(27))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"family": "Ree", "q": 3},
        {"family": "Ree", "q": 9},
        {"family": "Ree", "q": 81},
        {"family": "Ree", "q": 25},
        {"family": "L2", "q": 3},
        {"family": "L2", "q": 12},
        {"family": "Dihedral", "n": 2},
        {"family": "Monster"},
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(InvalidGroupSpec):
        GroupSpec(**kwargs)


def test_group_spec_json():
    g = Ree(27)
    assert g.to_json() == {"family": "Ree", "q": 27}
    assert GroupSpec.from_json(g.to_json()) == g
    assert GroupSpec.from_json({"family": "Dihedral", "n": 3}) == Dihedral(3)
    with pytest.raises(InvalidGroupSpec):
        GroupSpec.from_json({"family": "J1", "colour": "red"})
