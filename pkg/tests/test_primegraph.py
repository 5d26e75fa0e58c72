import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from isospec import catalog, constructions, primegraph, spectra
from isospec.catalog import J1, L2, Ree
from isospec.primegraph import CocliqueError, PrimeGraph


def brute_max_coclique(g):
    vs = g.vertices
    for size in range(len(vs), 0, -1):
        for sub in combinations(vs, size):
            if g.is_coclique(sub):
                return size
    return 0


def test_build_j1():
    g = primegraph.build(catalog.mu(J1))
    assert g.vertices == (2, 3, 5, 7, 11, 19)
    assert g.edges == frozenset({(2, 3), (2, 5), (3, 5)})


def test_build_trivial():
    g = primegraph.build(spectra.TRIVIAL)
    assert g.vertices == () and not g.edges


def test_build_ree27():
    g = primegraph.build(catalog.mu(Ree(27)))
    assert g.vertices == (2, 3, 7, 13, 19, 37)
    assert g.edges == frozenset({(2, 3), (2, 7), (2, 13)})


def test_build_alt5_has_no_edges():
    g = primegraph.build(catalog.mu(catalog.ALT5))
    assert g.vertices == (2, 3, 5) and not g.edges


def test_json():
    g = primegraph.build(catalog.mu(J1))
    assert g.to_json() == {"vertices": [2, 3, 5, 7, 11, 19], "edges": [[2, 3], [2, 5], [3, 5]]}


def test_max_coclique_j1():
    t, witness = primegraph.max_coclique(primegraph.build(catalog.mu(J1)))
    assert t == 4
    assert len(witness) == 4
    assert primegraph.build(catalog.mu(J1)).is_coclique(witness)
    assert brute_max_coclique(primegraph.build(catalog.mu(J1))) == 4


def test_max_coclique_single_vertex():
    assert primegraph.max_coclique(PrimeGraph((7,), frozenset())) == (1, (7,))


def test_max_coclique_l2_11():
    g = primegraph.build(catalog.mu(L2(11)))
    assert g.vertices == (2, 3, 5, 11)
    assert g.edges == frozenset({(2, 3)})
    t, w = primegraph.max_coclique(g)
    assert t == 3 and g.is_coclique(w) and 5 in w and 11 in w


@pytest.mark.parametrize("q", [5, 7, 11, 13, 27, 243])
def test_l2_coclique_number_is_three(q):
    g = primegraph.build(catalog.mu(L2(q)))
    assert primegraph.max_coclique(g)[0] == 3
    assert brute_max_coclique(g) == 3


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 5000), min_size=1, max_size=5))
def test_edges_roundtrip(orders):
    s = spectra.from_orders(orders)
    g = primegraph.build(s)
    for p, r in combinations(g.vertices, 2):
        assert g.adjacent(p, r) == spectra.contains(s, p * r)


def random_graph(rng, n, density):
    vs = tuple(sympy.prime(i + 1) for i in range(n))
    edges = frozenset((a, b) for a, b in combinations(vs, 2) if rng.random() < density)
    return PrimeGraph(vs, edges)


def test_max_coclique_against_brute_force():
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        t, w = primegraph.max_coclique(g)
        assert t == len(w) == brute_max_coclique(g)
        assert g.is_coclique(w)


def test_max_coclique_vertex_cap():
    g = PrimeGraph(tuple(sympy.prime(i + 1) for i in range(65)), frozenset())
    with pytest.raises(CocliqueError):
        primegraph.max_coclique(g)


@pytest.mark.parametrize(
    "q, expected",
    [
        (3**5, (11, 61, 31, 271)),
        (27, (13, 7, 19, 37)),
        (3**7, (1093, 547, 43, 2269)),
    ],
)
def test_sigma_examples(q, expected):
    assert primegraph.coclique_sigma(q) == expected


def test_sigma_3_7_by_hand():
    # q = 2187: q - s + 1 = 2107 = 7^2 * 43, q + s + 1 = 2269 is prime
    q, s = 3**7, 81
    assert q - s + 1 == 7**2 * 43 and sympy.isprime(q + s + 1)


@pytest.mark.parametrize("alpha", [3, 5, 7, 9, 11])
def test_sigma_is_coclique(alpha):
    q = 3**alpha
    sig = primegraph.coclique_sigma(q)
    g = primegraph.build(catalog.mu(Ree(q)))
    assert len(set(sig)) == 4
    assert g.is_coclique(sig)
    parts = catalog.ree_parts(q)
    for r, key in zip(sig, ("q-1", "q+1", "q-s+1", "q+s+1")):
        assert parts[key] % r == 0 and r % 2 == 1
    assert 7 not in sig[2:]


def test_sigma_cocliques_survive_in_product():
    cert = constructions.sequence(3)
    mus = [catalog.mu(Ree(q)) for q in cert.qs()]
    gk = primegraph.build(spectra.product_of(mus))
    for q in cert.qs():
        assert gk.is_coclique(primegraph.coclique_sigma(q))


def test_seven_divides_one_torus_factor():
    for q in constructions.sequence(4).qs():
        parts = catalog.ree_parts(q)
        assert (parts["q-s+1"] % 7 == 0) != (parts["q+s+1"] % 7 == 0)


def test_is_coclique_rejects_non_vertices():
    g = primegraph.build(catalog.mu(J1))
    assert not g.is_coclique((7, 13))
