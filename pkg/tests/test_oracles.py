from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from cochain_tuza.graphs import (
    GeneralGraph,
    HittingSet,
    TrianglePacking,
    build_cochain,
    enumerate_triangles,
    verify_hitting,
    verify_packing,
)
from cochain_tuza.oracles import exact_nu, exact_tau
from cochain_tuza.packings import feder_count

from conftest import brute_nu, brute_tau, complete_graph, monotone_sequences


def test_small_clique_values():
    k3, k4 = complete_graph(3), complete_graph(4)
    assert exact_nu(k3).value == 1 and exact_tau(k3).value == 1
    assert exact_nu(k4).value == 1 and exact_tau(k4).value == 2
    assert exact_nu(complete_graph(7)).value == 7
    # cross-check against the independent subset-enumeration oracles
    assert brute_nu(k4) == 1 and brute_tau(k4) == 2


def test_triangle_free_graph():
    g = GeneralGraph.from_edges(4, [(0, 1), (2, 3)])
    assert exact_tau(g).value == 0
    assert exact_nu(g).value == 0


def test_witnesses_always_verify():
    for n in range(3, 9):
        g = complete_graph(n)
        r_nu, r_tau = exact_nu(g), exact_tau(g)
        assert r_nu.proven and r_tau.proven
        assert isinstance(r_nu.witness, TrianglePacking)
        assert isinstance(r_tau.witness, HittingSet)
        assert verify_packing(g, r_nu.witness)
        assert verify_hitting(g, r_tau.witness)
        assert r_nu.value == len(r_nu.witness)
        assert r_tau.value == len(r_tau.witness)


def test_nu_matches_feder_counts():
    for n in range(1, 11):
        g = complete_graph(n)
        r = exact_nu(g)
        assert r.proven and r.value == feder_count(n).count


def test_budget_exhaustion_never_reports_proven():
    g = complete_graph(10)
    r = exact_tau(g, budget=40)
    assert not r.proven
    assert verify_hitting(g, r.witness)  # still a feasible upper bound
    assert r.value >= 20
    r2 = exact_nu(g, budget=3)
    assert not r2.proven and verify_packing(g, r2.witness)


def test_duality_on_exhaustive_small_cochain_instances():
    # nu <= tau <= 3 nu, and tau <= 2 nu (the conjecture itself), proven on
    # every even-sided instance with at most 10 vertices
    pairs = (
        (2, 2), (2, 4), (4, 2), (2, 6), (6, 2),
        (4, 4), (2, 8), (8, 2), (4, 6), (6, 4),
    )
    for l_size, m_size in pairs:
        for t in monotone_sequences(l_size, m_size):
            g = build_cochain(l_size, m_size, t).to_general()
            r_nu, r_tau = exact_nu(g), exact_tau(g)
            assert r_nu.proven and r_tau.proven
            assert r_nu.value <= r_tau.value <= 3 * r_nu.value
            assert r_tau.value <= 2 * r_nu.value


def test_against_brute_force_on_small_cochain_instances():
    for l_size, m_size in ((2, 2), (2, 4), (4, 2)):
        for t in monotone_sequences(l_size, m_size):
            g = build_cochain(l_size, m_size, t).to_general()
            assert exact_nu(g).value == brute_nu(g)
            if len(enumerate_triangles(g)) > 0:
                assert exact_tau(g).value == brute_tau(g)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_duality_on_random_graphs(data):
    n = data.draw(st.integers(3, 7))
    edges = [
        e for e in combinations(range(n), 2) if data.draw(st.booleans())
    ]
    g = GeneralGraph.from_edges(n, edges)
    r_nu, r_tau = exact_nu(g), exact_tau(g)
    assert r_nu.proven and r_tau.proven
    assert r_nu.value <= r_tau.value <= 3 * r_nu.value
    assert r_nu.value == brute_nu(g)
