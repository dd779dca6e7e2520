"""Connectivity and independence routines checked against networkx
and brute-force enumeration."""

import itertools
import random

import networkx as nx
import pytest

from toughgraph import (
    complete,
    connectivity_report,
    cycle,
    edge_connectivity,
    gq_2_4,
    gq_point_graph,
    hypercube,
    is_connected,
    kneser,
    lattice,
    local_vertex_connectivity,
    mask_of,
    max_independent_set,
    path,
    petersen,
    triangular,
    vertex_connectivity,
)

from conftest import random_graph, to_nx


def _brute_independent_sets(g):
    """All maximum independent sets, found by subset enumeration."""
    best, sets = 0, []
    for r in range(g.n, -1, -1):
        for combo in itertools.combinations(range(g.n), r):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
                if r > best:
                    best, sets = r, []
                if r == best:
                    sets.append(combo)
        if sets:
            break
    return best, sets


def test_vertex_connectivity_matches_networkx():
    rng = random.Random(31)
    for _ in range(50):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.85]))
        kappa, cut = vertex_connectivity(g)
        assert kappa == nx.node_connectivity(to_nx(g))
        if cut is not None:
            h = to_nx(g)
            h.remove_nodes_from(cut)
            assert len(cut) == kappa
            assert h.number_of_nodes() > 0
            assert not nx.is_connected(h) or h.number_of_nodes() == 1
        else:
            # only complete graphs have no separating set
            assert kappa == g.n - 1


def test_edge_connectivity_matches_networkx():
    rng = random.Random(32)
    for _ in range(50):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.85]))
        kp, cut = edge_connectivity(g)
        assert kp == nx.edge_connectivity(to_nx(g))
        assert len(cut) == kp
        h = to_nx(g)
        h.remove_edges_from(cut)
        if kp > 0:
            assert not nx.is_connected(h)


def test_connectivity_on_named_graphs():
    for g, kappa in (
        (petersen(), 3),
        (cycle(6), 2),
        (path(5), 1),
        (complete(5), 4),
        (hypercube(4), 4),
        (lattice(3), 4),
        (triangular(5), 6),
        (kneser(6, 2), 6),
        (gq_point_graph(gq_2_4()), 10),
    ):
        assert vertex_connectivity(g)[0] == kappa
        assert edge_connectivity(g)[0] == kappa  # all of these are maximally
        # edge-connected


def test_disconnected_and_trivial_inputs():
    g = random_graph(random.Random(33), 8, 0.0)
    assert vertex_connectivity(g) == (0, ())
    assert edge_connectivity(g)[0] == 0
    single = complete(1)
    assert vertex_connectivity(single)[0] == 0
    assert is_connected(single)


def test_local_vertex_connectivity():
    g = petersen()
    full = mask_of(range(g.n))
    tested = 0
    for a in range(1, 10):
        if g.has_edge(0, a):
            with pytest.raises(ValueError):
                local_vertex_connectivity(g, full, 0, a)
            continue
        want = nx.node_connectivity(to_nx(g), 0, a)
        assert local_vertex_connectivity(g, full, 0, a) == want
        tested += 1
    assert tested == 6
    non_nbr = next(a for a in range(1, 10) if not g.has_edge(0, a))
    assert local_vertex_connectivity(g, full, 0, non_nbr, limit=2) == 2


def test_max_independent_set_matches_brute_force():
    rng = random.Random(34)
    for _ in range(25):
        n = rng.randint(2, 12)
        g = random_graph(rng, n, rng.choice([0.25, 0.5, 0.75]))
        alpha, sets = _brute_independent_sets(g)
        res = max_independent_set(g, enumerate_all=True)
        assert res.alpha == alpha
        assert set(res.all_maximum) == set(sets)
        assert res.witness in set(sets)


def test_max_independent_set_on_named_graphs():
    for g, alpha in (
        (petersen(), 4),
        (kneser(6, 2), 5),
        (kneser(7, 2), 6),
        (lattice(4), 4),
        (triangular(6), 3),
        (cycle(7), 3),
        (complete(6), 1),
    ):
        res = max_independent_set(g)
        assert res.alpha == alpha
        assert all(
            not g.has_edge(a, b)
            for a, b in itertools.combinations(res.witness, 2)
        )


def test_complement_point_graph_maximum_independent_sets_are_lines():
    # in the complement of the collinearity graph, the maximum independent
    # sets are exactly the lines of the quadrangle
    from toughgraph import complement

    gq = gq_2_4()
    comp = complement(gq_point_graph(gq))
    res = max_independent_set(comp, enumerate_all=True)
    assert res.alpha == 3
    assert set(res.all_maximum) == {tuple(sorted(line)) for line in gq.lines}
    assert len(res.all_maximum) == 45


def test_connectivity_report_fields():
    rep = connectivity_report(petersen())
    assert rep.kappa == 3 and rep.kappa_prime == 3
    assert len(rep.vertex_cut) == 3
    assert len(rep.edge_cut) == 3
