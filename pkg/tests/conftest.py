"""Shared helpers for the test suite.

networkx and numpy are used as independent oracles throughout: every
nontrivial quantity computed by this package is cross-checked against
a second implementation that shares no code with the first.
"""

import random

import networkx as nx

from toughgraph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    order = sorted(h.nodes())
    index = {u: i for i, u in enumerate(order)}
    return build_graph(len(order), [(index[u], index[v]) for u, v in h.edges()])


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    """Sample G(n, p) conditioned on connectivity."""
    while True:
        edges = [
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if rng.random() < p
        ]
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        if nx.is_connected(h):
            return build_graph(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < p
    ]
    return build_graph(n, edges)
