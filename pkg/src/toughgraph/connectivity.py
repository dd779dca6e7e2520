"""Vertex and edge connectivity via unit-capacity max-flow, with cut
witnesses, and an exact maximum independent set solver (branch and bound
with a greedy clique-cover bound, optionally enumerating every maximum
independent set).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, components_after_removal, is_connected, mask_of, vertices_of


class _Flow:
    """Arc-array max-flow network; arcs come in (forward, reverse) pairs."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def arc(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def maxflow(self, s: int, t: int, limit: int | None = None) -> int:
        flow = 0
        while limit is None or flow < limit:
            parent = [-1] * self.n
            parent[s] = -2
            queue = [s]
            for u in queue:
                for ai in self.adj[u]:
                    v = self.to[ai]
                    if self.cap[ai] > 0 and parent[v] == -1:
                        parent[v] = ai
                        queue.append(v)
                if parent[t] != -1:
                    break
            if parent[t] == -1:
                break
            aug = None
            v = t
            while v != s:
                ai = parent[v]
                aug = self.cap[ai] if aug is None else min(aug, self.cap[ai])
                v = self.to[ai ^ 1]
            v = t
            while v != s:
                ai = parent[v]
                self.cap[ai] -= aug
                self.cap[ai ^ 1] += aug
                v = self.to[ai ^ 1]
            flow += aug
        return flow

    def residual_reach(self, s: int) -> list[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = [s]
        for u in queue:
            for ai in self.adj[u]:
                v = self.to[ai]
                if self.cap[ai] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _edge_flow_net(g: Graph) -> _Flow:
    net = _Flow(g.n)
    for u, v in g.edges():
        net.arc(u, v, 1)
        net.arc(v, u, 1)
    return net


def edge_connectivity(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Edge connectivity and a minimum edge cut.

    Unit-capacity max-flow from vertex 0 to every other sink; the cut is
    read off the final residual reachability.  Disconnected graphs give
    (0, ()).
    """
    if g.n == 0:
        raise ValueError("edge connectivity needs at least one vertex")
    if g.n == 1:
        return 0, ()
    if not is_connected(g):
        return 0, ()
    best, best_t = None, None
    for t in range(1, g.n):
        f = _edge_flow_net(g).maxflow(0, t)
        if best is None or f < best:
            best, best_t = f, t
    net = _edge_flow_net(g)
    net.maxflow(0, best_t)
    reach = net.residual_reach(0)
    cut = tuple(
        (u, v) for u, v in g.edges() if reach[u] != reach[v]
    )
    if len(cut) != best:
        raise AssertionError("edge cut extraction does not match the flow value")
    return best, cut


def _split_flow_net(g: Graph, alive_mask: int) -> tuple[_Flow, int]:
    """Vertex-split network on the alive vertices: v_in = 2v, v_out = 2v + 1,
    capacity 1 through each vertex and effectively unbounded along edges."""
    inf = g.n + 1
    net = _Flow(2 * g.n)
    for v in vertices_of(alive_mask):
        net.arc(2 * v, 2 * v + 1, 1)
        rest = g.adj[v] & alive_mask
        for w in vertices_of(rest):
            net.arc(2 * v + 1, 2 * w, inf)
    return net, inf


def local_vertex_connectivity(
    g: Graph, alive_mask: int, a: int, b: int, limit: int | None = None
) -> int:
    """Minimum number of interior vertices whose removal separates the
    non-adjacent alive vertices a and b inside the alive induced subgraph
    (Menger via vertex-split max-flow).  With limit set, stops counting
    there."""
    if g.adj[a] >> b & 1:
        raise ValueError(f"vertices {a} and {b} are adjacent")
    net, _ = _split_flow_net(g, alive_mask)
    return net.maxflow(2 * a + 1, 2 * b, limit)


def vertex_connectivity(g: Graph) -> tuple[int, tuple[int, ...] | None]:
    """Vertex connectivity and a minimum vertex cut.

    Standard vertex-split max-flow over every non-adjacent pair; complete
    graphs give (n - 1, None), disconnected graphs (0, ()).  The returned
    cut is re-checked to disconnect the graph.
    """
    if g.n == 0:
        raise ValueError("vertex connectivity needs at least one vertex")
    if not is_connected(g):
        return 0, ()
    full = (1 << g.n) - 1
    best, best_pair = None, None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            f = local_vertex_connectivity(g, full, u, v, limit=best)
            if best is None or f < best:
                best, best_pair = f, (u, v)
    if best is None:
        return g.n - 1, None
    net, _ = _split_flow_net(g, full)
    net.maxflow(2 * best_pair[0] + 1, 2 * best_pair[1])
    reach = net.residual_reach(2 * best_pair[0] + 1)
    cut = tuple(v for v in range(g.n) if reach[2 * v] and not reach[2 * v + 1])
    if len(cut) != best:
        raise AssertionError("vertex cut extraction does not match the flow value")
    if components_after_removal(g, mask_of(cut))[0] < 2:
        raise AssertionError("extracted vertex cut fails to disconnect the graph")
    return best, cut


@dataclass(frozen=True)
class ConnectivityReport:
    """kappa, kappa_prime and matching minimum cuts (vertex_cut is None for
    complete graphs, which have no disconnecting set)."""

    kappa: int
    kappa_prime: int
    vertex_cut: tuple[int, ...] | None
    edge_cut: tuple[tuple[int, int], ...]


def connectivity_report(g: Graph) -> ConnectivityReport:
    kappa, vcut = vertex_connectivity(g)
    kprime, ecut = edge_connectivity(g)
    return ConnectivityReport(kappa, kprime, vcut, ecut)


@dataclass(frozen=True)
class IndependenceResult:
    """Independence number, one witness, and (on request) every maximum
    independent set, each a sorted vertex tuple, sorted lexicographically."""

    alpha: int
    witness: tuple[int, ...]
    all_maximum: tuple[tuple[int, ...], ...] | None = None


def _clique_cover_bound(adj, avail: int) -> int:
    """Number of cliques in a greedy clique cover of the masked vertices;
    an independent set meets each clique at most once."""
    count = 0
    rest = avail
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        cand = adj[v] & rest
        while cand:
            w = (cand & -cand).bit_length() - 1
            rest &= ~(1 << w)
            cand &= adj[w] & rest
        count += 1
    return count


def _branch_vertex(adj, avail: int) -> int:
    """Lowest-index vertex of maximum degree inside the masked subgraph."""
    best_v, best_d = -1, -1
    rest = avail
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        d = (adj[v] & avail).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v


def max_independent_set(g: Graph, enumerate_all: bool = False) -> IndependenceResult:
    """Exact maximum independent set by branch and bound.

    Branches on a lowest-index maximum-degree vertex, prunes with the greedy
    clique-cover bound.  With enumerate_all, a second pass collects every
    maximum independent set.
    """
    adj = g.adj
    full = (1 << g.n) - 1
    best = 0
    best_mask = 0

    def search(avail: int, size: int, cur: int) -> None:
        nonlocal best, best_mask
        if not avail:
            if size > best:
                best, best_mask = size, cur
            return
        if size + _clique_cover_bound(adj, avail) <= best:
            return
        v = _branch_vertex(adj, avail)
        search(avail & ~(adj[v] | (1 << v)), size + 1, cur | (1 << v))
        search(avail & ~(1 << v), size, cur)

    search(full, 0, 0)
    witness = vertices_of(best_mask)
    if not enumerate_all:
        return IndependenceResult(best, witness)

    found: list[tuple[int, ...]] = []

    def collect(avail: int, size: int, cur: int) -> None:
        if size + _clique_cover_bound(adj, avail) < best:
            return
        if size == best:
            found.append(vertices_of(cur))
            return
        if not avail:
            return
        v = _branch_vertex(adj, avail)
        collect(avail & ~(adj[v] | (1 << v)), size + 1, cur | (1 << v))
        collect(avail & ~(1 << v), size, cur)

    collect(full, 0, 0)
    found.sort()
    return IndependenceResult(best, found[0] if found else (), tuple(found))
