"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency rows.

Every other module builds on the constructions here: complement, disjoint
union, join, line graph, and bitset component counting.  Vertex sets cross
API boundaries as integer bitmasks; mask_of/vertices_of convert.  The plain
text interchange format is "n m" on the first line followed by one "u v"
line per edge with u < v, sorted lexicographically.
"""

from __future__ import annotations

from collections.abc import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit set per listed vertex."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the vertex indices set in a bitmask."""
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


class Graph:
    """Undirected simple graph; `adj[v]` is the neighbour bitmask of v.

    Instances are treated as immutable.  The constructor audits symmetry,
    loop-freeness and index range, so a Graph that exists is well formed.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} references vertices >= {n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u, row in enumerate(adj):
            rest = row
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                out.append((u, v))
        return out

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph from an edge list; duplicates collapse, self-loops are errors."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; vertex blocks keep the order the graphs arrive in."""
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two sides."""
    u = disjoint_union([g, h])
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << u.n) - 1) ^ g_mask
    adj = [row | (h_mask if v < g.n else g_mask) for v, row in enumerate(u.adj)]
    return Graph(u.n, adj)


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g (in g.edges() order), adjacency
    iff the edges share an endpoint."""
    es = g.edges()
    adj = [0] * len(es)
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a == c or a == d or b == c or b == d:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(len(es), adj)


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced by the masked vertices, relabelled in sorted order."""
    keep = vertices_of(mask)
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        rest = g.adj[v] & mask
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            adj[index[v]] |= 1 << index[w]
    return Graph(len(keep), adj)


def components_after_removal(g: Graph, s_mask: int) -> tuple[int, tuple[int, ...]]:
    """Component count and per-component masks of g with the masked set removed.

    Removing every vertex yields (0, ()).  Plain Python BFS over bitsets; the
    optimised solvers use toughgraph.kernels instead, so this stays an
    independent reference.
    """
    alive = ((1 << g.n) - 1) & ~s_mask
    comps = []
    rem = alive
    while rem:
        start = (rem & -rem).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= g.adj[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return len(comps), tuple(comps)


def is_connected(g: Graph) -> bool:
    """True for the one-component case; false for n = 0."""
    return components_after_removal(g, 0)[0] == 1


def regularity(g: Graph) -> int | None:
    """Common degree if the graph is regular, else None."""
    if g.n == 0:
        return None
    degs = {row.bit_count() for row in g.adj}
    if len(degs) == 1:
        return degs.pop()
    return None


def to_text(g: Graph) -> str:
    """Serialize in the interchange format."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    """Parse the interchange format; malformed input raises ValueError."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"header must be two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    prev = None
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"edge line must be two integers, got {ln!r}") from None
        if u >= v:
            raise ValueError(f"edge lines need u < v, got {ln!r}")
        if prev is not None and (u, v) <= prev:
            raise ValueError(f"edge lines must be sorted and unique, got {ln!r} after {prev}")
        prev = (u, v)
        edges.append((u, v))
    return build_graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_text(g))
