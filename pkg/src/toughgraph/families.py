"""Named graph families and generalized quadrangles.

Standard families (complete, cycle, hypercube, ...), the strongly regular
families lattice / triangular / Kneser, the extremal constructions X_k,
the two matched-gadget families with second eigenvalue on the one-tough
threshold, the sparse bipartite cut family, and three generalized
quadrangle constructions with a full axiom audit.  graph_from_spec parses
the CLI family grammar "name:key=val,..." with complement(...) and
point-graph(...) wrappers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Graph, build_graph, complement, join, mask_of


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError(f"hypercube dimension must be non-negative, got {d}")
    edges = []
    for v in range(1 << d):
        for i in range(d):
            w = v ^ (1 << i)
            if v < w:
                edges.append((v, w))
    return build_graph(1 << d, edges)


def petersen() -> Graph:
    return kneser(5, 2)


def matching_complement(t: int) -> Graph:
    """Complement of a perfect matching on t vertices (t even); pairs (2i, 2i+1)."""
    if t < 0 or t % 2:
        raise ValueError(f"matching complement needs an even vertex count, got {t}")
    return complement(build_graph(t, ((2 * i, 2 * i + 1) for i in range(t // 2))))


def extremal_x(k: int) -> Graph:
    """The (k+1)-vertex graph with maximum degree k whose largest eigenvalue
    sits exactly on the one-tough spectral threshold theta(k).

    Odd k: matching complement on k-1 vertices joined to K_2.  Even k:
    matching complement on k-2 vertices joined to K_3.  The matching
    complement block comes first, so vertices 0..len(block)-1 have degree
    k-1 and the clique vertices degree k.
    """
    if k < 3:
        raise ValueError(f"extremal construction needs k >= 3, got {k}")
    if k % 2:
        return join(matching_complement(k - 1), complete(2))
    return join(matching_complement(k - 2), complete(3))


def _attach_copies(base: Graph, k: int, copies: int) -> Graph:
    """Shared gadget body: `base` plus `copies` copies of extremal_x(k), with
    base vertex i matched to the i-th degree-(k-1) vertex of every copy."""
    x = extremal_x(k)
    low_deg = [v for v in range(x.n) if x.degree(v) == k - 1]
    if len(low_deg) != base.n:
        raise ValueError("base size must equal the number of degree-(k-1) vertices")
    n = base.n + copies * x.n
    edges = base.edges()
    for j in range(copies):
        off = base.n + j * x.n
        edges.extend((off + u, off + v) for u, v in x.edges())
        edges.extend((i, off + low_deg[i]) for i in range(base.n))
    g = build_graph(n, edges)
    if any(g.degree(v) != k for v in range(n)):
        raise AssertionError("gadget construction failed to come out regular")
    return g


def gadget_odd(k: int) -> Graph:
    """k-regular graph on k^2 + 2k - 1 vertices (k odd >= 3) whose second
    eigenvalue equals theta(k) while the toughness stays below 1: an
    independent set T of k-1 vertices matched into k copies of extremal_x(k).
    Removing T leaves the k copies, so t <= (k-1)/k."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"odd gadget needs odd k >= 3, got {k}")
    return _attach_copies(build_graph(k - 1, ()), k, k)


def gadget_even(k: int) -> Graph:
    """k-regular graph on k^2 + k - 3 vertices (k even >= 4) with second
    eigenvalue theta(k) and toughness below 1: a perfect matching T on k-2
    vertices matched into k-1 copies of extremal_x(k).  Removing T leaves
    the k-1 copies, so t <= (k-2)/(k-1)."""
    if k < 4 or k % 2:
        raise ValueError(f"even gadget needs even k >= 4, got {k}")
    t = build_graph(k - 2, ((2 * i, 2 * i + 1) for i in range((k - 2) // 2)))
    return _attach_copies(t, k, k - 1)


def bipartite_sparse_cut(k: int) -> Graph:
    """Bipartite k-regular graph on 2k^2 + 2 vertices with toughness at most
    2/k: two hub vertices 0 and 1, plus k copies of K_{k,k} minus an edge,
    hub 0 picking up the exposed vertex on one side of every copy and hub 1
    the other.  Removing {0, 1} leaves the k copies."""
    if k < 2:
        raise ValueError(f"sparse cut family needs k >= 2, got {k}")
    edges = []
    for j in range(k):
        off = 2 + j * 2 * k
        edges.extend(
            (off + a, off + k + b)
            for a in range(k)
            for b in range(k)
            if not (a == 0 and b == 0)
        )
        edges.append((0, off))
        edges.append((1, off + k))
    return build_graph(2 * k * k + 2, edges)


def lattice(v: int) -> Graph:
    """Lattice graph L_2(v) = rook's graph on a v x v grid; (i, j) -> i*v + j,
    adjacent iff same row or same column."""
    if v < 2:
        raise ValueError(f"lattice graph needs v >= 2, got {v}")
    edges = []
    for i in range(v):
        for j in range(v):
            a = i * v + j
            edges.extend((a, i * v + jj) for jj in range(j + 1, v))
            edges.extend((a, ii * v + j) for ii in range(i + 1, v))
    return build_graph(v * v, edges)


def triangular(v: int) -> Graph:
    """Triangular graph T_v: the 2-subsets of a v-set in lexicographic order,
    adjacent iff they intersect."""
    if v < 2:
        raise ValueError(f"triangular graph needs v >= 2, got {v}")
    pairs = list(combinations(range(v), 2))
    edges = [
        (i, j)
        for i in range(len(pairs))
        for j in range(i + 1, len(pairs))
        if set(pairs[i]) & set(pairs[j])
    ]
    return build_graph(len(pairs), edges)


def kneser(v: int, r: int) -> Graph:
    """Kneser graph K(v, r): r-subsets in lexicographic order, adjacent iff
    disjoint."""
    if r < 1 or v < r:
        raise ValueError(f"Kneser graph needs 1 <= r <= v, got v={v}, r={r}")
    subsets = list(combinations(range(v), r))
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not set(subsets[i]) & set(subsets[j])
    ]
    return build_graph(len(subsets), edges)


@dataclass(frozen=True)
class GeneralizedQuadrangle:
    """Point-line incidence structure of order (s, t): lines carry s+1 points,
    points carry t+1 lines, two points share at most one line, and for every
    non-incident point-line pair exactly one point of the line is collinear
    with the point.  Lines are sorted tuples of point indices."""

    order: tuple[int, int]
    num_points: int
    lines: tuple[tuple[int, ...], ...]


def check_gq(gq: GeneralizedQuadrangle) -> None:
    """Full axiom audit; raises ValueError at the first violation."""
    s, t = gq.order
    n = gq.num_points
    if n != (s + 1) * (s * t + 1):
        raise ValueError(f"expected {(s + 1) * (s * t + 1)} points, got {n}")
    if len(gq.lines) != (t + 1) * (s * t + 1):
        raise ValueError(f"expected {(t + 1) * (s * t + 1)} lines, got {len(gq.lines)}")
    point_lines = [0] * n
    for idx, line in enumerate(gq.lines):
        if len(line) != s + 1 or len(set(line)) != s + 1:
            raise ValueError(f"line {idx} must have {s + 1} distinct points")
        if any(not 0 <= p < n for p in line):
            raise ValueError(f"line {idx} has out-of-range points")
        if tuple(sorted(line)) != line:
            raise ValueError(f"line {idx} is not sorted")
        for p in line:
            point_lines[p] += 1
    for p, cnt in enumerate(point_lines):
        if cnt != t + 1:
            raise ValueError(f"point {p} lies on {cnt} lines, expected {t + 1}")
    collinear = [0] * n
    for idx, line in enumerate(gq.lines):
        for a, b in combinations(line, 2):
            if collinear[a] >> b & 1:
                raise ValueError(f"points {a} and {b} share two lines")
            collinear[a] |= 1 << b
            collinear[b] |= 1 << a
    for line in gq.lines:
        lmask = mask_of(line)
        for p in range(n):
            if lmask >> p & 1:
                continue
            if (collinear[p] & lmask).bit_count() != 1:
                raise ValueError(
                    f"point {p} sees {(collinear[p] & lmask).bit_count()} points "
                    f"of line {line}, expected exactly 1"
                )


def gq_point_graph(gq: GeneralizedQuadrangle) -> Graph:
    """Collinearity graph: distinct points adjacent iff they share a line."""
    edges = []
    for line in gq.lines:
        edges.extend(combinations(line, 2))
    return build_graph(gq.num_points, edges)


def gq_grid(s: int) -> GeneralizedQuadrangle:
    """Grid quadrangle of order (s, 1): the (s+1) x (s+1) grid with rows and
    columns as lines."""
    if s < 1:
        raise ValueError(f"grid quadrangle needs s >= 1, got {s}")
    w = s + 1
    rows = [tuple(i * w + j for j in range(w)) for i in range(w)]
    cols = [tuple(i * w + j for i in range(w)) for j in range(w)]
    return GeneralizedQuadrangle((s, 1), w * w, tuple(rows + cols))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def gq_symplectic(q: int) -> GeneralizedQuadrangle:
    """Symplectic quadrangle W(q) of order (q, q), q prime: points are the
    projective points of F_q^4, lines the totally isotropic 2-subspaces of
    the alternating form x1*y2 - x2*y1 + x3*y4 - x4*y3."""
    if not _is_prime(q):
        raise ValueError(f"symplectic quadrangle needs a prime order, got {q}")

    def canonical(vec):
        for c in vec:
            if c % q:
                inv = pow(c, q - 2, q) if q > 2 else c
                return tuple(x * inv % q for x in vec)
        return None

    points = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    vec = (a, b, c, d)
                    if canonical(vec) == vec:
                        points.append(vec)
    index = {vec: i for i, vec in enumerate(points)}

    def form(x, y):
        return (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % q

    lines = set()
    for i, p in enumerate(points):
        for r in points[i + 1:]:
            if form(p, r):
                continue
            span = {index[r]}
            for lam in range(q):
                span.add(index[canonical(tuple((p[m] + lam * r[m]) % q for m in range(4)))])
            lines.add(tuple(sorted(span)))
    return GeneralizedQuadrangle((q, q), len(points), tuple(sorted(lines)))


def gq_2_4() -> GeneralizedQuadrangle:
    """The quadrangle of order (2, 4) on 27 points, built from a double six:
    points a_1..a_6, b_1..b_6 and c_ij (i < j); a_i is collinear with b_j for
    i != j, a_i and b_i with every c containing index i, and two c points are
    collinear iff their index pairs are disjoint.  Every edge of the
    collinearity graph lies in a unique triangle; the 45 triangles are the
    lines."""
    pairs = list(combinations(range(6), 2))
    c_index = {pair: 12 + m for m, pair in enumerate(pairs)}
    edges = []
    for i in range(6):
        edges.extend((i, 6 + j) for j in range(6) if i != j)
    for pair, cidx in c_index.items():
        for i in pair:
            edges.append((i, cidx))
            edges.append((6 + i, cidx))
    for p1, p2 in combinations(pairs, 2):
        if not set(p1) & set(p2):
            edges.append((c_index[p1], c_index[p2]))
    g = build_graph(27, edges)
    lines = set()
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common.bit_count() != 1:
            raise AssertionError("double six collinearity graph is not locally a line")
        w = (common & -common).bit_length() - 1
        lines.add(tuple(sorted((u, v, w))))
    return GeneralizedQuadrangle((2, 4), 27, tuple(sorted(lines)))


_WRAPPERS = {"complement": complement, "point-graph": gq_point_graph}


def structure_from_spec(spec: str):
    """Parse a family specifier to a Graph or GeneralizedQuadrangle.

    Grammar: name[:key=val,...] optionally inside complement(...) and/or
    point-graph(...), each wrapper used at most once.
    """
    spec = spec.strip()
    for wrapper, fn in _WRAPPERS.items():
        if spec.startswith(wrapper + "(") and spec.endswith(")"):
            inner = structure_from_spec(spec[len(wrapper) + 1 : -1])
            if wrapper == "complement" and not isinstance(inner, Graph):
                raise ValueError("complement(...) needs a graph, got a quadrangle")
            if wrapper == "point-graph" and not isinstance(inner, GeneralizedQuadrangle):
                raise ValueError("point-graph(...) needs a generalized quadrangle")
            return fn(inner)
    name, _, params_text = spec.partition(":")
    name = name.strip()
    params: dict[str, int] = {}
    if params_text:
        for item in params_text.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise ValueError(f"parameter {item!r} must look like key=value")
            try:
                params[key.strip()] = int(val)
            except ValueError:
                raise ValueError(f"parameter {item!r} needs an integer value") from None
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None
    try:
        return builder(**params)
    except TypeError:
        raise ValueError(f"bad parameters for family {name!r}: {params}") from None


def graph_from_spec(spec: str) -> Graph:
    """Like structure_from_spec but requires the result to be a graph."""
    out = structure_from_spec(spec)
    if isinstance(out, GeneralizedQuadrangle):
        raise ValueError(
            f"{spec!r} names a generalized quadrangle; wrap it in point-graph(...)"
        )
    return out


def _gadget(k: int) -> Graph:
    return gadget_odd(k) if k % 2 else gadget_even(k)


_FAMILIES = {
    "complete": complete,
    "complete-bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "hypercube": hypercube,
    "petersen": petersen,
    "matching-complement": matching_complement,
    "xk": extremal_x,
    "gadget": _gadget,
    "bipartite-cut": bipartite_sparse_cut,
    "lattice": lattice,
    "triangular": triangular,
    "kneser": kneser,
    "gq-grid": gq_grid,
    "gq-w": gq_symplectic,
    "gq24": gq_2_4,
}
