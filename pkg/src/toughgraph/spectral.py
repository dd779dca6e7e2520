"""Adjacency spectra via a cyclic-by-row Jacobi eigensolver, equitable
partition quotients with closed-form eigenvalues up to order 3, strongly
regular graph recognition and spectra, eigenvalue interlacing, and the
Hoffman ratio bound.

The Jacobi solver is the only eigenvalue routine the package itself uses;
tests cross-check it against an independent dense solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Graph, is_connected, regularity, vertices_of


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency matrix as floats."""
    a = np.zeros((g.n, g.n))
    for v, row in enumerate(g.adj):
        for w in vertices_of(row):
            a[v, w] = 1.0
    return a


def jacobi_eigenvalues(matrix, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, descending.

    Cyclic-by-row Jacobi rotations; converged when every off-diagonal
    magnitude drops below 1e-10 * n.  Raises ArithmeticError if the sweep
    limit is hit first (does not happen for the graph sizes in scope).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("Jacobi eigensolver needs a symmetric matrix")
    n = a.shape[0]
    if n == 0:
        return np.array([])
    if n == 1:
        return a[0, :1].copy()
    threshold = 1e-10 * n
    for _ in range(max_sweeps):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-36:
                    a[p, q] = a[q, p] = 0.0
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                new_p = c * row_p - s * row_q
                new_q = s * row_p + c * row_q
                a[p, :] = new_p
                a[:, p] = new_p
                a[q, :] = new_q
                a[:, q] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
        off = np.max(np.abs(a - np.diag(np.diag(a))))
        if off < threshold:
            return np.sort(np.diag(a))[::-1].copy()
    raise ArithmeticError(f"Jacobi sweeps did not converge within {max_sweeps} sweeps")


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order plus their tolerance-grouping."""

    eigenvalues: tuple[float, ...]
    grouped: tuple[tuple[float, int], ...]
    group_tol: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)


def group_eigenvalues(values, tol: float) -> tuple[tuple[float, int], ...]:
    """Collapse a descending eigenvalue list into (value, multiplicity) pairs;
    a new group starts when an eigenvalue falls more than tol below the
    group's first member.  Group values are member means."""
    groups: list[list[float]] = []
    for x in values:
        if groups and groups[-1][0] - x <= tol:
            groups[-1].append(x)
        else:
            groups.append([x])
    return tuple((sum(grp) / len(grp), len(grp)) for grp in groups)


def spectrum(g: Graph, group_tol: float = 1e-6) -> Spectrum:
    """Adjacency spectrum of a non-empty graph."""
    if g.n == 0:
        raise ValueError("spectrum needs at least one vertex")
    eigs = jacobi_eigenvalues(adjacency_matrix(g))
    values = tuple(float(x) for x in eigs)
    return Spectrum(values, group_eigenvalues(values, group_tol), group_tol)


def lambda_summary(sp: Spectrum, k: int, tol: float = 1e-8) -> tuple[float, float, float]:
    """(lambda_2, lambda_min, max(|lambda_2|, |lambda_min|)) for a k-regular
    connected graph's spectrum; raises if lambda_1 is not k within tol."""
    if sp.n < 2:
        raise ValueError("need at least two eigenvalues")
    lam1 = sp.eigenvalues[0]
    if abs(lam1 - k) > tol:
        raise ValueError(f"largest eigenvalue {lam1} differs from degree {k}")
    lam2 = sp.eigenvalues[1]
    lam_min = sp.eigenvalues[-1]
    return lam2, lam_min, max(abs(lam2), abs(lam_min))


def theta(k: int) -> float:
    """One-tough spectral threshold for k-regular graphs:
    (k - 2 + sqrt(k^2 + 8)) / 2 for odd k, (k - 2 + sqrt(k^2 + 12)) / 2 for
    even k.  Derived for k >= 3; k = 2 evaluates the even formula (callers
    flag that extrapolation)."""
    if k < 2:
        raise ValueError(f"threshold defined for k >= 2, got {k}")
    if k % 2:
        return (k - 2 + math.sqrt(k * k + 8)) / 2.0
    return (k - 2 + math.sqrt(k * k + 12)) / 2.0


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient of an equitable partition: entries[i][j] is the number of
    neighbours in part j of any vertex in part i."""

    entries: tuple[tuple[int, ...], ...]
    part_sizes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def check_equitable(g: Graph, parts) -> QuotientMatrix:
    """Verify that the given vertex-set masks form an equitable partition and
    return its quotient matrix; raises ValueError otherwise."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("partition needs at least one part")
    union = 0
    for i, part in enumerate(parts):
        if part == 0:
            raise ValueError(f"part {i} is empty")
        if union & part:
            raise ValueError(f"part {i} overlaps an earlier part")
        union |= part
    if union != (1 << g.n) - 1:
        raise ValueError("parts do not cover every vertex")
    entries = []
    for i, part in enumerate(parts):
        row: tuple[int, ...] | None = None
        for v in vertices_of(part):
            counts = tuple((g.adj[v] & other).bit_count() for other in parts)
            if row is None:
                row = counts
            elif counts != row:
                raise ValueError(
                    f"partition not equitable: vertex {v} in part {i} has "
                    f"neighbour counts {counts}, expected {row}"
                )
        entries.append(row)
    return QuotientMatrix(tuple(entries), tuple(p.bit_count() for p in parts))


def quotient_eigenvalues(q: QuotientMatrix) -> tuple[float, ...]:
    """Eigenvalues of a quotient matrix of order <= 3, descending, via the
    quadratic/cubic closed forms.  Larger quotients are unsupported."""
    m = q.entries
    r = q.size
    if r == 1:
        return (float(m[0][0]),)
    if r == 2:
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        disc = tr * tr - 4 * det
        if disc < 0:
            raise ArithmeticError("quotient matrix has complex eigenvalues")
        sq = math.sqrt(disc)
        return ((tr + sq) / 2.0, (tr - sq) / 2.0)
    if r == 3:
        c2 = m[0][0] + m[1][1] + m[2][2]
        c1 = (
            m[0][0] * m[1][1] - m[0][1] * m[1][0]
            + m[0][0] * m[2][2] - m[0][2] * m[2][0]
            + m[1][1] * m[2][2] - m[1][2] * m[2][1]
        )
        c0 = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        # char poly x^3 - c2 x^2 + c1 x - c0; depress with x = y + c2/3
        p = c1 - c2 * c2 / 3.0
        qq = -2.0 * c2**3 / 27.0 + c1 * c2 / 3.0 - c0
        shift = c2 / 3.0
        if p > -1e-12:
            y = math.copysign(abs(qq) ** (1.0 / 3.0), -qq) if qq else 0.0
            roots = [y + shift] * 3
        else:
            amp = 2.0 * math.sqrt(-p / 3.0)
            cos_arg = max(-1.0, min(1.0, -4.0 * qq / amp**3))
            phi = math.acos(cos_arg)
            roots = [
                amp * math.cos((phi + 2.0 * math.pi * j) / 3.0) + shift for j in range(3)
            ]
        return tuple(sorted(roots, reverse=True))
    raise ValueError(f"closed-form quotient eigenvalues support order <= 3, got {r}")


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters (n, k, lam, mu)."""

    n: int
    k: int
    lam: int
    mu: int


def srg_check(g: Graph) -> SrgParams | None:
    """Parameters if g is connected, regular, has both edge and non-edge
    pairs, and common-neighbour counts are constant on each kind; None
    otherwise (complete and edgeless graphs have no mu resp. lam)."""
    k = regularity(g)
    if k is None or g.n < 2 or not is_connected(g):
        return None
    lam = mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = common
                elif common != lam:
                    return None
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    return None
    if lam is None or mu is None:
        return None
    return SrgParams(g.n, k, lam, mu)


def srg_spectrum(p: SrgParams) -> tuple[tuple[float, int], ...]:
    """Grouped spectrum ((k, 1), (r, f), (s, g)) determined by the parameters;
    raises ValueError when the multiplicities fail to come out as
    non-negative integers (infeasible parameters)."""
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    if disc <= 0:
        raise ValueError(f"infeasible parameters {p}: negative discriminant")
    sq = math.sqrt(disc)
    r = ((p.lam - p.mu) + sq) / 2.0
    s = ((p.lam - p.mu) - sq) / 2.0
    swing = (2 * p.k + (p.n - 1) * (p.lam - p.mu)) / sq
    f = ((p.n - 1) - swing) / 2.0
    g = ((p.n - 1) + swing) / 2.0
    fi, gi = round(f), round(g)
    if abs(f - fi) > 1e-6 or abs(g - gi) > 1e-6 or fi < 0 or gi < 0:
        raise ValueError(f"infeasible parameters {p}: multiplicities ({f}, {g})")
    return ((float(p.k), 1), (r, fi), (s, gi))


def interlacing_holds(parent, sub, tol: float = 1e-7) -> bool:
    """Cauchy interlacing test: for descending eigenvalue sequences of sizes
    n >= m, checks parent[i] >= sub[i] >= parent[i + n - m] within tol."""
    parent = list(parent)
    sub = list(sub)
    n, m = len(parent), len(sub)
    if m > n:
        raise ValueError("subgraph spectrum longer than parent spectrum")
    return all(
        parent[i] + tol >= sub[i] >= parent[i + n - m] - tol for i in range(m)
    )


def hoffman_ratio_bound(g: Graph) -> Fraction | float:
    """Hoffman's independence bound n * (-lam_min) / (k - lam_min) for a
    connected regular graph with at least one edge; exact Fraction when
    lam_min is an integer within 1e-6, float otherwise."""
    k = regularity(g)
    if k is None or not is_connected(g):
        raise ValueError("Hoffman ratio bound needs a connected regular graph")
    if k == 0:
        raise ValueError("Hoffman ratio bound needs at least one edge")
    lam_min = spectrum(g).eigenvalues[-1]
    m = round(lam_min)
    if abs(lam_min - m) <= 1e-6 and m < 0:
        return Fraction(g.n * (-m), k - m)
    return g.n * (-lam_min) / (k - lam_min)
