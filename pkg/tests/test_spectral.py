"""Eigenvalue routines checked against numpy.linalg."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from toughgraph import (
    QuotientMatrix,
    adjacency_matrix,
    check_equitable,
    complete,
    complete_bipartite,
    cycle,
    extremal_x,
    group_eigenvalues,
    hoffman_ratio_bound,
    induced_subgraph,
    interlacing_holds,
    jacobi_eigenvalues,
    kneser,
    lambda_summary,
    lattice,
    mask_of,
    path,
    petersen,
    quotient_eigenvalues,
    spectrum,
    srg_check,
    srg_spectrum,
    theta,
    triangular,
)

from conftest import random_graph


def _random_symmetric(rng: random.Random, n: int) -> np.ndarray:
    a = np.array([[rng.uniform(-3, 3) for _ in range(n)] for _ in range(n)])
    return (a + a.T) / 2


def test_jacobi_matches_numpy_on_random_symmetric():
    rng = random.Random(21)
    for _ in range(20):
        m = _random_symmetric(rng, rng.randint(1, 24))
        got = jacobi_eigenvalues(m)
        want = np.sort(np.linalg.eigvalsh(m))[::-1]
        assert np.max(np.abs(got - want)) < 1e-9


def test_jacobi_matches_numpy_on_adjacency_matrices():
    rng = random.Random(22)
    graphs = [petersen(), lattice(3), triangular(5), kneser(6, 2)]
    graphs += [random_graph(rng, rng.randint(2, 15), 0.4) for _ in range(10)]
    for g in graphs:
        m = adjacency_matrix(g)
        got = jacobi_eigenvalues(m)
        want = np.sort(np.linalg.eigvalsh(np.array(m, dtype=float)))[::-1]
        assert np.max(np.abs(got - want)) < 1e-9


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0.0, 1.0]])
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0.0, 1.0], [0.5, 0.0]])


def test_group_eigenvalues_merges_within_tolerance():
    grouped = group_eigenvalues([3.0, 1.0 + 5e-9, 1.0, 1.0 - 5e-9, -2.0], 1e-6)
    assert [(round(v, 6), m) for v, m in grouped] == [(3.0, 1), (1.0, 3), (-2.0, 1)]
    assert group_eigenvalues([], 1e-6) == ()


def test_spectrum_of_petersen():
    sp = spectrum(petersen())
    got = [(round(v, 8), m) for v, m in sp.grouped]
    assert got == [(3.0, 1), (1.0, 5), (-2.0, 4)]
    lam2, lam_min, lam_abs = lambda_summary(sp, 3)
    assert abs(lam2 - 1.0) < 1e-9
    assert abs(lam_min + 2.0) < 1e-9
    assert abs(lam_abs - 2.0) < 1e-9


def test_lambda_summary_requires_matching_degree():
    with pytest.raises(ValueError):
        lambda_summary(spectrum(petersen()), 4)


def test_check_equitable_star():
    g = complete_bipartite(1, 3)
    q = check_equitable(g, [mask_of((0,)), mask_of((1, 2, 3))])
    assert q.entries == ((0, 3), (1, 0))
    assert q.part_sizes == (1, 3)


def test_check_equitable_rejects_uneven_partition():
    g = path(4)
    # endpoints and midpoints mix degrees toward the first part
    with pytest.raises(ValueError):
        check_equitable(g, [mask_of((0, 1)), mask_of((2, 3))])
    with pytest.raises(ValueError):
        check_equitable(g, [mask_of((0,)), mask_of((1, 2))])  # 3 missing
    with pytest.raises(ValueError):
        check_equitable(g, [mask_of((0, 1)), mask_of((1, 2, 3))])  # overlap


def test_quotient_eigenvalues_match_numpy():
    rng = random.Random(23)
    for size in (1, 2, 3):
        for _ in range(30):
            entries = tuple(
                tuple(rng.randint(0, 6) for _ in range(size)) for _ in range(size)
            )
            q = QuotientMatrix(entries=entries, part_sizes=(1,) * size)
            got = sorted(quotient_eigenvalues(q))
            want = sorted(np.linalg.eigvals(np.array(entries, dtype=float)).real)
            # quotients of equitable partitions have real spectra; random
            # integer matrices may not, so skip the complex draws
            if max(
                abs(x.imag)
                for x in np.linalg.eigvals(np.array(entries, dtype=float))
            ) > 1e-9:
                continue
            assert max(abs(a - b) for a, b in zip(got, want)) < 1e-8


def test_quotient_eigenvalues_interlace_parent_spectrum():
    g = petersen()
    nbrs = [v for v in range(1, 10) if g.has_edge(0, v)]
    rest = [v for v in range(1, 10) if not g.has_edge(0, v)]
    q = check_equitable(g, [mask_of((0,)), mask_of(nbrs), mask_of(rest)])
    vals = quotient_eigenvalues(q)
    assert abs(max(vals) - 3.0) < 1e-9
    parent = spectrum(g).eigenvalues
    for v in vals:
        assert any(abs(v - p) < 1e-8 for p in parent)


def test_srg_check_known_parameters():
    for g, want in (
        (petersen(), (10, 3, 0, 1)),
        (cycle(5), (5, 2, 0, 1)),
        (lattice(3), (9, 4, 1, 2)),
        (triangular(5), (10, 6, 3, 4)),
        (kneser(6, 2), (15, 6, 1, 3)),
    ):
        p = srg_check(g)
        assert p is not None
        assert (p.n, p.k, p.lam, p.mu) == want


def test_srg_check_rejects_non_srg():
    assert srg_check(path(4)) is None
    assert srg_check(complete(5)) is None
    assert srg_check(extremal_x(4)) is None
    assert srg_check(cycle(6)) is None


def test_srg_spectrum_matches_numeric_spectrum():
    for g in (petersen(), lattice(3), lattice(4), triangular(5), triangular(6),
              kneser(6, 2), kneser(7, 2)):
        p = srg_check(g)
        assert p is not None
        closed = srg_spectrum(p)
        numeric = spectrum(g).grouped
        assert len(closed) == len(numeric)
        for (cv, cm), (nv, nm) in zip(closed, numeric):
            assert cm == nm
            assert abs(cv - nv) < 1e-8
        assert sum(m for _, m in closed) == g.n


def test_hoffman_ratio_bound():
    assert hoffman_ratio_bound(petersen()) == Fraction(4)
    assert hoffman_ratio_bound(kneser(6, 2)) == Fraction(5)
    assert hoffman_ratio_bound(lattice(3)) == Fraction(3)
    with pytest.raises(ValueError):
        hoffman_ratio_bound(path(3))  # not regular


def test_interlacing():
    g = petersen()
    sub = induced_subgraph(g, mask_of(range(6)))
    assert interlacing_holds(spectrum(g).eigenvalues, spectrum(sub).eigenvalues)
    assert not interlacing_holds((3.0, 1.0), (4.0,))
    with pytest.raises(ValueError):
        interlacing_holds((1.0,), (2.0, 0.0))


def test_theta_values():
    assert abs(theta(3) - (1 + math.sqrt(17)) / 2) < 1e-12
    assert abs(theta(5) - (3 + math.sqrt(33)) / 2) < 1e-12
    assert abs(theta(4) - (1 + math.sqrt(7))) < 1e-12
    assert abs(theta(6) - (2 + math.sqrt(12))) < 1e-12
    for k in range(3, 12):
        assert k - 2 < theta(k) < k


def test_extremal_x_meets_threshold():
    for k in (3, 4, 5, 6):
        g = extremal_x(k)
        lam1 = spectrum(g).eigenvalues[0]
        assert abs(lam1 - theta(k)) < 1e-8
