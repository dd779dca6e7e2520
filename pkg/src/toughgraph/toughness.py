"""Exact graph toughness with certificates, plus spectral bounds.

toughness(G) = min |S| / c(G - S) over vertex sets S whose removal
disconnects the graph; values are exact rationals.  The solver fixes the
component count c, seeds each candidate separation with an independent
c-set, closes over forced vertices (anything adjacent to two seeds must
join the separator), and finishes with size-ordered subset enumeration
under branch-and-bound caps.  A naive full-subset scan doubles as the
reference the solver is tested against and as the minimizer collector for
small graphs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernels
from .connectivity import (
    edge_connectivity,
    local_vertex_connectivity,
    max_independent_set,
    vertex_connectivity,
)
from .core import (
    Graph,
    components_after_removal,
    is_connected,
    mask_of,
    regularity,
    vertices_of,
)
from .spectral import hoffman_ratio_bound, lambda_summary, spectrum, theta


def _is_complete(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(row == full ^ (1 << v) for v, row in enumerate(g.adj))


def toughness_of_set(g: Graph, s_mask: int) -> Fraction:
    """|S| / c(G - S) for one explicit vertex set; S must disconnect."""
    if s_mask & ~((1 << g.n) - 1):
        raise ValueError("vertex set out of range")
    count, _ = components_after_removal(g, s_mask)
    if count < 2:
        raise ValueError(
            f"removing the set leaves {count} component(s); not a disconnecting set"
        )
    return Fraction(s_mask.bit_count(), count)


def toughness_naive(g: Graph) -> Fraction:
    """Toughness by scanning every one of the 2^n vertex subsets, no pruning.

    The reference implementation the optimised solver is checked against;
    refuses graphs past 30 vertices.
    """
    if g.n > 30:
        raise ValueError("naive scan is limited to 30 vertices")
    if not is_connected(g):
        raise ValueError("toughness needs a connected graph")
    handle = kernels.prepare(g.adj)
    res = kernels.best_ratio_scan(handle, g.n)
    if res is None:
        raise ValueError("complete graph has no disconnecting set")
    return Fraction(*res)


@dataclass(frozen=True)
class ToughnessCertificate:
    """Exact toughness with a witness set.

    value = |witness| / components; exhaustive is False when the search
    budget ran out first (value is then only an upper bound).  minimizers,
    when requested, lists every optimal set, sorted; the witness is then the
    lexicographically smallest one.  evaluations counts component-check
    operations spent.
    """

    value: Fraction
    witness: tuple[int, ...]
    components: int
    exhaustive: bool
    evaluations: int
    minimizers: tuple[tuple[int, ...], ...] | None = None


class _BudgetExhausted(Exception):
    pass


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise _BudgetExhausted

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.used)


def _gen_seeds(adj, n: int, c: int, cap_fn):
    """Yield (seed_mask, forced_mask) for every independent c-set, skipping
    branches whose forced set (vertices adjacent to two chosen seeds) already
    exceeds the current size cap."""

    def rec(start: int, chosen: int, count: int, forced: int, seen: int):
        if count == c:
            yield chosen, forced
            return
        for v in range(start, n - (c - count - 1)):
            if adj[v] & chosen:
                continue
            new_forced = forced | (seen & adj[v])
            if new_forced.bit_count() > cap_fn():
                continue
            yield from rec(v + 1, chosen | (1 << v), count + 1, new_forced, seen | adj[v])

    yield from rec(0, 0, 0, 0, 0)


def _candidate_mask(g: Graph, handle, alive: int, seed_mask: int) -> tuple[int, tuple[int, int] | None]:
    """Vertices that can still matter for separating the seeds: the union of
    the components of `alive` holding two or more seeds, minus the seeds.
    Also reports one seed pair sharing a component (None when separated)."""
    cand = 0
    pair = None
    rem = seed_mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = kernels.reach_mask(handle, alive, v)
        inside = comp & seed_mask
        if inside.bit_count() >= 2:
            cand |= comp & ~seed_mask
            if pair is None:
                a = (inside & -inside).bit_length() - 1
                rest = inside & ~(1 << a)
                b = (rest & -rest).bit_length() - 1
                pair = (a, b)
        rem &= ~comp
    return cand, pair


def _min_separator(g: Graph, handle, full: int, seed_mask: int, forced: int,
                   cap: int, budget: _Budget, collect_size: int | None = None,
                   collect_c: int | None = None):
    """Smallest separator containing `forced` that splits the seeds apart,
    searched by subset size up to `cap` total vertices.

    Returns (size, s_mask, components) or None.  In collection mode
    (collect_size set) instead returns every separator of exactly that size
    leaving exactly collect_c components.
    """
    base = forced.bit_count()
    collected: list[int] = []
    if base > cap:
        return collected if collect_size is not None else None
    alive = full & ~forced
    budget.spend()
    cand, pair = _candidate_mask(g, handle, alive, seed_mask)
    if pair is None:
        # forced alone already separates the seeds
        if collect_size is not None:
            if base == collect_size and kernels.count_components(handle, alive) == collect_c:
                collected.append(forced)
            return collected
        return base, forced, kernels.count_components(handle, alive)
    lo = 1
    if cap - base >= 3:
        budget.spend()
        flow = local_vertex_connectivity(g, alive, pair[0], pair[1], limit=cap - base + 1)
        if base + flow > cap:
            return collected if collect_size is not None else None
        lo = flow
    cand_list = vertices_of(cand)
    sizes = (
        range(lo, cap - base + 1)
        if collect_size is None
        else range(collect_size - base, collect_size - base + 1)
    )
    for extra in sizes:
        if extra < 1 or extra > len(cand_list):
            continue
        for combo in combinations(cand_list, extra):
            budget.spend()
            extra_mask = mask_of(combo)
            if kernels.seeds_separated(handle, alive & ~extra_mask, seed_mask):
                s_mask = forced | extra_mask
                if collect_size is not None:
                    if kernels.count_components(handle, full & ~s_mask) == collect_c:
                        collected.append(s_mask)
                else:
                    return base + extra, s_mask, kernels.count_components(handle, full & ~s_mask)
    return collected if collect_size is not None else None


def toughness_exact(
    g: Graph,
    budget: int = 10**9,
    want_minimizers: bool = False,
    threads: int = 1,
    on_improve=None,
) -> ToughnessCertificate:
    """Exact toughness with witness.

    Strategy: c(G - S) never exceeds the independence number, so for each
    component count c from 2 to alpha the solver looks for the smallest S
    with c(G - S) >= c.  The c = 2 case is vertex connectivity by max-flow;
    for larger c every independent c-set seeds a separation, vertices
    adjacent to two seeds are forced into S, and the remainder is searched
    in order of size, pruned at |S| >= best * c and by a max-flow lower
    bound.  `budget` caps the number of component/separation checks; when it
    runs out the certificate reports exhaustive=False and the best value
    found so far.  `threads` splits the per-seed work; results do not depend
    on the thread count (given an ample budget).  `on_improve` is called
    with each successive best value.
    """
    if g.n == 0 or not is_connected(g):
        raise ValueError("toughness needs a connected graph")
    if _is_complete(g):
        raise ValueError("complete graph has no disconnecting set")
    handle = kernels.prepare(g.adj)
    full = (1 << g.n) - 1
    acct = _Budget(budget)

    kappa, vcut = vertex_connectivity(g)
    vcut_mask = mask_of(vcut)
    comp0, _ = components_after_removal(g, vcut_mask)
    best = Fraction(kappa, comp0)
    best_mask, best_c = vcut_mask, comp0
    if on_improve is not None:
        on_improve(best)

    alpha = max_independent_set(g).alpha
    exhaustive = True
    prev_lb = kappa  # lower bound on min |S| with c(G-S) >= current c

    def cap_now(c: int) -> int:
        # largest |S| that still improves on `best` at component count c
        return (best.numerator * c - 1) // best.denominator

    try:
        for c in range(3, alpha + 1):
            if prev_lb > cap_now(c):
                continue
            found_sizes: list[int] = []

            def handle_result(res) -> None:
                nonlocal best, best_mask, best_c
                if res is None:
                    return
                size, s_mask, cc = res
                value = Fraction(size, cc)
                if value < best:
                    best, best_mask, best_c = value, s_mask, cc
                    if on_improve is not None:
                        on_improve(best)
                found_sizes.append(size)

            if threads <= 1:
                for seed_mask, forced in _gen_seeds(g.adj, g.n, c, lambda: cap_now(c)):
                    acct.spend()
                    handle_result(
                        _min_separator(g, handle, full, seed_mask, forced, cap_now(c), acct)
                    )
            else:
                batch: list[tuple[int, int]] = []

                def flush() -> None:
                    with ThreadPoolExecutor(max_workers=threads) as pool:
                        results = list(
                            pool.map(
                                lambda sf: _min_separator(
                                    g, handle, full, sf[0], sf[1], cap_now(c), acct
                                ),
                                batch,
                            )
                        )
                    for res in results:
                        handle_result(res)
                    batch.clear()

                for seed_mask, forced in _gen_seeds(g.adj, g.n, c, lambda: cap_now(c)):
                    acct.spend()
                    batch.append((seed_mask, forced))
                    if len(batch) >= 256:
                        flush()
                if batch:
                    flush()
            # sound lower bound on g(c): unfound seeds had separators above
            # their caps, and caps never drop below the end-of-loop cap
            lb_c = cap_now(c) + 1
            if found_sizes:
                lb_c = min(lb_c, min(found_sizes))
            prev_lb = max(prev_lb, lb_c)
    except _BudgetExhausted:
        exhaustive = False

    minimizers = None
    if want_minimizers and exhaustive:
        try:
            masks = _collect_minimizers(g, handle, full, best, alpha, acct)
            minimizers = tuple(sorted(vertices_of(m) for m in masks))
        except _BudgetExhausted:
            exhaustive = False
    witness = vertices_of(best_mask)
    if minimizers:
        witness = minimizers[0]
        count, _ = components_after_removal(g, mask_of(witness))
        best_c = count
    return ToughnessCertificate(
        value=best,
        witness=witness,
        components=best_c,
        exhaustive=exhaustive,
        evaluations=acct.used,
        minimizers=minimizers,
    )


_SCAN_LIMIT_COMPILED = 22
_SCAN_LIMIT_PURE = 16


def _collect_minimizers(g: Graph, handle, full: int, best: Fraction, alpha: int,
                        acct: _Budget) -> set[int]:
    """Every S with |S| / c(G - S) == best, as masks.

    Full subset scan for small graphs, otherwise the seeded enumeration at
    the exact optimal size for each feasible component count.
    """
    scan_limit = _SCAN_LIMIT_COMPILED if kernels.BACKEND == "compiled" else _SCAN_LIMIT_PURE
    if g.n <= scan_limit:
        acct.spend(1 << g.n)
        return set(
            kernels.collect_ratio_scan(handle, g.n, best.numerator, best.denominator)
        )
    masks: set[int] = set()
    for c in range(2, alpha + 1):
        if (best.numerator * c) % best.denominator:
            continue
        target = best.numerator * c // best.denominator
        for seed_mask, forced in _gen_seeds(g.adj, g.n, c, lambda: target):
            acct.spend()
            found = _min_separator(
                g, handle, full, seed_mask, forced, target, acct,
                collect_size=target, collect_c=c,
            )
            masks.update(found)
    return masks


@dataclass(frozen=True)
class BoundsReport:
    """Spectral and connectivity bounds on toughness for a connected regular
    graph.  Boolean threshold conditions use a 1e-9 guard, so sitting exactly
    on a threshold does not count as beating it."""

    n: int
    k: int
    lambda2: float
    lambda_min: float
    lambda_abs: float
    alon_lower: float
    brouwer_lower: float
    liu_chen_one_tough: bool
    tau_lower: Fraction | float
    theta_one_tough: bool
    hoffman_upper: Fraction | None
    neighborhood_upper: Fraction | None


_EPS = 1e-9


def bounds(g: Graph) -> BoundsReport:
    """Evaluate the toughness bounds; needs a connected k-regular graph with
    k >= 2.  kappa_prime enters the tau bound; the Hoffman upper bound is
    present only when the independence number attains the ratio bound."""
    k = regularity(g)
    if k is None or not is_connected(g):
        raise ValueError("bounds need a connected regular graph")
    if k < 2:
        raise ValueError(f"bounds need degree at least 2, got {k}")
    sp = spectrum(g)
    lam2, lam_min, lam_abs = lambda_summary(sp, k)
    alon = (k * k / (k * lam_abs + lam_abs * lam_abs) - 1.0) / 3.0
    brouwer = k / lam_abs - 2.0
    if k % 2 == 0:
        liu_chen = lam2 < k - 1 + 3.0 / (k + 1) - _EPS
    else:
        liu_chen = lam2 < k - 1 + 2.0 / (k + 1) - _EPS
    kprime, _ = edge_connectivity(g)
    tau_flow = Fraction(kprime, k)
    tau_spectral = (k - lam2) * (k + 1) / k
    tau_lower: Fraction | float = tau_flow if tau_flow <= tau_spectral else tau_spectral
    theta_ok = lam2 < theta(k) - _EPS
    hoffman = hoffman_equality_upper(g)
    neigh = _neighborhood_upper(g, k)
    return BoundsReport(
        n=g.n,
        k=k,
        lambda2=lam2,
        lambda_min=lam_min,
        lambda_abs=lam_abs,
        alon_lower=alon,
        brouwer_lower=brouwer,
        liu_chen_one_tough=liu_chen,
        tau_lower=tau_lower,
        theta_one_tough=theta_ok,
        hoffman_upper=hoffman[0] if hoffman else None,
        neighborhood_upper=neigh,
    )


def _neighborhood_upper(g: Graph, k: int) -> Fraction | None:
    """Best toughness upper bound of the form |N(v)| / c(G - N(v)); None when
    no neighbourhood removal disconnects (complete graphs)."""
    best = None
    for v in range(g.n):
        count, _ = components_after_removal(g, g.adj[v])
        if count >= 2:
            val = Fraction(k, count)
            if best is None or val < best:
                best = val
    return best


def hoffman_equality_upper(g: Graph) -> tuple[Fraction, tuple[int, ...]] | None:
    """When the independence number attains the Hoffman ratio bound, removing
    the complement of a maximum independent set leaves alpha singletons, so
    toughness <= (n - alpha) / alpha = k / (-lambda_min).

    Returns (bound, witness set to remove) with witness the complement of the
    lexicographically smallest maximum independent set, after verifying the
    removal really leaves alpha components; None when equality fails."""
    ratio = hoffman_ratio_bound(g)
    if not isinstance(ratio, Fraction):
        return None
    res = max_independent_set(g, enumerate_all=True)
    if res.alpha < 2 or res.alpha != ratio:
        return None
    s_mask = ((1 << g.n) - 1) & ~mask_of(res.witness)
    count, _ = components_after_removal(g, s_mask)
    if count != res.alpha:
        raise AssertionError("independent set complement did not isolate the set")
    return Fraction(g.n - res.alpha, res.alpha), vertices_of(s_mask)


@dataclass(frozen=True)
class MinimizerReport:
    """Each optimal set labeled vertex-neighborhood / mis-complement / both /
    other, plus counts."""

    entries: tuple[tuple[tuple[int, ...], str], ...]
    neighborhoods: int
    mis_complements: int
    both: int
    other: int

    @property
    def other_empty(self) -> bool:
        return self.other == 0


def classify_minimizers(g: Graph, minimizers) -> MinimizerReport:
    """Label every optimal set against the two paper-family shapes: open
    vertex neighbourhoods and complements of maximum independent sets."""
    neighborhoods = {g.adj[v] for v in range(g.n)}
    full = (1 << g.n) - 1
    mis = max_independent_set(g, enumerate_all=True)
    complements = {full & ~mask_of(s) for s in mis.all_maximum}
    entries = []
    counts = {"vertex-neighborhood": 0, "mis-complement": 0, "both": 0, "other": 0}
    for witness in minimizers:
        mask = mask_of(witness)
        is_n = mask in neighborhoods
        is_c = mask in complements
        label = (
            "both" if is_n and is_c
            else "vertex-neighborhood" if is_n
            else "mis-complement" if is_c
            else "other"
        )
        counts[label] += 1
        entries.append((tuple(witness), label))
    return MinimizerReport(
        entries=tuple(entries),
        neighborhoods=counts["vertex-neighborhood"],
        mis_complements=counts["mis-complement"],
        both=counts["both"],
        other=counts["other"],
    )
