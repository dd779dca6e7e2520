"""Pure-Python bitset kernels.

Graphs are given as a sequence ``adj`` of integer bitmasks, one row per
vertex; ``alive`` masks select the surviving vertex set.  These functions
are the hot inner loops of the toughness solvers; toughgraph.kernels picks
this module or the compiled twin (_ckernels) at import time.  Unlike the
compiled twin, this module accepts graphs of any size.
"""

BACKEND = "python"


def reach_mask(adj, alive, start):
    """Bitmask of the component of `start` inside `alive` (start must be alive)."""
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp


def count_components(adj, alive):
    """Number of connected components induced by the `alive` mask."""
    count = 0
    rem = alive
    while rem:
        v = (rem & -rem).bit_length() - 1
        rem &= ~reach_mask(adj, alive, v)
        count += 1
    return count


def seeds_separated(adj, alive, seed_mask):
    """True iff the alive seed vertices lie in pairwise distinct components."""
    rem = seed_mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = reach_mask(adj, alive, v)
        if (comp & seed_mask).bit_count() != 1:
            return False
        rem &= ~comp
    return True


def best_ratio_scan(adj, n):
    """Scan every vertex subset S; return (|S|, c) minimising |S|/c(G - S).

    Only subsets leaving at least two components count.  Returns None when no
    subset disconnects the graph (complete graphs).  2^n iterations, no
    pruning: this is the naive reference the optimised solver is checked
    against.
    """
    full = (1 << n) - 1
    best_s = best_c = 0
    found = False
    for s_mask in range(full + 1):
        alive = full ^ s_mask
        if not alive:
            continue
        c = count_components(adj, alive)
        if c >= 2:
            s = s_mask.bit_count()
            if not found or s * best_c < best_s * c:
                best_s, best_c, found = s, c, True
    if not found:
        return None
    return best_s, best_c


def collect_ratio_scan(adj, n, num, den):
    """All subset masks S with c(G - S) >= 2 and |S|/c(G - S) == num/den."""
    full = (1 << n) - 1
    out = []
    for s_mask in range(full + 1):
        alive = full ^ s_mask
        if not alive:
            continue
        c = count_components(adj, alive)
        if c >= 2 and s_mask.bit_count() * den == num * c:
            out.append(s_mask)
    return out
