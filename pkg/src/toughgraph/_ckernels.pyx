# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels for graphs on at most 64 vertices.

Mirrors _pykernels exactly; toughgraph.kernels dispatches between the two.
Adjacency rows arrive as a contiguous uint64 array.
"""

BACKEND = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline unsigned long long _reach(const unsigned long long *adj,
                                      unsigned long long alive,
                                      int start) noexcept nogil:
    cdef unsigned long long comp = (<unsigned long long> 1) << start
    cdef unsigned long long frontier = comp
    cdef unsigned long long nxt, f
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = __builtin_ctzll(f)
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp


cdef inline int _count(const unsigned long long *adj,
                       unsigned long long alive) noexcept nogil:
    cdef int count = 0
    cdef unsigned long long rem = alive
    cdef int v
    while rem:
        v = __builtin_ctzll(rem)
        rem &= ~_reach(adj, alive, v)
        count += 1
    return count


def reach_mask(const unsigned long long[::1] adj, unsigned long long alive, int start):
    """Bitmask of the component of `start` inside `alive` (start must be alive)."""
    cdef unsigned long long comp
    with nogil:
        comp = _reach(&adj[0], alive, start)
    return comp


def count_components(const unsigned long long[::1] adj, unsigned long long alive):
    """Number of connected components induced by the `alive` mask."""
    cdef int count
    with nogil:
        count = _count(&adj[0], alive)
    return count


def seeds_separated(const unsigned long long[::1] adj, unsigned long long alive,
                    unsigned long long seed_mask):
    """True iff the alive seed vertices lie in pairwise distinct components."""
    cdef unsigned long long rem = seed_mask
    cdef unsigned long long comp
    cdef int v, ok = 1
    with nogil:
        while rem:
            v = __builtin_ctzll(rem)
            comp = _reach(&adj[0], alive, v)
            if __builtin_popcountll(comp & seed_mask) != 1:
                ok = 0
                break
            rem &= ~comp
    return ok == 1


def best_ratio_scan(const unsigned long long[::1] adj, int n):
    """Scan every vertex subset S; return (|S|, c) minimising |S|/c(G - S).

    Only subsets leaving at least two components count.  Returns None when no
    subset disconnects the graph (complete graphs).  2^n iterations, no
    pruning: this is the naive reference the optimised solver is checked
    against.
    """
    cdef unsigned long long full = ((<unsigned long long> 1) << n) - 1
    cdef unsigned long long s_mask = 0
    cdef unsigned long long alive
    cdef long long best_s = 0, best_c = 0, s, c
    cdef int found = 0
    with nogil:
        while True:
            alive = full ^ s_mask
            if alive:
                c = _count(&adj[0], alive)
                if c >= 2:
                    s = __builtin_popcountll(s_mask)
                    if not found or s * best_c < best_s * c:
                        best_s = s
                        best_c = c
                        found = 1
            if s_mask == full:
                break
            s_mask += 1
    if not found:
        return None
    return best_s, best_c


def collect_ratio_scan(const unsigned long long[::1] adj, int n,
                       long long num, long long den):
    """All subset masks S with c(G - S) >= 2 and |S|/c(G - S) == num/den."""
    cdef unsigned long long full = ((<unsigned long long> 1) << n) - 1
    cdef unsigned long long s_mask = 0
    cdef unsigned long long alive
    cdef long long c
    out = []
    while True:
        alive = full ^ s_mask
        if alive:
            c = _count(&adj[0], alive)
            if c >= 2 and __builtin_popcountll(s_mask) * den == num * c:
                out.append(s_mask)
        if s_mask == full:
            break
        s_mask += 1
    return out
