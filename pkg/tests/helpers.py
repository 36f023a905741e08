"""Independent reference implementations used only by the tests.

Everything here is deliberately written against the set-based graph API and
itertools, never against the package's bitmask kernels, so agreement between
the two is meaningful evidence rather than a tautology.
"""

from itertools import combinations

from tdpoly.polynomial import IntPoly


def naive_counts(g):
    """Count totally dominating sets of each size by plain enumeration."""
    verts = list(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in verts}
    counts = [0] * (len(verts) + 1)
    for k in range(len(verts) + 1):
        for sub in combinations(verts, k):
            chosen = set(sub)
            if all(adj[v] & chosen for v in verts):
                counts[k] += 1
    return counts


def naive_tdp(g):
    return IntPoly(naive_counts(g))


def naive_tdp_filtered(g, keep):
    """Like naive_tdp but only sets for which keep(frozenset) is true count."""
    verts = list(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in verts}
    counts = [0] * (len(verts) + 1)
    for k in range(len(verts) + 1):
        for sub in combinations(verts, k):
            chosen = frozenset(sub)
            if all(adj[v] & chosen for v in verts) and keep(chosen):
                counts[k] += 1
    return IntPoly(counts)


def naive_gamma(g):
    """Smallest totally dominating set size, or None."""
    counts = naive_counts(g)
    for size, c in enumerate(counts):
        if c and size:
            return size
    return None
