"""Independent oracles the tests pit the library against.

Everything here is deliberately naive and shares no code path with the
package: a graded dynamic-programming closure (the library saturates numpy
grids instead), a definition-level minimal-generator search, a
definition-level pseudo-Frobenius check over all boxed members, and an
exhaustive census of complement-closed gap sets in a box.
"""

import itertools


def graded(pts):
    return sorted(pts, key=lambda p: (sum(p), p))


def closure_dp(gens, bound):
    """Members of <gens> inside [0, bound], by one graded DP pass."""
    dim = len(bound)
    members = {tuple([0] * dim)}
    for p in graded(itertools.product(*[range(b + 1) for b in bound])):
        if p in members:
            continue
        for g in gens:
            if all(x >= y for x, y in zip(p, g)):
                if tuple(x - y for x, y in zip(p, g)) in members:
                    members.add(p)
                    break
    return members


def gaps_from_generators(gens, bound):
    """Gap set of <gens> within the box; caller guarantees the box is ample."""
    members = closure_dp(gens, bound)
    return {
        p
        for p in itertools.product(*[range(b + 1) for b in bound])
        if p not in members
    }


def brute_minimal_generators(dim, gaps):
    """Definition-level search over the doubled conductor box."""
    gapset = set(gaps)
    if not gapset:
        return {tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)}
    conductor = [max(h[i] for h in gapset) + 1 for i in range(dim)]
    box = itertools.product(*[range(2 * c) for c in conductor])
    members = [p for p in box if p not in gapset and any(p)]
    mset = set(members)

    def splits(p):
        for a in members:
            if a != p and all(x <= y for x, y in zip(a, p)):
                rest = tuple(y - x for x, y in zip(a, p))
                if any(rest) and rest not in gapset:
                    return True
        return False

    return {p for p in members if not splits(p)}


def definition_pseudo_frobenius(dim, gaps):
    """PF via the full definition: test h + s for every member s of the box
    [0, conductor + max gap coordinate]; any member beyond the box pushes
    h + s past the conductor in some coordinate, where everything belongs."""
    gapset = set(gaps)
    top = [max(h[i] for h in gapset) for i in range(dim)]
    bound = [2 * t + 1 for t in top]
    members = [
        p
        for p in itertools.product(*[range(b + 1) for b in bound])
        if p not in gapset and any(p)
    ]
    out = set()
    for h in gapset:
        if all(tuple(a + b for a, b in zip(h, s)) not in gapset for s in members):
            out.add(h)
    return out


def maximal_elements(points):
    pts = set(points)
    return {
        p
        for p in pts
        if not any(q != p and all(x <= y for x, y in zip(p, q)) for q in pts)
    }


def census_box(dim, genus_cap):
    """Count complement-closed gap sets of each size up to genus_cap.

    Gap coordinates of a genus-g set are bounded by 2g - 1 (the axis line
    below an axis gap pairs up into members and gaps the classical way, and
    off-axis gaps are bounded by g), so the box [0, 2*genus_cap - 1]^dim
    contains every candidate.  Points are decided in graded order; a point
    may become a gap only if each of its splittings uses an earlier gap.
    """
    side = 2 * genus_cap - 1
    pts = [p for p in graded(itertools.product(*[range(side + 1)] * dim)) if any(p)]
    counts = {g: 0 for g in range(genus_cap + 1)}

    def rec(i, gapset):
        if i == len(pts):
            counts[len(gapset)] += 1
            return
        p = pts[i]
        rec(i + 1, gapset)
        if len(gapset) == genus_cap:
            return
        for q in itertools.product(*[range(c + 1) for c in p]):
            if q == p or not any(q):
                continue
            if q not in gapset and tuple(a - b for a, b in zip(p, q)) not in gapset:
                return
        rec(i + 1, gapset | {p})

    rec(0, frozenset())
    return counts
