"""Dimension-1 (classical numerical semigroup) helpers.

A flat integer sieve is much faster than the d-dimensional machinery, and the
parametric families constantly consult Frobenius numbers and residues of
their axis semigroups, so numerical semigroups get their own lightweight
type with a conversion bridge to the d=1 general representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DimensionError,
    LemmaViolation,
    NotMinimalTriple,
    NotNumericalSemigroup,
)


@dataclass(frozen=True)
class NumericalSg:
    """A numerical semigroup, canonically represented by its finite gap set."""

    generators: tuple[int, ...]
    gaps: frozenset[int]
    frobenius: int  # max gap, -1 when there are no gaps

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps


def ns_from_generators(gens) -> NumericalSg:
    """Sieve the semigroup generated by positive integers with gcd 1.

    The sieve is grown until it ends with a run of min(gens) consecutive
    members; past such a run every integer is a member, so the gap set is
    certified complete.
    """
    gs = sorted({int(g) for g in gens})
    if not gs or gs[0] <= 0:
        raise NotNumericalSemigroup(f"generators must be positive: {gens!r}")
    if math.gcd(*gs) != 1:
        raise NotNumericalSemigroup(f"gcd of {gs!r} is not 1")
    m = gs[0]
    limit = 2 * gs[-1] + m + 1
    while True:
        member = bytearray(limit + 1)
        member[0] = 1
        for n in range(1, limit + 1):
            for g in gs:
                if g <= n and member[n - g]:
                    member[n] = 1
                    break
        if all(member[limit - m + 1 : limit + 1]):
            break
        limit *= 2
    gaps = frozenset(n for n in range(1, limit + 1) if not member[n])
    return NumericalSg(tuple(gs), gaps, max(gaps) if gaps else -1)


def ns_genus(ns: NumericalSg) -> int:
    return len(ns.gaps)


def ns_minimal_generators(ns: NumericalSg) -> tuple[int, ...]:
    """Drop every generator that is a sum of two nonzero members."""
    out = []
    for g in ns.generators:
        if not any(a in ns and (g - a) in ns for a in range(1, g)):
            out.append(g)
    return tuple(out)


def pair_member(n: int, x: int, y: int) -> bool:
    """Membership test for the submonoid of N generated by {x, y}."""
    if n < 0:
        return False
    return any((n - b * y) % x == 0 for b in range(n // y + 1))


def pair_genus_check(a: int, b: int) -> tuple[int, int]:
    """Frobenius number and genus of <a, b>, with the genus identity asserted.

    For coprime a, b >= 2 the gap count always equals (F + 1) / 2; a failure
    of that identity means the sieve is broken.
    """
    a, b = int(a), int(b)
    if a < 2 or b < 2 or math.gcd(a, b) != 1:
        raise NotNumericalSemigroup(f"need coprime integers >= 2, got ({a}, {b})")
    ns = ns_from_generators((a, b))
    frob, genus = ns.frobenius, len(ns.gaps)
    if 2 * genus != frob + 1:
        raise LemmaViolation(f"<{a},{b}>: genus {genus} != (F+1)/2 with F={frob}")
    return frob, genus


def is_minimal_triple(a1: int, a2: int, a3: int) -> bool:
    """Do the three integers minimally generate a numerical semigroup?"""
    trip = sorted((int(a1), int(a2), int(a3)))
    if trip[0] < 2 or len(set(trip)) != 3:
        return False
    if math.gcd(math.gcd(trip[0], trip[1]), trip[2]) != 1:
        return False
    x, y, z = trip
    return not (pair_member(x, y, z) or pair_member(y, x, z) or pair_member(z, x, y))


def _check_triple(a1, a2, a3) -> tuple[int, int, int]:
    if not is_minimal_triple(a1, a2, a3):
        raise NotMinimalTriple(f"({a1}, {a2}, {a3}) is not a minimal generating triple")
    return int(a1), int(a2), int(a3)


def three_gen_symmetry(a1: int, a2: int, a3: int) -> tuple[tuple[int, int, int], bool]:
    """Classical symmetry test for three-generated numerical semigroups.

    c_i is the least positive multiplier with c_i * a_i inside the semigroup
    of the other two generators; the semigroup is symmetric exactly when two
    of the products c_i * a_i agree.
    """
    a = _check_triple(a1, a2, a3)
    cs = []
    for i in range(3):
        x, y = a[(i + 1) % 3], a[(i + 2) % 3]
        lam = 1
        while not pair_member(lam * a[i], x, y):
            lam += 1
        cs.append(lam)
    prods = [c * v for c, v in zip(cs, a)]
    symmetric = len(set(prods)) < 3
    return (cs[0], cs[1], cs[2]), symmetric


def ns_pseudo_frobenius(ns: NumericalSg) -> frozenset[int]:
    """Gaps h with h + s a member for every nonzero member s.

    Checking the generators suffices: membership propagates along sums."""
    gens = ns_minimal_generators(ns)
    return frozenset(h for h in ns.gaps if all((h + g) in ns for g in gens))


def ns_type(ns: NumericalSg) -> int:
    return len(ns_pseudo_frobenius(ns))


def three_gen_type_bound(a1: int, a2: int, a3: int) -> int:
    """Type of the semigroup generated by a minimal triple; always at most 2."""
    a = _check_triple(a1, a2, a3)
    t = ns_type(ns_from_generators(a))
    if t > 2:
        raise LemmaViolation(f"type of <{a[0]},{a[1]},{a[2]}> computed as {t} > 2")
    return t


def ns_to_gns(ns: NumericalSg):
    """Bridge to the general d=1 representation."""
    from . import core

    gaps = frozenset((h,) for h in ns.gaps)
    mg = frozenset((g,) for g in ns_minimal_generators(ns))
    return core.Gns(1, gaps, mg)


def gns_to_ns(s) -> NumericalSg:
    """Bridge back from a 1-dimensional general semigroup."""
    if s.dim != 1:
        raise DimensionError(f"expected dimension 1, got {s.dim}")
    gaps = frozenset(h[0] for h in s.gaps)
    gens = tuple(sorted(g[0] for g in s.minimal_generators))
    return NumericalSg(gens, gaps, max(gaps) if gaps else -1)
