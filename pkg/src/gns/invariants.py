"""Pseudo-Frobenius and maximal-gap invariants, symmetry classification.

Two independent symmetry routes are kept deliberately separate so they can
cross-validate each other: the type route counts pseudo-Frobenius elements,
the counting route looks for a gap f with 2 * genus = prod(f_i + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import lattice
from .core import Gns
from .errors import TrivialSemigroup
from .lattice import Point, graded_key

_GRID_THRESHOLD = 64  # genus above which maximal gaps use the grid path


@dataclass(frozen=True)
class InvariantReport:
    """All gap-set invariants of one semigroup in a single bundle."""

    genus: int
    pf: tuple[Point, ...]
    fa: tuple[Point, ...]
    type: int
    symmetric: bool
    almost_symmetric: bool
    pseudo_symmetric: bool
    frobenius_element: Optional[Point]
    trivial: bool


def _require_gaps(s: Gns) -> None:
    if not s.gaps:
        raise TrivialSemigroup("the full monoid N^d has no gap invariants")


def pseudo_frobenius(s: Gns) -> frozenset[Point]:
    """Gaps h with h + s in S for every nonzero member s.

    Testing h against the minimal generators suffices: membership propagates
    under addition of members, so h + (m_1 + ... + m_k) reduces to repeated
    single-generator steps.
    """
    _require_gaps(s)
    gaps = s.gaps
    mg = s.minimal_generators
    out = []
    for h in gaps:
        if all(tuple(a + b for a, b in zip(h, m)) not in gaps for m in mg):
            out.append(h)
    return frozenset(out)


def _maximal_gaps_grid(gaps: frozenset[Point], dim: int) -> frozenset[Point]:
    shape = tuple(max(h[i] for h in gaps) + 1 for i in range(dim))
    grid = np.zeros(shape, dtype=bool)
    for h in gaps:
        grid[h] = True
    # upper[p] = some gap lies at or above p (suffix-OR composed over all axes)
    upper = grid.copy()
    for axis in range(dim):
        upper = np.flip(np.logical_or.accumulate(np.flip(upper, axis=axis), axis=axis), axis=axis)

    def strictly_dominated(h: Point) -> bool:
        for i in range(dim):
            if h[i] + 1 < shape[i]:
                q = tuple(x + 1 if j == i else x for j, x in enumerate(h))
                if upper[q]:
                    return True
        return False

    return frozenset(h for h in gaps if not strictly_dominated(h))


def frobenius_allowable(s: Gns) -> frozenset[Point]:
    """Maximal gaps under the natural partial order (cached on the semigroup)."""
    _require_gaps(s)
    if s._fa is None:
        if s.genus > _GRID_THRESHOLD:
            s._fa = _maximal_gaps_grid(s.gaps, s.dim)
        else:
            s._fa = lattice.maximal_points(s.gaps)
    return s._fa


def semigroup_type(s: Gns) -> int:
    return len(pseudo_frobenius(s))


def is_symmetric_by_type(s: Gns) -> bool:
    return semigroup_type(s) == 1


def is_symmetric_by_criterion(s: Gns) -> bool:
    """Symmetry via the counting identity: some gap f has 2g = prod(f_i + 1)."""
    _require_gaps(s)
    target = 2 * s.genus
    for f in s.gaps:
        prod = 1
        for x in f:
            prod *= x + 1
        if prod == target:
            return True
    return False


def is_almost_symmetric(s: Gns) -> bool:
    """There is a unique maximal gap f and f - p is pseudo-Frobenius for
    every other pseudo-Frobenius element p."""
    fa = frobenius_allowable(s)
    if len(fa) != 1:
        return False
    (f,) = fa
    pf = pseudo_frobenius(s)
    for p in pf:
        if p == f:
            continue
        diff = lattice.sub(f, p)
        if diff is None or diff not in pf:
            return False
    return True


def is_pseudo_symmetric(s: Gns) -> bool:
    return is_almost_symmetric(s) and semigroup_type(s) == 2


def report(s: Gns) -> InvariantReport:
    """Consistent bundle of every invariant; N^d gets a distinct trivial report."""
    if not s.gaps:
        return InvariantReport(
            genus=0, pf=(), fa=(), type=0, symmetric=False,
            almost_symmetric=False, pseudo_symmetric=False,
            frobenius_element=None, trivial=True,
        )
    pf = pseudo_frobenius(s)
    fa = frobenius_allowable(s)
    t = len(pf)
    symmetric = t == 1
    almost = is_almost_symmetric(s)
    return InvariantReport(
        genus=s.genus,
        pf=tuple(sorted(pf, key=graded_key)),
        fa=tuple(sorted(fa, key=graded_key)),
        type=t,
        symmetric=symmetric,
        almost_symmetric=almost,
        pseudo_symmetric=almost and t == 2,
        frobenius_element=next(iter(fa)) if len(fa) == 1 else None,
        trivial=False,
    )


def report_to_document(r: InvariantReport) -> dict:
    return {
        "genus": r.genus,
        "type": r.type,
        "pf": [list(p) for p in r.pf],
        "fa": [list(p) for p in r.fa],
        "frobenius_element": list(r.frobenius_element) if r.frobenius_element else None,
        "symmetric": r.symmetric,
        "almost_symmetric": r.almost_symmetric,
        "pseudo_symmetric": r.pseudo_symmetric,
        "trivial": r.trivial,
    }
