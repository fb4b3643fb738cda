"""Genus-indexed enumeration of GNS via the semigroup tree.

The tree is rooted at N^d.  A node S of genus g has one child per minimal
generator x that comes after every gap of S in the graded total order: the
child is S with x turned into a gap.  Re-adjoining the order-maximal gap
recovers the unique parent, so every GNS of genus g appears exactly once at
depth g.

Minimal generators are maintained incrementally along tree edges: removing x
keeps every other minimal generator minimal, and the only possible new ones
are x + m for m a minimal generator, plus 3x.  A candidate c is composite in
the child iff c - m is a nonzero member for some m in the old generators or
the candidate set (both consist of members of the child).

Deduplication up to coordinate permutation uses the canonical form (smallest
graded-sorted gap list over all permutations).  Pruning at non-canonical
nodes is complete: removing the order-maximal gap from a canonical gap set
leaves a canonical gap set, so canonical nodes form a subtree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterator, Optional

from . import invariants, lattice
from .core import Gns, permute_gns, serial_key, trivial_gns
from .errors import BudgetExceeded, UsageError
from .lattice import Point, graded_key


@dataclass
class Budget:
    """Node-count and wall-clock caps; exceeding either raises BudgetExceeded."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    def charge(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exceeded", nodes=self.nodes)
        if self.max_seconds is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.started > self.max_seconds:
                raise BudgetExceeded(f"time budget {self.max_seconds}s exceeded", nodes=self.nodes)


@dataclass(frozen=True)
class EnumerationQuery:
    dim: int
    genus_min: int
    genus_max: int
    edim_filter: Optional[int] = None
    class_filter: Optional[str] = None  # "symmetric" | "almost" | "pseudo"
    up_to_permutation: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise UsageError(f"dimension must be >= 1, got {self.dim}")
        if self.genus_min > self.genus_max or self.genus_min < 0:
            raise UsageError(f"bad genus range [{self.genus_min}, {self.genus_max}]")
        if self.class_filter not in (None, "symmetric", "almost", "pseudo"):
            raise UsageError(f"unknown class filter {self.class_filter!r}")


@dataclass(frozen=True)
class CountRow:
    genus: int
    counts: dict  # keys "AS", "Sym", "PSym"


def children(s: Gns) -> list[Gns]:
    """Child semigroups in deterministic (graded) order of the removed generator."""
    mg = s.minimal_generators
    top = max((graded_key(h) for h in s.gaps), default=None)
    out = []
    for x in sorted(mg, key=graded_key):
        if top is not None and graded_key(x) <= top:
            continue
        out.append(_remove_generator(s, x, mg))
    return out


def _remove_generator(s: Gns, x: Point, mg: frozenset[Point]) -> Gns:
    child_gaps = s.gaps | {x}
    keep = [m for m in mg if m != x]
    candidates = {lattice.add(x, m) for m in mg}
    candidates.add(lattice.scale(3, x))
    probes = keep + sorted(candidates, key=graded_key)
    new_mg = set(keep)
    for c in candidates:
        if not _composite_in(c, probes, child_gaps):
            new_mg.add(c)
    return Gns(s.dim, child_gaps, frozenset(new_mg))


def _composite_in(c: Point, probes: list[Point], gaps: frozenset[Point]) -> bool:
    for m in probes:
        if m == c:
            continue
        rest = tuple(a - b for a, b in zip(c, m))
        ok = True
        nonzero = False
        for v in rest:
            if v < 0:
                ok = False
                break
            if v:
                nonzero = True
        if ok and nonzero and rest not in gaps:
            return True
    return False


def is_canonical(s: Gns) -> bool:
    if s.dim == 1:
        return True
    key = serial_key(s.gaps)
    for perm in lattice.all_permutations(s.dim):
        pk = serial_key(lattice.permute_point(p, perm) for p in s.gaps)
        if pk < key:
            return False
    return True


def canonical_form(s: Gns) -> Gns:
    """The coordinate permutation of s with the smallest serialized gap list."""
    best, best_key = s, serial_key(s.gaps)
    for perm in lattice.all_permutations(s.dim):
        pk = serial_key(lattice.permute_point(p, perm) for p in s.gaps)
        if pk < best_key:
            best, best_key = permute_gns(s, perm), pk
    return best


def orbit_size(s: Gns) -> int:
    """Number of distinct gap sets in the coordinate-permutation orbit."""
    return len({serial_key(lattice.permute_point(p, perm) for p in s.gaps)
                for perm in lattice.all_permutations(s.dim)})


def iter_tree(dim: int, genus_max: int, *, prune_to_canonical: bool = False,
              budget: Optional[Budget] = None, root: Optional[Gns] = None) -> Iterator[Gns]:
    """Depth-first walk of the semigroup tree up to the given genus."""
    stack = [trivial_gns(dim) if root is None else root]
    while stack:
        s = stack.pop()
        if budget is not None:
            budget.charge()
        yield s
        if s.genus < genus_max:
            kids = children(s)
            if prune_to_canonical:
                kids = [k for k in kids if is_canonical(k)]
            stack.extend(reversed(kids))


def _matches_class(s: Gns, class_filter: Optional[str]) -> bool:
    if class_filter is None:
        return True
    if not s.gaps:
        return False
    if class_filter == "symmetric":
        return invariants.is_symmetric_by_type(s)
    if class_filter == "almost":
        return invariants.is_almost_symmetric(s)
    return invariants.is_pseudo_symmetric(s)


def enumerate_by_genus(q: EnumerationQuery, budget: Optional[Budget] = None) -> list[Gns]:
    """Every GNS matching the query, sorted by (genus, serialized gap list)."""
    out = []
    try:
        for s in iter_tree(q.dim, q.genus_max, budget=budget):
            if s.genus < q.genus_min:
                continue
            if q.edim_filter is not None and len(s.minimal_generators) != q.edim_filter:
                continue
            if not _matches_class(s, q.class_filter):
                continue
            out.append(s)
    except BudgetExceeded as e:
        e.partial = sorted(out, key=lambda s: (s.genus, serial_key(s.gaps)))
        raise
    if q.up_to_permutation:
        seen = {}
        for s in out:
            c = canonical_form(s)
            seen.setdefault((c.genus, serial_key(c.gaps)), c)
        out = list(seen.values())
    return sorted(out, key=lambda s: (s.genus, serial_key(s.gaps)))


def _classify(s: Gns) -> tuple[bool, bool, bool]:
    """(almost, symmetric, pseudo) with the cheap |FA| = 1 filter first."""
    fa = invariants.frobenius_allowable(s)
    if len(fa) != 1:
        return False, False, False
    almost = invariants.is_almost_symmetric(s)
    if not almost:
        return False, False, False
    t = invariants.semigroup_type(s)
    return True, t == 1, t == 2


def _count_walk(dim: int, genus_max: int, edim: int, root: Optional[Gns],
                budget: Optional[Budget]) -> dict[int, list[int]]:
    counts: dict[int, list[int]] = {}
    for s in iter_tree(dim, genus_max, prune_to_canonical=True, budget=budget, root=root):
        if not s.gaps or len(s.minimal_generators) != edim:
            continue
        almost, sym, psym = _classify(s)
        if not almost:
            continue
        orbit = orbit_size(s)
        row = counts.setdefault(s.genus, [0, 0, 0])
        row[0] += orbit
        if sym:
            row[1] += orbit
        if psym:
            row[2] += orbit
    return counts


def _count_worker(args):
    gaps, mg, dim, genus_max, edim, max_nodes, max_seconds = args
    root = Gns(dim, frozenset(gaps), frozenset(mg))
    budget = None
    if max_nodes is not None or max_seconds is not None:
        budget = Budget(max_nodes=max_nodes, max_seconds=max_seconds)
    try:
        return _count_walk(dim, genus_max, edim, root, budget), None
    except BudgetExceeded as e:
        return None, str(e)


def count_table(dim: int, genus_max: int, edim: int, *, workers: int = 1,
                budget: Optional[Budget] = None) -> list[CountRow]:
    """Per-genus counts of almost symmetric / symmetric / pseudo-symmetric
    semigroups of the given embedding dimension, permutations included.

    Walks canonical representatives only and adds each one's orbit size; the
    classification is permutation-invariant, so the totals count all
    coordinate permutations.
    """
    if edim not in (2 * dim, 2 * dim + 1, 2 * dim + 2):
        raise UsageError(f"edim must be one of {2*dim}, {2*dim+1}, {2*dim+2} for dim {dim}")
    if workers <= 1:
        counts = _count_walk(dim, genus_max, edim, None, budget)
    else:
        counts = _parallel_count(dim, genus_max, edim, workers, budget)
    return [
        CountRow(g, {
            "AS": counts.get(g, [0, 0, 0])[0],
            "Sym": counts.get(g, [0, 0, 0])[1],
            "PSym": counts.get(g, [0, 0, 0])[2],
        })
        for g in range(1, genus_max + 1)
    ]


def _parallel_count(dim: int, genus_max: int, edim: int, workers: int,
                    budget: Optional[Budget]) -> dict[int, list[int]]:
    split = min(4, genus_max)
    frontier: list[Gns] = []
    counts: dict[int, list[int]] = {}
    for s in iter_tree(dim, split, prune_to_canonical=True, budget=budget):
        if s.genus == split and s.genus < genus_max:
            frontier.append(s)
        if s.gaps and len(s.minimal_generators) == edim:
            almost, sym, psym = _classify(s)
            if almost:
                orbit = orbit_size(s)
                row = counts.setdefault(s.genus, [0, 0, 0])
                row[0] += orbit
                row[1] += orbit if sym else 0
                row[2] += orbit if psym else 0
    per_worker_nodes = None
    per_worker_seconds = None
    if budget is not None:
        if budget.max_nodes is not None:
            per_worker_nodes = max(1, (budget.max_nodes - budget.nodes) // max(1, len(frontier)))
        per_worker_seconds = budget.max_seconds
    args = [
        (tuple(s.gaps), tuple(s.minimal_generators), dim, genus_max, edim,
         per_worker_nodes, per_worker_seconds)
        for s in frontier
    ]
    with Pool(workers) as pool:
        for sub, err in pool.map(_count_worker, args):
            if err is not None:
                raise BudgetExceeded(err, partial=counts)
            for g, row in sub.items():
                # the subtree root (genus == split) was already counted above
                if g == split:
                    continue
                acc = counts.setdefault(g, [0, 0, 0])
                for i in range(3):
                    acc[i] += row[i]
    return counts


@dataclass(frozen=True)
class TypeScan:
    max_type: int
    attaining: tuple[Gns, ...]
    counterexamples: tuple[Gns, ...]  # almost symmetric with type > 3


def conjecture_scan(dim: int, genus_max: int, *, budget: Optional[Budget] = None) -> TypeScan:
    """Scan almost symmetric semigroups of embedding dimension 2*dim + 2 and
    report the largest type encountered, with the semigroups attaining it."""
    edim = 2 * dim + 2
    max_type = 0
    attaining: list[Gns] = []
    for s in iter_tree(dim, genus_max, prune_to_canonical=True, budget=budget):
        if not s.gaps or len(s.minimal_generators) != edim:
            continue
        if not invariants.is_almost_symmetric(s):
            continue
        t = invariants.semigroup_type(s)
        if t > max_type:
            max_type = t
            attaining = [s]
        elif t == max_type:
            attaining.append(s)
    attaining.sort(key=lambda s: (s.genus, serial_key(s.gaps)))
    bad = tuple(s for s in attaining if max_type > 3)
    return TypeScan(max_type, tuple(attaining), bad)


def edim_bound_audit(dim: int, genus_max: int, *, budget: Optional[Budget] = None) -> bool:
    """True iff every enumerated proper GNS has embedding dimension >= 2*dim."""
    for s in iter_tree(dim, genus_max, budget=budget):
        if s.gaps and len(s.minimal_generators) < 2 * dim:
            return False
    return True
