"""The GNS data model: gap sets, membership, generators, construction.

A generalized numerical semigroup (GNS) is a submonoid of N^d whose
complement, the gap set, is finite.  The canonical representation here is the
gap set: membership is a set lookup and every invariant of interest is a
functional of the gaps.

Construction from generators runs an exact additive-closure computation on a
box and certifies finiteness of the complement with a shell test: once every
box point beyond bound_i - u_i on some axis is a member (u_i the least
pure-axis member of axis i), every point outside the box reduces into that
shell by subtracting u_i steps, so the box determines the gap set exactly.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

import numpy as np

from . import lattice
from .errors import (
    DimensionError,
    InvalidGap,
    NotAMonoid,
    NotGns,
    Undetermined,
)
from .lattice import Point, graded_key

_CELL_CAP = 64_000_000  # hard cap on closure-grid cells, guards runaway retries


class Gns:
    """A generalized numerical semigroup, immutable after construction.

    Use :func:`from_gaps` or :func:`from_generators`; the raw constructor
    trusts its arguments (the enumeration tree uses it with incrementally
    maintained generator sets).
    """

    __slots__ = ("dim", "gaps", "genus", "conductor", "_mg", "_serial", "_fa")

    def __init__(self, dim: int, gaps: frozenset[Point], mg: Optional[frozenset[Point]] = None):
        self.dim = dim
        self.gaps = gaps
        self.genus = len(gaps)
        if gaps:
            self.conductor = tuple(max(h[i] for h in gaps) + 1 for i in range(dim))
        else:
            self.conductor = (0,) * dim
        self._mg = mg
        self._serial = None
        self._fa = None

    def __eq__(self, other):
        return isinstance(other, Gns) and self.dim == other.dim and self.gaps == other.gaps

    def __hash__(self):
        return hash((self.dim, self.gaps))

    def __repr__(self):
        return f"Gns(dim={self.dim}, genus={self.genus})"

    def __contains__(self, x) -> bool:
        return membership(self, x)

    @property
    def sorted_gaps(self) -> tuple[Point, ...]:
        if self._serial is None:
            self._serial = tuple(sorted(self.gaps, key=graded_key))
        return self._serial

    @property
    def minimal_generators(self) -> frozenset[Point]:
        if self._mg is None:
            self._mg = _minimal_generators_from_gaps(self.dim, self.gaps, self.conductor)
        return self._mg


def membership(s: Gns, x) -> bool:
    """x belongs to S exactly when it is not a gap."""
    p = lattice.check_point(x, s.dim)
    return p not in s.gaps


def embedding_dimension(s: Gns) -> int:
    return len(s.minimal_generators)


def minimal_generators(s: Gns) -> frozenset[Point]:
    return s.minimal_generators


def validate_gapset(dim: int, candidate) -> bool:
    """Check complement-closure: every splitting of a gap into two nonzero
    points must use at least one gap.  Raises InvalidGap on malformed input,
    returns False when the complement is not additively closed."""
    pts = _check_gap_points(dim, candidate)
    for h in pts:
        for x in lattice.box_iter(h):
            if x == h or all(c == 0 for c in x):
                continue
            y = tuple(a - b for a, b in zip(h, x))
            if x not in pts and y not in pts:
                return False
    return True


def _check_gap_points(dim: int, candidate) -> frozenset[Point]:
    if dim < 1:
        raise DimensionError(f"dimension must be >= 1, got {dim}")
    pts = set()
    for p in candidate:
        q = tuple(int(x) for x in p)
        if len(q) != dim:
            raise InvalidGap(f"gap {p!r} does not have dimension {dim}")
        if any(x < 0 for x in q):
            raise InvalidGap(f"gap {p!r} has a negative coordinate")
        if all(x == 0 for x in q):
            raise InvalidGap("the zero vector cannot be a gap")
        pts.add(q)
    return frozenset(pts)


def from_gaps(dim: int, gaps) -> Gns:
    """Build a GNS from its gap set, validating complement-closure."""
    pts = _check_gap_points(dim, gaps)
    if not validate_gapset(dim, pts):
        raise NotAMonoid("complement of the given gap set is not closed under addition")
    return Gns(dim, pts)


def trivial_gns(dim: int) -> Gns:
    """N^d itself: no gaps, generated by the unit vectors."""
    if dim < 1:
        raise DimensionError(f"dimension must be >= 1, got {dim}")
    units = frozenset(lattice.unit(dim, i) for i in range(dim))
    return Gns(dim, frozenset(), units)


# ---------------------------------------------------------------------------
# construction from generators


def _axis_units(dim: int, gens: list[Point]) -> tuple[int, ...]:
    """Least pure-axis generator height per axis.

    A sum of generators lies on axis i only if every summand does, so the
    axis-i members are exactly the monoid generated by the pure axis-i
    generator heights; that complement is finite in the axis line iff the
    heights have gcd 1.
    """
    units = []
    for i in range(dim):
        heights = [g[i] for g in gens if g[i] > 0 and all(g[j] == 0 for j in range(dim) if j != i)]
        if not heights or math.gcd(*heights) != 1:
            raise NotGns(
                f"axis {i}: pure-axis generator heights {sorted(heights)!r} "
                "do not have gcd 1, complement is infinite"
            )
        units.append(min(heights))
    return tuple(units)


def _saturate(grid: np.ndarray, g: Point) -> None:
    """Close the grid under adding any multiple of g, via doubling shifts."""
    shape = grid.shape
    step = g
    while all(s < n for s, n in zip(step, shape)):
        dst = tuple(slice(s, None) for s in step)
        src = tuple(slice(0, n - s) for s, n in zip(step, shape))
        grid[dst] |= grid[src].copy()
        step = tuple(2 * s for s in step)


def _closure_grid(dim: int, gens: list[Point], bound: Point) -> np.ndarray:
    """Exact membership grid of <gens> on the box [0, bound].

    One saturation pass per generator is exact: any sum that lands in the box
    has all its partial sums in the box, so after saturating g_1..g_k the grid
    holds every combination of those generators.
    """
    shape = tuple(b + 1 for b in bound)
    grid = np.zeros(shape, dtype=bool)
    grid[(0,) * dim] = True
    for g in gens:
        _saturate(grid, g)
    return grid


def _shell_split(grid: np.ndarray, bound: Point, units: Point):
    """Certified gaps, or the axes and a sample of points failing the shell.

    Returns (gaps, failure_sample, failing_axes); gaps is None when any
    non-member sits in the shell region."""
    inner = np.array([b - u for b, u in zip(bound, units)], dtype=np.int64)
    nonmembers = np.argwhere(~grid)
    if nonmembers.shape[0] == 0:
        return [], [], set()
    bad = (nonmembers > inner).any(axis=1)
    if not bad.any():
        return [tuple(map(int, row)) for row in nonmembers], [], set()
    failing = nonmembers[bad]
    axes = {i for i in range(grid.ndim) if bool((failing[:, i] > inner[i]).any())}
    sample = [tuple(map(int, row)) for row in failing[:12]]
    return None, sample, axes


def _generator_is_composite(grid: np.ndarray, g: Point) -> bool:
    # a = 0 and a = g always match below, so >= 3 matches means a real split
    sub = grid[tuple(slice(0, x + 1) for x in g)]
    rev = sub[(slice(None, None, -1),) * len(g)]
    return int(np.logical_and(sub, rev).sum()) >= 3


def default_bound(dim: int, gens: Iterable[Point]) -> Point:
    """Initial certification box: past twice the largest generator plus one
    axis step per coordinate.  Grown automatically when the shell test fails."""
    gens = list(gens)
    units = _axis_units(dim, gens)
    return tuple(2 * max(g[i] for g in gens) + units[i] + 1 for i in range(dim))


def from_generators(dim: int, generators, bound=None, *, max_retries: int = 10) -> Gns:
    """Compute the GNS generated by the given points, or diagnose failure.

    With ``bound`` omitted the certification box starts at
    :func:`default_bound` and doubles along failing axes until the shell test
    passes or the retry/cell budget runs out.  An explicit ``bound`` is used
    as-is (single attempt).  Raises NotGns when an axis complement is provably
    infinite, Undetermined when finiteness cannot be certified in the box.
    """
    gens = sorted({lattice.check_point(g, dim) for g in generators}, key=graded_key)
    if not gens or any(not any(g) for g in gens):
        raise InvalidGap("generators must be nonzero lattice points")
    units = _axis_units(dim, gens)

    explicit = bound is not None
    if explicit:
        b = lattice.check_point(bound, dim)
        if any(bi < max(g[i] for g in gens) for i, bi in enumerate(b)):
            raise InvalidGap(f"bound {bound!r} does not contain every generator")
        attempts = 1
    else:
        b = default_bound(dim, gens)
        attempts = max_retries

    last_failures: list[Point] = []
    for _ in range(attempts):
        cells = math.prod(x + 1 for x in b)
        if cells > _CELL_CAP:
            raise Undetermined(
                f"certification box {b!r} exceeds the cell budget", bound=b,
                failures=last_failures,
            )
        grid = _closure_grid(dim, gens, b)
        gaps, failures, bad_axes = _shell_split(grid, b, units)
        if gaps is not None:
            mg = frozenset(g for g in gens if not _generator_is_composite(grid, g))
            return Gns(dim, frozenset(gaps), mg)
        last_failures = failures
        b = tuple(2 * x if i in bad_axes else x for i, x in enumerate(b))
    raise Undetermined(
        f"could not certify a finite complement within box {b!r}",
        bound=b,
        failures=sorted(last_failures, key=graded_key),
    )


# ---------------------------------------------------------------------------
# minimal generators from a gap set


def _minimal_generators_from_gaps(dim: int, gaps: frozenset[Point], conductor: Point) -> frozenset[Point]:
    """Brute-force minimal generators over the box [0, 2*conductor - 1].

    Any member with x_i >= 2 c_i splits off c_i e_i (a member, since any point
    with some coordinate >= c_i is one), so minimal generators live in the box.
    Every splitting of p has a part of degree at most deg(p)/2, so candidate
    parts are scanned in graded order up to half degree.
    """
    if not gaps:
        return frozenset(lattice.unit(dim, i) for i in range(dim))
    bound = tuple(max(2 * c - 1, 0) for c in conductor)
    members = [p for p in lattice.box_iter(bound) if p not in gaps and any(p)]
    out = []
    for p in members:
        half = sum(p) // 2
        decomposable = False
        for a in members:
            if sum(a) > half:
                break
            if all(x <= y for x, y in zip(a, p)):
                rest = tuple(y - x for x, y in zip(a, p))
                if any(rest) and rest not in gaps:
                    decomposable = True
                    break
        if not decomposable:
            out.append(p)
    return frozenset(out)


# ---------------------------------------------------------------------------
# permutations and serialization


def permute_gns(s: Gns, perm) -> Gns:
    """Apply a coordinate permutation; minimal generators permute along."""
    q = lattice.check_permutation(perm, s.dim)
    gaps = frozenset(lattice.permute_point(p, q) for p in s.gaps)
    mg = None
    if s._mg is not None:
        mg = frozenset(lattice.permute_point(p, q) for p in s._mg)
    return Gns(s.dim, gaps, mg)


def serial_key(gaps: Iterable[Point]):
    """Canonical comparison key for a gap set: the graded-sorted point list."""
    return tuple(sorted((sum(p), p) for p in gaps))


def to_document(s: Gns, with_generators: bool = True) -> dict:
    doc = {
        "dim": s.dim,
        "genus": s.genus,
        "gaps": [list(p) for p in s.sorted_gaps],
        "conductor": list(s.conductor),
    }
    if with_generators:
        mg = sorted(s.minimal_generators, key=graded_key)
        doc["minimal_generators"] = [list(p) for p in mg]
        doc["embedding_dimension"] = len(mg)
    return doc


def from_document(doc: dict) -> Gns:
    """Accept {"dim", "gaps"} or {"dim", "generators"[, "bound"]}."""
    if "dim" not in doc:
        raise InvalidGap('document is missing "dim"')
    dim = int(doc["dim"])
    if "gaps" in doc:
        return from_gaps(dim, doc["gaps"])
    if "generators" in doc:
        bound = doc.get("bound")
        return from_generators(dim, doc["generators"], bound)
    raise InvalidGap('document needs either "gaps" or "generators"')
