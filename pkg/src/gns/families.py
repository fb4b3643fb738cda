"""Parametric families of GNS with small embedding dimension, with verifiers.

Up to coordinate permutation, a proper GNS of embedding dimension 2d carries
the pair {2e_i, b e_i} on one axis (b odd) next to the off-axis units and one
mixed generator e_i + h_j e_j per other axis.  In embedding dimension 2d + 1
the possible generator shapes are:

* axis triple: three multiples of e_i replace the pair,
* cross (d = 2 only): coprime pairs on both axes plus the diagonal (1, 1),
* axis pair plus one extra free generator x.

Constructors assemble the generator sets verbatim; classifiers predict from
the parameters alone whether the family member has a unique maximal gap; the
witness functions evaluate the explicit gap formulas these predictions rest
on and verify every claim against the closure-computed semigroup.  All the
verified facts are mathematically guaranteed, so a failure raises
LemmaViolation (an implementation bug, never a legitimate outcome).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from . import invariants, lattice, numsgp
from .core import Gns, from_generators
from .errors import (
    FamilyDegenerate,
    InvalidFamilyParams,
    LemmaViolation,
    NotInScope,
    WrongCase,
)
from .lattice import Point, graded_key

UNIQUE = "unique"
AT_LEAST_TWO = "at_least_two"


def _check_heights(axis: int, heights: dict, dim: int) -> dict[int, int]:
    hs = {int(k): int(v) for k, v in heights.items()}
    if axis < 0 or axis >= dim:
        raise InvalidFamilyParams(f"axis {axis} out of range for dimension {dim}")
    if set(hs) != set(range(dim)) - {axis}:
        raise InvalidFamilyParams(
            f"heights must cover every axis except {axis}, got {sorted(hs)}"
        )
    if any(v < 1 for v in hs.values()):
        raise InvalidFamilyParams("all heights must be >= 1")
    return hs


@dataclass(frozen=True, eq=True)
class AxisPairFamily:
    """Embedding dimension 2d: the axis carries {2, b} with b odd."""

    axis: int
    odd_gen: int
    heights: dict = field(hash=False)

    def __post_init__(self):
        dim = len(self.heights) + 1
        object.__setattr__(self, "heights", _check_heights(self.axis, self.heights, dim))
        if self.odd_gen < 3 or self.odd_gen % 2 == 0:
            raise InvalidFamilyParams(f"odd_gen must be an odd integer >= 3, got {self.odd_gen}")

    @property
    def dim(self) -> int:
        return len(self.heights) + 1


@dataclass(frozen=True, eq=True)
class AxisTripleFamily:
    """Embedding dimension 2d + 1 with a minimal triple on the axis."""

    axis: int
    triple: tuple[int, int, int]
    heights: dict = field(hash=False)

    def __post_init__(self):
        dim = len(self.heights) + 1
        object.__setattr__(self, "heights", _check_heights(self.axis, self.heights, dim))
        trip = tuple(sorted(int(a) for a in self.triple))
        if not numsgp.is_minimal_triple(*trip):
            raise InvalidFamilyParams(f"{self.triple!r} is not a minimal generating triple")
        object.__setattr__(self, "triple", trip)

    @property
    def dim(self) -> int:
        return len(self.heights) + 1


@dataclass(frozen=True, eq=True)
class CrossFamily:
    """Embedding dimension 5 in N^2: coprime pairs on both axes plus (1, 1)."""

    first: tuple[int, int]
    second: tuple[int, int]

    def __post_init__(self):
        import math

        for name in ("first", "second"):
            pair = tuple(sorted(int(v) for v in getattr(self, name)))
            if pair[0] < 1 or math.gcd(*pair) != 1:
                raise InvalidFamilyParams(f"{name} pair {pair!r} must be positive and coprime")
            object.__setattr__(self, name, pair)

    @property
    def dim(self) -> int:
        return 2


@dataclass(frozen=True, eq=True)
class AxisPairExtraFamily:
    """Embedding dimension 2d + 1: coprime pair on the axis plus one extra
    generator that is neither an axis multiple nor a unit-plus-axis point."""

    axis: int
    pair: tuple[int, int]
    heights: dict = field(hash=False)
    extra: tuple = ()

    def __post_init__(self):
        import math

        dim = len(self.heights) + 1
        object.__setattr__(self, "heights", _check_heights(self.axis, self.heights, dim))
        pair = tuple(sorted(int(v) for v in self.pair))
        if pair[0] < 2 or math.gcd(*pair) != 1:
            raise InvalidFamilyParams(f"pair {pair!r} must be coprime integers >= 2")
        object.__setattr__(self, "pair", pair)
        x = lattice.check_point(self.extra, dim)
        others = [j for j in range(dim) if j != self.axis]
        if all(x[j] == 0 for j in others):
            raise InvalidFamilyParams(f"extra {x!r} is a multiple of the axis unit")
        if x[self.axis] == 1 and sum(1 for j in others if x[j] > 0) <= 1:
            raise InvalidFamilyParams(f"extra {x!r} has the excluded unit-plus-axis shape")
        object.__setattr__(self, "extra", x)

    @property
    def dim(self) -> int:
        return len(self.heights) + 1


FamilyParams = Union[AxisPairFamily, AxisTripleFamily, CrossFamily, AxisPairExtraFamily]


class PredictedGaps(NamedTuple):
    gaps: frozenset[Point]
    max_gap: Point


@dataclass(frozen=True)
class WitnessSet:
    """Explicit gap-formula witnesses, already verified against the semigroup."""

    family: str
    branch: str
    points: dict  # label -> Point
    meta: dict  # label -> int


def _pt(dim: int, coords: dict[int, int]) -> Point:
    return tuple(coords.get(i, 0) for i in range(dim))


def _axis_generators(dim: int, axis: int, multiples, heights: dict[int, int]) -> list[Point]:
    gens = [lattice.unit(dim, j) for j in range(dim) if j != axis]
    gens += [_pt(dim, {axis: m}) for m in multiples]
    gens += [_pt(dim, {axis: 1, j: h}) for j, h in heights.items()]
    return gens


def family_generators(params: FamilyParams) -> list[Point]:
    if isinstance(params, AxisPairFamily):
        return _axis_generators(params.dim, params.axis, (2, params.odd_gen), params.heights)
    if isinstance(params, AxisTripleFamily):
        return _axis_generators(params.dim, params.axis, params.triple, params.heights)
    if isinstance(params, CrossFamily):
        a1, a2 = params.first
        b1, b2 = params.second
        return [(a1, 0), (a2, 0), (0, b1), (0, b2), (1, 1)]
    if isinstance(params, AxisPairExtraFamily):
        gens = _axis_generators(params.dim, params.axis, params.pair, params.heights)
        gens.append(params.extra)
        return gens
    raise InvalidFamilyParams(f"unknown family parameters {params!r}")


def expected_edim(params: FamilyParams) -> int:
    return 2 * params.dim if isinstance(params, AxisPairFamily) else 2 * params.dim + 1


def build_family(params: FamilyParams) -> Gns:
    """Assemble the family's generators and construct the semigroup, asserting
    the embedding dimension the family promises."""
    gens = family_generators(params)
    s = from_generators(params.dim, gens)
    want = expected_edim(params)
    got = len(s.minimal_generators)
    if got != want:
        raise FamilyDegenerate(
            f"generator set {sorted(gens, key=graded_key)} is not minimal: "
            f"embedding dimension {got}, expected {want}"
        )
    return s


# ---------------------------------------------------------------------------
# axis-triple family (embedding dimension 2d + 1, three axis multiples)


def classify_axis_triple(params: AxisTripleFamily) -> str:
    """Predict from the parameters whether the member has a unique maximal gap."""
    if params.dim >= 3:
        return AT_LEAST_TWO
    a1, a2, a3 = params.triple
    if a1 != 3:
        return AT_LEAST_TWO
    return UNIQUE if (a2 % 3 == 1 and a3 == a2 + 1) else AT_LEAST_TWO


def predicted_gaps_axis_triple(params: AxisTripleFamily) -> PredictedGaps:
    """Closed-form gap set for the unique-maximal-gap branch.

    Gaps are (h, j) with h a gap of the axis semigroup: residue-1 gaps carry
    0 <= j < h2, residue-2 gaps carry 0 <= j < 2 h2."""
    if classify_axis_triple(params) != UNIQUE:
        raise WrongCase("the closed-form gap set only applies to the unique branch")
    dim, axis = params.dim, params.axis
    (j,) = [k for k in range(dim) if k != axis]
    h2 = params.heights[j]
    T = numsgp.ns_from_generators(params.triple)
    gaps = set()
    for h in T.gaps:
        width = h2 if h % 3 == 1 else 2 * h2
        for t in range(width):
            gaps.add(_pt(dim, {axis: h, j: t}))
    return PredictedGaps(frozenset(gaps), _pt(dim, {axis: T.frobenius, j: 2 * h2 - 1}))


def _assert_gap(s: Gns, p: Point, label: str) -> None:
    if p not in s.gaps:
        raise LemmaViolation(f"{label} {p!r} is not a gap")


def _assert_maximal(s: Gns, fa: frozenset[Point], p: Point, label: str) -> None:
    _assert_gap(s, p, label)
    if p not in fa:
        raise LemmaViolation(f"{label} {p!r} is not a maximal gap")


def _assert_incomparable(a: Point, b: Point, what: str) -> None:
    if not lattice.incomparable(a, b):
        raise LemmaViolation(f"{what}: {a!r} and {b!r} are comparable")


def witnesses_axis_triple(params: AxisTripleFamily, s: Optional[Gns] = None) -> WitnessSet:
    """Evaluate and verify the explicit witness gaps for the triple family.

    When F - 1 lies in the axis semigroup T the point with axis coordinate F
    and every height reduced by one is a maximal gap, and each
    (a1-1) * (e_axis + h_k e_k) - e_k is a gap incomparable to it.  Otherwise
    F - 2 must lie in T and, per other axis k, raising the k-th entry to
    2 h_k - 1 gives a maximal gap.
    """
    if s is None:
        s = build_family(params)
    dim, axis = params.dim, params.axis
    a1 = params.triple[0]
    others = [k for k in range(dim) if k != axis]
    T = numsgp.ns_from_generators(params.triple)
    F = T.frobenius
    fa = invariants.frobenius_allowable(s)
    points: dict[str, Point] = {}
    if (F - 1) in T:
        f = _pt(dim, {axis: F, **{j: params.heights[j] - 1 for j in others}})
        _assert_maximal(s, fa, f, "claimed maximal gap")
        points["max_gap"] = f
        for k in others:
            side = _pt(dim, {axis: a1 - 1, k: (a1 - 1) * params.heights[k] - 1})
            _assert_gap(s, side, f"side gap (axis {k})")
            _assert_incomparable(f, side, "witness pair")
            points[f"side_gap_{k}"] = side
        if len(fa) < 2:
            raise LemmaViolation("expected at least two maximal gaps in this branch")
        branch = "frobenius_predecessor_inside"
    else:
        if (F - 2) not in T:
            raise LemmaViolation(f"F - 2 = {F - 2} should belong to the axis semigroup")
        for k in others:
            fk = _pt(dim, {
                axis: F,
                k: 2 * params.heights[k] - 1,
                **{j: params.heights[j] - 1 for j in others if j != k},
            })
            _assert_maximal(s, fa, fk, f"claimed maximal gap (axis {k})")
            points[f"max_gap_{k}"] = fk
        branch = "frobenius_predecessor_outside"
    return WitnessSet("axis_triple", branch, points, {})


# ---------------------------------------------------------------------------
# cross family (dimension 2, pairs on both axes plus the diagonal)


def witnesses_cross(params: CrossFamily, s: Optional[Gns] = None) -> WitnessSet:
    """Two incomparable maximal gaps, one leaning along each axis.

    The tall gap is (a1-1, a1-1+F2) when a1 is outside the second-axis
    semigroup, else (k1*a1-1, a1-1+F2) with k1 the last multiple of a1 below
    a2; the wide gap is symmetric.  Both are verified maximal, so the family
    never has a unique maximal gap.
    """
    if s is None:
        s = build_family(params)
    a1, a2 = params.first
    b1, b2 = params.second
    T1 = numsgp.ns_from_generators(params.first)
    T2 = numsgp.ns_from_generators(params.second)
    meta: dict[str, int] = {}
    if a1 not in T2:
        tall = (a1 - 1, a1 - 1 + T2.frobenius)
    else:
        k1 = (a2 - 1) // a1
        meta["tall_steps"] = k1
        tall = (k1 * a1 - 1, a1 - 1 + T2.frobenius)
    if b1 not in T1:
        wide = (b1 - 1 + T1.frobenius, b1 - 1)
    else:
        k2 = (b2 - 1) // b1
        meta["wide_steps"] = k2
        wide = (b1 - 1 + T1.frobenius, k2 * b1 - 1)
    fa = invariants.frobenius_allowable(s)
    _assert_maximal(s, fa, tall, "tall gap")
    _assert_maximal(s, fa, wide, "wide gap")
    _assert_incomparable(tall, wide, "witness pair")
    if len(fa) < 2:
        raise LemmaViolation("cross family must have at least two maximal gaps")
    return WitnessSet("cross", "always", {"tall_gap": tall, "wide_gap": wide}, meta)


# ---------------------------------------------------------------------------
# axis-pair-plus-extra family (embedding dimension 2d + 1)


def classify_axis_pair_extra(params: AxisPairExtraFamily) -> str:
    """Unique maximal gap iff d = 2, the pair starts at 3, and the extra
    generator is 2 e_axis + h_j e_j."""
    if params.dim >= 3:
        return AT_LEAST_TWO
    a1 = params.pair[0]
    if a1 != 3:
        return AT_LEAST_TWO
    axis = params.axis
    (j,) = [k for k in range(params.dim) if k != axis]
    want = _pt(params.dim, {axis: 2, j: params.heights[j]})
    return UNIQUE if params.extra == want else AT_LEAST_TWO


def predicted_gaps_axis_pair_extra(params: AxisPairExtraFamily) -> PredictedGaps:
    """Unique branch: the gap set is the axis gaps of <3, a2> swept across
    heights 0 .. h_j - 1."""
    if classify_axis_pair_extra(params) != UNIQUE:
        raise WrongCase("the closed-form gap set only applies to the unique branch")
    dim, axis = params.dim, params.axis
    (j,) = [k for k in range(dim) if k != axis]
    hj = params.heights[j]
    T = numsgp.ns_from_generators(params.pair)
    gaps = frozenset(_pt(dim, {axis: h, j: t}) for h in T.gaps for t in range(hj))
    return PredictedGaps(gaps, _pt(dim, {axis: T.frobenius, j: hj - 1}))


def witnesses_axis_pair_extra(params: AxisPairExtraFamily, s: Optional[Gns] = None) -> WitnessSet:
    """Evaluate and verify the branch-specific witness gaps for this family."""
    if s is None:
        s = build_family(params)
    dim, axis = params.dim, params.axis
    a1 = params.pair[0]
    x = params.extra
    others = [k for k in range(dim) if k != axis]
    T = numsgp.ns_from_generators(params.pair)
    F = T.frobenius
    fa = invariants.frobenius_allowable(s)
    points: dict[str, Point] = {}

    def top_gaps():
        tops = [p for p in fa if p[axis] == F]
        if not tops:
            raise LemmaViolation(f"no maximal gap with axis coordinate {F}")
        return tops

    if a1 == 2:
        # the extra generator sits in the gap box of the pair family
        if x[axis] in T or any(x[j] >= params.heights[j] for j in others):
            raise LemmaViolation(f"extra {x!r} is not a gap of the pair family")
        k = next(j for j in others if x[j] > 0)
        f = _pt(dim, {axis: F, k: x[k] - 1,
                      **{j: params.heights[j] - 1 for j in others if j != k}})
        _assert_maximal(s, fa, f, "claimed maximal gap")
        g = _pt(dim, {axis: 1, k: x[k]})
        _assert_gap(s, g, "blocked unit point")
        _assert_incomparable(f, g, "witness pair")
        points.update(max_gap=f, blocked_gap=g)
        branch = "pair_multiplicity_two"
    elif any(x[k] > params.heights[k] for k in others):
        f = _pt(dim, {axis: F, **{j: params.heights[j] - 1 for j in others}})
        _assert_maximal(s, fa, f, "claimed maximal gap")
        k = next(k for k in others if x[k] > params.heights[k])
        w = tuple(v - 1 if i == k else v for i, v in enumerate(x))
        _assert_gap(s, w, "lowered extra generator")
        _assert_incomparable(f, w, "witness pair")
        points.update(max_gap=f, lowered_extra=w)
        branch = "extra_above_heights"
    else:
        # a1 >= 3 and the extra generator stays within the heights
        two_column = x[axis] == 2 and sum(1 for j in others if x[j] > 0) == 1
        unique = classify_axis_pair_extra(params) == UNIQUE
        if unique:
            predicted = predicted_gaps_axis_pair_extra(params)
            if s.gaps != predicted.gaps:
                raise LemmaViolation("unique branch gap set differs from the product formula")
            if fa != frozenset({predicted.max_gap}):
                raise LemmaViolation("unique branch should have exactly the predicted maximal gap")
            points["max_gap"] = predicted.max_gap
            branch = "unique_maximal_gap"
        else:
            tops = top_gaps()
            if two_column:
                (ell,) = [j for j in others if x[j] > 0]
                if dim == 2:
                    if a1 > 3:
                        y = _pt(dim, {axis: 3, ell: x[ell] - 1 + params.heights[ell]})
                        label = "shifted_gap"
                    else:
                        y = _pt(dim, {axis: 1, ell: params.heights[ell] - 1})
                        label = "short_column_gap"
                else:
                    k = next(j for j in others if j != ell)
                    y = _pt(dim, {axis: 2, k: params.heights[k]})
                    label = f"blocked_height_gap_{k}"
            else:
                k = others[0]
                y = _pt(dim, {axis: 2, k: params.heights[k]})
                label = f"blocked_height_gap_{k}"
            _assert_gap(s, y, label)
            for top in tops:
                _assert_incomparable(top, y, "witness pair")
            points[label] = y
            points["max_gap"] = tops[0]
            branch = "low_extra"
    expected_unique = classify_axis_pair_extra(params) == UNIQUE
    if (len(fa) == 1) != expected_unique:
        raise LemmaViolation(
            f"maximal gap count {len(fa)} contradicts the predicted category"
        )
    return WitnessSet("axis_pair_extra", branch, points, {})


# ---------------------------------------------------------------------------
# verifiers


def verify_axis_pair_family(params: AxisPairFamily) -> bool:
    """Check the embedding-dimension-2d family end to end: the product gap
    formula with the axis semigroup <2, b>, the unique maximal gap, and
    symmetry through both independent routes."""
    s = build_family(params)
    dim, axis = params.dim, params.axis
    others = [k for k in range(dim) if k != axis]
    T = numsgp.ns_from_generators((2, params.odd_gen))
    expected = set()
    for h in T.gaps:
        for combo in itertools.product(*[range(params.heights[j]) for j in others]):
            expected.add(_pt(dim, {axis: h, **dict(zip(others, combo))}))
    if s.gaps != frozenset(expected):
        raise LemmaViolation("gap set differs from the product formula")
    fa = invariants.frobenius_allowable(s)
    if len(fa) != 1:
        raise LemmaViolation(f"expected a unique maximal gap, found {sorted(fa)}")
    if not invariants.is_symmetric_by_type(s):
        raise LemmaViolation("family member is not symmetric (type route)")
    if not invariants.is_symmetric_by_criterion(s):
        raise LemmaViolation("family member is not symmetric (counting route)")
    return True


def check_symmetric_iff_unique_max_gap(s: Gns) -> bool:
    """For embedding dimension 2d + 1 (d >= 2): symmetric iff |FA| = 1."""
    if s.dim < 2 or len(s.minimal_generators) != 2 * s.dim + 1:
        raise NotInScope("defined for dimension >= 2 and embedding dimension 2d + 1")
    return invariants.is_symmetric_by_type(s) == (len(invariants.frobenius_allowable(s)) == 1)


# ---------------------------------------------------------------------------
# JSON parameter documents


_KINDS = {
    "axis_pair": AxisPairFamily,
    "axis_triple": AxisTripleFamily,
    "cross": CrossFamily,
    "axis_pair_extra": AxisPairExtraFamily,
}


def params_from_document(doc: dict) -> FamilyParams:
    kind = doc.get("kind")
    if kind not in _KINDS:
        raise InvalidFamilyParams(f"unknown family kind {kind!r}; expected one of {sorted(_KINDS)}")
    try:
        if kind == "axis_pair":
            return AxisPairFamily(int(doc["axis"]), int(doc["odd_gen"]),
                                  {int(k): int(v) for k, v in doc["heights"].items()})
        if kind == "axis_triple":
            return AxisTripleFamily(int(doc["axis"]), tuple(doc["triple"]),
                                    {int(k): int(v) for k, v in doc["heights"].items()})
        if kind == "cross":
            return CrossFamily(tuple(doc["first"]), tuple(doc["second"]))
        return AxisPairExtraFamily(int(doc["axis"]), tuple(doc["pair"]),
                                   {int(k): int(v) for k, v in doc["heights"].items()},
                                   tuple(doc["extra"]))
    except KeyError as e:
        raise InvalidFamilyParams(f"family document is missing field {e}") from None


def params_to_document(params: FamilyParams) -> dict:
    if isinstance(params, AxisPairFamily):
        return {"kind": "axis_pair", "axis": params.axis, "odd_gen": params.odd_gen,
                "heights": {str(k): v for k, v in sorted(params.heights.items())}}
    if isinstance(params, AxisTripleFamily):
        return {"kind": "axis_triple", "axis": params.axis, "triple": list(params.triple),
                "heights": {str(k): v for k, v in sorted(params.heights.items())}}
    if isinstance(params, CrossFamily):
        return {"kind": "cross", "first": list(params.first), "second": list(params.second)}
    return {"kind": "axis_pair_extra", "axis": params.axis, "pair": list(params.pair),
            "heights": {str(k): v for k, v in sorted(params.heights.items())},
            "extra": list(params.extra)}
