"""Exhaustive parameter sweeps verifying the family-level claims.

Each sweep pits an arithmetic prediction (made from parameters alone) against
the closure-computed semigroup: predicted maximal-gap categories, closed-form
gap sets, witness gaps, and the symmetry equivalences on enumerated
semigroups.  Violations are collected rather than raised so a run reports
every failure at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import families, invariants, numsgp
from .core import from_generators
from .enumeration import iter_tree
from .errors import LemmaViolation
from .families import (
    AT_LEAST_TWO,
    UNIQUE,
    AxisPairExtraFamily,
    AxisPairFamily,
    AxisTripleFamily,
    CrossFamily,
    build_family,
    classify_axis_pair_extra,
    classify_axis_triple,
    predicted_gaps_axis_pair_extra,
    predicted_gaps_axis_triple,
)
from .lattice import graded_key


@dataclass
class SweepOutcome:
    name: str
    cases: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f"  first: {self.violations[0]}"
        return f"{status} {self.name} ({self.cases} cases){extra}"


def minimal_triples(max_a3: int) -> list[tuple[int, int, int]]:
    out = []
    for a1 in range(3, max_a3 - 1):
        for a2 in range(a1 + 1, max_a3):
            for a3 in range(a2 + 1, max_a3 + 1):
                if numsgp.is_minimal_triple(a1, a2, a3):
                    out.append((a1, a2, a3))
    return out


def coprime_pairs(max_val: int, lo: int = 2) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in range(lo, max_val)
        for b in range(a + 1, max_val + 1)
        if math.gcd(a, b) == 1
    ]


def _height_maps(dim: int, axis: int, height_max: int):
    import itertools

    others = [j for j in range(dim) if j != axis]
    for combo in itertools.product(range(1, height_max + 1), repeat=len(others)):
        yield dict(zip(others, combo))


def _oracle_category(s) -> str:
    return UNIQUE if len(invariants.frobenius_allowable(s)) == 1 else AT_LEAST_TWO


def sweep_axis_triple(max_a3: int = 20, height_max: int = 4, dims=(2, 3)) -> SweepOutcome:
    """Category prediction, closed-form gap sets and witnesses for the
    axis-triple family over every minimal triple up to max_a3."""
    violations, cases = [], 0
    for triple in minimal_triples(max_a3):
        for dim in dims:
            for heights in _height_maps(dim, 0, height_max):
                params = AxisTripleFamily(0, triple, heights)
                cases += 1
                tag = f"triple={triple} heights={sorted(heights.items())}"
                try:
                    s = build_family(params)
                    predicted = classify_axis_triple(params)
                    actual = _oracle_category(s)
                    if predicted != actual:
                        violations.append(f"{tag}: predicted {predicted}, oracle {actual}")
                        continue
                    if predicted == UNIQUE:
                        pg = predicted_gaps_axis_triple(params)
                        if pg.gaps != s.gaps:
                            violations.append(f"{tag}: closed-form gap set mismatch")
                        if invariants.frobenius_allowable(s) != frozenset({pg.max_gap}):
                            violations.append(f"{tag}: predicted maximal gap mismatch")
                    families.witnesses_axis_triple(params, s)
                except LemmaViolation as e:
                    violations.append(f"{tag}: {e}")
    return SweepOutcome("axis-triple family sweep", cases, violations)


def sweep_cross(max_val: int = 12) -> SweepOutcome:
    """Witness pair for every cross family over coprime pairs up to max_val."""
    violations, cases = [], 0
    pairs = coprime_pairs(max_val)
    for first in pairs:
        for second in pairs:
            params = CrossFamily(first, second)
            cases += 1
            try:
                families.witnesses_cross(params)
            except LemmaViolation as e:
                violations.append(f"first={first} second={second}: {e}")
    return SweepOutcome("cross family sweep", cases, violations)


def _admissible(x, axis: int, others) -> bool:
    if all(x[j] == 0 for j in others):
        return False
    return not (x[axis] == 1 and sum(1 for j in others if x[j] > 0) <= 1)


def admissible_extras(axis: int, pair, heights: dict) -> list:
    """Every admissible extra generator: a gap of the axis-pair semigroup that
    is neither an axis multiple nor a unit-plus-axis point."""
    dim = len(heights) + 1
    base = from_generators(dim, families._axis_generators(dim, axis, pair, heights))
    others = [j for j in range(dim) if j != axis]
    return [x for x in sorted(base.gaps, key=graded_key) if _admissible(x, axis, others)]


def _extra_variants(axis: int, pair, heights: dict):
    """Yield (extra, semigroup) for every admissible extra generator.

    The shared base family is closed once; each variant saturates only the
    extra generator on a copy of the base grid.  That is still an exact
    closure (sums commute, so the extra generator can saturate last), and the
    base box stays certified because membership only grows.
    """
    import numpy as np

    from .core import Gns, _axis_units, _closure_grid, _generator_is_composite, _saturate, _shell_split, default_bound

    dim = len(heights) + 1
    gens = families._axis_generators(dim, axis, pair, heights)
    units = _axis_units(dim, gens)
    b = default_bound(dim, gens)
    for _ in range(12):
        grid = _closure_grid(dim, gens, b)
        gaps, _fail, bad_axes = _shell_split(grid, b, units)
        if gaps is not None:
            break
        b = tuple(2 * x if i in bad_axes else x for i, x in enumerate(b))
    else:
        raise LemmaViolation(f"could not certify the base family pair={pair}")
    others = [j for j in range(dim) if j != axis]
    for x in sorted(gaps, key=graded_key):
        if not _admissible(x, axis, others):
            continue
        g2 = grid.copy()
        g2[x] = True
        _saturate(g2, x)
        vgaps = [tuple(map(int, row)) for row in np.argwhere(~g2)]
        mg = frozenset(g for g in gens + [x] if not _generator_is_composite(g2, g))
        yield x, Gns(dim, frozenset(vgaps), mg)


def sweep_axis_pair_extra(max_pair: int = 15, height_max: int = 4,
                          d3_max_pair: int = 7, d3_height_max: int = 2,
                          cross_check_every: int = 37) -> SweepOutcome:
    """Category prediction, closed-form gap sets and witnesses for the
    pair-plus-extra family, exhausting every admissible extra generator.

    Every cross_check_every-th case is rebuilt through the public
    from_generators path and compared against the incremental grid."""
    violations, cases = [], 0
    plans = [(2, coprime_pairs(max_pair), height_max),
             (3, coprime_pairs(d3_max_pair), d3_height_max)]
    for dim, pairs, hmax in plans:
        for pair in pairs:
            for heights in _height_maps(dim, 0, hmax):
                for x, s in _extra_variants(0, pair, heights):
                    params = AxisPairExtraFamily(0, pair, heights, x)
                    cases += 1
                    tag = f"pair={pair} heights={sorted(heights.items())} extra={x}"
                    try:
                        if len(s.minimal_generators) != 2 * dim + 1:
                            raise LemmaViolation(
                                f"embedding dimension {len(s.minimal_generators)}"
                            )
                        if cases % cross_check_every == 0 and build_family(params) != s:
                            raise LemmaViolation("incremental grid disagrees with full build")
                        predicted = classify_axis_pair_extra(params)
                        actual = _oracle_category(s)
                        if predicted != actual:
                            violations.append(f"{tag}: predicted {predicted}, oracle {actual}")
                            continue
                        if predicted == UNIQUE:
                            pg = predicted_gaps_axis_pair_extra(params)
                            if pg.gaps != s.gaps:
                                violations.append(f"{tag}: closed-form gap set mismatch")
                            if invariants.frobenius_allowable(s) != frozenset({pg.max_gap}):
                                violations.append(f"{tag}: predicted maximal gap mismatch")
                        families.witnesses_axis_pair_extra(params, s)
                    except LemmaViolation as e:
                        violations.append(f"{tag}: {e}")
    return SweepOutcome("axis-pair-plus-extra family sweep", cases, violations)


def sweep_axis_pair_family(max_odd: int = 21, height_max: int = 4, dims=(2, 3)) -> SweepOutcome:
    """Product gap formula and both symmetry routes for the 2d family."""
    violations, cases = [], 0
    for b in range(3, max_odd + 1, 2):
        for dim in dims:
            for heights in _height_maps(dim, 0, height_max):
                params = AxisPairFamily(0, b, heights)
                cases += 1
                try:
                    families.verify_axis_pair_family(params)
                except LemmaViolation as e:
                    violations.append(f"b={b} heights={sorted(heights.items())}: {e}")
    return SweepOutcome("axis-pair (2d) family sweep", cases, violations)


def sweep_three_gen_symmetry(max_a3: int = 25) -> SweepOutcome:
    """Classical multiplier criterion vs. type = 1, and type <= 2, over all
    minimal triples; the type comes from the d=1 specialization of the
    general invariants."""
    violations, cases = [], 0
    for triple in minimal_triples(max_a3):
        cases += 1
        cs, symmetric = numsgp.three_gen_symmetry(*triple)
        g = numsgp.ns_to_gns(numsgp.ns_from_generators(triple))
        t = invariants.semigroup_type(g)
        if symmetric != (t == 1):
            violations.append(f"{triple}: criterion {symmetric} but type {t} (c={cs})")
        try:
            bound = numsgp.three_gen_type_bound(*triple)
        except LemmaViolation as e:
            violations.append(f"{triple}: {e}")
            continue
        if bound != t:
            violations.append(f"{triple}: type bound route {bound} != invariants route {t}")
    return SweepOutcome("three-generator symmetry sweep", cases, violations)


def sweep_pair_frobenius(max_b: int = 30) -> SweepOutcome:
    """Closed forms F = ab - a - b and genus = (F + 1)/2 against the sieve."""
    violations, cases = [], 0
    for a in range(2, max_b):
        for b in range(a + 1, max_b + 1):
            if math.gcd(a, b) != 1:
                continue
            cases += 1
            frob, genus = numsgp.pair_genus_check(a, b)
            if frob != a * b - a - b:
                violations.append(f"({a},{b}): F={frob} != {a * b - a - b}")
            if 2 * genus != frob + 1:
                violations.append(f"({a},{b}): genus {genus} breaks (F+1)/2")
    return SweepOutcome("two-generator closed forms", cases, violations)


def sweep_symmetry_criterion_agreement(dim: int, genus_max: int) -> SweepOutcome:
    """Type route vs. counting route on every enumerated GNS."""
    violations, cases = [], 0
    for s in iter_tree(dim, genus_max):
        if not s.gaps:
            continue
        cases += 1
        a = invariants.is_symmetric_by_type(s)
        b = invariants.is_symmetric_by_criterion(s)
        if a != b:
            violations.append(f"genus {s.genus} gaps {sorted(s.gaps)}: type {a} vs criterion {b}")
    return SweepOutcome(f"symmetry route agreement d={dim} g<={genus_max}", cases, violations)


def sweep_unique_max_gap_theorem(dim: int, genus_max: int) -> SweepOutcome:
    """On embedding dimension 2d + 1: symmetric iff unique maximal gap, and
    almost symmetric iff symmetric."""
    violations, cases = [], 0
    edim = 2 * dim + 1
    for s in iter_tree(dim, genus_max):
        if not s.gaps or len(s.minimal_generators) != edim:
            continue
        cases += 1
        if not families.check_symmetric_iff_unique_max_gap(s):
            violations.append(f"genus {s.genus} gaps {sorted(s.gaps)}: equivalence fails")
        if invariants.is_almost_symmetric(s) != invariants.is_symmetric_by_type(s):
            violations.append(f"genus {s.genus} gaps {sorted(s.gaps)}: almost != symmetric")
    return SweepOutcome(f"unique-maximal-gap theorem d={dim} g<={genus_max}", cases, violations)


def run_all(*, triple_max: int = 20, triple_height_max: int = 4,
            cross_max: int = 12, extra_pair_max: int = 15, extra_height_max: int = 4,
            pair_family_odd_max: int = 21, herzog_max: int = 25, frobenius_max: int = 30,
            enum_genus_2: int = 7, enum_genus_3: int = 5) -> list[SweepOutcome]:
    """The full verification suite with configurable caps."""
    return [
        sweep_pair_frobenius(frobenius_max),
        sweep_three_gen_symmetry(herzog_max),
        sweep_axis_pair_family(pair_family_odd_max),
        sweep_axis_triple(triple_max, triple_height_max),
        sweep_cross(cross_max),
        sweep_axis_pair_extra(extra_pair_max, extra_height_max),
        sweep_symmetry_criterion_agreement(2, enum_genus_2),
        sweep_symmetry_criterion_agreement(3, enum_genus_3),
        sweep_unique_max_gap_theorem(2, enum_genus_2),
        sweep_unique_max_gap_theorem(3, enum_genus_3),
    ]
