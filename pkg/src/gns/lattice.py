"""Integer lattice points in N^d and the two orders everything else consumes.

Points are plain tuples of nonnegative ints.  Two orders matter:

* the natural partial order (componentwise <=), and
* a graded total order: compare coordinate sums first, break ties
  lexicographically with coordinate 0 most significant.

The total order refines the partial order and every point has finitely many
predecessors, which is what the enumeration tree needs.
"""

from __future__ import annotations

import itertools

from .errors import DimensionError, InvalidPermutation

Point = tuple[int, ...]


def check_point(p, dim: int) -> Point:
    """Validate and normalize one lattice point of the given dimension."""
    q = tuple(int(x) for x in p)
    if len(q) != dim:
        raise DimensionError(f"expected a point of dimension {dim}, got {p!r}")
    if any(x < 0 for x in q):
        raise DimensionError(f"negative coordinate in {p!r}")
    return q


def same_dim(a: Point, b: Point) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {a!r} vs {b!r}")


def leq(a: Point, b: Point) -> bool:
    """Natural partial order: b - a has all coordinates >= 0."""
    same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def incomparable(a: Point, b: Point) -> bool:
    return not leq(a, b) and not leq(b, a)


def graded_key(p: Point):
    """Sort key realizing the graded total order."""
    return (sum(p), p)


def graded_cmp(a: Point, b: Point) -> int:
    """-1, 0 or 1 as a comes before, equals, or comes after b."""
    same_dim(a, b)
    ka, kb = graded_key(a), graded_key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


def add(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Point, b: Point) -> Point | None:
    """a - b, or None if it leaves N^d."""
    d = tuple(x - y for x, y in zip(a, b))
    return d if all(x >= 0 for x in d) else None


def scale(k: int, p: Point) -> Point:
    return tuple(k * x for x in p)


def unit(dim: int, axis: int) -> Point:
    return tuple(1 if i == axis else 0 for i in range(dim))


def check_permutation(perm, dim: int) -> tuple[int, ...]:
    q = tuple(int(i) for i in perm)
    if sorted(q) != list(range(dim)):
        raise InvalidPermutation(f"{perm!r} is not a permutation of 0..{dim - 1}")
    return q


def permute_point(p: Point, perm) -> Point:
    """Coordinate i of the output is coordinate perm[i] of the input."""
    q = check_permutation(perm, len(p))
    return tuple(p[i] for i in q)


def inverse_permutation(perm) -> tuple[int, ...]:
    q = check_permutation(perm, len(perm))
    inv = [0] * len(q)
    for i, j in enumerate(q):
        inv[j] = i
    return tuple(inv)


def all_permutations(dim: int):
    return itertools.permutations(range(dim))


def box_iter(bound: Point):
    """All points of the box [0, bound], in graded order."""
    pts = itertools.product(*[range(b + 1) for b in bound])
    return sorted(pts, key=graded_key)


def maximal_points(points) -> frozenset[Point]:
    """Maximal elements of a finite set under the natural partial order."""
    pts = sorted(points, key=graded_key, reverse=True)
    keep: list[Point] = []
    for p in pts:
        # anything dominating p would have degree >= deg(p), hence sit in keep
        if not any(all(x <= y for x, y in zip(p, q)) for q in keep):
            keep.append(p)
    return frozenset(keep)
