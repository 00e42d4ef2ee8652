"""Built-in fixed-point data for standard spaces.

Weight conventions follow complex scalar multiplication: projective-space
points use the standard torus action with all signs +1, and the rotating
sphere is oriented so the north pole's Euler class is +u.  Flipping every
weight (or every reduction direction) leaves all integrals unchanged.
"""

from __future__ import annotations

import operator

from .action import FixedPoint, LocalizationProblem, Weight


def sphere_rotation():
    """The circle rotating the 2-sphere about its axis.

    Two fixed points, north and south, each with exponent +1; the south
    pole carries sign -1, so the Euler classes are u and -u.
    """
    north = FixedPoint("north", (Weight((1,)),), 1)
    south = FixedPoint("south", (Weight((1,)),), -1)
    return LocalizationProblem(1, 1, (north, south))


def projective_space(n):
    """Complex projective n-space under the standard torus of rank n+1.

    Fixed points p0, ..., pn are the coordinate lines; the tangent weights
    at p_i are u_j - u_i for j != i, all signs +1.
    """
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"projective space needs n >= 1, got {n}")
    rank = n + 1
    points = []
    for i in range(rank):
        weights = tuple(
            Weight(tuple((1 if k == j else 0) - (1 if k == i else 0) for k in range(rank)))
            for j in range(rank)
            if j != i
        )
        points.append(FixedPoint(f"p{i}", weights, 1))
    return LocalizationProblem(rank, n, tuple(points))


def product(a, b):
    """Product action on the product manifold.

    Fixed points are pairs, tangent weights concatenate into disjoint
    variable blocks (rank adds), and orientation signs multiply.
    """
    rank = a.rank + b.rank
    points = []
    for pa in a.points:
        for pb in b.points:
            weights = tuple(
                Weight(w.components + (0,) * b.rank) for w in pa.weights
            ) + tuple(
                Weight((0,) * a.rank + w.components) for w in pb.weights
            )
            points.append(
                FixedPoint(f"({pa.label},{pb.label})", weights, pa.sign * pb.sign)
            )
    return LocalizationProblem(rank, a.half_dim + b.half_dim, tuple(points))
