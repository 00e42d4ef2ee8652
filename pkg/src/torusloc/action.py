"""Torus actions with isolated fixed points: weights, signs, validation.

A fixed point of a rank-l torus action on a 2n-manifold carries n nonzero
integer weight vectors (the characters of the tangent representation) and an
orientation sign.  The weights are individually defined only up to sign;
the sign field pins down the orientation relative to the listed
representatives, so that sign * product(weights) -- the equivariant Euler
class of the point's tangent space -- is well defined.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .exact import LinearForm, Polynomial


class ValidationError(Exception):
    """One or more problem invariants are violated; lists every violation."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class NonGenericDirection(Exception):
    """A reduction direction annihilates some tangent weight."""

    def __init__(self, label, weight):
        self.label = label
        self.weight = weight
        super().__init__(
            f"direction is not generic: weight {weight.components} at point "
            f"{label!r} pairs to zero"
        )


@dataclass(frozen=True)
class Weight:
    """A tangent weight: an integer vector of length equal to the torus rank.

    Must be nonzero for a genuinely isolated fixed point; zero vectors are
    representable so that `validate` can report them.
    """

    components: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(operator.index(c) for c in self.components)
        )

    @property
    def rank(self):
        return len(self.components)

    @property
    def is_zero(self):
        return not any(self.components)

    def primitive(self):
        """(LinearForm, integer scalar) with scalar * form == components."""
        return LinearForm.normalize(self.components)

    def as_polynomial(self):
        form, scalar = self.primitive()
        return scalar * form.as_polynomial()

    def pair(self, direction):
        direction = tuple(direction)
        if len(direction) != self.rank:
            raise ValueError(
                f"direction has length {len(direction)}, weight has rank {self.rank}"
            )
        return sum(c * x for c, x in zip(self.components, direction))

    def negated(self):
        return Weight(tuple(-c for c in self.components))


def _as_weight(value):
    return value if isinstance(value, Weight) else Weight(tuple(value))


@dataclass(frozen=True)
class FixedPoint:
    """A labeled isolated fixed point with tangent weights and orientation sign."""

    label: str
    weights: tuple = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(_as_weight(w) for w in self.weights))
        object.__setattr__(self, "sign", operator.index(self.sign))


@dataclass(frozen=True)
class LocalizationProblem:
    """A rank-l torus acting on a compact oriented 2n-manifold, fixed points only.

    `rank` is the number of circle factors l >= 1, `half_dim` is n >= 0, and
    every point must carry exactly n weights of length l.  half_dim == 0 is
    allowed: the empty weight product is 1 and localization degenerates to
    sign-weighted evaluation at the points.
    """

    rank: int
    half_dim: int
    points: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rank", operator.index(self.rank))
        object.__setattr__(self, "half_dim", operator.index(self.half_dim))
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def dimension(self):
        return 2 * self.half_dim


def validate(problem):
    """Check every invariant of a LocalizationProblem, reporting all violations.

    Raises ValidationError carrying the full list; returns None when valid.
    """
    problems = []
    if problem.rank < 1:
        problems.append(f"torus rank must be >= 1, got {problem.rank}")
    if problem.half_dim < 0:
        problems.append(f"half-dimension must be >= 0, got {problem.half_dim}")
    if not problem.points:
        problems.append("fixed point list is empty")
    seen = set()
    for point in problem.points:
        if point.label in seen:
            problems.append(f"duplicate label {point.label!r}")
        seen.add(point.label)
        if point.sign not in (1, -1):
            problems.append(f"sign of point {point.label!r} is {point.sign}, expected +1 or -1")
        if len(point.weights) != problem.half_dim:
            problems.append(
                f"point {point.label!r} has {len(point.weights)} weights, "
                f"expected {problem.half_dim}"
            )
        for index, weight in enumerate(point.weights):
            if weight.rank != problem.rank:
                problems.append(
                    f"weight {index} of point {point.label!r} has length "
                    f"{weight.rank}, expected {problem.rank}"
                )
            elif weight.is_zero:
                problems.append(f"zero weight at point {point.label!r} (index {index})")
    if problems:
        raise ValidationError(problems)


def equivariant_euler(point, rank=None):
    """Equivariant Euler class of the tangent space at a fixed point.

    sign * product of the weights as degree-2 classes; a nonzero homogeneous
    polynomial of cohomological degree 2n.  `rank` is only needed to fix the
    ambient ring when the point has no weights (half_dim == 0).
    """
    if rank is None:
        if not point.weights:
            raise ValueError("rank is required for a point with no weights")
        rank = point.weights[0].rank
    result = Polynomial.constant(rank, point.sign)
    for weight in point.weights:
        if weight.is_zero:
            raise ValueError(f"zero weight at point {point.label!r}")
        result = result * weight.as_polynomial()
    return result


def circle_reduce(problem, direction):
    """Restrict a rank-l problem to the circle subgroup along `direction`.

    Every weight w becomes the single exponent <w, direction>; labels and
    signs are unchanged.  The direction must be generic: a zero pairing
    would put 0 into a localization denominator, so it is rejected eagerly
    via NonGenericDirection naming the first annihilated weight.
    """
    direction = tuple(operator.index(x) for x in direction)
    if len(direction) != problem.rank:
        raise ValueError(
            f"direction has length {len(direction)}, problem has rank {problem.rank}"
        )
    reduced = []
    for point in problem.points:
        exponents = []
        for weight in point.weights:
            value = weight.pair(direction)
            if value == 0:
                raise NonGenericDirection(point.label, weight)
            exponents.append(Weight((value,)))
        reduced.append(FixedPoint(point.label, tuple(exponents), point.sign))
    return LocalizationProblem(1, problem.half_dim, tuple(reduced))
