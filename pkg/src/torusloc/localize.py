"""The fixed-point localization engine.

For a validated problem and a homogeneous class expression, the equivariant
integral over the manifold equals the sum over fixed points of
restrict(expr, p) / euler(p).  Each term is a rational function; the sum is
guaranteed to cancel to a polynomial in u1, ..., ul whenever the input data
comes from a genuine action and class.  Non-cancellation is therefore the
primary diagnostic that the fixed-point data is geometrically inconsistent,
and is reported with every per-point term attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .action import validate
from .classexpr import EulerClass, degree, parse, restrict
from .exact import FactoredRational, NotPolynomialError


class DegreeMismatch(Exception):
    """Expression degree incompatible with the manifold dimension."""

    def __init__(self, expr_degree, dimension, requirement="=="):
        self.expr_degree = expr_degree
        self.dimension = dimension
        super().__init__(
            f"expression degree {expr_degree} must be {requirement} manifold "
            f"dimension {dimension}"
        )


@dataclass(frozen=True)
class LocalizationResult:
    """Outcome of a localization sum.

    `value` is the exact sum of `per_point_terms` (already certified to be a
    polynomial); `class_degree` is the expression's cohomological degree and
    `dimension` = 2n.  The value is 0 whenever class_degree < dimension, and
    a constant when class_degree == dimension.
    """

    value: object  # Polynomial of rank l
    per_point_terms: tuple  # of (label, FactoredRational)
    class_degree: int
    dimension: int


def _as_expr(expr):
    return parse(expr) if isinstance(expr, str) else expr


def point_term(point, expr, rank):
    """restrict(expr, point) / euler(point) as a cancelled FactoredRational."""
    scalar = point.sign
    denominator = {}
    for weight in point.weights:
        form, s = weight.primitive()
        scalar *= s
        denominator[form] = denominator.get(form, 0) + 1
    numerator = restrict(expr, point, rank) * Fraction(1, scalar)
    return FactoredRational(numerator, denominator)


def _tree_sum(terms, zero):
    layer = list(terms) or [zero]
    while len(layer) > 1:
        paired = [a + b for a, b in zip(layer[::2], layer[1::2])]
        if len(layer) % 2:
            paired.append(layer[-1])
        layer = paired
    return layer[0]


def localize(problem, expr, *, cross_check=False):
    """Evaluate the localization sum and certify that it is a polynomial.

    `expr` may be a ClassExpr or expression text.  Terms are added pairwise
    in input order; with cross_check=True the sum is recomputed by a tree
    reduction and asserted equal (exactness makes any order equivalent).
    Raises NotPolynomialError with per-point terms attached when the
    denominators fail to cancel, and InhomogeneousExpression for an
    expression without a single degree.
    """
    validate(problem)
    expr = _as_expr(expr)
    class_degree = degree(expr, problem.half_dim)
    terms = tuple(
        (point.label, point_term(point, expr, problem.rank)) for point in problem.points
    )
    total = FactoredRational.zero(problem.rank)
    for _, term in terms:
        total = total + term
    if cross_check:
        retotal = _tree_sum([term for _, term in terms], FactoredRational.zero(problem.rank))
        if retotal != total:
            raise AssertionError(
                f"reduction order changed an exact sum: {total} vs {retotal}"
            )
    try:
        value = total.as_polynomial()
    except NotPolynomialError:
        raise NotPolynomialError(total, per_point=terms) from None
    return LocalizationResult(value, terms, class_degree, problem.dimension)


def integrate_top(problem, expr):
    """The ordinary integral of a top-degree class, as an exact rational.

    Requires degree(expr) == dim M; the localization value is then a
    constant polynomial and its constant term is returned.
    """
    expr = _as_expr(expr)
    class_degree = degree(expr, problem.half_dim)
    if class_degree != 2 * problem.half_dim:
        raise DegreeMismatch(class_degree, 2 * problem.half_dim)
    result = localize(problem, expr)
    value = result.value
    if value and value.degree() > 0:
        raise AssertionError(f"top-degree localization value is not constant: {value}")
    return value.constant_coefficient()

def euler_characteristic(problem):
    """Euler characteristic as the localization integral of the Euler class.

    Each fixed point contributes euler(p)/euler(p) = 1, so the result equals
    the number of fixed points; that identity is asserted as an internal
    consistency check before returning.
    """
    chi = integrate_top(problem, EulerClass())
    if chi != len(problem.points):
        raise RuntimeError(
            f"Euler characteristic {chi} does not match fixed point count "
            f"{len(problem.points)}"
        )
    return int(chi)


def check_vanishing(problem, expr):
    """Certify that a below-top-degree class localizes to zero.

    Requires degree(expr) < dim M.  Returns None when the sum cancels to 0,
    and the offending nonzero polynomial otherwise (possible only for
    arithmetic bugs, never for exact sums of homogeneous terms).
    """
    expr = _as_expr(expr)
    class_degree = degree(expr, problem.half_dim)
    if class_degree >= 2 * problem.half_dim:
        raise DegreeMismatch(class_degree, 2 * problem.half_dim, requirement="<")
    result = localize(problem, expr)
    if result.value.is_zero:
        return None
    return result.value
