"""Seeded random generators shared by the property and acceptance tests."""

from __future__ import annotations

from torusloc import (
    ChernClass,
    Difference,
    EulerClass,
    FactoredRational,
    FixedPoint,
    IntegerLiteral,
    LinearForm,
    Polynomial,
    Power,
    Product,
    Sum,
    Weight,
)


def random_exponents(rng, rank, max_degree):
    exponents = [0] * rank
    for _ in range(rng.randint(0, max_degree)):
        exponents[rng.randrange(rank)] += 1
    return tuple(exponents)


def random_polynomial(rng, rank, max_degree=4, max_terms=4, bound=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exponents = random_exponents(rng, rank, max_degree)
        terms[exponents] = terms.get(exponents, 0) + rng.randint(-bound, bound)
    return Polynomial(rank, terms)


def random_vector(rng, rank, bound=3):
    while True:
        vector = tuple(rng.randint(-bound, bound) for _ in range(rank))
        if any(vector):
            return vector


def random_linear_form(rng, rank, bound=3):
    form, _ = LinearForm.normalize(random_vector(rng, rank, bound))
    return form


def random_fraction(rng, rank, max_forms=2, max_multiplicity=2):
    numerator = random_polynomial(rng, rank, max_degree=3, max_terms=3)
    denominator = {}
    for _ in range(rng.randint(0, max_forms)):
        form = random_linear_form(rng, rank)
        denominator[form] = rng.randint(1, max_multiplicity)
    return FactoredRational(numerator, denominator)


def random_weight(rng, rank, bound=3):
    return Weight(random_vector(rng, rank, bound))


def random_point(rng, rank, half_dim, label="p", bound=3):
    weights = tuple(random_weight(rng, rank, bound) for _ in range(half_dim))
    return FixedPoint(label, weights, rng.choice((1, -1)))


def random_expr(rng, depth=3, max_chern=3):
    if depth == 0 or rng.random() < 0.3:
        kind = rng.randrange(3)
        if kind == 0:
            return IntegerLiteral(rng.randint(0, 5))
        if kind == 1:
            return ChernClass(rng.randint(1, max_chern))
        return EulerClass()
    kind = rng.randrange(4)
    if kind == 0:
        return Sum(random_expr(rng, depth - 1, max_chern), random_expr(rng, depth - 1, max_chern))
    if kind == 1:
        return Difference(
            random_expr(rng, depth - 1, max_chern), random_expr(rng, depth - 1, max_chern)
        )
    if kind == 2:
        return Product(
            random_expr(rng, depth - 1, max_chern), random_expr(rng, depth - 1, max_chern)
        )
    return Power(random_expr(rng, depth - 1, max_chern), rng.randint(0, 2))


def random_homogeneous_expr(rng, half_dim, weight):
    """Random expression that is homogeneous of cohomological degree 2*weight.

    Sums and differences of 1-3 scaled monomials in c_1..c_{half_dim}
    (plus e when the weight matches half_dim exactly).
    """

    def monomial(remaining):
        if remaining == half_dim and half_dim > 0 and rng.random() < 0.2:
            return EulerClass()
        node = IntegerLiteral(rng.randint(1, 4))
        while remaining > 0:
            k = rng.randint(1, min(half_dim, remaining)) if half_dim else 0
            if k == 0:
                break
            power = rng.randint(1, remaining // k)
            factor = ChernClass(k) if power == 1 else Power(ChernClass(k), power)
            node = Product(node, factor)
            remaining -= k * power
        return node

    node = monomial(weight)
    for _ in range(rng.randint(0, 2)):
        combine = Sum if rng.random() < 0.5 else Difference
        node = combine(node, monomial(weight))
    return node
