"""Fixed-point data model: validation, Euler classes, circle reduction."""

import random

import pytest

from torusloc import (
    FixedPoint,
    LocalizationProblem,
    NonGenericDirection,
    Polynomial,
    ValidationError,
    Weight,
    circle_reduce,
    equivariant_euler,
    validate,
)
from torusloc.spaces import projective_space, sphere_rotation

from support import random_point

u = Polynomial.variable(1, 0)


def test_validate_sphere_ok():
    validate(sphere_rotation())


def test_validate_zero_weight():
    point = FixedPoint("p0", (Weight((0, 0)),), 1)
    with pytest.raises(ValidationError) as info:
        validate(LocalizationProblem(2, 1, (point,)))
    assert "zero weight" in str(info.value)
    assert "p0" in str(info.value)


def test_validate_duplicate_labels():
    a = FixedPoint("p0", (Weight((1,)),), 1)
    b = FixedPoint("p0", (Weight((-1,)),), 1)
    with pytest.raises(ValidationError) as info:
        validate(LocalizationProblem(1, 1, (a, b)))
    assert "duplicate label" in str(info.value)


def test_validate_reports_every_violation():
    bad = LocalizationProblem(
        2,
        2,
        (
            FixedPoint("q", (Weight((0, 0)), Weight((1,))), 3),
            FixedPoint("q", (Weight((1, 0)),), 1),
        ),
    )
    with pytest.raises(ValidationError) as info:
        validate(bad)
    problems = info.value.problems
    assert any("zero weight" in p for p in problems)
    assert any("length" in p for p in problems)
    assert any("duplicate" in p for p in problems)
    assert any("sign" in p for p in problems)
    assert any("weights, expected 2" in p for p in problems)


def test_euler_class_is_weight_product():
    point = FixedPoint("p", (Weight((1,)), Weight((2,)), Weight((3,))), 1)
    assert equivariant_euler(point) == 6 * u ** 3


def test_euler_class_south_pole():
    south = sphere_rotation().points[1]
    assert equivariant_euler(south) == -u


def test_euler_class_rank2():
    point = FixedPoint("p", (Weight((1, 0)), Weight((0, 1))), 1)
    u1 = Polynomial.variable(2, 0)
    u2 = Polynomial.variable(2, 1)
    assert equivariant_euler(point) == u1 * u2


def test_euler_class_half_dim_zero_needs_rank():
    point = FixedPoint("p", (), -1)
    with pytest.raises(ValueError):
        equivariant_euler(point)
    assert equivariant_euler(point, rank=2) == Polynomial.constant(2, -1)


def test_euler_degree_and_weight_sign_flips():
    # flipping one weight together with the point's sign preserves the class
    rng = random.Random(7)
    for _ in range(100):
        rank = rng.randint(1, 3)
        n = rng.randint(1, 3)
        point = random_point(rng, rank, n)
        euler = equivariant_euler(point)
        assert not euler.is_zero
        assert euler.cohomological_degree() == 2 * n
        k = rng.randrange(n)
        flipped_weights = tuple(
            w.negated() if i == k else w for i, w in enumerate(point.weights)
        )
        flipped = FixedPoint(point.label, flipped_weights, -point.sign)
        assert equivariant_euler(flipped) == euler


def test_euler_commutes_with_reduction():
    rng = random.Random(11)
    for _ in range(100):
        rank = rng.randint(2, 3)
        n = rng.randint(1, 3)
        point = random_point(rng, rank, n)
        problem = LocalizationProblem(rank, n, (point,))
        xi = None
        while xi is None:
            candidate = tuple(rng.randint(-4, 4) for _ in range(rank))
            if all(w.pair(candidate) != 0 for w in point.weights):
                xi = candidate
        reduced = circle_reduce(problem, xi)
        assert equivariant_euler(point).substitute(xi) == equivariant_euler(
            reduced.points[0]
        )


def test_circle_reduce_cp1():
    reduced = circle_reduce(projective_space(1), (0, 1))
    assert reduced.rank == 1
    exponents = [w.components[0] for pt in reduced.points for w in pt.weights]
    assert sorted(exponents) == [-1, 1]
    assert [pt.label for pt in reduced.points] == ["p0", "p1"]
    assert [pt.sign for pt in reduced.points] == [1, 1]


def test_circle_reduce_zero_direction():
    with pytest.raises(NonGenericDirection):
        circle_reduce(projective_space(1), (0, 0))


def test_circle_reduce_annihilated_weight():
    point = FixedPoint("p", (Weight((1, -1)),), 1)
    problem = LocalizationProblem(2, 1, (point,))
    with pytest.raises(NonGenericDirection) as info:
        circle_reduce(problem, (1, 1))
    assert info.value.label == "p"
    assert info.value.weight.components == (1, -1)


def test_circle_reduce_length_check():
    with pytest.raises(ValueError):
        circle_reduce(sphere_rotation(), (1, 2))
