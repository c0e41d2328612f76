"""Root configurations and the cages they induce on monic coefficient space."""

import random
from fractions import Fraction

import pytest

import oracles
from cagekit.field import FieldDescriptor
from cagekit.viete import (
    Configuration,
    coefficient_cage,
    elementary_symmetric,
    node_matches_roots,
    root_hyperplane,
    viete_image,
)

F = FieldDescriptor.rationals()


def lift(values):
    return [F.coerce(v) for v in values]


def as_fractions(elements):
    return tuple(e.as_fraction() for e in elements)


# -- elementary symmetric functions -----------------------------------------


def test_elementary_symmetric_hand_values():
    assert as_fractions(elementary_symmetric(lift([1, 2]))) == (3, 2)
    assert as_fractions(elementary_symmetric(lift([1, 1, 1]))) == (3, 3, 1)
    assert as_fractions(elementary_symmetric(lift([0, 0, 0]))) == (0, 0, 0)
    assert as_fractions(elementary_symmetric(lift([1, 2, 3]))) == (6, 11, 6)
    with pytest.raises(ValueError):
        elementary_symmetric([])


def test_elementary_symmetric_against_expansion():
    rng = random.Random(3)
    for _ in range(60):
        values = [Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                  for _ in range(rng.randint(1, 5))]
        got = as_fractions(elementary_symmetric(lift(values)))
        want = tuple(oracles.elementary_symmetric(values, k)
                     for k in range(1, len(values) + 1))
        assert got == want


def test_viete_image_is_symmetric():
    a = viete_image(lift([1, -2, 5]))
    b = viete_image(lift([5, 1, -2]))
    assert a == b


# -- root hyperplanes --------------------------------------------------------


def test_root_hyperplane_quadratic():
    plane = root_hyperplane(F, 1, 2)
    assert as_fractions(plane.coeffs) == (-1, 1, 1)
    # x^2 - 3x + 2 has roots 1 and 2
    e = lift([3, 2, 1])
    dot = sum((c * w for c, w in zip(plane.coeffs, e)), F.zero())
    assert dot.is_zero()
    other = root_hyperplane(F, 5, 2)
    dot = sum((c * w for c, w in zip(other.coeffs, e)), F.zero())
    assert dot.as_fraction() == 12


def test_root_hyperplane_pairing_is_evaluation():
    # the homogeneous pairing of the hyperplane with (e, 1) equals the
    # monic polynomial evaluated at c, so membership and rootness agree
    rng = random.Random(9)
    for _ in range(500):
        n = rng.randint(1, 4)
        e = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        plane = root_hyperplane(F, c, n)
        point = lift(e + [1])
        dot = sum((a * w for a, w in zip(plane.coeffs, point)), F.zero())
        value = c ** n
        sign = -1
        for k in range(1, n + 1):
            value += sign * e[k - 1] * c ** (n - k)
            sign = -sign
        assert dot.as_fraction() == value


def test_root_hyperplane_vanishes_exactly_on_roots():
    roots = [Fraction(2), Fraction(-1), Fraction(5)]
    e = viete_image(lift(roots))
    point = tuple(e) + (F.one(),)
    for c in [2, -1, 5]:
        plane = root_hyperplane(F, c, 3)
        dot = sum((a * w for a, w in zip(plane.coeffs, point)), F.zero())
        assert dot.is_zero()
    plane = root_hyperplane(F, 3, 3)
    dot = sum((a * w for a, w in zip(plane.coeffs, point)), F.zero())
    assert not dot.is_zero()


def test_root_hyperplane_needs_positive_degree():
    with pytest.raises(ValueError):
        root_hyperplane(F, 1, 0)


# -- configurations ----------------------------------------------------------


def test_configuration_rejects_collisions():
    with pytest.raises(ValueError):
        Configuration(F, [(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        Configuration(F, [(1, 2), (3, 1)])
    with pytest.raises(ValueError):
        Configuration(F, [(1, 2), (3,)])
    with pytest.raises(ValueError):
        Configuration(F, [])


def test_configuration_accessors():
    config = Configuration(F, [(1, 3), (2, 4)])
    assert config.d == 2 and config.n == 2
    assert as_fractions(config.coordinate_values(0)) == (1, 2)
    assert as_fractions(config.coordinate_values(1)) == (3, 4)


# -- coefficient cages --------------------------------------------------------


def test_coefficient_cage_grid_example():
    config = Configuration(F, [(1, 3), (2, 4)])
    cage = coefficient_cage(config)
    assert cage.d == 2 and cage.n == 2
    # picking roots 1 and 4 gives x^2 - 5x + 4
    assert as_fractions(cage.node((1, 2)).point) == (5, 4, 1)
    for node in cage.nodes():
        assert node_matches_roots(cage, config, node.index)


def test_coefficient_cage_single_point():
    config = Configuration(F, [(1, 2)])
    cage = coefficient_cage(config)
    assert as_fractions(cage.node((1, 1)).point) == (3, 2, 1)


def test_coefficient_cage_commutes_with_viete():
    shapes = [(2, 2), (3, 2), (2, 3), (3, 3)]
    rng = random.Random(27)
    for d, n in shapes:
        while True:
            flat = rng.sample(range(-20, 21), d * n)
            try:
                config = Configuration(
                    F, [flat[i * n:(i + 1) * n] for i in range(d)])
                break
            except ValueError:
                continue
        cage = coefficient_cage(config)
        assert cage.validate().valid
        assert len(cage.nodes()) == d ** n
        for node in cage.nodes():
            assert node_matches_roots(cage, config, node.index)


def test_integral_roots_give_integral_nodes():
    config = Configuration(F, [(1, 4, -2), (3, 7, 5)])
    cage = coefficient_cage(config)
    for node in cage.nodes():
        for coord in node.point:
            assert coord.as_fraction().denominator == 1
