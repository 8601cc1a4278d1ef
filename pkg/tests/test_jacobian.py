"""Jacobian model: theta, Chern data, beta."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from symcoh.jacobian import (
    beta_shifted,
    build_jacobian,
    chern_classes,
    integral_jacobian,
    theta_class,
    top_exterior_coefficient,
)
from symcoh.kernel import Element, Monomial, exterior_gen, z_gen


def test_build_jacobian_examples():
    assert build_jacobian(0).theta.is_zero()
    assert build_jacobian(1).theta == Element.monomial(1, Monomial((1, 2), 0))
    g2 = build_jacobian(2)
    e = lambda i: exterior_gen(2, i)
    assert g2.theta == e(1) * e(3) + e(2) * e(4)
    assert (g2.theta * g2.theta).scale(Fraction(1, 2)) == Element.monomial(
        2, Monomial((1, 2, 3, 4), 0), -1
    )


def test_theta_powers():
    for g in range(5):
        theta = theta_class(g)
        assert (theta ** (g + 1)).is_zero()
        top = (theta ** g).scale(Fraction(1, factorial(g)))
        # theta^g / g! spans the top exterior component with coefficient +-1
        assert abs(top_exterior_coefficient(top)) == 1
        assert integral_jacobian(top) == 1


def test_chern_class_examples():
    assert chern_classes(0).beta == Element.unit(0)
    assert chern_classes(1).beta == z_gen(1) - theta_class(1)
    g2 = chern_classes(2)
    theta = theta_class(2)
    z = z_gen(2)
    assert g2.beta == z * z - theta * z + (theta * theta).scale(Fraction(1, 2))


def test_beta_monic_in_z():
    for g in range(5):
        beta = chern_classes(g).beta
        assert beta.coefficient(Monomial((), g)) == 1
        assert beta.degree() == 2 * g


def test_chern_classes_commute():
    for g in range(5):
        classes = chern_classes(g).classes
        assert classes[0] == Element.unit(g)
        for i, u in enumerate(classes):
            assert u.is_zero() or u.degree() == 2 * i
            for v in classes:
                assert u * v == v * u


def test_beta_shifted_examples():
    assert beta_shifted(1, 0) == z_gen(1) - theta_class(1)
    z = z_gen(1)
    assert beta_shifted(1, 1) == z * z - theta_class(1) * z
    assert beta_shifted(0, 3) == z_gen(0) ** 3
    assert beta_shifted(2, 2).degree() == 8
    with pytest.raises(ValueError):
        beta_shifted(1, -1)


def test_integral_jacobian_rejects_z_terms():
    with pytest.raises(ValueError):
        integral_jacobian(z_gen(1))
