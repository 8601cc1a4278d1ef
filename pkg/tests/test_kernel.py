"""Kernel arithmetic and linear algebra."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from symcoh.kernel import (
    AmbientMismatchError,
    Element,
    Monomial,
    Subspace,
    degree_basis,
    degree_dimension,
    exterior_gen,
    image_and_preimage,
    mat_rank,
    multiplication_map,
    multiply_monomials,
    z_gen,
)


def brute_exterior_product(indices: list[int]):
    """Independent sign oracle: sort a generator word by adjacent swaps."""
    word = list(indices)
    if len(set(word)) != len(word):
        return None
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    return sign, tuple(word)


def test_multiply_canonical_order_examples():
    e1, e2 = exterior_gen(2, 1), exterior_gen(2, 2)
    assert e1 * e2 == Element.monomial(2, Monomial((1, 2), 0))
    assert e2 * e1 == Element.monomial(2, Monomial((1, 2), 0), -1)


def test_multiply_theta_square_brute_force():
    # theta = e1 e3 + e2 e4; expand the four cross terms with the sign oracle
    terms = [(1, 3), (2, 4)]
    expected: dict[tuple[int, ...], int] = {}
    for s in terms:
        for t in terms:
            result = brute_exterior_product(list(s) + list(t))
            if result is None:
                continue
            sign, word = result
            expected[word] = expected.get(word, 0) + sign
    assert expected == {(1, 2, 3, 4): -2}

    e = lambda i: exterior_gen(2, i)
    theta = e(1) * e(3) + e(2) * e(4)
    assert theta * theta == Element.monomial(2, Monomial((1, 2, 3, 4), 0), -2)


def test_multiply_mixed_genus_rejected():
    with pytest.raises(AmbientMismatchError):
        exterior_gen(1, 1) * exterior_gen(2, 1)


def test_monomial_product_repeated_index_vanishes():
    assert multiply_monomials(Monomial((1,), 0), Monomial((1,), 2)) is None


def test_degree_basis_examples():
    assert [m for m in degree_basis(1, 1).monomials] == [
        Monomial((1,), 0),
        Monomial((2,), 0),
    ]
    assert [m for m in degree_basis(1, 2).monomials] == [
        Monomial((1, 2), 0),
        Monomial((), 1),
    ]
    # size C(4,3) + C(4,1) = 8
    assert len(degree_basis(2, 3)) == 8


def test_degree_dimension_formula():
    from math import comb

    for g in range(4):
        for d in range(10):
            expected = sum(
                comb(2 * g, d - 2 * j) for j in range(d // 2 + 1) if d - 2 * j <= 2 * g
            )
            assert len(degree_basis(g, d)) == expected == degree_dimension(g, d)


def test_multiplication_map_examples():
    one = Element.unit(1)
    identity = multiplication_map(one, 3)
    assert [list(r) for r in identity.matrix] == [[1, 0], [0, 1]]

    by_z = multiplication_map(z_gen(1), 0)
    assert [list(r) for r in by_z.matrix] == [[0], [1]]

    beta = z_gen(1) - exterior_gen(1, 1) * exterior_gen(1, 2)
    mul = multiplication_map(beta, 1)
    # (z - theta) e_i = e_i z because theta e_i = 0
    assert [list(r) for r in mul.matrix] == [[1, 0], [0, 1]]


def test_multiplication_map_requires_homogeneous():
    with pytest.raises(ValueError):
        multiplication_map(Element.unit(1) + z_gen(1), 0)


def test_image_preimage_kernel_examples():
    # identity map, target = ambient: preimage is the ambient space
    identity = multiplication_map(Element.unit(1), 2)
    full = Subspace(degree_basis(1, 2), [[1, 0], [0, 1]])
    result = image_and_preimage(identity, full)
    assert result.preimage == full

    # zero map, target = zero: kernel is the ambient space
    zero_map = multiplication_map(Element.zero(1), 2)
    result = image_and_preimage(zero_map)
    assert result.kernel == full

    # multiplication by beta = z - theta from degree 2 to degree 4 is injective
    beta = z_gen(1) - exterior_gen(1, 1) * exterior_gen(1, 2)
    result = image_and_preimage(multiplication_map(beta, 2))
    assert result.kernel.dim == 0


def test_graded_commutativity_random():
    rng = random.Random(1234)
    for g in (1, 2, 3):
        basis_pool = [
            (d, m) for d in range(9) for m in degree_basis(g, d).monomials
        ]
        for _ in range(30):
            d1, m1 = rng.choice(basis_pool)
            d2, m2 = rng.choice(basis_pool)
            x = Element.monomial(g, m1, rng.randint(1, 5))
            y = Element.monomial(g, m2, rng.randint(1, 5))
            assert x * y == (y * x).scale((-1) ** (d1 * d2))


def test_associativity_distributivity_random():
    rng = random.Random(99)

    def random_element(g):
        value = Element.zero(g)
        for d in range(6):
            for m in degree_basis(g, d).monomials:
                if rng.random() < 0.3:
                    value = value + Element.monomial(g, m, rng.randint(-2, 2))
        return value

    for g in (1, 2):
        for _ in range(10):
            x, y, w = (random_element(g) for _ in range(3))
            assert (x * y) * w == x * (y * w)
            assert x * (y + w) == x * y + x * w


def test_generators_square_zero_and_z_central():
    for g in (1, 2, 3):
        z = z_gen(g)
        for i in range(1, 2 * g + 1):
            e = exterior_gen(g, i)
            assert (e * e).is_zero()
            assert e * z == z * e


def test_rank_identities_random_maps():
    from symcoh.kernel import LinearMap

    rng = random.Random(2024)
    for _ in range(15):
        matrix = [[Fraction(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)]
        f = LinearMap(degree_basis(2, 1), degree_basis(2, 1), matrix)
        target_rows = [
            [Fraction(rng.randint(-1, 1)) for _ in range(4)] for _ in range(2)
        ]
        target = Subspace(degree_basis(2, 1), target_rows)
        image, preimage, kernel = image_and_preimage(f, target)
        # rank-nullity and the defining property of the preimage
        assert kernel.dim + image.dim == 4
        for row in preimage.rows:
            fx = [sum(matrix[i][j] * row[j] for j in range(4)) for i in range(4)]
            assert target.contains_vector(fx)
        # the preimage always contains the kernel
        assert preimage.contains(kernel)


def test_subspace_containment_and_equality():
    basis = degree_basis(1, 2)
    a = Subspace(basis, [[1, 1]])
    b = Subspace(basis, [[2, 2], [1, 1]])
    assert a == b
    full = Subspace(basis, [[1, 0], [0, 1]])
    assert full.contains(a) and not a.contains(full)


def test_element_immutability_and_equality():
    x = exterior_gen(1, 1)
    with pytest.raises(AttributeError):
        x.genus = 2
    assert x == exterior_gen(1, 1)
    assert x != exterior_gen(1, 2)
    assert (x - x).is_zero()
