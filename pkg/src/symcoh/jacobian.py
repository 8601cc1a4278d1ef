"""Rational cohomology model of the Jacobian of a genus-g curve.

H*(J) is the exterior algebra on 2g degree-1 generators e_1..e_2g with the
principal polarization theta = sum_i e_i e_{g+i}.  The Chern data of the
Mattuck bundles enters only through the classes u_i = (-1)^i theta^i / i!
and the monic degree-2g polynomial beta = sum_i u_i z^{g-i}, which generates
the presentation ideals of the symmetric-power algebras.

The sign of u_i is pinned by the rank-one case: for g = 1, n = 1 the class z
must map to the positive point class theta, which forces beta = z - theta.
The oracle suite validates this convention end to end; if a global flip is
ever wanted, this module is the unique switch.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .kernel import (
    Element,
    Monomial,
    exterior_gen,
    z_gen,
)


class JacobianRing(NamedTuple):
    """Exterior model of H*(J): generators, theta, and the unit."""

    genus: int
    theta: Element
    unit: Element

    def e(self, i: int) -> Element:
        return exterior_gen(self.genus, i)

    @property
    def z(self) -> Element:
        return z_gen(self.genus)


class ChernData(NamedTuple):
    """Chern classes u_0..u_g of the stable Mattuck bundle and beta."""

    genus: int
    classes: tuple[Element, ...]
    beta: Element


def theta_class(genus: int) -> Element:
    theta = Element.zero(genus)
    for i in range(1, genus + 1):
        theta = theta + exterior_gen(genus, i) * exterior_gen(genus, genus + i)
    return theta


def build_jacobian(genus: int) -> JacobianRing:
    """Exterior algebra on 2g degree-1 generators with the theta class."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return JacobianRing(genus, theta_class(genus), Element.unit(genus))


_CHERN_CACHE: dict[int, ChernData] = {}


def chern_classes(genus: int) -> ChernData:
    """u_i = (-1)^i theta^i / i! for 0 <= i <= g, and beta = sum u_i z^{g-i}."""
    cached = _CHERN_CACHE.get(genus)
    if cached is not None:
        return cached
    theta = theta_class(genus)
    z = z_gen(genus)
    classes = []
    power = Element.unit(genus)
    for i in range(genus + 1):
        classes.append(power.scale(Fraction((-1) ** i, factorial(i))))
        power = power * theta
    beta = Element.zero(genus)
    for i, u in enumerate(classes):
        beta = beta + u * z ** (genus - i)
    data = ChernData(genus, tuple(classes), beta)
    _CHERN_CACHE[genus] = data
    return data


def beta_shifted(genus: int, shift: int) -> Element:
    """beta * z^shift, homogeneous of degree 2g + 2*shift."""
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    return chern_classes(genus).beta * z_gen(genus) ** shift


def top_exterior_coefficient(x: Element) -> Fraction:
    """Coefficient of the top monomial e_1...e_2g (z-free) in x."""
    top = Monomial(tuple(range(1, 2 * x.genus + 1)), 0)
    return x.coefficient(top)


_TOP_NORMALIZER: dict[int, Fraction] = {}


def integral_jacobian(x: Element) -> Fraction:
    """The trace on H*(J), normalized so that theta^g / g! integrates to 1.

    Only the z-free top exterior component contributes; every monomial
    involving z is outside H*(J) and must not occur.
    """
    genus = x.genus
    for mono in x.terms:
        if mono.z:
            raise ValueError("integral over J is defined on z-free classes only")
    norm = _TOP_NORMALIZER.get(genus)
    if norm is None:
        theta_top = theta_class(genus) ** genus
        norm = top_exterior_coefficient(theta_top.scale(Fraction(1, factorial(genus))))
        _TOP_NORMALIZER[genus] = norm
    return top_exterior_coefficient(x) / norm
