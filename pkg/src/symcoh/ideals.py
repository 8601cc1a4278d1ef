"""Degreewise construction of the presentation ideals and their quotients.

The ideal is either principal, (beta * z^s), or a colon ideal
((beta) : z^k) = { x : x * z^k lies in (beta) }.  Both are computed one
degree at a time by exact linear algebra: the principal component is the
image of a multiplication map, the colon component is the preimage of the
generator's image under the (injective) multiplication by z^k.  No Groebner
machinery is needed because every degree component is finite dimensional.

A QuotientPresentation pairs each ideal component with a greedily chosen
monomial complement (the normal-form basis) and the induced reduction map.
Degree components are materialized lazily and cached, so a presentation can
be probed at any degree; this is what makes vanishing above the top degree
an emergent, checkable fact rather than an imposed truncation.
"""

from __future__ import annotations

from typing import NamedTuple

from .jacobian import chern_classes
from .kernel import (
    Element,
    Subspace,
    degree_basis,
    image_and_preimage,
    invert,
    mat_vec,
    multiplication_map,
    rref,
    z_gen,
)

PRINCIPAL = "principal"
COLON = "colon"


class IdealSpec(NamedTuple):
    """A principal ideal (generator * z^shift) or colon ideal ((generator) : z^exponent)."""

    generator: Element
    kind: str
    parameter: int  # shift for principal, exponent for colon

    @property
    def genus(self) -> int:
        return self.generator.genus

    @classmethod
    def principal(cls, generator: Element, shift: int) -> "IdealSpec":
        if shift < 0:
            raise ValueError("principal shift must be nonnegative")
        if not generator.is_homogeneous():
            raise ValueError("ideal generator must be homogeneous")
        return cls(generator, PRINCIPAL, shift)

    @classmethod
    def colon(cls, generator: Element, exponent: int) -> "IdealSpec":
        if exponent < 1:
            raise ValueError("colon exponent must be at least 1")
        if not generator.is_homogeneous():
            raise ValueError("ideal generator must be homogeneous")
        return cls(generator, COLON, exponent)

    @classmethod
    def sym_power(cls, genus: int, power: int) -> "IdealSpec":
        """The ideal I_n: principal for n >= 2g-1, colon below the bundle range."""
        beta = chern_classes(genus).beta
        if power >= 2 * genus - 1:
            return cls.principal(beta, power - 2 * genus + 1)
        return cls.colon(beta, 2 * genus - 1 - power)


def ideal_degree_component(spec: IdealSpec, d: int) -> Subspace:
    """The degree-d component of the ideal as a subspace of the canonical basis."""
    g = spec.genus
    basis = degree_basis(g, d)
    gen_degree = spec.generator.degree()
    if spec.kind == PRINCIPAL:
        source = d - gen_degree - 2 * spec.parameter
        if source < 0:
            return Subspace(basis)
        shifted = spec.generator * z_gen(g) ** spec.parameter
        mul = multiplication_map(shifted, source)
        return image_and_preimage(mul).image
    # colon: x * z^k must land in the image of multiplication by the generator
    k = spec.parameter
    source = d + 2 * k - gen_degree
    if source < 0:
        target = Subspace(degree_basis(g, d + 2 * k))
    else:
        target = image_and_preimage(multiplication_map(spec.generator, source)).image
    zk_map = multiplication_map(z_gen(g) ** k, d)
    return image_and_preimage(zk_map, target).preimage


class _DegreeData(NamedTuple):
    ideal: Subspace
    normalform: tuple[int, ...]  # indices into the canonical basis
    reduce_matrix: tuple  # |normalform| x dim rows


class QuotientPresentation:
    """Normal forms for the quotient of the ambient algebra by an ideal.

    For each degree the normal-form basis is the first subset of canonical
    monomials whose images are independent modulo the ideal component; the
    reduction map is the projection onto their span along the ideal.
    """

    def __init__(self, spec: IdealSpec):
        self.spec = spec
        self.genus = spec.genus
        self._degrees: dict[int, _DegreeData] = {}

    def _component(self, d: int) -> _DegreeData:
        data = self._degrees.get(d)
        if data is not None:
            return data
        basis = degree_basis(self.genus, d)
        n = len(basis)
        ideal = ideal_degree_component(self.spec, d)
        span = [list(r) for r in ideal.rows]
        chosen: list[int] = []
        for i in range(n):
            unit = [0] * n
            unit[i] = 1
            probe, _ = rref(span + [unit])
            if len(probe) > len(span):
                span = probe
                chosen.append(i)
        # invert [ideal basis | chosen units] to express x = v + sum c_j u_j
        columns = [list(r) for r in ideal.rows]
        for i in chosen:
            unit = [0] * n
            unit[i] = 1
            columns.append(unit)
        if n:
            full_inverse = invert([list(col) for col in zip(*columns)])
            reduce_rows = full_inverse[ideal.dim :]
        else:
            reduce_rows = []
        data = _DegreeData(ideal, tuple(chosen), tuple(tuple(r) for r in reduce_rows))
        self._degrees[d] = data
        return data

    def ideal_subspace(self, d: int) -> Subspace:
        return self._component(d).ideal

    def normalform_monomials(self, d: int):
        basis = degree_basis(self.genus, d)
        return [basis.monomials[i] for i in self._component(d).normalform]

    def dims(self, d: int) -> tuple[int, int, int]:
        """(ambient, ideal, quotient) dimensions at one degree."""
        data = self._component(d)
        ambient = len(degree_basis(self.genus, d))
        return ambient, data.ideal.dim, len(data.normalform)

    def quotient_dim(self, d: int) -> int:
        return len(self._component(d).normalform)

    def reduce(self, x: Element) -> Element:
        """The unique representative of x + I supported on normal-form monomials."""
        out = Element.zero(self.genus)
        for d, part in x.components().items():
            data = self._component(d)
            basis = degree_basis(self.genus, d)
            coords = mat_vec([list(r) for r in data.reduce_matrix], basis.to_vector(part))
            out = out + Element(
                self.genus,
                [(basis.monomials[i], c) for i, c in zip(data.normalform, coords) if c],
            )
        return out

    def betti(self, max_degree: int) -> list[int]:
        return [self.quotient_dim(d) for d in range(max_degree + 1)]


def build_quotient(spec: IdealSpec, max_degree: int | None = None) -> QuotientPresentation:
    """Presentation with components materialized up to max_degree (more on demand)."""
    pres = QuotientPresentation(spec)
    if max_degree is not None:
        for d in range(max_degree + 1):
            pres._component(d)
    return pres


def reduce(pres: QuotientPresentation, x: Element) -> Element:
    return pres.reduce(x)
