"""The degreewise isomorphism between the presentation and the invariant model.

The algebra map sends e_i to the one-slot a_i class, e_{g+i} to the one-slot
b_i class and z to the one-slot point class.  It is verified to kill every
ideal component, to respect cup products against every generator, and to
induce a degreewise bijection from the presented algebra onto the invariant
subalgebra.  Nothing here assumes the theorem: a failed bijection is
reported as a hard failure.

The images of monomials are built recursively and memoized, so the matrices
for one (genus, power) pair are computed once and shared; the correspondence
calculus reuses the inverse matrices to transport transfer classes into the
presented algebras.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .kernel import (
    Element,
    Monomial,
    degree_basis,
    invert,
    mat_vec,
)
from .oracle import (
    InvariantModel,
    add_word_vectors,
    cup_words,
    invariant_model,
    orbit_sum,
    scale_word_vector,
)
from .sympow import build


class ComparisonFailure(RuntimeError):
    """The presented algebra and the invariant model are not isomorphic."""


class Comparison:
    """Verified comparison data for one (genus, power) pair."""

    def __init__(self, genus: int, power: int, budget: int | None = None):
        self.genus = genus
        self.power = power
        self.model: InvariantModel = invariant_model(genus, power, budget)
        self.algebra = build(genus, power)
        self.sign_flips: tuple[int, ...] = (1,) * genus
        self.phi: dict[int, list] = {}
        self.phibar: dict[int, list] = {}
        self.phibar_inv: dict[int, list] = {}
        self.cup_checked = False
        self.integral_consistent = False
        self._images: dict[Monomial, dict] = {}
        for flips in self._sign_candidates():
            self.sign_flips = flips
            self._images.clear()
            if self._try_build():
                break
        else:
            raise ComparisonFailure(
                f"no generator sign convention yields an isomorphism for "
                f"(g={genus}, n={power})"
            )
        self._check_cup_products()
        self._check_integrals()

    def _sign_candidates(self):
        yield (1,) * self.genus
        for flips in itertools.product((1, -1), repeat=self.genus):
            if all(f == 1 for f in flips):
                continue
            yield flips

    # -- generator images ----------------------------------------------------

    def _one_slot(self, letter: int) -> dict:
        if self.power == 0:
            return {}
        word = (letter,) + (0,) * (self.power - 1)
        return orbit_sum(self.genus, word)

    def _generator_image(self, index: int) -> dict:
        """Image of e_index (1..2g); z is handled by index 0."""
        g = self.genus
        if index == 0:
            return self._one_slot(2 * g + 1)
        if index <= g:
            return self._one_slot(index)
        flip = self.sign_flips[index - g - 1]
        image = self._one_slot(index)
        return image if flip == 1 else scale_word_vector(image, -1)

    def image_of_monomial(self, mono: Monomial) -> dict:
        cached = self._images.get(mono)
        if cached is not None:
            return cached
        if mono == Monomial((), 0):
            result = {(0,) * self.power: 1}
        elif mono.ext:
            head, rest = mono.ext[0], Monomial(mono.ext[1:], mono.z)
            result = cup_words(
                self.genus, self._generator_image(head), self.image_of_monomial(rest)
            )
        else:
            rest = Monomial((), mono.z - 1)
            result = cup_words(
                self.genus, self._generator_image(0), self.image_of_monomial(rest)
            )
        self._images[mono] = result
        return result

    def image_of_element(self, x: Element) -> dict:
        acc: dict = {}
        for mono, coeff in x.terms.items():
            acc = add_word_vectors(
                acc, scale_word_vector(self.image_of_monomial(mono), coeff)
            )
        return acc

    # -- construction and checks ----------------------------------------------

    def _try_build(self) -> bool:
        g, n = self.genus, self.power
        phi: dict[int, list] = {}
        phibar: dict[int, list] = {}
        phibar_inv: dict[int, list] = {}
        for d in range(2 * n + 1):
            basis = degree_basis(g, d)
            inv_dim = self.model.dim(d)
            columns = []
            for mono in basis.monomials:
                image = self.image_of_monomial(mono)
                if not self.model.is_invariant(image):
                    raise ComparisonFailure(
                        f"image of a degree-{d} monomial is not invariant"
                    )
                columns.append(self.model.to_coords(image, d))
            matrix = [
                [columns[c][r] for c in range(len(columns))] for r in range(inv_dim)
            ]
            # the map must kill the ideal component
            ideal = self.algebra.presentation.ideal_subspace(d)
            for row in ideal.rows:
                if any(mat_vec(matrix, list(row))):
                    return False
            # and restrict to a bijection on the normal-form complement
            nf_monos = self.algebra.presentation.normalform_monomials(d)
            if len(nf_monos) != inv_dim:
                return False
            nf_cols = [basis.index(m) for m in nf_monos]
            bar = [[matrix[r][c] for c in nf_cols] for r in range(inv_dim)]
            try:
                bar_inv = invert(bar) if inv_dim else []
            except ValueError:
                return False
            phi[d] = matrix
            phibar[d] = bar
            phibar_inv[d] = bar_inv
        self.phi = phi
        self.phibar = phibar
        self.phibar_inv = phibar_inv
        return True

    def _check_cup_products(self) -> None:
        """Multiplicativity against every generator on every basis monomial.

        Products of generators span the ring, so these identities make the
        map multiplicative on all of it by induction on word length.
        """
        g, n = self.genus, self.power
        generators = [(0, Element.monomial(g, Monomial((), 1)))]
        generators += [
            (i, Element.monomial(g, Monomial((i,), 0))) for i in range(1, 2 * g + 1)
        ]
        for d in range(2 * n):
            for mono in degree_basis(g, d).monomials:
                phi_mono = self.image_of_monomial(mono)
                for index, gen in generators:
                    product = gen * Element.monomial(g, mono)
                    expected = self.image_of_element(product)
                    computed = cup_words(g, self._generator_image(index), phi_mono)
                    if expected != computed:
                        raise ComparisonFailure(
                            f"cup compatibility fails at degree {d} for generator "
                            f"{index} (g={g}, n={n})"
                        )
        self.cup_checked = True

    def _check_integrals(self) -> None:
        top = self.algebra.top_degree
        for rep in self.algebra.basis(top):
            lhs = self.algebra.integrate(rep)
            rhs = self.model.integrate(self.image_of_element(rep.value))
            if lhs != rhs:
                return
        self.integral_consistent = True

    # -- transport -------------------------------------------------------------

    def to_algebra_coords(self, invariant: dict, d: int) -> list[Fraction]:
        """Coordinates in the normal-form basis of the class matching an invariant."""
        coords = self.model.to_coords(invariant, d)
        return mat_vec(self.phibar_inv[d], coords)

    def betti_match(self) -> bool:
        return self.algebra.betti() == self.model.betti()


_COMPARISON_CACHE: dict[tuple[int, int], Comparison] = {}


def comparison_map(genus: int, power: int, budget: int | None = None) -> Comparison:
    key = (genus, power)
    comp = _COMPARISON_CACHE.get(key)
    if comp is None:
        comp = Comparison(genus, power, budget)
        _COMPARISON_CACHE[key] = comp
    return comp


def transfer_matrix(model: InvariantModel, product_basis, d: int) -> list:
    """Matrix of the quotient-map pushforward from word space to invariants.

    Columns are the orbit coordinates of the full signed symmetrization of
    each word of the tensor-power basis.
    """
    from .oracle import symmetrize

    columns = [
        model.to_coords(symmetrize(model.genus, w), d) for w in product_basis
    ]
    return [
        [columns[c][r] for c in range(len(columns))] for r in range(model.dim(d))
    ]
