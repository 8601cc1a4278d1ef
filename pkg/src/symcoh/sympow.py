"""The presented algebra A_n = H*(Jacobian)[z] / I_n modelling H*(Sym^n C).

Classes are stored as normal forms with respect to the quotient presentation;
cup products lift, multiply and reduce.  The structural maps are realized on
lifts: pullback along the inclusion of a smaller symmetric power is induced
by the identity (the ideals are nested), and pushforward multiplies the lift
by the appropriate power of z.  Integration is normalized by the theta
divisor: the fundamental class is the normal form of z^{n-g} theta^g / g!
when n >= g, and below that it is calibrated by pushing forward into the
projective-bundle range n = 2g-1, where the top coefficient can be read off
directly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .ideals import IdealSpec, QuotientPresentation
from .jacobian import chern_classes, integral_jacobian, theta_class
from .kernel import (
    Element,
    Monomial,
    degree_basis,
    multiply_monomials,
    solve,
    z_gen,
)


class OwnerMismatchError(ValueError):
    """Raised when classes over different symmetric powers are combined."""


class ClassRep:
    """A cohomology class of one symmetric power, stored in normal form."""

    __slots__ = ("owner", "value")

    def __init__(self, owner: "SymPowAlgebra", value: Element):
        object.__setattr__(self, "owner", owner)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ClassRep is immutable")

    def _check_owner(self, other: "ClassRep") -> None:
        if self.owner is not other.owner:
            raise OwnerMismatchError(
                f"classes over (g={self.owner.genus}, n={self.owner.power}) and "
                f"(g={other.owner.genus}, n={other.owner.power}) cannot be combined"
            )

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __add__(self, other: "ClassRep") -> "ClassRep":
        if not isinstance(other, ClassRep):
            return NotImplemented
        self._check_owner(other)
        return ClassRep(self.owner, self.value + other.value)

    def __sub__(self, other: "ClassRep") -> "ClassRep":
        if not isinstance(other, ClassRep):
            return NotImplemented
        self._check_owner(other)
        return ClassRep(self.owner, self.value - other.value)

    def __neg__(self) -> "ClassRep":
        return ClassRep(self.owner, -self.value)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassRep(self.owner, self.value.scale(other))
        if isinstance(other, ClassRep):
            return self.owner.cup(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassRep(self.owner, self.value.scale(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassRep)
            and self.owner is other.owner
            and self.value == other.value
        )

    def __hash__(self):
        return hash((id(self.owner), self.value))

    def __repr__(self) -> str:
        from . import expressions

        return (
            f"ClassRep(g={self.owner.genus}, n={self.owner.power}, "
            f"{expressions.render(self.value)!r})"
        )


class SymPowAlgebra:
    """Presentation of H*(Sym^n C) as a quotient of H*(J)[z]."""

    def __init__(self, genus: int, power: int):
        if genus < 0 or power < 0:
            raise ValueError("genus and power must be nonnegative")
        self.genus = genus
        self.power = power
        self.spec = IdealSpec.sym_power(genus, power)
        self.presentation = QuotientPresentation(self.spec)
        self._integral: dict[Monomial, Fraction] | None = None
        self._fundamental: ClassRep | None = None

    # -- basic structure ---------------------------------------------------

    @property
    def top_degree(self) -> int:
        return 2 * self.power

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        return self.presentation.quotient_dim(d)

    def betti(self) -> list[int]:
        return [self.dim(d) for d in range(self.top_degree + 1)]

    def basis(self, d: int) -> list[ClassRep]:
        """Normal-form monomial basis of one degree component."""
        return [
            ClassRep(self, Element.monomial(self.genus, m))
            for m in self.presentation.normalform_monomials(d)
        ]

    def basis_monomials(self, d: int) -> list[Monomial]:
        return list(self.presentation.normalform_monomials(d))

    # -- the quotient map and ring structure --------------------------------

    def psi(self, x: Element) -> ClassRep:
        """The presentation map: reduce a polynomial class to normal form.

        Components of degree above 2n reduce to zero because the ideal fills
        those degrees entirely; this is a computed fact, not a truncation.
        """
        if x.genus != self.genus:
            raise OwnerMismatchError("element genus does not match the algebra")
        return ClassRep(self, self.presentation.reduce(x))

    def unit(self) -> ClassRep:
        return self.psi(Element.unit(self.genus))

    @property
    def zeta(self) -> ClassRep:
        """The class of z (the divisor class of the embedded Sym^{n-1} C)."""
        return self.psi(z_gen(self.genus))

    def cup(self, a: ClassRep, b: ClassRep) -> ClassRep:
        if a.owner is not self or b.owner is not self:
            raise OwnerMismatchError("cup arguments do not belong to this algebra")
        return self.psi(a.value * b.value)

    # -- integration --------------------------------------------------------

    def top_monomial(self) -> Monomial:
        monos = self.presentation.normalform_monomials(self.top_degree)
        if len(monos) != 1:
            raise RuntimeError(
                f"top degree of (g={self.genus}, n={self.power}) has dimension "
                f"{len(monos)}, expected 1"
            )
        return monos[0]

    def _integral_functional(self) -> dict[Monomial, Fraction]:
        """Linear functional on the degree-2n ambient component realizing the trace."""
        if self._integral is not None:
            return self._integral
        g, n = self.genus, self.power
        basis = degree_basis(g, self.top_degree)
        if n >= 2 * g - 1:
            m_top = self.top_monomial()
            fundamental_lift = (
                theta_class(g) ** g * z_gen(g) ** (n - g)
            ).scale(Fraction(1, factorial(g)))
            reduced = self.presentation.reduce(fundamental_lift)
            c_top = reduced.coefficient(m_top)
            if not c_top:
                raise RuntimeError("fundamental lift has no top normal-form coefficient")
            functional = {}
            for mono in basis.monomials:
                r = self.presentation.reduce(Element.monomial(g, mono))
                functional[mono] = r.coefficient(m_top) / c_top
        else:
            stable = build(g, 2 * g - 1)
            upstairs = stable._integral_functional()
            shift = 2 * g - 1 - n
            functional = {}
            for mono in basis.monomials:
                functional[mono] = upstairs[Monomial(mono.ext, mono.z + shift)]
        self._integral = functional
        return functional

    def integrate(self, a: ClassRep) -> Fraction:
        """The trace: integral of the top-degree component, 1 on the fundamental class."""
        if a.owner is not self:
            raise OwnerMismatchError("class does not belong to this algebra")
        functional = self._integral_functional()
        total = Fraction(0)
        for mono, coeff in a.value.terms.items():
            if mono.degree == self.top_degree:
                total += coeff * functional[mono]
        return total

    @property
    def fundamental_class(self) -> ClassRep:
        if self._fundamental is not None:
            return self._fundamental
        g, n = self.genus, self.power
        if n >= g:
            lift = (theta_class(g) ** g * z_gen(g) ** (n - g)).scale(
                Fraction(1, factorial(g))
            )
            fund = self.psi(lift)
        else:
            top = ClassRep(self, Element.monomial(g, self.top_monomial()))
            scale = self.integrate(top)
            if not scale:
                raise RuntimeError("top class integrates to zero; bad stabilization")
            fund = top * Fraction(1, scale)
        self._fundamental = fund
        return fund

    # -- Poincare pairing ----------------------------------------------------

    def pairing_matrix(self, d: int) -> list[list[Fraction]]:
        """P[i][j] = integral of b_i^(d) cup b_j^(2n-d) over normal-form bases."""
        if not 0 <= d <= self.top_degree:
            raise ValueError("degree out of range")
        functional = self._integral_functional()
        rows = []
        for u in self.presentation.normalform_monomials(d):
            row = []
            for v in self.presentation.normalform_monomials(self.top_degree - d):
                prod = multiply_monomials(u, v)
                if prod is None:
                    row.append(Fraction(0))
                else:
                    sign, mono = prod
                    row.append(sign * functional[mono])
            rows.append(row)
        return rows

    # -- pushforward to the Jacobian -----------------------------------------

    def pi_pushforward(self, a: ClassRep) -> Element:
        """The adjoint of psi restricted to H*(J), under the two trace pairings.

        Returns the unique z-free x with <x, w>_J = integral(a cup psi(w)) for
        every w in H*(J).
        """
        if a.owner is not self:
            raise OwnerMismatchError("class does not belong to this algebra")
        g, n = self.genus, self.power
        out = Element.zero(g)
        for deg, part in a.value.components().items():
            e = deg - 2 * (n - g)
            if e < 0 or e > 2 * g:
                continue
            dom = [
                Monomial(ext, 0) for ext in itertools.combinations(range(1, 2 * g + 1), e)
            ]
            cod = [
                Monomial(ext, 0)
                for ext in itertools.combinations(range(1, 2 * g + 1), 2 * g - e)
            ]
            gram = []
            rhs = []
            part_class = ClassRep(self, part)
            for w in cod:
                row = []
                for m in dom:
                    prod = multiply_monomials(m, w)
                    if prod is None:
                        row.append(Fraction(0))
                    else:
                        sign, mono = prod
                        row.append(sign * integral_jacobian(Element.monomial(g, mono)))
                gram.append(row)
                rhs.append(
                    self.integrate(self.cup(part_class, self.psi(Element.monomial(g, w))))
                )
            coords = solve(gram, rhs)
            if coords is None:
                raise RuntimeError("Jacobian pairing failed to solve; duality broken")
            out = out + Element(g, [(m, c) for m, c in zip(dom, coords) if c])
        return out

    def __repr__(self) -> str:
        kind = self.spec.kind
        return f"SymPowAlgebra(g={self.genus}, n={self.power}, ideal={kind})"


_ALGEBRA_CACHE: dict[tuple[int, int], SymPowAlgebra] = {}


def build(genus: int, power: int) -> SymPowAlgebra:
    """Cached constructor for the presented algebras."""
    key = (genus, power)
    algebra = _ALGEBRA_CACHE.get(key)
    if algebra is None:
        algebra = SymPowAlgebra(genus, power)
        _ALGEBRA_CACHE[key] = algebra
    return algebra


def pullback(m: int, n: int, a: ClassRep) -> ClassRep:
    """Restriction along Sym^m C -> Sym^n C, induced by the identity on lifts."""
    if m > n:
        raise ValueError("pullback requires m <= n")
    if a.owner.power != n:
        raise OwnerMismatchError(f"class does not live on the power-{n} algebra")
    return build(a.owner.genus, m).psi(a.value)


def pushforward(m: int, n: int, a: ClassRep) -> ClassRep:
    """Gysin map along Sym^m C -> Sym^n C: multiply the lift by z^{n-m}."""
    if m > n:
        raise ValueError("pushforward requires m <= n")
    if a.owner.power != m:
        raise OwnerMismatchError(f"class does not live on the power-{m} algebra")
    g = a.owner.genus
    return build(g, n).psi(a.value * z_gen(g) ** (n - m))


class MattuckCheck:
    """Per-index outcome of the Chern-class consistency check."""

    def __init__(self, index: int, expected: Element, computed: Element):
        self.index = index
        self.expected = expected
        self.computed = computed
        self.ok = expected == computed


def verify_mattuck_chern(genus: int) -> list[MattuckCheck]:
    """Check u_i = (-1)^i pi_* (1) over Sym^{g-i} C for 1 <= i <= g.

    The inversion automorphism acts trivially on even classes in this model,
    so it contributes only the sign.
    """
    if genus < 1:
        raise ValueError("the check needs genus at least 1")
    chern = chern_classes(genus)
    checks = []
    for i in range(1, genus + 1):
        algebra = build(genus, genus - i)
        pushed = algebra.pi_pushforward(algebra.unit())
        computed = pushed.scale((-1) ** i)
        checks.append(MattuckCheck(i, chern.classes[i], computed))
    return checks
