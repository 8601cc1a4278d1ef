"""Exact workbench for the cohomology of symmetric powers of a smooth curve.

The package computes, for any genus g and power n, a presentation of the
cohomology ring of Sym^n C as a quotient of H*(Jacobian)[z] by an explicit
principal or colon ideal, together with an independent invariant-theoretic
oracle, a correspondence calculus, and machine-checkable verification suites
for the structural identities that make the presentation work.
"""

from .kernel import (
    AmbientMismatchError,
    DegreeBasis,
    Element,
    LinearMap,
    Monomial,
    Subspace,
    degree_basis,
    exterior_gen,
    image_and_preimage,
    multiplication_map,
    z_gen,
)
from .jacobian import ChernData, JacobianRing, beta_shifted, build_jacobian, chern_classes
from .ideals import IdealSpec, QuotientPresentation, build_quotient, ideal_degree_component
from .modules import GradedModule, submodule_degree_component
from .sympow import ClassRep, OwnerMismatchError, SymPowAlgebra, build, pullback, pushforward
from .oracle import (
    BudgetExceededError,
    InvariantModel,
    invariant_betti,
    macdonald_poincare,
    symmetrize,
)

__all__ = [
    "AmbientMismatchError",
    "BudgetExceededError",
    "ChernData",
    "ClassRep",
    "DegreeBasis",
    "Element",
    "GradedModule",
    "IdealSpec",
    "InvariantModel",
    "JacobianRing",
    "LinearMap",
    "Monomial",
    "OwnerMismatchError",
    "QuotientPresentation",
    "Subspace",
    "SymPowAlgebra",
    "beta_shifted",
    "build",
    "build_jacobian",
    "build_quotient",
    "chern_classes",
    "degree_basis",
    "exterior_gen",
    "ideal_degree_component",
    "image_and_preimage",
    "invariant_betti",
    "macdonald_poincare",
    "multiplication_map",
    "pullback",
    "pushforward",
    "submodule_degree_component",
    "symmetrize",
    "z_gen",
]
