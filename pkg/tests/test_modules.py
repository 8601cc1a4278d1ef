"""Graded modules and the Theorem-B submodule machinery."""

from __future__ import annotations

from fractions import Fraction

import pytest

from symcoh.ideals import IdealSpec, ideal_degree_component
from symcoh.modules import GradedModule, ModuleValidationError, submodule_degree_component


def test_ring_module_matches_ideal_components():
    for g in (1, 2):
        ring = GradedModule.from_ring(g, 12)
        for n in range(4):
            spec = IdealSpec.sym_power(g, n)
            for d in range(11):
                expected = ideal_degree_component(spec, d)
                got = submodule_degree_component(ring, spec, d)
                assert got.dim == expected.dim, (g, n, d)
                assert got.rows == expected.rows


def test_module_colon_agrees_on_ring():
    ring = GradedModule.from_ring(2, 10)
    spec = IdealSpec.sym_power(2, 2)
    for d in range(7):
        assert submodule_degree_component(
            ring, spec, d, module_colon=True
        ) == submodule_degree_component(ring, spec, d)


def test_shift_equivariance():
    ring = GradedModule.from_ring(1, 8)
    shifted = ring.shift(1)
    spec = IdealSpec.sym_power(1, 2)
    for d in range(7):
        assert (
            submodule_degree_component(shifted, spec, d + 1).dim
            == submodule_degree_component(ring, spec, d).dim
        )


def test_direct_sum_additivity():
    ring = GradedModule.from_ring(1, 8)
    doubled = ring.direct_sum(ring)
    spec = IdealSpec.sym_power(1, 1)
    for d in range(7):
        assert (
            submodule_degree_component(doubled, spec, d).dim
            == 2 * submodule_degree_component(ring, spec, d).dim
        )


def test_json_round_trip():
    ring = GradedModule.from_ring(1, 5)
    text = ring.to_json()
    loaded = GradedModule.from_json(text)
    assert loaded.dims == ring.dims
    spec = IdealSpec.sym_power(1, 1)
    for d in range(4):
        assert submodule_degree_component(
            loaded, spec, d
        ) == submodule_degree_component(ring, spec, d)


def test_validation_rejects_bad_relations():
    # a one-generator action that fails e^2 = 0
    dims = {0: 1, 1: 1, 2: 1}
    e_actions = {1: {0: [[Fraction(1)]], 1: [[Fraction(1)]]}, 2: {}}
    with pytest.raises(ModuleValidationError):
        GradedModule(1, dims, e_actions, {})


def test_validation_rejects_bad_shapes():
    dims = {0: 2, 1: 1}
    e_actions = {1: {0: [[Fraction(1)]]}}  # should be 1 x 2
    with pytest.raises(ModuleValidationError):
        GradedModule(1, dims, e_actions, {})


def test_validation_rejects_noncommuting_z():
    dims = {0: 1, 1: 1, 2: 1, 3: 1}
    e_actions = {
        1: {0: [[Fraction(1)]], 2: [[Fraction(1)]]},
        2: {},
    }
    z_action = {0: [[Fraction(1)]], 1: [[Fraction(2)]]}
    # z e_1 = 2 but e_1 z = 1 at degree 0
    with pytest.raises(ModuleValidationError):
        GradedModule(1, dims, e_actions, z_action)
