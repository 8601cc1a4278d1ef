"""Graded modules over the kernel algebra and the Theorem-B submodules.

A GradedModule is a window of finite-dimensional degree components together
with one matrix per generator action (each e_i raises degree by 1, z by 2).
The ring relations e_i^2 = 0, e_i e_j = -e_j e_i and centrality of z are
verified degreewise at construction, so an invalid module never reaches the
submodule machinery.

The submodule N = (ideal) * M is computed degreewise: for a principal ideal
it is the image of the action of the shifted generator; for a colon ideal it
is the span of a*m over ring elements a in the colon components.  The
module-theoretic variant { m : z^k m in (generator) M } is available behind
a flag; the two coincide when M is the ring itself.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .ideals import PRINCIPAL, IdealSpec, ideal_degree_component
from .kernel import (
    Element,
    Monomial,
    Subspace,
    degree_basis,
    mat_mul,
    multiplication_map,
    nullspace,
    zeros_matrix,
)

SCHEMA_VERSION = 1


class ModuleValidationError(ValueError):
    """Raised when action matrices violate shapes or the ring relations."""


class GradedModule:
    def __init__(self, genus: int, dims: dict[int, int], e_actions, z_action):
        """dims maps degree -> dimension; actions map source degree -> matrix.

        e_actions[i][d] is the matrix of the e_i action M_d -> M_{d+1}
        (i in 1..2g) and z_action[d] the matrix of z: M_d -> M_{d+2}.
        Missing degrees are zero-dimensional; missing matrices are zero maps.
        """
        self.genus = genus
        self.dims = {d: n for d, n in dims.items() if n}
        self.e_actions = {
            i: {d: m for d, m in mats.items()} for i, mats in e_actions.items()
        }
        self.z_action = dict(z_action)
        self._operator_cache: dict[tuple[Monomial, int], list] = {}
        self._validate()

    # -- structure ---------------------------------------------------------

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def _action(self, gen: int, d: int) -> list:
        """Matrix of one generator action from degree d (zero map when absent)."""
        if gen == 0:  # z
            target, table = d + 2, self.z_action
        else:
            target, table = d + 1, self.e_actions.get(gen, {})
        mat = table.get(d)
        if mat is None:
            return zeros_matrix(self.dim(target), self.dim(d))
        return mat

    def _validate(self) -> None:
        two_g = 2 * self.genus
        for i, mats in self.e_actions.items():
            if not 1 <= i <= two_g:
                raise ModuleValidationError(f"action index {i} out of range 1..{two_g}")
            for d, m in mats.items():
                if len(m) != self.dim(d + 1) or any(len(r) != self.dim(d) for r in m):
                    raise ModuleValidationError(f"e_{i} matrix at degree {d} has wrong shape")
        for d, m in self.z_action.items():
            if len(m) != self.dim(d + 2) or any(len(r) != self.dim(d) for r in m):
                raise ModuleValidationError(f"z matrix at degree {d} has wrong shape")
        for d in self.degrees():
            for i in range(1, two_g + 1):
                ei_d = self._action(i, d)
                for j in range(i, two_g + 1):
                    ej_d = self._action(j, d)
                    anti = _mat_add(
                        mat_mul(self._action(i, d + 1), ej_d),
                        mat_mul(self._action(j, d + 1), ei_d),
                    )
                    if not _is_zero_matrix(anti):
                        raise ModuleValidationError(
                            f"actions e_{i}, e_{j} fail anticommutation at degree {d}"
                        )
                comm = _mat_sub(
                    mat_mul(self._action(0, d + 1), ei_d),
                    mat_mul(self._action(i, d + 2), self._action(0, d)),
                )
                if not _is_zero_matrix(comm):
                    raise ModuleValidationError(f"z fails to commute with e_{i} at degree {d}")

    # -- ring action -------------------------------------------------------

    def monomial_operator(self, mono: Monomial, d: int) -> list:
        """Matrix of the action of one monomial from degree d."""
        key = (mono, d)
        cached = self._operator_cache.get(key)
        if cached is not None:
            return cached
        src_dim = self.dim(d)
        steps = [0] * mono.z + list(reversed(mono.ext))
        op = None
        src = d
        for gen in steps:
            step = self._action(gen, src)
            src += 2 if gen == 0 else 1
            if op is None:
                op = step
            elif not op or not step:
                # a zero-dimensional intermediate kills the composite
                op = zeros_matrix(len(step), src_dim)
            else:
                op = mat_mul(step, op)
        if op is None:
            op = [
                [Fraction(i == j) for j in range(src_dim)] for i in range(src_dim)
            ]
        self._operator_cache[key] = op
        return op

    def element_operator(self, x: Element, d: int) -> list:
        """Matrix of the action of a homogeneous ring element from degree d."""
        if x.genus != self.genus:
            raise ModuleValidationError("ring element genus does not match module")
        out = zeros_matrix(self.dim(d + x.degree()), self.dim(d))
        for mono, coeff in x.terms.items():
            op = self.monomial_operator(mono, d)
            for r, row in enumerate(op):
                target = out[r]
                for c, v in enumerate(row):
                    if v:
                        target[c] += coeff * v
        return out

    # -- constructions -----------------------------------------------------

    @classmethod
    def from_ring(cls, genus: int, max_degree: int) -> "GradedModule":
        """The ring itself on degrees 0..max_degree, acting by multiplication."""
        dims = {d: len(degree_basis(genus, d)) for d in range(max_degree + 1)}
        e_actions: dict[int, dict[int, list]] = {}
        z_action: dict[int, list] = {}
        for i in range(1, 2 * genus + 1):
            gen = Element.monomial(genus, Monomial((i,), 0))
            e_actions[i] = {
                d: [list(r) for r in multiplication_map(gen, d).matrix]
                for d in range(max_degree)
            }
        zgen = Element.monomial(genus, Monomial((), 1))
        for d in range(max_degree - 1):
            z_action[d] = [list(r) for r in multiplication_map(zgen, d).matrix]
        return cls(genus, dims, e_actions, z_action)

    def shift(self, amount: int) -> "GradedModule":
        """The same module with every degree raised by `amount`."""
        dims = {d + amount: n for d, n in self.dims.items()}
        e_actions = {
            i: {d + amount: m for d, m in mats.items()} for i, mats in self.e_actions.items()
        }
        z_action = {d + amount: m for d, m in self.z_action.items()}
        return GradedModule(self.genus, dims, e_actions, z_action)

    def direct_sum(self, other: "GradedModule") -> "GradedModule":
        if other.genus != self.genus:
            raise ModuleValidationError("cannot sum modules of different genus")
        degrees = set(self.dims) | set(other.dims)
        dims = {d: self.dim(d) + other.dim(d) for d in degrees}
        e_actions = {}
        for i in range(1, 2 * self.genus + 1):
            e_actions[i] = {
                d: _block_diag(self._action(i, d), other._action(i, d))
                for d in degrees
                if self.dim(d + 1) + other.dim(d + 1)
            }
        z_action = {
            d: _block_diag(self._action(0, d), other._action(0, d))
            for d in degrees
            if self.dim(d + 2) + other.dim(d + 2)
        }
        return GradedModule(self.genus, dims, e_actions, z_action)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "genus": self.genus,
            "degrees": {str(d): n for d, n in sorted(self.dims.items())},
            "actions": {},
        }
        for i in sorted(self.e_actions):
            doc["actions"][f"e{i}"] = {
                str(d): _encode_matrix(m) for d, m in sorted(self.e_actions[i].items())
            }
        doc["actions"]["z"] = {
            str(d): _encode_matrix(m) for d, m in sorted(self.z_action.items())
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "GradedModule":
        doc = json.loads(text)
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ModuleValidationError("unsupported module schema version")
        genus = int(doc["genus"])
        dims = {int(d): int(n) for d, n in doc["degrees"].items()}
        e_actions: dict[int, dict[int, list]] = {}
        z_action: dict[int, list] = {}
        for name, mats in doc.get("actions", {}).items():
            decoded = {int(d): _decode_matrix(m) for d, m in mats.items()}
            if name == "z":
                z_action = decoded
            elif name.startswith("e"):
                e_actions[int(name[1:])] = decoded
            else:
                raise ModuleValidationError(f"unknown action name {name!r}")
        return cls(genus, dims, e_actions, z_action)


def _encode_matrix(m) -> list[list[str]]:
    return [[str(Fraction(x)) for x in row] for row in m]


def _decode_matrix(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _is_zero_matrix(m) -> bool:
    return all(not x for row in m for x in row)


def _block_diag(a, b):
    rows_a = len(a)
    rows_b = len(b)
    cols_a = len(a[0]) if a else 0
    cols_b = len(b[0]) if b else 0
    out = []
    for r in range(rows_a):
        out.append(list(a[r]) + [Fraction(0)] * cols_b)
    for r in range(rows_b):
        out.append([Fraction(0)] * cols_a + list(b[r]))
    return out


def submodule_degree_component(
    module: GradedModule,
    spec: IdealSpec,
    d: int,
    module_colon: bool = False,
) -> Subspace:
    """Degree-d component of (ideal)*M, or of the module-theoretic colon.

    With module_colon=True the colon branch computes
    { m in M_d : z^k m in (generator) M } instead of ((generator):z^k) M.
    """
    dim_d = module.dim(d)
    rows: list = []
    if spec.kind == PRINCIPAL:
        shifted = spec.generator * Element.monomial(
            module.genus, Monomial((), spec.parameter)
        )
        src = d - shifted.degree()
        if module.dim(src):
            op = module.element_operator(shifted, src)
            rows.extend(list(col) for col in zip(*op))
        return Subspace(dim_d, rows)
    k = spec.parameter
    if module_colon:
        gen_src = d + 2 * k - spec.generator.degree()
        target_rows: list = []
        if module.dim(gen_src):
            op = module.element_operator(spec.generator, gen_src)
            target_rows.extend(list(col) for col in zip(*op))
        target = Subspace(module.dim(d + 2 * k), target_rows)
        zk = module.element_operator(
            Element.monomial(module.genus, Monomial((), k)), d
        )
        if not dim_d:
            return Subspace(0)
        block = []
        t_rows = [list(r) for r in target.rows]
        for i in range(module.dim(d + 2 * k)):
            row = [zk[i][j] for j in range(dim_d)]
            row.extend(-t[i] for t in t_rows)
            block.append(row)
        joint = nullspace(block, dim_d + len(t_rows))
        return Subspace(dim_d, [vec[:dim_d] for vec in joint])
    for e in range(d + 1):
        src = d - e
        if not module.dim(src):
            continue
        component = ideal_degree_component(spec, e)
        if component.is_zero():
            continue
        basis = degree_basis(module.genus, e)
        for row in component.rows:
            ring_elem = basis.from_vector(row)
            op = module.element_operator(ring_elem, src)
            rows.extend(list(col) for col in zip(*op))
    return Subspace(dim_d, rows)
