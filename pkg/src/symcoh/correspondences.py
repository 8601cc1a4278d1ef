"""Kunneth-level correspondence calculus between symmetric-power algebras.

A correspondence from X to Y is stored as bidegree blocks of rational
coefficient matrices over the normal-form bases of the two sides, one block
per pair of degrees (d1, d2) with d1 + d2 = top(X) + 2*shift.  Composition
contracts the middle factor through its Poincare pairing; the action on
classes is pull-cup-integrate-push.  All internal signs are pinned by two
normalization laws: the diagonal acts as the identity and the graph of a
pullback acts as that pullback.  Both are solved for exactly rather than
derived from a sign convention, so the calculus is convention-free.

The projection correspondence (the transfer of the graph of the coordinate
projection between self-products of the curve) is genuinely geometric: it is
computed in the word model of the self-products, symmetrized slotwise, and
transported into the presented algebras through the comparison isomorphism.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .comparison import comparison_map, transfer_matrix
from .kernel import Element, Subspace, invert, mat_mul, mat_transpose, mat_vec
from .oracle import product_model
from .sympow import ClassRep, SymPowAlgebra, build


def _space_top(space) -> int:
    return space.top_degree if isinstance(space, SymPowAlgebra) else space.top


def _space_pairing(space, d: int):
    if isinstance(space, SymPowAlgebra):
        return space.pairing_matrix(d)
    return space.pairing(d)


def _dual_matrix(space, d: int):
    """(-1)^d times the inverse-transpose of the pairing into degree d.

    Rows index the basis of degree top-d; this is the first-slot coefficient
    matrix that makes graph classes act correctly.
    """
    cache = getattr(space, "_dual_cache", None)
    if cache is None:
        cache = {}
        setattr(space, "_dual_cache", cache)
    cached = cache.get(d)
    if cached is not None:
        return cached
    pairing = _space_pairing(space, _space_top(space) - d)
    if pairing and len(pairing) != len(pairing[0]):
        raise ValueError("pairing matrix is not square; duality fails")
    sign = Fraction((-1) ** d)
    dual = (
        [[sign * x for x in row] for row in mat_transpose(invert(pairing))]
        if pairing
        else []
    )
    cache[d] = dual
    return dual


class CorrClass:
    """A homogeneous correspondence between two graded spaces."""

    __slots__ = ("source", "target", "shift", "blocks")

    def __init__(self, source, target, shift: int, blocks: dict):
        total = _space_top(source) + 2 * shift
        clean: dict[tuple[int, int], tuple] = {}
        for (d1, d2), matrix in blocks.items():
            if d1 + d2 != total:
                raise ValueError(
                    f"block ({d1},{d2}) violates the total degree {total}"
                )
            if any(any(x for x in row) for row in matrix):
                clean[(d1, d2)] = tuple(tuple(x) for x in matrix)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "blocks", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("CorrClass is immutable")

    def is_zero(self) -> bool:
        return not self.blocks

    def _compatible(self, other: "CorrClass") -> None:
        if self.source is not other.source or self.target is not other.target:
            raise ValueError("correspondences live between different spaces")
        if self.shift != other.shift:
            raise ValueError("correspondences have different shifts")

    def __add__(self, other: "CorrClass") -> "CorrClass":
        self._compatible(other)
        keys = set(self.blocks) | set(other.blocks)
        blocks = {}
        for key in keys:
            a = self.blocks.get(key)
            b = other.blocks.get(key)
            if a is None:
                blocks[key] = [list(r) for r in b]
            elif b is None:
                blocks[key] = [list(r) for r in a]
            else:
                blocks[key] = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        return CorrClass(self.source, self.target, self.shift, blocks)

    def __sub__(self, other: "CorrClass") -> "CorrClass":
        return self + other.scale(-1)

    def scale(self, coeff) -> "CorrClass":
        c = Fraction(coeff)
        blocks = {
            key: [[c * x for x in row] for row in matrix]
            for key, matrix in self.blocks.items()
        }
        return CorrClass(self.source, self.target, self.shift, blocks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CorrClass)
            and self.source is other.source
            and self.target is other.target
            and self.shift == other.shift
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.shift))

    def __repr__(self) -> str:
        return (
            f"CorrClass(shift={self.shift}, blocks={sorted(self.blocks)})"
        )


def graph_class(source, target, pullback_matrices: dict[int, list]) -> CorrClass:
    """The unique correspondence acting as the given degreewise linear map.

    `pullback_matrices[d]` is the matrix of a degree-preserving map from the
    source's degree-d component to the target's, written over the two bases.
    """
    top = _space_top(source)
    blocks = {}
    for d, fmat in pullback_matrices.items():
        if not fmat or not fmat[0]:
            continue
        dual = _dual_matrix(source, d)
        block = mat_mul(dual, mat_transpose(fmat))
        blocks[(top - d, d)] = block
    return CorrClass(source, target, 0, blocks)


def _identity_matrices(space) -> dict[int, list]:
    mats = {}
    for d in range(_space_top(space) + 1):
        n = space.dim(d)
        mats[d] = [[Fraction(i == j) for j in range(n)] for i in range(n)]
    return mats


def diagonal(space) -> CorrClass:
    """The diagonal class: acts as the identity by construction."""
    return graph_class(space, space, _identity_matrices(space))


def transpose(alpha: CorrClass) -> CorrClass:
    """Swap the two factors with the Koszul sign; shifts change by m - n."""
    blocks = {}
    for (d1, d2), matrix in alpha.blocks.items():
        sign = Fraction((-1) ** (d1 * d2))
        blocks[(d2, d1)] = [
            [sign * matrix[i][j] for i in range(len(matrix))]
            for j in range(len(matrix[0]))
        ]
    new_shift = (_space_top(alpha.source) - _space_top(alpha.target)) // 2 + alpha.shift
    return CorrClass(alpha.target, alpha.source, new_shift, blocks)


def compose(alpha: CorrClass, beta: CorrClass) -> CorrClass:
    """Composition by contracting the middle factor (first alpha, then beta)."""
    if alpha.target is not beta.source:
        raise ValueError("middle factors do not match")
    middle_top = _space_top(alpha.target)
    blocks: dict[tuple[int, int], list] = {}
    for (d1, d2), a_block in alpha.blocks.items():
        pairing = _space_pairing(alpha.target, d2)
        if not pairing:
            continue
        contracted = mat_mul(a_block, pairing)
        for (d2p, d3), b_block in beta.blocks.items():
            if d2p != middle_top - d2:
                continue
            product = mat_mul(contracted, b_block)
            key = (d1, d3)
            if key in blocks:
                blocks[key] = [
                    [x + y for x, y in zip(ra, rb)]
                    for ra, rb in zip(blocks[key], product)
                ]
            else:
                blocks[key] = product
    return CorrClass(alpha.source, beta.target, alpha.shift + beta.shift, blocks)


def _class_coords(algebra: SymPowAlgebra, rep: ClassRep, d: int) -> list:
    monos = algebra.basis_monomials(d)
    return [rep.value.coefficient(m) for m in monos]


def act(alpha: CorrClass, x: ClassRep) -> ClassRep:
    """Apply a correspondence between presented algebras to a class."""
    source = alpha.source
    target = alpha.target
    if not isinstance(source, SymPowAlgebra) or not isinstance(target, SymPowAlgebra):
        raise ValueError("act is defined on correspondences of presented algebras")
    if x.owner is not source:
        raise ValueError("class does not live on the source algebra")
    top = source.top_degree
    out = Element.zero(target.genus)
    for e, part in x.value.components().items():
        d1 = top - e
        coords = _class_coords(source, ClassRep(source, part), e)
        for (b1, d2), block in alpha.blocks.items():
            if b1 != d1:
                continue
            pairing = source.pairing_matrix(d1)
            weights = mat_vec(pairing, coords)
            sign = (-1) ** e
            result = [Fraction(0)] * target.dim(d2)
            for i, w in enumerate(weights):
                if not w:
                    continue
                row = block[i]
                for j in range(len(result)):
                    if row[j]:
                        result[j] += sign * w * row[j]
            monos = target.basis_monomials(d2)
            out = out + Element(
                target.genus, [(m, c) for m, c in zip(monos, result) if c]
            )
    return ClassRep(target, out)


def pullback_matrices(g: int, m: int, n: int) -> dict[int, list]:
    """Degreewise matrices of the restriction A_n -> A_m on normal forms."""
    from .sympow import pullback

    upstairs = build(g, n)
    downstairs = build(g, m)
    mats = {}
    for d in range(upstairs.top_degree + 1):
        columns = [
            _class_coords(downstairs, pullback(m, n, rep), d) if d <= downstairs.top_degree else []
            for rep in upstairs.basis(d)
        ]
        width = len(columns)
        height = downstairs.dim(d) if d <= downstairs.top_degree else 0
        mats[d] = [[columns[c][r] for c in range(width)] for r in range(height)]
    return mats


def pushforward_matrices(g: int, m: int, n: int) -> dict[int, list]:
    """Degreewise matrices of the Gysin map A_m -> A_n (degree shift 2(n-m))."""
    from .sympow import pushforward

    downstairs = build(g, m)
    upstairs = build(g, n)
    mats = {}
    for d in range(downstairs.top_degree + 1):
        columns = [
            _class_coords(upstairs, pushforward(m, n, rep), d + 2 * (n - m))
            for rep in downstairs.basis(d)
        ]
        width = len(columns)
        height = upstairs.dim(d + 2 * (n - m))
        mats[d] = [[columns[c][r] for c in range(width)] for r in range(height)]
    return mats


def projection_corr(g: int, m: int, n: int, budget: int | None = None) -> CorrClass:
    """The transfer of the graph of the projection of self-products.

    Computed as the graph class of the coordinate-projection pullback in the
    word models, pushed forward slotwise along both quotient maps, then
    transported to the presented algebras through the comparison
    isomorphisms.  With this (pushforward) normalization the case m = n
    yields n! times the diagonal.
    """
    if m > n:
        raise ValueError("projection correspondence requires m <= n")
    words_m = product_model(g, m, budget)
    words_n = product_model(g, n, budget)
    comp_m = comparison_map(g, m, budget)
    comp_n = comparison_map(g, n, budget)
    # graph of pr^*: append unit letters
    fmats = {}
    for d in range(words_m.top + 1):
        rows = []
        index_n = {w: i for i, w in enumerate(words_n.basis.get(d, ()))}
        for w_target in words_n.basis.get(d, ()):
            rows.append([Fraction(0)] * words_m.dim(d))
        for i, w in enumerate(words_m.basis.get(d, ())):
            lifted = w + (0,) * (n - m)
            rows[index_n[lifted]][i] = Fraction(1)
        fmats[d] = rows
    gamma_words = graph_class(words_m, words_n, fmats)
    # slotwise transfer into the invariant models, then into the algebras
    algebra_m = build(g, m)
    algebra_n = build(g, n)
    blocks = {}
    for (d1, d2), block in gamma_words.blocks.items():
        s_m = transfer_matrix(comp_m.model, words_m.basis.get(d1, ()), d1)
        s_n = transfer_matrix(comp_n.model, words_n.basis.get(d2, ()), d2)
        orbit_block = mat_mul(mat_mul(s_m, [list(r) for r in block]), mat_transpose(s_n))
        transported = mat_mul(
            mat_mul(comp_m.phibar_inv[d1], orbit_block),
            mat_transpose(comp_n.phibar_inv[d2]),
        )
        if any(any(x for x in row) for row in transported):
            blocks[(d1, d2)] = transported
    return CorrClass(algebra_m, algebra_n, 0, blocks)


class CollinoReport:
    """Outcome of the membership test behind the projection-correspondence lemma."""

    def __init__(self, genus: int, m: int, n: int):
        self.genus = genus
        self.m = m
        self.n = n
        self.block_results: list[tuple[tuple[int, int], int, int, bool]] = []
        self.passed = True

    def record(self, key, defect_dim: int, witness_dim: int, ok: bool) -> None:
        self.block_results.append((key, defect_dim, witness_dim, ok))
        if not ok:
            self.passed = False


def collino_membership(g: int, m: int, n: int, budget: int | None = None) -> CollinoReport:
    """Check that the reduced composite differs from the diagonal only inside
    the image of (pushforward from the next smaller power) x (identity).

    The projection correspondence carries the transfer normalization, so the
    composite is divided by m!(n-m)! (the generic multiplicity of the transfer
    over the reduced incidence correspondence) before comparing with the
    diagonal.  For m = 0 the witness space is zero and the difference itself
    must vanish.
    """
    report = CollinoReport(g, m, n)
    algebra_m = build(g, m)
    gamma = projection_corr(g, m, n, budget).scale(
        Fraction(1, factorial(m) * factorial(n - m))
    )
    graph_of_pullback = graph_class(build(g, n), algebra_m, pullback_matrices(g, m, n))
    difference = compose(gamma, graph_of_pullback) - diagonal(algebra_m)
    if m == 0:
        witness_rows: dict[int, Subspace] = {0: Subspace(1, [])}
    else:
        push = pushforward_matrices(g, m - 1, m)
        witness_rows = {}
        for d in range(algebra_m.top_degree + 1):
            fmat = push.get(d - 2, [])
            columns = [list(col) for col in zip(*fmat)] if fmat else []
            witness_rows[d] = Subspace(algebra_m.dim(d), columns)
    for (d1, d2), block in difference.blocks.items():
        witness = witness_rows.get(d1, Subspace(algebra_m.dim(d1), []))
        ok = all(
            witness.contains_vector([block[i][j] for i in range(len(block))])
            for j in range(len(block[0]))
        )
        report.record((d1, d2), len(block), witness.dim, ok)
    return report
