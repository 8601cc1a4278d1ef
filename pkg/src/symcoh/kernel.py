"""Exact arithmetic in the bigraded-commutative algebra Lambda(e_1..e_2g)[z].

Monomials are pairs (S, j) with S a strictly increasing tuple of generator
indices in 1..2g and j >= 0 the exponent of the central degree-2 variable z.
Each e_i has degree 1, so the cohomological degree of a monomial is
|S| + 2*j.  Products of exterior generators carry the Koszul sign of the
permutation that sorts the concatenated index list; a repeated index kills
the product.  Coefficients are exact rationals throughout, and every type in
this module is an immutable value.

The second half of the module is a small dense linear-algebra toolkit over
Fraction (row reduction, nullspaces, solving, inversion) together with the
Subspace/LinearMap types that the ideal and correspondence machinery is
built on.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple


class AmbientMismatchError(ValueError):
    """Raised when elements built over different generator counts are mixed."""


class Monomial(NamedTuple):
    """An exterior monomial e_{i1}...e_{ik} * z^j with i1 < ... < ik."""

    ext: tuple[int, ...]
    z: int

    @property
    def degree(self) -> int:
        return len(self.ext) + 2 * self.z


MONOMIAL_ONE = Monomial((), 0)


def _merge_ext(a: tuple[int, ...], b: tuple[int, ...]):
    """Merge two strictly increasing index tuples, tracking the Koszul sign.

    Returns (sign, merged) or None when an index repeats.  The sign is the
    parity of the permutation sorting the concatenation a + b.
    """
    sign = 1
    out: list[int] = []
    i, j = 0, 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the len(a) - i remaining entries of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def multiply_monomials(a: Monomial, b: Monomial):
    """Product of two monomials: (sign, monomial), or None when it vanishes."""
    merged = _merge_ext(a.ext, b.ext)
    if merged is None:
        return None
    sign, ext = merged
    return sign, Monomial(ext, a.z + b.z)


def _validate_monomial(genus: int, mono: Monomial) -> None:
    ext, zexp = mono
    if zexp < 0:
        raise ValueError(f"negative z exponent in {mono}")
    last = 0
    for idx in ext:
        if idx <= last:
            raise ValueError(f"exterior indices not strictly increasing in {mono}")
        last = idx
    if last > 2 * genus:
        raise AmbientMismatchError(
            f"generator index {last} exceeds 2g = {2 * genus}"
        )


class Element:
    """A sparse exact-rational combination of monomials.

    Elements are immutable values; all arithmetic returns new elements.  Two
    elements are equal iff they have the same genus and the same term map.
    Mixing elements of different genus raises AmbientMismatchError.
    """

    __slots__ = ("genus", "terms")

    def __init__(self, genus: int, terms: Iterable | dict | None = None):
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        collected: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                if not isinstance(mono, Monomial):
                    mono = Monomial(tuple(mono[0]), mono[1])
                _validate_monomial(genus, mono)
                c = collected.get(mono, _ZERO) + Fraction(coeff)
                if c:
                    collected[mono] = c
                elif mono in collected:
                    del collected[mono]
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "terms", collected)

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("Element is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, genus: int) -> "Element":
        return cls(genus)

    @classmethod
    def unit(cls, genus: int, coeff=1) -> "Element":
        return cls(genus, [(MONOMIAL_ONE, coeff)])

    @classmethod
    def monomial(cls, genus: int, mono: Monomial, coeff=1) -> "Element":
        return cls(genus, [(mono, coeff)])

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, _ZERO)

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def homogeneous_part(self, d: int) -> "Element":
        return Element(
            self.genus, [(m, c) for m, c in self.terms.items() if m.degree == d]
        )

    def components(self) -> dict[int, "Element"]:
        by_degree: dict[int, list] = {}
        for m, c in self.terms.items():
            by_degree.setdefault(m.degree, []).append((m, c))
        return {d: Element(self.genus, tc) for d, tc in sorted(by_degree.items())}

    # -- arithmetic --------------------------------------------------------

    def _check_genus(self, other: "Element") -> None:
        if self.genus != other.genus:
            raise AmbientMismatchError(
                f"cannot combine elements of genus {self.genus} and {other.genus}"
            )

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._check_genus(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m, _ZERO) + c
            if acc:
                terms[m] = acc
            elif m in terms:
                del terms[m]
        return _raw_element(self.genus, terms)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return _raw_element(self.genus, {m: -c for m, c in self.terms.items()})

    def scale(self, coeff) -> "Element":
        c = Fraction(coeff)
        if not c:
            return Element(self.genus)
        return _raw_element(self.genus, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check_genus(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                prod = multiply_monomials(m1, m2)
                if prod is None:
                    continue
                sign, mono = prod
                c = acc.get(mono, _ZERO) + sign * c1 * c2
                if c:
                    acc[mono] = c
                elif mono in acc:
                    del acc[mono]
        return _raw_element(self.genus, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> "Element":
        if power < 0:
            raise ValueError("negative powers are not defined")
        result = Element.unit(self.genus)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.genus == other.genus
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from . import expressions

        return f"Element(g={self.genus}, {expressions.render(self)!r})"


_ZERO = Fraction(0)


def _raw_element(genus: int, terms: dict[Monomial, Fraction]) -> Element:
    """Build an Element from an already-collected term dict (no validation)."""
    elem = object.__new__(Element)
    object.__setattr__(elem, "genus", genus)
    object.__setattr__(elem, "terms", terms)
    return elem


def exterior_gen(genus: int, i: int) -> Element:
    """The degree-1 generator e_i, 1 <= i <= 2g."""
    if not 1 <= i <= 2 * genus:
        raise AmbientMismatchError(f"generator index {i} out of range 1..{2 * genus}")
    return Element(genus, [(Monomial((i,), 0), 1)])


def z_gen(genus: int) -> Element:
    """The central degree-2 polynomial variable z."""
    return Element(genus, [(Monomial((), 1), 1)])


# ---------------------------------------------------------------------------
# Degree bases
# ---------------------------------------------------------------------------


class DegreeBasis:
    """The canonical ordered monomial basis of one degree component.

    Ordering is z-exponent major, then lexicographic on the exterior index
    tuples, so bases (and everything serialized from them) are byte-stable.
    """

    __slots__ = ("genus", "degree", "monomials", "_index")

    def __init__(self, genus: int, degree: int):
        if genus < 0 or degree < 0:
            raise ValueError("genus and degree must be nonnegative")
        monos = []
        for zexp in range(degree // 2 + 1):
            k = degree - 2 * zexp
            if k > 2 * genus:
                continue
            for ext in itertools.combinations(range(1, 2 * genus + 1), k):
                monos.append(Monomial(ext, zexp))
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "monomials", tuple(monos))
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(monos)})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("DegreeBasis is immutable")

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self, mono: Monomial) -> int:
        return self._index[mono]

    def element(self, i: int) -> Element:
        return Element.monomial(self.genus, self.monomials[i])

    def to_vector(self, x: Element) -> list[Fraction]:
        """Coordinates of a homogeneous element lying in this component."""
        if x.genus != self.genus:
            raise AmbientMismatchError("element genus does not match basis")
        vec = [_ZERO] * len(self.monomials)
        for m, c in x.terms.items():
            if m.degree != self.degree:
                raise ValueError(
                    f"term of degree {m.degree} in a degree-{self.degree} component"
                )
            vec[self._index[m]] = c
        return vec

    def from_vector(self, vec) -> Element:
        return Element(
            self.genus,
            [(m, c) for m, c in zip(self.monomials, vec) if c],
        )

    def __repr__(self) -> str:
        return f"DegreeBasis(g={self.genus}, d={self.degree}, dim={len(self)})"


_BASIS_CACHE: dict[tuple[int, int], DegreeBasis] = {}


def degree_basis(genus: int, degree: int) -> DegreeBasis:
    """Cached canonical basis of the degree component (size formula below).

    dim = sum over j >= 0 with degree - 2j >= 0 of binomial(2g, degree - 2j).
    """
    key = (genus, degree)
    basis = _BASIS_CACHE.get(key)
    if basis is None:
        basis = DegreeBasis(genus, degree)
        _BASIS_CACHE[key] = basis
    return basis


def degree_dimension(genus: int, degree: int) -> int:
    return sum(
        comb(2 * genus, degree - 2 * j)
        for j in range(degree // 2 + 1)
        if degree - 2 * j <= 2 * genus
    )


# ---------------------------------------------------------------------------
# Dense exact linear algebra
# ---------------------------------------------------------------------------

Matrix = list  # list of rows, each a list of Fraction


def zeros_matrix(rows: int, cols: int) -> Matrix:
    return [[_ZERO] * cols for _ in range(rows)]


def identity_matrix(n: int) -> Matrix:
    one = Fraction(1)
    return [[one if i == j else _ZERO for j in range(n)] for i in range(n)]


def mat_transpose(m: Matrix) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return [[_ZERO] * (len(b[0]) if b else 0) for _ in range(len(a))]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [_ZERO] * cols
        for k, coeff in enumerate(row):
            if not coeff:
                continue
            brow = b[k]
            for j in range(cols):
                if brow[j]:
                    acc[j] += coeff * brow[j]
        out.append(acc)
    return out


def mat_vec(a: Matrix, v: list) -> list:
    out = []
    for row in a:
        s = _ZERO
        for coeff, x in zip(row, v):
            if coeff and x:
                s += coeff * x
        out.append(s)
    return out


def dot(u: list, v: list) -> Fraction:
    s = _ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def rref(rows: Iterable) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (copy); returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def mat_rank(m: Matrix) -> int:
    return len(rref(m)[0])


def nullspace(m: Matrix, ncols: int | None = None) -> Matrix:
    """Basis (in reduced echelon form) of the solution space of m @ x = 0."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [_ZERO] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        basis.append(vec)
    return rref(basis)[0]


def solve(m: Matrix, b: list):
    """One exact solution of m @ x = b, or None when inconsistent."""
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [bv] for row, bv in zip(m, b)]
    reduced, pivots = rref(aug)
    x = [_ZERO] * ncols
    for row, pc in zip(reduced, pivots):
        if pc == ncols:
            return None
        x[pc] = row[-1]
    return x


def invert(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = len(m)
    aug = [list(row) + list(idrow) for row, idrow in zip(m, identity_matrix(n))]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


# ---------------------------------------------------------------------------
# Subspaces and linear maps between degree components
# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of one degree component, stored as an RREF row space.

    `ambient` is either the DegreeBasis of the component or, for abstract
    graded modules, a plain dimension.
    """

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient, rows: Iterable = ()):
        reduced, _ = rref(rows)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in reduced))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Subspace is immutable")

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient) if isinstance(self.ambient, DegreeBasis) else self.ambient

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def contains_vector(self, vec) -> bool:
        residual = [Fraction(x) for x in vec]
        for row in self.rows:
            pivot = next((c for c, x in enumerate(row) if x), None)
            if pivot is not None and residual[pivot]:
                f = residual[pivot]
                residual = [x - f * y for x, y in zip(residual, row)]
        return not any(residual)

    def contains(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient components")
        return all(self.contains_vector(row) for row in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient components")
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def basis_elements(self) -> list[Element]:
        if not isinstance(self.ambient, DegreeBasis):
            raise ValueError("abstract subspace has no monomial realization")
        return [self.ambient.from_vector(row) for row in self.rows]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def full_subspace(basis: DegreeBasis) -> Subspace:
    return Subspace(basis, identity_matrix(len(basis)))


class LinearMap:
    """A dense rational matrix between two canonical degree bases."""

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain: DegreeBasis, codomain: DegreeBasis, matrix: Matrix):
        for row in matrix:
            if len(row) != len(domain):
                raise ValueError("matrix width does not match domain dimension")
        if len(matrix) != len(codomain):
            raise ValueError("matrix height does not match codomain dimension")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in matrix))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("LinearMap is immutable")

    def apply_vector(self, vec) -> list:
        return mat_vec(self.matrix, vec)

    def apply(self, x: Element) -> Element:
        return self.codomain.from_vector(mat_vec(self.matrix, self.domain.to_vector(x)))

    def __repr__(self) -> str:
        return f"LinearMap({len(self.domain)} -> {len(self.codomain)})"


def multiplication_map(a: Element, d: int) -> LinearMap:
    """The map x -> a*x from the degree-d component, in canonical bases."""
    if not a.is_homogeneous():
        raise ValueError("multiplier must be homogeneous")
    k = a.degree()
    domain = degree_basis(a.genus, d)
    codomain = degree_basis(a.genus, d + k)
    cols = []
    for mono in domain.monomials:
        image = a * Element.monomial(a.genus, mono)
        cols.append(codomain.to_vector(image))
    return LinearMap(domain, codomain, mat_transpose(cols) if cols else zeros_matrix(len(codomain), 0))


class ImagePreimage(NamedTuple):
    image: Subspace
    preimage: Subspace
    kernel: Subspace


def image_and_preimage(f: LinearMap, target: Subspace | None = None) -> ImagePreimage:
    """Image, preimage of a target subspace, and kernel of an exact map.

    `target` lives in the codomain component; None means the zero subspace,
    in which case the preimage equals the kernel.
    """
    n_dom = len(f.domain)
    n_cod = len(f.codomain)
    image = Subspace(f.codomain, [list(col) for col in zip(*f.matrix)] if f.matrix else [])
    kernel = Subspace(f.domain, nullspace([list(r) for r in f.matrix], n_dom))
    if target is None:
        return ImagePreimage(image, kernel, kernel)
    if target.ambient_dim != n_cod:
        raise ValueError("target dimension does not match codomain")
    # x is in the preimage iff f(x) = sum of target rows, i.e. the block
    # system [f | -T^t] has a solution with prescribed x part.
    block = []
    t_rows = [list(r) for r in target.rows]
    for i in range(n_cod):
        row = [f.matrix[i][j] for j in range(n_dom)]
        row.extend(-t[i] for t in t_rows)
        block.append(row)
    joint = nullspace(block, n_dom + len(t_rows))
    projected = [vec[:n_dom] for vec in joint]
    preimage = Subspace(f.domain, projected)
    return ImagePreimage(image, preimage, kernel)
