"""Independent ground truth for the symmetric-power cohomology.

The cohomology of the n-th symmetric power is computed here from first
principles as the S_n-invariant subalgebra of the n-fold graded tensor power
of H*(C).  H*(C) has the basis 1, a_1..a_g, b_1..b_g (degree 1) and a point
class (degree 2), with a_i b_i = point and all other products of positive
degree vanishing.  Words carry Koszul signs under the permutation action:
transposing two odd letters flips the sign, so an orbit sum dies as soon as
a word repeats an odd letter.

Letters are encoded as small ints: 0 is the unit, 1..g the a_i, g+1..2g the
b_i, 2g+1 the point class.  Words are tuples of letters; the canonical
representative of an orbit is the lexicographically least word, which for
this encoding is simply the sorted tuple.

A second, fully independent oracle expands the classical generating function
(1+xt)^{2g} / ((1-t)(1-x^2 t)) and extracts the coefficient of t^n.

The comparison map sends e_i to the one-slot a_i class, e_{g+i} to the
one-slot b_i class and z to the one-slot point class, and verifies that it
kills the presentation ideal and induces a degreewise bijection respecting
cup products.  The word-level product model of the n-fold self-product of
the curve (no invariance) also lives here; the correspondence calculus uses
it to realize transfer classes.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from math import comb, factorial

DEFAULT_BUDGET = 300_000
BUDGET_ENV_VAR = "SYMCOH_ORACLE_BUDGET"


class BudgetExceededError(RuntimeError):
    """The requested invariant model is beyond the configured word budget."""


def oracle_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BUDGET


def check_budget(genus: int, power: int, budget: int | None = None) -> None:
    limit = oracle_budget() if budget is None else budget
    words = (2 * genus + 2) ** power
    if words > limit:
        raise BudgetExceededError(
            f"(2g+2)^n = {words} words for g={genus}, n={power} "
            f"exceeds the budget {limit}"
        )


# ---------------------------------------------------------------------------
# Letters and words
# ---------------------------------------------------------------------------

UNIT = 0


def point_letter(genus: int) -> int:
    return 2 * genus + 1


def letter_degree(genus: int, letter: int) -> int:
    if letter == UNIT:
        return 0
    if letter == point_letter(genus):
        return 2
    return 1


def letter_name(genus: int, letter: int) -> str:
    if letter == UNIT:
        return "1"
    if letter == point_letter(genus):
        return "pt"
    if letter <= genus:
        return f"a{letter}"
    return f"b{letter - genus}"


def multiply_letters(genus: int, x: int, y: int):
    """Product of two curve classes: (sign, letter) or None when zero."""
    if x == UNIT:
        return 1, y
    if y == UNIT:
        return 1, x
    pt = point_letter(genus)
    if x == pt or y == pt:
        return None  # point * positive degree = 0
    # both odd; only dual pairs survive
    if x <= genus and y == x + genus:
        return 1, pt
    if y <= genus and x == y + genus:
        return -1, pt
    return None


def word_degree(genus: int, word: tuple[int, ...]) -> int:
    return sum(letter_degree(genus, l) for l in word)


def multiply_words(genus: int, u: tuple[int, ...], v: tuple[int, ...]):
    """Slotwise product with the Koszul sign of interleaving odd letters.

    Moving v_j left past u_i for every pair i > j contributes
    (-1)^{|u_i| |v_j|}; only odd letters matter.
    """
    pt = point_letter(genus)
    letters = []
    sign = 1
    # suffix[i]: number of odd letters of u strictly after slot i-1
    suffix = [0] * (len(u) + 1)
    for i in range(len(u) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + (1 if 0 < u[i] < pt else 0)
    for i, (x, y) in enumerate(zip(u, v)):
        prod = multiply_letters(genus, x, y)
        if prod is None:
            return None
        s, letter = prod
        if s < 0:
            sign = -sign
        if 0 < y < pt and suffix[i + 1] % 2:
            sign = -sign
        letters.append(letter)
    return sign, tuple(letters)


def cup_words(genus: int, x: dict, y: dict) -> dict:
    """Cup product of two sparse word combinations."""
    acc: dict[tuple[int, ...], object] = {}
    for u, cu in x.items():
        for v, cv in y.items():
            prod = multiply_words(genus, u, v)
            if prod is None:
                continue
            sign, w = prod
            c = acc.get(w, 0) + sign * cu * cv
            if c:
                acc[w] = c
            elif w in acc:
                del acc[w]
    return acc


def scale_word_vector(x: dict, coeff) -> dict:
    if not coeff:
        return {}
    return {w: coeff * c for w, c in x.items()}


def add_word_vectors(x: dict, y: dict) -> dict:
    acc = dict(x)
    for w, c in y.items():
        s = acc.get(w, 0) + c
        if s:
            acc[w] = s
        elif w in acc:
            del acc[w]
    return acc


def _permutation_sign_on_odds(genus: int, word: tuple[int, ...], perm: tuple[int, ...]) -> int:
    """Koszul sign of rearranging `word` so slot i moves to position perm[i]."""
    pt = point_letter(genus)
    targets = [perm[i] for i, letter in enumerate(word) if 0 < letter < pt]
    sign = 1
    for i in range(len(targets)):
        for j in range(i + 1, len(targets)):
            if targets[i] > targets[j]:
                sign = -sign
    return sign


def symmetrize(genus: int, word: tuple[int, ...]) -> dict:
    """Sum over all n! signed permutations of the word (the transfer of one word)."""
    n = len(word)
    acc: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        arranged = [UNIT] * n
        for i, p in enumerate(perm):
            arranged[p] = word[i]
        sign = _permutation_sign_on_odds(genus, word, perm)
        w = tuple(arranged)
        c = acc.get(w, 0) + sign
        if c:
            acc[w] = c
        elif w in acc:
            del acc[w]
    return acc


def canonical_word(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(word))


def orbit_survives(genus: int, word: tuple[int, ...]) -> bool:
    """An orbit sum survives iff no odd letter repeats."""
    pt = point_letter(genus)
    odd = [l for l in word if 0 < l < pt]
    return len(odd) == len(set(odd))


def _distinct_arrangements(canon: tuple[int, ...]):
    """All distinct rearrangements of a sorted letter tuple."""
    if not canon:
        yield ()
        return
    counts: dict[int, int] = {}
    for letter in canon:
        counts[letter] = counts.get(letter, 0) + 1
    letters = sorted(counts)
    slot = [0] * len(canon)

    def rec(pos: int):
        if pos == len(canon):
            yield tuple(slot)
            return
        for letter in letters:
            if counts[letter]:
                counts[letter] -= 1
                slot[pos] = letter
                yield from rec(pos + 1)
                counts[letter] += 1

    yield from rec(0)


def orbit_sum(genus: int, word: tuple[int, ...]) -> dict:
    """Signed sum over the distinct arrangements of a surviving canonical word.

    For a canonical word (odd letters distinct and sorted), the sign of an
    arrangement is the inversion parity of its odd-letter subsequence.
    """
    canon = canonical_word(word)
    pt = point_letter(genus)
    acc: dict[tuple[int, ...], int] = {}
    for w in _distinct_arrangements(canon):
        odds = [l for l in w if 0 < l < pt]
        sign = 1
        for i in range(len(odds)):
            for j in range(i + 1, len(odds)):
                if odds[i] > odds[j]:
                    sign = -sign
        acc[w] = sign
    return acc


# ---------------------------------------------------------------------------
# The invariant model of H*(C(n))
# ---------------------------------------------------------------------------


class InvariantModel:
    """S_n-invariants of the n-fold tensor power, degree by degree."""

    def __init__(self, genus: int, power: int, budget: int | None = None):
        check_budget(genus, power, budget)
        self.genus = genus
        self.power = power
        letters = [UNIT] + list(range(1, 2 * genus + 1)) + [point_letter(genus)]
        by_degree: dict[int, list[tuple[int, ...]]] = {
            d: [] for d in range(2 * power + 1)
        }
        for word in itertools.combinations_with_replacement(letters, power):
            if orbit_survives(genus, word):
                by_degree[word_degree(genus, word)].append(word)
        self.basis = {d: tuple(sorted(ws)) for d, ws in by_degree.items()}
        self._index = {
            d: {w: i for i, w in enumerate(ws)} for d, ws in self.basis.items()
        }

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def betti(self) -> list[int]:
        return [self.dim(d) for d in range(2 * self.power + 1)]

    def to_coords(self, x: dict, d: int) -> list:
        """Coordinates of an invariant element in the orbit basis of degree d.

        An invariant combination is determined by its coefficients at the
        canonical words, one per orbit.
        """
        vec = [Fraction(0)] * self.dim(d)
        index = self._index.get(d, {})
        for w, c in x.items():
            if w == canonical_word(w):
                vec[index[w]] = Fraction(c)
        return vec

    def from_coords(self, coords, d: int) -> dict:
        acc: dict = {}
        for c, w in zip(coords, self.basis.get(d, ())):
            if c:
                acc = add_word_vectors(acc, scale_word_vector(orbit_sum(self.genus, w), c))
        return acc

    def is_invariant(self, x: dict) -> bool:
        rebuilt: dict = {}
        for w, c in x.items():
            if w == canonical_word(w):
                rebuilt = add_word_vectors(
                    rebuilt, scale_word_vector(orbit_sum(self.genus, w), c)
                )
        return rebuilt == x

    def integrate(self, x: dict) -> Fraction:
        """(1/n!) times the tensor-power integral: coefficient of the all-point word."""
        top = tuple([point_letter(self.genus)] * self.power)
        return Fraction(x.get(top, 0), factorial(self.power))


_MODEL_CACHE: dict[tuple[int, int], InvariantModel] = {}


def invariant_model(genus: int, power: int, budget: int | None = None) -> InvariantModel:
    key = (genus, power)
    model = _MODEL_CACHE.get(key)
    if model is None:
        model = InvariantModel(genus, power, budget)
        _MODEL_CACHE[key] = model
    return model


def invariant_betti(genus: int, power: int, budget: int | None = None) -> list[int]:
    return invariant_model(genus, power, budget).betti()


# ---------------------------------------------------------------------------
# Macdonald's generating function
# ---------------------------------------------------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _series_mul(a: list[list[int]], b: list[list[int]], trunc: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(trunc + 1)]
    for i, pa in enumerate(a[: trunc + 1]):
        if not pa:
            continue
        for j, pb in enumerate(b[: trunc + 1 - i]):
            if not pb:
                continue
            prod = _poly_mul(pa, pb)
            acc = out[i + j]
            if len(acc) < len(prod):
                acc.extend([0] * (len(prod) - len(acc)))
            for k, v in enumerate(prod):
                acc[k] += v
    return out


def macdonald_poincare(genus: int, power: int) -> list[int]:
    """Coefficient of t^n in (1+xt)^{2g} / ((1-t)(1-x^2 t)), as x-coefficients.

    Expanded exactly as a truncated power series in t with integer polynomial
    coefficients; the result is padded to length 2n+1.
    """
    n = power
    numerator = [[0] * i + [comb(2 * genus, i)] for i in range(2 * genus + 1)]
    geom = [[1] for _ in range(n + 1)]  # 1/(1-t)
    geom_x2 = [[0] * (2 * i) + [1] for i in range(n + 1)]  # 1/(1-x^2 t)
    series = _series_mul(_series_mul(numerator, geom, n), geom_x2, n)
    coeffs = series[n] if n < len(series) else []
    out = list(coeffs) + [0] * (2 * n + 1 - len(coeffs))
    return out[: 2 * n + 1]


# ---------------------------------------------------------------------------
# Full tensor-power model of the n-fold self-product (no invariance)
# ---------------------------------------------------------------------------


class ProductModel:
    """H* of the n-fold product of the curve, as the full word space."""

    def __init__(self, genus: int, power: int, budget: int | None = None):
        check_budget(genus, power, budget)
        self.genus = genus
        self.power = power
        self.top = 2 * power
        letters = [UNIT] + list(range(1, 2 * genus + 1)) + [point_letter(genus)]
        by_degree: dict[int, list[tuple[int, ...]]] = {d: [] for d in range(self.top + 1)}
        for word in itertools.product(letters, repeat=power):
            by_degree[word_degree(genus, word)].append(word)
        self.basis = {d: tuple(sorted(ws)) for d, ws in by_degree.items()}
        self._index = {d: {w: i for i, w in enumerate(ws)} for d, ws in self.basis.items()}
        self._pairing: dict[int, list] = {}

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def to_coords(self, x: dict, d: int) -> list:
        vec = [Fraction(0)] * self.dim(d)
        index = self._index[d]
        for w, c in x.items():
            vec[index[w]] = Fraction(c)
        return vec

    def integrate(self, x: dict) -> Fraction:
        top = tuple([point_letter(self.genus)] * self.power)
        return Fraction(x.get(top, 0))

    def pairing(self, d: int) -> list:
        """Matrix of integral(w_i * w'_j) over bases of degrees d and top-d."""
        cached = self._pairing.get(d)
        if cached is not None:
            return cached
        rows = []
        for u in self.basis.get(d, ()):
            row = []
            for v in self.basis.get(self.top - d, ()):
                prod = multiply_words(self.genus, u, v)
                if prod is None:
                    row.append(Fraction(0))
                else:
                    sign, w = prod
                    row.append(self.integrate({w: sign}))
            rows.append(row)
        self._pairing[d] = rows
        return rows


_PRODUCT_CACHE: dict[tuple[int, int], ProductModel] = {}


def product_model(genus: int, power: int, budget: int | None = None) -> ProductModel:
    key = (genus, power)
    model = _PRODUCT_CACHE.get(key)
    if model is None:
        model = ProductModel(genus, power, budget)
        _PRODUCT_CACHE[key] = model
    return model
