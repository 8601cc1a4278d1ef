"""Named verification suites binding the modules into machine-checkable reports.

Each check returns a CheckReport with an exact pass/fail status (arithmetic
is exact, so there are no tolerances anywhere) and, on failure, a minimal
witness: the parameters, the degree, and an offending element rendered in
the expression grammar.  Oracle-backed checks degrade to a flagged partial
status when the configured word budget is exceeded instead of silently
running forever.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import expressions
from .ideals import COLON
from .kernel import Element, Monomial, Subspace, degree_basis, mat_rank, z_gen
from .modules import GradedModule, submodule_degree_component
from .oracle import BudgetExceededError, invariant_betti, macdonald_poincare
from .sympow import build, pullback, pushforward, verify_mattuck_chern

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
PARTIAL = "partial"


@dataclass
class CheckReport:
    name: str
    params: dict
    status: str = PASS
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def fail(self, witness: dict) -> None:
        self.status = FAIL
        self.witnesses.append(witness)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "status": self.status,
            "details": self.details,
            "witnesses": self.witnesses,
        }


def _render_subspace_witness(sub: Subspace, limit: int = 2) -> list[str]:
    try:
        elems = sub.basis_elements()
    except ValueError:
        return [f"abstract subspace of dim {sub.dim}"]
    return [expressions.render(e) for e in elems[:limit]]


def check_theorem_A(g: int, n_max: int) -> CheckReport:
    """Exactness bookkeeping, vanishing, nesting and the zeta-power identities."""
    report = CheckReport("theorem_A", {"genus": g, "n_max": n_max})
    dims_table = {}
    for n in range(n_max + 1):
        algebra = build(g, n)
        pres = algebra.presentation
        kind = pres.spec.kind
        top = 2 * n
        for d in range(top + 3):
            ambient, ideal_dim, quotient = pres.dims(d)
            if ambient != ideal_dim + quotient:
                report.fail({"n": n, "degree": d, "reason": "rank bookkeeping broken"})
            if d > top and quotient != 0:
                report.fail(
                    {
                        "n": n,
                        "degree": d,
                        "reason": f"quotient has dim {quotient} above the top degree",
                    }
                )
        dims_table[n] = {"kind": kind, "betti": algebra.betti()}
        # zeta powers: zeta^i = pushforward of 1 from power n-i, zeta^{n+1} = 0
        zeta = algebra.zeta
        power = algebra.unit()
        for i in range(n + 1):
            expected = pushforward(n - i, n, build(g, n - i).unit())
            if power != expected:
                report.fail(
                    {"n": n, "reason": f"zeta^{i} differs from the pushforward of 1"}
                )
            power = algebra.cup(power, zeta)
        if not algebra.psi(z_gen(g) ** (n + 1)).is_zero():
            report.fail({"n": n, "reason": f"zeta^{n + 1} does not vanish"})
        # pullback compatibility of the zeta classes
        for m in range(n + 1):
            if pullback(m, n, zeta) != build(g, m).zeta:
                report.fail({"n": n, "m": m, "reason": "pullback of zeta is not zeta"})
    # nesting and pushforward well-definedness along consecutive powers;
    # the general m <= n statements follow because containments compose
    for n in range(1, n_max + 1):
        m = n - 1
        pres_m = build(g, m).presentation
        pres_n = build(g, n).presentation
        for d in range(2 * n + 3):
            inner = pres_n.ideal_subspace(d)
            outer = pres_m.ideal_subspace(d)
            if not outer.contains(inner):
                report.fail(
                    {
                        "n": n,
                        "m": m,
                        "degree": d,
                        "reason": "ideal nesting I_n in I_m fails",
                        "witness": _render_subspace_witness(inner),
                    }
                )
            target = pres_n.ideal_subspace(d + 2)
            basis = degree_basis(g, d + 2)
            for elem in outer.basis_elements():
                shifted = elem * z_gen(g)
                if not shifted.is_zero() and not target.contains_vector(
                    basis.to_vector(shifted)
                ):
                    report.fail(
                        {
                            "n": n,
                            "m": m,
                            "degree": d,
                            "reason": "I_m * z is not inside I_n",
                            "witness": [expressions.render(shifted)],
                        }
                    )
    report.details["presentations"] = dims_table
    return report


def check_kernel_principality(g: int, max_degree: int | None = None) -> CheckReport:
    """At n = 2g-1 the colon ideal with exponent 0 equals the principal ideal.

    The colon with k = 0 is by definition membership in (beta), so the check
    compares the colon machinery's output against the principal component.
    """
    from .ideals import IdealSpec, ideal_degree_component

    report = CheckReport("kernel_principality", {"genus": g})
    if max_degree is None:
        max_degree = 4 * g + 2
    principal = IdealSpec.principal(generatorbeta(g), 0)
    for d in range(max_degree + 1):
        direct = ideal_degree_component(principal, d)
        colon_like = _colon_zero_component(g, d)
        if colon_like != direct:
            report.fail(
                {
                    "degree": d,
                    "reason": "colon exponent 0 differs from the principal ideal",
                }
            )
    return report


def generatorbeta(g: int) -> Element:
    from .jacobian import chern_classes

    return chern_classes(g).beta


def _colon_zero_component(g: int, d: int) -> Subspace:
    """{ x : x in (beta) } computed through the solve route with k = 0."""
    from .kernel import image_and_preimage, multiplication_map

    beta = generatorbeta(g)
    source = d - beta.degree()
    basis = degree_basis(g, d)
    if source < 0:
        target = Subspace(basis)
    else:
        target = image_and_preimage(multiplication_map(beta, source)).image
    identity = multiplication_map(Element.unit(g), d)
    return image_and_preimage(identity, target).preimage


def check_colon_monotonicity(g: int, k_max: int, max_degree: int) -> CheckReport:
    from .ideals import IdealSpec, ideal_degree_component

    report = CheckReport("colon_monotonicity", {"genus": g, "k_max": k_max})
    beta = generatorbeta(g)
    for d in range(max_degree + 1):
        previous = None
        for k in range(1, k_max + 1):
            current = ideal_degree_component(IdealSpec.colon(beta, k), d)
            if previous is not None and not current.contains(previous):
                report.fail({"degree": d, "k": k, "reason": "colon chain not increasing"})
            previous = current
    return report


def check_theorem_B(g: int, n_max: int, module: GradedModule | None = None) -> CheckReport:
    """The submodule machinery: ring specialization, shift and additivity laws."""
    from .ideals import IdealSpec

    report = CheckReport("theorem_B", {"genus": g, "n_max": n_max})
    window = 2 * n_max + 2
    if module is not None:
        dims = {}
        for n in range(n_max + 1):
            spec = IdealSpec.sym_power(g, n)
            dims[n] = [
                submodule_degree_component(module, spec, d).dim
                for d in range(window + 1)
            ]
        report.details["submodule_dims"] = dims
        return report
    ring = GradedModule.from_ring(g, window)
    shifted = ring.shift(1)
    doubled = ring.direct_sum(ring)
    table = {}
    for n in range(n_max + 1):
        spec = IdealSpec.sym_power(g, n)
        pres = build(g, n).presentation
        ring_dims = []
        for d in range(window - 1):
            component = submodule_degree_component(ring, spec, d)
            ideal_dim = pres.ideal_subspace(d).dim
            ring_dims.append(component.dim)
            if component.dim != ideal_dim:
                report.fail(
                    {
                        "n": n,
                        "degree": d,
                        "reason": "ring submodule disagrees with the ideal",
                        "got": component.dim,
                        "expected": ideal_dim,
                    }
                )
            if component != pres.ideal_subspace(d):
                report.fail(
                    {"n": n, "degree": d, "reason": "ring submodule has wrong subspace"}
                )
            if spec.kind == COLON:
                module_colon = submodule_degree_component(ring, spec, d, module_colon=True)
                if module_colon != component:
                    report.fail(
                        {
                            "n": n,
                            "degree": d,
                            "reason": "module-theoretic colon differs on the ring",
                        }
                    )
            shifted_component = submodule_degree_component(shifted, spec, d + 1)
            if shifted_component.dim != component.dim:
                report.fail(
                    {"n": n, "degree": d, "reason": "shift equivariance fails"}
                )
            doubled_component = submodule_degree_component(doubled, spec, d)
            if doubled_component.dim != 2 * component.dim:
                report.fail({"n": n, "degree": d, "reason": "additivity fails"})
        table[n] = ring_dims
    report.details["ring_submodule_dims"] = table
    return report


def check_oracles(g: int, n_max: int) -> CheckReport:
    """Triple Betti agreement plus the verified comparison isomorphism."""
    from .comparison import comparison_map

    report = CheckReport("oracles", {"genus": g, "n_max": n_max})
    rows = {}
    skipped = []
    for n in range(n_max + 1):
        algebra = build(g, n)
        presented = algebra.betti()
        series = macdonald_poincare(g, n)
        if presented != series:
            report.fail(
                {"n": n, "reason": "presentation vs Macdonald", "got": presented, "expected": series}
            )
        try:
            counted = invariant_betti(g, n)
            if counted != series:
                report.fail(
                    {"n": n, "reason": "invariant count vs Macdonald", "got": counted}
                )
            comp = comparison_map(g, n)
            if not (comp.betti_match() and comp.cup_checked and comp.integral_consistent):
                report.fail({"n": n, "reason": "comparison isomorphism incomplete"})
            rows[n] = {
                "betti": presented,
                "oracle": "verified",
                "sign_flips": list(comp.sign_flips),
            }
        except BudgetExceededError as exc:
            skipped.append({"n": n, "reason": str(exc)})
            rows[n] = {"betti": presented, "oracle": "budget_exceeded"}
    report.details["rows"] = rows
    if skipped:
        report.details["skipped"] = skipped
        if report.status == PASS:
            report.status = PARTIAL
    return report


def check_duality(g: int, n_max: int) -> CheckReport:
    """Poincare duality: symmetric Betti numbers, nondegenerate pairings."""
    report = CheckReport("poincare_duality", {"genus": g, "n_max": n_max})
    for n in range(n_max + 1):
        algebra = build(g, n)
        betti = algebra.betti()
        for d in range(2 * n + 1):
            if betti[d] != betti[2 * n - d]:
                report.fail({"n": n, "degree": d, "reason": "betti asymmetry"})
            pairing = algebra.pairing_matrix(d)
            if mat_rank([list(r) for r in pairing]) != betti[d]:
                report.fail({"n": n, "degree": d, "reason": "degenerate pairing"})
    return report


def check_euler_characteristics(g: int, n_max: int) -> CheckReport:
    report = CheckReport("euler_characteristic", {"genus": g, "n_max": n_max})
    for n in range(n_max + 1):
        betti = build(g, n).betti()
        chi = sum((-1) ** d * b for d, b in enumerate(betti))
        expected = n + 1 if g == 0 else (-1) ** n * comb(2 * g - 2, n)
        if chi != expected:
            report.fail({"n": n, "got": chi, "expected": expected})
    return report


def check_map_identities(g: int, n_max: int, seed: int = 20240901) -> CheckReport:
    """Functoriality, the projection formula and the rank laws for the maps."""
    report = CheckReport("map_identities", {"genus": g, "n_max": n_max})
    rng = random.Random(seed)

    def random_class(algebra):
        value = Element.zero(g)
        for d in range(algebra.top_degree + 1):
            for mono in algebra.presentation.normalform_monomials(d):
                if rng.random() < 0.5:
                    value = value + Element.monomial(g, mono, rng.randint(-3, 3))
        return algebra.psi(value)

    for n in range(n_max + 1):
        algebra = build(g, n)
        for m in range(n + 1):
            small = build(g, m)
            # ranks degreewise: pushforward injective, pullback surjective
            for d in range(2 * m + 1):
                basis = small.basis(d)
                push_cols = [
                    build(g, n)
                    .presentation.reduce(rep.value * z_gen(g) ** (n - m))
                    for rep in basis
                ]
                target_monos = algebra.basis_monomials(d + 2 * (n - m))
                matrix = [
                    [col.coefficient(mono) for col in push_cols] for mono in target_monos
                ]
                if mat_rank(matrix) != len(basis):
                    report.fail(
                        {"n": n, "m": m, "degree": d, "reason": "pushforward not injective"}
                    )
            for d in range(2 * n + 1):
                if d <= 2 * m:
                    image_rows = []
                    for rep in algebra.basis(d):
                        restricted = pullback(m, n, rep)
                        image_rows.append(
                            [
                                restricted.value.coefficient(mono)
                                for mono in small.basis_monomials(d)
                            ]
                        )
                    if mat_rank(image_rows) != small.dim(d):
                        report.fail(
                            {"n": n, "m": m, "degree": d, "reason": "pullback not surjective"}
                        )
            # projection formula on seeded random classes
            y = random_class(algebra)
            a = random_class(small)
            lhs = pushforward(m, n, small.cup(pullback(m, n, y), a))
            rhs = algebra.cup(y, pushforward(m, n, a))
            if lhs != rhs:
                report.fail({"n": n, "m": m, "reason": "projection formula fails"})
            # functoriality through an intermediate power
            for mid in range(m, n + 1):
                b = random_class(algebra)
                if pullback(m, mid, pullback(mid, n, b)) != pullback(m, n, b):
                    report.fail(
                        {"n": n, "mid": mid, "m": m, "reason": "pullback functoriality"}
                    )
                c = random_class(small)
                if pushforward(mid, n, pushforward(m, mid, c)) != pushforward(m, n, c):
                    report.fail(
                        {"n": n, "mid": mid, "m": m, "reason": "pushforward functoriality"}
                    )
            if pushforward(m, n, small.unit()) != _zeta_power(algebra, n - m):
                report.fail({"n": n, "m": m, "reason": "pushforward of 1 is not zeta^{n-m}"})
    return report


def _zeta_power(algebra, k: int):
    power = algebra.unit()
    for _ in range(k):
        power = algebra.cup(power, algebra.zeta)
    return power


def check_projective_bundle_decomposition(g: int, n: int) -> CheckReport:
    """For n >= 2g-1 the map (x_i) -> sum psi(x_i z^i) is a degreewise bijection."""
    report = CheckReport("projective_bundle", {"genus": g, "n": n})
    if n < 2 * g - 1:
        report.details["note"] = "below the bundle range; nothing to check"
        return report
    algebra = build(g, n)
    rank_bound = n - g
    for d in range(2 * n + 1):
        columns = []
        for i in range(rank_bound + 1):
            e = d - 2 * i
            if e < 0 or e > 2 * g:
                continue
            for ext in itertools.combinations(range(1, 2 * g + 1), e):
                lifted = Element.monomial(g, Monomial(ext, i))
                columns.append(algebra.psi(lifted).value)
        monos = algebra.basis_monomials(d)
        matrix = [[col.coefficient(m) for col in columns] for m in monos]
        if mat_rank(matrix) != len(columns) or len(columns) != algebra.dim(d):
            report.fail(
                {
                    "degree": d,
                    "columns": len(columns),
                    "dim": algebra.dim(d),
                    "reason": "bundle decomposition is not bijective",
                }
            )
    return report


def check_mattuck(g: int) -> CheckReport:
    report = CheckReport("mattuck_chern", {"genus": g})
    for entry in verify_mattuck_chern(g):
        if not entry.ok:
            report.fail(
                {
                    "i": entry.index,
                    "expected": expressions.render(entry.expected),
                    "got": expressions.render(entry.computed),
                }
            )
    return report


def check_correspondences(g: int, n_max: int, seed: int = 20240902) -> CheckReport:
    """Category laws, action identities, rank laws, and the membership lemma."""
    from .correspondences import (
        act,
        collino_membership,
        compose,
        diagonal,
        graph_class,
        projection_corr,
        pullback_matrices,
        transpose,
    )

    report = CheckReport("correspondences", {"genus": g, "n_max": n_max})
    rng = random.Random(seed)
    try:
        for n in range(n_max + 1):
            algebra = build(g, n)
            delta = diagonal(algebra)
            for d in range(algebra.top_degree + 1):
                for rep in algebra.basis(d):
                    if act(delta, rep) != rep:
                        report.fail({"n": n, "degree": d, "reason": "diagonal identity"})
            if compose(delta, delta) != delta:
                report.fail({"n": n, "reason": "diagonal not idempotent"})
            if act(transpose(delta), algebra.unit()) != algebra.unit():
                report.fail({"n": n, "reason": "transposed diagonal identity"})
            gamma = projection_corr(g, n, n)
            if gamma != delta.scale(factorial(n)):
                report.fail({"n": n, "reason": "transfer of the diagonal is not n! delta"})
        for n in range(n_max + 1):
            for m in range(n + 1):
                small, large = build(g, m), build(g, n)
                graph = graph_class(large, small, pullback_matrices(g, m, n))
                for d in range(large.top_degree + 1):
                    for rep in large.basis(d):
                        if act(graph, rep) != pullback(m, n, rep):
                            report.fail(
                                {"n": n, "m": m, "degree": d, "reason": "graph action"}
                            )
                # graph lives in Corr^0(C(n), C(m)); its transpose shifts by n - m
                flipped = transpose(graph)
                if transpose(flipped) != graph:
                    report.fail({"n": n, "m": m, "reason": "transpose involution"})
                if flipped.shift != n - m:
                    report.fail({"n": n, "m": m, "reason": "transpose shift bookkeeping"})
                for d in range(small.top_degree + 1):
                    for rep in small.basis(d):
                        if act(flipped, rep) != pushforward(m, n, rep):
                            report.fail(
                                {"n": n, "m": m, "degree": d, "reason": "transposed graph action"}
                            )
                # Corr*-1 at the act level, against a random correspondence
                alpha = _random_corr(rng, build(g, rng.randint(0, n)), large)
                composed = compose(alpha, graph)
                for d in range(alpha.source.top_degree + 1):
                    for rep in alpha.source.basis(d):
                        if act(composed, rep) != pullback(m, n, act(alpha, rep)):
                            report.fail(
                                {"n": n, "m": m, "reason": "Gamma_f compose (pull side)"}
                            )
                beta = _random_corr(rng, small, build(g, rng.randint(0, n)))
                composed = compose(graph, beta)
                for d in range(large.top_degree + 1):
                    for rep in large.basis(d):
                        if act(composed, rep) != act(beta, pullback(m, n, rep)):
                            report.fail(
                                {"n": n, "m": m, "reason": "Gamma_f compose (push side)"}
                            )
                if compose(delta_for(large), graph) != graph or compose(
                    graph, delta_for(small)
                ) != graph:
                    report.fail({"n": n, "m": m, "reason": "diagonal is not a unit"})
                membership = collino_membership(g, m, n)
                if not membership.passed:
                    report.fail({"n": n, "m": m, "reason": "collino membership fails"})
        # associativity and reversal on random triples
        for _ in range(3):
            powers = sorted(rng.randint(0, n_max) for _ in range(4))
            spaces = [build(g, p) for p in powers]
            alpha = _random_corr(rng, spaces[0], spaces[1])
            beta = _random_corr(rng, spaces[1], spaces[2])
            gamma = _random_corr(rng, spaces[2], spaces[3])
            if compose(compose(alpha, beta), gamma) != compose(alpha, compose(beta, gamma)):
                report.fail({"powers": powers, "reason": "composition associativity"})
            reversed_side = compose(transpose(beta), transpose(alpha))
            for d in range(spaces[2].top_degree + 1):
                for rep in spaces[2].basis(d):
                    if act(transpose(compose(alpha, beta)), rep) != act(reversed_side, rep):
                        report.fail({"powers": powers, "reason": "transpose reversal"})
    except BudgetExceededError as exc:
        report.details["skipped"] = str(exc)
        if report.status == PASS:
            report.status = PARTIAL
    return report


def delta_for(algebra):
    from .correspondences import diagonal

    return diagonal(algebra)


def _random_corr(rng: random.Random, source, target, shift: int = 0):
    from .correspondences import CorrClass

    total = source.top_degree + 2 * shift
    blocks = {}
    for d1 in range(source.top_degree + 1):
        d2 = total - d1
        if d2 < 0 or d2 > target.top_degree:
            continue
        rows = source.dim(d1)
        cols = target.dim(d2)
        if not rows or not cols:
            continue
        blocks[(d1, d2)] = [
            [Fraction(rng.randint(-2, 2)) for _ in range(cols)] for _ in range(rows)
        ]
    return CorrClass(source, target, shift, blocks)


SUITES = {
    "presentation": lambda g, n_max: [
        check_theorem_A(g, n_max),
        check_duality(g, min(n_max, 6)),
        check_euler_characteristics(g, n_max),
        check_kernel_principality(g),
        check_colon_monotonicity(g, max(2 * g - 1, 1), 2 * n_max + 2),
        check_map_identities(g, min(n_max, 2 * g + 2)),
        check_projective_bundle_decomposition(g, max(2 * g - 1, 0)),
    ]
    + ([check_mattuck(g)] if g >= 1 else []),
    "modules": lambda g, n_max: [check_theorem_B(g, n_max)],
    "oracles": lambda g, n_max: [check_oracles(g, n_max)],
    "correspondences": lambda g, n_max: [check_correspondences(g, n_max)],
}


def run_suites(names: list[str], g: int, n_max: int) -> dict:
    """Run the requested suites and merge their reports deterministically."""
    reports: list[CheckReport] = []
    for name in names:
        runner = SUITES.get(name)
        if runner is None:
            raise ValueError(f"unknown suite {name!r}")
        reports.extend(runner(g, n_max))
    reports.sort(key=lambda r: r.name)
    if any(r.status == FAIL for r in reports):
        status = FAIL
    elif any(r.status == PARTIAL for r in reports):
        status = PARTIAL
    else:
        status = PASS
    return {
        "schema_version": SCHEMA_VERSION,
        "genus": g,
        "max_power": n_max,
        "suites": names,
        "status": status,
        "checks": [r.to_dict() for r in reports],
    }


def render_text(report: dict) -> str:
    lines = [
        f"verification report (genus {report['genus']}, powers <= {report['max_power']})",
        f"overall: {report['status']}",
        "",
    ]
    name_width = max((len(c["name"]) for c in report["checks"]), default=10)
    for check in report["checks"]:
        lines.append(f"{check['name']:<{name_width}}  {check['status']}")
        for witness in check["witnesses"][:3]:
            lines.append(f"  witness: {witness}")
    return "\n".join(lines) + "\n"
