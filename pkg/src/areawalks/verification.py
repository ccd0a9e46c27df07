"""Cross-validation suites tying the independent computation routes together.

Each check compares two routes that share no code path: composition-sum
polynomials against exhaustive enumeration, literal binomial counts
against coefficient extraction, matrix traces at roots of unity against
polynomial evaluation. A check yields a CheckResult with a residual
(0.0 for exact integer comparisons, max scaled deviation for floating
ones) suitable for JSON-lines reporting.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import enumeration, oracle, restricted, torus
from .compositions import cluster_coeff, cluster_coeff_alt, cluster_coeff_bar
from .compositions import compositions as iter_compositions
from .laurent import AreaPolynomial

DEFAULT_PS = ((1, 1), (1, 2), (2, 2), (1, 3), (3, 3))

TRACE_TOL = 1e-9          # scaled by 4^n against the walk total
RELATION_TOL = 1e-12
MATRIX_ELEMENT_RTOL = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float = 0.0
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "status": self.status,
                "residual": self.residual,
                "detail": self.detail,
            }
        )


@dataclass
class _Exact:
    """Accumulates exact comparisons into a single pass/fail verdict."""

    failures: list[str] = field(default_factory=list)
    cases: int = 0

    def expect(self, condition: bool, label: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(label)

    def result(self, name: str, detail: str) -> CheckResult:
        if self.failures:
            shown = "; ".join(self.failures[:4])
            if len(self.failures) > 4:
                shown += f"; and {len(self.failures) - 4} more"
            return CheckResult(name, False, float(len(self.failures)), shown)
        return CheckResult(name, True, 0.0, f"{detail} ({self.cases} cases)")


_SHORT_OPEN = {
    1: {0: 4},
    2: {-1: 4, 0: 8, 1: 4},
    3: {-2: 12, 0: 40, 2: 12},
    4: {-4: 8, -3: 16, -2: 16, -1: 48, 0: 80, 1: 48, 2: 16, 3: 16, 4: 8},
}


def suite_formulas(max_n: int = 12) -> list[CheckResult]:
    """Composition-sum generating functions and literal counting sums."""
    results = []
    polys = {n: enumeration.gf_open(n) for n in range(1, max_n + 1)}

    check = _Exact()
    for n, expected in _SHORT_OPEN.items():
        check.expect(polys[n] == AreaPolynomial(expected), f"length {n}")
    results.append(check.result("formulas/short_length_tables", "lengths 1..4 verbatim"))

    check = _Exact()
    for n, poly in polys.items():
        check.expect(poly.eval_at_one() == 4**n, f"length {n}")
    results.append(check.result("formulas/unit_normalization", f"4^n totals, n <= {max_n}"))

    check = _Exact()
    for n, poly in polys.items():
        check.expect(poly.is_palindromic(), f"length {n}")
    results.append(check.result("formulas/palindromic_support", f"t <-> -t, n <= {max_n}"))

    check = _Exact()
    for n, poly in polys.items():
        if n % 2 == 1:
            check.expect(all(t % 2 == 0 for t in poly.support()), f"length {n}")
    results.append(
        check.result("formulas/odd_length_even_exponents", f"odd lengths <= {max_n}")
    )

    check = _Exact()
    for n_steps in range(1, min(max_n, 16) + 1):
        poly = polys[n_steps]
        t_values = sorted(set(poly.support()) | {0, 1})
        for t in t_values:
            if n_steps % 2 == 0:
                got = enumeration.count_open_even(n_steps // 2, t)
            else:
                got = enumeration.count_open_odd((n_steps + 1) // 2, t // 2) if t % 2 == 0 else 0
            check.expect(got == poly.coefficient(t), f"length {n_steps}, t={t}")
    results.append(
        check.result(
            "formulas/count_matches_coefficients",
            f"binomial sums vs extraction, lengths <= {min(max_n, 16)}",
        )
    )
    return results


def suite_oracle(max_n: int = 12, threads: int = 1) -> list[CheckResult]:
    """Brute-force sweep vs dynamic program vs composition sums."""
    results = []
    dp_bound = min(max_n, 14)
    dp = {n: oracle.dp_enumerate(n) for n in range(1, dp_bound + 1)}

    check = _Exact()
    for n in range(1, min(max_n, 12) + 1):
        brute = oracle.brute_force(n, threads=threads)
        check.expect(brute.by_endpoint == dict(dp[n].by_endpoint), f"length {n}")
    results.append(
        check.result("oracle/brute_equals_dp", f"per-endpoint, lengths <= {min(max_n, 12)}")
    )

    check = _Exact()
    for n in range(1, dp_bound + 1):
        check.expect(enumeration.gf_open(n) == dp[n].total(), f"length {n}")
    results.append(
        check.result("oracle/open_gf_equals_dp_total", f"lengths <= {dp_bound}")
    )

    check = _Exact()
    for n in range(1, dp_bound + 1):
        hist = dp[n]
        total = sum(poly.eval_at_one() for poly in hist.by_endpoint.values())
        check.expect(total == 4**n, f"length {n} total")
        for (k, l) in hist.by_endpoint:
            check.expect(abs(k) + abs(l) <= n, f"length {n} endpoint ({k},{l}) outside diamond")
            check.expect((k + l - n) % 2 == 0, f"length {n} endpoint ({k},{l}) parity")
    results.append(
        check.result("oracle/endpoint_domain", f"diamond, parity, 4^n totals, lengths <= {dp_bound}")
    )

    check = _Exact()
    for n in range(2, dp_bound + 1, 2):
        closed = dp[n].endpoint_gf(0, 0).eval_at_one()
        check.expect(closed == math.comb(n, n // 2) ** 2, f"length {n}")
    results.append(
        check.result("oracle/closed_walk_counts", f"central binomial squared, lengths <= {dp_bound}")
    )

    check = _Exact()
    for n in range(1, min(max_n, 8) + 1):
        hist = dp[n].by_endpoint
        for (k, l), poly in hist.items():
            check.expect(hist.get((l, k)) == poly.mirrored(), f"length {n} swap ({k},{l})")
            check.expect(hist.get((-l, k)) == poly, f"length {n} rotation ({k},{l})")
    results.append(
        check.result(
            "oracle/lattice_symmetry",
            f"axis swap negates t, quarter turn preserves it, lengths <= {min(max_n, 8)}",
        )
    )
    return results


def suite_restricted(max_n: int = 14) -> list[CheckResult]:
    """Line-restricted generating functions against oracle line sums."""
    results = []
    dp_bound = min(max_n, 14)
    dp = {n: oracle.dp_enumerate(n) for n in range(1, dp_bound + 1)}

    check = _Exact()
    for n in range(1, min(dp_bound // 2, 7) + 1):
        check.expect(restricted.gf_diagonal(n) == dp[2 * n].line_gf(0), f"half-length {n}")
    results.append(check.result("restricted/diagonal_matches_oracle", "line k+l=0"))

    check = _Exact()
    for n in range(1, min(dp_bound // 2, 7) + 1):
        for line_index in range(n + 2):
            expected = dp[2 * n].line_gf(2 * line_index)
            got = restricted.gf_paradiagonal_even(n, line_index)
            check.expect(got == expected, f"half-length {n}, line {2 * line_index}")
            mirror = dp[2 * n].line_gf(-2 * line_index)
            check.expect(got == mirror, f"half-length {n}, line {-2 * line_index}")
    results.append(
        check.result("restricted/paradiagonal_even_matches_oracle", "all reachable even lines")
    )

    check = _Exact()
    for n in range(1, min((dp_bound + 1) // 2, 7) + 1):
        for line_index in range(n + 1):
            expected = dp[2 * n - 1].line_gf(2 * line_index + 1)
            got = restricted.gf_paradiagonal_odd(n, line_index)
            check.expect(got == expected, f"length {2 * n - 1}, line {2 * line_index + 1}")
    results.append(
        check.result("restricted/paradiagonal_odd_matches_oracle", "all reachable odd lines")
    )

    check = _Exact()
    for n_steps in range(1, dp_bound + 1):
        check.expect(restricted.sum_over_lines_check(n_steps), f"length {n_steps}")
    results.append(
        check.result("restricted/line_resummation", f"lines resum to open gf, lengths <= {dp_bound}")
    )

    check = _Exact()
    for n in range(1, 11):
        for parts in iter_compositions(n):
            even_sum = sum(
                restricted._part(parts, i) + restricted._part(parts, i + 1)
                for i in range(len(parts) + 1)
            )
            check.expect(even_sum == 2 * n, f"even prefactors {parts}")
            l0, rest = parts[0], parts[1:]
            odd_sum = 2 * l0 - 1 + restricted._part(rest, 1) + sum(
                restricted._part(rest, i) + restricted._part(rest, i + 1)
                for i in range(1, len(rest) + 1)
            )
            check.expect(odd_sum == 2 * n - 1, f"odd prefactors {parts}")
    results.append(
        check.result("restricted/prefactor_resummation", "per-composition prefactor totals, n <= 10")
    )

    check = _Exact()
    for n in range(1, 8):
        check.expect(
            restricted.gf_paradiagonal_even(n, 0) == restricted.gf_diagonal(n),
            f"half-length {n}",
        )
    results.append(check.result("restricted/line_zero_is_diagonal", "even line 0 special case"))

    check = _Exact()
    for n in range(1, min(dp_bound // 2, 8) + 1):
        for a2 in sorted(set(restricted.gf_diagonal(n).support()) | {0, 1, 7}):
            check.expect(
                restricted.count_diagonal(n, a2) == restricted.gf_diagonal(n).coefficient(a2),
                f"half-length {n}, t={a2}",
            )
    results.append(
        check.result("restricted/diagonal_count_matches_coefficients", "binomial sums vs extraction")
    )
    return results


def _scaled_trace_residual(got: complex, expected: complex, scale: float) -> float:
    return abs(got - expected) / scale


def suite_torus(ps: tuple = DEFAULT_PS, max_n: int = 12) -> list[CheckResult]:
    """Matrix realization: relations, traces, and matrix elements."""
    results = []
    reps = {pair: torus.build_rep_q(*pair) for pair in ps}

    worst = 0.0
    worst_label = ""
    for (p, s), rep in reps.items():
        sector_reps = [rep]
        for cx in (torus.CASIMIR_ZERO, torus.CASIMIR_PI_OVER_Q):
            for cy in (torus.CASIMIR_ZERO, torus.CASIMIR_PI_OVER_Q):
                sector_reps.append(torus.build_rep_q(p, s, cx, cy))
        sector_reps.append(torus.build_rep_2q(p, 2 * s + 1))
        sector_reps.append(torus.build_rep_2q(p, 2 * s + 2) if math.gcd(p, 2 * s + 2) == 1 else None)
        for built in sector_reps:
            if built is None:
                continue
            for relation, residual in torus.relation_residuals(built).items():
                if residual > worst:
                    worst, worst_label = residual, f"(p={p},s={s}) {relation} dim={built.dim}"
    results.append(
        CheckResult(
            "torus/algebra_relations",
            worst < RELATION_TOL,
            worst,
            worst_label or "all defining relations at noise level",
        )
    )

    worst = 0.0
    worst_label = ""
    for (p, s), rep in reps.items():
        traces = torus.trace_conditions(rep)
        for name, expected in (
            ("sigma", 1.0),
            ("u_sigma", 1.0),
            ("v_sigma", 1.0),
            ("vu_sigma", rep.root_q),
        ):
            residual = abs(traces[name] - expected)
            if residual > worst:
                worst, worst_label = residual, f"(p={p},s={s}) trace {name}"
    results.append(
        CheckResult(
            "torus/unit_traces",
            worst < RELATION_TOL,
            worst,
            worst_label or "sigma-traces are 1,1,1,Q at zero casimirs",
        )
    )

    polys = {n: enumeration.gf_open(n) for n in range(1, max_n + 1)}
    worst = 0.0
    worst_label = ""
    for (p, s), rep in reps.items():
        for n in range(1, max_n + 1):
            expected = polys[n].eval_at_root(p, s)
            got = torus.trace_gf(rep, n)
            residual = _scaled_trace_residual(got, expected, 4.0**n)
            if residual > worst:
                worst, worst_label = residual, f"(p={p},s={s}) n={n}"
    results.append(
        CheckResult(
            "torus/trace_matches_gf",
            worst < TRACE_TOL,
            worst,
            f"max |trace - poly(root)| / 4^n over n <= {max_n}; worst at {worst_label}",
        )
    )

    worst = 0.0
    for (p, s), rep in reps.items():
        for n in range(1, max_n + 1):
            residual = _scaled_trace_residual(
                torus.trace_gf(rep, n, "off_diagonal"), torus.trace_gf(rep, n), 4.0**n
            )
            worst = max(worst, residual)
    results.append(
        CheckResult(
            "torus/variant_traces_agree",
            worst < TRACE_TOL,
            worst,
            "standard vs off-diagonal Hamiltonian sigma-traces",
        )
    )

    worst = 0.0
    for (p, s), rep in reps.items():
        h_plus, h_minus = torus.split_pm(rep)
        worst = max(worst, abs(np.trace(rep.sigma) - 1.0))
        for n in range(1, min(max_n, 12) + 1):
            lhs = torus.trace_gf(rep, n)
            rhs = np.trace(torus._matrix_power(h_plus, n)) - np.trace(
                torus._matrix_power(h_minus, n)
            )
            worst = max(worst, _scaled_trace_residual(lhs, rhs, 4.0**n))
    results.append(
        CheckResult(
            "torus/split_projection_traces",
            worst < TRACE_TOL,
            worst,
            "tr(H^n sigma) = tr(H_+^n) - tr(H_-^n), rank gap 1 at n=0",
        )
    )

    worst = 0.0
    worst_label = ""
    for (p, s), rep in reps.items():
        q = rep.q
        for n in range(1, max_n // 2 + 1):
            if not 2 * n < 2 * q:
                continue
            expected = restricted.gf_diagonal(n).eval_at_root(p, s)
            got = torus.matrix_element_paradiagonal(rep, 2 * n, 0, 0)
            residual = abs(got - expected) / max(1.0, abs(expected))
            if residual > worst:
                worst, worst_label = residual, f"(p={p},s={s}) 2n={2 * n}"
    results.append(
        CheckResult(
            "torus/diagonal_matrix_element",
            worst < MATRIX_ELEMENT_RTOL,
            worst,
            f"<0|H_od^2n|0> vs diagonal gf at root; worst at {worst_label}",
        )
    )

    worst = 0.0
    worst_label = ""
    fold_detail = (
        "orientation: bra row j_center - line_index, ket column j_center + line_index; "
        "equals sum_k endpoint(k, 2I-k) at root weighted by root^(2*j_center*k), "
        "asserted for 2n < 2q - 2I"
    )
    for (p, s) in ps:
        rep = reps[(p, s)]
        q = rep.q
        for two_n in (2, 4, 6):
            hist = oracle.dp_enumerate(two_n)
            for line_index in (0, 1, 2):
                if not two_n < 2 * q - 2 * line_index:
                    continue
                for j_center in (0, 1, 2):
                    expected = 0j
                    for k in range(-two_n, two_n + 1):
                        poly = hist.endpoint_gf(k, 2 * line_index - k)
                        if poly.is_zero():
                            continue
                        expected += poly.eval_at_root(p, s) * rep.root_q ** (2 * j_center * k)
                    got = torus.matrix_element_paradiagonal(rep, two_n, line_index, j_center)
                    residual = abs(got - expected) / max(1.0, abs(expected))
                    if residual > worst:
                        worst = residual
                        worst_label = f"(p={p},s={s}) 2n={two_n} I={line_index} J={j_center}"
    results.append(
        CheckResult(
            "torus/paradiagonal_matrix_elements",
            worst < MATRIX_ELEMENT_RTOL,
            worst,
            f"{fold_detail}; worst at {worst_label}",
        )
    )

    worst = 0.0
    rep = reps[(1, 3)] if (1, 3) in reps else torus.build_rep_q(1, 3)
    q = rep.q
    hist = oracle.dp_enumerate(4)
    for line_index in (0, 1):
        for k0 in range(-2, 3):
            acc = 0j
            for j_center in range(q):
                acc += torus.matrix_element_paradiagonal(rep, 4, line_index, j_center) * (
                    rep.root_q ** (-2 * j_center * k0)
                )
            acc /= q
            expected = hist.endpoint_gf(k0, 2 * line_index - k0).eval_at_root(rep.p, rep.s)
            worst = max(worst, abs(acc - expected) / max(1.0, abs(expected)))
    results.append(
        CheckResult(
            "torus/endpoint_fourier_isolation",
            worst < MATRIX_ELEMENT_RTOL,
            worst,
            "averaging matrix elements over j_center with conjugate phase isolates one endpoint",
        )
    )

    check = _Exact()
    for p, q in ((1, 4), (1, 6), (3, 4), (1, 8)):
        check.expect(torus.verify_even_q_vanishing(p, q), f"even q={q}, p={p}")
    check.expect(not torus.verify_even_q_vanishing(1, 3), "odd q=3 control")
    check.expect(not torus.verify_even_q_vanishing(1, 5), "odd q=5 control")
    results.append(
        check.result(
            "torus/even_q_traces_vanish",
            "every even-q casimir sector kills a unit trace; odd q does not",
        )
    )

    worst = 0.0
    for p, q in ((1, 2), (1, 3), (1, 4), (2, 5)):
        rep2q = torus.build_rep_2q(p, q)
        traces = torus.trace_conditions(rep2q)
        worst = max(worst, abs(traces["sigma"]), abs(traces["u_sigma"]), abs(traces["v_sigma"]))
        for n in (2, 4):
            worst = max(worst, abs(torus.trace_gf(rep2q, n)) / 4.0**n)
    results.append(
        CheckResult(
            "torus/doubled_rep_traces_vanish",
            worst < RELATION_TOL,
            worst,
            "block-swap sigma forces vanishing sigma-traces at any q",
        )
    )
    return results


def suite_compositions(max_n: int = 12) -> list[CheckResult]:
    """Combinatorial layer: enumeration order, weights, integrality."""
    results = []

    check = _Exact()
    for n in range(1, 17):
        comps = list(iter_compositions(n))
        check.expect(len(comps) == 2 ** (n - 1), f"count at n={n}")
        check.expect(len(set(comps)) == len(comps), f"duplicates at n={n}")
        check.expect(comps[0] == (n,), f"first at n={n}")
        check.expect(comps[-1] == (1,) * n, f"last at n={n}")
        check.expect(all(sum(c) == n for c in comps), f"sums at n={n}")
    results.append(check.result("compositions/enumeration", "2^(n-1) distinct tuples, n <= 16"))

    check = _Exact()
    for n in range(1, min(max_n, 12) + 1):
        for parts in iter_compositions(n):
            c = cluster_coeff(parts)
            check.expect((2 * n * c).denominator == 1, f"2n*c at {parts}")
            check.expect(c == cluster_coeff_alt(parts), f"alt form at {parts}")
            l0, rest = parts[0], parts[1:]
            cbar = cluster_coeff_bar(l0, rest)
            total = 2 * (l0 + sum(rest)) - 1
            check.expect((total * cbar).denominator == 1, f"(2n-1)*cbar at {parts}")
    results.append(
        check.result(
            "compositions/weight_integrality",
            f"2n*c and (2n-1)*cbar integral, both product forms agree, n <= {min(max_n, 12)}",
        )
    )
    return results


SUITES = {
    "formulas": suite_formulas,
    "oracle": suite_oracle,
    "restricted": suite_restricted,
    "torus": suite_torus,
    "compositions": suite_compositions,
}


def run_suites(
    suites: list[str] | None = None,
    max_n: int | None = None,
    ps: tuple | None = None,
    threads: int = 1,
) -> list[CheckResult]:
    """Run the named suites (all by default) and concatenate their results."""
    selected = list(SUITES) if not suites else list(suites)
    results: list[CheckResult] = []
    for name in selected:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        runner = SUITES[name]
        kwargs = {}
        if max_n is not None:
            kwargs["max_n"] = max_n
        if name == "torus" and ps:
            kwargs["ps"] = tuple(ps)
        if name == "oracle":
            kwargs["threads"] = threads
        results.extend(runner(**kwargs))
    return results
