"""Registry of every identity as an executable, named check.

Each check scans a parameter range in lexicographic order and compares two
independently computed values. A check either passes over its whole range
or fails carrying the smallest counterexample (parameters plus both sides
rendered as polynomial text). Identity testing is exact polynomial
equality by default; the 'smoke' mode instead samples five fixed rational
λ values and is clearly labeled non-exhaustive.

Checks are pure and independent of each other; running any selection in
any order yields identical per-check results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from .algebra import LambdaPoly, X, XLPoly, binomial_poly, falling_factorial_degenerate
from .egf import bernoulli_taps, gf_residual
from .oracles import classical_triangles, descent_distribution, excedance_distribution
from .sequences import (
    eulerian_at_minus_one,
    eulerian_explicit,
    eulerian_from_stirling2,
    eulerian_table,
    power_sum,
    stirling1_row,
    stirling2_degenerate,
    stirling2_from_eulerian,
    worpitzky_lhs,
)

__all__ = [
    "MODES",
    "SMOKE_LAMBDAS",
    "Check",
    "CheckSpec",
    "Counterexample",
    "UnknownCheckError",
    "check_ids",
    "get_check",
    "run_check",
    "run_suite",
]

MODES = ("exact", "smoke")

#: Fixed λ sample points for the non-exhaustive smoke mode.
SMOKE_LAMBDAS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(1, 2),
    Fraction(2, 3),
)


@dataclass(frozen=True)
class Counterexample:
    parameters: Dict[str, int]
    lhs: str
    rhs: str


@dataclass
class CheckSpec:
    """One named identity check with its outcome."""

    id: str
    statement: str
    ranges: Dict[str, int]
    status: str = "pending"  # pending | pass | fail
    counterexample: Optional[Counterexample] = None


#: A case is (parameters, lhs, rhs); lhs/rhs are ring elements or rationals.
Cases = Iterator[Tuple[Dict[str, int], object, object]]


@dataclass(frozen=True)
class Check:
    id: str
    statement: str
    default_ranges: Dict[str, int]
    cases: Callable[[Dict[str, int]], Cases]


class UnknownCheckError(ValueError):
    """Raised for a check id that is not in the registry."""

    def __init__(self, unknown: Iterable[str], valid: Iterable[str]):
        self.unknown = tuple(unknown)
        self.valid = tuple(valid)
        names = ", ".join(self.unknown)
        super().__init__(
            f"unknown check id(s): {names}; valid ids are: {', '.join(self.valid)}"
        )


def _eval_at(value, lam: Fraction):
    if isinstance(value, LambdaPoly):
        return value.eval(lam)
    if isinstance(value, XLPoly):
        return value.eval_lambda(lam)
    return value


def _agree(lhs, rhs, mode: str) -> bool:
    if mode == "exact":
        return lhs == rhs
    return all(_eval_at(lhs, v) == _eval_at(rhs, v) for v in SMOKE_LAMBDAS)


def run_check(check: Check, ranges: Optional[Dict[str, int]] = None, mode: str = "exact") -> CheckSpec:
    """Run one check over its (possibly overridden) ranges."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    effective = dict(check.default_ranges)
    if ranges:
        for key, value in ranges.items():
            if key in effective:
                effective[key] = value
    spec = CheckSpec(id=check.id, statement=check.statement, ranges=effective)
    for params, lhs, rhs in check.cases(effective):
        if not _agree(lhs, rhs, mode):
            spec.status = "fail"
            spec.counterexample = Counterexample(dict(params), str(lhs), str(rhs))
            return spec
    spec.status = "pass"
    return spec


# ---------------------------------------------------------------------------
# case generators (all iterate in lexicographic (n, k, m) order)
# ---------------------------------------------------------------------------


def _cases_gf_residual(r) -> Cases:
    residual = gf_residual(r["n_max"])
    zero = XLPoly()
    for n in range(r["n_max"] + 1):
        yield {"n": n}, residual.taps[n], zero


def _cases_vanishing(r) -> Cases:
    zero = LambdaPoly()
    for n in range(r["n_max"] + 1):
        for k in range(n + 1, n + 4):
            yield {"n": n, "k": k}, eulerian_explicit(n, k), zero


def _cases_number_recursion(r) -> Cases:
    explicit = eulerian_table(r["n_max"], "explicit")
    recursive = eulerian_table(r["n_max"], "recursion")
    for n in range(r["n_max"] + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, explicit.entry(n, k), recursive.entry(n, k)


def _cases_poly_recursion(r) -> Cases:
    direct = eulerian_table(r["n_max"], "gf-recursion")
    assembled = eulerian_table(r["n_max"], "recursion")
    for n in range(r["n_max"] + 1):
        yield {"n": n}, XLPoly(assembled.row(n)), XLPoly(direct.row(n))


def _cases_at_minus_one(r) -> Cases:
    for n in range(r["n_max"] + 1):
        lhs = eulerian_at_minus_one(n, "direct")
        rhs = eulerian_at_minus_one(n, "bernoulli")
        yield {"n": n}, lhs, rhs


def _cases_alternating_sum(r) -> Cases:
    table = eulerian_table(r["n_max"])
    for n in range(r["n_max"] + 1):
        acc = LambdaPoly()
        for k, entry in enumerate(table.row(n)):
            acc = acc + (entry if k % 2 == 0 else -entry)
        yield {"n": n}, acc, eulerian_at_minus_one(n, "bernoulli")


def _cases_worpitzky(r) -> Cases:
    for n in range(r["n_max"] + 1):
        yield {"n": n}, worpitzky_lhs(n), falling_factorial_degenerate(X, n)


def _cases_stirling2_from_eulerian(r) -> Cases:
    for n in range(r["n_max"] + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, stirling2_from_eulerian(n, k), stirling2_degenerate(n, k)


def _cases_power_sum(route_a: str, route_b: str):
    def cases(r) -> Cases:
        for n in range(1, r["n_max"] + 1):
            for m in range(1, r["m_max"] + 1):
                yield {"n": n, "m": m}, power_sum(m, n, route_a), power_sum(m, n, route_b)

    return cases


def _cases_eulerian_from_stirling2(r) -> Cases:
    for n in range(1, r["n_max"] + 1):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}, eulerian_from_stirling2(n, k), eulerian_explicit(n, k - 1)


def _cases_coefficient_relation(r) -> Cases:
    # expansion of A_n(x)/(1-x)^{n+1}: Σ_i A(n,i)·C(n+k-i, n) = (k+1)_{n,λ}
    table = eulerian_table(r["n_max"])
    for n in range(r["n_max"] + 1):
        for k in range(r["k_max"] + 1):
            acc = LambdaPoly()
            for i in range(min(k, n) + 1):
                acc = acc + comb(n + k - i, n) * table.entry(n, i)
            yield {"n": n, "k": k}, acc, falling_factorial_degenerate(k + 1, n)


def _cases_stirling2_binomial_expansion(r) -> Cases:
    # (x)_{n,λ} = Σ_k k!·{n k}·C(x,k)
    for n in range(r["n_max"] + 1):
        acc = XLPoly()
        for k in range(n + 1):
            acc = acc + binomial_poly(0, k) * (factorial(k) * stirling2_degenerate(n, k))
        yield {"n": n}, acc, falling_factorial_degenerate(X, n)


def _cases_lambda0_eulerian(r) -> Cases:
    table = eulerian_table(r["n_max"])
    classical = classical_triangles(r["n_max"])
    for n in range(r["n_max"] + 1):
        for k in range(n + 1):
            lhs = table.entry(n, k).eval(0)
            yield {"n": n, "k": k}, lhs, Fraction(classical.eulerian[n][k])


def _cases_lambda0_stirling(r) -> Cases:
    classical = classical_triangles(r["n_max"])
    for n in range(r["n_max"] + 1):
        row1 = stirling1_row(n)
        for k in range(n + 1):
            yield {"n": n, "k": k, "kind": 1}, row1[k].eval(0), Fraction(classical.stirling1[n][k])
        for k in range(n + 1):
            lhs = stirling2_degenerate(n, k).eval(0)
            yield {"n": n, "k": k, "kind": 2}, lhs, Fraction(classical.stirling2[n][k])


def _cases_lambda0_bernoulli(r) -> Cases:
    taps = bernoulli_taps(r["n_max"])
    classical = classical_triangles(r["n_max"])
    for n in range(r["n_max"] + 1):
        yield {"n": n}, taps[n].eval(0), classical.bernoulli[n]


def _cases_descent_oracle(r) -> Cases:
    table = eulerian_table(r["n_max"])
    for n in range(1, r["n_max"] + 1):
        counts = descent_distribution(n).counts
        for k in range(n):
            yield {"n": n, "k": k}, table.entry(n, k).eval(0), Fraction(counts[k])


def _cases_excedance_oracle(r) -> Cases:
    for n in range(1, r["n_max"] + 1):
        descents = descent_distribution(n).counts
        excedances = excedance_distribution(n).counts
        for k in range(n):
            yield {"n": n, "k": k}, Fraction(descents[k]), Fraction(excedances[k])


def _cases_lambda1_bernoulli(r) -> Cases:
    taps = bernoulli_taps(r["n_max"])
    for n in range(1, r["n_max"] + 1):
        yield {"n": n}, taps[n].eval(1), Fraction(0)


def _cases_row_sum(r) -> Cases:
    table = eulerian_table(r["n_max"])
    for n in range(r["n_max"] + 1):
        acc = LambdaPoly()
        for entry in table.row(n):
            acc = acc + entry
        yield {"n": n}, acc, LambdaPoly((factorial(n),))


def _cases_top_entry(r) -> Cases:
    table = eulerian_table(r["n_max"])
    zero = LambdaPoly()
    for n in range(1, r["n_max"] + 1):
        yield {"n": n}, table.entry(n, n), zero


def _cases_lambda_degree(r) -> Cases:
    table = eulerian_table(r["n_max"])
    zero = LambdaPoly()
    for n in range(1, r["n_max"] + 1):
        for k in range(n + 1):
            # coefficients of λ^n and above must all vanish
            tail = LambdaPoly(table.entry(n, k).coeffs[n:])
            yield {"n": n, "k": k}, tail, zero


REGISTRY: Tuple[Check, ...] = (
    Check(
        "prop-2.1-gf-residual",
        "S(t)·(x - e_{-λ}((x-1)t)) = x - 1 for the Eulerian polynomial EGF, tap by tap",
        {"n_max": 12},
        _cases_gf_residual,
    ),
    Check(
        "thm-2.2-vanishing",
        "the explicit alternating sum for A(n,k) vanishes identically for k > n",
        {"n_max": 15},
        _cases_vanishing,
    ),
    Check(
        "thm-2.3-poly-recursion",
        "assembled A_n(x) equals the generating-function recursion route",
        {"n_max": 20},
        _cases_poly_recursion,
    ),
    Check(
        "thm-2.4-at-minus-one",
        "A_n(-1) equals 2^{n+1}(2^{n+1}β_{n+1,λ/2} - β_{n+1,λ})/(n+1)",
        {"n_max": 15},
        _cases_at_minus_one,
    ),
    Check(
        "cor-2.5-alternating-sum",
        "Σ_k (-1)^k A(n,k) equals the Bernoulli closed form for A_n(-1)",
        {"n_max": 15},
        _cases_alternating_sum,
    ),
    Check(
        "thm-2.6-recursion",
        "explicit-sum route equals the two-term recursion over the triangle",
        {"n_max": 20},
        _cases_number_recursion,
    ),
    Check(
        "thm-2.7-worpitzky",
        "Σ_k C(x+k,n)·A_{-λ}(n,k) = (x)_{n,λ} as a bivariate identity",
        {"n_max": 15},
        _cases_worpitzky,
    ),
    Check(
        "thm-2.8-stirling2-from-eulerian",
        "{n k} = (1/k!)·Σ_j A_{-λ}(n,j)·C(j,n-k) matches the explicit sum",
        {"n_max": 15},
        _cases_stirling2_from_eulerian,
    ),
    Check(
        "thm-2.9-power-sum-eulerian",
        "Σ_{k≤m}(k)_{n,λ} equals Σ_j A_{-λ}(n,j)·C(m+j+1,n+1)",
        {"n_max": 10, "m_max": 20},
        _cases_power_sum("direct", "eulerian"),
    ),
    Check(
        "eq-43-power-sum-bernoulli",
        "Σ_{k≤m}(k)_{n,λ} equals (β_{n+1}(m+1) - β_{n+1})/(n+1)",
        {"n_max": 10, "m_max": 20},
        _cases_power_sum("direct", "bernoulli"),
    ),
    Check(
        "thm-2.10-power-sum-routes",
        "the Eulerian and Bernoulli power-sum expressions agree with each other",
        {"n_max": 10, "m_max": 20},
        _cases_power_sum("eulerian", "bernoulli"),
    ),
    Check(
        "thm-2.11-eulerian-from-stirling2",
        "A(n,k-1) = (-1)^k·Σ_j (-1)^j·C(n-j,n-k)·j!·{n j} matches the explicit sum",
        {"n_max": 15},
        _cases_eulerian_from_stirling2,
    ),
    Check(
        "eq-19-coefficient-relation",
        "Σ_i A(n,i)·C(n+k-i,n) = (k+1)_{n,λ} (expansion of A_n(x)/(1-x)^{n+1})",
        {"n_max": 10, "k_max": 15},
        _cases_coefficient_relation,
    ),
    Check(
        "eq-38-stirling2-binomial-expansion",
        "(x)_{n,λ} = Σ_k k!·{n k}·C(x,k) as a bivariate identity",
        {"n_max": 12},
        _cases_stirling2_binomial_expansion,
    ),
    Check(
        "lambda0-eulerian-triangle",
        "the λ=0 Eulerian triangle matches the classical recursion triangle",
        {"n_max": 12},
        _cases_lambda0_eulerian,
    ),
    Check(
        "lambda0-stirling-triangles",
        "the λ=0 Stirling numbers of both kinds match the classical triangles",
        {"n_max": 12},
        _cases_lambda0_stirling,
    ),
    Check(
        "lambda0-bernoulli",
        "the λ=0 Bernoulli numbers match the classical triangular solve",
        {"n_max": 12},
        _cases_lambda0_bernoulli,
    ),
    Check(
        "lambda0-descent-oracle",
        "the λ=0 Eulerian row equals the brute-force descent distribution",
        {"n_max": 7},
        _cases_descent_oracle,
    ),
    Check(
        "lambda0-excedance-oracle",
        "descents and excedances are equidistributed over S_n",
        {"n_max": 7},
        _cases_excedance_oracle,
    ),
    Check(
        "lambda1-bernoulli-vanishing",
        "β_{n,λ} vanishes at λ=1 for all n ≥ 1",
        {"n_max": 12},
        _cases_lambda1_bernoulli,
    ),
    Check(
        "eulerian-row-sum",
        "Σ_k A(n,k) = n! as a constant polynomial in λ",
        {"n_max": 15},
        _cases_row_sum,
    ),
    Check(
        "eulerian-top-entry",
        "A(n,n) = 0 for n ≥ 1",
        {"n_max": 20},
        _cases_top_entry,
    ),
    Check(
        "eulerian-lambda-degree",
        "A(n,k) has λ-degree at most n-1 for n ≥ 1",
        {"n_max": 15},
        _cases_lambda_degree,
    ),
)

_BY_ID = {check.id: check for check in REGISTRY}


def check_ids() -> List[str]:
    """All registered check ids, in registry order."""
    return [check.id for check in REGISTRY]


def get_check(check_id: str) -> Check:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownCheckError([check_id], check_ids()) from None


def run_suite(
    selection: Optional[Iterable[str]] = None,
    ranges: Optional[Dict[str, int]] = None,
    mode: str = "exact",
) -> List[CheckSpec]:
    """Run a selection of checks (default: all) and return their results.

    Results come back in registry order regardless of selection order, so
    identical selections always produce identical reports.
    """
    if selection is None or selection == "all":
        selected = list(REGISTRY)
    else:
        wanted = list(selection)
        unknown = [cid for cid in wanted if cid not in _BY_ID]
        if unknown:
            raise UnknownCheckError(unknown, check_ids())
        chosen = set(wanted)
        selected = [check for check in REGISTRY if check.id in chosen]
    return [run_check(check, ranges, mode) for check in selected]
