"""Sequence families: frozen values, route agreement, structural laws.

Acceptance runs the full stated ranges; here the same properties are
checked on smaller triangles so failures localize quickly.
"""

from fractions import Fraction as F
from math import comb, factorial

import pytest

from degenpoly.algebra import (
    LambdaPoly,
    X,
    XLPoly,
    falling_factorial_degenerate,
)
from degenpoly.sequences import (
    EULERIAN_ROUTES,
    bernoulli_number,
    bernoulli_polynomial,
    eulerian_at_minus_one,
    eulerian_explicit,
    eulerian_from_stirling2,
    eulerian_poly,
    eulerian_recursive,
    eulerian_table,
    power_sum,
    stirling1_degenerate,
    stirling2_degenerate,
    stirling2_from_eulerian,
    worpitzky_lhs,
)

ROW2 = (LambdaPoly((1, -1)), LambdaPoly((1, 1)), LambdaPoly())
ROW3 = (
    LambdaPoly((1, -3, 2)),
    LambdaPoly((4, 0, -4)),
    LambdaPoly((1, 3, 2)),
    LambdaPoly(),
)


# ---------------------------------------------------------------------------
# Eulerian numbers
# ---------------------------------------------------------------------------


def test_explicit_small_values():
    assert eulerian_explicit(1, 0) == 1
    assert eulerian_explicit(1, 1) == 0
    assert tuple(eulerian_explicit(2, k) for k in range(3)) == ROW2
    assert tuple(eulerian_explicit(3, k) for k in range(4)) == ROW3
    assert eulerian_explicit(3, 1).eval(0) == 4  # four permutations of {1,2,3}


def test_explicit_vanishes_beyond_triangle():
    for n in range(8):
        for k in range(n + 1, n + 4):
            assert eulerian_explicit(n, k).is_zero, (n, k)


def test_recursive_small_values():
    assert eulerian_recursive(0, 0) == 1
    assert eulerian_recursive(1, 0) == 1
    assert eulerian_recursive(2, 1) == LambdaPoly((1, 1))
    assert eulerian_recursive(3, 2) == LambdaPoly((1, 3, 2))
    assert eulerian_recursive(4, 6).is_zero


def test_routes_agree_on_small_triangle():
    for n in range(11):
        for k in range(n + 1):
            assert eulerian_explicit(n, k) == eulerian_recursive(n, k), (n, k)


def test_table_routes_match():
    tables = {route: eulerian_table(10, route) for route in EULERIAN_ROUTES}
    for n in range(11):
        for k in range(n + 1):
            entries = {t.entry(n, k) for t in tables.values()}
            assert len(entries) == 1, (n, k)


def test_table_out_of_triangle_and_bounds():
    table = eulerian_table(4)
    assert table.entry(3, 4).is_zero
    assert table.entry(2, -1).is_zero
    with pytest.raises(ValueError):
        table.entry(5, 0)
    with pytest.raises(ValueError):
        eulerian_table(3, route="nope")


def test_lambda_degree_and_row_sums():
    table = eulerian_table(10)
    for n in range(11):
        row = table.row(n)
        total = LambdaPoly()
        for entry in row:
            assert entry.degree <= n - 1 or (n == 0 and entry.degree == 0)
            total = total + entry
        assert total == LambdaPoly((factorial(n),))
        if n >= 1:
            assert row[n].is_zero


# ---------------------------------------------------------------------------
# Eulerian polynomials
# ---------------------------------------------------------------------------


def test_poly_assembly():
    assert eulerian_poly(0) == XLPoly.constant(1)
    assert eulerian_poly(2) == XLPoly(ROW2[:2])
    assert eulerian_poly(3) == XLPoly(ROW3[:3])
    assert eulerian_poly(3).eval_x(1) == 6  # row sum 3!


def test_poly_routes_agree():
    for n in range(9):
        polys = {eulerian_poly(n, route) for route in EULERIAN_ROUTES}
        assert len(polys) == 1, n
    with pytest.raises(ValueError):
        eulerian_poly(2, route="fastest")


def test_poly_degree_bound():
    for n in range(1, 10):
        p = eulerian_poly(n)
        assert p.x_degree <= n - 1
        assert p.lambda_degree <= n - 1


# ---------------------------------------------------------------------------
# value at x = -1
# ---------------------------------------------------------------------------


def test_at_minus_one_small_values():
    assert eulerian_at_minus_one(0) == 1
    assert eulerian_at_minus_one(1) == 1
    assert eulerian_at_minus_one(2) == LambdaPoly((0, -2))
    assert eulerian_at_minus_one(1, "bernoulli") == 1
    assert eulerian_at_minus_one(0, "bernoulli") == 1


def test_at_minus_one_routes_agree():
    for n in range(11):
        assert eulerian_at_minus_one(n, "direct") == eulerian_at_minus_one(n, "bernoulli"), n
    with pytest.raises(ValueError):
        eulerian_at_minus_one(2, "magic")


# ---------------------------------------------------------------------------
# Bernoulli polynomials
# ---------------------------------------------------------------------------


def test_bernoulli_polynomial_small():
    assert bernoulli_polynomial(0) == XLPoly.constant(1)
    assert bernoulli_polynomial(1) == X + XLPoly.constant(LambdaPoly((F(-1, 2), F(1, 2))))
    b2 = bernoulli_polynomial(2)
    assert b2.eval_x(0) == bernoulli_number(2) == LambdaPoly((F(1, 6), 0, F(-1, 6)))


def test_bernoulli_polynomial_at_zero_gives_numbers():
    for n in range(9):
        assert bernoulli_polynomial(n).eval_x(0) == bernoulli_number(n), n


# ---------------------------------------------------------------------------
# Stirling families
# ---------------------------------------------------------------------------


def test_stirling2_small_values():
    assert stirling2_degenerate(2, 1) == LambdaPoly((1, -1))
    assert stirling2_degenerate(2, 1) == falling_factorial_degenerate(1, 2)
    assert stirling2_degenerate(2, 2) == 1
    assert stirling2_degenerate(3, 4).is_zero
    assert stirling2_degenerate(0, 0) == 1
    for n in range(1, 8):
        assert stirling2_degenerate(n, 0).is_zero
        assert stirling2_degenerate(n, n) == 1


def test_stirling2_from_eulerian_matches():
    assert stirling2_from_eulerian(1, 1) == 1
    assert stirling2_from_eulerian(2, 1) == LambdaPoly((1, -1))
    assert stirling2_from_eulerian(3, 3) == stirling2_degenerate(3, 3) == 1
    for n in range(9):
        for k in range(n + 1):
            assert stirling2_from_eulerian(n, k) == stirling2_degenerate(n, k), (n, k)
    with pytest.raises(ValueError):
        stirling2_from_eulerian(2, 3)


def test_stirling1_small_values():
    assert stirling1_degenerate(1, 1) == 1
    assert stirling1_degenerate(1, 0).is_zero
    assert stirling1_degenerate(2, 1) == LambdaPoly((-1, 1))
    assert stirling1_degenerate(2, 2) == 1
    for n in range(9):
        assert stirling1_degenerate(n, n) == 1


def test_stirling1_reconstructs_classical_falling_factorial():
    # definition: (x)_n = Σ_k S1(n,k)·(x)_{k,λ}
    from degenpoly.algebra import falling_factorial_classical

    for n in range(9):
        acc = XLPoly()
        for k in range(n + 1):
            acc = acc + falling_factorial_degenerate(X, k) * stirling1_degenerate(n, k)
        assert acc == falling_factorial_classical(n), n


def test_eulerian_from_stirling2_small():
    assert eulerian_from_stirling2(1, 1) == 1
    assert eulerian_from_stirling2(2, 1) == LambdaPoly((1, -1))
    assert eulerian_from_stirling2(3, 2) == LambdaPoly((4, 0, -4))
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert eulerian_from_stirling2(n, k) == eulerian_explicit(n, k - 1), (n, k)
    with pytest.raises(ValueError):
        eulerian_from_stirling2(3, 0)
    with pytest.raises(ValueError):
        eulerian_from_stirling2(3, 4)


# ---------------------------------------------------------------------------
# power sums
# ---------------------------------------------------------------------------


def test_power_sum_hand_values():
    assert power_sum(2, 2) == LambdaPoly((5, -3))
    # eulerian route by hand: (1+λ)·C(3,3) + (1-λ)·C(4,3)
    assert power_sum(2, 2, "eulerian") == LambdaPoly((1, 1)) + 4 * LambdaPoly((1, -1))
    assert power_sum(1, 1) == 1
    for route in ("direct", "eulerian", "bernoulli"):
        assert power_sum(1, 1, route) == 1


def test_power_sum_routes_agree():
    for n in range(1, 7):
        for m in range(1, 9):
            direct = power_sum(m, n, "direct")
            assert direct == power_sum(m, n, "eulerian"), (m, n)
            assert direct == power_sum(m, n, "bernoulli"), (m, n)


def test_power_sum_validation():
    with pytest.raises(ValueError):
        power_sum(0, 2)
    with pytest.raises(ValueError):
        power_sum(2, 0)
    with pytest.raises(ValueError):
        power_sum(2, 2, "microwave")


# ---------------------------------------------------------------------------
# Worpitzky expansion and coefficient identities
# ---------------------------------------------------------------------------


def test_worpitzky_hand_cases():
    assert worpitzky_lhs(0) == XLPoly.constant(1)
    assert worpitzky_lhs(1) == X
    assert worpitzky_lhs(2) == X * X - XLPoly.constant(LambdaPoly((0, 1))) * X


def test_worpitzky_matches_falling_factorial():
    for n in range(10):
        assert worpitzky_lhs(n) == falling_factorial_degenerate(X, n), n


def test_geometric_coefficient_relation():
    # Σ_i A(n,i)·C(n+k-i, n) = (k+1)_{n,λ}
    table = eulerian_table(6)
    for n in range(7):
        for k in range(9):
            acc = LambdaPoly()
            for i in range(min(k, n) + 1):
                acc = acc + comb(n + k - i, n) * table.entry(n, i)
            assert acc == falling_factorial_degenerate(k + 1, n), (n, k)


def test_stirling2_binomial_expansion():
    # (x)_{n,λ} = Σ_k k!·{n k}·C(x,k)
    from degenpoly.algebra import binomial_poly

    for n in range(9):
        acc = XLPoly()
        for k in range(n + 1):
            acc = acc + binomial_poly(0, k) * (factorial(k) * stirling2_degenerate(n, k))
        assert acc == falling_factorial_degenerate(X, n), n
