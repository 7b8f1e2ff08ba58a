"""The degenerate sequence families, each with independent computation routes.

All families are λ-deformations of classical combinatorial sequences and
reduce to them at λ = 0:

  eulerian numbers      A(n,k)   -> LambdaPoly, three routes
  eulerian polynomials  A_n(x)   -> XLPoly, assembly or direct recursion
  bernoulli numbers     β_n      -> LambdaPoly (EGF triangular solve)
  bernoulli polynomials β_n(x)   -> XLPoly
  stirling, 2nd kind    {n k}    -> LambdaPoly, explicit sum or via eulerian
  stirling, 1st kind    S1(n,k)  -> LambdaPoly, basis conversion
  power sums            Σ(k)_n   -> LambdaPoly, three routes

The redundant routes are the point: every pair of routes realizes one of
the identities this package machine-checks, so disagreement anywhere is a
bug (here or in the identity itself). Routes never share code beyond the
base rings.

Where a formula is stated for -λ (the Worpitzky expansion, the Stirling
bridge, the power-sum expansion), the table entry is λ-negated via
``scale_lambda(-1)`` rather than kept as a second table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Tuple

from .algebra import (
    LambdaPoly,
    X,
    XLPoly,
    binomial_poly,
    falling_factorial_classical,
    falling_factorial_degenerate,
)
from .egf import bernoulli_taps

__all__ = [
    "EULERIAN_ROUTES",
    "EulerianTable",
    "eulerian_explicit",
    "eulerian_recursive",
    "eulerian_table",
    "eulerian_poly",
    "eulerian_at_minus_one",
    "bernoulli_number",
    "bernoulli_polynomial",
    "stirling2_degenerate",
    "stirling2_from_eulerian",
    "stirling1_degenerate",
    "stirling1_row",
    "eulerian_from_stirling2",
    "power_sum",
    "worpitzky_lhs",
]

EULERIAN_ROUTES = ("explicit", "recursion", "gf-recursion")


def _check_nonneg(**kwargs):
    for name, value in kwargs.items():
        if value < 0:
            raise ValueError(f"{name} must be >= 0, got {value}")


def eulerian_explicit(n: int, k: int) -> LambdaPoly:
    """Degenerate Eulerian number by the explicit alternating sum

        A(n,k) = Σ_{i=0}^{k} C(n+1,i)·(-1)^i·(k-i+1)_{n,λ}

    Total in (n,k): for k > n the sum itself collapses to the zero
    polynomial (an n-th degree sequence differenced more than n times),
    which is asserted by the verification suite rather than special-cased.
    """
    _check_nonneg(n=n, k=k)
    acc = LambdaPoly()
    for i in range(k + 1):
        term = comb(n + 1, i) * falling_factorial_degenerate(k - i + 1, n)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def _recursion_rows(max_n: int) -> List[List[LambdaPoly]]:
    """Triangle rows 0..max_n of the two-term recursion

        A(n,k) = ((n-k)+(n-1)λ)·A(n-1,k-1) + (k+1-(n-1)λ)·A(n-1,k)

    with A(0,0) = 1 and zero outside the triangle.
    """
    rows = [[LambdaPoly((1,))]]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            left = LambdaPoly((n - k, n - 1))  # (n-k) + (n-1)λ
            right = LambdaPoly((k + 1, -(n - 1)))  # (k+1) - (n-1)λ
            acc = LambdaPoly()
            if 1 <= k <= n:  # A(n-1,k-1) in range
                acc = acc + left * prev[k - 1]
            if k <= n - 1:  # A(n-1,k) in range
                acc = acc + right * prev[k]
            row.append(acc)
        rows.append(row)
    return rows


def eulerian_recursive(n: int, k: int) -> LambdaPoly:
    """Degenerate Eulerian number via the two-term recursion.

    Out-of-triangle indices return the zero polynomial, matching the
    neighbor convention the recursion itself relies on.
    """
    _check_nonneg(n=n, k=k)
    if k > n:
        return LambdaPoly()
    return _recursion_rows(n)[n][k]


def _explicit_rows(max_n: int) -> List[List[LambdaPoly]]:
    rows = []
    for n in range(max_n + 1):
        # (j)_{n,λ} for j = 1..n+1, shared across the whole row.
        falls = [falling_factorial_degenerate(j, n) for j in range(n + 2)]
        row = []
        for k in range(n + 1):
            acc = LambdaPoly()
            for i in range(k + 1):
                term = comb(n + 1, i) * falls[k - i + 1]
                acc = acc + (term if i % 2 == 0 else -term)
            row.append(acc)
        rows.append(row)
    return rows


def _gf_recursion_polys(max_n: int) -> List[XLPoly]:
    """A_0(x)..A_max(x) by the generating-function recursion

        A_n(x) = Σ_{i=0}^{n-1} C(n,i)·A_i(x)·(1)_{n-i,-λ}·(x-1)^{n-i-1}
    """
    polys = [XLPoly.constant(1)]
    # (1)_{m,-λ} and (x-1)^m, precomputed up to m = max_n.
    ones = [falling_factorial_degenerate(1, m).scale_lambda(-1) for m in range(max_n + 1)]
    xm1_pow = [XLPoly.constant(1)]
    for _ in range(max_n):
        xm1_pow.append(xm1_pow[-1] * (X - 1))
    for n in range(1, max_n + 1):
        acc = XLPoly()
        for i in range(n):
            acc = acc + comb(n, i) * (polys[i] * xm1_pow[n - i - 1]) * ones[n - i]
        polys.append(acc)
    return polys


@dataclass(frozen=True)
class EulerianTable:
    """Triangular table of degenerate Eulerian numbers, tagged by route."""

    max_n: int
    route: str
    rows: Tuple[Tuple[LambdaPoly, ...], ...]

    def entry(self, n: int, k: int) -> LambdaPoly:
        """A(n,k); indices outside the triangle give the zero polynomial."""
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n out of table range 0..{self.max_n}: {n}")
        if 0 <= k <= n:
            return self.rows[n][k]
        return LambdaPoly()

    def row(self, n: int) -> Tuple[LambdaPoly, ...]:
        return self.rows[n]


def eulerian_table(max_n: int, route: str = "recursion") -> EulerianTable:
    """Build the full triangle 0..max_n by the chosen route."""
    _check_nonneg(max_n=max_n)
    if route == "recursion":
        rows = _recursion_rows(max_n)
    elif route == "explicit":
        rows = _explicit_rows(max_n)
    elif route == "gf-recursion":
        rows = []
        for n, poly in enumerate(_gf_recursion_polys(max_n)):
            rows.append([poly.coeff(k) for k in range(n + 1)])
    else:
        raise ValueError(f"unknown route {route!r}, expected one of {EULERIAN_ROUTES}")
    return EulerianTable(max_n, route, tuple(tuple(r) for r in rows))


def eulerian_poly(n: int, route: str = "recursion") -> XLPoly:
    """Degenerate Eulerian polynomial A_n(x) = Σ_k A(n,k)·x^k.

    Routes 'explicit' and 'recursion' assemble the polynomial from the
    corresponding number triangle; 'gf-recursion' builds it directly by
    the generating-function recursion without touching the numbers.
    """
    _check_nonneg(n=n)
    if route == "gf-recursion":
        return _gf_recursion_polys(n)[n]
    return XLPoly(eulerian_table(n, route).row(n))


def eulerian_at_minus_one(n: int, route: str = "direct") -> LambdaPoly:
    """The value A_n(-1), i.e. the alternating sum Σ_k (-1)^k A(n,k).

    route 'direct' evaluates the Eulerian polynomial at x = -1; route
    'bernoulli' uses the closed form through the Bernoulli numbers,

        A_n(-1) = 2^{n+1}·(2^{n+1}·β_{n+1,λ/2} - β_{n+1,λ})/(n+1),  n ≥ 1

    which exercises the λ -> λ/2 substitution.
    """
    _check_nonneg(n=n)
    if route == "direct":
        return eulerian_poly(n).eval_x(-1)
    if route == "bernoulli":
        if n == 0:
            return LambdaPoly((1,))
        beta = bernoulli_taps(n + 1)[n + 1]
        halved = beta.scale_lambda(Fraction(1, 2))
        return (2 ** (n + 1) * halved - beta) * Fraction(2 ** (n + 1), n + 1)
    raise ValueError(f"unknown route {route!r}, expected 'direct' or 'bernoulli'")


def bernoulli_number(n: int) -> LambdaPoly:
    """Degenerate Bernoulli number β_{n,λ}."""
    _check_nonneg(n=n)
    return bernoulli_taps(n)[n]


def bernoulli_polynomial(n: int) -> XLPoly:
    """Degenerate Bernoulli polynomial β_n(x) = Σ_k C(n,k)·β_k·(x)_{n-k,λ}."""
    _check_nonneg(n=n)
    beta = bernoulli_taps(n)
    acc = XLPoly()
    for k in range(n + 1):
        acc = acc + comb(n, k) * falling_factorial_degenerate(X, n - k) * beta[k]
    return acc


def stirling2_degenerate(n: int, k: int) -> LambdaPoly:
    """Degenerate Stirling number of the second kind, explicit sum

        {n k} = ((-1)^k/k!)·Σ_{j=0}^{k} (-1)^j·C(k,j)·(j)_{n,λ}

    Total in (n,k): the sum vanishes identically for k > n.
    """
    _check_nonneg(n=n, k=k)
    acc = LambdaPoly()
    for j in range(k + 1):
        term = comb(k, j) * falling_factorial_degenerate(j, n)
        acc = acc + (term if (k - j) % 2 == 0 else -term)
    return acc * Fraction(1, factorial(k))


def stirling2_from_eulerian(n: int, k: int) -> LambdaPoly:
    """Second-kind Stirling number out of the λ-negated Eulerian row:

        {n k} = (1/k!)·Σ_{j=0}^{n} A_{-λ}(n,j)·C(j, n-k)
    """
    _check_nonneg(n=n, k=k)
    if k > n:
        raise ValueError("route requires 0 <= k <= n")
    row = eulerian_table(n).row(n)
    acc = LambdaPoly()
    for j in range(n + 1):
        c = comb(j, n - k)
        if c:
            acc = acc + c * row[j].scale_lambda(-1)
    return acc * Fraction(1, factorial(k))


def stirling1_row(n: int) -> List[LambdaPoly]:
    """Coefficients S1(n,0)..S1(n,n) of (x)_n in the basis (x)_{k,λ}.

    Triangular elimination: (x)_{k,λ} is monic of x-degree k, so peeling
    the leading x-coefficient off the remainder is exact and terminates.
    """
    _check_nonneg(n=n)
    rem = falling_factorial_classical(n)
    out = [LambdaPoly() for _ in range(n + 1)]
    for k in range(n, -1, -1):
        c = rem.coeff(k)
        if not c.is_zero:
            out[k] = c
            rem = rem - falling_factorial_degenerate(X, k) * c
    if not rem.is_zero:
        raise AssertionError("basis conversion left a nonzero remainder")
    return out


def stirling1_degenerate(n: int, k: int) -> LambdaPoly:
    """Degenerate Stirling number of the first kind S1(n,k)."""
    _check_nonneg(n=n, k=k)
    if k > n:
        return LambdaPoly()
    return stirling1_row(n)[k]


def eulerian_from_stirling2(n: int, k: int) -> LambdaPoly:
    """A(n,k-1) as a finite sum over second-kind Stirling numbers:

        A(n,k-1) = (-1)^k·Σ_{j=0}^{k} (-1)^j·C(n-j, n-k)·j!·{n j}
    """
    if n < 1 or not 1 <= k <= n:
        raise ValueError("requires n >= 1 and 1 <= k <= n")
    acc = LambdaPoly()
    for j in range(k + 1):
        c = comb(n - j, n - k) * factorial(j)
        if c:
            term = c * stirling2_degenerate(n, j)
            acc = acc + (term if (k - j) % 2 == 0 else -term)
    return acc


def power_sum(m: int, n: int, route: str = "direct") -> LambdaPoly:
    """The degenerate power sum Σ_{k=1}^{m} (k)_{n,λ}, by three routes:

      direct     literal summation of the falling factorials
      eulerian   Σ_{j=0}^{n} A_{-λ}(n,j)·C(m+j+1, n+1)
      bernoulli  (β_{n+1}(m+1) - β_{n+1})/(n+1)
    """
    if m < 1 or n < 1:
        raise ValueError("requires m >= 1 and n >= 1")
    if route == "direct":
        acc = LambdaPoly()
        for k in range(1, m + 1):
            acc = acc + falling_factorial_degenerate(k, n)
        return acc
    if route == "eulerian":
        row = eulerian_table(n).row(n)
        acc = LambdaPoly()
        for j in range(n + 1):
            acc = acc + comb(m + j + 1, n + 1) * row[j].scale_lambda(-1)
        return acc
    if route == "bernoulli":
        poly = bernoulli_polynomial(n + 1)
        return (poly.eval_x(m + 1) - poly.eval_x(0)) * Fraction(1, n + 1)
    raise ValueError(f"unknown route {route!r}, expected direct|eulerian|bernoulli")


def worpitzky_lhs(n: int) -> XLPoly:
    """Left side of the degenerate Worpitzky expansion,

        Σ_{k=0}^{n} C(x+k, n)·A_{-λ}(n,k)

    which the identity suite compares against (x)_{n,λ}.
    """
    _check_nonneg(n=n)
    row = eulerian_table(n).row(n)
    acc = XLPoly()
    for k in range(n + 1):
        entry = row[k]
        if not entry.is_zero:
            acc = acc + binomial_poly(k, n) * entry.scale_lambda(-1)
    return acc
