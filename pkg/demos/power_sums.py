"""
Degenerate power sums by three routes
=====================================

Σ_{k=1}^{m} (k)_{n,λ} generalizes the classical power sum 1^n + ... + m^n
(the λ -> 0 limit). It is computed three ways: literal summation, a
binomial-weighted Eulerian expansion, and a Bernoulli-polynomial
difference. Any disagreement would falsify one of the underlying
identities, so the routes double as cross-checks.
"""

from fractions import Fraction

from degenpoly import power_sum

###############################################################################
# A symbolic table
# ----------------

print("Σ (k)_{n,λ} for small m, n:")
for n in range(1, 4):
    for m in range(1, 5):
        value = power_sum(m, n)
        print(f"  m={m}, n={n}: {value}")

###############################################################################
# Route agreement
# ---------------

print("\nroutes agree on a grid:")
agree = all(
    power_sum(m, n, "direct") == power_sum(m, n, "eulerian") == power_sum(m, n, "bernoulli")
    for n in range(1, 6)
    for m in range(1, 11)
)
print("  direct == eulerian == bernoulli:", agree)

###############################################################################
# Specializing λ
# --------------
# λ = 0 recovers the classical sums: 1² + 2² = 5. Any rational λ works
# and stays exact.

five_minus_3lam = power_sum(2, 2)
print("\nΣ_{k<=2} (k)_{2,λ} =", five_minus_3lam)
for lam in (0, 1, Fraction(1, 3), Fraction(-2, 7)):
    print(f"  at λ = {lam}: {five_minus_3lam.eval(lam)}")
