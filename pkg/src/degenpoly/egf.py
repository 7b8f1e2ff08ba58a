"""Truncated exponential generating functions over the exact rings.

An Egf of order N stores the taps a_0 .. a_N of f(t) = Σ a_n t^n / n!
(taps, not ordinary coefficients: every series here is naturally written
in EGF form and the product then becomes a binomial convolution, which
keeps all arithmetic inside the coefficient ring).

The taps may live in any ring that supports +, -, * and scalar
multiplication by int (LambdaPoly and XLPoly both do). The truncation
order is fixed per value; combining series of different orders is a
contract violation, not a silent re-truncation.

No series inversion is ever performed. The Bernoulli solve and the
generating-function check both stay inside the polynomial rings by
cross-multiplication: the Bernoulli taps come from a triangular solve of
B(t)·(e_λ(t)-1)/t = 1, and the Eulerian generating function is verified
through the residual S(t)·(x - e_{-λ}((x-1)t)) - (x-1), which must vanish
tap by tap.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import List, Sequence

from .algebra import LambdaPoly, X, falling_factorial_degenerate

__all__ = [
    "Egf",
    "egf_mul",
    "degenerate_exp",
    "degenerate_exp_power",
    "bernoulli_taps",
    "gf_residual",
]


class Egf:
    """Truncated EGF: order N plus the taps a_0 .. a_N."""

    __slots__ = ("order", "taps")

    def __init__(self, order: int, taps: Sequence):
        if order < 0:
            raise ValueError("order must be >= 0")
        taps = tuple(taps)
        if len(taps) != order + 1:
            raise ValueError(f"expected {order + 1} taps, got {len(taps)}")
        self.order = order
        self.taps = taps

    @classmethod
    def constant(cls, c, order: int) -> "Egf":
        """The series c + 0·t + ... truncated at the given order."""
        zero = c * 0
        return cls(order, (c,) + (zero,) * order)

    def is_zero(self) -> bool:
        return not any(self.taps)

    def _check_order(self, other: "Egf"):
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if not isinstance(other, Egf):
            return NotImplemented
        self._check_order(other)
        return Egf(self.order, tuple(a + b for a, b in zip(self.taps, other.taps)))

    def __sub__(self, other):
        if not isinstance(other, Egf):
            return NotImplemented
        self._check_order(other)
        return Egf(self.order, tuple(a - b for a, b in zip(self.taps, other.taps)))

    def __mul__(self, other):
        if not isinstance(other, Egf):
            return NotImplemented
        return egf_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Egf):
            return NotImplemented
        return self.order == other.order and self.taps == other.taps

    def __hash__(self):
        return hash((self.order, self.taps))

    def __repr__(self):
        return f"Egf(order={self.order}, taps={list(self.taps)!r})"


def egf_mul(f: Egf, g: Egf) -> Egf:
    """Product of two truncated EGFs: tap_n = Σ_k C(n,k)·a_k·b_{n-k}."""
    f._check_order(g)
    taps = []
    for n in range(f.order + 1):
        acc = f.taps[0] * g.taps[n]
        for k in range(1, n + 1):
            acc = acc + comb(n, k) * (f.taps[k] * g.taps[n - k])
        taps.append(acc)
    return Egf(f.order, taps)


def degenerate_exp(u, order: int, sign: int = 1) -> Egf:
    """The series e_{±λ}(u·t), tap_n = (1)_{n,±λ}·u^n.

    ``u`` may be an XLPoly (e.g. x-1) or a rational; ``sign`` selects +λ
    or -λ. Note the argument-scaling form does NOT satisfy the exponential
    law: e_λ(u·t)·e_λ(v·t) differs from e_λ((u+v)·t) for λ ≠ 0. Use
    ``degenerate_exp_power`` when the base belongs in the exponent.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    taps = []
    upow = u**0
    for n in range(order + 1):
        scalar = falling_factorial_degenerate(1, n)
        if sign < 0:
            scalar = scalar.scale_lambda(-1)
        taps.append(upow * scalar)
        if n < order:
            upow = upow * u
    return Egf(order, taps)


def degenerate_exp_power(base, order: int, sign: int = 1) -> Egf:
    """The series e_{±λ}^{base}(t), tap_n = (base)_{n,±λ}.

    With base = x this is the degenerate exponential with formal exponent
    x; integer bases give the LambdaPoly-valued specializations. The
    exponent form does obey e^a·e^b = e^{a+b}.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    taps = []
    for n in range(order + 1):
        tap = falling_factorial_degenerate(base, n)
        if sign < 0:
            tap = tap.scale_lambda(-1)
        taps.append(tap)
    return Egf(order, taps)


def bernoulli_taps(order: int) -> List[LambdaPoly]:
    """Degenerate Bernoulli numbers β_{0,λ} .. β_{N,λ} by triangular solve.

    B(t)·(e_λ(t)-1)/t = 1, where (e_λ(t)-1)/t has tap_n = (1)_{n+1,λ}/(n+1),
    so β_0 = 1 and for n ≥ 1:

        β_n = -Σ_{k=0}^{n-1} C(n,k) · β_k · (1)_{n-k+1,λ}/(n-k+1)
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    # g[j] = (1)_{j+1,λ}/(j+1), built incrementally from (1)_{j,λ}.
    fall = LambdaPoly((1,))
    g = []
    for j in range(order + 1):
        fall = fall * LambdaPoly((1, -j))  # now (1)_{j+1,λ}
        g.append(fall * Fraction(1, j + 1))
    beta = [LambdaPoly((1,))]
    for n in range(1, order + 1):
        acc = LambdaPoly()
        for k in range(n):
            acc = acc + comb(n, k) * (beta[k] * g[n - k])
        beta.append(-acc)
    return beta


def gf_residual(n_max: int) -> Egf:
    """Residual of the Eulerian generating function, truncated at n_max.

    Computes S(t)·(x - e_{-λ}((x-1)t)) - (x-1) over Q[λ][x], where the
    taps of S are the degenerate Eulerian polynomials. The generating
    function identity holds iff every tap of the result is zero.
    """
    from .sequences import eulerian_poly  # deferred: sequences imports egf

    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    s = Egf(n_max, tuple(eulerian_poly(n) for n in range(n_max + 1)))
    e = degenerate_exp(X - 1, n_max, sign=-1)
    return s * (Egf.constant(X, n_max) - e) - Egf.constant(X - 1, n_max)
