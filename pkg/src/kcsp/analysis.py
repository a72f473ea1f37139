"""Growth-rate constants for the two solvers.

The branching solver's node recurrence has characteristic polynomial
f(x) = x^k - (d-1)(x^{k-1} + ... + x + 1); multiplying by (x - 1) gives
g(x) = x^{k+1} - d*x^k + (d-1), which is strictly increasing past
d*k/(k+1) and keeps the same dominant root.  That root lies strictly
between d - 1/d^{k-1} and d - (d-1)/d^k, so the branching bound base
d - (d-1)/d^k is safe, and the randomized solver's base
d*((d-1)/d)^{1/k} is the smaller of the two for every d, k >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _g(x: Fraction, d: int, k: int) -> Fraction:
    return x ** (k + 1) - d * x**k + (d - 1)


def _f(x: Fraction, d: int, k: int) -> Fraction:
    total = Fraction(0)
    for i in range(k):
        total += x**i
    return x**k - (d - 1) * total


@dataclass(frozen=True)
class RootResult:
    """Dominant root of f, bracketed and certified in exact arithmetic.

    The float sandwich fields are for display; near d = k = 10 the gap
    between the root and its upper bound drops below float64 resolution,
    so strict-containment checks must use the *_exact fields.
    """

    d: int
    k: int
    lambda_: float
    residual_f: float
    residual_g: float
    lower_sandwich: float
    upper_sandwich: float
    root_exact: Fraction
    lower_exact: Fraction
    upper_exact: Fraction


def char_root(d: int, k: int) -> RootResult:
    """Bisect g on (d*k/(k+1), d) and certify d - 1/d^{k-1} < root < d - (d-1)/d^k.

    All iterates are Fractions, so the sandwich comparison and the residuals
    are exact; the final interval is narrow enough that |g| <= 1e-10 and the
    certified bracket cannot be crossed by the reported midpoint.
    """
    if d < 2 or k < 2:
        raise ValueError("char_root requires d >= 2 and k >= 2")
    lo = Fraction(d * k, k + 1)
    hi = Fraction(d)
    if not (_g(lo, d, k) < 0 < _g(hi, d, k)):
        raise ArithmeticError("bisection bracket does not straddle the root")
    lower = d - Fraction(1, d ** (k - 1))
    upper = d - Fraction(d - 1, d**k)
    g_lower = _g(lower, d, k)
    g_upper = _g(upper, d, k)
    if not (g_lower < 0 < g_upper):
        raise ArithmeticError("sandwich bounds do not bracket the root")
    # |g'| <= (2k+1)*d^k on [0, d]; keep the midpoint's residual below 1e-10
    # and keep the interval narrower than the root's exact distance to either
    # sandwich bound, which is at least |g(bound)| / slope_cap.
    slope_cap = (2 * k + 1) * d**k
    tol = min(
        Fraction(1, 10**13),
        Fraction(1, 10**10 * slope_cap),
        -g_lower / (2 * slope_cap),
        g_upper / (2 * slope_cap),
    )
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _g(mid, d, k) < 0:
            lo = mid
        else:
            hi = mid
    root = (lo + hi) / 2
    if not (lower < root < upper):
        raise ArithmeticError("bisection result escaped the certified sandwich")
    return RootResult(
        d=d,
        k=k,
        lambda_=float(root),
        residual_f=float(abs(_f(root, d, k))),
        residual_g=float(abs(_g(root, d, k))),
        lower_sandwich=float(lower),
        upper_sandwich=float(upper),
        root_exact=root,
        lower_exact=lower,
        upper_exact=upper,
    )


def dpll_bound_base(d: int, k: int) -> float:
    """Base of the branching solver's node bound, d - (d-1)/d^k."""
    if d < 2 or k < 1:
        raise ValueError("dpll_bound_base requires d >= 2 and k >= 1")
    return d - (d - 1) / d**k


def ppsz_bound_base(d: int, k: int) -> float:
    """Base of the randomized solver's time bound, d*((d-1)/d)^(1/k)."""
    if d < 2 or k < 1:
        raise ValueError("ppsz_bound_base requires d >= 2 and k >= 1")
    return d * ((d - 1) / d) ** (1.0 / k)


def bound_variable_domain_dpll(n: int, alpha: float, epsilon: float = 0.01) -> float:
    """Natural log of the branching bound when d = n^alpha.

    (d - (d-1)/d^k)^n has log alpha*n*(ln n - 1) up to lower-order terms;
    for alpha <= 1 an explicit (1+epsilon)^n slack covers them.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if alpha <= 0 or epsilon < 0:
        raise ValueError("need alpha > 0 and epsilon >= 0")
    bound = alpha * n * (math.log(n) - 1)
    if alpha <= 1:
        bound += n * math.log1p(epsilon)
    return bound


@dataclass(frozen=True)
class BoundRow:
    d: int
    k: int
    char_root: float
    dpll_base: float
    ppsz_base: float
    smaller: str


def bound_table(d_values, k_values) -> list[BoundRow]:
    """Per-(d, k) bases with the winner flagged; rows ordered by (d, k)."""
    rows = []
    for d in d_values:
        for k in k_values:
            root = char_root(d, k)
            dpll = dpll_bound_base(d, k)
            ppsz = ppsz_bound_base(d, k)
            rows.append(
                BoundRow(
                    d=d,
                    k=k,
                    char_root=root.lambda_,
                    dpll_base=dpll,
                    ppsz_base=ppsz,
                    smaller="ppsz" if ppsz <= dpll else "dpll",
                )
            )
    return rows
