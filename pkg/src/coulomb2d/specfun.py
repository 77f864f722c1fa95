"""Special functions needed by the closed-form Coulomb matrix elements.

Half-integer Gamma values, the Beta sequence B(1/2, k+1/2), the Gauss
hypergeometric series 2F1(k+1/2, 1/2; l+1; z), complete elliptic
integrals via the arithmetic-geometric mean, associated Laguerre
polynomials and exact binomial coefficients.
"""

from __future__ import annotations

import math

from .errors import DomainError, NonConvergenceError

SQRT_PI = math.sqrt(math.pi)

HYP2F1_TOL = 1e-16
HYP2F1_MAX_TERMS = 10**6

# Gamma(n + 1/2) overflows IEEE double just past this argument.
_GAMMA_HALF_MAX = 170

_gamma_half_cache = [SQRT_PI]
_beta_half_cache = [math.pi]


def double_factorial(n: int) -> int:
    """n!! with the empty-product convention (-1)!! = 1."""
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


def gamma_half(n: int) -> float:
    """Gamma(n + 1/2) = (2n-1)!!/2^n * sqrt(pi) for integer n >= 0.

    Values are built once by the recurrence Gamma(n+3/2) = (n+1/2)*Gamma(n+1/2)
    and memoized, so consecutive ratios are exact to one rounding.
    """
    if n < 0:
        raise DomainError(f"gamma_half requires n >= 0, got {n}")
    if n > _GAMMA_HALF_MAX:
        raise DomainError(f"gamma_half({n}) exceeds double range")
    cache = _gamma_half_cache
    while len(cache) <= n:
        k = len(cache) - 1
        cache.append(cache[-1] * (k + 0.5))
    return cache[n]


def beta_half(k: int) -> float:
    """B(1/2, k + 1/2), from B_0 = pi and B_k = ((k - 1/2)/k) * B_{k-1}."""
    if k < 0:
        raise DomainError(f"beta_half requires k >= 0, got {k}")
    cache = _beta_half_cache
    while len(cache) <= k:
        m = len(cache)
        cache.append(cache[-1] * (m - 0.5) / m)
    return cache[k]


def hyp2f1_half(k: int, l: int, z: float) -> float:
    """Gauss series 2F1(k + 1/2, 1/2; l + 1; z) for 0 <= z < 1, l >= k >= 0.

    All series terms are positive, so the sum is monotone and stops when
    the relative increment drops below 1e-16.  Convergence slows as
    z -> 1; a hard cap of 1e6 terms guards that corner.
    """
    if k < 0 or l < k:
        raise DomainError(f"hyp2f1_half requires l >= k >= 0, got k={k}, l={l}")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"hyp2f1_half requires 0 <= z < 1, got z={z}")
    if z == 0.0:
        return 1.0
    a = k + 0.5
    c = l + 1.0
    term = 1.0
    total = 1.0
    for m in range(HYP2F1_MAX_TERMS):
        term *= (a + m) * (0.5 + m) / ((c + m) * (1.0 + m)) * z
        total += term
        if term < HYP2F1_TOL * total:
            return total
    raise NonConvergenceError(
        f"2F1({a}, 0.5; {c}; {z}) did not converge in {HYP2F1_MAX_TERMS} terms"
    )


def elliptic_K(m: float) -> float:
    """Complete elliptic integral K(m) in the parameter convention.

    K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta), computed by the
    arithmetic-geometric mean of 1 and sqrt(1-m).
    """
    if not 0.0 <= m < 1.0:
        raise DomainError(f"elliptic_K requires 0 <= m < 1, got {m}")
    a = 1.0
    b = math.sqrt(1.0 - m)
    while a - b > 1e-16 * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (a + b)


def elliptic_E(m: float) -> float:
    """Complete elliptic integral E(m) in the parameter convention.

    Uses the AGM with the classical correction sum
    E = K * (1 - sum_n 2^{n-1} c_n^2), c_0 = sqrt(m).
    """
    if not 0.0 <= m <= 1.0:
        raise DomainError(f"elliptic_E requires 0 <= m <= 1, got {m}")
    if m == 1.0:
        return 1.0
    a = 1.0
    b = math.sqrt(1.0 - m)
    s = 0.5 * m
    p = 1.0
    while a - b > 1e-17 * a:
        c = 0.5 * (a - b)
        s += p * c * c
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        p *= 2.0
    return math.pi / (a + b) * (1.0 - s)


def laguerre(n: int, alpha: float, x):
    """Associated Laguerre polynomial L_n^alpha(x).

    Evaluated by the three-term recurrence upward in n, which is stable
    on x >= 0.  Accepts a float or a numpy array for x.
    """
    if n < 0:
        raise DomainError(f"laguerre requires n >= 0, got {n}")
    if n == 0:
        return 1.0 + 0.0 * x
    prev = 1.0 + 0.0 * x
    cur = (alpha + 1.0) - x
    for m in range(1, n):
        prev, cur = cur, ((2.0 * m + 1.0 + alpha - x) * cur - (m + alpha) * prev) / (m + 1.0)
    return cur


def binomial(n: int, k: int) -> int:
    """Exact integer C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
