"""Small-amplitude Stokes-wave expansion data and the linear dispersion relation.

Conventions used across the package (deep water,27-style normalization):

* The wave profiles entering the linearized operator are written as cosine
  series

      c(x) = sum_{n>=1} eps^n * ( c_n[0]/2 + sum_{k>=1} c_n[k] cos(k x) ),

  with integer-or-rational coefficients ``c_n[k]`` tabulated up to n = 4.
  Coefficients are even in k (``c_n[-k] = c_n[k]``) and vanish unless
  ``k = n (mod 2)`` and ``|k| <= n``.

* Dispersion: Omega_j(mu) = sqrt(|j + mu|) and

      omega_j^sigma(mu) = j + mu - sigma * Omega_j(mu),   sigma = +-1.

* ``sgn_plus(j)`` is +1 for j >= 0 and -1 for j < 0 (the sign convention of
  the symbol |D + mu| on the first Brillouin zone).

Everything in this module is exact rational arithmetic except the float
helpers `omega` / `Omega`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

__all__ = [
    "p_coeff",
    "a_coeff",
    "eval_profile",
    "sgn_plus",
    "Omega",
    "omega",
    "omega_exact",
    "rational_sqrt",
    "Collision",
    "collision_frequency",
]

MAX_ORDER = 4

# Harmonic tables c_n[|k|] for the two profiles ("p" multiplies the transport
# part of the operator, "a" the zeroth-order part).  Keys: (n, |k|).
_P_TABLE: dict[tuple[int, int], Fraction] = {
    (1, 1): Fraction(-2),
    (2, 0): Fraction(3),
    (2, 2): Fraction(-2),
    (3, 1): Fraction(3),
    (3, 3): Fraction(-3),
    (4, 0): Fraction(1, 4),
    (4, 2): Fraction(4),
    (4, 4): Fraction(-16, 3),
}

_A_TABLE: dict[tuple[int, int], Fraction] = {
    (1, 1): Fraction(-2),
    (2, 0): Fraction(4),
    (2, 2): Fraction(-2),
    (3, 1): Fraction(4),
    (3, 3): Fraction(-3),
    (4, 0): Fraction(-2),
    (4, 2): Fraction(4),
    (4, 4): Fraction(-16, 3),
}


def _coeff(table: dict[tuple[int, int], Fraction], n: int, kappa: int) -> Fraction:
    if not isinstance(n, int) or not (1 <= n <= MAX_ORDER):
        raise ValueError(f"expansion order n must be an integer in 1..{MAX_ORDER}, got {n!r}")
    k = abs(kappa)
    if k > n or (k - n) % 2 != 0:
        return Fraction(0)
    return table.get((n, k), Fraction(0))


def p_coeff(n: int, kappa: int) -> Fraction:
    """Harmonic-``kappa`` coefficient of the order-``n`` transport profile."""
    return _coeff(_P_TABLE, n, kappa)


def a_coeff(n: int, kappa: int) -> Fraction:
    """Harmonic-``kappa`` coefficient of the order-``n`` zeroth-order profile."""
    return _coeff(_A_TABLE, n, kappa)


def eval_profile(
    which: str,
    eps: float,
    x: Union[float, np.ndarray],
    order: int = MAX_ORDER,
) -> Union[float, np.ndarray]:
    """Evaluate the truncated profile ``p`` or ``a`` at amplitude ``eps``.

    ``order`` truncates the amplitude expansion (0 gives identically zero);
    orders beyond the tabulated range are rejected rather than silently
    extrapolated.
    """
    if which not in ("p", "a"):
        raise ValueError(f"profile must be 'p' or 'a', got {which!r}")
    if not isinstance(order, int) or not (0 <= order <= MAX_ORDER):
        raise ValueError(f"order must be an integer in 0..{MAX_ORDER}, got {order!r}")
    coeff = p_coeff if which == "p" else a_coeff
    xarr = np.asarray(x, dtype=float)
    total = np.zeros_like(xarr)
    for n in range(1, order + 1):
        layer = float(coeff(n, 0)) / 2.0 * np.ones_like(xarr)
        for k in range(1, n + 1):
            c = coeff(n, k)
            if c != 0:
                layer = layer + float(c) * np.cos(k * xarr)
        total = total + (eps ** n) * layer
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(total)
    return total


def sgn_plus(j: int) -> int:
    """Sign of the half-open convention: +1 for j >= 0, -1 for j < 0."""
    return 1 if j >= 0 else -1


def Omega(j: int, mu: float) -> float:
    """Deep-water dispersion speed sqrt(|j + mu|)."""
    return math.sqrt(abs(j + mu))


def omega(j: int, sigma: int, mu: float) -> float:
    """Unperturbed frequency ``j + mu - sigma*sqrt(|j + mu|)``."""
    if sigma not in (1, -1):
        raise ValueError(f"sigma must be +1 or -1, got {sigma!r}")
    return j + mu - sigma * Omega(j, mu)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        raise ValueError("rational_sqrt expects a nonnegative argument")
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def omega_exact(j: int, sigma: int, mu: Fraction) -> Fraction | None:
    """Exact value of ``omega`` when ``|j + mu|`` is a rational square, else None."""
    if sigma not in (1, -1):
        raise ValueError(f"sigma must be +1 or -1, got {sigma!r}")
    r = j + Fraction(mu)
    s = rational_sqrt(abs(r))
    if s is None:
        return None
    return r - sigma * s


@dataclass(frozen=True)
class Collision:
    """An unperturbed eigenvalue collision seeding a potential isola.

    ``omega_star`` is the common frequency, attained at Floquet exponent
    ``mu`` by the mode pair ``(k, sigma=-1)`` and ``(k_prime, sigma=+1)``.
    """

    p: int
    omega_star: Fraction
    mu: Fraction
    k: int
    k_prime: int


def collision_frequency(p: int) -> Collision:
    """Collision data for the p-th family, omega* = (p^2 - 1)/4, p >= 2."""
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"collision index p must be an integer >= 2, got {p!r}")
    omega_star = Fraction(p * p - 1, 4)
    if p % 2 == 0:
        n = p // 2
        return Collision(p, omega_star, Fraction(1, 4), n * n - n, n * n + n)
    n = (p - 1) // 2
    return Collision(p, omega_star, Fraction(0), n * n, (n + 1) * (n + 1))
