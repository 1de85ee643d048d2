"""Symplectic eigenbasis of the flat (zero-amplitude) linearized operator.

For ``j + mu != 0`` the mode ``(j, sigma)`` carries the eigenvector

    f_j^sigma(mu) = (2*Omega_j)^(-1/2) * ( -sqrt(sigma)*Omega_j , sqrt(-sigma) ) e^{i j x},

with the branch convention sqrt(+1) = 1, sqrt(-1) = i.  The vectors are
normalized so that the complex symplectic pairing

    W(f, g) = f[1]*conj(g[0]) - f[0]*conj(g[1])      (same harmonic j)

equals -i on (+,+) diagonal pairs, +i on (-,-) pairs, and 0 otherwise.

The reversibility involution acts on a single-harmonic component vector
(c1, c2) as (conj(c1), -conj(c2)); the basis vectors are eigenvectors of it
with sign sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Mode",
    "sqrt_sigma",
    "basis_vector",
    "symplectic_pairing",
    "reversibility_image",
]


@dataclass(frozen=True, order=True)
class Mode:
    """A Fourier harmonic ``j`` together with a branch sign ``sigma``."""

    j: int
    sigma: int

    def __post_init__(self) -> None:
        if self.sigma not in (1, -1):
            raise ValueError(f"sigma must be +1 or -1, got {self.sigma!r}")

    def __repr__(self) -> str:  # compact: (2,+) instead of Mode(j=2, sigma=1)
        return f"({self.j},{'+' if self.sigma > 0 else '-'})"


def sqrt_sigma(sigma: int) -> complex:
    """Branch convention sqrt(+1) = 1, sqrt(-1) = i."""
    if sigma == 1:
        return 1.0 + 0.0j
    if sigma == -1:
        return 1j
    raise ValueError(f"sigma must be +1 or -1, got {sigma!r}")


def basis_vector(mode: Mode, mu: float) -> np.ndarray:
    """Component vector of ``f_j^sigma(mu)`` (the e^{ijx} factor is implicit)."""
    r = mode.j + mu
    if r == 0:
        raise ValueError(f"basis vector undefined at j + mu = 0 (j={mode.j}, mu={mu})")
    om = math.sqrt(abs(r))
    norm = 1.0 / math.sqrt(2.0 * om)
    return norm * np.array(
        [-sqrt_sigma(mode.sigma) * om, sqrt_sigma(-mode.sigma)], dtype=complex
    )


def symplectic_pairing(f: np.ndarray, g: np.ndarray) -> complex:
    """W(f, g) for two component vectors on the same harmonic."""
    return complex(f[1] * np.conj(g[0]) - f[0] * np.conj(g[1]))


def reversibility_image(mode: Mode, mu: float) -> tuple[np.ndarray, int]:
    """Image of ``f_j^sigma`` under the reversibility involution and its sign.

    Returns ``(image, s)`` with ``image == s * basis_vector(mode, mu)``;
    ``s`` is +1 on the sigma = +1 branch and -1 on the sigma = -1 branch.
    """
    f = basis_vector(mode, mu)
    image = np.array([np.conj(f[0]), -np.conj(f[1])], dtype=complex)
    for s in (1, -1):
        if np.allclose(image, s * f, rtol=0.0, atol=1e-15):
            return image, s
    raise AssertionError("reversibility image is not proportional to the basis vector")
