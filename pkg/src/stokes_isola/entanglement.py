"""Mode-coupling coefficients, residue calculus, and resolvent-chain algebra.

This is the computational kernel behind the reduced 2x2 matrix: every
matrix entry is a finite sum of products

    (coupling coefficients along a path of harmonics) x (a residue factor),

where the residue factor is a contour integral of a product of resolvents
of the flat operator around the collision frequency i*omega*.

Grading convention.  A jet index ``(i, n)`` labels the coefficient of
``delta^i * eps^n`` in the expansion of the operator's self-adjoint part,
where ``delta`` is the Floquet offset ``mu - 1/4`` and ``eps`` the wave
amplitude.  The three nonzero families of couplings through the computed
order are:

* ``(1, 0)``: diagonal in the harmonic (kappa = 0),
      sqrt(sigma)*conj(sqrt(sigma')) / (2*Omega_j)
          * ( sigma*sigma'*s_j - (sigma + sigma') * Omega_j )

* ``(0, n)``, n = 1..4, kappa = n (mod 2), |kappa| <= n:
      (1/4) * sqrt(sigma)*conj(sqrt(sigma')) * sqrt(Omega_{j+k} Omega_j)
          * ( a_n[k] - sigma p_n[k] Omega_j s_j - sigma' p_n[k] Omega_{j+k} s_{j+k} )

* ``(1, n)``, n = 1..3, kappa = n (mod 2), |kappa| <= n:
      -(1/4) * sqrt(sigma)*conj(sqrt(sigma')) * p_n[k]
          * ( sigma*Omega_{j+k} + sigma'*Omega_j ) / sqrt(Omega_j Omega_{j+k})

with ``Omega_j = sqrt(|j + 1/4|)`` and ``s_j = sign(j + 1/4)``.  All other
jet indices couple to zero at this order.  Coefficients obey the conjugation
symmetry  conj(c[(i,n),k](j -> j+k, s -> s')) = c[(i,n),-k](j+k -> j, s' -> s).

Pole bookkeeping is exact: with rational ``mu`` and ``omega*`` a mode
``(j, sigma)`` sits on the contour's pole iff ``sqrt(|j + mu|)`` is rational
and ``j + mu - sigma*sqrt(|j + mu|) == omega*`` as exact fractions.

Chains.  ``chain_apply(ops, source)`` implements

    P[B_q, ..., B_1] f_source  =  sum over intermediate branch signs of
        (prod_s sigma_s) * (prod_s coupling_s) * R(all modes on the path)

where ``ops[0]`` acts *first* (note: printed operator products act right to
left, so transcriptions must be reversed into application order), each op is
a pair ``(JetIndex, kappa)``, and the residue ``R`` spans the source, every
intermediate, and the final mode of the path.  Projected variants restrict
the final mode to the resonant pair P0 = {(0,-), (2,+)} or its complement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence, Union

from .basis import Mode, sqrt_sigma
from .stokes import a_coeff, omega, p_coeff, rational_sqrt

__all__ = [
    "JetIndex",
    "ChainOp",
    "RESONANT_MODES",
    "ent_coeff",
    "is_pole",
    "residue",
    "residue_contour",
    "chain_apply",
    "chain_apply_vec",
    "project",
    "op_bracket",
    "op_bracket_right",
    "jet_bracket",
    "jet_bracket_right",
    "chain_bracket",
    "projected_chain",
]

MU_STAR = Fraction(1, 4)
OMEGA_STAR = Fraction(3, 4)

#: The two modes whose flat frequencies collide at omega* = 3/4.
RESONANT_MODES: tuple[Mode, Mode] = (Mode(0, -1), Mode(2, +1))

Projector = Optional[Literal["P0", "Q0"]]
RationalLike = Union[Fraction, float]


@dataclass(frozen=True)
class JetIndex:
    """Bidegree ``(mu_order, eps_order)`` of an operator jet."""

    mu_order: int
    eps_order: int

    def __post_init__(self) -> None:
        if self.mu_order not in (0, 1, 2):
            raise ValueError(f"mu_order must be 0, 1 or 2, got {self.mu_order!r}")
        if not (0 <= self.eps_order <= 4):
            raise ValueError(f"eps_order must be in 0..4, got {self.eps_order!r}")
        if (self.mu_order, self.eps_order) == (0, 0):
            raise ValueError("(0, 0) is the flat operator, not a jet direction")


ChainOp = tuple[JetIndex, int]


def _omega_cap(j: int, mu: float) -> tuple[float, int]:
    r = j + mu
    if r == 0:
        raise ValueError(f"coupling undefined at j + mu = 0 (j={j}, mu={mu})")
    return math.sqrt(abs(r)), (1 if r > 0 else -1)


def ent_coeff(
    ell: JetIndex,
    kappa: int,
    source: Mode,
    target_sigma: int,
    *,
    mu: float = 0.25,
) -> complex:
    """Coupling coefficient of jet ``ell`` from ``source`` to ``(source.j + kappa, target_sigma)``.

    Exactly zero whenever ``(ell, kappa)`` lies outside the supported
    families described in the module docstring.
    """
    if target_sigma not in (1, -1):
        raise ValueError(f"target_sigma must be +1 or -1, got {target_sigma!r}")
    i, n = ell.mu_order, ell.eps_order
    j, sg = source.j, source.sigma
    sg_t = target_sigma
    phase = sqrt_sigma(sg) * sqrt_sigma(sg_t).conjugate()

    if (i, n) == (1, 0):
        if kappa != 0:
            return 0j
        om, s = _omega_cap(j, mu)
        return phase / (2.0 * om) * (sg * sg_t * s - (sg + sg_t) * om)

    if i == 0 and 1 <= n <= 4:
        if abs(kappa) > n or (kappa - n) % 2 != 0:
            return 0j
        om_s, s_s = _omega_cap(j, mu)
        om_t, s_t = _omega_cap(j + kappa, mu)
        p = float(p_coeff(n, kappa))
        a = float(a_coeff(n, kappa))
        return (
            0.25
            * phase
            * math.sqrt(om_t * om_s)
            * (a - sg * p * om_s * s_s - sg_t * p * om_t * s_t)
        )

    if i == 1 and 1 <= n <= 3:
        if abs(kappa) > n or (kappa - n) % 2 != 0:
            return 0j
        om_s, _ = _omega_cap(j, mu)
        om_t, _ = _omega_cap(j + kappa, mu)
        p = float(p_coeff(n, kappa))
        return -0.25 * phase * (sg * om_t + sg_t * om_s) * p / math.sqrt(om_s * om_t)

    return 0j


# ---------------------------------------------------------------- residues


def is_pole(
    mode: Mode,
    mu: RationalLike = MU_STAR,
    omega_star: RationalLike = OMEGA_STAR,
) -> bool:
    """Whether the flat frequency of ``mode`` equals ``omega_star``.

    With rational inputs the test is exact (a rational frequency requires
    ``|j + mu|`` to be a rational square); float inputs fall back to a
    1e-12 window.
    """
    if isinstance(mu, Fraction) and isinstance(omega_star, Fraction):
        r = mode.j + mu
        s = rational_sqrt(abs(r))
        if s is None:
            return False
        return r - mode.sigma * s == omega_star
    return abs(omega(mode.j, mode.sigma, float(mu)) - float(omega_star)) < 1e-12


def residue(
    modes: Sequence[Mode],
    mu: RationalLike = MU_STAR,
    omega_star: RationalLike = OMEGA_STAR,
) -> float:
    """Contour-integral factor for a path of ``q+1`` modes.

    Equals (-i)^q/(2 pi i) * integral over a small circle around i*omega* of
    the product of the q+1 resolvent factors 1/(lambda - i*omega_m).  Real,
    and invariant under permutations of the modes.  Case analysis:

    * no pole on the path: 0;
    * exactly one pole: product of 1/(omega_m - omega*) over the others;
    * exactly two poles, path longer than 2: -(sum of 1/(omega_m - omega*))
      * (product of 1/(omega_m - omega*)) over the others;
    * every mode a pole (path length >= 2): 0;
    * three or more poles on a longer path: outside the supported case
      analysis (raises ValueError).
    """
    if len(modes) == 0:
        raise ValueError("residue needs at least one mode")
    flags = [is_pole(m, mu, omega_star) for m in modes]
    npoles = sum(flags)
    if npoles == 0:
        return 0.0
    if npoles == len(modes) and len(modes) >= 2:
        return 0.0
    omega_star_f = float(omega_star)
    mu_f = float(mu)
    rest = [
        omega(m.j, m.sigma, mu_f) - omega_star_f
        for m, f in zip(modes, flags)
        if not f
    ]
    if npoles == 1:
        out = 1.0
        for r in rest:
            out /= r
        return out
    if npoles == 2:
        prod = 1.0
        acc = 0.0
        for r in rest:
            prod /= r
            acc += 1.0 / r
        return -acc * prod
    raise ValueError(
        f"{npoles} poles on a path of {len(modes)} modes: not covered by the case analysis"
    )


def residue_contour(
    modes: Sequence[Mode],
    mu: float = 0.25,
    omega_star: float = 0.75,
    radius: float = 0.125,
    nodes: int = 4096,
) -> complex:
    """Brute-force trapezoid evaluation of the defining contour integral.

    Independent numerical check of `residue`; the circle must be small
    enough that only frequencies equal to ``omega_star`` fall inside.
    """
    q = len(modes) - 1
    omegas = [omega(m.j, m.sigma, mu) for m in modes]
    t = [2.0 * math.pi * k / nodes for k in range(nodes)]
    total = 0j
    for tk in t:
        lam = 1j * omega_star + radius * complex(math.cos(tk), math.sin(tk))
        dlam = radius * complex(-math.sin(tk), math.cos(tk))
        denom = 1.0 + 0j
        for om in omegas:
            denom *= lam - 1j * om
        total += dlam / denom
    total *= 2.0 * math.pi / nodes
    return (-1j) ** q / (2j * math.pi) * total


# ----------------------------------------------------------- chain algebra


def project(vec: dict[Mode, complex], projector: Projector) -> dict[Mode, complex]:
    """Restrict a coefficient vector to the resonant pair (``"P0"``), its
    complement (``"Q0"``), or pass it through (None)."""
    if projector is None:
        return dict(vec)
    if projector == "P0":
        return {m: c for m, c in vec.items() if m in RESONANT_MODES}
    if projector == "Q0":
        return {m: c for m, c in vec.items() if m not in RESONANT_MODES}
    raise ValueError(f"projector must be 'P0', 'Q0' or None, got {projector!r}")


def chain_apply(
    ops: Sequence[ChainOp],
    source: Mode,
    projector: Projector = None,
    *,
    mu: RationalLike = MU_STAR,
    omega_star: RationalLike = OMEGA_STAR,
) -> dict[Mode, complex]:
    """Coefficients of ``P[ops] f_source`` on the basis; ``ops[0]`` acts first."""
    if len(ops) == 0:
        raise ValueError("a resolvent chain needs at least one operator")
    mu_f = float(mu)
    out: dict[Mode, complex] = {}

    def walk(path: list[Mode], acc: complex, depth: int) -> None:
        if depth == len(ops):
            r = residue(path, mu, omega_star)
            if r != 0.0:
                final = path[-1]
                out[final] = out.get(final, 0j) + acc * r
            return
        ell, kappa = ops[depth]
        prev = path[-1]
        for sig in (1, -1):
            c = ent_coeff(ell, kappa, prev, sig, mu=mu_f)
            if c == 0:
                continue
            walk(path + [Mode(prev.j + kappa, sig)], acc * sig * c, depth + 1)

    walk([source], 1.0 + 0j, 0)
    return project(out, projector)


def chain_apply_vec(
    ops: Sequence[ChainOp],
    vec: dict[Mode, complex],
    projector: Projector = None,
    *,
    mu: RationalLike = MU_STAR,
    omega_star: RationalLike = OMEGA_STAR,
) -> dict[Mode, complex]:
    """Linear extension of `chain_apply` to a coefficient vector."""
    out: dict[Mode, complex] = {}
    for m, c in vec.items():
        if c == 0:
            continue
        for mm, cc in chain_apply(ops, m, mu=mu, omega_star=omega_star).items():
            out[mm] = out.get(mm, 0j) + c * cc
    return project(out, projector)


def op_bracket(
    op: ChainOp,
    vec: dict[Mode, complex],
    target: Mode,
    *,
    mu: float = 0.25,
) -> complex:
    """Pairing ( B_op applied to ``vec`` , f_target )."""
    ell, kappa = op
    total = 0j
    for m, c in vec.items():
        if m.j + kappa != target.j:
            continue
        total += c * ent_coeff(ell, kappa, m, target.sigma, mu=mu)
    return total


def op_bracket_right(
    op: ChainOp,
    source: Mode,
    vec: dict[Mode, complex],
    *,
    mu: float = 0.25,
) -> complex:
    """Pairing ( B_op f_source , ``vec`` ) — antilinear in the second slot."""
    ell, kappa = op
    total = 0j
    for m, c in vec.items():
        if source.j + kappa != m.j:
            continue
        total += c.conjugate() * ent_coeff(ell, kappa, source, m.sigma, mu=mu)
    return total


def jet_bracket(
    ell: JetIndex,
    vec: dict[Mode, complex],
    target: Mode,
    *,
    mu: float = 0.25,
) -> complex:
    """Like `op_bracket` for the full jet (kappa summed automatically)."""
    total = 0j
    for m, c in vec.items():
        total += c * ent_coeff(ell, target.j - m.j, m, target.sigma, mu=mu)
    return total


def jet_bracket_right(
    ell: JetIndex,
    source: Mode,
    vec: dict[Mode, complex],
    *,
    mu: float = 0.25,
) -> complex:
    """Like `op_bracket_right` for the full jet (kappa summed automatically)."""
    total = 0j
    for m, c in vec.items():
        total += c.conjugate() * ent_coeff(ell, m.j - source.j, source, m.sigma, mu=mu)
    return total


def chain_bracket(
    chain: Sequence[ChainOp],
    source: Mode,
    target: Mode,
    *,
    mu: RationalLike = MU_STAR,
    omega_star: RationalLike = OMEGA_STAR,
) -> complex:
    """Pairing ( B_last P[chain[:-1]] f_source , f_target ).

    ``chain`` is in application order; a length-1 chain degenerates to the
    bare coupling coefficient.  Returns exact 0 when the harmonics do not
    line up.
    """
    return projected_chain(chain, source, target, None, mu=mu, omega_star=omega_star)


def projected_chain(
    chain: Sequence[ChainOp],
    source: Mode,
    target: Mode,
    projector: Projector,
    *,
    mu: RationalLike = MU_STAR,
    omega_star: RationalLike = OMEGA_STAR,
) -> complex:
    """Pairing ( B_last Proj P[chain[:-1]] f_source , f_target )."""
    if len(chain) == 0:
        raise ValueError("chain must contain at least the outer operator")
    mu_f = float(mu)
    if len(chain) == 1:
        vec = project({source: 1.0 + 0j}, projector)
    else:
        vec = chain_apply(
            chain[:-1], source, projector, mu=mu, omega_star=omega_star
        )
    return op_bracket(chain[-1], vec, target, mu=mu_f)
