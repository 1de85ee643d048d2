"""Truncated Fourier eigenvalue oracle for the linearized water-wave problem.

Independent cross-check of the closed-form isola: discretize the linearized
operator at Bloch exponent mu on the exponential basis e^{ijx}, j = -N..N,
truncate, and take eigenvalues of the resulting dense matrix.  Nothing from
the reduced-jet machinery enters here except the amplitude expansion of the
Stokes profiles themselves.

In the two-component frame the operator reads

    [ (d/dx + i*mu) o (1 + p_eps)      |D + mu|        ]
    [ -(1 + a_eps)                     (1 + p_eps) o (d/dx + i*mu) ]

so the (j', j) block carries the exponential Fourier coefficients of the
profiles at wavenumber j' - j (the cosine coefficients halved), and at
eps = 0 the spectrum is exactly {i*(j + mu -+ sqrt|j + mu|)}.

The discretized matrix M satisfies S M S = -conj(M) with S = diag(+1) on the
first component block and diag(-1) on the second, entry for entry; hence the
spectrum is symmetric under lambda -> -conj(lambda) up to solver noise, and
the two eigenvalues tracked near i*omega* = 0.75i sum to (nearly) a purely
imaginary number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg
from scipy.optimize import brentq, minimize_scalar

from .stokes import MAX_ORDER, a_coeff, p_coeff
from .jets import assemble_reduced_jet
from .instability import critical_curves

__all__ = [
    "DiscretizedOperator",
    "SpectrumSample",
    "SpectrumPoint",
    "ConvergenceRow",
    "IsolaMeasurement",
    "TrackingFailure",
    "build",
    "spectrum",
    "trace_isola",
    "convergence_check",
    "measure_isola",
]

DEFAULT_N = 32
DEFAULT_TRACKING_RADIUS = 0.2


class TrackingFailure(RuntimeError):
    """Fewer than two eigenvalues found in the tracking disk."""


@dataclass(frozen=True)
class DiscretizedOperator:
    """Dense truncation of the linearized operator at fixed (mu, eps)."""

    mu: float
    eps: float
    N: int
    stokes_order: int
    matrix: np.ndarray


def _exp_coeffs(which: str, eps: float, order: int) -> dict[int, float]:
    """Exponential Fourier coefficients of a profile through ``eps**order``:
    coefficient of e^{i*kappa*x} is half the cosine-series coefficient,
    uniformly in kappa (the constant term is stored halved in the tables)."""
    table = p_coeff if which == "p" else a_coeff
    out: dict[int, float] = {}
    for n in range(1, order + 1):
        scale = 0.5 * eps**n
        for kappa in range(-n, n + 1):
            c = table(n, kappa)
            if c != 0:
                out[kappa] = out.get(kappa, 0.0) + scale * float(c)
    return out


def build(
    mu: float,
    eps: float,
    N: int = DEFAULT_N,
    stokes_order: int = MAX_ORDER,
) -> DiscretizedOperator:
    """Assemble the dense 2(2N+1) x 2(2N+1) truncation.

    Harmonics run j = -N..N; rows/columns 0..2N hold the first component,
    2N+1..4N+1 the second.  ``N`` below 8 would foul the tracking window
    and is rejected; ``stokes_order`` is the truncation order of the
    profile expansion, 0..4.
    """
    if N < 8:
        raise ValueError(f"N must be at least 8, got {N}")
    if not 0 <= stokes_order <= MAX_ORDER:
        raise ValueError(f"stokes_order must be in 0..{MAX_ORDER}, got {stokes_order}")
    if eps < 0:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    dim = 2 * N + 1
    harmonics = np.arange(-N, N + 1, dtype=float)
    d = harmonics + mu

    p_toeplitz = np.zeros((dim, dim))
    a_toeplitz = np.zeros((dim, dim))
    for kappa, c in sorted(_exp_coeffs("p", eps, stokes_order).items()):
        p_toeplitz += c * np.eye(dim, k=-kappa)
    for kappa, c in sorted(_exp_coeffs("a", eps, stokes_order).items()):
        a_toeplitz += c * np.eye(dim, k=-kappa)

    eye = np.eye(dim)
    m00 = 1j * (d[:, None] * (eye + p_toeplitz))
    m01 = np.diag(np.abs(d)).astype(complex)
    m10 = -(eye + a_toeplitz).astype(complex)
    m11 = 1j * ((eye + p_toeplitz) * d[None, :])

    matrix = np.block([[m00, m01], [m10, m11]])
    return DiscretizedOperator(mu=mu, eps=eps, N=N, stokes_order=stokes_order, matrix=matrix)


@dataclass(frozen=True)
class SpectrumSample:
    """Eigenvalues of one truncation, with the collision pair singled out.

    ``re_max`` is the largest real part over the tracked pair when tracking
    succeeded, else over the whole spectrum.
    """

    eigenvalues: np.ndarray
    tracked_pair: Optional[tuple[complex, complex]]
    re_max: float


def _pick_pair(
    eigs: np.ndarray, center: complex, radius: float
) -> tuple[complex, complex]:
    near = eigs[np.abs(eigs - center) <= radius]
    if near.size < 2:
        raise TrackingFailure(
            f"{near.size} eigenvalue(s) within {radius} of {center}; need 2"
        )
    if near.size > 2:
        # prefer the unstable pair; fall back to proximity, then Im for ties
        order = np.lexsort(
            (near.imag, np.abs(near - center), -np.abs(near.real))
        )
        near = near[order[:2]]
    z0, z1 = near.tolist()
    # order by real part when the pair is split, by imaginary part when it
    # is (numerically) purely imaginary, so the labels are stable
    if abs(z0.real - z1.real) > 1e-12:
        lp, lm = (z0, z1) if z0.real > z1.real else (z1, z0)
    else:
        lp, lm = (z0, z1) if z0.imag >= z1.imag else (z1, z0)
    return lp, lm


def spectrum(
    op: DiscretizedOperator,
    center: complex = 0.75j,
    radius: float = DEFAULT_TRACKING_RADIUS,
) -> SpectrumSample:
    """Full spectrum of ``op`` plus the pair tracked near ``center``.

    Raises `TrackingFailure` when fewer than two eigenvalues lie in the
    tracking disk; with more than two, the two with largest |Re| (then
    closest to center) are taken.
    """
    eigs = scipy.linalg.eigvals(op.matrix)
    pair = _pick_pair(eigs, center, radius)
    re_max = max(pair[0].real, pair[1].real)
    return SpectrumSample(eigenvalues=eigs, tracked_pair=pair, re_max=re_max)


@dataclass(frozen=True)
class SpectrumPoint:
    """One mu-sample of an isola trace; ``error`` is set when tracking failed."""

    mu: float
    lambda_plus: Optional[complex]
    lambda_minus: Optional[complex]
    re_max: Optional[float]
    error: Optional[str] = None


def trace_isola(
    eps: float,
    mu_grid: Sequence[float],
    N: int = DEFAULT_N,
    stokes_order: int = MAX_ORDER,
    radius: float = DEFAULT_TRACKING_RADIUS,
) -> list[SpectrumPoint]:
    """Tracked eigenvalue pair across a grid of Floquet exponents.

    Per-sample tracking failures are recorded in the output rather than
    raised, so one bad sample cannot kill a sweep.
    """
    points: list[SpectrumPoint] = []
    for mu in mu_grid:
        try:
            sample = spectrum(build(mu, eps, N, stokes_order), radius=radius)
            lp, lm = sample.tracked_pair
            points.append(SpectrumPoint(float(mu), lp, lm, sample.re_max))
        except TrackingFailure as exc:
            points.append(SpectrumPoint(float(mu), None, None, None, error=str(exc)))
    return points


@dataclass(frozen=True)
class ConvergenceRow:
    """One truncation size in a refinement study; ``delta`` is the absolute
    change of the tracked pair against the previous row (None for the first)."""

    N: int
    lambda_plus: complex
    lambda_minus: complex
    delta: Optional[float]


def convergence_check(
    mu: float,
    eps: float,
    N_list: Sequence[int],
    stokes_order: int = MAX_ORDER,
) -> list[ConvergenceRow]:
    """Cauchy-difference table of the tracked pair under N-refinement."""
    rows: list[ConvergenceRow] = []
    prev: Optional[tuple[complex, complex]] = None
    for n in N_list:
        sample = spectrum(build(mu, eps, int(n), stokes_order))
        lp, lm = sample.tracked_pair
        delta = None
        if prev is not None:
            delta = max(abs(lp - prev[0]), abs(lm - prev[1]))
        rows.append(ConvergenceRow(int(n), lp, lm, delta))
        prev = (lp, lm)
    return rows


@dataclass(frozen=True)
class IsolaMeasurement:
    """Isola geometry extracted from the truncated eigenvalue problem alone."""

    eps: float
    N: int
    mu_at_max: float
    re_max: float
    im_center: float
    mu_left: float
    mu_right: float

    @property
    def mu_width(self) -> float:
        return self.mu_right - self.mu_left


def _pair_gap_squared(mu: float, eps: float, N: int, stokes_order: int) -> tuple[float, float]:
    """(lambda+ - lambda-)^2 of the tracked pair (real up to solver noise),
    and the midpoint's imaginary part.  Positive inside the isola, negative
    outside, with a single interior maximum."""
    sample = spectrum(build(mu, eps, N, stokes_order))
    lp, lm = sample.tracked_pair
    gap2 = (lp - lm) ** 2
    return gap2.real, 0.5 * (lp + lm).imag


def measure_isola(
    eps: float,
    N: int = DEFAULT_N,
    stokes_order: int = MAX_ORDER,
    window_scale: float = 8.0,
) -> IsolaMeasurement:
    """Locate and measure the isola near mu = 1/4 without the closed form.

    The only theory input is the search window: mu0(eps) +- window_scale*eps^3,
    generous by orders of magnitude against the O(eps^4) isola width but well
    clear of neighboring collisions.  Inside it, the squared pair gap is
    maximized (bounded scalar minimization), giving the peak growth rate
    re_max = sqrt(max gap^2)/2; the two sign changes bracket the isola's
    mu-extent and are pinned by bisection.

    Raises `TrackingFailure` if the pair cannot be followed, ValueError if
    the isola is not resolved in the window (max gap^2 <= 0).
    """
    jet = assemble_reduced_jet()
    mu0 = float(critical_curves(jet).mu0(eps))
    half = window_scale * eps**3
    lo, hi = mu0 - half, mu0 + half

    def negative_gap2(mu: float) -> float:
        return -_pair_gap_squared(mu, eps, N, stokes_order)[0]

    res = minimize_scalar(
        negative_gap2, bounds=(lo, hi), method="bounded", options={"xatol": 1e-13}
    )
    mu_at_max = float(res.x)
    gap2_max, im_center = _pair_gap_squared(mu_at_max, eps, N, stokes_order)
    if gap2_max <= 0:
        raise ValueError(
            f"no isola resolved for eps={eps}, N={N}: max pair gap^2 = {gap2_max:.3e}"
        )
    re_max = 0.5 * math.sqrt(gap2_max)

    def gap2(mu: float) -> float:
        return _pair_gap_squared(mu, eps, N, stokes_order)[0]

    if gap2(lo) >= 0 or gap2(hi) >= 0:
        raise ValueError(
            f"window [{lo}, {hi}] does not bracket the isola for eps={eps}"
        )
    mu_left = float(brentq(gap2, lo, mu_at_max, xtol=1e-16, rtol=8.9e-16))
    mu_right = float(brentq(gap2, mu_at_max, hi, xtol=1e-16, rtol=8.9e-16))
    return IsolaMeasurement(
        eps=eps,
        N=N,
        mu_at_max=mu_at_max,
        re_max=re_max,
        im_center=im_center,
        mu_left=mu_left,
        mu_right=mu_right,
    )
