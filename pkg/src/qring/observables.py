"""Expectation values and standard deviations for states on the circle.

Trigonometric moments <cos(n phi)>, <sin(n phi)> are lag-n autocorrelations
of the Fourier coefficients and therefore exact for finite mode support;
angular momentum moments are diagonal sums over the effective exponents.
The window-dependent angle moments <phi>_beta, <phi^2>_beta are the one
place where true quadrature is needed (the integrand phi rho is not
periodic), done with composite Simpson on a 2^16-interval grid.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedStateError
from .state import DEFAULT_CONFIG, CircleState, Config, TWO_PI

__all__ = [
    "ObservableReport",
    "autocorrelation",
    "density_spectrum",
    "expect_xy",
    "expect_lz",
    "sigma_lz",
    "sigma_xy",
    "mean_resultant",
    "mean_angle",
    "sigma_total",
    "angle_moments_beta",
    "density_integral",
    "compute_report",
]

BETA_GRID_INTERVALS = 2**16


def _dense_amps(state: CircleState) -> np.ndarray:
    """Amplitudes on the contiguous mode range [m_min, m_max]."""
    span = state.mode_span
    dense = np.zeros(span + 1, dtype=complex)
    dense[state.modes - state.modes[0]] = state.amps
    return dense


def autocorrelation(state: CircleState, lag: int) -> complex:
    """sum_m conj(c_{m+lag}) c_m; equals <exp(i lag phi)>."""
    if lag == 0:
        return complex(np.sum(np.abs(state.amps) ** 2))
    dense = _dense_amps(state)
    k = abs(lag)
    if k >= dense.size:
        return 0j
    value = complex(np.vdot(dense[k:], dense[:-k]))
    return value if lag > 0 else value.conjugate()


def density_spectrum(state: CircleState):
    """Harmonics rho_k of the density for k = 0 .. mode span.

    rho(phi) = (1/2pi) sum_k rho_k exp(i k phi) with
    rho_k = sum_m c_{m+k} conj(c_m) and rho_{-k} = conj(rho_k).
    Returns (lags, rho) with lags = arange(span + 1).
    """
    dense = _dense_amps(state)
    full = np.correlate(dense, dense, mode="full")
    # np.correlate lags run from -(L-1) to L-1; rho_k sits at index L-1+k
    rho = full[dense.size - 1 :]
    return np.arange(rho.size), rho


def expect_xy(state: CircleState, n: int) -> tuple[float, float]:
    """(<cos(n phi)>, <sin(n phi)>) as real and imaginary parts of the
    lag-n coefficient autocorrelation."""
    if n < 1:
        raise ValueError("harmonic index n must be >= 1")
    value = autocorrelation(state, n)
    return value.real, value.imag


def expect_lz(state: CircleState) -> float:
    """<L_z> = hbar sum mu |c|^2; real by construction."""
    w = np.abs(state.amps) ** 2
    return state.hbar * float(np.sum(state.mu * w))


def sigma_lz(state: CircleState) -> float:
    """Standard deviation of L_z from the exact diagonal moments."""
    w = np.abs(state.amps) ** 2
    mu = state.mu
    m1 = float(np.sum(mu * w))
    m2 = float(np.sum(mu * mu * w))
    return state.hbar * math.sqrt(max(m2 - m1 * m1, 0.0))


def sigma_xy(state: CircleState, n: int) -> tuple[float, float]:
    """(sigma_Xn, sigma_Yn) via the exact double-angle reduction
    <Xn^2> = (1 + <X_{2n}>)/2, <Yn^2> = (1 - <X_{2n}>)/2."""
    ex, ey = expect_xy(state, n)
    x2n, _ = expect_xy(state, 2 * n)
    var_x = 0.5 * (1.0 + x2n) - ex * ex
    var_y = 0.5 * (1.0 - x2n) - ey * ey
    return math.sqrt(max(var_x, 0.0)), math.sqrt(max(var_y, 0.0))


def mean_resultant(state: CircleState, n: int) -> float:
    """R_n = |<exp(i n phi)>|, in [0, 1]."""
    return abs(autocorrelation(state, n))


def mean_angle(state: CircleState,
               config: Config = DEFAULT_CONFIG) -> float | None:
    """Mean direction in (-pi, pi], or None when R_1 < cmp_tol.

    Defined through <X> = R cos<phi>, <Y> = R sin<phi>; with no first
    harmonic anisotropy there is no preferred direction.
    """
    ex, ey = expect_xy(state, 1)
    if math.hypot(ex, ey) < config.cmp_tol:
        return None
    phi = math.atan2(ey, ex)
    if phi <= -math.pi:
        phi = math.pi
    return phi


def sigma_total(state: CircleState, n: int,
                config: Config = DEFAULT_CONFIG) -> float:
    """Total spread sigma_n = (1/n) sqrt(1 - R_n^2) / R_n.

    Returns ``math.inf`` when R_n is numerically zero (below cmp_tol);
    the infinite value is meaningful and propagates through the total
    uncertainty check.
    """
    if n < 1:
        raise ValueError("harmonic index n must be >= 1")
    r = mean_resultant(state, n)
    if r < config.cmp_tol:
        return math.inf
    return math.sqrt(max(1.0 - r * r, 0.0)) / (n * r)


def _density_on_window(state: CircleState, beta: float, intervals: int):
    """Density at phi_j = beta + 2 pi j / intervals, j = 0..intervals."""
    lags, rho = density_spectrum(state)
    if 2 * lags[-1] + 1 >= intervals:
        raise ValueError("window grid too coarse for this mode span")
    spectrum = np.zeros(intervals, dtype=complex)
    shifted = rho * np.exp(1j * lags * beta)
    spectrum[lags] = shifted
    spectrum[-lags[1:]] = np.conj(shifted[1:])
    values = np.fft.ifft(spectrum).real * (intervals / TWO_PI)
    return np.append(values, values[0])


def _simpson(values: np.ndarray, h: float) -> float:
    if values.size % 2 == 0:
        raise ValueError("Simpson rule needs an odd node count")
    acc = values[0] + values[-1] + 4.0 * values[1:-1:2].sum() \
        + 2.0 * values[2:-1:2].sum()
    return float(acc * h / 3.0)


def angle_moments_beta(state: CircleState, beta: float,
                       config: Config = DEFAULT_CONFIG,
                       intervals: int = BETA_GRID_INTERVALS):
    """Window moments (<phi>_beta, <phi^2>_beta, sigma_phi^beta).

    Integrates phi rho and phi^2 rho over [beta, beta + 2pi] with
    composite Simpson; the window start beta is exactly the integration
    boundary whose influence these moments exhibit.  Only strictly
    periodic states are supported.
    """
    if not math.isfinite(beta):
        raise ValueError("beta must be finite")
    if not state.is_periodic:
        raise UnsupportedStateError(
            "window angle moments need a strictly periodic state")
    h = TWO_PI / intervals
    phi = beta + h * np.arange(intervals + 1)
    dens = _density_on_window(state, beta, intervals)
    m1 = _simpson(phi * dens, h)
    m2 = _simpson(phi * phi * dens, h)
    sigma = math.sqrt(max(m2 - m1 * m1, 0.0))
    return m1, m2, sigma


def density_integral(state: CircleState, a: float, b: float) -> float:
    """int_a^b rho(phi) dphi from the exact harmonic antiderivative."""
    lags, rho = density_spectrum(state)
    total = (b - a) / TWO_PI  # rho_0 = 1 contribution
    k = lags[1:]
    if k.size:
        terms = rho[1:] * (np.exp(1j * k * b) - np.exp(1j * k * a)) / (1j * k)
        total += 2.0 * terms.real.sum() / TWO_PI
    return float(total)


@dataclass(frozen=True)
class ObservableReport:
    """All scalar observables of one state at one harmonic index n."""

    n: int
    ex: float
    ey: float
    r_n: float
    mean_phi: float | None
    sigma_x: float
    sigma_y: float
    sigma_lz: float
    sigma_tilde: float
    sigma_n: float


def compute_report(state: CircleState, n: int,
                   config: Config = DEFAULT_CONFIG) -> ObservableReport:
    """Evaluate every report field for harmonic index n."""
    ex, ey = expect_xy(state, n)
    sx, sy = sigma_xy(state, n)
    return ObservableReport(
        n=n,
        ex=ex,
        ey=ey,
        r_n=mean_resultant(state, n),
        mean_phi=mean_angle(state, config),
        sigma_x=sx,
        sigma_y=sy,
        sigma_lz=sigma_lz(state),
        sigma_tilde=math.sqrt(sx * sx + sy * sy),
        sigma_n=sigma_total(state, n, config),
    )
