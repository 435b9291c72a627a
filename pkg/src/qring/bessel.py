"""Modified Bessel functions of the first kind, orders 0 and 1.

Self-contained evaluation of I0, I1, their ratio I1/I0, and two derived
spread functions used by the circular uncertainty checks:

* ``f_alpha(x) = sqrt(x * (I0/I1 - I1/I0))`` -- the factor by which the
  total-uncertainty product of a von Mises profile exceeds its lower bound.
* ``h_alpha(x) = x * r * (1 - r/x - r**2)`` with ``r = I1/I0`` -- the gap of
  the conjugate-axis bound on the same profile.

Evaluation policy: ascending power series below ``series_cutoff``,
exponentially scaled asymptotic series above it.  Unscaled values overflow a
float64 near x = 713; ``i0``/``i1`` raise ``OverflowError`` beyond
``OVERFLOW_THRESHOLD`` while the scaled variants stay finite for any float.
"""

import math
from dataclasses import dataclass

__all__ = [
    "BesselConfig",
    "DEFAULT_BESSEL_CONFIG",
    "OVERFLOW_THRESHOLD",
    "i0",
    "i1",
    "i0_scaled",
    "i1_scaled",
    "ratio",
    "f_alpha",
    "h_alpha",
]

# exp(x) overflows float64 at x ~ 709.78; keep a small safety margin
OVERFLOW_THRESHOLD = 700.0


@dataclass(frozen=True)
class BesselConfig:
    """Evaluation policy for the I0/I1 family.

    Parameters
    ----------
    series_cutoff : float
        Argument magnitude above which the scaled asymptotic expansion is
        used instead of the ascending power series.
    term_tolerance : float
        Relative truncation tolerance for both series.
    """

    series_cutoff: float = 15.0
    term_tolerance: float = 1e-16

    def __post_init__(self):
        if not self.series_cutoff > 0:
            raise ValueError("series_cutoff must be positive")
        if not 0 < self.term_tolerance <= 1e-6:
            raise ValueError("term_tolerance must lie in (0, 1e-6]")


DEFAULT_BESSEL_CONFIG = BesselConfig()

_MAX_TERMS = 500


def _series(nu: int, x: float, tol: float) -> float:
    """Ascending series sum_k (x/2)^(2k+nu) / (k! (k+nu)!), nu in {0, 1}.

    All terms are positive, so no cancellation occurs; terms are built
    iteratively to avoid overflowing intermediates.
    """
    q = 0.25 * x * x
    term = 1.0 if nu == 0 else 0.5 * abs(x)
    total = term
    for k in range(1, _MAX_TERMS):
        term *= q / (k * (k + nu))
        total += term
        if term < tol * total:
            break
    return total


# Coefficient products (mu - 1)(mu - 9)... with mu = 4 nu^2 enter the
# asymptotic expansion I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k c_k(nu) / x^k.
def _asymptotic_scaled(nu: int, x: float, tol: float) -> float:
    """e^(-x) I_nu(x) for large positive x via the asymptotic expansion."""
    mu = 4 * nu * nu
    total = 1.0
    term = 1.0
    for k in range(1, _MAX_TERMS):
        factor = -(mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(factor) >= 1.0:
            break  # divergent tail reached; stop at the smallest term
        term *= factor
        total += term
        if abs(term) < tol * abs(total):
            break
    return total / math.sqrt(2.0 * math.pi * x)


def _eval(nu: int, x: float, config: BesselConfig, scaled: bool) -> float:
    ax = abs(x)
    if ax <= config.series_cutoff:
        value = _series(nu, x, config.term_tolerance)
        return value * math.exp(-ax) if scaled else value
    value = _asymptotic_scaled(nu, ax, config.term_tolerance)
    if not scaled:
        if ax > OVERFLOW_THRESHOLD:
            raise OverflowError(
                f"I{nu}({x!r}) overflows float64; use the scaled variant "
                f"for |x| > {OVERFLOW_THRESHOLD}"
            )
        value *= math.exp(ax)
    return value


def i0(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """Modified Bessel function I0(x).

    Even in x, with I0(0) = 1 and I0(x) >= 1 everywhere.  Raises
    ``OverflowError`` for |x| > OVERFLOW_THRESHOLD; use ``i0_scaled`` there.
    """
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    return _eval(0, x, config, scaled=False)


def i1(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """Modified Bessel function I1(x) = dI0/dx.  Odd in x."""
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    value = _eval(1, x, config, scaled=False)
    return math.copysign(value, x) if x != 0 else 0.0


def i0_scaled(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """exp(-|x|) I0(x); finite for every finite x."""
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    return _eval(0, x, config, scaled=True)


def i1_scaled(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """exp(-|x|) I1(x); finite for every finite x."""
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    value = _eval(1, x, config, scaled=True)
    return math.copysign(value, x) if x != 0 else 0.0


def ratio(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """I1(x)/I0(x), computed overflow-free for any finite x.

    Odd in x, strictly increasing, with |ratio(x)| < 1.  Large arguments use
    the scaled forms so the exponential factor cancels analytically.
    """
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    if x == 0.0:
        return 0.0
    return i1_scaled(x, config) / i0_scaled(x, config)


def f_alpha(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """Total-uncertainty factor sqrt(x (I0/I1 - I1/I0)).

    Even function decreasing from sqrt(2) at x = 0 toward 1 as |x| grows;
    the x = 0 value is the analytic limit of the 0/0 form.
    """
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    if x == 0.0:
        return math.sqrt(2.0)
    r = ratio(x, config)
    return math.sqrt(x * (1.0 - r * r) / r)


def h_alpha(x: float, config: BesselConfig = DEFAULT_BESSEL_CONFIG) -> float:
    """Conjugate-bound gap x * r * (1 - r/x - r^2) with r = I1(x)/I0(x).

    Even, zero only at x = 0 (by limit; h ~ x^2/4 near zero, ~ 1/(2x) for
    large x), and strictly positive elsewhere.
    """
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    if x == 0.0:
        return 0.0
    r = ratio(x, config)
    return x * r * (1.0 - r / x - r * r)
