"""Closed-form Nielsen complexity of time-dependent TFD states.

A charged particle in a uniform magnetic field has Landau levels with
spacing set by the cyclotron frequency omega.  The thermofield double
built on that spectrum is Gaussian, so its covariance matrix, the
spectrum of the relative covariance matrix against a reference of
frequency omega_ref, the complexity, its rate, and the Lloyd bound can
all be written in closed form.  This module houses those closed forms
and their asymptotic expansions.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

LN6 = math.log(6.0)

__all__ = [
    "LN6",
    "PhysicalParams",
    "TfdParams",
    "CovarianceMatrix",
    "RelativeSpectrum",
    "LloydResult",
    "alpha_of",
    "partition_function",
    "internal_energy",
    "covariance_g",
    "relative_spectrum",
    "complexity",
    "complexity_rate",
    "high_T_rate_limit",
    "oscillation_amplitude",
    "asymptotic_complexity",
    "asymptotic_amplitude",
    "lloyd_check",
]


@dataclass(frozen=True)
class PhysicalParams:
    """Single source of truth for all evaluations.

    beta may be ``math.inf`` (zero temperature); everything else is
    strictly positive and finite.
    """

    hbar: float = 1.0
    mass: float = 1.0
    omega: float = 0.1
    omega_ref: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "mass", "omega", "omega_ref"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if not self.beta > 0.0:
            raise ValueError(f"beta must be positive (inf allowed), got {self.beta}")

    @property
    def zero_temperature(self) -> bool:
        return math.isinf(self.beta)

    @property
    def period(self) -> float:
        """Period of the complexity oscillations, pi/omega."""
        return math.pi / self.omega

    def with_(self, **kw) -> "PhysicalParams":
        return replace(self, **kw)


@dataclass(frozen=True)
class TfdParams:
    """Squeezing parameter of the TFD a-sector, tanh(alpha) = e^{-beta hbar omega/2}."""

    alpha: float
    cosh2a: float
    sinh2a: float


@dataclass(frozen=True)
class CovarianceMatrix:
    """Block-diagonal 8x8 covariance matrix, stored as its 2x2 blocks.

    The b-sector block appears twice in the full matrix; the symplectic
    part is the constant [[0, 1], [-1, 0]] in every block.
    """

    block_1p: np.ndarray
    block_1m: np.ndarray
    block_2: np.ndarray
    time: float

    @property
    def symplectic_block(self) -> np.ndarray:
        return np.array([[0.0, 1.0], [-1.0, 0.0]])

    def full(self) -> np.ndarray:
        """Assemble the 8x8 matrix."""
        out = np.zeros((8, 8))
        for i, blk in enumerate((self.block_1p, self.block_1m, self.block_2, self.block_2)):
            out[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = blk
        return out


@dataclass(frozen=True)
class RelativeSpectrum:
    """Eigenvalues e1..e8 of the relative covariance matrix at one instant."""

    a_plus: float
    a_minus: float
    e: tuple
    time: float


@dataclass(frozen=True)
class LloydResult:
    max_rate: float
    bound: float
    satisfied: bool
    argmax_t: float


def alpha_of(params: PhysicalParams) -> TfdParams:
    """Squeezing parameter and its hyperbolic doubles.

    cosh 2a and sinh 2a are computed as rational functions of
    x = e^{-beta hbar omega / 2}; going through artanh and back loses
    precision for beta hbar omega << 1.
    """
    if params.zero_temperature:
        return TfdParams(alpha=0.0, cosh2a=1.0, sinh2a=0.0)
    x = math.exp(-params.beta * params.hbar * params.omega / 2.0)
    alpha = 0.5 * math.log((1.0 + x) / (1.0 - x))
    denom = 1.0 - x * x
    return TfdParams(alpha=alpha, cosh2a=(1.0 + x * x) / denom, sinh2a=2.0 * x / denom)


def partition_function(params: PhysicalParams) -> float:
    """Thermal partition function, 1/(4 sinh(beta hbar omega / 2)).

    At beta = inf the limiting value 0 is returned with a warning.
    """
    if params.zero_temperature:
        warnings.warn("partition function at beta=inf is the limiting value 0", RuntimeWarning)
        return 0.0
    return 1.0 / (4.0 * math.sinh(params.beta * params.hbar * params.omega / 2.0))


def internal_energy(params: PhysicalParams) -> float:
    """Internal energy U = (hbar omega / 2) coth(beta hbar omega / 2)."""
    e0 = params.hbar * params.omega / 2.0
    if params.zero_temperature:
        return e0
    return e0 / math.tanh(params.beta * params.hbar * params.omega / 2.0)


def covariance_g(t: float, params: PhysicalParams) -> CovarianceMatrix:
    """Covariance matrix of the time-evolved TFD state."""
    tfd = alpha_of(params)
    mw = params.mass * params.omega
    c, s = math.cos(params.omega * t), math.sin(params.omega * t)
    blocks = []
    for sign in (+1.0, -1.0):
        diag_x = (tfd.cosh2a + sign * tfd.sinh2a * c) / mw
        diag_p = mw * (tfd.cosh2a - sign * tfd.sinh2a * c)
        off = -sign * tfd.sinh2a * s
        blocks.append(np.array([[diag_x, off], [off, diag_p]]))
    block_2 = np.array([[1.0 / (6.0 * mw), 0.0], [0.0, mw / 6.0]])
    return CovarianceMatrix(block_1p=blocks[0], block_1m=blocks[1], block_2=block_2, time=t)


def _a_pm(t: float, params: PhysicalParams, tfd: TfdParams | None = None):
    if tfd is None:
        tfd = alpha_of(params)
    w, wr = params.omega, params.omega_ref
    s_fr, d_fr = wr * wr + w * w, wr * wr - w * w
    c = math.cos(w * t)
    a_p = (s_fr * tfd.cosh2a + d_fr * tfd.sinh2a * c) / (2.0 * wr * w)
    a_m = (s_fr * tfd.cosh2a - d_fr * tfd.sinh2a * c) / (2.0 * wr * w)
    # A >= 1 analytically; clamp tiny negative excursions from roundoff
    return max(a_p, 1.0), max(a_m, 1.0)


def _acosh(a: float) -> float:
    # ln(A + sqrt(A^2 - 1)); the additive form is safe since A >= 1
    return math.log(a + math.sqrt((a - 1.0) * (a + 1.0)))


def relative_spectrum(t: float, params: PhysicalParams) -> RelativeSpectrum:
    """Eigenvalues of the relative covariance matrix G(t) G_R^{-1}.

    The small members of each reciprocal pair are computed as exact
    reciprocals of the large ones; A - sqrt(A^2-1) cancels
    catastrophically for large squeezing.
    """
    a_p, a_m = _a_pm(t, params)
    e2 = a_p + math.sqrt((a_p - 1.0) * (a_p + 1.0))
    e4 = a_m + math.sqrt((a_m - 1.0) * (a_m + 1.0))
    w, wr = params.omega, params.omega_ref
    e5 = wr / (6.0 * w)
    e6 = w / (6.0 * wr)
    return RelativeSpectrum(
        a_plus=a_p,
        a_minus=a_m,
        e=(1.0 / e2, e2, 1.0 / e4, e4, e5, e6, e5, e6),
        time=t,
    )


def complexity(t: float, params: PhysicalParams) -> float:
    """Nielsen complexity, half the Frobenius norm of ln(relative covariance).

    Equals sqrt(ln^2 6 + ln^2(omega_ref/omega)
    + (1/4) * sum of ln^2 over the four time-dependent eigenvalues),
    where the quarter-sum collapses to
    (arccosh^2 A_+ + arccosh^2 A_-) / 2.
    """
    a_p, a_m = _a_pm(t, params)
    u = math.log(params.omega_ref / params.omega)
    return math.sqrt(LN6 * LN6 + u * u + 0.5 * (_acosh(a_p) ** 2 + _acosh(a_m) ** 2))


def _acosh_over_sqrt(a: float) -> float:
    # arccosh(A)/sqrt(A^2-1), extended through the removable singularity at A=1
    u = a - 1.0
    if u < 1e-8:
        return 1.0 - u / 3.0
    return _acosh(a) / math.sqrt(u * (a + 1.0))


def complexity_rate(t: float, params: PhysicalParams) -> float:
    """Analytic time derivative of the complexity."""
    tfd = alpha_of(params)
    if tfd.sinh2a == 0.0:
        return 0.0
    w, wr = params.omega, params.omega_ref
    a_p, a_m = _a_pm(t, params, tfd)
    d_fr = wr * wr - w * w
    da = w * d_fr * tfd.sinh2a * math.sin(w * t) / (2.0 * wr * w)
    # dA+/dt = -da, dA-/dt = +da
    num = -_acosh_over_sqrt(a_p) * da + _acosh_over_sqrt(a_m) * da
    return num / (2.0 * complexity(t, params))


def high_T_rate_limit(t: float, omega: float, omega_ref: float) -> float:
    """Infinite-temperature limit of the complexity rate."""
    if omega <= 0.0 or omega_ref <= 0.0:
        raise ValueError("frequencies must be positive")
    s_fr = omega_ref**2 + omega**2
    d_fr = omega_ref**2 - omega**2
    num = 0.5 * omega * d_fr * d_fr * math.sin(2.0 * omega * t)
    den = s_fr * s_fr - d_fr * d_fr * math.cos(omega * t) ** 2
    return num / den


def oscillation_amplitude(params: PhysicalParams) -> float:
    """Amplitude of the complexity oscillations, C(T/2) - C(0)."""
    half = math.pi / (2.0 * params.omega)
    return complexity(half, params) - complexity(0.0, params)


def _bho(params: PhysicalParams) -> float:
    return params.beta * params.hbar * params.omega


def _warn_regime(condition: bool, regime: str, detail: str) -> None:
    if not condition:
        warnings.warn(f"parameters outside the {regime} regime ({detail})", RuntimeWarning)


def _log_ratio_factor(params: PhysicalParams) -> float:
    """(omega_ref^2+omega^2)/(omega_ref^2-omega^2) * ln(omega_ref/omega).

    Continuous limit 1 at omega_ref = omega.
    """
    w, wr = params.omega, params.omega_ref
    if w == wr:
        return 1.0
    return (wr * wr + w * w) / (wr * wr - w * w) * math.log(wr / w)


def asymptotic_complexity(regime: str, t: float, params: PhysicalParams) -> float:
    """Closed-form asymptotic expansions of the complexity.

    Regimes: low_T, high_T, equal_freq_low_T, equal_freq_high_T,
    high_freq, low_freq.  A regime mismatch warns but still evaluates.
    """
    w, wr = params.omega, params.omega_ref
    bho = _bho(params)
    u = math.log(wr / w)
    if regime == "low_T":
        _warn_regime(bho > 1.0, regime, "needs beta*hbar*omega >> 1")
        base = math.sqrt(LN6 * LN6 + 2.0 * u * u)
        if params.zero_temperature:
            return base
        c, s = math.cos(w * t), math.sin(w * t)
        return base + (2.0 * math.exp(-bho) / base) * (c * c + _log_ratio_factor(params) * s * s)
    if regime == "high_T":
        _warn_regime(bho < 1.0, regime, "needs beta*hbar*omega << 1")
        s_fr, d_fr = wr * wr + w * w, wr * wr - w * w
        root = math.sqrt(s_fr * s_fr - d_fr * d_fr * math.cos(w * t) ** 2)
        return math.log(1.0 / bho) + math.log(2.0 * root / (wr * w))
    if regime == "equal_freq_low_T":
        _warn_regime(bho > 1.0 and w == wr, regime, "needs omega_ref=omega, beta*hbar*omega >> 1")
        if params.zero_temperature:
            return LN6
        return LN6 + 2.0 * math.exp(-bho) / LN6
    if regime == "equal_freq_high_T":
        _warn_regime(bho < 1.0 and w == wr, regime, "needs omega_ref=omega, beta*hbar*omega << 1")
        lead = math.log(4.0 / bho)
        return lead + LN6 * LN6 / (2.0 * lead)
    if regime == "high_freq":
        delta = w / wr
        _warn_regime(delta > 1.0 and bho > 1.0, regime, "needs omega/omega_ref >> 1 at low T")
        ld = math.log(delta)
        return math.sqrt(2.0) * ld + LN6 * LN6 / (2.0 * math.sqrt(2.0) * ld)
    if regime == "low_freq":
        delta = w / wr
        _warn_regime(delta < 1.0 and bho < 1.0, regime, "needs omega/omega_ref << 1 at high T")
        c, s = math.cos(w * t), math.sin(w * t)
        inner = math.sqrt(s * s + 2.0 * delta * delta * (1.0 + c * c))
        return math.log(1.0 / (params.beta * params.hbar * delta * wr)) + math.log(2.0 * inner / delta)
    raise ValueError(f"unknown regime {regime!r}")


def asymptotic_amplitude(regime: str, params: PhysicalParams) -> float:
    """Asymptotic expansions of the oscillation amplitude.

    Regimes: low_T, high_T, high_freq.
    """
    w, wr = params.omega, params.omega_ref
    bho = _bho(params)
    u = math.log(wr / w)
    if regime == "low_T":
        _warn_regime(bho > 1.0, regime, "needs beta*hbar*omega >> 1")
        if params.zero_temperature:
            return 0.0
        base = math.sqrt(LN6 * LN6 + 2.0 * u * u)
        return (2.0 * math.exp(-bho) / base) * (_log_ratio_factor(params) - 1.0)
    if regime == "high_T":
        _warn_regime(bho < 1.0, regime, "needs beta*hbar*omega << 1")
        lead = math.log((wr * wr + w * w) / (2.0 * wr * w))
        return lead - u * u / (2.0 * math.log(1.0 / bho))
    if regime == "high_freq":
        delta = w / wr
        _warn_regime(delta > 1.0, regime, "needs omega/omega_ref >> 1")
        return math.sqrt(2.0) * math.exp(-params.beta * params.hbar * delta * wr) * (1.0 - 1.0 / math.log(delta))
    raise ValueError(f"unknown regime {regime!r}")


def _golden_max(f, lo: float, hi: float, tol: float = 1e-10) -> float:
    """Golden-section maximizer returning the argmax to tolerance tol."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def lloyd_check(params: PhysicalParams, t_samples: int = 257) -> LloydResult:
    """Compare the maximum complexity rate over one period with 2U/(pi hbar).

    The maximum is located on a uniform grid and polished by
    golden-section search around the grid argmax.
    """
    if t_samples < 8:
        raise ValueError("t_samples must be at least 8")
    bound = 2.0 * internal_energy(params) / (math.pi * params.hbar)
    period = params.period

    def abs_rate(t):
        return abs(complexity_rate(t, params))

    ts = np.linspace(0.0, period, t_samples)
    rates = np.array([abs_rate(t) for t in ts])
    i = int(np.argmax(rates))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, t_samples - 1)]
    t_star = _golden_max(abs_rate, lo, hi)
    max_rate = abs_rate(t_star)
    if rates[i] > max_rate:
        max_rate, t_star = rates[i], ts[i]
    return LloydResult(max_rate=max_rate, bound=bound, satisfied=max_rate <= bound, argmax_t=t_star)
