"""Radial Toeplitz spectra on the weighted Bergman space of the unit ball.

A bounded radial symbol phi(|z|^2) acts diagonally on the monomial basis of
the Bergman space over the unit ball in C^d; the eigenvalue at total degree m
is a Beta-type average of phi. This module works with the log-periodic family

    phi(t) = c + cos(omega * log(1 / (1 - t))),

for which the eigenvalue sequence has the closed form

    lambda_m = c + Re[ Gamma(1 - i omega) * Gamma(M+1) / Gamma(M+1 - i omega) ],

with M = m + d, oscillating with asymptotic amplitude |Gamma(1 - i omega)|,
while the Berezin transform oscillates with the strictly smaller amplitude
|beta_{d, omega}|, beta_{d, omega} = Gamma(1-i omega) Gamma(d+1+i omega) / Gamma(d+1).

Both quantities also have direct integral representations, implemented
independently of the closed forms so each route checks the other.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .quadrature import QuadResult, integrate, integrate_complex
from .specialfn import abs_alpha_sq, alpha_omega, beta_d, beta_omega, gamma_ratio, ln_gamma

# Eigenvalue quadrature: the substitution u = M (1 - t) concentrates the
# integral on u in (0, 80]; the discarded tail is below 2 e^{-40}.
_EIGEN_U_MAX = 80.0
_EIGEN_V_MAX = 45.0
# Berezin quadrature in v = -log(1 - t) runs to log(1/delta) + 40.
_BEREZIN_V_PAD = 40.0
# Phase-minimum radii: require delta = 1 - a^2 in [1e-14, 0.05]. Above the
# cap the asymptotic model has not settled; below the floor, 1 - a^2 is no
# longer resolvable in double precision.
_RADII_DELTA_CAP = 0.05
_RADII_DELTA_FLOOR = 1e-14
_SERIES_MAX_TERMS = 5_000_000
_TWO_53 = 2.0 ** 53


@dataclass(frozen=True)
class BergmanSymbol:
    """Radial symbol phi(t) = c + cos(omega log(1/(1-t))) on the ball in C^d."""

    c: float
    omega: float
    d: int = 1

    def __post_init__(self):
        if not math.isfinite(self.c):
            raise ValueError(f"c must be finite, got {self.c}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be positive and finite, got {self.omega}")
        if self.d != int(self.d) or self.d < 1:
            raise ValueError(f"d must be an integer >= 1, got {self.d}")


def beta_coefficient(sym: BergmanSymbol) -> complex:
    """beta_{d, omega} = Gamma(1 - i omega) Gamma(d+1+i omega) / Gamma(d+1).

    Reduces to beta_omega for d = 1 and to beta_d for omega = 1; the general
    combination is an extension of the unit-frequency constants (see
    is_extension) and is always cross-checked against quadrature before a
    certificate relies on it.
    """
    if sym.d == 1:
        return beta_omega(sym.omega)
    if sym.omega == 1.0:
        return beta_d(sym.d)
    return cmath.exp(
        ln_gamma(complex(1.0, -sym.omega))
        + ln_gamma(complex(sym.d + 1.0, sym.omega))
        - ln_gamma(complex(sym.d + 1.0, 0.0))
    )


def is_extension(sym: BergmanSymbol) -> bool:
    """True when (d, omega) lies outside the unit-frequency constants (d>1, omega!=1)."""
    return sym.d > 1 and sym.omega != 1.0


def eigenvalue_closed_form(m, sym: BergmanSymbol) -> float:
    """lambda_m from the Gamma-quotient closed form; exact up to ~1e-13.

    Accepts integer or floating m >= 0: beyond 2^53 individual integers are
    no longer representable, but the closed form remains meaningful and
    accurate, which is what the deep phase-minimum witnesses require.
    """
    if not m >= 0:
        raise ValueError(f"m must be >= 0, got {m}")
    mm = float(m) + sym.d
    ratio = gamma_ratio(complex(mm + 1.0, 0.0), complex(0.0, sym.omega))
    return sym.c + (alpha_omega(sym.omega) * ratio).real


def eigenvalue_quadrature(m: int, sym: BergmanSymbol, tol: float = 1e-10) -> QuadResult:
    """lambda_m by direct quadrature of the Beta-type average.

    Substituting u = M (1 - t), M = m + d, gives

        lambda_m = c + Re[ M^{i omega} * integral_0^M u^{-i omega}
                                          (1 - u/M)^{M-1} du ],

    concentrated on u in (0, 80]. The piece u in (0, 1] is integrated after
    the further substitution u = e^{-v}, which turns the endpoint oscillation
    of u^{-i omega} into the uniform phase e^{i omega v}; the remainder
    u in [1, min(80, M)] is integrated directly.
    """
    if m != int(m) or m < 0:
        raise ValueError(f"m must be an integer >= 0, got {m}")
    mm = float(int(m) + sym.d)
    if mm > _TWO_53:
        raise ValueError("quadrature path requires m + d <= 2^53; use eigenvalue_closed_form")
    om = sym.omega

    def inner(v: float) -> complex:
        # u = e^{-v}: u^{-i om} du -> e^{-(1 - i om) v} dv
        phase = cmath.exp(complex(-v, om * v))
        if mm == 1.0:
            return phase
        return phase * math.exp((mm - 1.0) * math.log1p(-math.exp(-v) / mm))

    res1 = integrate_complex(inner, (0.0, _EIGEN_V_MAX), tol=tol)
    total = res1.value
    err = res1.err_estimate + math.exp(-_EIGEN_V_MAX)
    evaluations = res1.evaluations
    converged = res1.converged

    if mm > 1.0:
        u_hi = min(_EIGEN_U_MAX, mm)

        def outer(u: float) -> complex:
            if u >= mm:
                return 0.0j
            return cmath.exp(complex((mm - 1.0) * math.log1p(-u / mm), -om * math.log(u)))

        res2 = integrate_complex(outer, (1.0, u_hi), tol=tol)
        total += res2.value
        err += res2.err_estimate
        evaluations += res2.evaluations
        converged = converged and res2.converged
        if mm > _EIGEN_U_MAX:
            err += 2.0 * math.exp(-_EIGEN_U_MAX / 2.0)

    front = cmath.exp(complex(0.0, om * math.log(mm)))
    return QuadResult(value=sym.c + (front * total).real, err_estimate=err,
                      evaluations=evaluations, converged=converged)


def eigenvalue_model(m, sym: BergmanSymbol) -> float:
    """Asymptotic model c + |alpha_omega| cos(omega log(m+d) + arg alpha_omega)."""
    aw = alpha_omega(sym.omega)
    return sym.c + math.sqrt(abs_alpha_sq(sym.omega)) * math.cos(
        sym.omega * math.log(float(m) + sym.d) + cmath.phase(aw)
    )


def berezin_quadrature(a: float, sym: BergmanSymbol, tol: float = 1e-10) -> QuadResult:
    """Berezin transform at radius a in [0, 1) by direct quadrature.

    Starting from

        btilde(a) = (1-a^2)^{d+1} * integral_0^1 t^{d-1} (d + a^2 t)
                     / (1 - a^2 t)^{d+2} * phi(t) dt,

    the substitution v = -log(1 - t) makes the symbol oscillation the uniform
    cosine cos(omega v) and compresses the effective support to
    v <= log(1/(1-a^2)) + 40. The weight is evaluated in log space (with
    1 - a^2 t = delta + a^2 e^{-v} formed cancellation-free), so deep radii
    with (1-a^2)^{d+1} far below the underflow threshold still work.
    """
    if not (0.0 <= a < 1.0):
        raise ValueError(f"a must lie in [0, 1), got {a}")
    a2 = a * a
    delta = 1.0 - a2
    log_delta = math.log(delta)
    v_max = -log_delta + _BEREZIN_V_PAD
    c = sym.c
    om = sym.omega
    d = sym.d

    def integrand(v: float) -> float:
        ev = math.exp(-v)
        t = -math.expm1(-v)
        if t <= 0.0:
            return 0.0
        log_weight = (d + 1.0) * log_delta - (d + 2.0) * math.log(delta + a2 * ev) - v
        if d != 1:
            log_weight += (d - 1.0) * math.log(t)
        return math.exp(log_weight) * (d + a2 * t) * (c + math.cos(om * v))

    res = integrate(integrand, 0.0, v_max, tol=tol)
    tail = (d + 1.0) * (abs(c) + 1.0) * math.exp(-_BEREZIN_V_PAD)
    return QuadResult(value=res.value, err_estimate=res.err_estimate + tail,
                      evaluations=res.evaluations, converged=res.converged)


def berezin_series(a: float, sym: BergmanSymbol, tol: float = 1e-10) -> QuadResult:
    """Berezin transform as a negative-binomial mixture of eigenvalues.

    The normalized reproducing kernel at radius a weights total degree m by

        w_m = binom(m + d, m) (1 - a^2)^{d+1} a^{2m},

    so btilde(a) = sum_m w_m lambda_m. Eigenvalues come from the closed form
    via the exact ratio recurrence I_{m} = I_{m-1} (m+d) / (m+d - i omega);
    weights are tracked in log space. Truncated once the cumulative weight
    reaches 1 - 1e-12; if that would take more than 5e6 terms (radii
    extremely close to 1) the call reports converged=False immediately —
    use berezin_quadrature there.
    """
    if not (0.0 <= a < 1.0):
        raise ValueError(f"a must lie in [0, 1), got {a}")
    a2 = a * a
    delta = 1.0 - a2
    d = sym.d
    om = sym.omega
    # Window size estimate: negative-binomial mean + 12 sigma.
    mean = (d + 1.0) * a2 / delta
    needed = mean + 12.0 * math.sqrt((d + 1.0) * a2) / delta + 1.0
    if needed > _SERIES_MAX_TERMS:
        return QuadResult(value=math.nan, err_estimate=math.inf,
                          evaluations=0, converged=False)
    aw = alpha_omega(om)
    ratio = gamma_ratio(complex(d + 1.0, 0.0), complex(0.0, om))
    osc = aw * ratio  # alpha_omega * Gamma(d+1) / Gamma(d+1 - i omega) at m = 0
    log_a2 = math.log(a2) if a2 > 0.0 else -math.inf
    log_w = (d + 1.0) * math.log(delta)
    total = 0.0
    weight_sum = 0.0
    m = 0
    while weight_sum < 1.0 - 1e-12 and m <= _SERIES_MAX_TERMS:
        w = math.exp(log_w)
        total += w * (sym.c + osc.real)
        weight_sum += w
        m += 1
        if a2 == 0.0:
            break
        log_w += log_a2 + math.log((m + d) / m)
        osc *= (m + d) / complex(m + d, -om)
    truncated = max(0.0, 1.0 - weight_sum)
    err = truncated * (abs(sym.c) + 1.0) + 1e-13
    return QuadResult(value=total, err_estimate=err, evaluations=m,
                      converged=weight_sum >= 1.0 - 1e-12)


def berezin_model(a: float, sym: BergmanSymbol) -> float:
    """Asymptotic model c + Re[beta_{d,omega} (1-a^2)^{-i omega}]."""
    if not (0.0 <= a < 1.0):
        raise ValueError(f"a must lie in [0, 1), got {a}")
    b = beta_coefficient(sym)
    log_delta = math.log(1.0 - a * a)
    return sym.c + abs(b) * math.cos(-sym.omega * log_delta + cmath.phase(b))


def phase_min_indices(sym: BergmanSymbol, count: int) -> list:
    """Degrees where the eigenvalue model cosine sits at -1.

    cos(omega log(m+d) + theta) = -1, theta = arg Gamma(1 - i omega), at

        n_k = floor(e^{((2k+1) pi - theta) / omega}) - d,   k = 0, 1, ...

    clipped to >= 0. Indices grow like e^{2 pi k / omega}; entries beyond
    2^53 are returned as floats (exact integers are no longer representable
    there) with a warning — only the closed-form eigenvalue path accepts
    them.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    theta = cmath.phase(alpha_omega(sym.omega))
    out = []
    warned = False
    for k in range(count):
        exponent = ((2 * k + 1) * math.pi - theta) / sym.omega
        x = math.exp(exponent)
        if x > _TWO_53:
            if not warned:
                warnings.warn(
                    "phase-minimum indices exceed 2^53; returning them as floats "
                    "(use eigenvalue_closed_form, which accepts real degrees)",
                    stacklevel=2,
                )
                warned = True
            out.append(max(0.0, x - sym.d))
        else:
            out.append(max(0, int(math.floor(x)) - sym.d))
    return out


def phase_min_radii(sym: BergmanSymbol, count: int) -> list[float]:
    """Radii where the Berezin model cosine sits at -1.

    cos(omega log(1/(1-a^2)) + phi) = -1, phi = arg beta_{d,omega}, at
    1 - a_k^2 = e^{-((2k+1) pi - phi) / omega}. Only radii with
    1 - a_k^2 in [1e-14, 0.05] are returned: shallower ones precede the
    asymptotic regime, deeper ones are not resolvable in double precision.
    The list may therefore hold fewer than `count` entries (possibly none
    for extreme omega).
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    phi = cmath.phase(beta_coefficient(sym))
    out: list[float] = []
    k = 0
    while len(out) < count:
        delta = math.exp(-((2 * k + 1) * math.pi - phi) / sym.omega)
        k += 1
        if delta > _RADII_DELTA_CAP:
            continue
        if delta < _RADII_DELTA_FLOOR:
            break
        out.append(math.sqrt(1.0 - delta))
    return out
