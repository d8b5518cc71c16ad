"""Uncertainty-principle evaluators for the offset transform.

Covers the Heisenberg-Weyl spread product with its covariance correction,
Hardy decay-envelope fitting, the Beurling diagnostic integral, Pitt's
weighted inequality with its Gamma-function constants, and the logarithmic
inequality obtained from Pitt at alpha -> 0.  The Pitt and logarithmic
checks are stated for axes lam=i, mu=j and enforce them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import ComponentQuartet, QField, partial_derivative
from .olct import (
    QolctPlan,
    _signal_chirp,
    analysis_quartet,
    output_in_scaled_coords,
    qolct_forward,
)
from .quat import UNIT_I, UNIT_J, qnorm


# ---------------------------------------------------------------------------
# Gamma and digamma.

_LANCZOS_G = 7.0
_LANCZOS_COEFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_{2n}/(2n) for the asymptotic digamma tail
_DIGAMMA_TAIL = (1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
                 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0)


def gamma_fn(x: float) -> float:
    """Gamma function via the Lanczos approximation (relative error < 1e-12)."""
    if x <= 0.0:
        raise ValueError("gamma_fn requires x > 0")
    if x < 0.5:
        # reflection keeps the approximation in its accurate range
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    x -= 1.0
    acc = _LANCZOS_COEFS[0]
    for i, c in enumerate(_LANCZOS_COEFS[1:], start=1):
        acc += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) by recurrence into the asymptotic regime."""
    if x <= 0.0:
        raise ValueError("digamma requires x > 0")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for coef in _DIGAMMA_TAIL:
        tail += coef * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


#: constant of the logarithmic inequality: ln 2 + psi(1/2) = -gamma - ln 2
LOG_UP_CONSTANT = math.log(2.0) + digamma(0.5)


@dataclass(frozen=True)
class PittConstants:
    alpha: float
    C: float
    D: float


def pitt_constants(alpha: float) -> PittConstants:
    """C_alpha = (4 pi^2 / 2^alpha) [Gamma((2-alpha)/4)/Gamma((2+alpha)/4)]^2."""
    if not 0.0 <= alpha < 2.0:
        raise ValueError("alpha must lie in [0, 2)")
    ratio = gamma_fn((2.0 - alpha) / 4.0) / gamma_fn((2.0 + alpha) / 4.0)
    c = 4.0 * math.pi ** 2 / 2.0 ** alpha * ratio ** 2
    return PittConstants(alpha, c, c / (4.0 * math.pi ** 2))


# ---------------------------------------------------------------------------
# Shared quadrature helpers.

def _weighted_energy(values_sq: np.ndarray, weights: np.ndarray, cell: float) -> float:
    return float(np.sum(values_sq * weights)) * cell


def _signal_energy(f: QField) -> float:
    return float(np.sum(f.samples * f.samples)) * f.grid.cell_area


def _require_ij(plan: QolctPlan, what: str):
    if plan.lam != UNIT_I or plan.mu != UNIT_J:
        raise ValueError(f"{what} is stated for lam=i, mu=j")


# ---------------------------------------------------------------------------
# Heisenberg-Weyl.

@dataclass(frozen=True)
class HeisenbergReport:
    axis: int
    spatial_spread: float
    spectral_spread: float
    base_bound: float
    cov: float
    lhs: float
    rhs: float
    gap: float


def heisenberg_report(f: QField, plan: QolctPlan, axis: int) -> HeisenbergReport:
    """Spread product versus (1/16 pi^2)|f|^4 + COV^2.

    The covariance uses the unit-phase field w = g/|g| of the chirped signal
    (the u-dependent kernel factors are constant unit quaternions and drop
    out of |t_k d/dt_k w|); w is zeroed where |g| underflows.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    tk = f.grid.axis_coords(axis)
    tk2 = tk[:, None] ** 2 if axis == 1 else tk[None, :] ** 2
    e2 = np.sum(f.samples * f.samples, axis=-1)
    spatial = _weighted_energy(e2, tk2, f.grid.cell_area)

    quartet = analysis_quartet(f, plan)
    og = plan.output_grid
    bk = plan.A1.b if axis == 1 else plan.A2.b
    xk = og.axis_coords(axis) / (2.0 * math.pi * bk)
    xk2 = xk[:, None] ** 2 if axis == 1 else xk[None, :] ** 2
    spectral = _weighted_energy(quartet.norm_field() ** 2, xk2, og.cell_area)

    g = _signal_chirp(f, plan.A1, plan.A2, plan.lam, plan.mu, +1.0)
    gmod = g.modulus()
    floor = 1e-12 * float(gmod.max())
    live = gmod > floor
    w = QField(f.grid, np.where(live[..., None],
                                g.samples / np.where(live, gmod, 1.0)[..., None],
                                0.0))
    dw = partial_derivative(w, axis)
    tk_abs = np.abs(tk).reshape((-1, 1) if axis == 1 else (1, -1))
    cov = (float(np.sum(e2 * tk_abs * qnorm(dw.samples)))
           * f.grid.cell_area / (2.0 * math.pi))

    energy = _signal_energy(f)
    base = energy ** 2 / (16.0 * math.pi ** 2)
    lhs = spatial * spectral
    rhs = base + cov ** 2
    return HeisenbergReport(axis, spatial, spectral, base, cov, lhs, rhs, lhs - rhs)


# ---------------------------------------------------------------------------
# Hardy.

@dataclass(frozen=True)
class EnvelopeFit:
    alpha: float
    amplitude: float
    residual: float
    n_samples: int


def hardy_envelope_fit(g: QField, floor_rel: float = 1e-6) -> EnvelopeFit:
    """Least-squares fit of log|g(t)|_Q against log(C) - alpha |t|^2.

    Only samples with modulus above ``floor_rel * max`` enter the fit.
    """
    mod = g.modulus()
    peak = float(mod.max())
    if peak == 0.0:
        raise ValueError("cannot fit an envelope to the zero field")
    mask = mod > floor_rel * peak
    if int(mask.sum()) < 8:
        raise ValueError("too few samples above the fitting floor")
    t1, t2 = g.grid.meshgrid()
    r2 = (t1 ** 2 + t2 ** 2)[mask]
    y = np.log(mod[mask])
    design = np.stack([np.ones_like(r2), -r2], axis=1)
    coef, _, _, _ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - design @ coef
    rms = float(np.sqrt(np.mean(resid ** 2)))
    return EnvelopeFit(float(coef[1]), float(math.exp(coef[0])), rms, int(mask.sum()))


@dataclass(frozen=True)
class HardyReport:
    alpha_hat: float
    beta_hat: float
    product: float
    signal_fit: EnvelopeFit
    transform_fit: EnvelopeFit


def hardy_report(f: QField, plan: QolctPlan) -> HardyReport:
    """Fit Gaussian envelopes to |f(t)| and to |O{f}(b1 u1, b2 u2)|.

    The transform-side fit runs over the rescaled coordinates v = u/b, on
    which Hardy's critical case pins alpha*beta = 1/4.
    """
    sig = hardy_envelope_fit(f)
    F = qolct_forward(f, plan)
    scaled = output_in_scaled_coords(F, plan)
    trans = hardy_envelope_fit(scaled)
    return HardyReport(sig.alpha, trans.alpha, sig.alpha * trans.alpha, sig, trans)


# ---------------------------------------------------------------------------
# Beurling diagnostic.

def beurling_integral(f: QField, F_quartet: ComponentQuartet, d: float,
                      truncation: float, _block: int = 512) -> float:
    """Truncated double integral of |f(t)| ||F(v)|| e^{|t||v|} / (1+|t|+|v|)^d.

    ``F_quartet`` must already be labeled in the rescaled coordinates
    v = u/b (see ``output_in_scaled_coords``).  Purely diagnostic: compare
    truncation radii to read off the growth trend; no pass/fail semantics.
    """
    if d < 0.0:
        raise ValueError("d must be nonnegative")
    t1, t2 = f.grid.meshgrid()
    rt = np.sqrt(t1 ** 2 + t2 ** 2).ravel()
    ft = f.modulus().ravel()
    keep_t = rt <= truncation
    rt, ft = rt[keep_t], ft[keep_t]

    v1, v2 = F_quartet.grid.meshgrid()
    rv = np.sqrt(v1 ** 2 + v2 ** 2).ravel()
    fv = F_quartet.norm_field().ravel()
    keep_v = rv <= truncation
    rv, fv = rv[keep_v], fv[keep_v]

    total = 0.0
    for lo in range(0, rt.size, _block):
        r = rt[lo:lo + _block, None]
        w = ft[lo:lo + _block, None]
        kernel = np.exp(r * rv[None, :]) / (1.0 + r + rv[None, :]) ** d
        total += float(np.sum(w * kernel * fv[None, :]))
    return total * f.grid.cell_area * F_quartet.grid.cell_area


# ---------------------------------------------------------------------------
# Pitt and the logarithmic inequality.

@dataclass(frozen=True)
class PittReport:
    alpha: float
    lhs: float
    rhs: float
    slack: float
    constants: PittConstants


def pitt_check(f: QField, plan: QolctPlan, alpha: float) -> PittReport:
    """|v|^(-alpha)-weighted transform energy against the |t|^alpha-weighted
    signal energy times C_alpha/(4 pi^2); slack = rhs - lhs >= 0."""
    _require_ij(plan, "Pitt's inequality")
    consts = pitt_constants(alpha)
    quartet = analysis_quartet(f, plan)
    og = plan.output_grid
    v1 = og.axis_coords(1) / plan.A1.b
    v2 = og.axis_coords(2) / plan.A2.b
    rv = np.sqrt(v1[:, None] ** 2 + v2[None, :] ** 2)
    lhs = _weighted_energy(quartet.norm_field() ** 2, rv ** (-alpha), og.cell_area)
    t1, t2 = f.grid.meshgrid()
    rt = np.sqrt(t1 ** 2 + t2 ** 2)
    e2 = np.sum(f.samples * f.samples, axis=-1)
    rhs = consts.D * _weighted_energy(e2, rt ** alpha, f.grid.cell_area)
    return PittReport(alpha, lhs, rhs, rhs - lhs, consts)


@dataclass(frozen=True)
class LogUpReport:
    lhs: float
    rhs: float
    slack: float
    transform_term: float
    signal_term: float
    energy: float
    constant: float


def log_up_check(f: QField, plan: QolctPlan) -> LogUpReport:
    """ln|v|-weighted transform energy plus ln|t|-weighted signal energy
    against (ln 2 + psi(1/2)) times the signal energy; slack >= 0."""
    _require_ij(plan, "the logarithmic inequality")
    quartet = analysis_quartet(f, plan)
    og = plan.output_grid
    v1 = og.axis_coords(1) / plan.A1.b
    v2 = og.axis_coords(2) / plan.A2.b
    rv = np.sqrt(v1[:, None] ** 2 + v2[None, :] ** 2)
    zterm = _weighted_energy(quartet.norm_field() ** 2, np.log(rv), og.cell_area)
    t1, t2 = f.grid.meshgrid()
    rt = np.sqrt(t1 ** 2 + t2 ** 2)
    e2 = np.sum(f.samples * f.samples, axis=-1)
    tterm = _weighted_energy(e2, np.log(rt), f.grid.cell_area)
    energy = _signal_energy(f)
    rhs = LOG_UP_CONSTANT * energy
    lhs = zterm + tterm
    return LogUpReport(lhs, rhs, lhs - rhs, zterm, tterm, energy, LOG_UP_CONSTANT)
