"""Quaternionic offset linear canonical transform (QOLCT).

Each axis carries a unimodular matrix with offsets, (a, b, c, d | tau, eta)
with a*d - b*c = 1.  For b1, b2 > 0 the transform is

    O{f}(u) = sum_t K1(t1, u1) f(t) K2(t2, u2) dt,
    K(t, u) = (2*pi*b)^(-1/2) exp(-axis*pi/4)
              exp(axis * (a t^2 - 2 t (u - tau) - 2 u (d tau - b eta)
                          + d (u^2 + tau^2)) / (2 b)),

with the left kernel on axis lam and the right kernel on axis mu.  The
production path factors this as chirp -> QFT -> chirp; ``qolct_direct``
evaluates the kernel quadrature densely and serves as the mutual oracle.
Degenerate axes (b = 0) become pointwise substitutions with chirps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from . import _mutation
from .field import ComponentQuartet, Grid2D, QField, fourier_shift, partial_derivative
from .qft import (
    _CONTRACT_BLOCK,
    PlanViolationError,
    QftPlan,
    _left_contract,
    _right_contract,
    iqft,
    qft_direct,
    qft_fast_ij,
)
from .quat import UNIT_I, UNIT_J, PureUnit, Quaternion, plane_to_quat, qmul, qnorm


class InterpolationDomainError(ValueError):
    """A degenerate branch would sample the signal outside its grid."""


@dataclass(frozen=True)
class OffsetParams:
    """One axis of the transform: matrix entries (a, b, c, d), offsets (tau, eta)."""

    a: float
    b: float
    c: float
    d: float
    tau: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > 1e-12:
            raise ValueError(f"matrix determinant {det!r} is not 1")

    @classmethod
    def qft_case(cls) -> "OffsetParams":
        """(0, 1, -1, 0 | 0, 0): recovers the plain two-sided QFT."""
        return cls(0.0, 1.0, -1.0, 0.0, 0.0, 0.0)


def _require_positive_b(A: OffsetParams, label: str):
    if A.b <= 0.0:
        raise ValueError(f"{label}: main-branch transforms require b > 0, got {A.b}")


def kernel(A: OffsetParams, lam: PureUnit, t: float, u: float) -> Quaternion:
    """Evaluate the transform kernel K_A(t, u) on axis ``lam``."""
    _require_positive_b(A, "kernel")
    theta = (A.a * t * t - 2.0 * t * (u - A.tau)
             - 2.0 * u * (A.d * A.tau - A.b * A.eta)
             + A.d * (u * u + A.tau * A.tau)) / (2.0 * A.b)
    z = np.exp(1j * (theta - math.pi / 4.0)) / math.sqrt(2.0 * math.pi * A.b)
    return Quaternion.from_array(plane_to_quat(z, lam))


@dataclass(frozen=True)
class QolctPlan:
    A1: OffsetParams
    A2: OffsetParams
    lam: PureUnit
    mu: PureUnit
    input_grid: Grid2D
    output_grid: Grid2D

    def __post_init__(self):
        for axis, A in ((1, self.A1), (2, self.A2)):
            if A.b < 0.0:
                raise ValueError(f"axis {axis}: b < 0 is not supported; "
                                 "normalize the matrix to b >= 0")
            if A.b == 0.0:
                if A.d == 0.0:
                    raise ValueError(f"axis {axis}: b = 0 with d = 0 violates "
                                     "a*d - b*c = 1")
                continue
            h = self.input_grid.spacing1 if axis == 1 else self.input_grid.spacing2
            extent = self.input_grid.extent1 if axis == 1 else self.input_grid.extent2
            bound = abs(A.a) / (2.0 * A.b) * h * extent
            if bound > math.pi * (1.0 + 1e-9):
                raise PlanViolationError(
                    f"axis {axis}: chirp resolution |a|/(2b)*h*L = {bound:g} "
                    "exceeds pi; refine the input grid")
        if self.A1.b > 0.0 and self.A2.b > 0.0:
            self.qft_plan()  # validates the embedded Nyquist bound

    @classmethod
    def create(cls, A1: OffsetParams, A2: OffsetParams,
               lam: PureUnit = UNIT_I, mu: PureUnit = UNIT_J,
               input_grid: Grid2D | None = None,
               output_grid: Grid2D | None = None) -> "QolctPlan":
        if input_grid is None:
            raise ValueError("input_grid is required")
        if output_grid is None:
            output_grid = cls.derived_output_grid(A1, A2, input_grid)
        return cls(A1, A2, lam, mu, input_grid, output_grid)

    @staticmethod
    def derived_output_grid(A1: OffsetParams, A2: OffsetParams,
                            grid: Grid2D) -> Grid2D:
        """Default u-grid: b_k times the QFT frequencies on b>0 axes, the
        substitution-aligned grid u = t/d + tau on degenerate axes."""
        spacing, center = [], []
        for A, n, h, c in ((A1, grid.n1, grid.spacing1, grid.center1),
                           (A2, grid.n2, grid.spacing2, grid.center2)):
            if A.b > 0.0:
                spacing.append(A.b * 2.0 * math.pi / (n * h))
                center.append(0.0)
            else:
                if A.d <= 0.0:
                    raise ValueError("degenerate axis needs d > 0")
                spacing.append(h / A.d)
                center.append(c / A.d + A.tau)
        return Grid2D(grid.n1, grid.n2, center[0], center[1],
                      spacing[0], spacing[1])

    def scaled_freq_grid(self) -> Grid2D:
        """The v-grid at which the embedded QFT is sampled: v_k = u_k / b_k."""
        g = self.output_grid
        return Grid2D(g.n1, g.n2, g.center1 / self.A1.b, g.center2 / self.A2.b,
                      g.spacing1 / self.A1.b, g.spacing2 / self.A2.b)

    def qft_plan(self) -> QftPlan:
        return QftPlan(self.input_grid, self.scaled_freq_grid(),
                       self.lam, self.mu, "forward")


def _chirp_1d(coords, lin, quad, axis: PureUnit, extra=0.0, scale=1.0):
    """scale * exp(axis*(lin*x + quad*x^2 + extra)) as a (n, 4) stack."""
    z = scale * np.exp(1j * (lin * coords + quad * coords ** 2 + extra))
    return plane_to_quat(z, axis)


def _output_factor(A: OffsetParams, axis: PureUnit, u, inverse=False):
    """The u-dependent kernel factor C(u) = (2 pi b)^(-1/2) e^{-axis pi/4}
    e^{axis*(-2u(d tau - b eta) + d(u^2 + tau^2))/(2b)}, or its inverse."""
    phi = (-2.0 * u * (A.d * A.tau - A.b * A.eta)
           + A.d * (u * u + A.tau * A.tau)) / (2.0 * A.b)
    if inverse:
        return plane_to_quat(
            np.exp(-1j * (phi - math.pi / 4.0)) * math.sqrt(2.0 * math.pi * A.b),
            axis)
    return plane_to_quat(
        np.exp(1j * (phi - math.pi / 4.0)) / math.sqrt(2.0 * math.pi * A.b),
        axis)


def _signal_chirp(f: QField, A1: OffsetParams, A2: OffsetParams,
                  lam: PureUnit, mu: PureUnit, sign: float) -> QField:
    """exp(sign*lam*(tau1 t1/b1 + a1 t1^2/(2 b1))) f exp(mu-side analogue)."""
    quad_sign = sign
    if _mutation.active("chirp-sign"):
        quad_sign = -sign
    t1 = f.grid.axis_coords(1)
    t2 = f.grid.axis_coords(2)
    left = _chirp_1d(t1, sign * A1.tau / A1.b, quad_sign * A1.a / (2.0 * A1.b), lam)
    right = _chirp_1d(t2, sign * A2.tau / A2.b, quad_sign * A2.a / (2.0 * A2.b), mu)
    out = qmul(left[:, None, :], f.samples)
    out = qmul(out, right[None, :, :])
    return QField(f.grid, out)


def qolct_forward(f: QField, plan: QolctPlan) -> QField:
    """Forward transform via the chirp -> QFT -> chirp factorization.

    Exact (to rounding) rearrangement of the direct kernel quadrature on the
    plan's grids; uses the FFT path when lam=i, mu=j.
    """
    _require_positive_b(plan.A1, "axis 1")
    _require_positive_b(plan.A2, "axis 2")
    if f.grid != plan.input_grid:
        raise ValueError("field grid does not match plan input grid")
    g = _signal_chirp(f, plan.A1, plan.A2, plan.lam, plan.mu, +1.0)
    qplan = plan.qft_plan()
    if plan.lam == UNIT_I and plan.mu == UNIT_J and qplan.is_fft_compatible():
        Fg = qft_fast_ij(g, qplan)
    else:
        Fg = qft_direct(g, qplan)
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    c1 = _output_factor(plan.A1, plan.lam, u1)
    c2 = _output_factor(plan.A2, plan.mu, u2)
    out = qmul(c1[:, None, :], Fg.samples)
    out = qmul(out, c2[None, :, :])
    return QField(plan.output_grid, out)


def _kernel_matrices(A: OffsetParams, t, u, transposed: bool):
    """Cos/sin parts of the kernel on a (u, t) mesh (or (t, u) if transposed)."""
    if transposed:
        tt, uu = t[:, None], u[None, :]
    else:
        tt, uu = t[None, :], u[:, None]
    theta = (A.a * tt * tt - 2.0 * tt * (uu - A.tau)
             - 2.0 * uu * (A.d * A.tau - A.b * A.eta)
             + A.d * (uu * uu + A.tau * A.tau)) / (2.0 * A.b) - math.pi / 4.0
    r = 1.0 / math.sqrt(2.0 * math.pi * A.b)
    return r * np.cos(theta), r * np.sin(theta)


def qolct_direct(f: QField, plan: QolctPlan) -> QField:
    """Brute-force kernel quadrature; the reference oracle for qolct_forward."""
    _require_positive_b(plan.A1, "axis 1")
    _require_positive_b(plan.A2, "axis 2")
    if f.grid != plan.input_grid:
        raise ValueError("field grid does not match plan input grid")
    t1 = f.grid.axis_coords(1)
    t2 = f.grid.axis_coords(2)
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    cos2, sin2 = _kernel_matrices(plan.A2, t2, u2, transposed=True)
    if _mutation.active("right-kernel-sign"):
        sin2 = -sin2
    out = np.empty((plan.output_grid.n1, plan.output_grid.n2, 4))
    for lo in range(0, plan.output_grid.n1, _CONTRACT_BLOCK):
        cos1, sin1 = _kernel_matrices(plan.A1, t1, u1[lo:lo + _CONTRACT_BLOCK],
                                      transposed=False)
        g = _left_contract(cos1, sin1, plan.lam, f.samples, f.grid.spacing1)
        out[lo:lo + _CONTRACT_BLOCK] = _right_contract(
            g, cos2, sin2, plan.mu, f.grid.spacing2)
    return QField(plan.output_grid, out)


def qolct_inverse(F: QField, plan: QolctPlan) -> QField:
    """Inverse transform: conj-kernel quadrature, computed by unwinding the
    factorization (inverse output factors, inverse QFT, inverse chirps)."""
    _require_positive_b(plan.A1, "axis 1")
    _require_positive_b(plan.A2, "axis 2")
    if F.grid != plan.output_grid:
        raise ValueError("field grid does not match plan output grid")
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    c1 = _output_factor(plan.A1, plan.lam, u1, inverse=True)
    c2 = _output_factor(plan.A2, plan.mu, u2, inverse=True)
    samples = qmul(c1[:, None, :], F.samples)
    samples = qmul(samples, c2[None, :, :])
    Fg = QField(plan.scaled_freq_grid(), samples)
    g = iqft(Fg, plan.qft_plan().inverted())
    return _signal_chirp(g, plan.A1, plan.A2, plan.lam, plan.mu, -1.0)


def qolct_quartet(f: QField, plan: QolctPlan) -> ComponentQuartet:
    """Transforms of the four real components of f, sharing the output grid."""
    members = tuple(
        qolct_forward(QField.from_real(f.grid, f.samples[..., m]), plan)
        for m in range(4))
    return ComponentQuartet(members)


def analysis_quartet(f: QField, plan: QolctPlan) -> ComponentQuartet:
    """Quartet of the chirp-multiplied signal: members C1 * F{g_k} * C2 for
    the real components g_k of g = chirp * f * chirp.

    Its pointwise norm equals the component norm of the reduced QFT input
    (the two quartets are related by a constant orthogonal mixing), which is
    the norm the spread, moment and weighted inequalities are stated in.
    For unchirped signals along an axis (a = tau = 0) it coincides with
    :func:`qolct_quartet` along that axis's contribution.
    """
    _require_positive_b(plan.A1, "axis 1")
    _require_positive_b(plan.A2, "axis 2")
    g = _signal_chirp(f, plan.A1, plan.A2, plan.lam, plan.mu, +1.0)
    qplan = plan.qft_plan()
    fast = (plan.lam == UNIT_I and plan.mu == UNIT_J
            and qplan.is_fft_compatible())
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    c1 = _output_factor(plan.A1, plan.lam, u1)
    c2 = _output_factor(plan.A2, plan.mu, u2)
    members = []
    for k in range(4):
        comp = QField.from_real(f.grid, g.samples[..., k])
        Fk = qft_fast_ij(comp, qplan) if fast else qft_direct(comp, qplan)
        out = qmul(c1[:, None, :], Fk.samples)
        out = qmul(out, c2[None, :, :])
        members.append(QField(plan.output_grid, out))
    return ComponentQuartet(tuple(members))


def output_in_scaled_coords(F: QField, plan: QolctPlan) -> QField:
    """Relabel a transform output onto the v-grid, v_k = u_k / b_k.

    The samples are unchanged; sample q then holds O{f}(b1 v1[q], b2 v2[q]),
    the argument scaling used by the Hardy/Beurling/Pitt statements.
    """
    return QField(plan.scaled_freq_grid(), F.samples)


# ---------------------------------------------------------------------------
# Degenerate branches (b = 0 on one or both axes).

def _substituted_coords(A: OffsetParams, u, t_coords):
    if A.d <= 0.0:
        raise ValueError("degenerate branch requires d > 0 (b = 0 and the "
                         "square-root convention fixes the sign)")
    tprime = A.d * (u - A.tau)
    lo, hi = t_coords[0], t_coords[-1]
    pad = 1e-9 * (hi - lo)
    if tprime.min() < lo - pad or tprime.max() > hi + pad:
        raise InterpolationDomainError(
            "substituted coordinates d*(u - tau) fall outside the sampled grid")
    return tprime


def _degenerate_chirp(A: OffsetParams, axis: PureUnit, u):
    """sqrt(d) exp(axis*(c d (u - tau)^2 / 2 + u eta)).

    The linear phase carries eta: that is the b -> 0 limit of the
    main-branch kernel (see the limit-consistency test).
    """
    phase = A.c * A.d * (u - A.tau) ** 2 / 2.0 + u * A.eta
    return plane_to_quat(math.sqrt(A.d) * np.exp(1j * phase), axis)


def qolct_degenerate(f: QField, plan: QolctPlan, which: str) -> QField:
    """Evaluate the b = 0 branches by substitution t_k -> d_k (u_k - tau_k).

    ``which`` names the degenerate axes: ``b1_zero``, ``b2_zero`` or
    ``both_zero``.  Off-grid substituted coordinates are filled by bicubic
    spline interpolation of f; extrapolation is rejected.
    """
    if which not in ("b1_zero", "b2_zero", "both_zero"):
        raise ValueError("which must be b1_zero, b2_zero or both_zero")
    deg1 = which in ("b1_zero", "both_zero")
    deg2 = which in ("b2_zero", "both_zero")
    for deg, A, label in ((deg1, plan.A1, "axis 1"), (deg2, plan.A2, "axis 2")):
        if deg and A.b != 0.0:
            raise ValueError(f"{label}: branch requires b = 0 exactly")
        if not deg:
            _require_positive_b(A, label)
    if f.grid != plan.input_grid:
        raise ValueError("field grid does not match plan input grid")

    t1 = f.grid.axis_coords(1)
    t2 = f.grid.axis_coords(2)
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    data = f.samples

    if deg1:
        tp1 = _substituted_coords(plan.A1, u1, t1)
        data = CubicSpline(t1, data, axis=0)(tp1)
    if deg2:
        tp2 = _substituted_coords(plan.A2, u2, t2)
        data = CubicSpline(t2, data, axis=1)(tp2)

    if not deg1:  # axis-1 kernel quadrature survives
        cos1, sin1 = _kernel_matrices(plan.A1, t1, u1, transposed=False)
        data = _left_contract(cos1, sin1, plan.lam, data, f.grid.spacing1)
    if not deg2:
        cos2, sin2 = _kernel_matrices(plan.A2, t2, u2, transposed=True)
        data = _right_contract(data, cos2, sin2, plan.mu, f.grid.spacing2)

    if deg1:
        data = qmul(_degenerate_chirp(plan.A1, plan.lam, u1)[:, None, :], data)
    if deg2:
        data = qmul(data, _degenerate_chirp(plan.A2, plan.mu, u2)[None, :, :])
    return QField(plan.output_grid, data)


# ---------------------------------------------------------------------------
# Covariance and moment reports.

@dataclass(frozen=True)
class CovarianceReport:
    lhs: QField
    rhs: QField
    maxerr: float
    relerr: float


def _phase_sandwich(F: QField, lam, mu, phase1, phase2) -> QField:
    out = qmul(plane_to_quat(np.exp(1j * phase1), lam)[:, None, :], F.samples)
    out = qmul(out, plane_to_quat(np.exp(1j * phase2), mu)[None, :, :])
    return QField(F.grid, out)


def _shifted_output_plan(plan: QolctPlan, s1: float, s2: float) -> QolctPlan:
    g = plan.output_grid
    shifted = Grid2D(g.n1, g.n2, g.center1 - s1, g.center2 - s2,
                     g.spacing1, g.spacing2)
    return QolctPlan(plan.A1, plan.A2, plan.lam, plan.mu,
                     plan.input_grid, shifted)


def _check_containment(f: QField, k1: float, k2: float):
    g = f.grid
    m1 = max(2, int(math.ceil(abs(k1) / g.spacing1)) + 2)
    m2 = max(2, int(math.ceil(abs(k2) / g.spacing2)) + 2)
    if 2 * m1 >= g.n1 or 2 * m2 >= g.n2:
        raise ValueError("shift too large for the grid")
    e2 = np.sum(f.samples * f.samples, axis=-1)
    total = float(e2.sum())
    interior = float(e2[m1:-m1, m2:-m2].sum())
    if total > 0.0 and (total - interior) > 1e-9 * total:
        raise ValueError("shifted signal is not well-contained in the grid")


def shift_covariance_check(f: QField, plan: QolctPlan, k) -> CovarianceReport:
    """Compare O{f(.-k)} with the phase-factored O{f}(u - k*a).

    The phase per axis is c*(2*k*u - a*k^2)/2 + k*(a*eta - c*tau); the
    offset coupling drops out when tau = eta = 0.
    """
    k1, k2 = k
    _check_containment(f, k1, k2)
    lhs = qolct_forward(fourier_shift(f, k1, k2), plan)
    split_plan = _shifted_output_plan(plan, k1 * plan.A1.a, k2 * plan.A2.a)
    base = qolct_forward(f, split_plan)
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    A1, A2 = plan.A1, plan.A2
    ph1 = (A1.c * (2.0 * k1 * u1 - A1.a * k1 ** 2) / 2.0
           + k1 * (A1.a * A1.eta - A1.c * A1.tau))
    ph2 = (A2.c * (2.0 * k2 * u2 - A2.a * k2 ** 2) / 2.0
           + k2 * (A2.a * A2.eta - A2.c * A2.tau))
    rhs = QField(plan.output_grid,
                 _phase_sandwich(base, plan.lam, plan.mu, ph1, ph2).samples)
    maxerr = float(qnorm(lhs.samples - rhs.samples).max())
    scale = float(qnorm(lhs.samples).max())
    return CovarianceReport(lhs, rhs, maxerr, maxerr / scale if scale else maxerr)


def modulation_covariance_check(f: QField, plan: QolctPlan, xi) -> CovarianceReport:
    """Compare O{e^(lam t1 xi1) f e^(mu t2 xi2)} with the phase-factored
    O{f}(u - b*xi); phases re-derived as -(d/2)(b xi^2 - 2 u xi) - xi (d tau - b eta)."""
    xi1, xi2 = xi
    t1 = f.grid.axis_coords(1)
    t2 = f.grid.axis_coords(2)
    mod = qmul(_chirp_1d(t1, xi1, 0.0, plan.lam)[:, None, :], f.samples)
    mod = qmul(mod, _chirp_1d(t2, xi2, 0.0, plan.mu)[None, :, :])
    lhs = qolct_forward(QField(f.grid, mod), plan)
    split_plan = _shifted_output_plan(plan, plan.A1.b * xi1, plan.A2.b * xi2)
    base = qolct_forward(f, split_plan)
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    A1, A2 = plan.A1, plan.A2
    ph1 = -(A1.d / 2.0 * (A1.b * xi1 ** 2 - 2.0 * u1 * xi1)
            + xi1 * (A1.d * A1.tau - A1.b * A1.eta))
    ph2 = -(A2.d / 2.0 * (A2.b * xi2 ** 2 - 2.0 * u2 * xi2)
            + xi2 * (A2.d * A2.tau - A2.b * A2.eta))
    rhs = QField(plan.output_grid,
                 _phase_sandwich(base, plan.lam, plan.mu, ph1, ph2).samples)
    maxerr = float(qnorm(lhs.samples - rhs.samples).max())
    scale = float(qnorm(lhs.samples).max())
    return CovarianceReport(lhs, rhs, maxerr, maxerr / scale if scale else maxerr)


@dataclass(frozen=True)
class MomentReport:
    lhs: float
    rhs: float
    relerr: float


def moment_identity_check(f: QField, plan: QolctPlan, axis: int) -> MomentReport:
    """Second-moment identity: the u_k^2-weighted transform energy equals the
    b_k^2-weighted energy of lam*(a t/b + tau/b) f + df/dt (axis 1) or of
    (a t/b + tau/b) f mu + df/dt (axis 2; mu multiplies from the right).

    The transform energy is measured in the analysis-quartet norm; with the
    plain component quartet the two sides differ for signals whose phase
    varies along the axis (the cross term 2 s Sc(lam f conj(df)) survives).
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    quartet = analysis_quartet(f, plan)
    w2 = quartet.norm_field() ** 2
    uk = plan.output_grid.axis_coords(axis)
    uk2 = uk[:, None] ** 2 if axis == 1 else uk[None, :] ** 2
    lhs = float(np.sum(uk2 * w2)) * plan.output_grid.cell_area

    A = plan.A1 if axis == 1 else plan.A2
    tk = f.grid.axis_coords(axis)
    slope = (A.a * tk + A.tau) / A.b
    shape = (-1, 1, 1) if axis == 1 else (1, -1, 1)
    if axis == 1:
        lin = qmul(plan.lam.array, f.samples) * slope.reshape(shape)
    else:
        lin = qmul(f.samples, plan.mu.array) * slope.reshape(shape)
    r = lin + partial_derivative(f, axis).samples
    rhs = A.b ** 2 * float(np.sum(r * r)) * f.grid.cell_area
    rel = abs(lhs - rhs) / rhs if rhs else abs(lhs - rhs)
    return MomentReport(lhs, rhs, rel)
