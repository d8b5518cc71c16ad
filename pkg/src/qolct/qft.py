"""Two-sided quaternion Fourier transform on sampled fields.

The transform pair implemented here uses the angular-frequency kernel with
no 2*pi in the exponent,

    F(u) = sum_t exp(-lam*u1*t1) f(t) exp(-mu*u2*t2) dt1 dt2,
    f(t) = (1/(2*pi)^2) sum_u exp(+lam*u1*t1) F(u) exp(+mu*u2*t2) du1 du2,

so Plancherel carries the 4*pi^2 factor.  ``qft_direct`` evaluates the
quadrature for arbitrary pure-unit axes via dense kernel contractions;
``qft_fast_ij`` is an FFT-based path specialized to lam=i, mu=j.  Both paths
agree to rounding on FFT-compatible grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _mutation
from .field import ComponentQuartet, Grid2D, QField, partial_derivative
from .quat import UNIT_I, UNIT_J, PureUnit, plane_to_quat, qmul, qnorm


class PlanViolationError(ValueError):
    """A transform plan fails its resolution/compatibility preconditions."""


def default_output_grid(grid: Grid2D) -> Grid2D:
    """Frequency grid centered at 0 with spacing 2*pi/(n*h) per axis."""
    return Grid2D(grid.n1, grid.n2, 0.0, 0.0,
                  2.0 * math.pi / (grid.n1 * grid.spacing1),
                  2.0 * math.pi / (grid.n2 * grid.spacing2))


@dataclass(frozen=True)
class QftPlan:
    input_grid: Grid2D
    output_grid: Grid2D
    lam: PureUnit
    mu: PureUnit
    direction: str = "forward"

    def __post_init__(self):
        if self.direction not in ("forward", "inverse"):
            raise ValueError("direction must be 'forward' or 'inverse'")
        # Phase resolution: between adjacent output samples the kernel phase
        # at the far edge of the input grid may advance by at most pi.
        tgrid, ugrid = self.signal_grid, self.freq_grid
        for axis in (1, 2):
            du = ugrid.spacing1 if axis == 1 else ugrid.spacing2
            t = tgrid.axis_coords(axis)
            reach = max(abs(t[0]), abs(t[-1]))
            if du * reach > math.pi * (1.0 + 1e-9):
                raise PlanViolationError(
                    f"axis {axis}: output spacing {du:g} times input reach "
                    f"{reach:g} exceeds pi; refine the output grid")

    @property
    def signal_grid(self) -> Grid2D:
        return self.input_grid if self.direction == "forward" else self.output_grid

    @property
    def freq_grid(self) -> Grid2D:
        return self.output_grid if self.direction == "forward" else self.input_grid

    @classmethod
    def forward(cls, grid: Grid2D, lam: PureUnit = UNIT_I, mu: PureUnit = UNIT_J,
                output_grid: Grid2D | None = None) -> "QftPlan":
        return cls(grid, output_grid or default_output_grid(grid), lam, mu, "forward")

    def inverted(self) -> "QftPlan":
        return QftPlan(self.output_grid, self.input_grid, self.lam, self.mu,
                       "inverse" if self.direction == "forward" else "forward")

    def is_fft_compatible(self) -> bool:
        gi, go = self.input_grid, self.output_grid
        if (gi.n1, gi.n2) != (go.n1, go.n2):
            return False
        for din, dout, n in ((gi.spacing1, go.spacing1, gi.n1),
                             (gi.spacing2, go.spacing2, gi.n2)):
            if abs(din * dout * n - 2.0 * math.pi) > 1e-9 * 2.0 * math.pi:
                return False
        return True


# ---------------------------------------------------------------------------
# Scalar centered Fourier core.

def _axis_ramps(n, t0, dt, u0, du, sign):
    """Pre/post phase ramps turning an FFT into sum_p x_p e^{sign*i*u[q]*t[p]}."""
    m = (n - 1) / 2.0
    p = np.arange(n)
    # core (q-m)(p-m)*2pi/n handled as fft/ifft plus these ramps; the m*p and
    # m*q products are half-integers, so the mod-n reduction below is exact.
    pre = np.exp(1j * sign * (u0 * (p - m) * dt - 2.0 * np.pi * np.mod(m * p, n) / n))
    post = np.exp(1j * sign * (u0 * t0 + (p - m) * du * t0
                               - 2.0 * np.pi * np.mod(m * p, n) / n
                               + 2.0 * np.pi * np.mod(m * m, n) / n))
    return pre, post


def centered_ft2(x: np.ndarray, tgrid: Grid2D, ugrid: Grid2D,
                 signs=(-1, -1)) -> np.ndarray:
    """Exact FFT evaluation of sum_t x(t) e^{s1*i*u1*t1} e^{s2*i*u2*t2} dt.

    Requires matching sample counts and du*dt = 2*pi/n per axis.  Grid
    centers are arbitrary; they are absorbed by phase ramps.
    """
    if (tgrid.n1, tgrid.n2) != (ugrid.n1, ugrid.n2):
        raise PlanViolationError("centered FT needs matching sample counts")
    for dt, du, n in ((tgrid.spacing1, ugrid.spacing1, tgrid.n1),
                      (tgrid.spacing2, ugrid.spacing2, tgrid.n2)):
        if abs(dt * du * n - 2.0 * np.pi) > 1e-9 * 2.0 * np.pi:
            raise PlanViolationError("grid spacings are not FFT-compatible")

    out = np.asarray(x, dtype=complex)
    specs = ((tgrid.n1, tgrid.center1, tgrid.spacing1, ugrid.center1,
              ugrid.spacing1, signs[0]),
             (tgrid.n2, tgrid.center2, tgrid.spacing2, ugrid.center2,
              ugrid.spacing2, signs[1]))
    for axis, (n, t0, dt, u0, du, sign) in enumerate(specs):
        pre, post = _axis_ramps(n, t0, dt, u0, du, sign)
        shape = (-1, 1) if axis == 0 else (1, -1)
        out = out * pre.reshape(shape)
        if sign < 0:
            out = np.fft.fft(out, axis=axis)
        else:
            out = np.fft.ifft(out, axis=axis) * n
        out = out * post.reshape(shape)
    return out * tgrid.cell_area


def cos_sin_transforms(g: np.ndarray, tgrid: Grid2D, ugrid: Grid2D, sign: int):
    """Separable cosine/sine quadratures of a real field.

    Returns (CC, SC, CS, SS) where e.g. SC(u) = sum_t g(t) sin(u1 t1)
    cos(u2 t2) dt.  These are axis-free building blocks of every two-sided
    transform of a real component.
    """
    w = centered_ft2(g, tgrid, ugrid, (sign, sign))
    v = centered_ft2(g, tgrid, ugrid, (sign, -sign))
    cc = 0.5 * (w.real + v.real)
    ss = 0.5 * (v.real - w.real)
    sc = 0.5 * sign * (w.imag + v.imag)
    cs = 0.5 * sign * (w.imag - v.imag)
    return cc, sc, cs, ss


# ---------------------------------------------------------------------------
# Direct quadrature path (arbitrary pure-unit axes, arbitrary grids).

#: rows of kernel matrix materialized at once in dense contractions
_CONTRACT_BLOCK = 1024


def _left_contract(cosm, sinm, lam, samples, weight):
    """sum_p (cos + lam*sin)[q, p] * samples[p, ...] * weight."""
    lam_f = qmul(lam.array, samples)
    out = np.tensordot(cosm, samples, axes=(1, 0))
    out += np.tensordot(sinm, lam_f, axes=(1, 0))
    return out * weight


def _right_contract(samples, cosm, sinm, mu, weight):
    """sum_p samples[:, p, :] * (cos + mu*sin)[p, q] * weight."""
    f_mu = qmul(samples, mu.array)
    out = np.tensordot(samples, cosm, axes=(1, 0))
    out += np.tensordot(f_mu, sinm, axes=(1, 0))
    return np.moveaxis(out, -1, 1) * weight


def _direct_apply(f: QField, plan: QftPlan, sign: int, scale: float) -> QField:
    tgrid = f.grid
    ugrid = plan.output_grid
    t1, t2 = tgrid.axis_coords(1), tgrid.axis_coords(2)
    u1, u2 = ugrid.axis_coords(1), ugrid.axis_coords(2)
    th2 = sign * np.outer(t2, u2)
    cos2, sin2 = np.cos(th2), np.sin(th2)
    out = np.empty((ugrid.n1, ugrid.n2, 4))
    for lo in range(0, ugrid.n1, _CONTRACT_BLOCK):
        th1 = sign * np.outer(u1[lo:lo + _CONTRACT_BLOCK], t1)
        g = _left_contract(np.cos(th1), np.sin(th1), plan.lam, f.samples,
                           tgrid.spacing1)
        out[lo:lo + _CONTRACT_BLOCK] = _right_contract(
            g, cos2, sin2, plan.mu, tgrid.spacing2 * scale)
    return QField(ugrid, out)


def qft_direct(f: QField, plan: QftPlan) -> QField:
    """Reference O(N^3) quadrature of the forward transform."""
    if plan.direction != "forward":
        raise ValueError("qft_direct requires a forward plan")
    if f.grid != plan.input_grid:
        raise ValueError("field grid does not match plan input grid")
    return _direct_apply(f, plan, -1, 1.0)


# ---------------------------------------------------------------------------
# Fast component-split path for lam=i, mu=j.

def _assemble_two_sided(parts, sign: int) -> np.ndarray:
    """Recombine per-component cos/sin quadratures for the (i, j) transform.

    Uses exp(s*i*a) i = i exp(s*i*a) but exp(s*i*a) j = j exp(-s*i*a): the
    j and k components see a sign-conjugated left kernel.
    """
    (cc0, sc0, cs0, ss0), (cc1, sc1, cs1, ss1), \
        (cc2, sc2, cs2, ss2), (cc3, sc3, cs3, ss3) = parts
    s = float(sign)
    out = np.empty(cc0.shape + (4,))
    out[..., 0] = cc0 - s * sc1 - s * cs2 + ss3
    out[..., 1] = s * sc0 + cc1 - ss2 - s * cs3
    out[..., 2] = s * cs0 - ss1 + cc2 - s * sc3
    out[..., 3] = ss0 + s * cs1 + s * sc2 + cc3
    return out


def _require_ij(plan: QftPlan):
    if plan.lam != UNIT_I or plan.mu != UNIT_J:
        raise PlanViolationError("fast path requires lam=i and mu=j exactly")


def qft_fast_ij(f: QField, plan: QftPlan) -> QField:
    """FFT-based forward transform, identical contract to qft_direct."""
    if plan.direction != "forward":
        raise ValueError("qft_fast_ij requires a forward plan")
    _require_ij(plan)
    parts = [cos_sin_transforms(f.samples[..., m], f.grid, plan.output_grid, -1)
             for m in range(4)]
    return QField(plan.output_grid, _assemble_two_sided(parts, -1))


def iqft(F: QField, plan: QftPlan, method: str = "auto") -> QField:
    """Inverse transform (1/4pi^2) sum_u e^{+lam u1 t1} F(u) e^{+mu u2 t2} du."""
    if plan.direction != "inverse":
        raise ValueError("iqft requires an inverse plan")
    if F.grid != plan.input_grid:
        raise ValueError("field grid does not match plan input grid")
    scale = 1.0 / (4.0 * math.pi ** 2)
    if _mutation.active("iqft-scale"):
        scale = 1.0
    fast_ok = (plan.lam == UNIT_I and plan.mu == UNIT_J
               and plan.is_fft_compatible())
    if method == "direct" or (method == "auto" and not fast_ok):
        return _direct_apply(F, plan, +1, scale)
    _require_ij(plan)
    parts = [cos_sin_transforms(F.samples[..., m], F.grid, plan.output_grid, +1)
             for m in range(4)]
    return QField(plan.output_grid, _assemble_two_sided(parts, +1) * scale)


def qft_quartet(f: QField, plan: QftPlan) -> ComponentQuartet:
    """Transforms (F{f_0}, ..., F{f_3}) of the four real components.

    For a real component g the two-sided transform is CC - lam*SC - mu*CS +
    lam*mu*SS, so arbitrary axes reduce to the same scalar quadratures.
    """
    if plan.direction != "forward":
        raise ValueError("qft_quartet requires a forward plan")
    lam_q = plan.lam.array
    mu_q = plan.mu.array
    lammu = qmul(lam_q, mu_q)
    one = np.array([1.0, 0.0, 0.0, 0.0])
    members = []
    use_fast = plan.is_fft_compatible()
    for m in range(4):
        if use_fast:
            cc, sc, cs, ss = cos_sin_transforms(
                f.samples[..., m], f.grid, plan.output_grid, -1)
        else:
            comp = QField.from_real(f.grid, f.samples[..., m])
            members.append(qft_direct(comp, plan))
            continue
        samples = (cc[..., None] * one - sc[..., None] * lam_q
                   - cs[..., None] * mu_q + ss[..., None] * lammu)
        members.append(QField(plan.output_grid, samples))
    return ComponentQuartet(tuple(members))


@dataclass(frozen=True)
class IdentityReport:
    lhs: QField
    rhs: QField
    maxerr: float
    relerr: float


def derivative_identity_check(f: QField, plan: QftPlan, m: int, n: int,
                              method: str = "auto") -> IdentityReport:
    """Compare F{d^(m+n) f} against (lam u1)^m F{f} (mu u2)^n.

    The derivative side uses finite differences; the multiplier side applies
    the powers in the stated left/right order, which is load-bearing.
    """
    if m + n > 2 or m < 0 or n < 0:
        raise ValueError("orders must satisfy 0 <= m + n <= 2")
    df = f
    for _ in range(m):
        df = partial_derivative(df, 1)
    for _ in range(n):
        df = partial_derivative(df, 2)

    def transform(g):
        if method == "direct" or not (plan.lam == UNIT_I and plan.mu == UNIT_J
                                      and plan.is_fft_compatible()):
            return qft_direct(g, plan)
        return qft_fast_ij(g, plan)

    lhs = transform(df)
    base = transform(f).samples
    u1 = plan.output_grid.axis_coords(1)
    u2 = plan.output_grid.axis_coords(2)
    for _ in range(m):
        base = qmul(plane_to_quat(1j * u1, plan.lam)[:, None, :], base)
    for _ in range(n):
        base = qmul(base, plane_to_quat(1j * u2, plan.mu)[None, :, :])
    rhs = QField(plan.output_grid, base)
    diff = qnorm(lhs.samples - rhs.samples)
    maxerr = float(diff.max())
    scale = float(qnorm(rhs.samples).max())
    return IdentityReport(lhs, rhs, maxerr, maxerr / scale if scale else maxerr)
