import math

import numpy as np
import pytest

from qolct import Grid2D, QField, UNIT_I, UNIT_J, integrate, l2_norm, synth_gaussian
from qolct.field import (
    ComponentQuartet,
    GridTooSmallError,
    apply_chirp,
    fourier_shift,
    partial_derivative,
    quartet_l2_norm,
    quartet_norm_pointwise,
)
from qolct.quat import Quaternion, qnorm


def test_grid_is_cell_centered():
    g = Grid2D(4, 4, 0.0, 0.0, 0.5, 0.5)
    t = g.axis_coords(1)
    assert np.allclose(t, [-0.75, -0.25, 0.25, 0.75])
    assert 0.0 not in t  # even n never samples the center
    assert g.extent1 == pytest.approx(2.0)
    godd = Grid2D(5, 5, 1.0, 0.0, 0.5, 0.5)
    assert np.allclose(godd.axis_coords(1), [0.0, 0.5, 1.0, 1.5, 2.0])


def test_grid_validation():
    with pytest.raises(ValueError):
        Grid2D(0, 4)
    with pytest.raises(ValueError):
        Grid2D(4, 4, spacing1=-1.0)


def test_integrate_constant():
    g = Grid2D.centered(32, 2.0)
    ones = QField.from_real(g, np.ones((32, 32)))
    assert integrate(ones).q0 == pytest.approx(4.0, abs=1e-12)


def test_integrate_gaussian_is_pi():
    g = Grid2D.centered(128, 16.0)
    f = synth_gaussian(g, 1.0, 1.0)
    assert integrate(f).q0 == pytest.approx(math.pi, rel=1e-10)


def test_integrate_odd_function_vanishes():
    g = Grid2D.centered(64, 16.0)
    t1, _ = g.meshgrid()
    f = QField.from_real(g, t1 * np.exp(-(t1 ** 2)))
    assert abs(integrate(f).q0) <= 1e-12


def test_integrate_linearity():
    rng = np.random.default_rng(3)
    g = Grid2D.centered(16, 4.0)
    f = QField(g, rng.normal(size=(16, 16, 4)))
    h = QField(g, rng.normal(size=(16, 16, 4)))
    lhs = integrate(QField(g, 2.5 * f.samples - 1.25 * h.samples))
    rhs = 2.5 * integrate(f) - 1.25 * integrate(h)
    assert np.abs(lhs.array - rhs.array).max() <= 1e-12 * max(
        np.abs(rhs.array).max(), 1.0)


def test_l2_norm_values():
    g = Grid2D.centered(256, 20.0)
    assert l2_norm(QField.zeros(g)) == 0.0
    f = synth_gaussian(g, 0.5, 0.5)
    assert l2_norm(f) == pytest.approx(math.sqrt(math.pi), rel=1e-10)
    # scaling by a quaternion constant scales the norm by its modulus
    c = Quaternion(1.0, -2.0, 0.5, 0.3)
    from qolct.quat import qmul
    scaled = QField(g, qmul(np.broadcast_to(c.array, f.samples.shape), f.samples))
    assert l2_norm(scaled) == pytest.approx(c.norm() * l2_norm(f), rel=1e-12)


def test_gaussian_truncation_converged():
    # doubling the extent beyond 12 sigma leaves the norm unchanged
    n1 = l2_norm(synth_gaussian(Grid2D.centered(128, 12.0), 1.0, 1.0))
    n2 = l2_norm(synth_gaussian(Grid2D.centered(256, 24.0), 1.0, 1.0))
    assert n1 == pytest.approx(n2, rel=1e-12)


def test_synth_gaussian_values_and_norm():
    g = Grid2D.centered(64, 12.0)
    t1, t2 = g.meshgrid()
    f = synth_gaussian(g, 1.0, 1.0)
    assert np.allclose(f.component(0), np.exp(-(t1 ** 2 + t2 ** 2)))
    assert np.abs(f.samples[..., 1:]).max() == 0.0

    beta = (Quaternion(1, 0.5, 0, 0) * Quaternion(0.7, 0, -0.4, 0))
    fq = synth_gaussian(g, 1.0, 0.25, (1.0, 0.5), (0.7, -0.4), UNIT_I, UNIT_J)
    want = beta.norm() ** 2 * math.pi / (2.0 * math.sqrt(1.0 * 0.25))
    assert l2_norm(fq) ** 2 == pytest.approx(want, rel=1e-8)

    with pytest.raises(ValueError):
        synth_gaussian(g, -1.0, 1.0)
    with pytest.raises(ValueError):
        synth_gaussian(g, 1.0, 1.0, (1.0, 0.5), (1.0, 0.0))  # lam required


def test_quartet_norms():
    g = Grid2D.centered(16, 4.0)
    rng = np.random.default_rng(5)
    f = QField(g, rng.normal(size=(16, 16, 4)))
    zero = QField.zeros(g)
    q = ComponentQuartet((f, zero, zero, zero))
    assert quartet_norm_pointwise(q, (3, 7)) == pytest.approx(
        float(qnorm(f.samples[3, 7])))
    assert quartet_l2_norm(q) == pytest.approx(l2_norm(f), rel=1e-14)
    q4 = ComponentQuartet((f, f, f, f))
    assert quartet_norm_pointwise(q4, (3, 7)) == pytest.approx(
        2.0 * float(qnorm(f.samples[3, 7])))
    assert quartet_l2_norm(ComponentQuartet((zero, zero, zero, zero))) == 0.0
    with pytest.raises(ValueError):
        ComponentQuartet((f, zero, zero))
    other = QField.zeros(Grid2D.centered(8, 4.0))
    with pytest.raises(ValueError):
        ComponentQuartet((f, zero, zero, other))


def test_partial_derivative_linear_ramp():
    g = Grid2D.centered(32, 8.0)
    t1, _ = g.meshgrid()
    f = QField.from_real(g, t1.copy())
    d = partial_derivative(f, 1)
    assert np.abs(d.component(0) - 1.0).max() <= 1e-10
    const = QField.from_real(g, np.full((32, 32), 3.7))
    assert np.abs(partial_derivative(const, 1).samples).max() <= 1e-10
    assert np.abs(partial_derivative(const, 2).samples).max() <= 1e-10


def test_partial_derivative_gaussian():
    # the h^4/30 * f^(5) truncation error at h = 0.05 sits just under 1e-5;
    # h = 0.03 brings it below 1e-6
    for h, tol in ((0.05, 1e-5), (0.03, 1e-6)):
        n = int(round(8.0 / h))
        g = Grid2D(n, 16, 0.0, 0.0, h, 0.5)
        t1, _ = g.meshgrid()
        f = QField.from_real(g, np.exp(-t1 ** 2))
        d = partial_derivative(f, 1)
        want = -2.0 * t1 * np.exp(-t1 ** 2)
        assert np.abs(d.component(0) - want).max() <= tol


def test_partial_derivative_fourth_order_convergence():
    errs = []
    for n in (128, 256):
        g = Grid2D(n, 8, 0.0, 0.0, 8.0 / n, 1.0)
        t1, _ = g.meshgrid()
        f = QField.from_real(g, np.exp(-t1 ** 2) * np.sin(1.3 * t1))
        d = partial_derivative(f, 1)
        want = np.exp(-t1 ** 2) * (1.3 * np.cos(1.3 * t1)
                                   - 2.0 * t1 * np.sin(1.3 * t1))
        errs.append(np.abs(d.component(0) - want).max())
    assert errs[0] / errs[1] >= 14.0


def test_partial_derivative_grid_too_small():
    g = Grid2D(4, 8, 0.0, 0.0, 1.0, 1.0)
    with pytest.raises(GridTooSmallError):
        partial_derivative(QField.zeros(g), 1)


def test_apply_chirp_order_and_modulus():
    g = Grid2D.centered(16, 4.0)
    rng = np.random.default_rng(7)
    f = QField(g, rng.normal(size=(16, 16, 4)))
    out = apply_chirp(f, UNIT_I, 0.3, 0.5, UNIT_J, -0.2, 0.1)
    # unit-modulus chirps preserve the pointwise modulus
    assert np.allclose(qnorm(out.samples), qnorm(f.samples))
    t1 = g.axis_coords(1)
    t2 = g.axis_coords(2)
    from qolct.quat import plane_to_quat, qmul
    left = plane_to_quat(np.exp(1j * (0.3 * t1 + 0.5 * t1 ** 2)), UNIT_I)
    right = plane_to_quat(np.exp(1j * (-0.2 * t2 + 0.1 * t2 ** 2)), UNIT_J)
    want = qmul(qmul(left[:, None, :], f.samples), right[None, :, :])
    assert np.allclose(out.samples, want)


def test_fourier_shift_matches_analytic_shift():
    g = Grid2D.centered(128, 20.0)
    f = synth_gaussian(g, 1.0, 0.8, (1.0, 0.3), (1.0, -0.2), UNIT_I, UNIT_J)
    shifted = fourier_shift(f, 0.37, -0.21)
    want = synth_gaussian(g, 1.0, 0.8, (1.0, 0.3), (1.0, -0.2), UNIT_I, UNIT_J,
                          center=(0.37, -0.21))
    assert np.abs(shifted.samples - want.samples).max() <= 1e-10


def test_qfield_immutable_and_validated():
    g = Grid2D.centered(8, 2.0)
    f = QField.zeros(g)
    with pytest.raises(ValueError):
        f.samples[0, 0, 0] = 1.0
    with pytest.raises(ValueError):
        QField(g, np.zeros((4, 4, 4)))
