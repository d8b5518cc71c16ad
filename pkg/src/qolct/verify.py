"""Deterministic invariant checks behind ``qolct verify``.

Each check returns a record ``{check, params, observed, tolerance, pass}``;
``observed`` is the measured defect (error magnitude, slack deficit, ...)
compared against ``tolerance``.  All randomness flows from one seed, so a
report is reproducible bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from .field import (
    ComponentQuartet,
    Grid2D,
    QField,
    l2_norm,
    quartet_l2_norm,
    synth_gaussian,
)
from .olct import (
    OffsetParams,
    QolctPlan,
    analysis_quartet,
    modulation_covariance_check,
    moment_identity_check,
    qolct_degenerate,
    qolct_direct,
    qolct_forward,
    qolct_inverse,
    qolct_quartet,
    shift_covariance_check,
)
from .oracle import (
    GaussianSpec,
    gaussian_integral_complex_offset,
    gaussian_qolct_closed_form_field,
)
from .qft import QftPlan, derivative_identity_check, iqft, qft_direct, qft_fast_ij, qft_quartet
from .quat import (
    UNIT_I,
    UNIT_J,
    UNIT_K,
    PureUnit,
    Quaternion,
    axis_exp,
    inv_sqrt_unit,
    mul,
    plane_to_quat,
    polar,
    qmul,
    qnorm,
)
from .uncertainty import (
    LOG_UP_CONSTANT,
    beurling_integral,
    gamma_fn,
    hardy_report,
    heisenberg_report,
    log_up_check,
    pitt_check,
    pitt_constants,
)
from .olct import output_in_scaled_coords

SUITES = ("algebra", "qft", "qolct", "oracle", "uncertainty")


def _record(check, params, observed, tolerance):
    return {"check": check, "params": params, "observed": float(observed),
            "tolerance": float(tolerance), "pass": bool(observed <= tolerance)}


def _random_quat(rng, shape=()):
    return rng.uniform(-1.0, 1.0, shape + (4,))


def _random_axis(rng) -> PureUnit:
    v = rng.normal(size=3)
    while float(v @ v) < 1e-3:
        v = rng.normal(size=3)
    return PureUnit(float(v[0]), float(v[1]), float(v[2]))


def random_offset_params(rng, b_range=(0.5, 2.0), with_offsets=True,
                         max_chirp_ratio=None) -> OffsetParams:
    """Random unimodular parameters with b in ``b_range`` and |a|,|c|,|d| <= 2.

    ``max_chirp_ratio`` caps |a|/(2b) so every draw satisfies the chirp
    resolution bound of the grid the caller plans to use.
    """
    while True:
        a = rng.uniform(-2.0, 2.0)
        c = rng.uniform(-2.0, 2.0)
        b = rng.uniform(*b_range)
        if abs(a) < 0.3:
            continue
        if max_chirp_ratio is not None and abs(a) / (2.0 * b) > max_chirp_ratio:
            continue
        d = (1.0 + b * c) / a
        if abs(d) <= 2.0:
            break
    tau, eta = (rng.uniform(-1.0, 1.0, 2) if with_offsets else (0.0, 0.0))
    return OffsetParams(a, b, c, d, float(tau), float(eta))


# ---------------------------------------------------------------------------

def algebra_checks(seed: int):
    rng = np.random.default_rng(seed)
    out = []

    units = {"i": UNIT_I.quaternion, "j": UNIT_J.quaternion, "k": UNIT_K.quaternion}
    table = [("i", "j", units["k"]), ("j", "k", units["i"]), ("k", "i", units["j"]),
             ("j", "i", -units["k"]), ("k", "j", -units["i"]), ("i", "k", -units["j"])]
    worst = 0.0
    for a, b, want in table:
        got = mul(units[a], units[b])
        worst = max(worst, float(np.abs(got.array - want.array).max()))
    out.append(_record("hamilton-multiplication-table", "ij=k and cyclic", worst, 0.0))

    p = _random_quat(rng, (1000,))
    q = _random_quat(rng, (1000,))
    r = _random_quat(rng, (1000,))
    assoc = np.abs(qmul(qmul(p, q), r) - qmul(p, qmul(q, r))).max()
    out.append(_record("product-associativity", "1000 random triples in [-1,1]^4",
                       assoc, 2e-14))

    pq = qmul(p, q)
    anti = np.abs(_conj(pq) - qmul(_conj(q), _conj(p))).max()
    out.append(_record("conjugation-anti-involution", "1000 random pairs", anti, 1e-14))

    p = _random_quat(rng, (10000,))
    q = _random_quat(rng, (10000,))
    norm_rel = (np.abs(qnorm(qmul(p, q)) - qnorm(p) * qnorm(q))
                / np.maximum(qnorm(p) * qnorm(q), 1e-300)).max()
    out.append(_record("norm-multiplicativity", "1e4 random pairs", norm_rel, 1e-13))

    worst = 0.0
    for _ in range(200):
        ax = _random_axis(rng)
        alpha, beta = rng.uniform(-6.0, 6.0, 2)
        lhs = mul(axis_exp(ax, alpha), axis_exp(ax, beta))
        rhs = axis_exp(ax, alpha + beta)
        worst = max(worst, float(np.abs(lhs.array - rhs.array).max()))
    out.append(_record("same-axis-exponential-addition", "200 random axes/angles",
                       worst, 1e-13))

    worst = 0.0
    for _ in range(100):
        ax = _random_axis(rng)
        sq = mul(inv_sqrt_unit(ax).inverse(), inv_sqrt_unit(ax).inverse())
        worst = max(worst, float(np.abs(sq.array - ax.quaternion.array).max()))
    out.append(_record("inverse-sqrt-squares-to-axis", "100 random axes", worst, 1e-14))

    worst = 0.0
    for _ in range(200):
        qq = Quaternion.from_array(rng.uniform(-1, 1, 4))
        if qq.norm() < 1e-3:
            continue
        mag, ax, ang = polar(qq, fallback_axis=UNIT_I)
        rec = mag * axis_exp(ax, ang)
        worst = max(worst, float(np.abs(rec.array - qq.array).max()))
    out.append(_record("polar-reconstruction", "200 random quaternions", worst, 1e-13))

    worst = 0.0
    for _ in range(200):
        qq = Quaternion.from_array(rng.uniform(-1, 1, 4))
        if qq.norm() < 1e-3:
            continue
        got = qq * qq.inverse()
        worst = max(worst, float(np.abs(got.array - np.array([1, 0, 0, 0])).max()))
    out.append(_record("inverse-identity", "200 random quaternions", worst, 1e-14))
    return out


def _conj(arr):
    out = arr.copy()
    out[..., 1:] *= -1.0
    return out


# ---------------------------------------------------------------------------

def qft_checks(seed: int):
    rng = np.random.default_rng(seed)
    out = []

    tg = Grid2D.centered(16, 4.0)
    f = QField(tg, _random_quat(rng, (16, 16)))
    plan = QftPlan.forward(tg)
    diff = qnorm(qft_fast_ij(f, plan).samples - qft_direct(f, plan).samples).max()
    out.append(_record("fast-equals-direct", "random 16^2 field", diff, 1e-10))

    g64 = Grid2D.centered(64, 14.0)
    gau = synth_gaussian(g64, 0.7, 1.1, (1.0, 0.4), (0.8, -0.3), UNIT_I, UNIT_J)
    plan64 = QftPlan.forward(g64)
    quartet = qft_quartet(gau, plan64)
    ratio = quartet_l2_norm(quartet) ** 2 / (4 * math.pi ** 2 * l2_norm(gau) ** 2)
    out.append(_record("plancherel-4pi2", "gaussian 64^2, axes (i, j)",
                       abs(ratio - 1.0), 1e-6))

    lam, mu = _random_axis(rng), _random_axis(rng)
    plan_gen = QftPlan.forward(g64, lam, mu)
    quartet = qft_quartet(gau, plan_gen)
    ratio = quartet_l2_norm(quartet) ** 2 / (4 * math.pi ** 2 * l2_norm(gau) ** 2)
    out.append(_record("plancherel-4pi2-random-axes", "gaussian 64^2, random axes",
                       abs(ratio - 1.0), 1e-6))

    F = qft_fast_ij(gau, plan64)
    back = iqft(F, plan64.inverted())
    rel = qnorm(back.samples - gau.samples).max() / qnorm(gau.samples).max()
    out.append(_record("inversion-round-trip", "gaussian 64^2", rel, 1e-7))

    # dilation: F{f(k1 t1, k2 t2)}(w) = (1/(k1 k2)) F{f}(w1/k1, w2/k2),
    # evaluated on a fine central w-grid so both output grids stay resolved
    g128 = Grid2D.centered(128, 20.0)
    du = 2.0 * math.pi / 20.0
    base = synth_gaussian(g128, 1.0, 1.0, (1.0, 0.3), (1.0, 0.0), UNIT_I, UNIT_J)
    worst = 0.0
    for k1, k2 in ((2.0, 2.0), (0.5, 2.0)):
        scaled = synth_gaussian(g128, k1 ** 2, k2 ** 2, (1.0, 0.3), (1.0, 0.0),
                                UNIT_I, UNIT_J)
        wgrid = Grid2D(64, 64, 0.0, 0.0, du / 2.0, du / 2.0)
        lhs = qft_direct(scaled, QftPlan(g128, wgrid, UNIT_I, UNIT_J))
        over_k = Grid2D(64, 64, 0.0, 0.0, du / (2.0 * k1), du / (2.0 * k2))
        rhs = qft_direct(base, QftPlan(g128, over_k, UNIT_I, UNIT_J))
        diff = qnorm(lhs.samples - rhs.samples / (k1 * k2)).max()
        worst = max(worst, diff / qnorm(lhs.samples).max())
    out.append(_record("dilation-identity", "k in {1/2, 2}, 128^2", worst, 1e-7))

    g192 = Grid2D.centered(192, 9.0)
    gau2 = synth_gaussian(g192, 1.0, 1.0)
    rep = derivative_identity_check(gau2, QftPlan.forward(g192), 1, 0)
    out.append(_record("derivative-identity-m1", "gaussian 192^2", rep.relerr, 1e-5))
    rep = derivative_identity_check(gau2, QftPlan.forward(g192), 0, 1)
    out.append(_record("derivative-identity-n1", "gaussian 192^2", rep.relerr, 1e-5))

    f2 = QField(tg, _random_quat(rng, (16, 16)))
    a, b = 0.7, -1.3
    lin_lhs = qft_fast_ij(QField(tg, a * f.samples + b * f2.samples), plan)
    lin_rhs = (a * qft_fast_ij(f, plan).samples + b * qft_fast_ij(f2, plan).samples)
    scale = qnorm(lin_rhs).max()
    out.append(_record("real-linearity", "random 16^2 fields",
                       qnorm(lin_lhs.samples - lin_rhs).max() / scale, 1e-12))
    return out


# ---------------------------------------------------------------------------

def qolct_checks(seed: int):
    rng = np.random.default_rng(seed)
    out = []

    tg = Grid2D.centered(16, 4.0)
    worst = 0.0
    for _ in range(3):
        A1 = random_offset_params(rng)
        A2 = random_offset_params(rng)
        plan = QolctPlan.create(A1, A2, input_grid=tg)
        f = QField(tg, _random_quat(rng, (16, 16)))
        diff = qnorm(qolct_forward(f, plan).samples
                     - qolct_direct(f, plan).samples).max()
        worst = max(worst, diff)
    out.append(_record("forward-equals-direct", "3 random parameter sets, 16^2",
                       worst, 1e-9))

    # 128^2 at extent 14 satisfies the chirp bound for every in-range draw
    g128p = Grid2D.centered(128, 14.0)
    gau128p = synth_gaussian(g128p, 0.8, 1.2, (1.0, 0.5), (0.7, -0.4),
                             UNIT_I, UNIT_J)
    worst = 0.0
    for _ in range(2):
        plan = QolctPlan.create(random_offset_params(rng), random_offset_params(rng),
                                input_grid=g128p)
        ratio = quartet_l2_norm(qolct_quartet(gau128p, plan)) / l2_norm(gau128p)
        worst = max(worst, abs(ratio - 1.0))
    out.append(_record("quartet-plancherel", "2 random parameter sets, 128^2",
                       worst, 1e-6))

    g64 = Grid2D.centered(64, 14.0)
    gau = synth_gaussian(g64, 0.8, 1.2, (1.0, 0.5), (0.7, -0.4), UNIT_I, UNIT_J)
    A1 = OffsetParams(1.0, 1.0, 1.0, 2.0, 0.3, -0.2)
    A2 = OffsetParams(0.5, 1.5, -0.4, 0.8, -0.1, 0.4)
    plan = QolctPlan.create(A1, A2, input_grid=g64)
    F = qolct_forward(gau, plan)
    back = qolct_inverse(F, plan)
    rel = qnorm(back.samples - gau.samples).max() / qnorm(gau.samples).max()
    out.append(_record("inversion-round-trip", "general params, 64^2", rel, 1e-7))

    qft_case = OffsetParams.qft_case()
    planq = QolctPlan.create(qft_case, qft_case, input_grid=g64)
    O = qolct_forward(gau, planq)
    Fq = qft_fast_ij(gau, QftPlan.forward(g64))
    pred = qmul(qmul(inv_sqrt_unit(UNIT_I).array, Fq.samples),
                inv_sqrt_unit(UNIT_J).array) / (2.0 * math.pi)
    out.append(_record("qft-reduction", "A = (0,1,-1,0|0,0) both axes",
                       qnorm(O.samples - pred).max(), 1e-10))

    # independent QLCT quadrature (no offset machinery) at tau = eta = 0
    tg12 = Grid2D.centered(12, 4.0)
    A1z = OffsetParams(A1.a, A1.b, A1.c, A1.d, 0.0, 0.0)
    A2z = OffsetParams(A2.a, A2.b, A2.c, A2.d, 0.0, 0.0)
    planz = QolctPlan.create(A1z, A2z, input_grid=tg12)
    f12 = QField(tg12, _random_quat(rng, (12, 12)))
    got = qolct_forward(f12, planz)
    ref = _qlct_reference(f12, A1z, A2z, planz.output_grid)
    out.append(_record("qlct-reduction", "tau = eta = 0 vs independent QLCT",
                       qnorm(got.samples - ref).max(), 1e-10))

    rep = shift_covariance_check(gau, planq, (0.5, 0.0))
    out.append(_record("shift-covariance-qft-case", "k = (0.5, 0)", rep.maxerr, 1e-6))
    rep = shift_covariance_check(gau, plan, (0.4, -0.3))
    out.append(_record("shift-covariance-general", "k = (0.4, -0.3)", rep.maxerr, 1e-6))
    rep = modulation_covariance_check(gau, planq, (1.0, 0.0))
    out.append(_record("modulation-covariance-qft-case", "xi = (1, 0)",
                       rep.maxerr, 1e-6))
    rep = modulation_covariance_check(gau, plan, (0.8, 0.6))
    out.append(_record("modulation-covariance-general", "xi = (0.8, 0.6)",
                       rep.maxerr, 1e-6))

    ident = OffsetParams(1.0, 0.0, 0.0, 1.0)
    plan_id = QolctPlan.create(ident, ident, input_grid=g64)
    got = qolct_degenerate(gau, plan_id, "both_zero")
    out.append(_record("degenerate-identity", "b = 0, identity matrices",
                       qnorm(got.samples - gau.samples).max(), 1e-12))

    g128 = Grid2D.centered(128, 14.0)
    gau128 = synth_gaussian(g128, 0.5, 0.8, (1.0, 0.5), (0.7, -0.4), UNIT_I, UNIT_J)
    plan128 = QolctPlan.create(A1, A2, input_grid=g128)
    rep = moment_identity_check(gau128, plan128, 1)
    out.append(_record("moment-identity-axis1", "gaussian 128^2", rep.relerr, 5e-4))
    rep = moment_identity_check(gau128, plan128, 2)
    out.append(_record("moment-identity-axis2", "gaussian 128^2", rep.relerr, 5e-4))

    decay = qnorm(F.samples)
    n_edge = max(
        decay[:2].max(), decay[-2:].max(), decay[:, :2].max(), decay[:, -2:].max())
    out.append(_record("transform-decay", "edge vs peak modulus",
                       n_edge / decay.max(), 1e-3))
    return out


def _qlct_reference(f: QField, A1: OffsetParams, A2: OffsetParams,
                    ugrid: Grid2D) -> np.ndarray:
    """Independently coded QLCT kernel quadrature (tau = eta = 0 form)."""
    t1 = f.grid.axis_coords(1)
    t2 = f.grid.axis_coords(2)
    u1 = ugrid.axis_coords(1)
    u2 = ugrid.axis_coords(2)
    th1 = ((A1.a * t1[None, :] ** 2 - 2 * t1[None, :] * u1[:, None]
            + A1.d * u1[:, None] ** 2) / (2 * A1.b) - math.pi / 4)
    th2 = ((A2.a * t2[:, None] ** 2 - 2 * t2[:, None] * u2[None, :]
            + A2.d * u2[None, :] ** 2) / (2 * A2.b) - math.pi / 4)
    k1 = np.exp(1j * th1) / math.sqrt(2 * math.pi * A1.b)
    k2 = np.exp(1j * th2) / math.sqrt(2 * math.pi * A2.b)
    left = plane_to_quat(k1, UNIT_I)      # (n_u1, n_t1, 4)
    right = plane_to_quat(k2, UNIT_J)     # (n_t2, n_u2, 4)
    acc = np.zeros((u1.size, u2.size, 4))
    for q1 in range(u1.size):
        mid = qmul(left[q1][:, None, :], f.samples)        # (n_t1, n_t2, 4)
        for q2 in range(u2.size):
            term = qmul(mid, right[:, q2][None, :, :])
            acc[q1, q2] = term.sum(axis=(0, 1))
    return acc * f.grid.cell_area


# ---------------------------------------------------------------------------

def oracle_checks(seed: int):
    rng = np.random.default_rng(seed)
    out = []

    spec = GaussianSpec(1.0, 0.5, 1.0, 0.4, 0.6, -0.3)
    A1 = OffsetParams(1.0, 1.0, 1.0, 2.0, 0.3, -0.2)
    A2 = OffsetParams(1.0, 1.0, 1.0, 2.0, 0.3, -0.2)
    g = Grid2D.centered(48, 10.0)
    f = synth_gaussian(g, spec.alpha1, spec.alpha2, (spec.beta11, spec.beta12),
                       (spec.beta21, spec.beta22), UNIT_I, UNIT_J)
    plan = QolctPlan.create(A1, A2, input_grid=g)
    got = qolct_direct(f, plan)
    want = gaussian_qolct_closed_form_field(spec, A1, A2, UNIT_I, UNIT_J,
                                            plan.output_grid)
    rel = qnorm(got.samples - want.samples).max() / qnorm(want.samples).max()
    out.append(_record("closed-form-vs-direct", "general params, 48^2", rel, 1e-6))

    g128 = Grid2D.centered(128, 16.0)
    spec2 = GaussianSpec(0.9, 0.6, 0.8, -0.5, 1.0, 0.7)
    A1b = random_offset_params(rng, max_chirp_ratio=1.5)
    A2b = random_offset_params(rng, max_chirp_ratio=1.5)
    f2 = synth_gaussian(g128, spec2.alpha1, spec2.alpha2,
                        (spec2.beta11, spec2.beta12), (spec2.beta21, spec2.beta22),
                        UNIT_I, UNIT_J)
    plan2 = QolctPlan.create(A1b, A2b, input_grid=g128)
    got = qolct_forward(f2, plan2)
    want = gaussian_qolct_closed_form_field(spec2, A1b, A2b, UNIT_I, UNIT_J,
                                            plan2.output_grid)
    rel = qnorm(got.samples - want.samples).max() / qnorm(want.samples).max()
    out.append(_record("closed-form-vs-forward", "random params, 128^2", rel, 1e-6))

    # |O| factors as (unit phases) * roots * envelope, so the modulus must
    # peak exactly at u = tau and stay strictly positive
    from .oracle import gaussian_qolct_closed_form

    peak = gaussian_qolct_closed_form(spec2, A1b, A2b, UNIT_I, UNIT_J,
                                      (A1b.tau, A2b.tau)).norm()
    mod = want.modulus()
    defect = max(float(mod.max()) / peak - 1.0, 0.0)
    if float(mod.min()) <= 0.0:
        defect = 1.0
    out.append(_record("envelope-peak-at-offset", "modulus peaks at u = tau, > 0",
                       defect, 1e-12))

    z = Quaternion(1.0, 0.0, 0.6, 0.0)
    zp = Quaternion(0.3, 0.0, -0.4, 0.0)
    got = gaussian_integral_complex_offset(z, zp)
    t = np.linspace(-30.0, 30.0, 600001)
    zc = complex(1.0, 0.6)
    zpc = complex(0.3, -0.4)
    ref = np.trapezoid(np.exp(-zc * (t + zpc) ** 2), t)
    refq = plane_to_quat(np.asarray(ref), UNIT_J)
    out.append(_record("offset-gaussian-integral", "z = 1 + 0.6j (j-plane)",
                       float(np.abs(got.array - refq).max()), 1e-10))
    return out


# ---------------------------------------------------------------------------

def uncertainty_checks(seed: int):
    rng = np.random.default_rng(seed)
    out = []

    xs = np.linspace(0.25, 10.0, 40)
    rec = max(abs(gamma_fn(x + 1.0) - x * gamma_fn(x)) / (x * gamma_fn(x))
              for x in xs)
    out.append(_record("gamma-recurrence", "x in [0.25, 10]", rec, 1e-13))
    out.append(_record("gamma-half", "Gamma(1/2) = sqrt(pi)",
                       abs(gamma_fn(0.5) - math.sqrt(math.pi)), 1e-14))

    h = 1e-6
    dnum = (math.log(gamma_fn(0.5 + h)) - math.log(gamma_fn(0.5 - h))) / (2 * h)
    out.append(_record("log-constant-cross-check",
                       "digamma vs numerical d/dx log Gamma at 1/2",
                       abs((math.log(2.0) + dnum) - LOG_UP_CONSTANT), 1e-8))
    out.append(_record("pitt-constant-continuity", "C_alpha -> 4 pi^2",
                       abs(pitt_constants(1e-6).C - 4 * math.pi ** 2), 1e-3))

    g = Grid2D.centered(64, 14.0)
    f = synth_gaussian(g, 0.5, 0.5)
    A1 = OffsetParams(1.0, 1.0, 1.0, 2.0, 0.3, -0.2)
    A2 = OffsetParams(0.5, 1.5, -0.4, 0.8, -0.1, 0.4)
    plan = QolctPlan.create(A1, A2, input_grid=g)
    planq = QolctPlan.create(OffsetParams.qft_case(), OffsetParams.qft_case(),
                             input_grid=g)

    rep = pitt_check(f, planq, 0.0)
    out.append(_record("pitt-equality-alpha0", "gaussian, alpha = 0",
                       abs(rep.slack) / rep.rhs, 1e-6))
    worst = 0.0
    for alpha in (0.5, 1.0, 1.5):
        rep = pitt_check(f, plan, alpha)
        worst = max(worst, -rep.slack / rep.rhs)
    out.append(_record("pitt-slack-nonnegative", "alpha in {0.5, 1, 1.5}",
                       worst, 1e-6))

    rep = log_up_check(f, planq)
    out.append(_record("logup-slack-nonnegative", "gaussian, QFT case",
                       -rep.slack / rep.energy, 1e-5))

    chirped = synth_gaussian(g, 0.9, 0.7, (1.0, 0.3), (1.0, -0.5), UNIT_I, UNIT_J)
    worst = 0.0
    for sig in (f, chirped):
        for pl in (plan, planq):
            hrep = heisenberg_report(sig, pl, 1)
            worst = max(worst, (hrep.base_bound - hrep.lhs) / hrep.rhs)
    out.append(_record("heisenberg-weak-bound", "2 signals x 2 parameter sets",
                       worst, 1e-6))

    hrep = heisenberg_report(f, planq, 1)
    out.append(_record("heisenberg-classical-equality",
                       "real unit gaussian, QFT case",
                       abs(hrep.gap) / hrep.rhs, 1e-2))

    hd = hardy_report(f, planq)
    out.append(_record("hardy-critical-product", "gaussian, QFT case",
                       abs(hd.product - 0.25), 1e-3))

    g32 = Grid2D.centered(32, 10.0)
    f32 = synth_gaussian(g32, 1.0, 1.0)
    plan32 = QolctPlan.create(OffsetParams.qft_case(), OffsetParams.qft_case(),
                              input_grid=g32)
    quartet = analysis_quartet(f32, plan32)
    scaled = ComponentQuartet(tuple(
        output_in_scaled_coords(m, plan32) for m in quartet.members))
    vals = [beurling_integral(f32, scaled, 4.0, R) for R in (2.0, 4.0)]
    out.append(_record("beurling-growth-with-radius", "value(R/2) < value(R)",
                       0.0 if vals[0] < vals[1] else 1.0, 0.0))
    vals_d = [beurling_integral(f32, scaled, d, 4.0) for d in (4.0, 50.0)]
    out.append(_record("beurling-decreasing-in-d", "d = 4 vs d = 50",
                       0.0 if vals_d[1] < vals_d[0] else 1.0, 0.0))
    return out


_SUITE_FNS = {
    "algebra": algebra_checks,
    "qft": qft_checks,
    "qolct": qolct_checks,
    "oracle": oracle_checks,
    "uncertainty": uncertainty_checks,
}


def run_suite(suite: str, seed: int):
    """Run one named suite (or 'all'); returns the list of check records."""
    if suite == "all":
        records = []
        for name in SUITES:
            for rec in _SUITE_FNS[name](seed):
                rec["check"] = f"{name}:{rec['check']}"
                records.append(rec)
        return records
    if suite not in _SUITE_FNS:
        raise ValueError(f"unknown suite {suite!r}")
    records = _SUITE_FNS[suite](seed)
    for rec in records:
        rec["check"] = f"{suite}:{rec['check']}"
    return records
