"""Command-line front end.

Subcommands: ``synth`` (test-signal files), ``transform`` (forward/inverse
QOLCT with a JSON sidecar), ``verify`` (invariant suites), ``uncertainty``
(inequality reports, optionally with TSV plot data).

Exit codes: 0 success, 1 verification failure, 2 usage or invalid
parameters, 3 I/O failure, 4 violated numerical preconditions.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

import numpy as np

from . import _mutation, verify as verify_mod
from .field import (
    ComponentQuartet,
    Grid2D,
    QField,
    apply_chirp,
    l2_norm,
    quartet_l2_norm,
    synth_gaussian,
)
from .olct import (
    QolctPlan,
    analysis_quartet,
    output_in_scaled_coords,
    qolct_degenerate,
    qolct_forward,
    qolct_inverse,
    qolct_quartet,
)
from .qft import PlanViolationError
from .quat import UNIT_I, UNIT_J, PureUnit
from .signalio import (
    TransformParams,
    read_csv_signal,
    read_params,
    read_signal,
    write_signal,
)
from .uncertainty import (
    beurling_integral,
    hardy_report,
    heisenberg_report,
    log_up_check,
    pitt_check,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _dump_json(doc, path=None):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_axis_flag(text: str, label: str) -> PureUnit:
    try:
        x, y, z = (float(v) for v in text.split(","))
        return PureUnit(x, y, z)
    except ValueError as exc:
        raise ValueError(f"--{label} expects three comma-separated numbers") from exc


def _grid_doc(g: Grid2D) -> dict:
    return {"n1": g.n1, "n2": g.n2, "center1": g.center1, "center2": g.center2,
            "spacing1": g.spacing1, "spacing2": g.spacing2}


def _params_doc(p: TransformParams) -> dict:
    def matrix(A):
        return {"a": A.a, "b": A.b, "c": A.c, "d": A.d, "tau": A.tau, "eta": A.eta}
    return {"A1": matrix(p.A1), "A2": matrix(p.A2),
            "lambda": [p.lam.x, p.lam.y, p.lam.z],
            "mu": [p.mu.x, p.mu.y, p.mu.z]}


def _load_signal(path: str, as_csv: bool) -> QField:
    return read_csv_signal(path) if as_csv else read_signal(path)


# ---------------------------------------------------------------------------

def cmd_synth(args) -> int:
    grid = Grid2D.centered(args.n, args.extent, (args.grid_center1, args.grid_center2))
    lam = _parse_axis_flag(args.lam, "lambda")
    mu = _parse_axis_flag(args.mu, "mu")
    f = synth_gaussian(grid, args.alpha1, args.alpha2,
                       (args.beta11, args.beta12), (args.beta21, args.beta22),
                       lam, mu, center=(args.center1, args.center2))
    if args.kind == "chirped-gaussian":
        f = apply_chirp(f, lam, args.lin1, args.chirp1, mu, args.lin2, args.chirp2)
    write_signal(args.out, f)
    peak = float(f.modulus().max())
    print(f"wrote {args.out}: {grid.n1}x{grid.n2} grid, spacing "
          f"({grid.spacing1:g}, {grid.spacing2:g}), extent "
          f"({grid.extent1:g}, {grid.extent2:g}), peak modulus {peak:.6g}")
    return EXIT_OK


def cmd_transform(args) -> int:
    f = _load_signal(args.infile, args.csv)
    params = read_params(args.params)

    if args.branch:
        plan = QolctPlan.create(params.A1, params.A2, params.lam, params.mu,
                                input_grid=f.grid)
        out_field = qolct_degenerate(f, plan, args.branch)
        ratio = None
    elif args.inverse:
        b1, b2 = params.A1.b, params.A2.b
        if b1 <= 0 or b2 <= 0:
            raise ValueError("inverse transform requires b1, b2 > 0")
        g = f.grid
        tgrid = Grid2D(g.n1, g.n2, 0.0, 0.0,
                       b1 * 2.0 * np.pi / (g.n1 * g.spacing1),
                       b2 * 2.0 * np.pi / (g.n2 * g.spacing2))
        plan = QolctPlan(params.A1, params.A2, params.lam, params.mu, tgrid, g)
        out_field = qolct_inverse(f, plan)
        ratio = None
    else:
        plan = QolctPlan.create(params.A1, params.A2, params.lam, params.mu,
                                input_grid=f.grid)
        out_field = qolct_forward(f, plan)
        quartet = qolct_quartet(f, plan)
        denom = l2_norm(f)
        ratio = quartet_l2_norm(quartet) / denom if denom > 0 else None

    write_signal(args.out, out_field)
    sidecar = {
        "direction": ("degenerate:" + args.branch if args.branch
                      else "inverse" if args.inverse else "forward"),
        "input_grid": _grid_doc(f.grid),
        "output_grid": _grid_doc(out_field.grid),
        "params": _params_doc(params),
        "l2_in": l2_norm(f),
        "l2_out": l2_norm(out_field),
        "plancherel_ratio": ratio,
        "timestamp": _timestamp(),
    }
    if args.reference:
        ref = read_signal(args.reference)
        if ref.grid != out_field.grid:
            raise ValueError("--reference grid does not match the output grid")
        num = float(np.sqrt(np.sum((out_field.samples - ref.samples) ** 2)))
        den = float(np.sqrt(np.sum(ref.samples ** 2)))
        sidecar["l2_rel_distance_to_reference"] = num / den if den else num
    _dump_json(sidecar, args.out + ".json")
    print(f"wrote {args.out} (+ sidecar {args.out}.json)")
    return EXIT_OK


def cmd_verify(args) -> int:
    with _mutation.inject(args.mutate):
        records = verify_mod.run_suite(args.suite, args.seed)
    failed = [r for r in records if not r["pass"]]
    doc = {"suite": args.suite, "seed": args.seed, "mutation": args.mutate,
           "checks": records, "n_failed": len(failed),
           "timestamp": _timestamp()}
    _dump_json(doc, args.json)
    for r in records:
        status = "PASS" if r["pass"] else "FAIL"
        print(f"[{status}] {r['check']}: observed {r['observed']:.3e} "
              f"(tolerance {r['tolerance']:.3e})")
    print(f"{len(records) - len(failed)}/{len(records)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def _radial_profile(values_sq: np.ndarray, grid: Grid2D, nbins: int = 48):
    t1, t2 = grid.meshgrid()
    r = np.sqrt(t1 ** 2 + t2 ** 2).ravel()
    v = values_sq.ravel()
    edges = np.linspace(0.0, float(r.max()), nbins + 1)
    idx = np.clip(np.digitize(r, edges) - 1, 0, nbins - 1)
    sums = np.bincount(idx, weights=v, minlength=nbins)
    counts = np.maximum(np.bincount(idx, minlength=nbins), 1)
    centers = 0.5 * (edges[:-1] + edges[1:])
    return centers, sums / counts


def cmd_uncertainty(args) -> int:
    f = _load_signal(args.infile, args.csv)
    params = read_params(args.params)
    if args.which in ("pitt", "logup"):
        if params.lam != UNIT_I or params.mu != UNIT_J:
            raise ValueError(f"{args.which} requires lambda = i and mu = j")
    plan = QolctPlan.create(params.A1, params.A2, params.lam, params.mu,
                            input_grid=f.grid)
    doc = {"which": args.which, "params": _params_doc(params),
           "grid": _grid_doc(f.grid), "timestamp": _timestamp()}
    tsv_rows = None

    if args.which == "heisenberg":
        reports = [heisenberg_report(f, plan, axis) for axis in (1, 2)]
        doc["axes"] = [{
            "axis": r.axis, "spatial_spread": r.spatial_spread,
            "spectral_spread": r.spectral_spread, "base_bound": r.base_bound,
            "cov": r.cov, "lhs": r.lhs, "rhs": r.rhs, "gap": r.gap,
            "relative_gap": r.gap / r.rhs if r.rhs else None,
        } for r in reports]
        tsv_rows = [("axis", "spatial_spread", "spectral_spread", "base_bound",
                     "cov", "lhs", "rhs", "gap")]
        tsv_rows += [(r.axis, r.spatial_spread, r.spectral_spread, r.base_bound,
                      r.cov, r.lhs, r.rhs, r.gap) for r in reports]

    elif args.which == "hardy":
        rep = hardy_report(f, plan)
        doc.update({"alpha_hat": rep.alpha_hat, "beta_hat": rep.beta_hat,
                    "product": rep.product,
                    "signal_fit_residual": rep.signal_fit.residual,
                    "transform_fit_residual": rep.transform_fit.residual})
        t1, t2 = f.grid.meshgrid()
        mod = f.modulus()
        mask = mod > 1e-6 * mod.max()
        F = qolct_forward(f, plan)
        scaled = output_in_scaled_coords(F, plan)
        v1, v2 = scaled.grid.meshgrid()
        fmod = scaled.modulus()
        fmask = fmod > 1e-6 * fmod.max()
        tsv_rows = [("domain", "r2", "log_modulus")]
        tsv_rows += [("signal", float(a), float(b)) for a, b in
                     zip((t1 ** 2 + t2 ** 2)[mask].ravel(),
                         np.log(mod[mask]).ravel())]
        tsv_rows += [("transform", float(a), float(b)) for a, b in
                     zip((v1 ** 2 + v2 ** 2)[fmask].ravel(),
                         np.log(fmod[fmask]).ravel())]

    elif args.which == "pitt":
        rep = pitt_check(f, plan, args.alpha)
        doc.update({"alpha": rep.alpha, "lhs": rep.lhs, "rhs": rep.rhs,
                    "slack": rep.slack, "C_alpha": rep.constants.C,
                    "D_alpha": rep.constants.D})
        tsv_rows = [("alpha", "lhs", "rhs", "slack")]
        for alpha in np.arange(0.0, 2.0, 0.25):
            r = pitt_check(f, plan, float(alpha))
            tsv_rows.append((r.alpha, r.lhs, r.rhs, r.slack))

    elif args.which == "logup":
        rep = log_up_check(f, plan)
        doc.update({"A": rep.constant, "lhs": rep.lhs, "rhs": rep.rhs,
                    "slack": rep.slack, "transform_term": rep.transform_term,
                    "signal_term": rep.signal_term, "energy": rep.energy})
        e2 = np.sum(f.samples ** 2, axis=-1)
        quartet = analysis_quartet(f, plan)
        scaled_members = tuple(output_in_scaled_coords(m, plan)
                               for m in quartet.members)
        squart = ComponentQuartet(scaled_members)
        r_sig, p_sig = _radial_profile(e2, f.grid)
        r_tr, p_tr = _radial_profile(squart.norm_field() ** 2, squart.grid)
        tsv_rows = [("domain", "radius", "energy_density")]
        tsv_rows += [("signal", float(a), float(b)) for a, b in zip(r_sig, p_sig)]
        tsv_rows += [("transform", float(a), float(b)) for a, b in zip(r_tr, p_tr)]

    elif args.which == "beurling":
        quartet = analysis_quartet(f, plan)
        scaled = ComponentQuartet(tuple(
            output_in_scaled_coords(m, plan) for m in quartet.members))
        radius = args.radius
        if radius is None:
            radius = 0.45 * min(f.grid.extent1, f.grid.extent2)
        full = beurling_integral(f, scaled, args.d, radius)
        half = beurling_integral(f, scaled, args.d, radius / 2.0)
        doc.update({"d": args.d, "radius": radius, "value": full,
                    "value_half_radius": half,
                    "growth_ratio": full / half if half else None})
        tsv_rows = [("radius", "value")]
        for frac in (0.25, 0.5, 0.75, 1.0):
            tsv_rows.append((radius * frac,
                             beurling_integral(f, scaled, args.d, radius * frac)))

    _dump_json(doc, args.json)
    if args.json:
        print(f"wrote {args.json}")
    if args.tsv and tsv_rows:
        with open(args.tsv, "w") as fh:
            for row in tsv_rows:
                fh.write("\t".join(str(v) for v in row) + "\n")
        print(f"wrote {args.tsv}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qolct",
        description="Two-sided quaternion Fourier / offset linear canonical "
                    "transforms on sampled 2D signals.")
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="write a synthetic test signal")
    synth.add_argument("kind", choices=["gaussian", "chirped-gaussian"])
    synth.add_argument("--n", type=int, default=64)
    synth.add_argument("--extent", type=float, default=16.0)
    synth.add_argument("--alpha1", type=float, default=1.0)
    synth.add_argument("--alpha2", type=float, default=1.0)
    synth.add_argument("--beta11", type=float, default=1.0)
    synth.add_argument("--beta12", type=float, default=0.0)
    synth.add_argument("--beta21", type=float, default=1.0)
    synth.add_argument("--beta22", type=float, default=0.0)
    synth.add_argument("--center1", type=float, default=0.0,
                       help="gaussian peak offset, axis 1")
    synth.add_argument("--center2", type=float, default=0.0)
    synth.add_argument("--grid-center1", type=float, default=0.0)
    synth.add_argument("--grid-center2", type=float, default=0.0)
    synth.add_argument("--lambda", dest="lam", default="1,0,0",
                       help="left axis as x,y,z (default i)")
    synth.add_argument("--mu", default="0,1,0", help="right axis (default j)")
    synth.add_argument("--chirp1", type=float, default=0.5,
                       help="quadratic chirp rate, axis 1 (chirped-gaussian)")
    synth.add_argument("--chirp2", type=float, default=-0.3)
    synth.add_argument("--lin1", type=float, default=0.0,
                       help="linear modulation, axis 1 (chirped-gaussian)")
    synth.add_argument("--lin2", type=float, default=0.0)
    synth.add_argument("--out", required=True)
    synth.set_defaults(func=cmd_synth)

    tr = sub.add_parser("transform", help="apply the transform to a signal file")
    tr.add_argument("--in", dest="infile", required=True)
    tr.add_argument("--params", required=True, help="JSON parameter file")
    tr.add_argument("--out", required=True)
    tr.add_argument("--inverse", action="store_true")
    tr.add_argument("--csv", action="store_true",
                    help="input is CSV with columns t1,t2,q0,q1,q2,q3")
    tr.add_argument("--branch", choices=["b1_zero", "b2_zero", "both_zero"],
                    help="evaluate a degenerate b = 0 branch")
    tr.add_argument("--reference",
                    help="signal file to compare the output against (adds "
                         "l2_rel_distance_to_reference to the sidecar)")
    tr.set_defaults(func=cmd_transform)

    ver = sub.add_parser("verify", help="run invariant check suites")
    ver.add_argument("suite", choices=list(verify_mod.SUITES) + ["all"])
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--json", help="write the JSON report here instead of stdout")
    ver.add_argument("--mutate", choices=sorted(_mutation.MUTATIONS),
                     help="arm a documented defect fixture (the suite must fail)")
    ver.set_defaults(func=cmd_verify)

    unc = sub.add_parser("uncertainty", help="uncertainty-inequality reports")
    unc.add_argument("--in", dest="infile", required=True)
    unc.add_argument("--params", required=True)
    unc.add_argument("--which", required=True,
                     choices=["heisenberg", "hardy", "pitt", "logup", "beurling"])
    unc.add_argument("--alpha", type=float, default=1.0, help="Pitt weight exponent")
    unc.add_argument("--d", type=float, default=4.0, help="Beurling denominator power")
    unc.add_argument("--radius", type=float, default=None,
                     help="Beurling truncation radius")
    unc.add_argument("--csv", action="store_true")
    unc.add_argument("--json", help="write the JSON report here instead of stdout")
    unc.add_argument("--tsv", help="write plot-ready TSV data here")
    unc.set_defaults(func=cmd_uncertainty)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (OSError, IOError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
