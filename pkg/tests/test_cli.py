import hashlib
import json
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qolct import Grid2D, UNIT_I, UNIT_J, synth_gaussian
from qolct.field import apply_chirp
from qolct.signalio import (
    TransformParams,
    read_csv_signal,
    read_params,
    read_signal,
    write_params,
    write_signal,
)
from qolct.olct import OffsetParams
from qolct.quat import PureUnit


def run_cli(*args, check=False):
    proc = subprocess.run([sys.executable, "-m", "qolct.cli", *args],
                          capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"cli failed ({proc.returncode}): {proc.stderr}")
    return proc


@pytest.fixture()
def qft_params(tmp_path):
    path = tmp_path / "qft.json"
    A = OffsetParams.qft_case()
    write_params(path, TransformParams(A, A, UNIT_I, UNIT_J))
    return str(path)


@pytest.fixture()
def general_params(tmp_path):
    path = tmp_path / "gen.json"
    write_params(path, TransformParams(
        OffsetParams(1.0, 1.0, 1.0, 2.0, 0.3, -0.2),
        OffsetParams(0.5, 1.5, -0.4, 0.8, -0.1, 0.4), UNIT_I, UNIT_J))
    return str(path)


# ---------------------------------------------------------------------------
# Signal file format.

def test_signal_file_layout_and_round_trip(tmp_path):
    g = Grid2D(6, 5, 0.25, -1.0, 0.5, 0.75)
    rng = np.random.default_rng(3)
    f = synth_gaussian(g, 1.0, 1.0).with_samples(rng.normal(size=(6, 5, 4)))
    path = tmp_path / "sig.qsig"
    write_signal(path, f)
    raw = path.read_bytes()
    assert len(raw) == 6 + 8 + 32 + 32 * 6 * 5
    assert raw[:6] == b"QSIG1\0"
    back = read_signal(path)
    assert back.grid == g
    assert np.array_equal(back.samples, f.samples)
    # write-after-read is byte identical
    path2 = tmp_path / "sig2.qsig"
    write_signal(path2, back)
    assert hashlib.sha256(path2.read_bytes()).hexdigest() == \
        hashlib.sha256(raw).hexdigest()


@given(
    n1=st.integers(min_value=1, max_value=7),
    n2=st.integers(min_value=1, max_value=7),
    data=st.data(),
)
@settings(max_examples=40, deadline=None)
def test_signal_file_round_trip_property(tmp_path_factory, n1, n2, data):
    samples = data.draw(arrays(np.float64, (n1, n2, 4),
                               elements=st.floats(-1e12, 1e12, width=64)))
    from qolct.field import QField
    g = Grid2D(n1, n2, 0.125, -3.0, 0.5, 0.25)
    f = QField(g, samples)
    path = tmp_path_factory.mktemp("sig") / "roundtrip.qsig"
    write_signal(path, f)
    back = read_signal(path)
    assert back.grid == g
    assert np.array_equal(back.samples, f.samples)


def test_signal_file_rejects_corruption(tmp_path):
    g = Grid2D(4, 4)
    path = tmp_path / "sig.qsig"
    write_signal(path, synth_gaussian(g, 1.0, 1.0))
    raw = bytearray(path.read_bytes())
    raw[0] = ord("X")
    bad = tmp_path / "bad.qsig"
    bad.write_bytes(bytes(raw))
    with pytest.raises(ValueError):
        read_signal(bad)
    truncated = tmp_path / "trunc.qsig"
    truncated.write_bytes(path.read_bytes()[:100])
    with pytest.raises(ValueError):
        read_signal(truncated)


def test_params_round_trip_and_validation(tmp_path):
    path = tmp_path / "p.json"
    params = TransformParams(
        OffsetParams(1.0, 1.0, 1.0, 2.0, 0.3, -0.2),
        OffsetParams(0.5, 1.5, -0.4, 0.8, -0.1, 0.4),
        PureUnit(1, 1, 0), UNIT_J)
    write_params(path, params)
    back = read_params(path)
    assert back.A1 == params.A1
    assert np.allclose([back.lam.x, back.lam.y, back.lam.z],
                       [params.lam.x, params.lam.y, params.lam.z], atol=1e-15)

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "A1": {"a": 1, "b": 1, "c": 1, "d": 5},
        "A2": {"a": 0, "b": 1, "c": -1, "d": 0},
        "lambda": [1, 0, 0], "mu": [0, 1, 0]}))
    with pytest.raises(ValueError):
        read_params(bad)
    bad.write_text(json.dumps({
        "A1": {"a": 0, "b": 1, "c": -1, "d": 0},
        "A2": {"a": 0, "b": 1, "c": -1, "d": 0},
        "lambda": [0, 0, 0], "mu": [0, 1, 0]}))
    with pytest.raises(ValueError):
        read_params(bad)


def test_csv_import(tmp_path):
    path = tmp_path / "sig.csv"
    t = np.linspace(-2.0, 2.0, 9)
    lines = ["t1,t2,q0,q1,q2,q3"]
    for a in t:
        for b in t:
            lines.append(f"{a},{b},{np.exp(-a*a-b*b)},0.5,0,-1")
    path.write_text("\n".join(lines) + "\n")
    f = read_csv_signal(path)
    assert (f.grid.n1, f.grid.n2) == (9, 9)
    assert f.grid.spacing1 == pytest.approx(0.5)
    assert f.grid.center1 == pytest.approx(0.0)

    # dropping one row leaves an incomplete grid
    path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(ValueError):
        read_csv_signal(path)
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ValueError):
        read_csv_signal(path)


# ---------------------------------------------------------------------------
# Subcommands and exit codes.

def test_synth_peak_value(tmp_path):
    out = str(tmp_path / "f.qsig")
    proc = run_cli("synth", "gaussian", "--n", "64", "--extent", "16",
                   "--alpha1", "1", "--alpha2", "1", "--out", out, check=True)
    assert "64x64" in proc.stdout
    f = read_signal(out)
    h = 16.0 / 64
    # cell-centered grid: the four center cells carry e^{-2 (h/2)^2}
    want = np.exp(-2.0 * (h / 2) ** 2)
    assert f.modulus().max() == pytest.approx(want, rel=1e-12)

    zero = str(tmp_path / "z.qsig")
    run_cli("synth", "gaussian", "--n", "16", "--extent", "4",
            "--beta11", "0", "--beta21", "0", "--out", zero, check=True)
    assert np.abs(read_signal(zero).samples).max() == 0.0


def test_transform_forward_inverse_cycle(tmp_path, qft_params):
    sig = str(tmp_path / "f.qsig")
    run_cli("synth", "gaussian", "--n", "64", "--extent", "16",
            "--alpha1", "0.5", "--alpha2", "0.5", "--out", sig, check=True)
    fwd = str(tmp_path / "F.qsig")
    run_cli("transform", "--in", sig, "--params", qft_params, "--out", fwd,
            check=True)
    sidecar = json.loads((tmp_path / "F.qsig.json").read_text())
    assert sidecar["plancherel_ratio"] == pytest.approx(1.0, abs=1e-6)
    assert sidecar["direction"] == "forward"

    back = str(tmp_path / "back.qsig")
    run_cli("transform", "--in", fwd, "--params", qft_params, "--inverse",
            "--out", back, "--reference", sig, check=True)
    sidecar = json.loads((tmp_path / "back.qsig.json").read_text())
    assert sidecar["l2_rel_distance_to_reference"] <= 1e-7

    # zero input -> zero output
    zero = str(tmp_path / "zero.qsig")
    run_cli("synth", "gaussian", "--n", "32", "--extent", "8",
            "--beta11", "0", "--beta21", "0", "--out", zero, check=True)
    zout = str(tmp_path / "zout.qsig")
    run_cli("transform", "--in", zero, "--params", qft_params, "--out", zout,
            check=True)
    assert np.abs(read_signal(zout).samples).max() == 0.0


def test_transform_exit_codes(tmp_path, qft_params, general_params):
    sig = str(tmp_path / "f.qsig")
    run_cli("synth", "gaussian", "--n", "16", "--extent", "16",
            "--alpha1", "0.2", "--alpha2", "0.2", "--out", sig, check=True)

    # missing input: I/O failure
    proc = run_cli("transform", "--in", str(tmp_path / "nope.qsig"),
                   "--params", qft_params, "--out", str(tmp_path / "o.qsig"))
    assert proc.returncode == 3

    # invalid params: usage error
    bad = tmp_path / "bad.json"
    bad.write_text('{"A1": {"a": 1, "b": 1, "c": 1, "d": 5}, '
                   '"A2": {"a": 0, "b": 1, "c": -1, "d": 0}, '
                   '"lambda": [1,0,0], "mu": [0,1,0]}')
    proc = run_cli("transform", "--in", sig, "--params", str(bad),
                   "--out", str(tmp_path / "o.qsig"))
    assert proc.returncode == 2

    # unresolved chirp on a coarse grid: numerical precondition, named bound
    chirpy = tmp_path / "chirpy.json"
    chirpy.write_text('{"A1": {"a": 2.0, "b": 0.5, "c": 1.0, "d": 0.75}, '
                      '"A2": {"a": 0, "b": 1, "c": -1, "d": 0}, '
                      '"lambda": [1,0,0], "mu": [0,1,0]}')
    proc = run_cli("transform", "--in", sig, "--params", str(chirpy),
                   "--out", str(tmp_path / "o.qsig"))
    assert proc.returncode == 4
    assert "chirp resolution" in proc.stderr

    # unknown flag: argparse usage error
    proc = run_cli("transform", "--bogus")
    assert proc.returncode == 2


def test_degenerate_branch_cli(tmp_path):
    sig = str(tmp_path / "f.qsig")
    run_cli("synth", "gaussian", "--n", "48", "--extent", "12",
            "--alpha1", "1", "--alpha2", "1", "--out", sig, check=True)
    params = tmp_path / "deg.json"
    params.write_text('{"A1": {"a": 1, "b": 0, "c": 0, "d": 1}, '
                      '"A2": {"a": 1, "b": 0, "c": 0, "d": 1}, '
                      '"lambda": [1,0,0], "mu": [0,1,0]}')
    out = str(tmp_path / "o.qsig")
    run_cli("transform", "--in", sig, "--params", str(params),
            "--branch", "both_zero", "--out", out, check=True)
    got = read_signal(out)
    want = read_signal(sig)
    assert np.abs(got.samples - want.samples).max() <= 1e-12


def test_verify_exit_codes_and_mutations(tmp_path):
    report = str(tmp_path / "v.json")
    proc = run_cli("verify", "algebra", "--seed", "5", "--json", report)
    assert proc.returncode == 0
    doc = json.loads((tmp_path / "v.json").read_text())
    assert doc["n_failed"] == 0
    assert all(rec["pass"] for rec in doc["checks"])

    for name in ("right-kernel-sign", "iqft-scale", "chirp-sign"):
        proc = run_cli("verify", "all", "--seed", "5", "--mutate", name,
                       "--json", str(tmp_path / f"m-{name}.json"))
        assert proc.returncode == 1, name
        doc = json.loads((tmp_path / f"m-{name}.json").read_text())
        assert doc["n_failed"] >= 1


def test_algebra_suite_is_fast():
    # the algebra suite runs no transform computation
    import time
    from qolct.verify import run_suite
    t0 = time.perf_counter()
    records = run_suite("algebra", 3)
    assert time.perf_counter() - t0 < 1.0
    assert all(r["pass"] for r in records)


def test_verify_deterministic_given_seed(tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    run_cli("verify", "qft", "--seed", "11", "--json", a, check=True)
    run_cli("verify", "qft", "--seed", "11", "--json", b, check=True)
    da = json.loads((tmp_path / "a.json").read_text())
    db = json.loads((tmp_path / "b.json").read_text())
    da.pop("timestamp")
    db.pop("timestamp")
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)


def test_uncertainty_subcommand(tmp_path, qft_params):
    sig = str(tmp_path / "f.qsig")
    run_cli("synth", "gaussian", "--n", "64", "--extent", "16",
            "--alpha1", "0.5", "--alpha2", "0.5", "--out", sig, check=True)

    out = str(tmp_path / "h.json")
    run_cli("uncertainty", "--in", sig, "--params", qft_params,
            "--which", "heisenberg", "--json", out, check=True)
    doc = json.loads((tmp_path / "h.json").read_text())
    assert abs(doc["axes"][0]["relative_gap"]) <= 1e-2  # classical minimizer

    out = str(tmp_path / "p.json")
    tsv = str(tmp_path / "p.tsv")
    run_cli("uncertainty", "--in", sig, "--params", qft_params,
            "--which", "pitt", "--alpha", "0", "--json", out, "--tsv", tsv,
            check=True)
    doc = json.loads((tmp_path / "p.json").read_text())
    assert abs(doc["slack"]) <= 1e-6 * doc["rhs"]
    rows = [line.split("\t") for line in
            (tmp_path / "p.tsv").read_text().strip().splitlines()]
    assert rows[0] == ["alpha", "lhs", "rhs", "slack"]
    assert len(rows) == 9  # header + alpha sweep 0..1.75

    out = str(tmp_path / "l.json")
    run_cli("uncertainty", "--in", sig, "--params", qft_params,
            "--which", "logup", "--json", out, check=True)
    doc = json.loads((tmp_path / "l.json").read_text())
    assert doc["A"] == pytest.approx(-1.2703628454614782, abs=1e-12)
    assert doc["slack"] >= -1e-5 * doc["energy"]

    # pitt/logup reject non-(i, j) axes with a usage error
    tilted = tmp_path / "tilted.json"
    tilted.write_text('{"A1": {"a": 0, "b": 1, "c": -1, "d": 0}, '
                      '"A2": {"a": 0, "b": 1, "c": -1, "d": 0}, '
                      '"lambda": [1,1,0], "mu": [0,1,0]}')
    proc = run_cli("uncertainty", "--in", sig, "--params", str(tilted),
                   "--which", "logup")
    assert proc.returncode == 2

    out = str(tmp_path / "b.json")
    run_cli("uncertainty", "--in", sig, "--params", qft_params,
            "--which", "beurling", "--d", "4", "--json", out, check=True)
    doc = json.loads((tmp_path / "b.json").read_text())
    assert doc["growth_ratio"] > 1.0


def test_uncertainty_hardy_tsv(tmp_path, qft_params):
    sig = str(tmp_path / "f.qsig")
    run_cli("synth", "gaussian", "--n", "64", "--extent", "16",
            "--alpha1", "0.5", "--alpha2", "0.5", "--out", sig, check=True)
    out = str(tmp_path / "hd.json")
    tsv = str(tmp_path / "hd.tsv")
    run_cli("uncertainty", "--in", sig, "--params", qft_params,
            "--which", "hardy", "--json", out, "--tsv", tsv, check=True)
    doc = json.loads((tmp_path / "hd.json").read_text())
    assert doc["product"] == pytest.approx(0.25, abs=1e-3)
    lines = (tmp_path / "hd.tsv").read_text().strip().splitlines()
    assert lines[0] == "domain\tr2\tlog_modulus"
    assert any(line.startswith("transform\t") for line in lines[1:])


def test_chirped_synth_and_csv_transform(tmp_path, qft_params):
    out = str(tmp_path / "cg.qsig")
    run_cli("synth", "chirped-gaussian", "--n", "32", "--extent", "12",
            "--alpha1", "0.8", "--alpha2", "0.8", "--chirp1", "0.4",
            "--chirp2", "-0.2", "--out", out, check=True)
    got = read_signal(out)
    g = Grid2D.centered(32, 12.0)
    want = apply_chirp(synth_gaussian(g, 0.8, 0.8),
                       UNIT_I, 0.0, 0.4, UNIT_J, 0.0, -0.2)
    assert np.abs(got.samples - want.samples).max() <= 1e-15

    csv = tmp_path / "sig.csv"
    t = np.linspace(-3.5, 3.5, 8)
    lines = ["t1,t2,q0,q1,q2,q3"]
    for a in t:
        for b in t:
            lines.append(f"{a},{b},{np.exp(-a*a-b*b)},0,0,0")
    csv.write_text("\n".join(lines) + "\n")
    run_cli("transform", "--in", str(csv), "--csv", "--params", qft_params,
            "--out", str(tmp_path / "o.qsig"), check=True)
