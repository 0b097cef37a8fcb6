import itertools
import json
import os
import subprocess

import numpy as np
import pytest

import bqsm


def hadamard(n):
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
    out = np.ones((1, 1))
    for _ in range(n):
        out = np.kron(out, h)
    return out


def ball_projector(n, center, radius):
    diag = [1.0 if bin(x ^ center).count("1") <= radius else 0.0 for x in range(1 << n)]
    return np.diag(diag)


def numpy_sum_binding_norm(n, radius, x0, x1):
    h = hadamard(n)
    l0 = ball_projector(n, x0, radius)
    l1 = h @ ball_projector(n, x1, radius) @ h
    return np.linalg.norm(l0 @ l1, ord=2)


@pytest.mark.parametrize("n,radius", [(3, 0), (4, 0), (4, 1), (5, 1), (6, 1)])
def test_sum_binding_norm_matches_numpy(n, radius):
    rng = np.random.default_rng(n * 10 + radius)
    for _ in range(6):
        x0, x1 = (int(v) for v in rng.integers(0, 1 << n, size=2))
        got = bqsm.sum_binding_oracle(n, radius, x0, x1)
        assert got["norm"] == pytest.approx(numpy_sum_binding_norm(n, radius, x0, x1), abs=1e-9)
        assert 1 + got["norm"] <= got["chain_bound"] + 1e-9


def test_sum_binding_exact_match_ball():
    assert bqsm.sum_binding_oracle(4, 0, 5, 12)["norm"] == pytest.approx(0.25)


def test_toeplitz_matches_numpy():
    rng = np.random.default_rng(1)
    for in_len, out_len in [(6, 2), (33, 7), (80, 12)]:
        seed = [int(b) for b in rng.integers(0, 2, size=in_len + out_len - 1)]
        t = np.array([[seed[i - j + in_len - 1] for j in range(in_len)] for i in range(out_len)])
        for _ in range(10):
            x = [int(b) for b in rng.integers(0, 2, size=in_len)]
            expect = (t @ np.array(x)) % 2
            assert bqsm.toeplitz_apply(in_len, out_len, seed, x) == list(expect)


def clmul_mod(a, b, poly, m):
    prod = 0
    for i in range(b.bit_length()):
        if (b >> i) & 1:
            prod ^= a << i
    for i in range(prod.bit_length() - 1, m - 1, -1):
        if (prod >> i) & 1:
            prod ^= poly << (i - m)
    return prod


@pytest.mark.parametrize("m", [8, 16, 61])
def test_field_multiplication(m):
    rng = np.random.default_rng(m)
    poly = bqsm.irreducible_poly(m)
    for _ in range(100):
        a, b = (int(v) for v in rng.integers(0, 1 << min(m, 62), size=2, dtype=np.uint64))
        a &= (1 << m) - 1
        b &= (1 << m) - 1
        assert bqsm.gf_mul(m, a, b) == clmul_mod(a, b, poly, m)
        if a:
            assert bqsm.gf_mul(m, a, bqsm.gf_inv(m, a)) == 1


def test_bound_formulas():
    assert bqsm.ot_security_bound(64, 1, 10, 1) == pytest.approx(0.03125)
    assert bqsm.ot_security_bound(64, 1, 10, 4) == pytest.approx(0.125)
    assert bqsm.sumcheck_soundness_bound(4, 2, 256) == pytest.approx(1 / 32)
    assert bqsm.rr_soundness_bound(0.5, 3, 2**-20) == pytest.approx(0.5 + 9 * 2**-20)
    assert bqsm.hamming_ball_size(10, 2) == 56
    assert bqsm.ball_size_bound(10, 0.2) == pytest.approx(148.9, rel=1e-3)


def test_sumcheck_claim_brute_force():
    assert bqsm.sumcheck_claim("field 8\nvars 2\n1 1 1\n") == 1
    assert bqsm.sumcheck_claim("field 8\nvars 2\n1 0 1\n0 1 1\n") == 0


@pytest.mark.parametrize("protocol", bqsm.session_protocols())
def test_honest_sessions_replay(protocol):
    verdict, text, _ = bqsm.run_session(protocol, seed=11)
    assert verdict == "accept"
    again = bqsm.run_session(protocol, seed=11)[1]
    assert again == text
    matches, replay_verdict, _ = bqsm.verify_transcript(text)
    assert matches and replay_verdict == "accept"


def test_bad_config_raises():
    with pytest.raises(bqsm.ConfigError):
        bqsm.run_session("ot", delta=2.0)
    with pytest.raises(bqsm.ConfigError):
        bqsm.ExperimentConfig.from_json('{"bogus": 1}')
    with pytest.raises(bqsm.ParseError):
        bqsm.verify_transcript("bqsm-transcript 1\nprotocol ot\nseed x\n")


def test_config_json_round_trip():
    c = bqsm.config("nip-ham", seed=3, k=4, graph="triangle")
    assert bqsm.ExperimentConfig.from_json(c.to_json()) == c


def test_binding_game_report():
    (report,) = bqsm.run_game("binding", n=8, trials=2000, seed=2)
    rates = {a["name"]: a["rate"] for a in report["arms"]}
    assert rates["p0"] == 1.0
    assert abs(rates["p1"] - 0.75**8) < 0.03
    assert not report["broken"]


def test_ot_privacy_report():
    (report,) = bqsm.run_game("ot-privacy", n=16, trials=200, seed=3)
    assert report["within_bound"]
    assert report["empirical"] <= 0.125 + report["radius_3sigma"]


CLI = os.environ.get("BQSM_CLI")
needs_cli = pytest.mark.skipif(not CLI or not os.path.exists(CLI), reason="BQSM_CLI not set")


def cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


@needs_cli
def test_cli_exit_codes(tmp_path):
    out = tmp_path / "ot.txt"
    assert cli("ot", "--seed", "4", "--out", str(out)).returncode == 0
    assert cli("verify-transcript", str(out)).returncode == 0
    lines = out.read_text().splitlines()
    last = lines[-1].split()
    last[3] = ("0" if last[3][0] != "0" else "1") + last[3][1:]
    lines[-1] = " ".join(last)
    out.write_text("\n".join(lines) + "\n")
    assert cli("verify-transcript", str(out)).returncode == 1
    assert cli("nip-ham", "--strategy", "guessing", "--seed", "1").returncode == 1
    assert cli("ot", "--delta", "3").returncode == 3
    assert cli("teleport").returncode == 3
    assert cli("game", "binding", "--strategy", "store-everything", "--q", "8", "--trials", "50").returncode == 1
    assert cli("game", "binding", "--trials", "2000").returncode == 0


@needs_cli
def test_cli_seed_from_environment():
    env = dict(os.environ, BQSM_SEED="99")
    a = subprocess.run([CLI, "commit", "dfss", "--print-transcript"], capture_output=True, text=True, env=env)
    b = subprocess.run([CLI, "commit", "dfss", "--seed", "99", "--print-transcript"], capture_output=True, text=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "seed 99" in a.stdout


@needs_cli
def test_cli_game_json(tmp_path):
    out = tmp_path / "g.json"
    r = cli("game", "sum-binding-oracle", "--n", "4", "--delta", "0.25", "--trials", "500", "--out", str(out))
    data = json.loads(out.read_text())
    assert data["games"]
    assert r.returncode in (0, 1)
