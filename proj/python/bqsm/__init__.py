"""Python front end for the bqsm protocol engine."""

import json

from ._bqsm import (
    BoundViolation,
    CapacityError,
    ConfigError,
    ExperimentConfig,
    ParseError,
    ProtocolViolation,
    ball_size_bound,
    binary_entropy,
    default_ot_qubits,
    default_seed,
    game_ids,
    gf_inv,
    gf_mul,
    hamming_ball_size,
    irreducible_poly,
    ot_security_bound,
    rr_soundness_bound,
    session_protocols,
    sum_binding_oracle,
    sumcheck_claim,
    sumcheck_soundness_bound,
    toeplitz_apply,
    verify_transcript,
    weak_bc_best_analytic_bound,
)
from ._bqsm import run_game as _run_game
from ._bqsm import run_session as _run_session


def config(protocol, **params):
    """ExperimentConfig for `protocol` with the given fields set."""
    c = ExperimentConfig()
    c.protocol = protocol
    c.seed = params.pop("seed", default_seed())
    for key, value in params.items():
        if not hasattr(c, key):
            raise ConfigError(f"unknown parameter '{key}'")
        setattr(c, key, value)
    return c


def run_session(protocol, **params):
    """Returns (verdict, transcript_text, detail)."""
    return _run_session(config(protocol, **params))


def run_game(game, **params):
    """Runs a game and returns its reports as a list of dicts."""
    c = config("game-" + game, **params)
    if "strategy" not in params:
        c.strategy = ""
    return json.loads(_run_game(game, c))["games"]
