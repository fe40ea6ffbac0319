"""Exact best responses and dynamics for network formation games with attack and immunization."""

from ._core import (
    Adversary,
    Game,
    InstanceTooLarge,
    NetformError,
    Strategy,
    best_response,
    gen_erdos_renyi,
    gen_gnm_connected,
    is_nash_equilibrium,
    meta_tree,
    oracle_best_response,
    run_dynamics,
)

__all__ = [
    "Adversary",
    "Game",
    "InstanceTooLarge",
    "NetformError",
    "Strategy",
    "best_response",
    "gen_erdos_renyi",
    "gen_gnm_connected",
    "is_nash_equilibrium",
    "meta_tree",
    "oracle_best_response",
    "run_dynamics",
]
