"""Command-line front end.

Usage::

    cdiscord SUBCOMMAND --input FILE [--output FILE] [--tol T] [--seed S] [--format json|csv]

Subcommands and their input documents (JSON):

``discord``        ``{"state": STATE, "channel": CHANNEL}``
``zero-states``    ``{"channel": CHANNEL, "weights": [[...]]?, "d_A": int?}``
``zero-channels``  ``{"state": STATE}`` or a bare STATE
``min-discord``    ``{"state": STATE, "family": FAMILY, "budget": int?}``
``merge-demo``     ``{"q_points": int | [q...], "eps_points": int | [eps...]}``
``purity-check``   ``{"state": STATE}`` or a bare STATE

``STATE`` is ``{"dims": [d_A, d_B], "probs": [[...]]}``; ``CHANNEL`` is
``{"dim": d, "matrix": [[...]]}`` with ``matrix[i][j]`` the probability of
reading ``i`` given true value ``j`` (columns sum to one).

Exit status is 0 on success, 1 on parse or validation errors and 2 on
numerical failures; errors are written to stderr as a JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import serialization
from .channels import StochasticChannel, binary_symmetric
from .discord import classical_discord
from .distributions import (
    JointDistribution,
    conditional_entropy_a_given_b,
    conditional_entropy_b_given_a,
    is_conditionally_pure,
)
from .errors import DiscordError, NumericalFailure
from .merging import verify_merging_identity
from .optimizer import family_from_json, stochastic_discord
from .zero_discord import (
    ZeroDiscordState,
    make_zero_discord_state,
    random_zero_discord_state,
    stationary_family,
    zero_discord_channels,
)

COMMANDS = ("discord", "zero-states", "zero-channels", "min-discord", "merge-demo", "purity-check")
MERGE_COLUMNS = ("q", "eps", "discord_AC", "H_A_given_Cprime", "H_A_given_Bprime", "discrepancy")


@dataclass
class RunConfig:
    command: str
    input_path: str
    output_path: str | None = None
    tolerance: float = 1e-9
    seed: int = 0
    format: str = "json"


def _state(doc):
    return JointDistribution.from_json(doc["state"] if "state" in doc else doc)


def _grid(spec, hi):
    if isinstance(spec, int):
        return np.linspace(0.0, hi, spec)
    return np.asarray(spec, dtype=float)


def cmd_discord(doc, cfg):
    report = classical_discord(_state(doc), StochasticChannel.from_json(doc["channel"]), tol=cfg.tolerance)
    return report.to_json()


def cmd_zero_states(doc, cfg):
    channel = StochasticChannel.from_json(doc["channel"] if "channel" in doc else doc)
    family = stationary_family(channel)
    if doc.get("weights") is not None:
        q = np.asarray(doc["weights"], float)
        make_zero_discord_state(family, q)
        sample = ZeroDiscordState(q, family)
    else:
        sample = random_zero_discord_state(family, int(doc.get("d_A", channel.dim)), cfg.seed)
    return {"family": family.to_json(), "sample_state": sample.to_json()}


def cmd_zero_channels(doc, cfg):
    poly = zero_discord_channels(_state(doc))
    out = poly.to_json()
    if poly.state_dim <= 3:
        out["vertices"] = [v.to_json() for v in poly.vertices()]
    return out


def cmd_min_discord(doc, cfg):
    p = _state(doc)
    family = family_from_json(doc["family"], dim=p.dims[1])
    res = stochastic_discord(p, family, budget=int(doc.get("budget", 500)), seed=cfg.seed)
    return res.to_json()


def merge_table(q_points, eps_points):
    """Rows of the merging-identity sweep over BSC noise levels."""
    rows = []
    for q in q_points:
        for eps in eps_points:
            r = verify_merging_identity(float(q), binary_symmetric(float(eps)))
            rows.append({
                "q": float(q), "eps": float(eps),
                "discord_AC": r.lhs_discord_AC,
                "H_A_given_Cprime": r.mid_H_A_given_Cprime,
                "H_A_given_Bprime": r.rhs_H_A_given_Bprime,
                "discrepancy": r.max_discrepancy,
            })
    return rows


def cmd_merge_demo(doc, cfg):
    rows = merge_table(_grid(doc.get("q_points", 11), 1.0), _grid(doc.get("eps_points", 11), 0.5))
    return {"columns": list(MERGE_COLUMNS), "rows": rows}


def cmd_purity_check(doc, cfg):
    p = _state(doc)
    pure, f = is_conditionally_pure(p, tol=cfg.tolerance)
    return {
        "conditionally_pure": pure,
        "bijection": None if f is None else {str(k): v for k, v in f.items()},
        "H_A_given_B": conditional_entropy_a_given_b(p),
        "H_B_given_A": conditional_entropy_b_given_a(p),
    }


HANDLERS = {
    "discord": cmd_discord,
    "zero-states": cmd_zero_states,
    "zero-channels": cmd_zero_channels,
    "min-discord": cmd_min_discord,
    "merge-demo": cmd_merge_demo,
    "purity-check": cmd_purity_check,
}


def render(result, fmt):
    if fmt == "json":
        return serialization.dumps(result)
    if "rows" in result and "columns" in result:
        return serialization.rows_to_csv(result["rows"], result["columns"])
    return serialization.rows_to_csv([result], list(result))


def run(cfg: RunConfig):
    """Execute one command; returns ``(exit_status, text)``.

    On failure ``text`` is a JSON error object.
    """
    if cfg.command not in HANDLERS:
        return 1, _error("UnknownCommand", f"unknown command {cfg.command!r}")
    if not cfg.tolerance > 0:
        return 1, _error("InvalidConfig", "tolerance must be positive")
    try:
        with open(cfg.input_path) as fh:
            doc = json.load(fh)
        result = HANDLERS[cfg.command](doc, cfg)
    except NumericalFailure as exc:
        return 2, _error(type(exc).__name__, str(exc))
    except (DiscordError, ValueError, KeyError, TypeError, OSError) as exc:
        return 1, _error(type(exc).__name__, str(exc))
    return 0, render(result, cfg.format)


def _error(kind, message):
    return serialization.dumps({"error": kind, "message": message})


def build_parser():
    parser = argparse.ArgumentParser(prog="cdiscord", description="Classical discord under noisy readout.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--output", default=None, metavar="PATH")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.input, args.output, args.tol, args.seed, args.format)
    status, text = run(cfg)
    if status != 0:
        sys.stderr.write(text)
    elif cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status

