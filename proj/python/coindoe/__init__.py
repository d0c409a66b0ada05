"""Orbit equivalence of coinduced actions over free products.

Reports come back as plain dicts with the same layout as the CLI's JSON files.
"""

import json

from ._core import (
    BudgetExceeded,
    CocycleInconsistent,
    CoindoeError,
    Config,
    Context,
    InvalidSpace,
    NotAGroup,
    NotAProductSpace,
    NotFree,
    NotHomomorphism,
    NotMeasurePreserving,
    OrbitMismatch,
    ParseError,
    PreimageMismatch,
    Scenario,
    TruncationExceeded,
    entropy,
    load_scenario,
    parse_scenario,
)

SUITES = ("cocycle", "bijectivity", "inverse", "orbit", "locality", "pushforward")


def run_suite(ctx, name, depth=1, configs=100, seed=0, mode="auto",
              samples=100_000, tv_marginal=0.02, tv_pair=0.03):
    """Runs one suite and returns its report as a dict.

    ``configs=None`` enumerates every configuration where the suite allows it.
    """
    if name == "cocycle":
        text = ctx.check_cocycle()
    elif name == "bijectivity":
        text = ctx.check_bijectivity(depth, configs, seed)
    elif name == "inverse":
        text = ctx.check_inverse(depth, configs, seed)
    elif name == "orbit":
        text = ctx.check_orbit(depth, configs, seed)
    elif name == "locality":
        text = ctx.check_locality(depth, configs or 100, seed)
    elif name == "pushforward":
        if mode == "auto":
            mode = "exact" if ctx.within_budget(depth) else "sampled"
        text = ctx.check_pushforward(depth, mode, samples, seed, tv_marginal, tv_pair)
    else:
        raise ValueError(f"unknown suite {name!r}")
    return json.loads(text)


def run_all(ctx, **kwargs):
    return {name: run_suite(ctx, name, **kwargs) for name in SUITES}


__all__ = [
    "BudgetExceeded", "CocycleInconsistent", "CoindoeError", "Config", "Context",
    "InvalidSpace", "NotAGroup", "NotAProductSpace", "NotFree", "NotHomomorphism",
    "NotMeasurePreserving", "OrbitMismatch", "ParseError", "PreimageMismatch",
    "SUITES", "Scenario", "TruncationExceeded", "entropy", "load_scenario",
    "parse_scenario", "run_all", "run_suite",
]
