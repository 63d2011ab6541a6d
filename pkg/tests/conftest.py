"""Shared helpers: seeded random parameter draws with rejection rules.

Draws reject only what no series method can represent at desk scale:
near-singular delayed denominators (|1 - beta*sigma| too small) and draws
whose coefficients trip the overflow guard before the compared order.  Both
rules are deterministic under the fixed seeds, so every run sees the same
parameter sets.
"""

from __future__ import annotations

import random
import warnings

import pytest

from ensoseries import (
    CoupledParams,
    DelayedParams,
    ParameterRangeWarning,
    SeriesOverflowError,
)


def draw_coupled(rng: random.Random) -> CoupledParams:
    return CoupledParams(
        c=rng.uniform(-2.0, 2.0),
        eta=rng.uniform(-2.0, 2.0),
        gamma=rng.uniform(-2.0, 2.0),
        theta=rng.uniform(-2.0, 2.0),
        eps=rng.uniform(0.01, 1.0),
    )


def draw_delayed(rng: random.Random, min_denom: float = 0.5) -> DelayedParams:
    while True:
        alpha = rng.uniform(-2.0, 2.0)
        beta = rng.uniform(-2.0, 2.0)
        sigma = rng.uniform(-2.0, 2.0)
        if abs(1.0 - beta * sigma) < min_denom:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ParameterRangeWarning)
            return DelayedParams(alpha, beta, sigma, rng.uniform(0.01, 1.0))


def draw_until(draw, rng: random.Random, compute, max_tries: int = 400):
    """Redraw on coefficient overflow; the comparison needs finite output."""
    for _ in range(max_tries):
        params = draw(rng)
        try:
            return params, compute(params)
        except SeriesOverflowError:
            continue
    pytest.fail("could not draw enough non-overflowing parameter sets")
