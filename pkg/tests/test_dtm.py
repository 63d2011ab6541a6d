"""Coefficient recurrences: examples, structure, and cross-checks."""

import random

import pytest

from ensoseries import (
    CoupledParams,
    DelayedParams,
    SeriesOverflowError,
    SeriesPoly,
    SolutionPair,
    UsageError,
    assemble,
    load_table,
    reduced_delayed_coeffs,
    solve_coupled,
    solve_delayed,
    transform_coupled,
    transform_delayed,
)
from conftest import draw_coupled, draw_delayed

TABLE1 = CoupledParams(1, 1, 1, 1, 0.1)
TABLE3 = DelayedParams(0.5, 0.3, 0.25, 0.05)


@pytest.mark.filterwarnings("ignore::ensoseries.ParameterRangeWarning")
def test_zero_rhs_keeps_constants():
    r = transform_coupled(CoupledParams(0, 0, 0, 0, 0.0), 4)
    assert r.W == (1.0, 0.0, 0.0, 0.0, 0.0)
    assert r.V == (1.0, 0.0, 0.0, 0.0, 0.0)


def test_first_coefficients_match_hand_substitution():
    # W1 = c + eta - eps, V1 = -theta - gamma, then one more recurrence turn
    r = transform_coupled(TABLE1, 2)
    assert r.W[1] == pytest.approx(1.9, abs=1e-15)
    assert r.V[1] == pytest.approx(-2.0, abs=1e-15)
    assert r.W[2] == pytest.approx(-0.335, abs=1e-14)
    assert r.V[2] == pytest.approx(0.05, abs=1e-14)


def test_coupled_series_value_from_table1():
    for order in (15, 25):
        pair = solve_coupled(TABLE1, order)
        assert pair.H.eval(0.2) == pytest.approx(1.363075110, abs=1e-7)


@pytest.mark.filterwarnings("ignore::ensoseries.ParameterRangeWarning")
def test_delayed_zero_rhs():
    r = transform_delayed(DelayedParams(0.7, 0.7, 0.5, 0.0), 4)
    assert r.W == (1.0, 0.0, 0.0, 0.0, 0.0)
    assert r.V is None


def test_delayed_first_coefficient():
    r = transform_delayed(TABLE3, 1)
    assert r.W[1] == pytest.approx(0.15 / 0.925, rel=1e-14)


def test_delayed_series_value_from_table3():
    for order in (20, 25):
        series = solve_delayed(TABLE3, order)
        assert series.eval(0.4) == pytest.approx(1.065476869, abs=1e-7)


def test_negative_order_rejected():
    with pytest.raises(UsageError):
        transform_coupled(TABLE1, -1)
    with pytest.raises(UsageError):
        transform_delayed(TABLE3, -2)


def test_overflow_aborts_with_index():
    with pytest.raises(SeriesOverflowError) as err:
        transform_coupled(CoupledParams(1e9, 0, 0, 0, 0.5), 5)
    assert err.value.index >= 1


def test_assemble_shapes():
    pair = assemble(transform_coupled(TABLE1, 3))
    assert isinstance(pair, SolutionPair)
    assert pair.H.cap == 3 and pair.H.t0 == 0.0
    scalar = assemble(transform_delayed(TABLE3, 3))
    assert isinstance(scalar, SeriesPoly)


@pytest.mark.filterwarnings("ignore::ensoseries.ParameterRangeWarning")
def test_assemble_constant_result():
    pair = assemble(transform_coupled(CoupledParams(0, 0, 0, 0, 0.0), 1))
    assert pair.H.eval(5.0) == 1.0 and pair.h.eval(5.0) == 1.0


def test_initial_condition_at_zero():
    assert solve_coupled(TABLE1, 25).H.eval(0.0) == 1.0


def test_delayed_grid_matches_bundled_table():
    table = load_table(3)
    series = solve_delayed(TABLE3, 25)
    for t, expected in zip(table.grid, table.column("dtm", 0.05)):
        assert series.eval(t) == pytest.approx(expected, abs=1e-6)


def test_order_monotonicity_bit_for_bit():
    small = transform_coupled(TABLE1, 30)
    large = transform_coupled(TABLE1, 55)
    assert large.W[:31] == small.W
    assert large.V[:31] == small.V
    d_small = transform_delayed(TABLE3, 20)
    d_large = transform_delayed(TABLE3, 45)
    assert d_large.W[:21] == d_small.W


def test_incremental_cube_agrees_with_series_cube():
    # the recurrence must hold with N(k) recomputed via the full series cube
    rng = random.Random(101)
    for _ in range(20):
        p = draw_coupled(rng)
        r = transform_coupled(p, 12)
        cubed = SeriesPoly(r.W).cube()
        for k in range(12):
            lhs = (k + 1) * r.W[k + 1]
            rhs = p.c * r.W[k] + p.eta * r.V[k] - p.eps * cubed.coeffs[k]
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_delayed_recurrence_against_series_cube():
    rng = random.Random(202)
    for _ in range(20):
        p = draw_delayed(rng)
        a, b = reduced_delayed_coeffs(p)
        try:
            r = transform_delayed(p, 10)
        except SeriesOverflowError:
            continue
        cubed = SeriesPoly(r.W).cube()
        for k in range(10):
            lhs = (k + 1) * r.W[k + 1]
            rhs = a * r.W[k] - b * cubed.coeffs[k]
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)
