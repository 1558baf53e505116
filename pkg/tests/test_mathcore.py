"""Scalar kernels: Gaussian tails, capacity, dispersion, quadrature.

Reference decimals were frozen from a 40-digit recomputation (erfc and
root finding in extended precision); tolerances leave two orders of
headroom over the observed double-precision error.
"""

import math

import pytest

from fblink import mathcore

# x -> Q(x), 20 significant digits
Q_REFERENCE = {
    1.0: 0.15865525393145705141,
    3.0: 0.0013498980316300945267,
    5.0: 2.8665157187919391167e-7,
    8.0: 6.2209605742717841235e-16,
    -2.0: 0.9772498680518207928,
}
# p -> Qinv(p)
QINV_REFERENCE = {
    1e-3: 3.0902323061678135415,
    1e-5: 4.2648907939228246285,
}


def test_q_func_reference_values():
    for x, want in Q_REFERENCE.items():
        assert mathcore.q_func(x) == pytest.approx(want, rel=1e-13)


def test_q_func_basic_shape():
    assert mathcore.q_func(0.0) == pytest.approx(0.5, rel=1e-15)
    # symmetry Q(-x) = 1 - Q(x)
    for x in (0.3, 1.7, 4.0):
        assert mathcore.q_func(-x) == pytest.approx(1.0 - mathcore.q_func(x), rel=1e-14)
    assert mathcore.q_func(40.0) == 0.0  # underflows cleanly, no error


def test_q_inv_reference_values():
    for p, want in QINV_REFERENCE.items():
        assert mathcore.q_inv(p) == pytest.approx(want, rel=1e-12)


def test_q_inv_round_trip():
    for p in (1e-12, 1e-8, 1e-5, 1e-3, 0.1, 0.5, 0.9, 1.0 - 1e-9):
        assert mathcore.q_func(mathcore.q_inv(p)) == pytest.approx(p, rel=1e-10)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5])
def test_q_inv_domain(bad):
    with pytest.raises(ValueError):
        mathcore.q_inv(bad)


def test_shannon_capacity():
    assert mathcore.shannon_capacity(0.0) == 0.0
    assert mathcore.shannon_capacity(1.0) == pytest.approx(1.0, rel=1e-15)
    assert mathcore.shannon_capacity(15.0) == pytest.approx(4.0, rel=1e-15)
    with pytest.raises(ValueError):
        mathcore.shannon_capacity(-1e-9)


def test_channel_dispersion_values_and_limits():
    assert mathcore.channel_dispersion(0.0) == 0.0
    assert mathcore.channel_dispersion(1.0) == pytest.approx(0.75, rel=1e-15)
    # V = 1 - (1+g)^-2 identity on a grid
    for g in (0.01, 0.5, 3.0, 40.0, 1e4):
        want = 1.0 - 1.0 / (1.0 + g) ** 2
        assert mathcore.channel_dispersion(g) == pytest.approx(want, rel=1e-14)
    # bounded-ratio form survives SNRs whose square overflows
    huge = mathcore.channel_dispersion(1e300)
    assert 0.0 < huge <= 1.0
    with pytest.raises(ValueError):
        mathcore.channel_dispersion(-0.5)


def test_channel_dispersion_monotone():
    grid = [10.0 ** e for e in range(-6, 7)]
    vals = [mathcore.channel_dispersion(g) for g in grid]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1.0


def test_db_conversions():
    assert mathcore.db_to_linear(0.0) == 1.0
    assert mathcore.db_to_linear(10.0) == pytest.approx(10.0, rel=1e-15)
    assert mathcore.linear_to_db(100.0) == pytest.approx(20.0, rel=1e-15)
    for db in (-7.0, 0.0, 3.0, 25.0):
        assert mathcore.linear_to_db(mathcore.db_to_linear(db)) == pytest.approx(db, abs=1e-12)
    with pytest.raises(ValueError):
        mathcore.linear_to_db(0.0)


def test_probability_validators():
    assert mathcore.as_probability(0.0) == 0.0
    assert mathcore.as_probability(1.0) == 1.0
    for bad in (-1e-12, 1.0 + 1e-12, math.nan):
        with pytest.raises(ValueError):
            mathcore.as_probability(bad)
    # clip forgives roundoff overshoot but not real violations
    assert mathcore.clip_probability(1.0 + 1e-12) == 1.0
    assert mathcore.clip_probability(-1e-12) == 0.0
    for bad in (1.1, -0.1, math.nan):
        with pytest.raises(ValueError):
            mathcore.clip_probability(bad)


def test_integrate_polynomial():
    got = mathcore.integrate(lambda x: x * x, 0.0, 1.0, tol=1e-12)
    assert got == pytest.approx(1.0 / 3.0, rel=1e-12)


def test_integrate_semi_infinite_exponential():
    got = mathcore.integrate(lambda x: math.exp(-x), 0.0, math.inf, tol=1e-11)
    assert got == pytest.approx(1.0, rel=1e-10)


def test_integrate_forced_points_capture_spike():
    # unit-mass Gaussian of width 1e-3 at 0.5 inside a huge interval:
    # the coarse pass steps over it (quietly returning 0) unless the
    # subdivision points bracket the feature, the way every fading
    # average in the package brackets its error window
    sigma = 1e-3
    norm = 1.0 / (sigma * math.sqrt(2.0 * math.pi))

    def spike(x):
        return norm * math.exp(-0.5 * ((x - 0.5) / sigma) ** 2)

    got = mathcore.integrate(spike, 0.0, 1e4, tol=1e-9,
                             points=(0.5 - 8 * sigma, 0.5, 0.5 + 8 * sigma))
    assert got == pytest.approx(1.0, rel=1e-8)
    assert mathcore.integrate(spike, 0.0, 1e4, tol=1e-9) == 0.0


def test_integrate_rejects_bad_tol():
    with pytest.raises(ValueError):
        mathcore.integrate(lambda x: x, 0.0, 1.0, tol=0.0)


def test_integrate_reports_failure():
    # roundoff floor of the estimate sits far above this tolerance, so
    # the error bound cannot be certified
    with pytest.raises(mathcore.IntegrationError) as info:
        mathcore.integrate(lambda x: math.exp(x), 0.0, 30.0, tol=1e-18)
    err = info.value
    assert err.error_bound > err.tol
    assert err.estimate == pytest.approx(math.exp(30.0) - 1.0, rel=1e-10)
