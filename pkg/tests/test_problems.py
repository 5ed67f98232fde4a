import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from phasefit_rk import (NONLINEAR_REFERENCE, RESONANCE_ENERGIES, MethodFamily, WoodsSaxonParams,
                         asymptotic_basis, extract_phase_shift, ixaru_rizea_frequency,
                         make_nonlinear_problem, make_resonance_problem, woods_saxon)
from phasefit_rk.errors import (ConfigInvalid, DegenerateSamples, EnergyTooSmall,
                                UnsupportedAngularMomentum)
from phasefit_rk.problems import ResonanceProblem


def test_woods_saxon_parameters():
    p = WoodsSaxonParams()
    assert (p.u0, p.a, p.x0) == (-50.0, 0.6, 7.0)
    assert p.u1 == 50.0 / 0.6


def test_woods_saxon_values():
    assert woods_saxon(7.0) == pytest.approx(-25.0 + (50 / 0.6) / 4, abs=1e-13)
    assert woods_saxon(7.0) == pytest.approx(-4.1666667, abs=1e-7)
    # 40-digit evaluation at x = 0
    assert woods_saxon(0.0) == pytest.approx(-49.998856690717530343, rel=1e-14)
    assert woods_saxon(1e4) == 0.0
    assert abs(woods_saxon(200.0)) < 1e-100


def test_woods_saxon_far_branch_is_continuous():
    x = 7.0 + 30.0 * 0.6
    lo, hi = np.nextafter(x, 0), np.nextafter(x, 100)
    assert woods_saxon(lo) == pytest.approx(woods_saxon(hi), rel=1e-12)


def test_woods_saxon_array_matches_scalar():
    xs = np.array([0.0, 3.3, 7.0, 9.1, 15.0, 30.0, 500.0])
    np.testing.assert_allclose(woods_saxon(xs), [woods_saxon(x) for x in xs], rtol=1e-14, atol=0)


def test_woods_saxon_monotone_and_decaying():
    xs = np.linspace(7.0, 15.0, 2001)
    vals = woods_saxon(xs)
    # increasing up to the barrier top, then decaying towards zero from above
    peak = np.argmax(vals)
    assert np.all(np.diff(vals[: peak + 1]) > 0)
    assert np.all(np.diff(vals[peak:]) < 0)
    assert abs(woods_saxon(15.0)) < abs(woods_saxon(7.0))


def test_ixaru_rizea_schedule():
    w = ixaru_rizea_frequency(989.701916)
    assert w(1.0) == pytest.approx(30.654, abs=1e-3)
    assert w(1.0) == math.sqrt(939.701916)
    assert ixaru_rizea_frequency(163.215341)(10.0) == pytest.approx(12.7756, abs=1e-4)
    w = ixaru_rizea_frequency(341.495874)
    assert w(6.5) == math.sqrt(341.495874)
    assert w(np.nextafter(6.5, 0)) == math.sqrt(341.495874 - 50)
    with pytest.raises(EnergyTooSmall):
        ixaru_rizea_frequency(50.0)


def test_asymptotic_basis():
    k = 2.0
    s, c = asymptotic_basis(k, math.pi / 4)
    assert s == pytest.approx(1.0) and c == pytest.approx(0.0, abs=1e-16)
    s, c = asymptotic_basis(k, math.pi / 2)
    assert s == pytest.approx(0.0, abs=1e-15) and c == pytest.approx(1.0)
    k = math.sqrt(163.215341)
    assert asymptotic_basis(k, 15.0) == (math.sin(15 * k), -math.cos(15 * k))
    with pytest.raises(UnsupportedAngularMomentum):
        asymptotic_basis(1.0, 1.0, l=1)


def samples(delta, k=7.0, x_i=14.2, x_ip1=15.0, scale=1.0):
    def y(x):
        s, c = asymptotic_basis(k, x)
        return scale * (math.cos(delta) * s + math.sin(delta) * c)

    return y(x_i), y(x_ip1), x_i, x_ip1, k


def test_phase_shift_of_pure_sine_is_zero():
    assert extract_phase_shift(*samples(0.0)).delta == pytest.approx(0.0, abs=1e-12)


def test_phase_shift_quarter_pi():
    k, x_i, x_ip1 = 7.0, 14.2, 15.0
    y = lambda x: sum(asymptotic_basis(k, x))
    res = extract_phase_shift(y(x_i), y(x_ip1), x_i, x_ip1, k)
    assert res.tan_delta == pytest.approx(1.0, rel=1e-12)
    assert res.delta == pytest.approx(math.pi / 4, abs=1e-12)


def test_phase_shift_of_cosine_is_resonance():
    k, x_i, x_ip1 = 7.0, 14.2, 15.0
    y = lambda x: asymptotic_basis(k, x)[1]
    res = extract_phase_shift(y(x_i), y(x_ip1), x_i, x_ip1, k)
    assert res.delta == pytest.approx(math.pi / 2, abs=1e-12)
    assert res.error_vs_reference < 1e-12


@pytest.mark.parametrize("delta", [0.0, math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2 - 1e-3])
@pytest.mark.parametrize("scale", [1e-6, 1.0, 1e6, -3.0])
def test_phase_shift_recovery_and_scale_invariance(delta, scale):
    res = extract_phase_shift(*samples(delta, scale=scale))
    err = abs(math.remainder(res.delta - delta, math.pi))
    assert err < 1e-12


@given(st.floats(0.0, math.pi - 1e-9), st.floats(1.0, 40.0))
def test_phase_shift_recovery_property(delta, k):
    res = extract_phase_shift(*samples(delta, k=k, x_i=14.0 + 0.37 / k))
    assert 0.0 <= res.delta < math.pi
    assert abs(math.remainder(res.delta - delta, math.pi)) < 1e-9


def test_degenerate_samples():
    with pytest.raises(DegenerateSamples):
        extract_phase_shift(0.0, 0.0, 14.0, 15.0, 3.0)


def test_resonance_problem_definition():
    prob = make_resonance_problem(163.215341)
    p = prob.definition()
    assert (p.x0, p.x_end) == (0.0, 15.0)
    np.testing.assert_array_equal(p.y0, [0.0, 1e-7])
    np.testing.assert_allclose(p.rhs(7.0, np.array([2.0, 3.0])),
                               [3.0, (woods_saxon(7.0) - 163.215341) * 2.0])
    sched = make_resonance_problem(989.701916).schedule
    assert (sched.inner, sched.outer) == (math.sqrt(939.701916), math.sqrt(989.701916))


def test_resonance_sample_points():
    prob = make_resonance_problem(341.495874)
    j = prob.sample_index(3000)
    assert j * 0.005 == pytest.approx(14.5)
    j = prob.sample_index(1001)
    assert 14.0 <= j * 15 / 1001 <= 14.5
    with pytest.raises(ConfigInvalid):
        prob.sample_index(12)  # h = 1.25 puts the inner sample at 13.75


def test_resonance_rejects_bad_input():
    with pytest.raises(EnergyTooSmall):
        make_resonance_problem(40.0)
    with pytest.raises(UnsupportedAngularMomentum):
        ResonanceProblem(100.0, l=2)


def test_resonance_slope_does_not_change_phase_shift():
    fam = MethodFamily("zero-pl")
    a = ResonanceProblem(163.215341).solve(fam, 1500)[1].delta
    b = ResonanceProblem(163.215341, slope=1.0).solve(fam, 1500)[1].delta
    assert a == pytest.approx(b, abs=1e-12)


@pytest.mark.parametrize("energy", RESONANCE_ENERGIES)
def test_resonance_classical_convergence(energy):
    # doubling sweep over roughly a decade; E = 341.5 has accidental
    # cancellations (e.g. n = 2000), hence the factor-3 noise allowance
    prob = make_resonance_problem(energy)
    errs = [prob.solve(MethodFamily(), 1250 * 2**k)[1].error_vs_reference for k in range(4)]
    assert all(b <= 3 * a for a, b in zip(errs, errs[1:]))
    assert errs[-1] < errs[0]


def test_resonance_delta_approaches_half_pi():
    prob = make_resonance_problem(341.495874)
    run, shift = prob.solve(MethodFamily(), 3000)
    assert run.steps == 3000
    assert shift.error_vs_reference < 1e-3


def test_nonlinear_problem():
    p = make_nonlinear_problem()
    np.testing.assert_array_equal(p.rhs(0.0, np.array([0.0, 1.0])), [1.0, 0.0])
    assert p.rhs(0.0, np.array([math.pi / 2, 0.0]))[1] == pytest.approx(-100 * math.pi / 2 + 1)
    assert (p.x0, p.x_end) == (0.0, 20 * math.pi)
    assert p.frequency_schedule(3.0) == 10.0
    assert NONLINEAR_REFERENCE == 3.92823991e-4
