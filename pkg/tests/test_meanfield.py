import numpy as np
import pytest

from bicavity import (
    ScattererSpec,
    SystemParams,
    mean_fields,
    scatterer_coupling,
    spectrum,
)


def base(j=0.0, delta=0.0, kappa=40.0, drive=1.0):
    return SystemParams(kappa=kappa, delta=delta, j_coupling=j, drive=drive, gamma_a=1.0)


def test_resonant_empty_cavity():
    a, b = mean_fields(base())
    assert a == pytest.approx(-2j * 1.0 / 40.0, rel=1e-12)
    assert b == pytest.approx(0.0, abs=1e-15)


def test_fixed_point_residual():
    rng = np.random.default_rng(2)
    for _ in range(20):
        p = base(
            j=rng.uniform(0, 300),
            delta=rng.uniform(-300, 300),
            kappa=rng.uniform(1, 60),
            drive=rng.uniform(0.1, 2.0),
        )
        a, b = mean_fields(p)
        da = -(1j * p.delta + p.kappa / 2.0) * a - 1j * p.j_coupling * b - 1j * p.drive
        db = -(1j * p.delta + p.kappa / 2.0) * b - 1j * p.j_coupling * a
        assert abs(da) < 1e-12 * max(1.0, abs(a))
        assert abs(db) < 1e-12 * max(1.0, abs(a))


def test_reflection_symmetry():
    p_plus = base(j=240.0, delta=55.0)
    p_minus = base(j=240.0, delta=-55.0)
    _, b_plus = mean_fields(p_plus)
    _, b_minus = mean_fields(p_minus)
    assert b_plus == pytest.approx(np.conj(b_minus), rel=1e-12)


@pytest.mark.parametrize("j_over_kappa", [2.0, 4.0, 6.0, 8.0])
def test_split_peaks_at_plus_minus_j(j_over_kappa):
    # exact maxima of |<b>|^2 sit at +-sqrt(J^2 - kappa^2/4), approaching +-J
    kappa = 40.0
    j = j_over_kappa * kappa
    peak = np.sqrt(j**2 - kappa**2 / 4.0)
    grid = np.linspace(-2 * j, 2 * j, 4001)
    pts = spectrum(base(j=j), grid)
    p_r = np.array([pt.p_r for pt in pts])
    step = grid[1] - grid[0]
    half = len(grid) // 2
    left = grid[:half][np.argmax(p_r[:half])]
    right = grid[half:][np.argmax(p_r[half:])]
    assert left == pytest.approx(-peak, abs=1.5 * step)
    assert right == pytest.approx(peak, abs=1.5 * step)
    assert peak == pytest.approx(j, rel=0.04 / j_over_kappa**2 + 0.04)


def test_unresolved_below_half_kappa():
    # J < kappa/2 gives a single unsplit reflection peak at delta = 0
    kappa = 40.0
    grid = np.linspace(-3 * kappa, 3 * kappa, 2001)
    pts = spectrum(base(j=0.4 * kappa), grid)
    p_r = np.array([pt.p_r for pt in pts])
    interior = (np.diff(np.sign(np.diff(p_r))) < 0).nonzero()[0] + 1
    assert len(interior) == 1
    assert grid[interior[0]] == pytest.approx(0.0, abs=grid[1] - grid[0])


def test_transmission_limits():
    kappa = 40.0
    pts = spectrum(base(j=240.0), np.array([-500 * kappa, 0.0, 500 * kappa]))
    assert pts[0].p_t == pytest.approx(1.0, abs=1e-3)
    assert pts[-1].p_t == pytest.approx(1.0, abs=1e-3)
    assert all(pt.p_r <= 1.0 + 1e-9 for pt in pts)


def test_no_reflection_without_coupling():
    pts = spectrum(base(j=0.0), np.linspace(-100, 100, 11))
    assert all(pt.p_r == 0.0 for pt in pts)


def test_empty_grid_rejected():
    with pytest.raises(ValueError):
        spectrum(base(), np.array([]))


def test_scatterer_polarizability_scaling():
    spec = ScattererSpec(
        radius=1.0, refractive_index=1.5, mode_volume=100.0, mode_function=0.8, omega=200.0
    )
    doubled = ScattererSpec(
        radius=2.0 ** (1.0 / 3.0),
        refractive_index=1.5,
        mode_volume=100.0,
        mode_function=0.8,
        omega=200.0,
    )
    assert doubled.polarizability == pytest.approx(2.0 * spec.polarizability, rel=1e-12)
    assert scatterer_coupling(doubled) == pytest.approx(
        2.0 * scatterer_coupling(spec), rel=1e-12
    )


def test_scatterer_index_matched_vacuum():
    spec = ScattererSpec(
        radius=1.0, refractive_index=1.0, mode_volume=50.0, mode_function=1.0, omega=100.0
    )
    assert scatterer_coupling(spec) == 0.0


def test_scatterer_coupling_magnitude_formula():
    spec = ScattererSpec(
        radius=0.5, refractive_index=2.0, mode_volume=30.0, mode_function=0.6, omega=150.0
    )
    alpha = 4.0 * np.pi * 0.5**3 * (4.0 - 1.0) / (4.0 + 2.0)
    expected = abs(alpha * 0.6**2 * 150.0 / (2.0 * 30.0))
    assert scatterer_coupling(spec) == pytest.approx(expected, rel=1e-12)
    assert scatterer_coupling(spec) >= 0.0


def test_scatterer_validation():
    with pytest.raises(ValueError):
        ScattererSpec(radius=-1.0, refractive_index=1.5, mode_volume=1.0,
                      mode_function=1.0, omega=1.0)
    with pytest.raises(ValueError):
        ScattererSpec(radius=1.0, refractive_index=1.5, mode_volume=0.0,
                      mode_function=1.0, omega=1.0)
