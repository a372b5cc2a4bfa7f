"""Mean-field transmission/reflection spectra and the scatterer coupling.

The spectra implement the emitter-decoupled (g = 0) reduction: the intracavity
means follow from the fixed point of the driven two-mode equations, and the
outputs from input-output theory,
    <a_out> = i*eps/sqrt(kappa) + sqrt(kappa) <a>,   <b_out> = sqrt(kappa) <b>.
Spectra are evaluated with kappa as the base unit (kappa = 1 internally), so
the normalized transmission tends to 1 far off resonance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import SystemParams


def mean_fields(params: SystemParams) -> tuple[complex, complex]:
    """Steady intracavity means (<a>, <b>) of the g = 0 reduction."""
    d, j, kappa, eps = params.delta, params.j_coupling, params.kappa, params.drive
    denom = (1j * d + 0.5 * kappa) ** 2 + j**2
    a_mean = eps * (d - 0.5j * kappa) / denom
    b_mean = -eps * j / denom
    return complex(a_mean), complex(b_mean)


@dataclass(frozen=True)
class SpectrumPoint:
    """Normalized output powers at one detuning.

    a_mean and b_mean are the intracavity means per unit drive with kappa = 1;
    p_t = |i + a_mean|^2 and p_r = |b_mean|^2 hold exactly.
    """

    delta: float
    p_t: float
    p_r: float
    a_mean: complex
    b_mean: complex


def spectrum(params: SystemParams, delta_grid) -> list[SpectrumPoint]:
    """Normalized transmission/reflection over a detuning grid.

    delta_grid is in the same frequency unit as params; points are rescaled
    internally to kappa = 1 so the result is drive-independent.
    """
    grid = np.atleast_1d(np.asarray(delta_grid, dtype=float))
    if grid.size == 0:
        raise ValueError("delta_grid must contain at least one point")
    kappa = params.kappa
    scaled = SystemParams(kappa=1.0, j_coupling=params.j_coupling / kappa, drive=1.0)
    points = []
    for d in grid:
        a_mean, b_mean = mean_fields(scaled.replace(delta=float(d) / kappa))
        points.append(
            SpectrumPoint(
                delta=float(d),
                p_t=float(abs(1j + a_mean) ** 2),
                p_r=float(abs(b_mean) ** 2),
                a_mean=a_mean,
                b_mean=b_mean,
            )
        )
    return points


@dataclass(frozen=True)
class ScattererSpec:
    """Nanosphere scatterer in the electrostatic (R << lambda) limit.

    radius, mode_volume and omega share consistent units; mode_function is the
    dimensionless cavity mode function at the scatterer position.  The caller
    is responsible for staying in the R << lambda regime.
    """

    radius: float
    refractive_index: float
    mode_volume: float
    mode_function: float
    omega: float

    def __post_init__(self):
        if self.radius <= 0 or self.refractive_index <= 0 or self.mode_volume <= 0:
            raise ValueError("radius, refractive_index and mode_volume must be positive")

    @property
    def polarizability(self) -> float:
        """Clausius-Mossotti polarizability 4 pi R^3 (n^2-1)/(n^2+2)."""
        n2 = self.refractive_index**2
        return 4.0 * np.pi * self.radius**3 * (n2 - 1.0) / (n2 + 2.0)


def scatterer_coupling(spec: ScattererSpec) -> float:
    """Magnitude of the scatterer-induced mode coupling |J| = alpha f^2 omega / (2V).

    The underlying formula is negative for refractive_index > 1; only |J|
    enters the observable +-J mode splitting, so the magnitude is returned.
    """
    return abs(spec.polarizability * spec.mode_function**2 * spec.omega / (2.0 * spec.mode_volume))
