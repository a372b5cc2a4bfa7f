"""Weak-drive analytics: two-excitation ansatz, closed-form amplitudes, g2(0).

With the drive weak enough that at most two excitations are present, the
steady state is parametrised by eight amplitudes on top of the ground state
|0,0,-> (its amplitude is fixed to 1).  They solve a linear 8x8 system built
from the non-Hermitian Hamiltonian; closed forms exist for the common-coupling
case g_a = g_b.  Pure dephasing is outside this treatment (gamma_p must be 0).

The mode-resolved generalisation replaces the common g vertex by g_a on every
a-photon vertex and g_b on every b-photon vertex; it is validated against the
master-equation solver rather than against the closed forms.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AnalyticSingularityError
from .params import SystemParams

RESIDUAL_TOL = 1e-12

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class ComplexDetunings:
    """Detunings with decay folded in: delta_p = delta - i*kappa/2,
    delta_d = delta_a - i*gamma_a/2."""

    delta_p: complex
    delta_d: complex

    @classmethod
    def from_params(cls, params: SystemParams) -> "ComplexDetunings":
        return cls(
            params.delta - 0.5j * params.kappa,
            params.delta_a - 0.5j * params.gamma_a,
        )


@dataclass(frozen=True)
class AmplitudeSet:
    """The eight steady-state amplitudes of the two-excitation ansatz.

    Ordering of kets is |n_ccw, n_cw, emitter> with '-'/'+' for
    ground/excited; c_000m is the reference amplitude, fixed to 1.
    """

    c_100m: complex
    c_010m: complex
    c_000p: complex
    c_200m: complex
    c_020m: complex
    c_110m: complex
    c_100p: complex
    c_010p: complex
    residual: float
    c_000m: complex = 1.0 + 0.0j

    def one_excitation(self) -> tuple[complex, complex, complex]:
        return (self.c_100m, self.c_010m, self.c_000p)

    def two_excitation(self) -> tuple[complex, ...]:
        return (self.c_200m, self.c_020m, self.c_110m, self.c_100p, self.c_010p)

    @property
    def g2_ccw(self) -> float:
        """g2(0) of the driven mode: 2|c_200m|^2 / |c_100m|^4."""
        return float(2.0 * abs(self.c_200m) ** 2 / abs(self.c_100m) ** 4)


def _system_matrix(params: SystemParams) -> tuple[np.ndarray, np.ndarray]:
    """8x8 steady-state system M c = rhs in the amplitude ordering
    (c_100m, c_010m, c_000p, c_200m, c_020m, c_110m, c_100p, c_010p)."""
    det = ComplexDetunings.from_params(params)
    dp, dd = det.delta_p, det.delta_d
    ga, gb, j, eps = params.g_a, params.g_b, params.j_coupling, params.drive
    two_p = 2.0 * dp          # two photons: 2*delta - i*kappa
    pd = dp + dd              # one photon + excited emitter

    m = np.zeros((8, 8), dtype=complex)
    # single-excitation block
    m[0, 0], m[0, 1], m[0, 2] = dp, j, ga
    m[1, 1], m[1, 0], m[1, 2] = dp, j, gb
    m[2, 2], m[2, 0], m[2, 1] = dd, ga, gb
    # two-excitation block (drive feeds it from the singles)
    m[3, 3], m[3, 5], m[3, 6], m[3, 0] = two_p, _SQRT2 * j, _SQRT2 * ga, _SQRT2 * eps
    m[4, 4], m[4, 5], m[4, 7] = two_p, _SQRT2 * j, _SQRT2 * gb
    m[5, 5], m[5, 4], m[5, 3], m[5, 7], m[5, 6], m[5, 1] = (
        two_p, _SQRT2 * j, _SQRT2 * j, ga, gb, eps,
    )
    m[6, 6], m[6, 7], m[6, 3], m[6, 5], m[6, 2] = pd, j, _SQRT2 * ga, gb, eps
    m[7, 7], m[7, 6], m[7, 5], m[7, 4] = pd, j, ga, _SQRT2 * gb

    rhs = np.zeros(8, dtype=complex)
    rhs[0] = -eps
    return m, rhs


def solve_weak_drive(params: SystemParams) -> AmplitudeSet:
    """Solve the 8x8 weak-drive linear system (supports g_a != g_b)."""
    if params.gamma_p != 0:
        raise ValueError(
            "the weak-drive analysis neglects pure dephasing; gamma_p must be 0"
        )
    m, rhs = _system_matrix(params)
    try:
        c = np.linalg.solve(m, rhs)
    except np.linalg.LinAlgError as exc:
        raise AnalyticSingularityError(
            f"weak-drive system singular at {params}"
        ) from exc
    scale = max(float(np.max(np.abs(m))) * float(np.max(np.abs(c))), 1e-300)
    residual = float(np.max(np.abs(m @ c - rhs))) / scale
    if residual > RESIDUAL_TOL:
        raise AnalyticSingularityError(
            f"weak-drive solve residual {residual:.3e} above {RESIDUAL_TOL:.0e} "
            f"at {params}"
        )
    _warn_if_not_weak(params, c)
    return AmplitudeSet(*c, residual=residual)


def _warn_if_not_weak(params: SystemParams, c: np.ndarray) -> None:
    """Soft check of the amplitude hierarchy 1 >> singles >> doubles."""
    singles = float(np.max(np.abs(c[:3])))
    doubles = float(np.max(np.abs(c[3:])))
    if singles > 0.3 or doubles > 0.3:
        warnings.warn(
            "weak-drive hierarchy violated (drive is not weak at this point); "
            "amplitudes may not describe the steady state",
            stacklevel=3,
        )


def c_amplitudes_closed_form(params: SystemParams) -> tuple[complex, complex]:
    """Closed-form (c_100m, c_200m) for the common-coupling case g_a = g_b."""
    if params.g_a != params.g_b:
        raise ValueError("closed forms assume a common coupling g_a == g_b")
    if params.gamma_p != 0:
        raise ValueError(
            "the weak-drive analysis neglects pure dephasing; gamma_p must be 0"
        )
    det = ComplexDetunings.from_params(params)
    dp, dd = det.delta_p, det.delta_d
    g, j, eps = params.g_a, params.j_coupling, params.drive

    denom1 = -2.0 * g**2 + j * dd + dp * dd
    denom2 = (j + dp) ** 2 + dd * (j + dp) - 2.0 * g**2
    scale = max(abs(dp) ** 2, abs(g) ** 2, abs(j) ** 2, 1.0)
    if min(abs(denom1), abs(denom2), abs(j - dp) ** 2) < 1e-14 * scale:
        raise AnalyticSingularityError(
            f"closed-form denominator vanishes at {params}"
        )
    numer2 = (
        dp**3 * dd
        + dp**2 * dd**2
        + j * dp**2 * dd
        - 2.0 * dp * dd * g**2
        - 2.0 * j * dp * g**2
        + g**4
    )
    c_100m = eps * (dp * dd - g**2) / ((j - dp) * denom1)
    c_200m = _SQRT2 * eps**2 * numer2 / (2.0 * (j - dp) ** 2 * denom1 * denom2)
    return c_100m, c_200m


def g2_closed_form(params: SystemParams) -> float:
    """Closed-form g2(0) of the driven mode (g_a = g_b, gamma_p = 0)."""
    if params.g_a != params.g_b:
        raise ValueError("closed form assumes a common coupling g_a == g_b")
    if params.gamma_p != 0:
        raise ValueError(
            "the weak-drive analysis neglects pure dephasing; gamma_p must be 0"
        )
    det = ComplexDetunings.from_params(params)
    dp, dd = det.delta_p, det.delta_d
    g, j = params.g_a, params.j_coupling

    a1 = dp * (dp**2 * dd + (dd * dp - 2.0 * g**2) * (dd + j)) + g**4
    a2 = dd * (j + dp) - 2.0 * g**2
    a3 = (j + dp) * (j + dp + dd) - 2.0 * g**2
    a4 = dp * dd - g**2
    scale = max(abs(dp) ** 2, abs(g) ** 2, abs(j) ** 2, 1.0)
    if abs(a3) < 1e-14 * scale or abs(a4) < 1e-14 * scale:
        raise AnalyticSingularityError(f"g2 closed form singular at {params}")
    return float(abs(a1) ** 2 * abs(a2) ** 2 / (abs(a3) ** 2 * abs(a4) ** 4))


def g2_weak_drive(params: SystemParams) -> float:
    """g2(0) from the weak-drive linear system (works for g_a != g_b)."""
    return solve_weak_drive(params).g2_ccw


def g2_ratio_asymptotic(params: SystemParams) -> tuple[float, float, float]:
    """Large-J suppression laws near delta = 0.

    Returns (r1, r2, ratio): the one- and two-photon amplitude suppression
    factors kappa^2/(4 J^2) and kappa^6/(4 J^6), and their combination
    ratio = r2 / r1^2 = 4 kappa^2 / J^2, the predicted g2(J)/g2(J=0).
    """
    j, kappa = params.j_coupling, params.kappa
    if j == 0:
        raise ZeroDivisionError("asymptotic ratio requires a nonzero mode coupling J")
    r1 = kappa**2 / (4.0 * j**2)
    r2 = kappa**6 / (4.0 * j**6)
    return r1, r2, r2 / r1**2
