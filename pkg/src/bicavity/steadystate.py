"""Steady state of the Lindblad equation and photon-statistics observables.

The kernel of the Liouvillian is found by replacing one row of the
dim^2 x dim^2 system with the vectorised trace constraint and solving the
dense linear system (small dimensions; dense LU is simpler and fast enough).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import Superoperator, liouvillian, vectorize, unvectorize
from .errors import (
    DegenerateSteadyStateError,
    SteadyStateSolverError,
    UndefinedCorrelationError,
)
from .fock import FockSpace, annihilator, build_space
from .params import SystemParams

RESIDUAL_TOL = 1e-10
PSD_TOL = 1e-8
TRUNCATION_TOL = 1e-4


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace steady state with its solver residual."""

    matrix: np.ndarray
    space: FockSpace
    residual: float


def _trace_row(dim: int) -> np.ndarray:
    row = np.zeros(dim * dim, dtype=complex)
    row[np.arange(dim) * dim + np.arange(dim)] = 1.0
    return row


def steady_state(lv: Superoperator) -> DensityMatrix:
    """Solve L[rho] = 0 with Tr(rho) = 1.

    Raises DegenerateSteadyStateError if the kernel is not one-dimensional and
    SteadyStateSolverError if the residual cannot be brought below tolerance.
    """
    dim = lv.space.dim
    lmat = lv.matrix
    system = lmat.copy()
    system[0, :] = _trace_row(dim)
    rhs = np.zeros(dim * dim, dtype=complex)
    rhs[0] = 1.0

    try:
        vec = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:
        raise DegenerateSteadyStateError(
            "trace-constrained Liouvillian system is singular; the steady "
            "state is not unique at this parameter point"
        ) from exc

    rho = _clean(unvectorize(vec, dim))
    residual = float(np.max(np.abs(lmat @ vectorize(rho))))
    if residual > RESIDUAL_TOL:
        # Least-squares on the stacked [L; trace] system as a fallback.
        stacked = np.vstack([lmat, _trace_row(dim)])
        target = np.zeros(dim * dim + 1, dtype=complex)
        target[-1] = 1.0
        vec, *_ = np.linalg.lstsq(stacked, target, rcond=None)
        rho = _clean(unvectorize(vec, dim))
        residual = float(np.max(np.abs(lmat @ vectorize(rho))))
        if residual > RESIDUAL_TOL:
            raise SteadyStateSolverError(
                f"steady-state residual {residual:.3e} above {RESIDUAL_TOL:.0e}",
                residual=residual,
            )

    min_eig = float(np.linalg.eigvalsh(rho).min())
    if min_eig < -PSD_TOL:
        raise SteadyStateSolverError(
            f"steady state not positive semi-definite (min eigenvalue {min_eig:.3e})",
            residual=residual,
        )
    return DensityMatrix(rho, lv.space, residual)


def _clean(rho: np.ndarray) -> np.ndarray:
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def mean_photon(rho: DensityMatrix, mode: str) -> float:
    """Tr(rho a'a) for the chosen mode."""
    a = annihilator(rho.space, mode)
    return float(np.trace(rho.matrix @ (a.conj().T @ a)).real)


def g2_zero(rho: DensityMatrix, mode: str, underflow_guard: float = 1e-30) -> float:
    """Equal-time second-order correlation Tr(rho a'a'aa) / Tr(rho a'a)^2."""
    a = annihilator(rho.space, mode)
    n = np.trace(rho.matrix @ (a.conj().T @ a)).real
    if n <= underflow_guard:
        raise UndefinedCorrelationError(
            f"mean photon number {n:.3e} below underflow guard "
            f"{underflow_guard:.0e}; g2(0) is undefined"
        )
    two = np.trace(rho.matrix @ (a.conj().T @ a.conj().T @ a @ a)).real
    return float(two / n**2)


def solve_steady(params: SystemParams, n_a_max: int = 4, n_b_max: int = 4) -> DensityMatrix:
    """Convenience: build the space and Liouvillian, then solve."""
    space = build_space(n_a_max, n_b_max)
    return steady_state(liouvillian(params, space))


def master_equation_g2(
    params: SystemParams, n_a_max: int = 4, n_b_max: int = 4, mode: str = "ccw"
) -> float:
    """g2(0) of the chosen mode from the master-equation steady state."""
    return g2_zero(solve_steady(params, n_a_max, n_b_max), mode)


@dataclass(frozen=True)
class TruncationReport:
    """Convergence of g2(0) between photon cutoffs base and base + 1."""

    base_cutoff: int
    g2_base: float | None
    g2_refined: float | None
    rel_change: float | None
    converged: bool
    error: str | None = None


def check_truncation(params: SystemParams, base_cutoff: int, mode: str = "ccw") -> TruncationReport:
    """Compare g2(0) at cutoffs (base, base + 1); flag changes above tolerance."""
    if base_cutoff < 2:
        raise ValueError(f"base_cutoff must be >= 2, got {base_cutoff}")
    try:
        g2_base = master_equation_g2(params, base_cutoff, base_cutoff, mode)
        g2_ref = master_equation_g2(params, base_cutoff + 1, base_cutoff + 1, mode)
    except (UndefinedCorrelationError, SteadyStateSolverError, DegenerateSteadyStateError) as exc:
        return TruncationReport(base_cutoff, None, None, None, False, error=str(exc))
    rel = abs(g2_ref - g2_base) / abs(g2_ref)
    return TruncationReport(base_cutoff, g2_base, g2_ref, rel, rel <= TRUNCATION_TOL)
