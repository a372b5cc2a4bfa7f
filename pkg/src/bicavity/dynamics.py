"""Hamiltonians and the Lindblad generator in the drive rotating frame.

Conventions
-----------
* The emitter energy term uses the excitation projector |+><+| (not Pauli-Z),
  so the singly excited emitter state carries detuning delta_a.  This matches
  the single-excitation linear system used by the weak-drive analytics.
* Pure dephasing is the standard Lindblad dissipator with jump operator
  sigma_z (Pauli, eigenvalues +-1) at rate gamma_p:
      (gamma_p/2) (2 sz rho sz - {sz^2, rho}) = gamma_p (sz rho sz - rho).
* Superoperators act on column-stacked density matrices,
  vec(rho)[j*dim + i] = rho[i, j], so vec(A rho B) = kron(B.T, A) vec(rho).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import (
    FockSpace,
    annihilator,
    emitter_excitation_projector,
    emitter_lowering,
    pauli_z,
)
from .params import SystemParams


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector."""
    return np.asarray(rho).flatten(order="F")


def unvectorize(vec: np.ndarray, dim: int) -> np.ndarray:
    """Inverse of vectorize()."""
    return np.asarray(vec).reshape((dim, dim), order="F")


@dataclass(frozen=True)
class Superoperator:
    """dim^2 x dim^2 matrix acting on column-stacked density matrices."""

    matrix: np.ndarray
    space: FockSpace

    def apply(self, rho: np.ndarray) -> np.ndarray:
        return unvectorize(self.matrix @ vectorize(rho), self.space.dim)


def _coupling_part(params: SystemParams, space: FockSpace) -> np.ndarray:
    """g_a a'sm + g_b b'sm + eps a' plus Hermitian conjugate."""
    a = annihilator(space, "ccw")
    b = annihilator(space, "cw")
    sm = emitter_lowering(space)
    x = (
        params.g_a * a.conj().T @ sm
        + params.g_b * b.conj().T @ sm
        + params.drive * a.conj().T
    )
    return x + x.conj().T


def hamiltonian_eff(params: SystemParams, space: FockSpace) -> np.ndarray:
    """Rotating-frame Hamiltonian (units hbar = 1); exactly Hermitian."""
    a = annihilator(space, "ccw")
    b = annihilator(space, "cw")
    num = a.conj().T @ a + b.conj().T @ b
    h = (
        params.delta * num
        + params.delta_a * emitter_excitation_projector(space)
        + params.j_coupling * (a.conj().T @ b + b.conj().T @ a)
        + _coupling_part(params, space)
    )
    return h


def nonhermitian_hamiltonian(params: SystemParams, space: FockSpace) -> np.ndarray:
    """Effective Hamiltonian with decay folded into complex detunings.

    Intended for the weak-drive analysis; pure dephasing is not included.
    """
    a = annihilator(space, "ccw")
    b = annihilator(space, "cw")
    num = a.conj().T @ a + b.conj().T @ b
    return (
        (params.delta - 0.5j * params.kappa) * num
        + (params.delta_a - 0.5j * params.gamma_a) * emitter_excitation_projector(space)
        + params.j_coupling * (a.conj().T @ b + b.conj().T @ a)
        + _coupling_part(params, space)
    )


def _dissipator(c: np.ndarray, rate: float, eye: np.ndarray) -> np.ndarray:
    """(rate/2) (2 c rho c' - c'c rho - rho c'c), column-stacked."""
    cdc = c.conj().T @ c
    return 0.5 * rate * (
        2.0 * np.kron(c.conj(), c) - np.kron(eye, cdc) - np.kron(cdc.T, eye)
    )


def liouvillian(params: SystemParams, space: FockSpace) -> Superoperator:
    """Full Lindblad generator: drho/dt = L[rho]."""
    dim = space.dim
    eye = np.eye(dim, dtype=complex)
    h = hamiltonian_eff(params, space)
    lmat = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    lmat += _dissipator(annihilator(space, "ccw"), params.kappa, eye)
    lmat += _dissipator(annihilator(space, "cw"), params.kappa, eye)
    lmat += _dissipator(emitter_lowering(space), params.gamma_a, eye)
    if params.gamma_p > 0:
        sz = pauli_z(space)
        lmat += params.gamma_p * (np.kron(sz.conj(), sz) - np.kron(eye, eye))
    return Superoperator(lmat, space)
