"""Partial transpose, Hermitian spectra and log negativity of the pair state.

Log negativity is log2 of the trace norm of the partial transpose over
photon A.  For a Hermitian matrix the trace norm is the sum of absolute
eigenvalues; negative eigenvalues of the partial transpose witness
entanglement, and a positive partial transpose gives exactly zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .beams import DensityMatrix

_DIM = 3


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues in descending order."""

    eigenvalues: np.ndarray

    def __post_init__(self) -> None:
        ev = np.asarray(self.eigenvalues, dtype=float)
        if ev.ndim != 1 or not np.all(np.isfinite(ev)):
            raise ValueError("eigenvalues must be a finite 1-d array")
        ev = np.sort(ev)[::-1].copy()
        ev.flags.writeable = False
        object.__setattr__(self, "eigenvalues", ev)

    def abs_sum(self) -> float:
        return float(np.abs(self.eigenvalues).sum())


def _entries(rho) -> np.ndarray:
    m = rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if m.shape != (_DIM * _DIM, _DIM * _DIM):
        raise ValueError(f"expected a 9x9 matrix, got shape {m.shape}")
    return m


def partial_transpose_A(rho) -> np.ndarray:
    """Transpose the photon-A indices: ((a,b),(a',b')) -> ((a',b),(a,b'))."""
    m = _entries(rho)
    return (
        m.reshape(_DIM, _DIM, _DIM, _DIM).transpose(2, 1, 0, 3).reshape(_DIM**2, _DIM**2)
    )


def hermitian_eigenvalues(m: np.ndarray) -> Spectrum:
    """Eigenvalues of a (possibly slightly perturbed) Hermitian matrix.

    The input must be Hermitian to 1e-8; it is symmetrized before the
    solve.  Raises numpy.linalg.LinAlgError if the solver fails to
    converge, which for matrices this size signals corrupted input.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    herm = float(np.abs(m - m.conj().T).max())
    if herm > 1e-8:
        raise ValueError(f"matrix is not Hermitian (residual {herm:.3e})")
    ev = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    spectrum = Spectrum(ev)
    drift = abs(spectrum.eigenvalues.sum() - np.trace(m).real)
    if drift > 1e-9 * max(1.0, abs(np.trace(m))):
        raise np.linalg.LinAlgError(f"eigenvalue sum drifted from the trace by {drift:.3e}")
    return spectrum


def log_negativity(rho) -> float:
    """log2 of the trace norm of the partial transpose; zero for PPT states."""
    spectrum = hermitian_eigenvalues(partial_transpose_A(rho))
    ln = math.log2(spectrum.abs_sum())
    if ln < -1e-9:
        # the trace norm of the partial transpose of a unit-trace state is
        # at least one, so anything beyond rounding is corruption
        raise ValueError(f"log negativity {ln!r} below the rounding floor")
    return max(ln, 0.0)
