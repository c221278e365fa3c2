"""Independent construction routes used to cross-check reduced_density."""
import numpy as np

from photonboost.beams import pair_kernel
from photonboost.lorentz import Direction, null_momentum
from photonboost.polarization import epsilon
from photonboost.wigner import wigner_angle


def direct_double_sum_density(L, grid, spec):
    """Brute-force double sum of pair projectors over the grid."""
    n = len(grid)
    rho = np.zeros((9, 9), dtype=complex)
    kernels = np.empty((n, n, 9), dtype=complex)
    for i, p_dir in enumerate(grid.nodes):
        for j, q_dir in enumerate(grid.nodes):
            kernels[i, j] = pair_kernel(L, p_dir, q_dir, spec)
    w = grid.weights
    rho = np.einsum("i,j,ijA,ijB->AB", w, w, kernels, kernels.conj())
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def helicity_route_density(L, grid, spec):
    """Assemble rho from helicity amplitudes and helicity transport.

    The initial amplitudes put equal weight on the two like-helicity pairs
    with azimuth phase factors; each single-photon piece transports with
    the little-group phase onto the circular basis vector at the boosted
    direction.  Factorizes through 3x3 moments exactly like the h/v route.
    """
    n = len(grid)
    y = {}
    for lam in (+1, -1):
        vecs = np.empty((3, n), dtype=complex)
        for i, d in enumerate(grid.nodes):
            p = null_momentum(d, spec.p0)
            phase = np.exp(-1j * lam * wigner_angle(L, p))
            out_dir = Direction.from_vector(L.apply(p).spatial())
            vecs[:, i] = np.exp(1j * lam * d.phi) * phase * epsilon(out_dir, lam)[1:]
        y[lam] = vecs
    rho = np.zeros((9, 9), dtype=complex)
    for lam in (+1, -1):
        for mu in (+1, -1):
            m = np.einsum("n,in,jn->ij", grid.weights, y[lam], y[mu].conj())
            rho += 0.5 * np.kron(m, m)
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real
