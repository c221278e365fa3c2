"""Gaussian-spread photon beams and the boosted two-photon polarization state.

The two beams share one angular amplitude: a Gaussian in the polar angle
theta on a fixed momentum-magnitude shell (the magnitude is integrated out
analytically because it cancels from every transported quantity).  A
quadrature grid discretizes the remaining direction integral with
Gauss-Legendre nodes in theta on [0, pi] and a uniform periodic rule in
phi; the squared amplitude, the sphere Jacobian sin(theta) and the overall
normalization are all folded into the weights, which sum to one.

The pair state is (|h h> - |v v>)/sqrt(2) at every pair of directions.
Boosting transports each h/v vector with the rotation-form law and the
reduced polarization density matrix traces out momentum, leaving a 9x9
state over the spatial components (x, y, z) of photon A tensor photon B.
The double direction integral factorizes through 3x3 moment matrices
M_ab = sum_i w_i x_a(p_i) x_b(p_i)^dagger, so the cost is linear, not
quadratic, in the node count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import polarization, wigner
from .lorentz import Direction, LorentzTransform, null_momentum

_BASIS_LABELS = ("h", "v")
_BASIS_SIGNS = {"h": 1.0, "v": -1.0}

# PSD tolerance on the assembled density matrix; anything below is an
# internal error, not a tuning problem
_MIN_EIG_TOL = -1e-9


@dataclass(frozen=True)
class BeamSpec:
    """Gaussian angular beam: spread sigma_theta (radians), shell momentum p0."""

    sigma_theta: float
    p0: float = 1.0

    def __post_init__(self) -> None:
        if not (0.0 < self.sigma_theta <= math.pi):
            raise ValueError(f"sigma_theta must lie in (0, pi], got {self.sigma_theta}")
        if not (math.isfinite(self.p0) and self.p0 > 0.0):
            raise ValueError(f"p0 must be positive, got {self.p0}")


def angular_weight(theta, spec: BeamSpec):
    """Unnormalized squared-amplitude density exp(-theta^2/sigma^2) sin(theta)."""
    theta = np.asarray(theta, dtype=float)
    return np.exp(-((theta / spec.sigma_theta) ** 2)) * np.sin(theta)


@dataclass(frozen=True)
class QuadratureGrid:
    """Direction nodes and normalized weights (sum exactly one).

    Weights are nonnegative rather than strictly positive: for narrow
    beams the Gaussian factor underflows to an exact zero on most of the
    sphere, and those nodes simply contribute nothing.
    """

    nodes: tuple[Direction, ...]
    weights: np.ndarray
    thetas: np.ndarray = field(repr=False)
    phis: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (len(self.nodes),):
            raise ValueError("weights must match nodes one to one")
        if np.any(w < 0.0) or not np.any(w > 0.0):
            raise ValueError("weights must be nonnegative with positive total")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
        for name in ("weights", "thetas", "phis"):
            a = np.asarray(getattr(self, name), dtype=float).copy()
            a.flags.writeable = False
            object.__setattr__(self, name, a)

    def __len__(self) -> int:
        return len(self.nodes)


def build_grid(spec: BeamSpec, n_theta: int, n_phi: int) -> QuadratureGrid:
    """Tensor grid of n_theta x n_phi directions weighted by the beam density.

    Gauss-Legendre nodes cover theta on the full [0, pi]; wide beams put
    real weight in the back hemisphere, so the range is never truncated.
    The phi rule is a uniform periodic grid with equal weights.
    Renormalizing the weights to sum one absorbs the amplitude
    normalization constant, which is never needed in closed form.
    """
    if n_theta < 2 or n_phi < 2:
        raise ValueError(f"grid needs at least 2 nodes per axis, got {n_theta}x{n_phi}")
    x, gl_w = leggauss(n_theta)
    thetas = (x + 1.0) * (math.pi / 2.0)
    w_theta = gl_w * (math.pi / 2.0) * angular_weight(thetas, spec)
    phis = np.arange(n_phi) * (2.0 * math.pi / n_phi)

    th = np.repeat(thetas, n_phi)
    ph = np.tile(phis, n_theta)
    w = np.repeat(w_theta / n_phi, n_phi)
    total = w.sum()
    if not total > 0.0:
        raise ValueError(
            f"every node weight underflowed for sigma_theta={spec.sigma_theta}; "
            "the grid cannot resolve a beam this narrow"
        )
    w = w / total
    nodes = tuple(Direction(t, p) for t, p in zip(th, ph))
    return QuadratureGrid(nodes, w, th, ph)


@dataclass(frozen=True)
class DensityMatrix:
    """9x9 reduced polarization state, basis (x,y,z) of A tensor (x,y,z) of B."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (9, 9):
            raise ValueError(f"expected a 9x9 matrix, got shape {m.shape}")
        herm = float(np.abs(m - m.conj().T).max())
        if herm > 1e-10:
            raise ValueError(f"density matrix is not Hermitian (residual {herm:.3e})")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > 1e-10:
            raise ValueError(f"density matrix trace must be 1, got {tr!r}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries).min())

    def trace_residual(self) -> float:
        return abs(complex(np.trace(self.entries)) - 1.0)


def transported_pair_basis(
    L: LorentzTransform, thetas: np.ndarray, phis: np.ndarray, spec: BeamSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Spatial parts of the boosted h and v vectors at each direction.

    Vectorized equivalent of running polarization.d_rotation_form over
    h_vec and v_vec node by node (the consistency is pinned by a test).
    Uses the identities h_p = R(p)(0, cos phi, -sin phi, 0) and
    v_p = R(p)(0, sin phi, cos phi, 0): transporting rotates the in-plane
    angle by the little-group angle and re-seats the vector in the frame
    at the boosted direction.  Returns two real (3, n) arrays.
    """
    thetas = np.asarray(thetas, dtype=float)
    phis = np.asarray(phis, dtype=float)
    st, ct = np.sin(thetas), np.cos(thetas)
    momenta = spec.p0 * np.stack(
        [np.ones_like(thetas), st * np.cos(phis), st * np.sin(phis), ct]
    )
    theta_w = wigner.wigner_angles(L, momenta)
    out = L.matrix @ momenta
    rho = np.hypot(out[1], out[2])
    r = np.hypot(rho, out[3])
    ct_o, st_o = out[3] / r, rho / r
    # phi' enters only through cos/sin; avoid atan2 round trips
    safe = np.where(rho > 0.0, rho, 1.0)
    cp_o = np.where(rho > 0.0, out[1] / safe, 1.0)
    sp_o = np.where(rho > 0.0, out[2] / safe, 0.0)

    psi = phis - theta_w
    cpsi, spsi = np.cos(psi), np.sin(psi)

    def seat(vx, vy):
        # R_z(phi') R_y(theta') applied to (vx, vy, 0)
        return np.stack([ct_o * cp_o * vx - sp_o * vy, ct_o * sp_o * vx + cp_o * vy, -st_o * vx])

    return seat(cpsi, -spsi), seat(spsi, cpsi)


def pair_kernel(
    L: LorentzTransform, p_dir: Direction, q_dir: Direction, spec: BeamSpec
) -> np.ndarray:
    """Boosted pair state (|h h> - |v v>)/sqrt(2) at one direction pair.

    Returns the unit-norm complex 9-vector of spatial components, ordered
    with photon A's component varying slowest.
    """
    p = null_momentum(p_dir, spec.p0)
    q = null_momentum(q_dir, spec.p0)
    hp = polarization.d_rotation_form(L, p, polarization.h_vec(p_dir))[1:]
    vp = polarization.d_rotation_form(L, p, polarization.v_vec(p_dir))[1:]
    hq = polarization.d_rotation_form(L, q, polarization.h_vec(q_dir))[1:]
    vq = polarization.d_rotation_form(L, q, polarization.v_vec(q_dir))[1:]
    return (np.kron(hp, hq) - np.kron(vp, vq)) / math.sqrt(2.0)


def _moment_matrices(
    L: LorentzTransform, grid: QuadratureGrid, spec: BeamSpec
) -> dict[str, np.ndarray]:
    xh, xv = transported_pair_basis(L, grid.thetas, grid.phis, spec)
    basis = {"h": xh, "v": xv}
    return {
        a + b: np.einsum("n,in,jn->ij", grid.weights, basis[a], basis[b].conj()).astype(complex)
        for a in _BASIS_LABELS
        for b in _BASIS_LABELS
    }


def moment_matrix(
    L: LorentzTransform, a: str, b: str, grid: QuadratureGrid, spec: BeamSpec
) -> np.ndarray:
    """Weighted sum of outer products x_a(p_i) x_b(p_i)^dagger, a 3x3 block."""
    if a not in _BASIS_LABELS or b not in _BASIS_LABELS:
        raise ValueError(f"basis labels must be 'h' or 'v', got {a!r}, {b!r}")
    return _moment_matrices(L, grid, spec)[a + b]


def reduced_density(
    L: LorentzTransform, grid: QuadratureGrid, spec: BeamSpec
) -> DensityMatrix:
    """Boosted reduced polarization density matrix of the photon pair.

    Assembles rho = 1/2 sum_ab s_a s_b M_ab (x) M_ab with s_h = +1 and
    s_v = -1, which equals the direct double sum of pair projectors over
    the grid; the result is Hermitized and trace-normalized to absorb
    rounding.
    """
    moments = _moment_matrices(L, grid, spec)
    rho = np.zeros((9, 9), dtype=complex)
    for a in _BASIS_LABELS:
        for b in _BASIS_LABELS:
            m = moments[a + b]
            rho += 0.5 * _BASIS_SIGNS[a] * _BASIS_SIGNS[b] * np.kron(m, m)
    rho = 0.5 * (rho + rho.conj().T)
    rho /= np.trace(rho).real
    out = DensityMatrix(rho)
    min_eig = out.min_eigenvalue()
    if min_eig < _MIN_EIG_TOL:
        raise RuntimeError(
            f"density matrix is not positive semidefinite (min eigenvalue {min_eig:.3e}); "
            "this indicates an internal error"
        )
    return out
