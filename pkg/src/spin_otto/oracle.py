"""Brute-force cross-checks that share no code path with the closed forms.

Everything here works on dense matrices: the Hamiltonian is assembled from
Pauli operators, diagonalized by cyclic Jacobi rotations, and the discord is
found by searching over projective measurements on the second qubit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .spin_model import SubstanceParams

# single-qubit basis order (|1>, |0>) so that kron products give |11>,|10>,|01>,|00>
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
IDENTITY2 = np.eye(2)

SYMMETRY_TOL = 1e-14


def collective(op: np.ndarray) -> np.ndarray:
    """S_a = (sigma_a x 1 + 1 x sigma_a) / 2."""
    return 0.5 * (np.kron(op, IDENTITY2) + np.kron(IDENTITY2, op))


def build_hamiltonian(params: SubstanceParams) -> np.ndarray:
    sx = collective(SIGMA_X)
    sz = collective(SIGMA_Z)
    return params.mu * sx @ sx + params.omega * sz


def _off_norm(m: np.ndarray) -> float:
    off = m - np.diag(np.diag(m))
    return float(np.linalg.norm(off))


def jacobi_eigensolve(m, tol: float = 1e-14, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Sweeps stop once the off-diagonal Frobenius norm drops below ``tol``.
    Returns ``(eigenvalues, vectors)`` with eigenvalues ascending and
    ``vectors[:, k]`` the k-th eigenvector.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOL * max(1.0, np.max(np.abs(a), initial=0.0)):
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    v = np.eye(n)

    for _ in range(max_sweeps):
        if _off_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        if _off_norm(a) >= tol:
            raise RuntimeError("Jacobi iteration did not converge")

    evals = np.diag(a).copy()
    order = np.argsort(evals, kind="stable")
    return evals[order], v[:, order]


def thermal_state_direct(params: SubstanceParams, temperature: float) -> np.ndarray:
    """rho = sum_n P_n |v_n><v_n| from the Jacobi eigenpairs of H."""
    if not math.isfinite(temperature) or temperature <= 0:
        raise ValueError(f"temperature must be positive and finite, got {temperature!r}")
    evals, vecs = jacobi_eigensolve(build_hamiltonian(params))
    weights = np.exp(-(evals - evals.min()) / temperature)
    weights /= weights.sum()
    return (vecs * weights) @ vecs.T


def gibbs_matrix_exponential(params: SubstanceParams, temperature: float) -> np.ndarray:
    """rho = exp(-H/T) / Z via a general matrix exponential."""
    h = build_hamiltonian(params)
    shift = np.min(np.diag(h)) - np.sum(np.abs(h))  # lower bound on the spectrum
    rho = scipy.linalg.expm(-(h - shift * np.eye(4)) / temperature)
    return rho / np.trace(rho)


def entropy_bits(rho: np.ndarray) -> float:
    """Von Neumann entropy of a Hermitian matrix via a dense eigensolver."""
    evals = np.linalg.eigvalsh(rho)
    evals = evals[evals > 1e-300]
    return float(-np.sum(evals * np.log2(evals)))


def partial_trace_b(rho: np.ndarray) -> np.ndarray:
    return np.einsum("ijkj->ik", rho.reshape(2, 2, 2, 2))


def partial_trace_a(rho: np.ndarray) -> np.ndarray:
    return np.einsum("ijil->jl", rho.reshape(2, 2, 2, 2))


def concurrence_wootters(rho: np.ndarray) -> float:
    """Concurrence from the spin-flipped spectrum, valid for any two-qubit state."""
    yy = np.kron(SIGMA_Y, SIGMA_Y)
    r = rho @ yy @ rho.conj() @ yy
    lam = np.sqrt(np.clip(np.sort(np.linalg.eigvals(r).real)[::-1], 0.0, None))
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


@dataclass(frozen=True)
class MeasurementAngles:
    """Bloch direction of the projector |n><n| on qubit B.

    |n> = cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise ValueError(f"phi must lie in [0, 2 pi), got {self.phi!r}")


def _binary_entropy_array(p):
    out = np.zeros_like(p)
    for q in (p, 1.0 - p):
        mask = q > 0
        out[mask] -= q[mask] * np.log2(q[mask])
    return out


def conditional_entropy(rho: np.ndarray, theta, phi) -> np.ndarray:
    """sum_k p_k S(rho_{A|k}) for projective measurements on B (vectorized)."""
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    # components in the (|1>, |0>) ordering
    up = np.stack([np.exp(1j * phi) * np.sin(theta / 2), np.cos(theta / 2) + 0j], axis=-1)
    down = np.stack([np.cos(theta / 2) + 0j, -np.exp(-1j * phi) * np.sin(theta / 2)], axis=-1)
    r = rho.reshape(2, 2, 2, 2)
    total = np.zeros(theta.shape)
    for ket in (up, down):
        outer = ket.conj()[..., :, None] * ket[..., None, :]
        cond = np.tensordot(outer, r, axes=([-2, -1], [1, 3]))
        p = np.real(cond[..., 0, 0] + cond[..., 1, 1])
        det = np.real(cond[..., 0, 0] * cond[..., 1, 1] - cond[..., 0, 1] * cond[..., 1, 0])
        safe = np.where(p > 1e-300, p, 1.0)
        disc = np.sqrt(np.clip(0.25 - det / safe**2, 0.0, None))
        s = _binary_entropy_array(np.clip(0.5 + disc, 0.0, 1.0))
        total += np.where(p > 1e-300, p * s, 0.0)
    return total


def discord_landscape(rho: np.ndarray, theta, phi) -> np.ndarray:
    """D(theta, phi) = S(rho_B) - S(rho) + sum_k p_k S(rho_{A|k})."""
    base = entropy_bits(partial_trace_a(rho)) - entropy_bits(rho)
    return base + conditional_entropy(rho, theta, phi)


def discord_bruteforce(x, coarse_n: int = 181, refine_iters: int = 40) -> float:
    """Discord minimized over projective measurements on qubit B.

    A ``coarse_n x coarse_n`` grid over (theta, phi) locates the best cell,
    then ``refine_iters`` rounds of a shrinking 5x5 pattern search polish it.
    ``x`` is an ``XState`` or a dense 4x4 density matrix.
    """
    if coarse_n < 64:
        raise ValueError("coarse_n must be >= 64")
    rho = x.matrix() if hasattr(x, "matrix") else np.asarray(x)
    thetas = np.linspace(0.0, math.pi, coarse_n)
    phis = np.arange(coarse_n) * (2.0 * math.pi / coarse_n)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    grid = discord_landscape(rho, tt, pp)
    i, j = np.unravel_index(np.argmin(grid), grid.shape)
    best = float(grid[i, j])
    theta0, phi0 = thetas[i], phis[j]

    dt = thetas[1] - thetas[0]
    dp = phis[1] - phis[0]
    offsets = np.linspace(-1.0, 1.0, 5)
    for _ in range(refine_iters):
        cand_t = np.clip(theta0 + offsets * dt, 0.0, math.pi)
        cand_p = np.mod(phi0 + offsets * dp, 2.0 * math.pi)
        ct, cp = np.meshgrid(cand_t, cand_p, indexing="ij")
        vals = discord_landscape(rho, ct, cp)
        k, l = np.unravel_index(np.argmin(vals), vals.shape)
        if vals[k, l] < best:
            best = float(vals[k, l])
            theta0, phi0 = cand_t[k], cand_p[l]
        dt *= 0.5
        dp *= 0.5
    return max(best, 0.0) if best > -1e-12 else best
