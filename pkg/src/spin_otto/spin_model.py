"""Closed-form spectrum of the two-spin one-axis-twisting Hamiltonian.

    H = mu * Sx**2 + omega * Sz,    S_a = (sigma_a^1 + sigma_a^2) / 2

All matrices and vectors use the two-qubit standard basis in the order
``|11>, |10>, |01>, |00>`` (``BASIS_LABELS``), with ``Sz|11> = +|11>``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BASIS_LABELS = ("11", "10", "01", "00")

# indices into a 4-vector in the standard basis
I11, I10, I01, I00 = range(4)

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class SubstanceParams:
    """Control knobs of the working substance.

    ``mu`` is the twisting (squeezing) strength, ``omega`` the field along z.
    Units are energy with k_B = hbar = 1.
    """

    mu: float
    omega: float

    def __post_init__(self):
        for name in ("mu", "omega"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value!r}")
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class Spectrum:
    """Energies E1 <= E2 <= E3 <= E4 and their eigenvectors.

    ``eigenvectors[:, n]`` is the eigenvector of ``energies[n]`` (column
    convention, as returned by ``numpy.linalg.eigh``).
    """

    params: SubstanceParams
    energies: np.ndarray
    eigenvectors: np.ndarray
    kappa: float
    a_minus: float
    a_plus: float

    def hamiltonian(self) -> np.ndarray:
        """Rebuild H = sum_n E_n |psi_n><psi_n|."""
        v = self.eigenvectors
        return (v * self.energies) @ v.T


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def spectrum(params: SubstanceParams) -> Spectrum:
    """Exact eigenpairs of H for the given parameters.

    The pair (psi_1, psi_4) lives in span{|11>, |00>} and is written as

        psi_1 ~ mu |00> + (2 omega - kappa) |11>
        psi_4 ~ mu |00> + (2 omega + kappa) |11>

    with kappa = sqrt(mu^2 + 4 omega^2). ``2 omega - kappa`` is evaluated as
    ``-mu^2 / (2 omega + kappa)`` so psi_1 tends smoothly to |00> as mu -> 0.
    """
    if not isinstance(params, SubstanceParams):
        params = SubstanceParams(*params)
    mu, omega = params.mu, params.omega
    kappa = math.hypot(mu, 2.0 * omega)
    s = 2.0 * omega + kappa
    d = -mu * mu / s if s > 0 else 0.0  # 2*omega - kappa
    a_minus = math.hypot(mu, d)
    a_plus = math.hypot(mu, s)

    vecs = np.zeros((4, 4))
    if s > 0:
        # both depend only on r = mu / (2 omega + kappa) in [0, 1]:
        # psi_1 ~ (1, -r), psi_4 ~ (r, 1) on (|00>, |11>)
        r = mu / s
        norm = math.hypot(1.0, r)
        vecs[I00, 0] = 1.0 / norm
        vecs[I11, 0] = -r / norm
        vecs[I00, 3] = r / norm
        vecs[I11, 3] = 1.0 / norm
    else:
        # mu = omega = 0: fully degenerate, keep the mu -> 0 limiting basis
        vecs[I00, 0] = 1.0
        vecs[I11, 3] = 1.0
    vecs[I10, 1], vecs[I01, 1] = _SQRT_HALF, -_SQRT_HALF
    vecs[I10, 2], vecs[I01, 2] = _SQRT_HALF, _SQRT_HALF

    energies = np.array([(mu - kappa) / 2.0, 0.0, mu, (mu + kappa) / 2.0])
    return Spectrum(
        params=params,
        energies=_frozen(energies),
        eigenvectors=_frozen(vecs),
        kappa=kappa,
        a_minus=a_minus,
        a_plus=a_plus,
    )


def energy_gaps(spec: Spectrum) -> np.ndarray:
    """Adjacent level spacings (E2 - E1, E3 - E2, E4 - E3)."""
    energies = getattr(spec, "energies", spec)
    return np.diff(np.asarray(energies, dtype=float))
