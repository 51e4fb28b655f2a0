"""Gibbs populations and the X-state form of the thermal density matrix."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin_model import I00, I11, Spectrum, SubstanceParams, spectrum


def _check_temperature(temperature: float) -> float:
    if not math.isfinite(temperature) or temperature <= 0:
        raise ValueError(f"temperature must be positive and finite, got {temperature!r}")
    return float(temperature)


@dataclass(frozen=True)
class ThermalPoint:
    params: SubstanceParams
    temperature: float

    def __post_init__(self):
        object.__setattr__(self, "temperature", _check_temperature(self.temperature))

    @property
    def beta(self) -> float:
        return 1.0 / self.temperature


@dataclass(frozen=True)
class Populations:
    """Occupation probabilities P_n in the order of ``Spectrum.energies``.

    The partition function is kept as ``log_z`` together with the energy
    ``shift`` (the minimum level) used while exponentiating, so that
    ``Z = exp(log_z)`` never has to be formed at large beta * E.
    """

    p: np.ndarray
    log_z: float
    shift: float


@dataclass(frozen=True)
class XState:
    """Real two-qubit X state in the basis |11>, |10>, |01>, |00>.

        [[a, 0, 0, w],
         [0, b, z, 0],
         [0, z, b, 0],
         [w, 0, 0, d]]
    """

    a: float
    b: float
    d: float
    w: float
    z: float

    def matrix(self) -> np.ndarray:
        a, b, d, w, z = self.a, self.b, self.d, self.w, self.z
        return np.array(
            [
                [a, 0.0, 0.0, w],
                [0.0, b, z, 0.0],
                [0.0, z, b, 0.0],
                [w, 0.0, 0.0, d],
            ]
        )

    def eigenvalues(self) -> np.ndarray:
        """Closed-form spectrum: b +- z and (a+d)/2 +- sqrt((a-d)^2/4 + w^2)."""
        r = math.hypot((self.a - self.d) / 2.0, self.w)
        m = (self.a + self.d) / 2.0
        return np.array([self.b - self.z, self.b + self.z, m - r, m + r])

    def trace(self) -> float:
        return self.a + 2.0 * self.b + self.d


def shannon_entropy(p) -> float:
    """-sum p log2 p with 0 log 0 = 0."""
    p = np.asarray(p, dtype=float)
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p))) + 0.0  # no -0.0


def binary_entropy(x: float) -> float:
    """h[x] = -x log2 x - (1-x) log2 (1-x); arguments are clipped to [0, 1]."""
    x = min(max(float(x), 0.0), 1.0)
    return shannon_entropy((x, 1.0 - x))


def populations(spec, temperature: float) -> Populations:
    """Boltzmann weights exp(-E_n / T) / Z.

    ``spec`` is a ``Spectrum`` or any sequence of level energies.
    """
    temperature = _check_temperature(temperature)
    energies = np.asarray(getattr(spec, "energies", spec), dtype=float)
    shift = float(energies.min())
    weights = np.exp(-(energies - shift) / temperature)
    total = weights.sum()
    return Populations(
        p=weights / total,
        log_z=math.log(total) - shift / temperature,
        shift=shift,
    )


def thermal_xstate(params: SubstanceParams, temperature: float) -> XState:
    """X-state entries of rho = sum_n P_n |psi_n><psi_n| at temperature T."""
    spec = params if isinstance(params, Spectrum) else spectrum(params)
    p = populations(spec, temperature).p
    v1 = spec.eigenvectors[:, 0]
    v4 = spec.eigenvectors[:, 3]
    a = p[0] * v1[I11] ** 2 + p[3] * v4[I11] ** 2
    d = p[0] * v1[I00] ** 2 + p[3] * v4[I00] ** 2
    w = p[0] * v1[I11] * v1[I00] + p[3] * v4[I11] * v4[I00]
    b = (p[1] + p[2]) / 2.0
    z = (p[2] - p[1]) / 2.0
    return XState(a=float(a), b=float(b), d=float(d), w=float(w), z=float(z))


def von_neumann_entropy(pops) -> float:
    """S(rho) in bits of a thermal state; rho is diagonal in the energy basis."""
    return shannon_entropy(getattr(pops, "p", pops))


def reduced_entropy(x: XState) -> float:
    """S(rho_A) = h[a + b]; rho_A = diag(a + b, b + d) and equals rho_B."""
    return binary_entropy(x.a + x.b)
