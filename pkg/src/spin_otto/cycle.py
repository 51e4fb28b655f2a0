"""Four-stroke quantum Otto cycle evaluated from its two thermal endpoints.

Stroke 1 thermalizes the levels E_n^H with the hot bath, stroke 3 the levels
E_n^L with the cold bath. The adiabatic strokes keep populations attached to
the level index n; since levels never cross for mu, omega >= 0, index order
and adiabatic continuation coincide.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .spin_model import SubstanceParams, spectrum
from .thermal import _check_temperature, populations

DEFAULT_TOL = 1e-12


class Regime(enum.Enum):
    POSITIVE_WORK = "pw"
    NO_OPERATION = "none"
    SECOND_LAW_EXCLUDED_A = "viol-a"
    SECOND_LAW_EXCLUDED_B = "viol-b"

    @property
    def token(self) -> str:
        return self.value


@dataclass(frozen=True)
class BathEndpoint:
    params: SubstanceParams
    temperature: float

    def __post_init__(self):
        if not isinstance(self.params, SubstanceParams):
            object.__setattr__(self, "params", SubstanceParams(*self.params))
        object.__setattr__(self, "temperature", _check_temperature(self.temperature))


@dataclass(frozen=True)
class CycleSpec:
    hot: BathEndpoint
    cold: BathEndpoint

    def __post_init__(self):
        if not self.hot.temperature > self.cold.temperature:
            raise ValueError(
                "hot bath must be hotter than cold bath: "
                f"T_H={self.hot.temperature!r}, T_L={self.cold.temperature!r}"
            )

    @classmethod
    def from_values(cls, mu_h, omega_h, t_h, mu_l, omega_l, t_l) -> "CycleSpec":
        return cls(
            hot=BathEndpoint(SubstanceParams(mu_h, omega_h), t_h),
            cold=BathEndpoint(SubstanceParams(mu_l, omega_l), t_l),
        )


@dataclass(frozen=True)
class CycleResult:
    q_in: float
    q_out: float
    work: float
    efficiency: Optional[float]
    regime: Regime
    p_hot: np.ndarray
    p_cold: np.ndarray


def classify_regime(q_in: float, q_out: float, tol: float = DEFAULT_TOL) -> Regime:
    """Sort a (Q_in, Q_out) pair into the positive-work or excluded regimes.

    Strict inequalities are taken ``tol`` beyond equality, so marginal cases
    land in ``NO_OPERATION``.
    """
    if q_in > -q_out + tol and -q_out > tol:
        return Regime.POSITIVE_WORK
    if q_in > q_out + tol and q_out > tol:
        return Regime.SECOND_LAW_EXCLUDED_A
    if q_out > -q_in + tol and -q_in > tol:
        return Regime.SECOND_LAW_EXCLUDED_B
    return Regime.NO_OPERATION


def cycle_from_populations(e_hot, e_cold, p_hot, p_cold, tol: float = DEFAULT_TOL) -> CycleResult:
    """Heats and work given the populations left by each isochoric stroke."""
    e_hot = np.asarray(e_hot, dtype=float)
    e_cold = np.asarray(e_cold, dtype=float)
    p_hot = np.asarray(p_hot, dtype=float)
    p_cold = np.asarray(p_cold, dtype=float)
    dp = p_hot - p_cold
    q_in = float(np.dot(e_hot, dp))
    q_out = float(-np.dot(e_cold, dp))
    work = q_in + q_out
    regime = classify_regime(q_in, q_out, tol)
    efficiency = work / q_in if regime is Regime.POSITIVE_WORK else None
    return CycleResult(q_in, q_out, work, efficiency, regime, p_hot, p_cold)


def cycle_from_levels(e_hot, e_cold, t_hot, t_cold, tol: float = DEFAULT_TOL) -> CycleResult:
    """Heats and work for arbitrary level sets paired by index."""
    p_hot = populations(e_hot, t_hot).p
    p_cold = populations(e_cold, t_cold).p
    return cycle_from_populations(e_hot, e_cold, p_hot, p_cold, tol)


def evaluate_cycle(spec: CycleSpec, tol: float = DEFAULT_TOL) -> CycleResult:
    e_hot = spectrum(spec.hot.params).energies
    e_cold = spectrum(spec.cold.params).energies
    return cycle_from_levels(e_hot, e_cold, spec.hot.temperature, spec.cold.temperature, tol)


def carnot_efficiency(spec: CycleSpec) -> float:
    return 1.0 - spec.cold.temperature / spec.hot.temperature

