"""Seeded oracle-equivalence checks, the engine behind ``spin-otto verify``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from . import correlations, oracle
from .spin_model import SubstanceParams, spectrum
from .thermal import thermal_xstate

SPECTRUM_TOL = 1e-10
RESIDUAL_TOL = 1e-12
XSTATE_TOL = 1e-10
DISCORD_TOL = 2e-4


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_deviation <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: max deviation {self.max_deviation:.3e} (tol {self.tolerance:.0e})"


def spectrum_deviation(params: SubstanceParams):
    """(energy deviation vs Jacobi, worst eigenpair residual on the dense H)."""
    spec = spectrum(params)
    h = oracle.build_hamiltonian(params)
    evals, _ = oracle.jacobi_eigensolve(h)
    energy_dev = float(np.max(np.abs(evals - spec.energies)))
    v = spec.eigenvectors
    residual = float(np.max(np.linalg.norm(h @ v - v * spec.energies, axis=0)))
    return energy_dev, residual


def xstate_deviation(params: SubstanceParams, temperature: float) -> float:
    x = thermal_xstate(params, temperature)
    direct = oracle.thermal_state_direct(params, temperature)
    return float(np.max(np.abs(x.matrix() - direct)))


def discord_deviation(params: SubstanceParams, temperature: float, coarse_n: int = 181) -> float:
    x = thermal_xstate(params, temperature)
    analytic = correlations.discord_analytic(x).discord
    brute = oracle.discord_bruteforce(x, coarse_n=coarse_n)
    return abs(analytic - brute)


def run_checks(n: int, seed: int, coarse_n: int = 181) -> List[CheckResult]:
    if n < 1:
        raise ValueError("ensemble size must be >= 1")
    rng = np.random.default_rng(seed)

    energy_dev = residual = 0.0
    for mu, omega in rng.uniform(0.0, 20.0, size=(n, 2)):
        e, r = spectrum_deviation(SubstanceParams(mu, omega))
        energy_dev = max(energy_dev, e)
        residual = max(residual, r)

    xs_dev = 0.0
    for mu, omega, t in zip(rng.uniform(0, 20, n), rng.uniform(0, 20, n), rng.uniform(0.05, 100, n)):
        xs_dev = max(xs_dev, xstate_deviation(SubstanceParams(mu, omega), t))

    d_dev = 0.0
    for mu, omega, t in zip(rng.uniform(0, 12, n), rng.uniform(0, 12, n), rng.uniform(0.2, 20, n)):
        d_dev = max(d_dev, discord_deviation(SubstanceParams(mu, omega), t, coarse_n))

    return [
        CheckResult("spectrum vs Jacobi", energy_dev, SPECTRUM_TOL),
        CheckResult("eigenvector residual", residual, RESIDUAL_TOL),
        CheckResult("X state vs direct construction", xs_dev, XSTATE_TOL),
        CheckResult("analytic vs brute-force discord", d_dev, DISCORD_TOL),
    ]
