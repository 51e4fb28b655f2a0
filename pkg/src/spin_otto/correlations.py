"""Quantum discord and entanglement of formation for real X states."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .spin_model import SubstanceParams
from .thermal import XState, binary_entropy, reduced_entropy, shannon_entropy, thermal_xstate

CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class CorrelationReport:
    discord: float
    d1: float
    d2: float
    concurrence: float
    eof: float
    gamma: float
    delta_plus: float
    delta_minus: float


def concurrence(x: XState) -> float:
    """C = 2 max{0, |z| - sqrt(a d), |w| - b}."""
    return 2.0 * max(0.0, abs(x.z) - math.sqrt(max(x.a * x.d, 0.0)), abs(x.w) - x.b)


def eof_from_concurrence(c: float) -> float:
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def eof(x: XState) -> float:
    """Entanglement of formation in ebits."""
    return eof_from_concurrence(concurrence(x))


def _xlog_ratio(x: float, total: float) -> float:
    # -x log2(x / total), 0 when x = 0
    if x <= 0.0:
        return 0.0
    return -x * math.log2(x / total)


def _d1_branch(x: XState, base: float) -> float:
    # measurement along the computational (z) axis
    a, b, d = x.a, x.b, x.d
    return (
        base
        + _xlog_ratio(a, a + b)
        + _xlog_ratio(b, a + b)
        + _xlog_ratio(d, b + d)
        + _xlog_ratio(b, b + d)
    )


def _gamma(x: XState) -> float:
    return math.sqrt((x.a - x.d) ** 2 + 4.0 * (abs(x.z) + abs(x.w)) ** 2)


def _d2_branch(x: XState, base: float) -> float:
    # measurement in the transverse plane
    gamma = _gamma(x)
    return base + shannon_entropy((0.5 * (1.0 + gamma), 0.5 * (1.0 - gamma)))


def discord_analytic(x: XState) -> CorrelationReport:
    """Analytic discord D = min{D1, D2} with the full correlation report.

    S(rho) is taken from the closed-form X-state eigenvalues. Negative
    round-off no larger than ``CLAMP_TOL`` is clamped to zero.
    """
    base = reduced_entropy(x) - shannon_entropy(x.eigenvalues())
    d1 = _d1_branch(x, base)
    d2 = _d2_branch(x, base)
    discord = min(d1, d2)
    if -CLAMP_TOL <= discord < 0.0:
        discord = 0.0
    gamma = _gamma(x)
    c = concurrence(x)
    return CorrelationReport(
        discord=discord,
        d1=d1,
        d2=d2,
        concurrence=c,
        eof=eof_from_concurrence(c),
        gamma=gamma,
        delta_plus=0.5 * (1.0 + gamma),
        delta_minus=0.5 * (1.0 - gamma),
    )


def correlations_at(params: SubstanceParams, temperature: float) -> CorrelationReport:
    """Discord and EoF of the Gibbs state of ``params`` at ``temperature``."""
    return discord_analytic(thermal_xstate(params, temperature))
