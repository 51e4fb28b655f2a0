"""Two-spin one-axis-twisting quantum Otto engine.

Closed-form spectra and Gibbs states, Otto-cycle thermodynamics, quantum
discord and entanglement of formation, with brute-force oracles in
``spin_otto.oracle`` and parameter sweeps in ``spin_otto.sweep``.
"""
from .correlations import (
    CorrelationReport,
    concurrence,
    correlations_at,
    discord_analytic,
    eof,
)
from .cycle import (
    BathEndpoint,
    CycleResult,
    CycleSpec,
    Regime,
    carnot_efficiency,
    classify_regime,
    evaluate_cycle,
)
from .spin_model import Spectrum, SubstanceParams, energy_gaps, spectrum
from .thermal import (
    Populations,
    ThermalPoint,
    XState,
    populations,
    reduced_entropy,
    thermal_xstate,
    von_neumann_entropy,
)

__version__ = "0.1.0"
