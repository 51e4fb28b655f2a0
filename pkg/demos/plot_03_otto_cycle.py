"""
One Otto cycle
==============

The substance thermalizes with a hot bath at (mu_H, omega_H), is changed
adiabatically to (mu_L, omega_L), thermalizes with a cold bath and is
changed back. Heat flows only in the thermalization strokes, so work is
what is left over.
"""

# %%
from spin_otto import CycleSpec, carnot_efficiency, evaluate_cycle

# %%
# A field-only engine
# -------------------
# Without twisting every gap scales with omega, so the efficiency is the
# ratio of fields whenever the cycle runs as an engine.
spec = CycleSpec.from_values(0.0, 4.0, 8.0, 0.0, 1.0, 1.0)
res = evaluate_cycle(spec)
print(res.regime.token, res.work, res.efficiency, "carnot:", carnot_efficiency(spec))

# %%
# The engine stops once the hot bath is too cold: T_H must exceed
# (omega_H / omega_L) T_L.
for t_h in (3.0, 4.0, 4.5, 6.0):
    r = evaluate_cycle(CycleSpec.from_values(0.0, 4.0, t_h, 0.0, 1.0, 1.0))
    print(f"T_H={t_h}: regime={r.regime.token:6s} W={r.work:+.5f}")

# %%
# Adding twisting
# ---------------
# A moderate twist at both baths raises the work output.
for mu in (0.0, 1.0, 2.0, 2.8, 4.0, 6.0):
    r = evaluate_cycle(CycleSpec.from_values(mu, 4.0, 4.0, mu, 1.0, 1.0))
    eta = "  n/a " if r.efficiency is None else f"{r.efficiency:.4f}"
    print(f"mu={mu:3.1f}  W={r.work:+.5f}  eta={eta}  {r.regime.token}")
