"""
Parameter sweeps
================

``run_sweep`` scans one knob and returns one row per grid point with the
cycle thermodynamics and the discord and entanglement at both baths. The
named presets write one CSV per curve.
"""

# %%
import tempfile
from pathlib import Path

from spin_otto.sweep import SweepSpec, figure_preset, rows_to_csv, run_figure, run_sweep

# %%
# A hand-made scan
# ----------------
fixed = dict(mu_h=0.0, mu_l=0.0, omega_h=4.0, omega_l=1.0, t_h=4.0, t_l=1.0)
rows = run_sweep(SweepSpec("t_hot", 2.0, 8.0, 7, fixed))
print(rows_to_csv(rows))

# %%
# Where does twisting pay off most?
# ---------------------------------
(_, spec), = figure_preset("fig2a")
rows = run_sweep(spec, jobs=2)
best = max(rows, key=lambda r: r.w)
print(f"max W = {best.w:.5f} at mu = {best.x:.2f}, eta = {best.eta:.4f}")
print("entangled hot state with positive work:", any(r.e_hot > 1e-6 and r.regime == "pw" for r in rows))

# %%
# Writing a preset to disk
# ------------------------
with tempfile.TemporaryDirectory() as out:
    for path in run_figure("fig3", out):
        lines = Path(path).read_text().splitlines()
        working = sum(line.split(",")[5] == "pw" for line in lines[1:])
        print(f"{Path(path).name}: {len(lines) - 1} rows, {working} with positive work")
