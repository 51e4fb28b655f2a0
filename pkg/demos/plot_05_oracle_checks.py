"""
Checking the closed forms
=========================

Every closed-form quantity has an independent brute-force counterpart:
Jacobi diagonalization of the dense Hamiltonian, direct assembly of the
Gibbs state, and a search over projective measurements for the discord.
"""

# %%
import numpy as np

from spin_otto import SubstanceParams, discord_analytic, thermal_xstate
from spin_otto.oracle import build_hamiltonian, discord_bruteforce, discord_landscape, jacobi_eigensolve
from spin_otto.verify import run_checks

# %%
# Jacobi against the closed form
# ------------------------------
params = SubstanceParams(3.0, 0.7)
evals, vecs = jacobi_eigensolve(build_hamiltonian(params))
print("Jacobi eigenvalues:", evals)

# %%
# The discord landscape
# ---------------------
# For a real X state the conditional entropy depends on the polar angle and
# on the azimuth. The minimum sits at a pole or on the equator.
x = thermal_xstate(params, 0.8)
thetas = np.linspace(0, np.pi, 7)
for phi in (0.0, np.pi / 4, np.pi / 2):
    print(f"phi={phi:.3f}:", np.array2string(discord_landscape(x.matrix(), thetas, np.full_like(thetas, phi)), precision=5))
report = discord_analytic(x)
print(f"closed form D = {report.discord:.8f} (D1 = {report.d1:.8f}, D2 = {report.d2:.8f})")
print(f"brute force D = {discord_bruteforce(x):.8f}")

# %%
# The same checks as ``spin-otto verify``
# ---------------------------------------
for result in run_checks(n=25, seed=1):
    print(result.line())
