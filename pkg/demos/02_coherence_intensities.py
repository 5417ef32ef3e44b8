"""Coherence-order bookkeeping: which intensities exist and where they go.

The evolved state is split by coherence order (how much total z magnetization
an element shifts). Pairing each order against the matching component of the
high-temperature reference gives the observable intensities. Only orders 0
and +/-2 survive; the total is conserved.
"""

import numpy as np

from mqdimer import (
    DimerParams,
    analytic_intensities,
    decompose,
    evolve_analytic,
    ht_reference,
    initial_polarization,
    intensity,
)

p = DimerParams(alpha=1.0, beta=0.0, b=10.0)
print("initial polarization F =", initial_polarization(p))
print(f"\n{'tau_bar':>8} {'G0':>10} {'G+2':>10} {'G-2':>10} {'G+1':>10} {'sum':>10}")

for tau_bar in np.linspace(0.0, np.pi / 2.0, 9):
    rho_comps = decompose(evolve_analytic(p, tau_bar=float(tau_bar)))
    ht_comps = decompose(ht_reference(tau_bar=float(tau_bar)))
    g = {n: intensity(rho_comps, ht_comps, n) for n in (-2, -1, 0, 1, 2)}
    total = g[0] + g[2] + g[-2]
    print(
        f"{tau_bar:8.4f} {g[0]:10.6f} {g[2]:10.6f} {g[-2]:10.6f} {g[1]:10.2e} {total:10.6f}"
    )

print("\nClosed forms match the matrix route:")
for tau_bar in (0.3, 0.7, 1.2):
    prof = analytic_intensities(p, tau_bar=tau_bar)
    rho_comps = decompose(evolve_analytic(p, tau_bar=tau_bar))
    ht_comps = decompose(ht_reference(tau_bar=tau_bar))
    diff = max(
        abs(intensity(rho_comps, ht_comps, 0) - prof.g0),
        abs(intensity(rho_comps, ht_comps, 2) - prof.g_plus2),
    )
    print(f"  tau_bar = {tau_bar}: J2 = {prof.j2:.6f}, route difference {diff:.2e}")
