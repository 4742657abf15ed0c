"""Truncated Fock-space tour: mode operators, coherent states, and a cat's
Wigner function.

Everything here lives on a finite photon-number ladder; the cutoff policy
keeps the neglected Poisson tail far below the working tolerances, and every
overlap used later in the toolbox has an exact closed form.
"""

import numpy as np

from hyqent import (coherent_ket, coherent_tail_weight, default_cutoff,
                    displace, mode_operators, overlap_coherent, wigner)

# --- ladder operators and the truncation artifact -------------------------
n_cut = 12
a, adag, number = mode_operators(n_cut)
comm = a @ adag - adag @ a
print("commutator [a, a^dag] is the identity except the corner entry:")
print("  diag =", np.round(np.diag(comm).real, 10))

# --- coherent states -------------------------------------------------------
alpha = 1.5
print(f"\ncutoff policy for |alpha| = {alpha}: n_cut = {default_cutoff(alpha)}")
v = coherent_ket(alpha)
print(f"norm of the truncated ket: {np.linalg.norm(v):.12f}")
print(f"neglected tail weight:     {coherent_tail_weight(alpha, v.size - 1):.3e}")

# a|alpha> = alpha |alpha>, checked on the truncated ladder
a_big, _, _ = mode_operators(v.size - 1)
residual = np.linalg.norm(a_big @ v - alpha * v)
print(f"eigenstate residual |a|a> - a|a>|: {residual:.2e} (pure truncation)")

# displacement generates the same state from vacuum
u = displace(alpha, v.size - 1)
vac = np.zeros(v.size); vac[0] = 1.0
print(f"D(alpha)|0> vs Glauber expansion:  {np.linalg.norm(u @ vac - v):.2e}")

# the analytic overlap, e.g. <-alpha|alpha> = exp(-2|alpha|^2)
print(f"\n<-a|a> analytic: {overlap_coherent(alpha, -alpha).real:.6e}")
print(f"exp(-2|a|^2):    {np.exp(-2 * alpha**2):.6e}")

# --- Wigner function of an even cat ----------------------------------------
alpha = 2.0
n_cut = default_cutoff(alpha)
cat = coherent_ket(alpha * np.exp(1j * np.pi / 6), n_cut) \
    + coherent_ket(alpha * np.exp(-1j * np.pi / 6), n_cut)
cat /= np.linalg.norm(cat)
grid = np.linspace(-7, 7, 141)
field = wigner(np.outer(cat, cat.conj()), grid, grid)
print(f"\ncat-state Wigner function on a {grid.size}x{grid.size} grid:")
print(f"  total mass      = {field.mass:.8f}")
print(f"  minimum value   = {field.values.min():.4f}  (negative: nonclassical)")
print(f"  vacuum W(0,0) would be 1/pi = {1 / np.pi:.4f}")
