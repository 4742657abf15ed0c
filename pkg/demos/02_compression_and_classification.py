"""From infinite-dimensional hybrid states to small density matrices.

A qudit-qumode state holding finitely many qumode kets can be rewritten, with
all overlaps preserved, on an orthonormal basis of the span of those kets.
The coefficients come out lower triangular with positive diagonal; states with
infinitely many kets admit no such compression and stay truly hybrid.
"""

import numpy as np

from hyqent import classify, compress, inverse_gram_schmidt, ket_expansion
from hyqent.catalog import (binary_coherent, geometric_mixture, mixed23,
                            qutrit_qumode, thermal_output)

# --- the triangular re-expansion on a worked 3-ket example -----------------
c1, c2, c3 = 0.30, 0.45, 0.20
gram = np.array([[1, c1, c2], [c1, 1, c3], [c2, c3, 1]], dtype=complex)
rows = inverse_gram_schmidt(gram).matrix
print("three kets with pairwise overlaps (0.30, 0.45, 0.20) expand as:")
for i, row in enumerate(rows):
    terms = " + ".join(f"{x.real:.4f}|e{j}>" for j, x in enumerate(row) if abs(x) > 1e-12)
    print(f"  |psi_{i+1}> = {terms}")
print("overlap reconstruction error:",
      np.abs(inverse_gram_schmidt(gram).reconstructed_gram() - gram).max())

# --- compressing catalog states --------------------------------------------
st = binary_coherent(1.0).payload
rho = compress(st)
print(f"\n(|0>|a> + |1>|-a>)/sqrt2 compresses to dims {rho.dims}"
      f" (a 2x2 effective system)")

st3 = qutrit_qumode(1.18).payload
print("qutrit-qumode Gram rows (note the closed-form third coefficient):")
print(np.round(ket_expansion(st3.kets()).matrix.real, 4))

# --- the three-way classification -------------------------------------------
for named in (binary_coherent(1.0), mixed23(0.4, 1.0),
              geometric_mixture(0.5, 0.7), thermal_output(1.0, 0.7, 0.3)):
    cls = classify(named.payload)
    extra = f" ({cls.term_count} terms)" if cls.kind == "mixed-dv-like" else ""
    print(f"  {named.id:<20} -> {cls.kind}{extra}")

print("\ntruly hybrid states carry an infinite ket family: only witnesses,"
      " never finite compressions, can speak about their entanglement.")
