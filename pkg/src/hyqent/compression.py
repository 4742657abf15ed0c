"""Inverse Gram-Schmidt compression of non-orthogonal ket families.

A finite family of normalized kets with known pairwise overlaps can always be
re-expressed in an orthonormal basis of the subspace it spans by a
lower-triangular coefficient matrix that preserves every overlap.  Hybrid
states supported on finitely many qumode kets thereby become ordinary
finite-dimensional density matrices, where the full DV toolbox applies.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .composite import DensityMatrix
from .kets import HybridState, InfiniteHybridFamily, ModalPure, overlap

DEPENDENCE_TOL = 1e-12


@dataclass(frozen=True)
class GramCoefficients:
    """Lower-triangular expansion of kets in an orthonormal basis.

    Row i gives |psi_i> = sum_j matrix[i, j] |e_j>.  Overlap preservation
    reads sum_k conj(matrix[i, k]) matrix[j, k] = <psi_i|psi_j>, i.e.
    matrix.conj() @ matrix.T reproduces the Gram matrix.  When kets are
    linearly dependent the basis is smaller than the family and matrix is
    rectangular (n x basis_size).
    """

    matrix: np.ndarray
    pivots: tuple

    @property
    def basis_size(self):
        return self.matrix.shape[1]

    def reconstructed_gram(self):
        return self.matrix.conj() @ self.matrix.T


def inverse_gram_schmidt(gram, dependence_tol=DEPENDENCE_TOL):
    """Expansion coefficients of kets with the given Gram matrix.

    gram[i, j] = <psi_i|psi_j>, Hermitian with unit diagonal.  Rows are
    processed in order; each new ket either extends the orthonormal basis
    (positive residual) or, when its residual norm^2 falls below
    dependence_tol, is expressed in the basis built so far, reducing the
    effective dimension instead of failing.
    """
    gram = np.asarray(gram, dtype=complex)
    n = gram.shape[0]
    if gram.shape != (n, n):
        raise ValueError("gram matrix must be square")
    if np.abs(gram - gram.conj().T).max() > 1e-8:
        raise ValueError("gram matrix must be Hermitian")
    if np.abs(np.diag(gram) - 1.0).max() > 1e-8:
        raise ValueError("gram matrix must have unit diagonal (normalized kets)")

    rows = np.zeros((n, n), dtype=complex)
    pivots = []
    for i in range(n):
        r = len(pivots)
        if r:
            # <psi_k|psi_i> = sum_j conj(A_kj) A_ij for the pivot rows k
            lower = rows[np.ix_(pivots, range(r))].conj()
            x = solve_triangular(lower, gram[pivots, i], lower=True)
            rows[i, :r] = x
        residual = gram[i, i].real - float(np.sum(np.abs(rows[i, :r]) ** 2))
        if residual > dependence_tol:
            rows[i, r] = np.sqrt(residual)
            pivots.append(i)
    r = len(pivots)
    return GramCoefficients(rows[:, :r], tuple(pivots))


def ket_expansion(kets, dependence_tol=DEPENDENCE_TOL):
    """GramCoefficients for a list of SymbolicKet built from analytic overlaps."""
    n = len(kets)
    gram = np.empty((n, n), dtype=complex)
    for i in range(n):
        gram[i, i] = 1.0
        for j in range(i + 1, n):
            gram[i, j] = overlap(kets[i], kets[j])
            gram[j, i] = np.conj(gram[i, j])
    return inverse_gram_schmidt(gram, dependence_tol=dependence_tol)


def compress_vector(state):
    """Effective DV ket of a pure HybridState, with its (d, r) dims.

    The qumode kets are replaced by their orthonormal expansion; all overlaps,
    and hence all entanglement properties, are preserved exactly.
    """
    if not state.is_pure:
        raise ValueError("compress_vector needs a pure (single-term) state")
    kets = state.kets()
    coeffs = ket_expansion(kets)
    index = {k: i for i, k in enumerate(kets)}
    d, r = state.qudit_dim, coeffs.basis_size
    v = np.zeros(d * r, dtype=complex)
    for b in state.terms[0][1]:
        v[b.m * r:(b.m + 1) * r] += b.c * coeffs.matrix[index[b.ket]]
    return v, (d, r)


def compress(state):
    """Effective DV density matrix of a HybridState on qudit x span(kets)."""
    kets = state.kets()
    coeffs = ket_expansion(kets)
    index = {k: i for i, k in enumerate(kets)}
    d, r = state.qudit_dim, coeffs.basis_size
    rho = np.zeros((d * r, d * r), dtype=complex)
    for p, branches in state.terms:
        v = np.zeros(d * r, dtype=complex)
        for b in branches:
            v[b.m * r:(b.m + 1) * r] += b.c * coeffs.matrix[index[b.ket]]
        rho += p * np.outer(v, v.conj())
    return DensityMatrix(rho, (d, r))


def _modal_expansions(sites, branch_lists):
    """Per-mode-site Gram expansions shared across all listed branches."""
    per_site = {}
    for axis, s in enumerate(sites):
        if s != "mode":
            continue
        kets = []
        for branches in branch_lists:
            for _, values in branches:
                if values[axis] not in kets:
                    kets.append(values[axis])
        per_site[axis] = (kets, ket_expansion(kets))
    return per_site


def _modal_vector(sites, branches, per_site):
    dims = []
    for axis, s in enumerate(sites):
        dims.append(per_site[axis][1].basis_size if s == "mode" else int(s))
    v = np.zeros(int(np.prod(dims)), dtype=complex)
    for c, values in branches:
        factors = []
        for axis, s in enumerate(sites):
            if s == "mode":
                kets, coeffs = per_site[axis]
                factors.append(coeffs.matrix[kets.index(values[axis])])
            else:
                e = np.zeros(int(s), dtype=complex)
                e[int(values[axis])] = 1.0
                factors.append(e)
        term = factors[0]
        for f in factors[1:]:
            term = np.kron(term, f)
        v += c * term
    return v, tuple(dims)


def compress_modal(pure):
    """Effective DV ket of a ModalPure state (kets compressed per mode site)."""
    per_site = _modal_expansions(pure.sites, [pure.branches])
    v, dims = _modal_vector(pure.sites, pure.branches, per_site)
    return v, dims


def compress_modal_mixture(weights, pures):
    """Joint compression of a mixture of ModalPure states on common sites."""
    sites = pures[0].sites
    if any(p.sites != sites for p in pures):
        raise ValueError("mixture components must share the same site layout")
    per_site = _modal_expansions(sites, [p.branches for p in pures])
    rho = None
    dims = None
    for w, p in zip(weights, pures):
        v, dims = _modal_vector(sites, p.branches, per_site)
        add = w * np.outer(v, v.conj())
        rho = add if rho is None else rho + add
    return DensityMatrix(rho, dims)


@dataclass(frozen=True)
class Classification:
    """Three-way split: effectively DV (pure or mixed) vs truly hybrid."""

    kind: str  # 'pure-dv-like' | 'mixed-dv-like' | 'truly-hybrid'
    term_count: int = 0

    PURE = "pure-dv-like"
    MIXED = "mixed-dv-like"
    TRULY_HYBRID = "truly-hybrid"


def classify(state):
    """Classify a hybrid state by the number of terms in its decomposition.

    A single pure term admits a Schmidt decomposition after compression; a
    finite mixture is still effectively DV; descriptors carrying an
    infinite-family marker (thermal-channel outputs, lazily generated
    mixtures) are truly hybrid by construction provenance, since no finite
    computation distinguishes very many kets from infinitely many.
    """
    if isinstance(state, InfiniteHybridFamily):
        return Classification(Classification.TRULY_HYBRID)
    if getattr(state, "truly_hybrid", False):
        return Classification(Classification.TRULY_HYBRID)
    if isinstance(state, HybridState):
        if state.is_pure:
            return Classification(Classification.PURE, 1)
        return Classification(Classification.MIXED, state.term_count)
    if isinstance(state, ModalPure):
        return Classification(Classification.PURE, 1)
    raise TypeError(f"cannot classify {type(state).__name__}")
