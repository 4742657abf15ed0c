"""Moment-matrix inseparability machinery and named determinant witnesses.

A bipartite state is NPT exactly when some principal minor of the matrix of
partially transposed moments is negative; on separable states every principal
minor is nonnegative.  Mode a is always the CV subsystem, mode b the qudit.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

import numpy as np
from scipy.optimize import brentq

from .channels import ThermalHybridState, thermal_dyad_moments
from .composite import DensityMatrix
from .errors import InconsistentMoments, NumericInconsistency, UnsupportedKet
from .fock import mode_operators, overlap_coherent
from .kets import COHERENT, HybridState

INCONCLUSIVE_BAND = 1e-12


def heaviside_half(x):
    """Step function with the half-maximum convention Theta(0) = 1/2."""
    if x > 0:
        return 1.0
    if x < 0:
        return 0.0
    return 0.5


def qudit_mode_operators(d):
    """Ladder operators adapted to a d-level system.

    Same matrix elements sqrt(n) as the bosonic operators but cut at the top
    level, so (a_d)^d = 0 and the commutator becomes diag(1, ..., 1, -(d-1)).
    Witness determinants computed with these agree with the embedded
    infinite-dimensional reading for all moments used here.
    """
    if d < 2:
        raise ValueError("qudit dimension must be >= 2")
    a = np.diag(np.sqrt(np.arange(1, d)), 1).astype(complex)
    return a, a.conj().T


def sv_multi_indices(max_total_degree, qudit_dim=None):
    """Ordered multi-indices (i1, i2, i3, i4) with total degree <= max.

    i1, i2 are a/a^dag powers, i3, i4 are b/b^dag powers.  Ordering is by
    total degree, then by the lexicographic tiebreak on (i3, i4, i1, i2); a
    fixed order keeps golden files stable although minors do not depend on it.
    Indices whose qudit powers reach (a_d)^d = 0 are dropped.
    """
    rng = range(max_total_degree + 1)
    out = [u for u in ((i1, i2, i3, i4) for i1 in rng for i2 in rng
                       for i3 in rng for i4 in rng) if sum(u) <= max_total_degree]
    if qudit_dim is not None:
        out = [u for u in out if u[2] < qudit_dim and u[3] < qudit_dim]
    out.sort(key=lambda u: (sum(u), u[2], u[3], u[0], u[1]))
    return out


@dataclass(frozen=True)
class MomentMatrix:
    """Hermitian matrix of partially transposed moments with its index map."""

    matrix: np.ndarray
    index_map: tuple

    def position(self, multi_index):
        return self.index_map.index(tuple(multi_index))


# rows generating the two workhorse determinants
S1_INDICES = ((0, 0, 0, 0), (0, 0, 0, 1), (0, 1, 0, 1))
S2_INDICES = ((0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))


def sv_moment_matrix(provider, max_total_degree, qudit_dim=None, herm_tol=1e-8):
    """Matrix of moments of the partially transposed state.

    provider(a_word, b_word) must return <a^dag^p a^q a^dag^r a^s  b^dag^t
    b^u b^dag^v b^w> on the *original* state; the b-power swap that implements
    the partial transposition happens here.  A provider inconsistent with
    Hermiticity beyond herm_tol is rejected.
    """
    idx = sv_multi_indices(max_total_degree, qudit_dim)
    n = len(idx)
    m = np.empty((n, n), dtype=complex)
    for r, i in enumerate(idx):
        for c, j in enumerate(idx):
            if c < r:
                continue
            m[r, c] = provider((i[1], i[0], j[0], j[1]), (j[3], j[2], i[2], i[3]))
            if c != r:
                m[c, r] = provider((j[1], j[0], i[0], i[1]), (i[3], i[2], j[2], j[3]))
    if np.abs(m - m.conj().T).max() > herm_tol:
        raise InconsistentMoments("moment provider is not Hermitian-consistent")
    if abs(m[0, 0] - 1.0) > herm_tol:
        raise InconsistentMoments(f"normalization moment is {m[0, 0]}, expected 1")
    m = (m + m.conj().T) / 2.0
    return MomentMatrix(m, tuple(idx))


def principal_minor(mm, rows, imag_tol=1e-10):
    """Determinant of the principal submatrix selected by ``rows``."""
    rows = list(rows)
    if sorted(set(rows)) != rows:
        raise ValueError("rows must be strictly increasing")
    sub = mm.matrix[np.ix_(rows, rows)]
    det = np.linalg.det(sub)
    if abs(det.imag) > imag_tol * max(1.0, abs(det.real)):
        raise NumericInconsistency(f"principal minor has imaginary part {det.imag}")
    return float(det.real)


def s1_minor(mm):
    """Three-row minor reaching fourth-order moments; witnesses |0>|a> + |1>|-a>."""
    return principal_minor(mm, sorted(mm.position(u) for u in S1_INDICES))


def s2_minor(mm):
    """Three-row minor of second-order moments, behind the Duan-type criterion."""
    return principal_minor(mm, sorted(mm.position(u) for u in S2_INDICES))


# ---------------------------------------------------------------------------
# moment providers


class MatrixMomentProvider:
    """Moments evaluated by matrix products on a two-subsystem density matrix.

    mode_subsystem selects which tensor factor carries the a operators; the
    other factor uses either d-level adapted ladder operators or, with
    qudit_mode='embedded', ordinary truncated bosonic operators after padding
    the qudit into a larger Fock space.
    """

    def __init__(self, rho, mode_subsystem=1, qudit_mode="adapted", embed_pad=4):
        if len(rho.dims) != 2:
            raise ValueError("moment provider needs a bipartite state")
        self.mode_subsystem = int(mode_subsystem)
        qudit_subsystem = 1 - self.mode_subsystem
        d_mode = rho.dims[self.mode_subsystem]
        d_qudit = rho.dims[qudit_subsystem]
        matrix = rho.matrix
        if qudit_mode == "adapted":
            b, bd = qudit_mode_operators(d_qudit)
        elif qudit_mode == "embedded":
            target = d_qudit + embed_pad
            t = matrix.reshape(rho.dims + rho.dims)
            pad = [(0, 0)] * 4
            for ax in (qudit_subsystem, qudit_subsystem + 2):
                pad[ax] = (0, target - d_qudit)
            t = np.pad(t, pad)
            matrix = t.reshape(int(np.prod(t.shape[:2])), -1)
            d_qudit = target
            b, _, _ = mode_operators(d_qudit - 1)
            bd = b.conj().T
        else:
            raise ValueError("qudit_mode must be 'adapted' or 'embedded'")
        a, _, _ = mode_operators(d_mode - 1)
        self._a, self._ad = a, a.conj().T
        self._b, self._bd = b, bd
        self._rho = matrix
        dims = [0, 0]
        dims[self.mode_subsystem] = d_mode
        dims[qudit_subsystem] = d_qudit
        self._dims = tuple(dims)

    @lru_cache(maxsize=4096)
    def _word(self, which, powers):
        lo, hi = (self._a, self._ad) if which == "a" else (self._b, self._bd)
        p, q, r, s = powers
        def power(m, k):
            return np.linalg.matrix_power(m, k)
        return power(hi, p) @ power(lo, q) @ power(hi, r) @ power(lo, s)

    def __call__(self, a_word, b_word):
        wa = self._word("a", tuple(a_word))
        t, u, v, w = b_word
        wb = self._word("b", (t, u, v, w))
        if self.mode_subsystem == 1:
            op = np.kron(wb, wa)
        else:
            op = np.kron(wa, wb)
        return complex(np.einsum("ij,ji->", self._rho, op))


def _normal_order_pairs(p, q, r, s):
    """a^dag^p a^q a^dag^r a^s = sum_t t! C(q,t) C(r,t) a^dag^(p+r-t) a^(q+s-t)."""
    return [(factorial(t) * comb(q, t) * comb(r, t), p + r - t, q + s - t)
            for t in range(min(q, r) + 1)]


def _coherent_word(beta, alpha, a_word):
    """<beta| a^dag^p a^q a^dag^r a^s |alpha> from the normal-ordered form."""
    total = 0.0 + 0.0j
    for coeff, k, l in _normal_order_pairs(*a_word):
        total += coeff * np.conj(beta) ** k * alpha**l
    return total * overlap_coherent(alpha, beta)


class SymbolicMomentProvider:
    """Exact moments of a coherent-family hybrid state, no truncation.

    Mode words reduce to normal order and hit coherent dyads in closed form;
    qudit words are evaluated with the d-level adapted operators.
    """

    def __init__(self, state):
        if not isinstance(state, HybridState):
            raise TypeError("SymbolicMomentProvider needs a HybridState")
        self.qudit_dim = state.qudit_dim
        self._b, self._bd = qudit_mode_operators(state.qudit_dim)
        terms = []
        for p, branches in state.terms:
            for bi in branches:
                for bj in branches:
                    if bi.ket.kind != COHERENT or bj.ket.kind != COHERENT:
                        raise UnsupportedKet("symbolic moments need coherent kets")
                    terms.append((p * bi.c * np.conj(bj.c), (bi.m, bj.m),
                                  (bi.ket.alpha, bj.ket.alpha)))
        self._terms = terms

    def _qudit_word(self, b_word):
        t, u, v, w = b_word
        def power(m, k):
            return np.linalg.matrix_power(m, k)
        return power(self._bd, t) @ power(self._b, u) @ power(self._bd, v) @ power(self._b, w)

    def __call__(self, a_word, b_word):
        wb = self._qudit_word(tuple(b_word))
        total = 0.0 + 0.0j
        for weight, (m, mp), (ai, aj) in self._terms:
            qf = wb[mp, m]
            if qf == 0:
                continue
            total += weight * qf * _coherent_word(aj, ai, a_word)
        return complex(total)


class ThermalMomentProvider:
    """Exact moments of a thermal-channel output, via the Gaussian closed forms."""

    def __init__(self, state):
        if not isinstance(state, ThermalHybridState):
            raise TypeError("ThermalMomentProvider needs a ThermalHybridState")
        self.qudit_dim = state.base.qudit_dim
        self._b, self._bd = qudit_mode_operators(self.qudit_dim)
        self._terms = state.dyad_terms()
        self._params = state.params

    def _qudit_word(self, b_word):
        t, u, v, w = b_word
        def power(m, k):
            return np.linalg.matrix_power(m, k)
        return power(self._bd, t) @ power(self._b, u) @ power(self._bd, v) @ power(self._b, w)

    def __call__(self, a_word, b_word):
        wb = self._qudit_word(tuple(b_word))
        total = 0.0 + 0.0j
        for weight, (m, mp), (ai, aj) in self._terms:
            qf = wb[mp, m]
            if qf == 0:
                continue
            for coeff, k, l in _normal_order_pairs(*a_word):
                total += weight * qf * coeff * thermal_dyad_moments(ai, aj, self._params, (k, l))
        return complex(total)


# ---------------------------------------------------------------------------
# named closed-form determinants


def cat_witness_determinants(alpha, phi):
    """(s1, s2, selected) for the two-mode cat at amplitude alpha, phase phi.

    selected = Theta(cos(phi + pi)) s1 + Theta(cos phi) s2 with the
    half-maximum step convention, and is negative for every phi at alpha != 0:
    s1 covers pi/2 <= phi <= 3 pi/2, s2 the rest, both at the crossover.
    """
    a2 = abs(alpha) ** 2
    e4 = np.exp(4.0 * a2)
    denom = (e4 + np.cos(phi)) ** 3
    s1 = -(4.0 * a2**3 * e4 / denom) * (1.0 - e4 * np.cos(phi))
    s2 = -(4.0 * a2**2 * e4 / denom) * (1.0 + e4 * np.cos(phi))
    selected = heaviside_half(np.cos(phi + np.pi)) * s1 + heaviside_half(np.cos(phi)) * s2
    return float(s1), float(s2), float(selected)


def squeezed_s1(alpha, r):
    """s1 of the squeezed binary-coherent state; independent of the squeezing phase.

    Positive values mean the witness fails even though squeezing, a local
    unitary, cannot have changed the entanglement.
    """
    a2 = abs(alpha) ** 2
    e = np.exp(-4.0 * a2)
    return float(np.sinh(r) ** 2 / 4.0 - e / 2.0 * a2 * np.cosh(r) ** 2
                 - e / 8.0 * np.sinh(r) ** 2)


def mixed24_s1(p, alpha):
    """s1 of the two-term mixture holding four coherent kets (+-alpha, +-i alpha)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("mixing probability must lie in [0, 1]")
    a2 = float(alpha) ** 2
    return float(a2 / 2.0 * (p * (1.0 - p) - np.exp(-4.0 * a2) * (1.0 - 1.5 * p * (1.0 - p))))


def thermal_s1(alpha, eta, n_th):
    """Closed-form s1 of the thermal-channel output of the binary-coherent state."""
    a2 = abs(alpha) ** 2
    return float((1.0 - eta) / 4.0 * n_th * (1.0 - np.exp(-4.0 * a2) / 2.0)
                 - eta * a2 / 2.0 * np.exp(-4.0 * a2))


def thermal_threshold(alpha, eta):
    """Largest n_th at which s1 still witnesses, 4 eta a^2 / ((1-eta)(2 e^{4a^2} - 1))."""
    if eta >= 1.0:
        return float("inf")
    a2 = abs(alpha) ** 2
    return float(4.0 * eta * a2 / ((1.0 - eta) * (2.0 * np.exp(4.0 * a2) - 1.0)))


def optimal_alpha():
    """Amplitude maximizing the witnessable thermal noise; root of (2 - 8 a^2) e^{4 a^2} = 1.

    Independent of the transmissivity, which only scales the threshold.
    """
    f = lambda a2: (2.0 - 8.0 * a2) * np.exp(4.0 * a2) - 1.0
    return float(np.sqrt(brentq(f, 0.05, 0.25, xtol=1e-14)))


def _sqrtn_sum(y, tol=1e-16, max_terms=None):
    """sum_{n>=1} sqrt(n) y^n by monotone-bounded partial summation.

    The tail is bounded by the exactly summable sum_{m>n} m y^m, so the
    reported value is within tol of the limit; with max_terms set the sum is
    cut there instead.
    """
    if not 0.0 <= y < 1.0:
        raise ValueError("series needs 0 <= y < 1")
    total, n, term = 0.0, 1, y
    while True:
        total += np.sqrt(n) * term
        if max_terms is not None and n >= max_terms:
            return total
        n += 1
        term *= y
        if max_terms is None:
            tail = term * (n * (1.0 - y) + y) / (1.0 - y) ** 2
            if tail < tol:
                return total


def geometric_mixture_s1(x, alpha, series_terms=None, series_tol=1e-14):
    """(s1_partial, s1_bound) for the geometrically mixed hybrid family.

    s1_partial sums the exact series expression for s1, using the closed
    geometric sums for the exactly summable pieces and monotone-bounded
    partial sums for the sqrt(n)-weighted ones.  s1_bound replaces the
    sqrt(n) sums by their geometric lower bounds; since those sums enter the
    expression negatively, s1_bound >= s1, and s1_bound < 0 is therefore a
    sufficient criterion for entanglement of the full, untruncated family.
    """
    if not 0.0 < x < 1.0:
        raise ValueError("mixing parameter x must lie in (0, 1)")
    a2 = float(alpha) ** 2
    y = x * np.exp(-2.0 * a2)
    damp = np.exp(-2.0 * a2) * (1.0 - x) / (1.0 - y)
    pref = alpha * (1.0 - x) / x
    b = pref * _sqrtn_sum(y, tol=series_tol, max_terms=series_terms)
    c = pref * _sqrtn_sum(x, tol=series_tol, max_terms=series_terms)
    s1 = (2.0 * a2 / (1.0 - x) - 2.0 * damp * b * c - b * b - 2.0 * c * c
          - a2 / (1.0 - x) * damp * damp) / 8.0
    bound = a2 / 8.0 * (2.0 * x / (1.0 - x)
                        - damp * damp * (3.0 + 1.0 / (1.0 - x)))
    return float(s1), float(bound)


# ---------------------------------------------------------------------------
# swap witness and region sweeps


def swap_operator(d):
    v = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            v[i * d + j, j * d + i] = 1.0
    return v


def swap_witness(rho):
    """tr[V rho] with the swap V; nonnegative on every separable d x d state."""
    if isinstance(rho, DensityMatrix):
        if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
            raise ValueError("swap witness needs equal subsystem dimensions")
        m = rho.matrix
        d = rho.dims[0]
    else:
        m = np.asarray(rho, dtype=complex)
        d = int(round(np.sqrt(m.shape[0])))
        if d * d != m.shape[0]:
            raise ValueError("swap witness needs equal subsystem dimensions")
    return float(np.einsum("ij,ji->", swap_operator(d), m).real)


@dataclass(frozen=True)
class WitnessRegion:
    """Grid verdicts of a parameterized determinant.

    verdict is True only where the determinant is below -1e-12; values inside
    the band |det| <= 1e-12 are inconclusive, never reported as entangled.
    """

    axes: tuple
    values: np.ndarray
    verdict: np.ndarray
    inconclusive: np.ndarray
    boundary: tuple = ()


def witness_region(det_fn, grid, boundary_axis=None, band=INCONCLUSIVE_BAND,
                   bisect_tol=1e-10):
    """Evaluate a determinant over a parameter grid and mark the witnessed region.

    grid is an ordered mapping name -> 1-d values; det_fn takes the named
    parameters as keywords.  With boundary_axis set, sign changes along that
    axis are refined by bisection and returned as boundary samples.
    """
    names = list(grid.keys())
    axes = [np.asarray(grid[k], dtype=float) for k in names]
    shape = tuple(len(v) for v in axes)
    values = np.empty(shape)
    for pos in np.ndindex(*shape):
        point = {k: axes[i][pos[i]] for i, k in enumerate(names)}
        values[pos] = det_fn(**point)
    verdict = values < -band
    inconclusive = np.abs(values) <= band
    boundary = []
    if boundary_axis is not None:
        ax = names.index(boundary_axis)
        moved = np.moveaxis(values, ax, -1)
        for pos in np.ndindex(*moved.shape[:-1]):
            line = moved[pos]
            for k in range(len(line) - 1):
                if np.sign(line[k]) * np.sign(line[k + 1]) < 0:
                    lo, hi = axes[ax][k], axes[ax][k + 1]
                    fixed = {names[i]: axes[i][pos[i if i < ax else i - 1]]
                             for i in range(len(names)) if i != ax}
                    f = lambda t: det_fn(**{**fixed, boundary_axis: t})
                    root = brentq(f, lo, hi, xtol=bisect_tol)
                    boundary.append({**fixed, boundary_axis: root})
    return WitnessRegion(tuple((k, axes[i]) for i, k in enumerate(names)),
                         values, verdict, inconclusive, tuple(boundary))
