"""Truncated Fock-space numerics for bosonic modes.

Dimensionless quadratures with [x, p] = i throughout; a photon-number cutoff
``n_cut`` means the space is spanned by |0>, ..., |n_cut|.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.special import eval_genlaguerre, gammainc, gammaln

from .errors import CutoffTooSmall

DEFAULT_TAIL_TOL = 1e-10


def default_cutoff(alpha_max):
    """Photon-number cutoff adequate for coherent amplitudes up to |alpha_max|.

    Poisson tail bound: mean photon number nbar = |alpha|^2 plus eight standard
    deviations plus a fixed margin keeps the neglected weight far below any
    tolerance used in this package.
    """
    nbar = abs(alpha_max) ** 2
    return int(np.ceil(nbar + 8.0 * np.sqrt(nbar + 1.0) + 10.0))


def coherent_tail_weight(alpha, n_cut):
    """Exact weight of |alpha> beyond the cutoff, sum_{n > n_cut} e^-nbar nbar^n/n!."""
    nbar = abs(alpha) ** 2
    if nbar == 0.0:
        return 0.0
    # regularized lower incomplete gamma = Poisson survival function
    return float(gammainc(n_cut + 1, nbar))


def squeeze_cutoff(r, tail_tol=DEFAULT_TAIL_TOL):
    """Cutoff so a squeezed vacuum with parameter r has tail weight below tail_tol.

    The squeezed vacuum populates even Fock levels with weights
    w_k = (2k)!/(2^k k!)^2 tanh^2k(r) / cosh(r).
    """
    if r == 0.0:
        return 2
    t2 = np.tanh(abs(r)) ** 2
    w = 1.0 / np.cosh(abs(r))
    total = w
    k = 0
    while 1.0 - total > tail_tol:
        w *= (2 * k + 1) / (2 * k + 2) * t2
        k += 1
        total += w
        if k > 100000:
            raise CutoffTooSmall("squeezing tail does not converge", suggested=None)
    return 2 * k + 2


def mode_operators(n_cut):
    """Annihilation, creation and number operators on the truncated space.

    <n-1|a|n> = sqrt(n); the creation operator is the exact adjoint, so on the
    truncated space [a, a^dag] = 1 everywhere except the bottom-right entry,
    which is -n_cut.
    """
    if n_cut < 1:
        raise ValueError("n_cut must be >= 1")
    a = np.diag(np.sqrt(np.arange(1, n_cut + 1)), 1).astype(complex)
    adag = a.conj().T
    return a, adag, adag @ a


def coherent_ket(alpha, n_cut=None, tail_tol=DEFAULT_TAIL_TOL):
    """Truncated Glauber expansion e^{-|a|^2/2} sum_n a^n/sqrt(n!) |n>.

    Raises CutoffTooSmall when the neglected Poisson tail exceeds tail_tol.
    """
    alpha = complex(alpha)
    if n_cut is None:
        n_cut = default_cutoff(alpha)
    tail = coherent_tail_weight(alpha, n_cut)
    if tail > tail_tol:
        raise CutoffTooSmall(
            f"cutoff {n_cut} leaves tail weight {tail:.3e} > {tail_tol:.1e} "
            f"for alpha = {alpha}",
            suggested=default_cutoff(alpha),
        )
    v = np.zeros(n_cut + 1, dtype=complex)
    v[0] = 1.0
    for n in range(1, n_cut + 1):
        v[n] = v[n - 1] * alpha / np.sqrt(n)
    return v * np.exp(-abs(alpha) ** 2 / 2.0)


def overlap_coherent(alpha, beta):
    """Analytic coherent-state overlap <beta|alpha>.

    exp(-|alpha|^2/2 - |beta|^2/2 + conj(beta) alpha); magnitude <= 1, and
    <-alpha|alpha> = exp(-2|alpha|^2).
    """
    alpha, beta = complex(alpha), complex(beta)
    return np.exp(-abs(alpha) ** 2 / 2 - abs(beta) ** 2 / 2 + np.conj(beta) * alpha)


def displace(alpha, n_cut, tail_tol=DEFAULT_TAIL_TOL):
    """Displacement unitary D(alpha) = exp(alpha a^dag - conj(alpha) a)."""
    tail = coherent_tail_weight(alpha, n_cut)
    if tail > tail_tol:
        raise CutoffTooSmall(
            f"cutoff {n_cut} too small for displacement alpha = {alpha}",
            suggested=default_cutoff(alpha),
        )
    a, adag, _ = mode_operators(n_cut)
    return expm(alpha * adag - np.conj(alpha) * a)


def phase_shifter(phi, n_cut):
    """Phase-shift unitary exp(i phi a^dag a), diagonal in the Fock basis."""
    return np.diag(np.exp(1j * phi * np.arange(n_cut + 1)))


def squeeze(theta, r, n_cut, tail_tol=DEFAULT_TAIL_TOL):
    """Squeezing unitary S(theta, r) = exp(r/2 (e^{-i theta} a^2 - e^{i theta} a^dag^2))."""
    needed = squeeze_cutoff(r, tail_tol)
    if n_cut < needed:
        raise CutoffTooSmall(
            f"cutoff {n_cut} too small for squeezing r = {r}", suggested=needed
        )
    a, adag, _ = mode_operators(n_cut)
    return expm(0.5 * r * (np.exp(-1j * theta) * (a @ a) - np.exp(1j * theta) * (adag @ adag)))


def beamsplit(theta, phi=0.0, n_cut=None, n_cut2=None):
    """Two-mode beam splitter with transmissivity eta = cos^2(theta).

    Convention fixed so that mode 1 is the transmitted system and mode 2 the
    environment: for phi = 0 the generator is theta (a1 a2^dag - a1^dag a2) and

        U |alpha> x |0>  =  |sqrt(eta) alpha> x |sqrt(1-eta) alpha>.
    """
    if n_cut is None or n_cut < 1:
        raise ValueError("beamsplit needs n_cut >= 1")
    if n_cut2 is None:
        n_cut2 = n_cut
    a1, a1d, _ = mode_operators(n_cut)
    a2, a2d, _ = mode_operators(n_cut2)
    g = np.exp(1j * phi) * np.kron(a1, a2d) - np.exp(-1j * phi) * np.kron(a1d, a2)
    return expm(theta * g)


def hermite(n, x):
    """Physicists' Hermite polynomial H_n(x) by the three-term recursion.

    The recursion H_{n+1} = 2x H_n - 2n H_{n-1} is used instead of the
    derivative definition for numerical stability.
    """
    if n < 0:
        raise ValueError("Hermite degree must be >= 0")
    x = np.asarray(x, dtype=float)
    h0 = np.ones_like(x)
    if n == 0:
        return h0 if h0.ndim else float(h0)
    h1 = 2.0 * x
    for k in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1 if h1.ndim else float(h1)


def fock_wavefunction(n, x):
    """Position wavefunction psi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).

    Evaluated with the normalized recursion so large n does not overflow.
    """
    if n < 0:
        raise ValueError("Fock index must be >= 0")
    x = np.asarray(x, dtype=float)
    h0 = np.pi ** -0.25 * np.exp(-x * x / 2.0)
    if n == 0:
        return h0 if h0.ndim else float(h0)
    h1 = np.sqrt(2.0) * x * h0
    for k in range(1, n):
        h0, h1 = h1, np.sqrt(2.0 / (k + 1)) * x * h1 - np.sqrt(k / (k + 1.0)) * h0
    return h1 if h1.ndim else float(h1)


@dataclass(frozen=True)
class WignerField:
    """Wigner function samples on a rectangular grid.

    values[i, j] = W(grid_x[i], grid_p[j]); mass is the trapezoidal integral
    over the grid and converged is False when the grid misses support
    (mass < 0.999).
    """

    grid_x: np.ndarray
    grid_p: np.ndarray
    values: np.ndarray
    mass: float
    converged: bool


def _wigner_mn(m, n, x, p):
    """Wigner transform of |m><n| with kernel (1/pi) int dy psi_m(x-y) psi_n(x+y) e^{2ipy}."""
    if m > n:
        return np.conj(_wigner_mn(n, m, x, p))
    r2 = 2.0 * (x * x + p * p)
    pref = ((-1) ** m / np.pi) * np.exp(0.5 * (gammaln(m + 1) - gammaln(n + 1)))
    core = pref * np.exp(-r2 / 2.0) * eval_genlaguerre(m, n - m, r2)
    if n == m:
        return core.astype(complex)
    return core * (np.sqrt(2.0) * (x + 1j * p)) ** (n - m)


def wigner(rho, grid_x, grid_p):
    """Wigner function of a single-mode density matrix on a grid.

    Evaluated as an exact finite Fock-basis double sum over the matrix entries
    (no quadrature in y), so the only error sources are the state's own
    truncation and the grid extent.
    """
    matrix = getattr(rho, "matrix", rho)
    matrix = np.asarray(matrix, dtype=complex)
    dim = matrix.shape[0]
    xs = np.asarray(grid_x, dtype=float)
    ps = np.asarray(grid_p, dtype=float)
    x2, p2 = np.meshgrid(xs, ps, indexing="ij")
    w = np.zeros_like(x2)
    for m in range(dim):
        w += (matrix[m, m] * _wigner_mn(m, m, x2, p2)).real
        for n in range(m + 1, dim):
            if matrix[m, n] == 0 and matrix[n, m] == 0:
                continue
            w += 2.0 * (matrix[m, n] * _wigner_mn(m, n, x2, p2)).real
    mass = float(np.trapezoid(np.trapezoid(w, ps, axis=1), xs))
    return WignerField(xs, ps, w, mass, bool(mass >= 0.999))


def wigner_marginal_x(field):
    """Position marginal int W(x, p) dp on the field's x grid."""
    return np.trapezoid(field.values, field.grid_p, axis=1)


def position_density(rho, x):
    """<x|rho|x> evaluated from the Fock representation."""
    matrix = getattr(rho, "matrix", rho)
    matrix = np.asarray(matrix, dtype=complex)
    dim = matrix.shape[0]
    x = np.asarray(x, dtype=float)
    waves = np.stack([fock_wavefunction(n, x) for n in range(dim)])
    return np.einsum("mn,m...,n...->...", matrix, waves, waves).real
