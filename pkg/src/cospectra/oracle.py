"""Independent checks that do not go through characters.

``idempotent_strong_cospectrality`` works from the dense adjacency matrix: it
eigendecomposes numerically, builds the spectral projectors, and compares
E_r e_u with +-E_r e_v. ``pst_amplitude_exact`` evaluates the t = pi/2 walk
amplitude of a cubelike graph exactly in the Gaussian integers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cayley import CayleyGraph, _require_cubelike, walsh_hadamard, wht_spectrum
from .cospectral import strongly_cospectral_to_zero
from .errors import ClusterAmbiguity, NumericalError, TooLarge
from .groups import GroupElement

__all__ = [
    "GaussianInteger",
    "SpectralProjectors",
    "adjacency_matrix",
    "dense_vertex_cap",
    "spectral_projectors",
    "idempotent_strong_cospectrality",
    "oracle_disagreements",
    "oracle_agreement",
    "pst_amplitude_exact",
    "pst_amplitudes",
    "is_perfect_state_transfer",
]

DEFAULT_DENSE_CAP = 4096
DEFAULT_TOL = 1e-8


def dense_vertex_cap() -> int:
    """Vertex cap for dense matrices; COSPECTRA_MAX_VERTICES overrides it."""
    raw = os.environ.get("COSPECTRA_MAX_VERTICES")
    return int(raw) if raw else DEFAULT_DENSE_CAP


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int

    @classmethod
    def i_power(cls, k: int) -> GaussianInteger:
        return _I_POWERS[k % 4]

    def __add__(self, other):
        if isinstance(other, int):
            other = GaussianInteger(other, 0)
        return GaussianInteger(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInteger(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        return GaussianInteger(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> GaussianInteger:
        return GaussianInteger(self.re, -self.im)

    def norm(self) -> int:
        """|z|^2, exactly."""
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(self.re, self.im)

    def __str__(self):
        return f"{self.re}{self.im:+d}i"


_I_POWERS = (GaussianInteger(1, 0), GaussianInteger(0, 1), GaussianInteger(-1, 0), GaussianInteger(0, -1))


def adjacency_matrix(X: CayleyGraph, max_vertices: int | None = None) -> np.ndarray:
    """Dense 0/1 matrix with A[g, h] = 1 iff h - g is in C (lexicographic vertex order)."""
    G = X.group
    cap = dense_vertex_cap() if max_vertices is None else max_vertices
    if G.order > cap:
        raise TooLarge(f"{G.order} vertices exceeds the dense cap of {cap}")
    elems = G.element_array
    orders = np.array(G.orders, dtype=np.int64)
    A = np.zeros((G.order, G.order), dtype=np.int8)
    rows = np.arange(G.order)
    for c in X.conn:
        cols = ((elems + np.array(c, dtype=np.int64)) % orders) @ G.radix
        A[rows, cols] = 1
    return A


class SpectralProjectors:
    """Numerical spectral decomposition A = sum_r theta_r E_r of a graph."""

    def __init__(self, A: np.ndarray, tol: float = DEFAULT_TOL):
        if tol <= 0:
            raise ValueError("tol must be positive")
        A = np.asarray(A, dtype=float)
        self.tol = tol
        w, V = np.linalg.eigh(A)
        self.norm = float(np.abs(w).max()) if len(w) else 0.0
        scale = max(1.0, self.norm)
        residual = np.linalg.norm(A @ V - V * w, axis=0)
        if len(w) and residual.max() >= 1e-10 * scale:
            raise NumericalError(f"eigenpair residual {residual.max():.3g} too large")
        gaps = np.diff(w)
        if np.any((gaps >= tol * scale) & (gaps < 10 * tol * scale)):
            raise ClusterAmbiguity("an eigenvalue gap lies between tol and 10*tol; adjust tol")
        cuts = np.flatnonzero(gaps >= 1e-6 * scale) + 1
        self.eigenvalues = []
        self.bases = []
        for idx in np.split(np.arange(len(w)), cuts):
            Q, _ = np.linalg.qr(V[:, idx])
            self.eigenvalues.append(float(w[idx].mean()))
            self.bases.append(Q)

    def __len__(self):
        return len(self.bases)

    def projector(self, r: int) -> np.ndarray:
        Q = self.bases[r]
        return Q @ Q.T

    def strongly_cospectral(self, u: int, v: int) -> bool:
        """E_r e_u == +-E_r e_v for every r, sign chosen per r."""
        bound = self.tol * max(1.0, self.norm)
        for Q in self.bases:
            # ||Q Q^T (e_u - s e_v)|| = ||Q[u] - s Q[v]|| since Q has orthonormal columns
            plus = np.linalg.norm(Q[u] - Q[v])
            minus = np.linalg.norm(Q[u] + Q[v])
            if min(plus, minus) >= bound:
                return False
        return True


@lru_cache(maxsize=16)
def _cached_projectors(X: CayleyGraph, tol: float, cap: int) -> SpectralProjectors:
    return SpectralProjectors(adjacency_matrix(X, cap), tol)


def spectral_projectors(X: CayleyGraph, tol: float = DEFAULT_TOL) -> SpectralProjectors:
    return _cached_projectors(X, tol, dense_vertex_cap())


def idempotent_strong_cospectrality(X: CayleyGraph, u: GroupElement, v: GroupElement,
                                    tol: float = DEFAULT_TOL) -> bool:
    G = X.group
    proj = spectral_projectors(X, tol)
    return proj.strongly_cospectral(G.index(G.element(u)), G.index(G.element(v)))


def oracle_disagreements(X: CayleyGraph, tol: float = DEFAULT_TOL, H=None) -> list[GroupElement]:
    """Involutions on which the projector test and the character detector differ."""
    G = X.group
    if H is None:
        H = strongly_cospectral_to_zero(X)
    members = set(H)
    proj = spectral_projectors(X, tol)
    zero = G.index(G.zero())
    return [g for g in G.involutions()
            if proj.strongly_cospectral(zero, G.index(g)) != (g in members)]


def oracle_agreement(X: CayleyGraph, tol: float = DEFAULT_TOL, H=None) -> bool:
    return not oracle_disagreements(X, tol, H)


def _unit_vectors(X: CayleyGraph) -> tuple[np.ndarray, np.ndarray]:
    # i^lambda_a split into real and imaginary parts
    lam = wht_spectrum(X) % 4
    re = np.select([lam == 0, lam == 2], [1, -1], 0).astype(np.int64)
    im = np.select([lam == 1, lam == 3], [1, -1], 0).astype(np.int64)
    return re, im


def pst_amplitude_exact(X: CayleyGraph, g: GroupElement) -> GaussianInteger:
    """2^d * U(pi/2)[0, g] = sum_a i^lambda_a (-1)^(a.g), exactly.

    Perfect state transfer from 0 to g at pi/2 happens iff the norm is 4^d.
    """
    _require_cubelike(X)
    G = X.group
    re, im = _unit_vectors(X)
    gi = G.index(G.element(g))
    signs = 1 - 2 * (np.bitwise_count(np.arange(G.order, dtype=np.int64) & gi) & 1).astype(np.int64)
    return GaussianInteger(int(re @ signs), int(im @ signs))


def pst_amplitudes(X: CayleyGraph) -> tuple[np.ndarray, np.ndarray]:
    """Real and imaginary parts of 2^d * U(pi/2)[0, g] for every g, by flat index."""
    _require_cubelike(X)
    re, im = _unit_vectors(X)
    return walsh_hadamard(re), walsh_hadamard(im)


def is_perfect_state_transfer(X: CayleyGraph, g: GroupElement) -> bool:
    return pst_amplitude_exact(X, g).norm() == 4 ** X.group.dimension
