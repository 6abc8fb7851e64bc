"""Spectral energies of trees and the Coulson integral for subdivisions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .matchgen import subdivision_triple
from .trees import RootedTree, Tree, subdivide

EIG_TOL = 1e-12
IDENTITY_TOL = 1e-9
# eigenvalues this close to 0 are exact zeros of a (connected, bipartite) tree;
# rounding noise there would otherwise surface as sqrt(noise) in the energies
ZERO_CLAMP = 1e-9


class QuadratureError(RuntimeError):
    def __init__(self, message: str, abserr: float) -> None:
        super().__init__(f"{message} (error estimate {abserr:.3e})")
        self.abserr = abserr


def _matrices(t: Tree) -> tuple[np.ndarray, np.ndarray]:
    A = np.zeros((t.n, t.n))
    for a, b in t.edges:
        A[a, b] = A[b, a] = 1.0
    D = np.diag(A.sum(axis=1))
    return D, A


def laplacian_spectrum(t: Tree) -> list[float]:
    D, A = _matrices(t)
    mu = np.linalg.eigvalsh(D - A)[::-1]
    # L is positive semidefinite; tiny negatives are rounding
    return [0.0 if abs(m) <= ZERO_CLAMP else float(m) for m in mu]


def lel(t: Tree) -> float:
    mu = laplacian_spectrum(t)
    return math.fsum(math.sqrt(m) for m in mu[:-1])


def incidence_energy(t: Tree) -> float:
    """Sum of square roots of the signless Laplacian eigenvalues."""
    D, A = _matrices(t)
    q = np.linalg.eigvalsh(D + A)
    return math.fsum(math.sqrt(float(v)) for v in q if v > ZERO_CLAMP)


def adjacency_spectrum(t: Tree) -> list[float]:
    _, A = _matrices(t)
    return [float(v) for v in np.linalg.eigvalsh(A)[::-1]]


def adjacency_energy(t: Tree) -> float:
    return math.fsum(abs(v) for v in adjacency_spectrum(t))


def coulson_energy_of_subdivision(t: Tree, tol: float = 1e-11) -> float:
    """Energy of ``S(T)`` from its matching numbers by the Coulson integral.

    ``(2/pi) * int_0^inf x**-2 log(sum_k m_k x**(2k)) dx``.  On ``(0, 1]`` the
    integrand tends to ``m_1`` at 0.  The tail maps to ``(0, 1]`` via
    ``x = 1/y``, where ``log P(y**-2) = -2K log y + log(sum_k m_k y**(2(K-k)))``
    and the log term integrates to exactly ``2K``.
    """
    m = subdivision_triple(RootedTree(t, 0)).m_all
    K = m.degree
    if K <= 0:
        return 0.0
    coeffs = [float(a) for a in m.coeffs]
    rev = coeffs[::-1]

    def head(x: float) -> float:
        if x == 0.0:
            return coeffs[1]
        z = x * x
        return math.log1p(z * _horner(coeffs[1:], z)) / z

    def tail(y: float) -> float:
        return math.log(_horner(rev, y * y))

    total = 2.0 * K
    err = 0.0
    for f in (head, tail):
        val, abserr = integrate.quad(f, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=200)
        total += val
        err += abserr
    if err > tol:
        raise QuadratureError("Coulson quadrature did not converge", err)
    return 2.0 / math.pi * total


def _horner(coeffs: list[float], z: float) -> float:
    acc = 0.0
    for a in reversed(coeffs):
        acc = acc * z + a
    return acc


@dataclass(frozen=True)
class SpectralSummary:
    laplacian_eigenvalues: tuple[float, ...]
    lel: float
    ie: float
    subdivision_energy: float

    def check(self, tol: float = IDENTITY_TOL) -> list[str]:
        """Failed identities (empty when everything is consistent)."""
        mu = self.laplacian_eigenvalues
        n = len(mu)
        out = []
        if abs(mu[-1]) > tol or min(mu) < -tol:
            out.append("smallest Laplacian eigenvalue is not 0")
        if abs(math.fsum(mu) - 2 * (n - 1)) > tol:
            out.append("Laplacian trace differs from 2(n-1)")
        if abs(self.ie - self.lel) > tol:
            out.append(f"|IE - LEL| = {abs(self.ie - self.lel):.3e}")
        if abs(2 * self.ie - self.subdivision_energy) > tol:
            out.append(f"|2 IE - E(S(T))| = {abs(2 * self.ie - self.subdivision_energy):.3e}")
        return out

    def to_json(self) -> dict:
        return {
            "laplacian_eigenvalues": [round(v, 12) for v in self.laplacian_eigenvalues],
            "lel": round(self.lel, 12),
            "ie": round(self.ie, 12),
            "subdivision_energy": round(self.subdivision_energy, 12),
        }


def spectral_summary(t: Tree) -> SpectralSummary:
    return SpectralSummary(
        tuple(laplacian_spectrum(t)), lel(t), incidence_energy(t), adjacency_energy(subdivide(t))
    )
