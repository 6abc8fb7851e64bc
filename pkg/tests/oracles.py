"""Brute-force reference computations, deliberately independent of the library's algorithms."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def matchings(edges):
    """Every matching (set of pairwise disjoint edges), by subset enumeration."""
    edges = list(edges)
    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            verts = [v for e in subset for v in e]
            if len(verts) == len(set(verts)):
                yield subset


def matching_counts(edges) -> list[int]:
    counts: dict[int, int] = {}
    for m in matchings(edges):
        counts[len(m)] = counts.get(len(m), 0) + 1
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def four_way_counts(edges, u, v) -> dict[tuple[int, int], list[int]]:
    out: dict[tuple[int, int], dict[int, int]] = {}
    for m in matchings(edges):
        covered = {w for e in m for w in e}
        key = (int(u in covered), int(v in covered))
        out.setdefault(key, {})
        out[key][len(m)] = out[key].get(len(m), 0) + 1
    return {
        key: [d.get(k, 0) for k in range(max(d) + 1)] if d else []
        for key, d in ((k, out.get(k, {})) for k in [(0, 0), (0, 1), (1, 0), (1, 1)])
    }


def subdivided_edges(n, edges):
    out = []
    for i, (a, b) in enumerate(edges):
        out += [(a, n + i), (b, n + i)]
    return out


def det(matrix) -> Fraction:
    """Determinant by exact Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    sign = 1
    out = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        out *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return sign * out


def laplacian_coeffs_by_interpolation(n, edges) -> list[int]:
    """Unsigned ``c_k`` from ``det(lambda I - L)`` sampled at n+1 integers and interpolated."""
    L = [[0] * n for _ in range(n)]
    for a, b in edges:
        L[a][b] -= 1
        L[b][a] -= 1
        L[a][a] += 1
        L[b][b] += 1
    pts = list(range(n + 1))
    vals = [det([[(lam if i == j else 0) - L[i][j] for j in range(n)] for i in range(n)]) for lam in pts]
    # Lagrange interpolation into monomial coefficients (low degree first)
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(pts):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n + 1):
            coeffs[k] += vals[i] * basis[k] / denom
    # coefficient of lambda^(n-k) is (-1)^k c_k
    return [int((-1) ** k * coeffs[n - k]) for k in range(n + 1)]
