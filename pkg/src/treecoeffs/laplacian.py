"""Laplacian coefficients of trees, computed two independent ways.

``det(lambda*I - L) = sum_k (-1)**k * c_k * lambda**(n-k)``.  The primary route
reads ``c_k`` off the matching polynomial of the subdivision tree; the second
expands the characteristic polynomial of the integer Laplacian exactly and
exists to cross-check the first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .matchgen import matching_poly, subdivision_triple
from .poly import IntPoly
from .trees import RootedTree, Tree, subdivide


@dataclass(frozen=True)
class CoeffVector:
    c: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k: int) -> int:
        return self.c[k]

    def __iter__(self):
        return iter(self.c)

    def as_poly(self) -> IntPoly:
        """The generating function ``c_0 + c_1 x + ... + c_{n-1} x^{n-1}``."""
        return IntPoly(self.c[:-1])

    def to_json(self) -> list[str]:
        return [str(a) for a in self.c]

    @classmethod
    def from_json(cls, data) -> "CoeffVector":
        return cls(tuple(int(a) for a in data))


def coefficients_via_subdivision(t: Tree) -> CoeffVector:
    m = subdivision_triple(RootedTree(t, 0)).m_all
    return CoeffVector(tuple(m[k] for k in range(t.n)) + (0,))


def coefficients_via_explicit_subdivision(t: Tree) -> CoeffVector:
    m = matching_poly(subdivide(t))
    return CoeffVector(tuple(m[k] for k in range(t.n)) + (0,))


def laplacian_matrix(t: Tree) -> list[list[int]]:
    L = [[0] * t.n for _ in range(t.n)]
    for a, b in t.edges:
        L[a][b] -= 1
        L[b][a] -= 1
        L[a][a] += 1
        L[b][b] += 1
    return L


def charpoly(A: list[list[int]]) -> list[int]:
    """Monic characteristic polynomial of an integer matrix, highest degree first.

    Faddeev-LeVerrier over the integers: every division by ``k`` is exact
    because all iterates are integer polynomials in ``A``.
    """
    n = len(A)
    coeffs = [1]
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev = coeffs[-1]
        # M_k = A M_{k-1} + a_{n-k+1} I
        AM = [[sum(A[i][l] * Mk[l][j] for l in range(n) if A[i][l]) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += prev
        Mk = AM
        trace = sum(sum(A[i][l] * Mk[l][i] for l in range(n) if A[i][l]) for i in range(n))
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step; matrix is not integral")
        coeffs.append(q)
    return coeffs


def coefficients_via_charpoly(t: Tree) -> CoeffVector:
    signed = charpoly(laplacian_matrix(t))
    return CoeffVector(tuple((-1) ** k * a for k, a in enumerate(signed)))


def phi_eval(c: CoeffVector, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c.c[:-1]):
        acc = acc * x + a
    return acc


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def poset_compare(a: CoeffVector, b: CoeffVector) -> Order:
    """Componentwise comparison of ``(c_0, ..., c_{n-1})``."""
    if a.n != b.n:
        raise ValueError(f"cannot compare coefficient vectors of orders {a.n} and {b.n}")
    below = any(x < y for x, y in zip(a.c[:-1], b.c[:-1]))
    above = any(x > y for x, y in zip(a.c[:-1], b.c[:-1]))
    if below and above:
        return Order.INCOMPARABLE
    if below:
        return Order.LESS
    if above:
        return Order.GREATER
    return Order.EQUAL
