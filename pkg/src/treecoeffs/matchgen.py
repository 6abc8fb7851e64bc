"""Matching generating functions of rooted trees and of their subdivisions.

For a rooted tree ``T`` the triple ``(M, M0, M1)`` counts k-matchings by
``x**k``: all of them, those avoiding the root, and those covering it.  The
subdivision recursions work on ``T`` directly and never build ``S(T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import IntPoly, product
from .trees import RootedTree, Tree, TreeError

ONE = IntPoly.const(1)
ZERO = IntPoly()
X = IntPoly.x()


@dataclass(frozen=True)
class MatchingTriple:
    m_all: IntPoly
    m_unsat: IntPoly
    m_sat: IntPoly

    def __post_init__(self) -> None:
        if self.m_unsat + self.m_sat != self.m_all:
            raise ValueError("M must equal M0 + M1")
        if self.m_sat[0] != 0:
            raise ValueError("M1 must have zero constant term")

    def tau(self, x: Fraction) -> Fraction:
        return Fraction(self.m_unsat(x)) / self.m_all(x)


SINGLE_VERTEX = MatchingTriple(ONE, ONE, ZERO)


def _combine(branch_full: list[IntPoly], branch_unsat: list[IntPoly]) -> MatchingTriple:
    """Root with branches whose root edge contributes ``full`` when unused and ``unsat`` when used."""
    m0 = product(branch_full)
    m1 = ZERO
    k = len(branch_full)
    # prefix/suffix products keep the sum over j division-free and linear in k
    prefix = [ONE]
    for p in branch_full:
        prefix.append(prefix[-1] * p)
    suffix = [ONE] * (k + 1)
    for j in range(k - 1, -1, -1):
        suffix[j] = suffix[j + 1] * branch_full[j]
    for j in range(k):
        m1 = m1 + branch_unsat[j] * prefix[j] * suffix[j + 1]
    m1 = m1.shift(1)
    return MatchingTriple(m0 + m1, m0, m1)


def matching_triple(rt: RootedTree) -> MatchingTriple:
    triples: list[MatchingTriple | None] = [None] * rt.n
    for v in reversed(rt.order):
        ch = [triples[c] for c in rt.children(v)]
        triples[v] = _combine([t.m_all for t in ch], [t.m_unsat for t in ch])
    return triples[rt.root]


def matching_poly(t: Tree) -> IntPoly:
    return matching_triple(RootedTree(t, 0)).m_all


def merge_at_root(a: MatchingTriple, b: MatchingTriple) -> IntPoly:
    """``M`` of the tree obtained by identifying the roots of two rooted trees."""
    return a.m_all * b.m_unsat + a.m_unsat * b.m_sat


def subdivision_triple(rt: RootedTree) -> MatchingTriple:
    """Triple of ``S(T)`` rooted at the original root, from the triples of ``S(T_j)``.

    Each branch ``T_j`` hangs from the root through a subdivision vertex, so
    the path root - w_j - S(T_j) contributes ``M(S(T_j)) + x*M0(S(T_j))`` when
    the root edge is unused and ``M(S(T_j))`` when it is used.
    """
    triples: list[MatchingTriple | None] = [None] * rt.n
    for v in reversed(rt.order):
        ch = [triples[c] for c in rt.children(v)]
        full = [t.m_all + t.m_unsat.shift(1) for t in ch]
        unsat = [t.m_all for t in ch]
        triples[v] = _combine(full, unsat)
    return triples[rt.root]


def _check_positive(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    return x


def tau_at(rt: RootedTree, x: Fraction, subdivided: bool = True) -> Fraction:
    """Exact ``M0/M`` of ``T`` (or of ``S(T)``) at ``x`` via the continued-fraction recursion."""
    x = _check_positive(x)
    tau: list[Fraction] = [Fraction(0)] * rt.n
    for v in reversed(rt.order):
        s = Fraction(0)
        for c in rt.children(v):
            s += x / (1 + x * tau[c]) if subdivided else x * tau[c]
        tau[v] = 1 / (1 + s)
    return tau[rt.root]


def tau_compare(a: Fraction, b: Fraction) -> int:
    """Sign of ``a - b`` by cross-multiplication."""
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


@dataclass(frozen=True)
class FourWaySplit:
    """Matchings by whether they cover ``u`` (first index) and ``v`` (second)."""

    m00: IntPoly
    m01: IntPoly
    m10: IntPoly
    m11: IntPoly

    @property
    def total(self) -> IntPoly:
        return self.m00 + self.m01 + self.m10 + self.m11


def four_way_split(t0: Tree, u: int, v: int) -> FourWaySplit:
    if u == v:
        raise TreeError("four_way_split needs u != v")
    rt = RootedTree(t0, u)
    # table[w][(s, t)]: matchings of T(w) with w covered (s) and v covered (t)
    tables: list[dict[tuple[int, int], IntPoly] | None] = [None] * t0.n
    for w in reversed(rt.order):
        cur = {(0, 0): ONE}
        for c in rt.children(w):
            child = tables[c]
            child_any: dict[int, IntPoly] = {}
            for (_, tc), p in child.items():
                child_any[tc] = child_any.get(tc, ZERO) + p
            nxt: dict[tuple[int, int], IntPoly] = {}
            for (s, t), p in cur.items():
                for tc, q in child_any.items():
                    key = (s, t | tc)
                    nxt[key] = nxt.get(key, ZERO) + p * q
                if s == 0:
                    for (sc, tc), q in child.items():
                        if sc == 0:
                            key = (1, t | tc | (c == v))
                            nxt[key] = nxt.get(key, ZERO) + (p * q).shift(1)
            cur = nxt
        if w == v:
            cur = {(s, s): p for (s, _), p in cur.items()}
        tables[w] = cur
    root = tables[u]
    return FourWaySplit(
        root.get((0, 0), ZERO), root.get((0, 1), ZERO), root.get((1, 0), ZERO), root.get((1, 1), ZERO)
    )


def hosoya(t: Tree) -> int:
    """Total number of matchings (including the empty one)."""
    return matching_poly(t)(1)
