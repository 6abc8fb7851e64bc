"""Branch exchange at two vertices and exhaustive checks of the extremal results.

Every check walks a tree class in a deterministic order and returns a
:class:`VerificationReport`.  Matching values are compared as exact
fractions; only the incidence-energy check uses floating point.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .energy import incidence_energy
from .laplacian import coefficients_via_subdivision, phi_eval
from .matchgen import four_way_split, subdivision_triple, tau_at
from .poly import IntPoly, format_rational
from .trees import (
    DEFAULT_MAX_VERTICES,
    Decomposition,
    RootedTree,
    Tree,
    canonical_code,
    compose,
    complete_d_ary_size,
    decompose,
    enumerate_trees,
    make_broom,
    make_complete_d_ary,
    make_greedy,
    make_path,
    make_star,
    random_tree,
    rooted_code,
    subdivide,
)

DEFAULT_XS = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4))
IE_GAP = 1e-9


@dataclass
class VerificationReport:
    statement: str
    params: dict
    trees_examined: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.violations

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine reports of disjoint parts of one run (counts add, violations concatenate)."""
        return VerificationReport(
            self.statement,
            self.params,
            self.trees_examined + other.trees_examined,
            self.violations + other.violations,
            self.elapsed + other.elapsed,
            {**self.details, **other.details},
        )

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "statement": self.statement,
            "params": self.params,
            "trees_examined": self.trees_examined,
            "verified": self.verified,
            "violations": self.violations,
            "details": self.details,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def csv_row(self) -> list:
        return [
            self.statement,
            self.params.get("n", ""),
            self.params.get("dplus1", ""),
            self.trees_examined,
            len(self.violations),
            f"{self.elapsed:.6f}",
        ]


CSV_HEADER = ["statement", "n", "dplus1", "trees", "violations", "seconds"]


def _params(**kw) -> dict:
    out = {}
    for k, v in kw.items():
        if isinstance(v, (list, tuple)) and v and isinstance(v[0], Fraction):
            v = [format_rational(q) for q in v]
        out[k] = v
    return out


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(t) for t in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def subdivision_matching(t: Tree) -> IntPoly:
    """``M(S(T), x)`` as a polynomial."""
    return subdivision_triple(RootedTree(t, 0)).m_all


def tree_class(n: int, dplus1: int) -> list[Tree]:
    """All trees of order ``n`` with maximum degree exactly ``dplus1``."""
    return list(enumerate_trees(n, dplus1, exact=True))


def _require_class(n: int, dplus1: int) -> None:
    if dplus1 < 2 or n < dplus1 + 1:
        raise ValueError(f"need dplus1 >= 2 and n >= dplus1 + 1, got n={n}, dplus1={dplus1}")


def _check_xs(xs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    xs = tuple(Fraction(x) for x in xs)
    if not xs or any(x <= 0 for x in xs):
        raise ValueError("x grid must be nonempty and positive")
    return xs


# --- exchange -----------------------------------------------------------------


@dataclass(frozen=True)
class ExchangeReport:
    x: Fraction
    d: int
    d1: int
    d2: int
    swapped: bool
    m10: Fraction
    m01: Fraction
    left_taus: tuple[Fraction, ...]
    right_taus: tuple[Fraction, ...]
    m_before: Fraction
    m_after: Fraction

    @property
    def equality(self) -> bool:
        return self.m_before == self.m_after

    @property
    def condition_a(self) -> bool:
        """``d2 = d`` and every right branch has tau at most every left one."""
        return self.d2 == self.d and _all_below(self.right_taus, self.left_taus)

    @property
    def condition_b(self) -> bool:
        """``M10 = M01``, ``d1 = d`` and every left branch has tau at most every right one."""
        return self.m10 == self.m01 and self.d1 == self.d and _all_below(self.left_taus, self.right_taus)

    @property
    def degenerate(self) -> bool:
        """One marked vertex carries no branches (outside the two-sided setting)."""
        return self.d1 == 0 or self.d2 == 0

    @property
    def condition_degenerate(self) -> bool:
        """Equality criterion when a side is empty: nothing can move to a better place."""
        if self.d1 == 0:
            return True
        return self.d2 == 0 and self.m10 == self.m01 and self.d1 <= self.d

    def to_json(self) -> dict:
        f = format_rational
        return {
            "x": f(self.x),
            "d": self.d,
            "d1": self.d1,
            "d2": self.d2,
            "swapped": self.swapped,
            "m10": f(self.m10),
            "m01": f(self.m01),
            "left_taus": [f(t) for t in self.left_taus],
            "right_taus": [f(t) for t in self.right_taus],
            "m_before": f(self.m_before),
            "m_after": f(self.m_after),
            "equality": self.equality,
            "condition_a": self.condition_a,
            "condition_b": self.condition_b,
        }


def _all_below(low: Sequence[Fraction], high: Sequence[Fraction]) -> bool:
    return not low or not high or max(low) <= min(high)


def exchange(dec: Decomposition, d: int, x: Fraction) -> tuple[Tree, ExchangeReport]:
    """Regroup the branches at ``u`` and ``v`` by their subdivision tau at ``x``.

    If the middle tree's subdivision favours ``u`` (``M10 > M01`` at ``x``)
    the roles of ``u`` and ``v`` are swapped first.  The ``d1 + d2 - d``
    branches of largest tau go to ``u`` and the rest to ``v``; ties are broken
    by rooted canonical code.  ``M(S(T'), x) <= M(S(T), x)`` always holds.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    if d < 1 or d < max(len(dec.left), len(dec.right)):
        raise ValueError(f"d={d} must be >= max(d1, d2) = {max(len(dec.left), len(dec.right))}")
    before = subdivision_matching(compose(dec))(x)
    split = four_way_split(subdivide(dec.t0), dec.u, dec.v)
    swapped = split.m10(x) > split.m01(x)
    if swapped:
        dec = dec.swapped()
        split = four_way_split(subdivide(dec.t0), dec.u, dec.v)
    d1, d2 = len(dec.left), len(dec.right)
    left_taus = tuple(tau_at(b, x) for b in dec.left)
    right_taus = tuple(tau_at(b, x) for b in dec.right)
    pool = [(-tau, rooted_code(b), i, b) for i, (tau, b) in enumerate(zip(left_taus + right_taus, dec.left + dec.right))]
    pool.sort(key=lambda e: e[:3])
    k = max(d1 + d2 - d, 0)
    new_left = tuple(e[3] for e in pool[:k])
    new_right = tuple(e[3] for e in pool[k:])
    result = compose(Decomposition(dec.t0, dec.u, dec.v, new_left, new_right))
    after = subdivision_matching(result)(x)
    report = ExchangeReport(x, d, d1, d2, swapped, split.m10(x), split.m01(x), left_taus, right_taus, before, after)
    return result, report


def random_decomposition(rng: random.Random, nmax: int, two_sided: bool = True) -> tuple[Tree, Decomposition, int]:
    """A random tree, marked pair and admissible ``d``.

    With ``two_sided`` both marked vertices are non-pendant, so each carries
    at least one branch.
    """
    while True:
        n = rng.randint(3, nmax)
        t = random_tree(n, rng)
        pool = [w for w in range(n) if t.degree(w) >= 2] if two_sided else list(range(n))
        if len(pool) < 2:
            continue
        u, v = rng.sample(pool, 2)
        dec = decompose(t, u, v)
        lo = max(len(dec.left), len(dec.right), 1)
        return t, dec, rng.randint(lo, lo + 2)


def verify_exchange_random(
    samples: int = 200, nmax: int = 14, xs: Iterable[Fraction] = DEFAULT_XS, seed: int = 0
) -> VerificationReport:
    xs = _check_xs(xs)
    rng = random.Random(seed)
    start = time.perf_counter()
    report = VerificationReport("thm25-random", _params(samples=samples, nmax=nmax, xs=xs, seed=seed))
    equalities = 0
    for _ in range(samples):
        t, dec, d = random_decomposition(rng, nmax)
        x = rng.choice(xs)
        _, ex = exchange(dec, d, x)
        report.trees_examined += 1
        bad = ex.m_after > ex.m_before
        if ex.equality:
            equalities += 1
            bad = bad or not (ex.condition_a or ex.condition_b)
        if bad:
            report.violations.append({"tree": t.to_json(), "witness": ex.to_json()})
    report.details["equalities"] = equalities
    report.elapsed = time.perf_counter() - start
    return report


def exchange_descent(t: Tree, dplus1: int, x: Fraction, max_steps: int = 1000) -> tuple[Tree, int]:
    """Apply improving exchanges (staying in the class) until none is left."""
    d = dplus1 - 1
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        current = subdivision_matching(t)(x)
        for u in range(t.n):
            for v in range(t.n):
                if u == v:
                    continue
                new, ex = exchange(decompose(t, u, v), d, x)
                if ex.m_after < current and new.max_degree == dplus1:
                    t, improved = new, True
                    steps += 1
                    break
            if improved:
                break
    return t, steps


def mid_degree_vertices(t: Tree, dplus1: int) -> list[int]:
    """Vertices with ``2 <= deg <= d``."""
    return [v for v in range(t.n) if 2 <= t.degree(v) <= dplus1 - 1]


# --- minimality of the greedy tree --------------------------------------------


def _subdivision_poly_and_code(t: Tree) -> tuple[IntPoly, bytes]:
    return subdivision_matching(t), canonical_code(t)


def _phi_poly_and_code(t: Tree) -> tuple[IntPoly, bytes]:
    return coefficients_via_subdivision(t).as_poly(), canonical_code(t)


def verify_greedy_min_matching(
    n: int, dplus1: int, xs: Iterable[Fraction] = DEFAULT_XS, jobs: int = 1, via_phi: bool = False
) -> VerificationReport:
    """Greedy tree minimises ``M(S(T), x)`` (or ``phi(T, x)``) over the class at every ``x``."""
    _require_class(n, dplus1)
    xs = _check_xs(xs)
    start = time.perf_counter()
    name = "thm13" if via_phi else "thm37"
    report = VerificationReport(name, _params(n=n, dplus1=dplus1, xs=xs))
    greedy = make_greedy(n, dplus1)
    gcode = canonical_code(greedy)
    if via_phi:
        gvec = coefficients_via_subdivision(greedy)
        gvals = {x: phi_eval(gvec, x) for x in xs}
    else:
        gpoly = subdivision_matching(greedy)
        gvals = {x: gpoly(x) for x in xs}
    trees = tree_class(n, dplus1)
    work = _phi_poly_and_code if via_phi else _subdivision_poly_and_code
    argmins: dict[Fraction, tuple[Fraction, list[bytes]]] = {}
    for t, (poly, code) in zip(trees, _map(work, trees, jobs)):
        iso = code == gcode
        for x in xs:
            val = poly(x)
            best = argmins.get(x)
            if best is None or val < best[0]:
                argmins[x] = (val, [code])
            elif val == best[0]:
                best[1].append(code)
            if val < gvals[x] or (val == gvals[x]) != iso:
                report.violations.append(
                    {
                        "tree": t.to_json(),
                        "witness": {
                            "x": format_rational(x),
                            "value": format_rational(Fraction(val)),
                            "greedy_value": format_rational(Fraction(gvals[x])),
                            "isomorphic_to_greedy": iso,
                        },
                    }
                )
    report.trees_examined = len(trees)
    minimizers = {format_rational(x): sorted(c.hex() for c in codes) for x, (_, codes) in argmins.items()}
    report.details = {
        "greedy": greedy.to_json(),
        "argmin_codes": minimizers,
        "argmin_depends_on_x": len({tuple(v) for v in minimizers.values()}) > 1,
    }
    report.elapsed = time.perf_counter() - start
    return report


def check_hosoya_min(n: int, dplus1: int, jobs: int = 1) -> VerificationReport:
    """``Z(S(T)) >= Z(S(T*))`` over the class, with equality only at the greedy tree."""
    _require_class(n, dplus1)
    start = time.perf_counter()
    report = VerificationReport("cor39", _params(n=n, dplus1=dplus1))
    greedy = make_greedy(n, dplus1)
    gcode = canonical_code(greedy)
    gz = subdivision_matching(greedy)(1)
    trees = tree_class(n, dplus1)
    for t, (poly, code) in zip(trees, _map(_subdivision_poly_and_code, trees, jobs)):
        z = poly(1)
        if z < gz or (z == gz) != (code == gcode):
            report.violations.append(
                {"tree": t.to_json(), "witness": {"hosoya": str(z), "greedy_hosoya": str(gz)}}
            )
    report.trees_examined = len(trees)
    report.details = {"greedy_hosoya": str(gz)}
    report.elapsed = time.perf_counter() - start
    return report


def _ie_and_code(t: Tree) -> tuple[float, bytes]:
    return incidence_energy(t), canonical_code(t)


def verify_ie_min(n: int, dplus1: int, jobs: int = 1) -> VerificationReport:
    """Greedy tree has the least incidence energy, by a gap above ``IE_GAP`` for every other tree."""
    _require_class(n, dplus1)
    start = time.perf_counter()
    report = VerificationReport("thm14", _params(n=n, dplus1=dplus1, gap=IE_GAP))
    greedy = make_greedy(n, dplus1)
    gcode = canonical_code(greedy)
    gie = incidence_energy(greedy)
    trees = tree_class(n, dplus1)
    min_gap = None
    for t, (ie, code) in zip(trees, _map(_ie_and_code, trees, jobs)):
        if code == gcode:
            continue
        gap = ie - gie
        min_gap = gap if min_gap is None else min(min_gap, gap)
        if gap <= IE_GAP:
            report.violations.append(
                {"tree": t.to_json(), "witness": {"ie": round(ie, 12), "greedy_ie": round(gie, 12)}}
            )
    report.trees_examined = len(trees)
    report.details = {"greedy_ie": round(gie, 12), "min_gap": None if min_gap is None else round(min_gap, 12)}
    report.elapsed = time.perf_counter() - start
    return report


# --- maximality of the broom ----------------------------------------------------


def _coeffs_and_code(t: Tree):
    return coefficients_via_subdivision(t), canonical_code(t)


def verify_broom_max(
    n: int, dplus1: int, xs: Iterable[Fraction] = DEFAULT_XS, jobs: int = 1
) -> VerificationReport:
    """``c_k(T) <= c_k(B_{n,d+1})`` for all k, and ``M(S(T),x) <= M(S(B),x)`` on the grid."""
    _require_class(n, dplus1)
    xs = _check_xs(xs)
    start = time.perf_counter()
    report = VerificationReport("thm43-lem42", _params(n=n, dplus1=dplus1, xs=xs))
    broom = make_broom(n, dplus1)
    bcode = canonical_code(broom)
    bvec = coefficients_via_subdivision(broom)
    bpoly = bvec.as_poly()
    trees = tree_class(n, dplus1)
    maxima = [0] * (n + 1)
    for t, (vec, code) in zip(trees, _map(_coeffs_and_code, trees, jobs)):
        maxima = [max(a, b) for a, b in zip(maxima, vec)]
        iso = code == bcode
        above = [k for k in range(n + 1) if vec[k] > bvec[k]]
        witness = {}
        if above:
            witness["coefficients_above_broom"] = above
        if (vec == bvec) != iso:
            witness["equal_vector"] = vec == bvec
        poly = vec.as_poly()
        for x in xs:
            val = poly(x)
            if val > bpoly(x) or (val == bpoly(x)) != iso:
                witness.setdefault("x_failures", []).append(format_rational(x))
        if witness:
            witness["coefficients"] = vec.to_json()
            report.violations.append({"tree": t.to_json(), "witness": witness})
    report.trees_examined = len(trees)
    report.details = {
        "broom": broom.to_json(),
        "broom_coefficients": bvec.to_json(),
        "class_maxima": [str(a) for a in maxima],
        "broom_is_componentwise_max": tuple(maxima) == bvec.c,
    }
    report.elapsed = time.perf_counter() - start
    return report


# --- conjecture scan --------------------------------------------------------------


def check_conjecture46(n: int, dplus1: int, jobs: int = 1) -> VerificationReport:
    """Scan for trees whose coefficient vector dips below the greedy tree's anywhere.

    This reports; it never asserts.  ``details["per_k_minima"]`` holds the
    class minimum of every ``c_k``.
    """
    _require_class(n, dplus1)
    start = time.perf_counter()
    report = VerificationReport("conj46", _params(n=n, dplus1=dplus1))
    greedy = make_greedy(n, dplus1)
    gcode = canonical_code(greedy)
    gvec = coefficients_via_subdivision(greedy)
    trees = tree_class(n, dplus1)
    minima: list[int] | None = None
    for t, (vec, code) in zip(trees, _map(_coeffs_and_code, trees, jobs)):
        minima = list(vec.c) if minima is None else [min(a, b) for a, b in zip(minima, vec)]
        below = [k for k in range(n + 1) if vec[k] < gvec[k]]
        same = code != gcode and vec == gvec
        if below or same:
            report.violations.append(
                {
                    "tree": t.to_json(),
                    "witness": {"indices_below_greedy": below, "equal_to_greedy": same, "coefficients": vec.to_json()},
                }
            )
    report.trees_examined = len(trees)
    report.details = {
        "greedy_coefficients": gvec.to_json(),
        "per_k_minima": [str(a) for a in minima],
        "greedy_attains_all_minima": tuple(minima) == gvec.c,
    }
    report.elapsed = time.perf_counter() - start
    return report


# --- single-family checks -----------------------------------------------------------


def tau_chain_closed_form(d: int, hmax: int, x: Fraction) -> list[Fraction]:
    """``tau(S(C_h), x)`` for h = 1..hmax from the one-step recurrence."""
    taus = [Fraction(1)]
    for _ in range(2, hmax + 1):
        taus.append(1 / (1 + d * x / (1 + x * taus[-1])))
    return taus


def check_tau_chain(
    d: int, hmax: int, xs: Iterable[Fraction] = DEFAULT_XS, max_vertices: int = DEFAULT_MAX_VERTICES
) -> VerificationReport:
    """Strict decrease of ``tau(S(C_h), x)`` in h, computed on the actual trees.

    Each value is taken from the tree recursion on ``C_h`` and must agree with
    the one-step recurrence; ``h = 2`` must equal ``(1+x)/((d+1)x+1)``.
    """
    if d < 1 or hmax < 2:
        raise ValueError("need d >= 1 and hmax >= 2")
    if complete_d_ary_size(d, hmax) > max_vertices:
        raise ValueError(f"C_{hmax} with d={d} exceeds the vertex limit {max_vertices}")
    xs = _check_xs(xs)
    start = time.perf_counter()
    report = VerificationReport("lem31", _params(d=d, hmax=hmax, xs=xs))
    trees = [make_complete_d_ary(d, h, max_vertices) for h in range(1, hmax + 1)]
    chains = {}
    for x in xs:
        taus = [tau_at(c, x) for c in trees]
        closed = tau_chain_closed_form(d, hmax, x)
        chains[format_rational(x)] = [format_rational(t) for t in taus]
        problems = []
        if taus != closed:
            problems.append("tree recursion disagrees with the recurrence")
        if taus[0] != 1:
            problems.append("tau(S(C_1)) != 1")
        if taus[1] != (1 + x) / ((d + 1) * x + 1):
            problems.append("tau(S(C_2)) != (1+x)/((d+1)x+1)")
        for h in range(1, hmax):
            if not taus[h] < taus[h - 1]:
                problems.append(f"no strict decrease at h={h + 1}")
        for p in problems:
            report.violations.append({"tree": None, "witness": {"x": format_rational(x), "problem": p}})
    report.trees_examined = len(trees)
    report.details = {"chains": chains}
    report.elapsed = time.perf_counter() - start
    return report


def check_cross_degree(
    nmax: int, ds: Iterable[int] = (2, 3, 4), xs: Iterable[Fraction] = DEFAULT_XS
) -> VerificationReport:
    """``M(S(T*_d), x) > M(S(T*_{d+1}), x)`` for every ``d + 2 <= n <= nmax``."""
    xs = _check_xs(xs)
    ds = tuple(ds)
    if any(d < 2 for d in ds):
        raise ValueError("greedy tree T*_d needs d >= 2")
    start = time.perf_counter()
    report = VerificationReport("lem44", _params(nmax=nmax, ds=list(ds), xs=xs))
    for d in ds:
        for n in range(d + 2, nmax + 1):
            low = subdivision_matching(make_greedy(n, d))
            high = subdivision_matching(make_greedy(n, d + 1))
            report.trees_examined += 2
            for x in xs:
                if not low(x) > high(x):
                    report.violations.append(
                        {
                            "tree": None,
                            "witness": {
                                "n": n,
                                "d": d,
                                "x": format_rational(x),
                                "greedy_d": format_rational(Fraction(low(x))),
                                "greedy_d_plus_1": format_rational(Fraction(high(x))),
                            },
                        }
                    )
    report.elapsed = time.perf_counter() - start
    return report


def check_star_path(nmax: int, xs: Iterable[Fraction] = DEFAULT_XS, nmin: int = 2) -> VerificationReport:
    """Star minimal and path maximal, coefficientwise and on the grid, for every order."""
    xs = _check_xs(xs)
    if nmin < 2:
        raise ValueError("star/path check needs n >= 2")
    start = time.perf_counter()
    report = VerificationReport("cor45", _params(nmin=nmin, nmax=nmax, xs=xs))
    for n in range(nmin, nmax + 1):
        star, path = make_star(n), make_path(n)
        scode, pcode = canonical_code(star), canonical_code(path)
        svec, pvec = coefficients_via_subdivision(star), coefficients_via_subdivision(path)
        for t in enumerate_trees(n, n - 1):
            vec = coefficients_via_subdivision(t)
            code = canonical_code(t)
            report.trees_examined += 1
            problems = []
            if any(a < b for a, b in zip(vec, svec)) or (vec == svec) != (code == scode):
                problems.append("star bound")
            if any(a > b for a, b in zip(vec, pvec)) or (vec == pvec) != (code == pcode):
                problems.append("path bound")
            for x in xs:
                val = phi_eval(vec, x)
                lo, hi = phi_eval(svec, x), phi_eval(pvec, x)
                if val < lo or val > hi or (val == lo) != (code == scode) or (val == hi) != (code == pcode):
                    problems.append(f"grid x={format_rational(x)}")
            if problems:
                report.violations.append({"tree": t.to_json(), "witness": {"problems": problems}})
    report.elapsed = time.perf_counter() - start
    return report


def random_rooted_subtree(rt: RootedTree, rng: random.Random) -> RootedTree:
    """Remove a random nonempty set of non-root leaves repeatedly, keeping the root."""
    alive = set(range(rt.n))
    removals = rng.randint(1, rt.n - 1)
    for _ in range(removals):
        leaves = sorted(
            v for v in alive if v != rt.root and not any(c in alive for c in rt.children(v))
        )
        alive.discard(rng.choice(leaves))
    keep = [v for v in rt.order if v in alive]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in rt.tree.edges if a in index and b in index]
    return RootedTree(Tree.from_edges(len(keep), edges), index[rt.root])


def verify_subtree_monotonicity(
    samples: int = 100, nmax: int = 12, xs: Iterable[Fraction] = DEFAULT_XS, seed: int = 0
) -> VerificationReport:
    """A proper rooted subtree has strictly larger subdivision tau than the tree."""
    xs = _check_xs(xs)
    rng = random.Random(seed)
    start = time.perf_counter()
    report = VerificationReport("lem24", _params(samples=samples, nmax=nmax, xs=xs, seed=seed))
    for _ in range(samples):
        n = rng.randint(2, nmax)
        rt = RootedTree(random_tree(n, rng), rng.randrange(n))
        sub = random_rooted_subtree(rt, rng)
        report.trees_examined += 1
        for x in xs:
            big, small = tau_at(rt, x), tau_at(sub, x)
            if not small > big:
                report.violations.append(
                    {
                        "tree": rt.tree.to_json(),
                        "witness": {
                            "root": rt.root,
                            "subtree": sub.tree.to_json(),
                            "x": format_rational(x),
                            "tau_tree": format_rational(big),
                            "tau_subtree": format_rational(small),
                        },
                    }
                )
    report.elapsed = time.perf_counter() - start
    return report


def class_reports(check: Callable[..., VerificationReport], ns: Iterable[int], dplus1: int, **kw) -> list[VerificationReport]:
    """Run a per-class check for every order in ``ns`` that admits the class."""
    return [check(n, dplus1, **kw) for n in ns if n >= dplus1 + 1]


__all__ = [
    "CSV_HEADER",
    "DEFAULT_XS",
    "ExchangeReport",
    "VerificationReport",
    "check_conjecture46",
    "check_cross_degree",
    "check_hosoya_min",
    "check_star_path",
    "check_tau_chain",
    "class_reports",
    "exchange",
    "exchange_descent",
    "mid_degree_vertices",
    "random_decomposition",
    "subdivision_matching",
    "tree_class",
    "verify_broom_max",
    "verify_exchange_random",
    "verify_greedy_min_matching",
    "verify_ie_min",
    "verify_subtree_monotonicity",
]
