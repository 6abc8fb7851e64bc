"""Tree construction, canonical forms, enumeration and two-vertex decompositions.

Vertices are always the integers ``0 .. n-1``.  Every value here is immutable;
constructors return fresh trees with a documented, deterministic labeling.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

DEFAULT_MAX_VERTICES = 100_000
PRUFER_THRESHOLD = 10


class TreeError(ValueError):
    """Raised for malformed trees or invalid constructor parameters."""


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise TreeError(f"a tree needs at least one vertex, got n={self.n}")
        norm = []
        for e in self.edges:
            a, b = (int(e[0]), int(e[1]))
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise TreeError(f"edge {e} has a vertex outside [0, {self.n})")
            if a == b:
                raise TreeError(f"self-loop at vertex {a}")
            norm.append((a, b) if a < b else (b, a))
        if len(norm) != self.n - 1:
            raise TreeError(f"expected {self.n - 1} edges, got {len(norm)}")
        if len(set(norm)) != len(norm):
            raise TreeError("duplicate edge")
        object.__setattr__(self, "edges", tuple(norm))
        seen = {0}
        stack = [0]
        adj = self.adjacency
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise TreeError("edges do not form a connected graph")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Tree":
        return cls(n, tuple((a, b) for a, b in edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(nb)) for nb in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n > 1 else 0

    def rooted(self, root: int = 0) -> "RootedTree":
        return RootedTree(self, root)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[a, b] for a, b in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Tree":
        try:
            n = obj["n"]
            edges = obj["edges"]
        except (KeyError, TypeError) as exc:
            raise TreeError(f"tree JSON needs 'n' and 'edges': {exc}") from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise TreeError("'n' must be an integer")
        if not all(isinstance(e, (list, tuple)) and len(e) == 2 for e in edges):
            raise TreeError("each edge must be a pair")
        return cls.from_edges(n, edges)


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.tree.n:
            raise TreeError(f"root {self.root} outside [0, {self.tree.n})")

    @property
    def n(self) -> int:
        return self.tree.n

    @cached_property
    def parents(self) -> tuple[int, ...]:
        """Parent of every vertex (``-1`` for the root)."""
        return _bfs(self.tree, self.root)[1]

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Vertices in breadth-first order from the root."""
        return _bfs(self.tree, self.root)[0]

    def children(self, v: int) -> list[int]:
        p = self.parents[v]
        return [w for w in self.tree.adjacency[v] if w != p]

    def depths(self) -> list[int]:
        depth = [0] * self.n
        for v in self.order[1:]:
            depth[v] = depth[self.parents[v]] + 1
        return depth

    def subtree(self, v: int) -> "RootedTree":
        """The rooted subtree ``T(v)`` made of ``v`` and all its descendants."""
        verts = [v]
        i = 0
        while i < len(verts):
            verts.extend(self.children(verts[i]))
            i += 1
        return _induced(self.tree, verts, verts[0])

    def branches(self) -> list["RootedTree"]:
        """Components of ``T - root``, each rooted at the root's neighbour."""
        return [self.subtree(c) for c in self.children(self.root)]


def _bfs(t: Tree, root: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    parent = [-1] * t.n
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    q = deque([root])
    while q:
        v = q.popleft()
        for w in t.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
                q.append(w)
    return tuple(order), tuple(parent)


def _induced(t: Tree, verts: Sequence[int], root: int) -> RootedTree:
    """Relabel the (connected) vertex set ``verts`` as a tree on 0..k-1 in the given order."""
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[a], index[b]) for a, b in t.edges if a in index and b in index]
    return RootedTree(Tree.from_edges(len(verts), edges), index[root])


# --- constructors -------------------------------------------------------------


def make_path(n: int) -> Tree:
    if n < 1:
        raise TreeError("path needs n >= 1")
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Tree:
    if n < 1:
        raise TreeError("star needs n >= 1")
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


def complete_d_ary_size(d: int, h: int) -> int:
    return h if d == 1 else (d**h - 1) // (d - 1)


def make_complete_d_ary(d: int, h: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> RootedTree:
    """Complete d-ary tree ``C_h`` (height ``h - 1``), vertices numbered level by level."""
    if d < 1 or h < 1:
        raise TreeError("complete d-ary tree needs d >= 1 and h >= 1")
    size = complete_d_ary_size(d, h)
    if size > max_vertices:
        raise TreeError(f"C_{h} with d={d} has {size} vertices, over the limit {max_vertices}")
    # level-order numbering: children of i are d*i+1 .. d*i+d
    edges = [((i - 1) // d, i) for i in range(1, size)]
    return RootedTree(Tree.from_edges(size, edges), 0)


def make_greedy(n: int, dplus1: int) -> Tree:
    """The (d+1)-greedy tree: breadth-first fill from root 0.

    The root receives ``d + 1`` children and every later vertex ``d`` children,
    filling each level left to right; vertex ``i`` is the ``i``-th vertex in
    breadth-first order.
    """
    if dplus1 < 2:
        raise TreeError("greedy tree needs dplus1 >= 2")
    if n < dplus1 + 1:
        raise TreeError(f"greedy tree with root degree {dplus1} needs n >= {dplus1 + 1}, got {n}")
    edges = []
    parent, slots = 0, dplus1
    for v in range(1, n):
        if slots == 0:
            parent += 1
            slots = dplus1 - 1
        edges.append((parent, v))
        slots -= 1
    return Tree.from_edges(n, edges)


def greedy_violations(t: Tree, root: int, dplus1: int) -> list[str]:
    """Check the three defining properties of a (d+1)-greedy tree rooted at ``root``.

    Returns a list of human-readable failures; empty means ``t`` qualifies.
    """
    d = dplus1 - 1
    rt = RootedTree(t, root)
    problems = []
    if t.max_degree != dplus1:
        problems.append(f"maximum degree {t.max_degree} != {dplus1}")
    if t.degree(root) != dplus1:
        problems.append(f"root degree {t.degree(root)} != {dplus1}")
    depth = rt.depths()
    leaf_heights = {depth[v] for v in range(t.n) if v != root and t.degree(v) == 1}
    if leaf_heights and max(leaf_heights) - min(leaf_heights) > 1:
        problems.append(f"pendant heights {sorted(leaf_heights)} differ by more than 1")
    complete = _complete_flags(rt, d)
    for v in range(t.n):
        bad = [c for c in rt.children(v) if not complete[c]]
        if len(bad) > 1:
            problems.append(f"vertex {v} has {len(bad)} incomplete child subtrees")
    return problems


def _complete_flags(rt: RootedTree, d: int) -> list[bool]:
    """Whether each ``T(v)`` is a complete d-ary tree (and its height)."""
    n = rt.n
    height = [0] * n
    ok = [True] * n
    for v in reversed(rt.order):
        ch = rt.children(v)
        if not ch:
            continue
        hs = {height[c] for c in ch}
        ok[v] = len(ch) == d and len(hs) == 1 and all(ok[c] for c in ch)
        height[v] = max(hs) + 1
    return ok


def make_broom(n: int, dplus1: int) -> Tree:
    """Broom ``B_{n,d+1}``: path ``0 - 1 - ... - (n-d-1)`` with leaves ``n-d .. n-1`` on vertex 0."""
    d = dplus1 - 1
    if dplus1 < 1 or n < dplus1 + 1:
        raise TreeError(f"broom with maximum degree {dplus1} needs n >= {dplus1 + 1}, got {n}")
    path_len = n - d
    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges += [(0, v) for v in range(path_len, n)]
    return Tree.from_edges(n, edges)


def subdivide(t: Tree) -> Tree:
    """Insert a new vertex into every edge; edge ``i`` of ``t`` becomes vertex ``n + i``."""
    edges = []
    for i, (a, b) in enumerate(t.edges):
        m = t.n + i
        edges.append((a, m))
        edges.append((b, m))
    return Tree.from_edges(2 * t.n - 1, edges)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniformly random labeled tree via a random Prüfer sequence."""
    if n <= 2:
        return make_path(n)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


# --- canonical form -----------------------------------------------------------


def centers(t: Tree) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(rt: RootedTree) -> str:
    """AHU parenthesis code of a rooted tree; equal iff rooted-isomorphic."""
    code: list[str] = [""] * rt.n
    for v in reversed(rt.order):
        code[v] = "(" + "".join(sorted(code[c] for c in rt.children(v))) + ")"
    return code[rt.root]


def canonical_code(t: Tree) -> bytes:
    """Isomorphism-invariant code: AHU code rooted at the center (smaller one if bicentral)."""
    return min(rooted_code(RootedTree(t, c)) for c in centers(t)).encode("ascii")


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


# --- enumeration --------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> Tree:
    if n == 1:
        return Tree(1, ())
    deg = [1] * n
    for a in seq:
        deg[a] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        deg[a] -= 1
        if deg[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree.from_edges(n, edges)


def all_labeled_trees(n: int) -> Iterator[Tree]:
    """Every labeled tree on ``n`` vertices (``n**(n-2)`` of them)."""
    if n <= 2:
        yield make_path(n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _partitions(total: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield (first,) + rest


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    size = sum(counts)
    out = [0] * size

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == size:
            yield tuple(out)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                out[pos] = sym
                yield from rec(pos + 1)
                counts[sym] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _prufer_classes(n: int, max_deg: int, exact: bool) -> tuple[Tree, ...]:
    # Every isomorphism class has a labeling whose degrees are non-increasing in
    # the label, i.e. whose Prüfer letter counts (deg - 1) are non-increasing.
    # Enumerating exactly those sequences covers every class.
    seen: set[bytes] = set()
    out = []
    for part in _partitions(n - 2, max_deg - 1, n):
        if exact and part[0] != max_deg - 1:
            continue
        for seq in _multiset_permutations(list(part)):
            t = prufer_decode(seq, n)
            code = canonical_code(t)
            if code not in seen:
                seen.add(code)
                out.append(t)
    return tuple(out)


@lru_cache(maxsize=None)
def _extension_classes(n: int, max_deg: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(1, ()),)
    out = []
    seen: set[bytes] = set()
    for t in _extension_classes(n - 1, max_deg):
        for v in range(t.n):
            if t.degree(v) >= max_deg:
                continue
            child = Tree(t.n + 1, t.edges + ((v, t.n),))
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                out.append(child)
    return tuple(out)


def enumerate_trees(n: int, max_deg: int, exact: bool = False, method: str = "auto") -> Iterator[Tree]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    With ``exact`` the maximum degree equals ``max_deg``, otherwise it is at
    most ``max_deg``.  ``method`` is ``"prufer"`` (degree-sorted Prüfer
    sequences with canonical dedup), ``"extend"`` (leaf extension of smaller
    classes under the degree bound) or ``"auto"`` (Prüfer up to
    ``PRUFER_THRESHOLD`` vertices).
    """
    if n < 1 or max_deg < 0:
        raise TreeError("enumerate_trees needs n >= 1 and max_deg >= 0")
    if method == "auto":
        method = "prufer" if n <= PRUFER_THRESHOLD else "extend"
    if n == 1:
        source: Iterator[Tree] = iter([Tree(1, ())])
    elif max_deg < 1 or (n > 2 and max_deg < 2):
        source = iter(())
    elif n == 2:
        source = iter([make_path(2)])
    elif method == "prufer":
        source = iter(_prufer_classes(n, max_deg, exact))
    elif method == "extend":
        source = iter(_extension_classes(n, max_deg))
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    for t in source:
        # the single vertex is the degenerate member of every class
        if not exact or t.max_degree == max_deg or n == 1:
            yield t


# --- decompositions -----------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """A middle tree ``t0`` with marked vertices plus branches hung at them.

    Each branch is a rooted tree joined to its marked vertex by a new edge
    from the branch root, so composing yields
    ``t0.n + sum(len(left)) + sum(len(right))`` vertices.
    """

    t0: Tree
    u: int
    v: int
    left: tuple[RootedTree, ...] = ()
    right: tuple[RootedTree, ...] = ()

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise TreeError("decomposition needs two distinct marked vertices")
        for w in (self.u, self.v):
            if not 0 <= w < self.t0.n:
                raise TreeError(f"marked vertex {w} outside the middle tree")

    @property
    def order(self) -> int:
        return self.t0.n + sum(b.n for b in self.left) + sum(b.n for b in self.right)

    def swapped(self) -> "Decomposition":
        return Decomposition(self.t0, self.v, self.u, self.right, self.left)


def _path(t: Tree, u: int, v: int) -> list[int]:
    parents = RootedTree(t, u).parents
    path = [v]
    while path[-1] != u:
        path.append(parents[path[-1]])
    return path[::-1]


def decompose(t: Tree, u: int, v: int) -> Decomposition:
    """Split ``t`` at ``u`` and ``v``: branches at ``u`` avoid ``v`` and vice versa."""
    if u == v:
        raise TreeError("decompose needs u != v")
    path = _path(t, u, v)
    rt_u = RootedTree(t, u)
    rt_v = RootedTree(t, v)
    left = [rt_u.subtree(c) for c in rt_u.children(u) if c != path[1]]
    right = [rt_v.subtree(c) for c in rt_v.children(v) if c != path[-2]]
    removed: set[int] = set()
    for rt, w, skip in ((rt_u, u, path[1]), (rt_v, v, path[-2])):
        for c in rt.children(w):
            if c != skip:
                stack = [c]
                while stack:
                    x = stack.pop()
                    removed.add(x)
                    stack.extend(rt.children(x))
    keep = [w for w in range(t.n) if w not in removed]
    index = {w: i for i, w in enumerate(keep)}
    t0 = Tree.from_edges(len(keep), [(index[a], index[b]) for a, b in t.edges if a in index and b in index])
    return Decomposition(t0, index[u], index[v], tuple(left), tuple(right))


def compose(dec: Decomposition) -> Tree:
    """Rebuild the tree: ``t0`` first, then left branches, then right branches."""
    edges = list(dec.t0.edges)
    offset = dec.t0.n
    for anchor, branches in ((dec.u, dec.left), (dec.v, dec.right)):
        for b in branches:
            edges.extend((a + offset, c + offset) for a, c in b.tree.edges)
            edges.append((anchor, b.root + offset))
            offset += b.n
    return Tree.from_edges(offset, edges)
