"""Canonical interval covers on the complete binary tree, and balancing.

Balancing (shallowising) re-expresses a clean signed tree model on the
complete binary tree of depth ceil(log2 n) + 1: every signed pair is
replaced by all pairs between the canonical covers of its endpoints'
leaf intervals, and a pair that receives both colors keeps the color of
its deepest originating pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .model import GREEN, BLUE, SignedTreeModel, is_clean

__all__ = [
    "CompleteTree",
    "IntervalCover",
    "Orientation",
    "complete_tree",
    "interval_cover",
    "subtree_interval",
    "shallowise",
    "width_bound",
    "orient_low_outdegree",
]


class CompleteTree:
    """Full complete binary tree with n leaves numbered 1..n left to right.

    All levels are filled except possibly the last, whose leaves are
    left-aligned; the depth (nodes on a root-leaf path) is
    ceil(log2 n) + 1, with a single-leaf tree having depth 1.  Node ids
    are assigned in BFS order, root = 0.
    """

    __slots__ = ("n", "children", "parent", "leaf_of_pos", "interval", "depth")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("complete tree needs at least one leaf")
        self.n = n
        children: list = []
        sizes = [n]
        queue = [0]
        children.append(None)
        head = 0
        while head < len(queue):
            node = queue[head]
            head += 1
            s = sizes[node]
            if s == 1:
                continue
            # Left subtree takes min(2**(D-1), s - 2**(D-2)) leaves, where
            # D = ceil(log2 s): fill the left half first, but never starve
            # the right subtree below a complete shape of depth D - 1.
            d = (s - 1).bit_length()
            left = 1 if s == 2 else min(1 << (d - 1), s - (1 << (d - 2)))
            l_id, r_id = len(sizes), len(sizes) + 1
            sizes.extend((left, s - left))
            children[node] = (l_id, r_id)
            children.extend((None, None))
            queue.extend((l_id, r_id))
        self.children = tuple(children)
        n_nodes = len(children)
        parent = [-1] * n_nodes
        for i, ch in enumerate(children):
            if ch is not None:
                parent[ch[0]] = i
                parent[ch[1]] = i
        self.parent = tuple(parent)

        # DFS (left first) for leaf positions and per-node leaf intervals.
        lo = [0] * n_nodes
        hi = [0] * n_nodes
        leaf_of_pos = [0]  # 1-based
        maxdep = 0
        stack = [(0, 1, False)]
        while stack:
            node, dep, done = stack.pop()
            ch = self.children[node]
            if done:
                lo[node] = lo[ch[0]]
                hi[node] = hi[ch[1]]
                continue
            maxdep = max(maxdep, dep)
            if ch is None:
                leaf_of_pos.append(node)
                lo[node] = hi[node] = len(leaf_of_pos) - 1
            else:
                stack.append((node, dep, True))
                stack.append((ch[1], dep + 1, False))
                stack.append((ch[0], dep + 1, False))
        self.leaf_of_pos = tuple(leaf_of_pos)
        self.interval = tuple(zip(lo, hi))
        self.depth = maxdep

    @property
    def n_nodes(self) -> int:
        return len(self.children)


@lru_cache(maxsize=None)
def complete_tree(n: int) -> CompleteTree:
    return CompleteTree(n)


@dataclass(frozen=True)
class IntervalCover:
    """Antichain of complete-tree nodes whose leaf sets partition an interval."""

    interval: tuple[int, int]
    nodes: tuple[int, ...]


def interval_cover(n: int, i: int, j: int) -> IntervalCover:
    """The unique minimum cover of [i, j] by rooted subtrees of the
    n-leaf complete tree; nodes in left-to-right order, at most
    2*log2(n) of them (n >= 2).

    The minimum cover consists exactly of the maximal nodes whose leaf
    interval fits inside [i, j].
    """
    if not 1 <= i <= j <= n:
        raise ValueError(f"bad interval [{i}, {j}] for n={n}")
    tree = complete_tree(n)
    out: list[int] = []
    stack = [0]
    while stack:
        node = stack.pop()
        lo, hi = tree.interval[node]
        if i <= lo and hi <= j:
            out.append(node)
            continue
        if hi < i or lo > j:
            continue
        l, r = tree.children[node]
        stack.append(r)
        stack.append(l)
    return IntervalCover((i, j), tuple(out))


def subtree_interval(m: SignedTreeModel, node: int) -> tuple[int, int]:
    """Leaf positions (1-based, left to right) under a node of the model."""
    if not 0 <= node < m.n_nodes:
        raise ValueError(f"node {node} out of range")
    return m.node_intervals()[node]


def width_bound(m: int) -> int:
    """Degeneracy guaranteed for any m-edge graph: max(0, ceil(sqrt(2m)) - 1)."""
    if m < 0:
        raise ValueError("negative edge count")
    if m == 0:
        return 0
    s = isqrt(2 * m)
    if s * s < 2 * m:
        s += 1
    return max(0, s - 1)


@dataclass(frozen=True)
class Orientation:
    """Pair ownership along a degeneracy peel of the pair graph.

    Each pair is owned by the endpoint peeled earlier, so per-node owned
    counts are bounded by the peel's degeneracy.
    """

    owner: dict
    order: tuple[int, ...]
    max_outdegree: int


def orient_low_outdegree(nodes, pairs) -> Orientation:
    nodes = list(nodes)
    adj = {u: set() for u in nodes}
    plist = []
    for a, b in pairs:
        p = (a, b) if a <= b else (b, a)
        if p[0] == p[1]:
            raise ValueError(f"degenerate pair {p}")
        adj[a].add(b)
        adj[b].add(a)
        plist.append(p)
    plist = sorted(set(plist))
    deg = {u: len(adj[u]) for u in nodes}
    alive = set(nodes)
    order = []
    rank = {}
    while alive:
        u = min(alive, key=lambda v: (deg[v], v))
        rank[u] = len(order)
        order.append(u)
        alive.remove(u)
        for w in adj[u]:
            if w in alive:
                deg[w] -= 1
    owner = {}
    out = {u: 0 for u in nodes}
    for p in plist:
        a, b = p
        o = a if rank[a] < rank[b] else b
        owner[p] = o
        out[o] += 1
    return Orientation(owner, tuple(order), max(out.values()) if nodes else 0)


def shallowise(m: SignedTreeModel, d_sparse: int) -> SignedTreeModel:
    """Re-express a clean, d_sparse-sparse model on the complete tree.

    Each signed pair (x, y) emits every pair (a, b) with a in the cover of
    x's leaf interval and b in the cover of y's; same-color duplicates are
    merged, and a pair emitted in both colors keeps the color of its
    deepest originating pair (all origins of one emitted pair are totally
    ordered in the pair tree-order; anything else is a hard error).

    The result has depth ceil(log2 n) + 1, realizes the same graph, and
    carries at most (2n-1) * d_sparse * (2*log2 n)**2 signed pairs.
    """
    if d_sparse < 0:
        raise ValueError("sparsity bound must be non-negative")
    if not is_clean(m):
        raise ValueError("shallowise needs a clean model")
    npairs = len(m.green | m.blue)
    if npairs > d_sparse * m.n_nodes:
        raise ValueError(
            f"model has {npairs} signed pairs, more than declared "
            f"{d_sparse}-sparse allows ({d_sparse * m.n_nodes})"
        )
    n = m.n_leaves
    tree = complete_tree(n)
    intervals = m.node_intervals()

    cover_of: dict[int, tuple[int, ...]] = {}

    def cover(node: int) -> tuple[int, ...]:
        got = cover_of.get(node)
        if got is None:
            lo, hi = intervals[node]
            got = interval_cover(n, lo, hi).nodes
            cover_of[node] = got
        return got

    # best[ab] = (origin pair, color) with the deepest origin seen so far
    best: dict[tuple[int, int], tuple[tuple[int, int], str]] = {}
    for (x, y), color in sorted(m.signed_pairs().items()):
        origin = (x, y)
        for a in cover(x):
            for b in cover(y):
                ab = (a, b) if a < b else (b, a)
                cur = best.get(ab)
                if cur is None:
                    best[ab] = (origin, color)
                    continue
                cur_origin, cur_color = cur
                if m.pair_leq(cur_origin, origin):
                    best[ab] = (origin, color)
                elif not m.pair_leq(origin, cur_origin):
                    raise AssertionError(
                        f"incomparable origins {cur_origin} and {origin} "
                        f"for emitted pair {ab}"
                    )
    green = {ab for ab, (_, c) in best.items() if c == GREEN}
    blue = {ab for ab, (_, c) in best.items() if c == BLUE}

    # Leaf k of the complete tree inherits the vertex of the model's k-th
    # leaf in left-to-right order.
    leaf_vertex = [-1] * tree.n_nodes
    for k, leaf in enumerate(m.leaf_order(), start=1):
        leaf_vertex[tree.leaf_of_pos[k]] = m.leaf_vertex[leaf]
    return SignedTreeModel(tree.children, leaf_vertex, green, blue)
