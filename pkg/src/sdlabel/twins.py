"""Pairwise symmetric difference, d-twins, and sd-degeneracy.

For distinct vertices u, v the pairwise symmetric difference sd(u, v) is
the number of vertices outside {u, v} adjacent to exactly one of them.
The symmetric difference of a graph is the maximum over induced subgraphs
of the minimum pairwise value; the sd-degeneracy is the least d admitting
an elimination order in which every eliminated vertex has a d-twin among
the survivors.

Both graph-level quantities are hard to compute, so the exact routines
here are desk-scale search oracles guarded by size limits; they exist to
validate the constructive machinery in the rest of the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

__all__ = [
    "SddWitness",
    "DiverseSet",
    "SUBSET_SEARCH_LIMIT",
    "SDD_SEARCH_LIMIT",
    "sd_pair",
    "d_twin_pairs",
    "is_diverse",
    "find_diverse_subgraph",
    "sd_exact",
    "sdd_exact",
    "sdd_greedy",
    "check_witness",
    "embed_sdd1",
    "save_witness",
    "load_witness",
]

# Exhaustive-search guards.  Both problems are (co-)NP-hard, so the exact
# oracles are only meant for desk-scale instances; callers may pass a
# larger limit explicitly when they know the search is witness-guided.
SUBSET_SEARCH_LIMIT = 18
SDD_SEARCH_LIMIT = 20


@dataclass(frozen=True)
class SddWitness:
    """Elimination sequence certifying sd-degeneracy <= d.

    ``steps`` holds (eliminated, partner) pairs; at each step the pair must
    be d-twins in the graph induced by the not-yet-eliminated vertices.
    A single-vertex graph is witnessed by the empty sequence.
    """

    d: int
    steps: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DiverseSet:
    """Vertex set whose induced subgraph has no pair of d-twins."""

    vertices: frozenset[int]
    d: int


def sd_pair(g: Graph, u: int, v: int) -> int:
    """|(N(u) \\ {v}) symmetric-difference (N(v) \\ {u})|."""
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError(f"sd_pair needs distinct vertices, got {u} twice")
    diff = g.adj[u] ^ g.adj[v]
    diff.discard(u)
    diff.discard(v)
    return len(diff)


def d_twin_pairs(g: Graph, d: int) -> list[tuple[int, int]]:
    """All pairs u < v with sd_pair(g, u, v) <= d, lexicographically sorted."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if sd_pair(g, u, v) <= d
    ]


def _restricted_sd(masks, smask: int, u: int, v: int) -> int:
    return ((masks[u] ^ masks[v]) & smask & ~(1 << u) & ~(1 << v)).bit_count()


def is_diverse(g: Graph, vertices, d: int) -> bool:
    """True iff |S| >= 2 and every pair inside G[S] has sd >= d+1.

    Polynomial time; no size limit.
    """
    s = sorted(set(vertices))
    for u in s:
        g._check(u)
    if len(s) < 2:
        return False
    masks = g.neighbor_masks()
    smask = 0
    for u in s:
        smask |= 1 << u
    for i, u in enumerate(s):
        for v in s[i + 1 :]:
            if _restricted_sd(masks, smask, u, v) <= d:
                return False
    return True


def find_diverse_subgraph(g: Graph, d: int, limit: int = SUBSET_SEARCH_LIMIT):
    """Some maximal-by-inclusion (d+1)-diverse vertex set, or None.

    Subsets are scanned by decreasing size (lexicographic within a size),
    so the first hit has no diverse superset.  Deterministic.
    """
    if g.n > limit:
        raise ValueError(f"graph too large for exhaustive search ({g.n} > {limit})")
    if d < 0:
        raise ValueError("d must be non-negative")
    masks = g.neighbor_masks()
    verts = range(g.n)
    for size in range(g.n, 1, -1):
        for combo in combinations(verts, size):
            smask = 0
            for u in combo:
                smask |= 1 << u
            ok = True
            for i, u in enumerate(combo):
                for v in combo[i + 1 :]:
                    if _restricted_sd(masks, smask, u, v) <= d:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return frozenset(combo)
    return None


def sd_exact(g: Graph, limit: int = SUBSET_SEARCH_LIMIT) -> int:
    """Exact symmetric difference: max over induced subgraphs of min pair sd.

    Equals the smallest d such that no (d+1)-diverse induced subgraph
    exists.  Exhaustive over vertex subsets, largest first, pruning sizes
    that cannot beat the best value found (min pair sd <= |S| - 2).
    """
    if g.n < 2:
        raise ValueError("symmetric difference needs at least two vertices")
    if g.n > limit:
        raise ValueError(f"graph too large for exhaustive search ({g.n} > {limit})")
    masks = g.neighbor_masks()
    verts = range(g.n)
    best = 0  # any 2-subset has min pair sd exactly 0
    for size in range(g.n, 2, -1):
        if size - 2 <= best:
            break
        for combo in combinations(verts, size):
            smask = 0
            for u in combo:
                smask |= 1 << u
            minsd = size  # larger than any achievable value
            for i, u in enumerate(combo):
                for v in combo[i + 1 :]:
                    sd = _restricted_sd(masks, smask, u, v)
                    if sd < minsd:
                        minsd = sd
                        if minsd <= best:
                            break
                if minsd <= best:
                    break
            if minsd > best:
                best = minsd
    return best


def check_witness(g: Graph, w: SddWitness) -> bool:
    """Replay an elimination sequence and verify every step.

    Accepts iff there are exactly n-1 steps over distinct vertices, each
    step's pair is alive, and the pair's sd in the remaining induced
    subgraph is at most w.d.
    """
    n = g.n
    if n < 1 or w.d < 0:
        return False
    if len(w.steps) != n - 1:
        return False
    masks = g.neighbor_masks()
    alive = (1 << n) - 1
    for e, p in w.steps:
        if e == p or not 0 <= e < n or not 0 <= p < n:
            return False
        if not (alive >> e) & 1 or not (alive >> p) & 1:
            return False
        if _restricted_sd(masks, alive, e, p) > w.d:
            return False
        alive &= ~(1 << e)
    return True


def sdd_greedy(g: Graph, d: int):
    """Greedy witness search: repeatedly eliminate the lowest-id vertex
    that has a d-twin, taking its lowest-id d-twin as partner.

    Returns an SddWitness accepted by check_witness, or None if the greedy
    rule gets stuck.  Absence is not proof that sdd(G) > d.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    n = g.n
    if n < 1:
        raise ValueError("empty graph")
    masks = g.neighbor_masks()
    alive_mask = (1 << n) - 1
    alive = list(range(n))
    steps = []
    while len(alive) > 1:
        pick = None
        for u in alive:
            for v in alive:
                if v != u and _restricted_sd(masks, alive_mask, u, v) <= d:
                    pick = (u, v)
                    break
            if pick:
                break
        if pick is None:
            return None
        u, v = pick
        steps.append((u, v))
        alive.remove(u)
        alive_mask &= ~(1 << u)
    return SddWitness(d, tuple(steps))


def _zero_twin_steps(masks, n: int):
    # Twin elimination is confluent: a graph reduces to one vertex by
    # removing 0-twins iff every maximal removal sequence does (this is the
    # cograph case), so a single greedy pass decides d = 0.
    alive_mask = (1 << n) - 1
    alive = list(range(n))
    steps = []
    while len(alive) > 1:
        pick = None
        for u in alive:
            for v in alive:
                if v != u and _restricted_sd(masks, alive_mask, u, v) == 0:
                    pick = (u, v)
                    break
            if pick:
                break
        if pick is None:
            return None
        steps.append(pick)
        alive.remove(pick[0])
        alive_mask &= ~(1 << pick[0])
    return steps


def _witness_search(masks, n: int, d: int):
    """Depth-first search for an elimination order at level d.

    Branches on the eliminated vertex in increasing id order (the first
    descent is exactly the greedy rule) and memoizes dead states, so
    instances that admit a witness are found quickly while refutations
    degrade to the full reachable state space.
    """
    if d == 0:
        return _zero_twin_steps(masks, n)
    failed = set()
    steps = []

    def go(mask: int) -> bool:
        if mask & (mask - 1) == 0:
            return True
        if mask in failed:
            return False
        live = [u for u in range(n) if (mask >> u) & 1]
        for u in live:
            partner = None
            for v in live:
                if v != u and _restricted_sd(masks, mask, u, v) <= d:
                    partner = v
                    break
            if partner is None:
                continue
            steps.append((u, partner))
            if go(mask & ~(1 << u)):
                return True
            steps.pop()
        failed.add(mask)
        return False

    return steps if go((1 << n) - 1) else None


def sdd_exact(g: Graph, limit: int = SDD_SEARCH_LIMIT) -> tuple[int, SddWitness]:
    """Exact sd-degeneracy with a witness, by binary search on d.

    Each level is decided by reachability over remaining-vertex-set states
    (see _witness_search).  The default limit keeps refutations desk-scale;
    raise it only for instances known to carry an easy witness.
    """
    n = g.n
    if n < 1:
        raise ValueError("empty graph")
    if n > limit:
        raise ValueError(f"graph too large for exhaustive search ({n} > {limit})")
    if n == 1:
        return 0, SddWitness(0, ())
    masks = g.neighbor_masks()
    hi = n - 2  # every pair is an (n-2)-twin, so level n-2 always succeeds
    best_steps = _witness_search(masks, n, hi)
    assert best_steps is not None
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        got = _witness_search(masks, n, mid)
        if got is not None:
            hi = mid
            best_steps = got
        else:
            lo = mid + 1
    return hi, SddWitness(hi, tuple(best_steps))


def embed_sdd1(g: Graph) -> tuple[Graph, SddWitness, tuple[int, ...]]:
    """Embed g into a graph of sd-degeneracy at most 1.

    Between consecutive vertices v_i, v_{i+1} (input id order) a chain of
    interpolator vertices morphs the neighborhood of v_i into that of
    v_{i+1}: first the private neighbors of v_i are dropped one by one,
    then those of v_{i+1} added one by one.  Interpolators attach only to
    original vertices that survive past v_i, and never to each other, so
    consecutive vertices of the elimination order are 1-twins when their
    turn comes.

    Output vertices are numbered in elimination order.  Returns the host
    graph, a d=1 witness eliminating 0, 1, 2, ..., and the injection
    mapping each original vertex to its host id.  The host has fewer than
    n**2 vertices for n >= 2.
    """
    n = g.n
    if n < 1:
        raise ValueError("empty graph")
    seq: list[tuple[str, object]] = []
    for i in range(n - 1):
        seq.append(("orig", i))
        future = set(range(i + 1, n))
        base = g.adj[i] & future
        target = g.adj[i + 1] & future
        drops = sorted((base - {i + 1}) - target)
        adds = sorted(target - base)
        hops = len(drops) + len(adds)
        if hops >= 2:
            cur = set(base)
            for k in range(hops - 1):
                if k < len(drops):
                    cur.remove(drops[k])
                else:
                    cur.add(adds[k - len(drops)])
                seq.append(("interp", frozenset(cur)))
    seq.append(("orig", n - 1))

    total = len(seq)
    inj = [-1] * n
    for pos, (kind, payload) in enumerate(seq):
        if kind == "orig":
            inj[payload] = pos
    host = Graph(total)
    for u, v in g.edges():
        host.add_edge(inj[u], inj[v])
    for pos, (kind, payload) in enumerate(seq):
        if kind == "interp":
            for w in payload:
                host.add_edge(pos, inj[w])
    if n >= 2:
        assert total < n * n
    witness = SddWitness(1, tuple((k, k + 1) for k in range(total - 1)))
    return host, witness, tuple(inj)


def save_witness(w: SddWitness) -> str:
    """Serialize as the `w sdd` text format."""
    lines = [f"w sdd {w.d} {len(w.steps)}"]
    lines.extend(f"x {e} {p}" for e, p in w.steps)
    return "\n".join(lines) + "\n"


def load_witness(text: str) -> SddWitness:
    d = None
    declared = None
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "w":
            if d is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "sdd":
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            d, declared = int(parts[2]), int(parts[3])
        elif parts[0] == "x":
            if d is None:
                raise ValueError(f"line {lineno}: step before header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: malformed step {line!r}")
            steps.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"line {lineno}: unknown record {line!r}")
    if d is None:
        raise ValueError("missing `w sdd` header")
    if declared != len(steps):
        raise ValueError(f"header declares {declared} steps, found {len(steps)}")
    return SddWitness(d, tuple(steps))
