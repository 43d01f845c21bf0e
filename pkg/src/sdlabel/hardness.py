"""SAT-reduction graph builders with desk-scale correctness oracles.

Two reductions from bounded-occurrence 3-SAT:

* the *diverse-subgraph* reduction (build_sd_reduction): the built graph
  has an induced subgraph with at least two vertices and no d-twin pair
  iff the formula is satisfiable;

* the *elimination-order* reduction (build_sdd_reduction): the built
  graph has sd-degeneracy at most 1 iff some assignment satisfies all
  clauses but at most one.

Only the constructive directions are executed here: a satisfying
assignment is turned into a diverse set or an elimination order, and an
elimination order is turned back into an assignment.  The converse
directions are checked on miniature instances by the test suite via the
exact oracles in :mod:`sdlabel.twins`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .twins import DiverseSet, SddWitness, check_witness

__all__ = [
    "CnfFormula",
    "ReductionMap",
    "load_cnf",
    "save_cnf",
    "clause_satisfied",
    "unsat_clauses",
    "sat_oracle",
    "build_bubble",
    "build_sd_reduction",
    "validate_sd_reduction",
    "sd_witness_from_assignment",
    "build_sdd_reduction",
    "sdd_witness_from_assignment",
    "extract_assignment",
    "save_roles",
]

SAT_ORACLE_LIMIT = 24


@dataclass(frozen=True)
class CnfFormula:
    """CNF with 1-based variables; a literal is +v or -v."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        object.__setattr__(
            self, "clauses", tuple(tuple(c) for c in self.clauses)
        )
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    def occurrences(self, var: int) -> int:
        return sum(1 for c in self.clauses for lit in c if abs(lit) == var)


def load_cnf(text: str) -> CnfFormula:
    """DIMACS CNF; clauses are runs of literals terminated by 0."""
    tokens = []
    num_vars = num_clauses = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"malformed header {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
        else:
            tokens.extend(int(t) for t in parts)
    if num_vars is None:
        raise ValueError("missing `p cnf` header")
    clauses = []
    cur: list[int] = []
    for t in tokens:
        if t == 0:
            if not cur:
                raise ValueError("empty clause")
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(t)
    if cur:
        raise ValueError("unterminated clause")
    if len(clauses) != num_clauses:
        raise ValueError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def save_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in phi.clauses)
    return "\n".join(lines) + "\n"


def clause_satisfied(clause, assignment) -> bool:
    return any(
        assignment[abs(lit) - 1] == (lit > 0) for lit in clause
    )


def unsat_clauses(phi: CnfFormula, assignment) -> list[int]:
    """0-based indices of clauses the assignment leaves unsatisfied."""
    if len(assignment) != phi.num_vars:
        raise ValueError("assignment length mismatch")
    return [
        j for j, c in enumerate(phi.clauses) if not clause_satisfied(c, assignment)
    ]


def sat_oracle(phi: CnfFormula, allow_one_unsat: bool = False,
               limit: int = SAT_ORACLE_LIMIT):
    """Exhaustive search for an assignment leaving <= 0 (or 1) clauses
    unsatisfied; returns the first such assignment (variable i is bit i-1
    of the counter) or None."""
    if phi.num_vars > limit:
        raise ValueError(f"too many variables for exhaustive search "
                         f"({phi.num_vars} > {limit})")
    budget = 1 if allow_one_unsat else 0
    for bits in range(1 << phi.num_vars):
        assignment = [(bits >> i) & 1 == 1 for i in range(phi.num_vars)]
        misses = 0
        for c in phi.clauses:
            if not clause_satisfied(c, assignment):
                misses += 1
                if misses > budget:
                    break
        if misses <= budget:
            return assignment
    return None


@dataclass
class ReductionMap:
    """A reduction graph plus a total vertex -> role-tag map.

    ``meta`` records the construction's internals (gadget ids, port
    assignments, parameters) so validators and witness builders do not
    re-derive them from the raw graph.
    """

    graph: Graph
    roles: dict[int, str]
    meta: dict = field(default_factory=dict)


def save_roles(r: ReductionMap) -> str:
    return "".join(f"r {v} {r.roles[v]}\n" for v in sorted(r.roles))


# ---------------------------------------------------------------------------
# Bubble gadget (diverse-subgraph reduction)
# ---------------------------------------------------------------------------


def _bubble_layout(d: int):
    """Cells and port cells of a bubble: a w x w rook grid, w = d/2 + 2,
    with the two rightmost top-row cells removed.  Ports are the top row
    (d/2 cells, left to right) then the rightmost column (d/2 + 1 cells,
    top to bottom)."""
    if d < 8 or d % 2:
        raise ValueError("bubble gadget needs even d >= 8")
    w = d // 2 + 2
    removed = {(0, w - 2), (0, w - 1)}
    cells = [(r, c) for r in range(w) for c in range(w) if (r, c) not in removed]
    top_ports = [(0, c) for c in range(w - 2)]
    col_ports = [(r, w - 1) for r in range(1, w)]
    return w, cells, top_ports, col_ports


def build_bubble(d: int):
    """Stand-alone bubble gadget; returns (graph, top_ports, col_ports)."""
    w, cells, top, col = _bubble_layout(d)
    index = {cell: i for i, cell in enumerate(cells)}
    g = Graph(len(cells))
    for i, (r1, c1) in enumerate(cells):
        for (r2, c2) in cells[i + 1 :]:
            if r1 == r2 or c1 == c2:
                g.add_edge(index[(r1, c1)], index[(r2, c2)])
    return g, [index[c] for c in top], [index[c] for c in col]


def _check_sd_shape(phi: CnfFormula, d: int) -> None:
    if d < 8 or d % 2:
        raise ValueError("reduction needs even d >= 8")
    if len(phi.clauses) < 3:
        raise ValueError("need at least three clauses")
    if phi.num_vars < 2:
        raise ValueError("need at least two variables")
    for j, c in enumerate(phi.clauses):
        if len(c) not in (2, 3):
            raise ValueError(f"clause {j} has size {len(c)}, need 2 or 3")
        if len({abs(l) for l in c}) != len(c):
            raise ValueError(f"clause {j} repeats a variable")
    for v in range(1, phi.num_vars + 1):
        occ = phi.occurrences(v)
        if not 1 <= occ <= 3:
            raise ValueError(f"variable {v} occurs {occ} times, need 1..3")


def build_sd_reduction(phi: CnfFormula, d: int) -> ReductionMap:
    """The diverse-subgraph reduction graph.

    Layout (ids in order): literal vertices x_i, not-x_i per variable;
    the shared-neighbor sets N_x concatenated as y_1..y_{nt}; clause
    pairs v_c, d_c; then the bubbles.  Bubbles are neatly attached with
    ports consumed left-to-right along the top row, then top-to-bottom
    along the rightmost column.
    """
    _check_sd_shape(phi, d)
    nv, m = phi.num_vars, len(phi.clauses)
    t = d // 2 + 1
    nt = nv * t
    if m - 1 > nt - 2:
        raise ValueError("not enough shared-neighbor vertices for distinct z_j")

    roles: dict[int, str] = {}
    edges: list[tuple[int, int]] = []

    lit_pos = {}
    lit_neg = {}
    for i in range(1, nv + 1):
        lit_pos[i] = 2 * (i - 1)
        lit_neg[i] = 2 * (i - 1) + 1
        roles[lit_pos[i]] = f"lit:+{i}"
        roles[lit_neg[i]] = f"lit:-{i}"
    y_base = 2 * nv
    y_ids = tuple(y_base + k for k in range(nt))  # y_1 .. y_nt
    for k, y in enumerate(y_ids, start=1):
        roles[y] = f"y:{k}"
    c_base = y_base + nt
    vc = tuple(c_base + 2 * j for j in range(m))
    dc = tuple(c_base + 2 * j + 1 for j in range(m))
    for j in range(m):
        roles[vc[j]] = f"vc:{j + 1}"
        roles[dc[j]] = f"dc:{j + 1}"

    # variable gadgets: both literals adjacent to all of N_x
    for i in range(1, nv + 1):
        block = y_ids[(i - 1) * t : i * t]
        for y in block:
            edges.append((lit_pos[i], y))
            edges.append((lit_neg[i], y))
    # clause gadgets
    for j, clause in enumerate(phi.clauses):
        edges.append((vc[j], dc[j]))
        for lit in clause:
            rep = lit_pos[lit] if lit > 0 else lit_neg[-lit]
            edges.append((vc[j], rep))
    # consecutive clause pairs fully joined
    for j in range(m - 1):
        for u in (vc[j], dc[j]):
            for v in (vc[j + 1], dc[j + 1]):
                edges.append((u, v))
    # clique on the first ceil(d/4) vertices of N_{x_1}, fully joined to
    # the first ceil(d/4) vertices of N_{x_2}
    q = -(-d // 4)  # ceil
    first1 = y_ids[:q]
    first2 = y_ids[t : t + q]
    for a in range(q):
        for b in range(a + 1, q):
            edges.append((first1[a], first1[b]))
    for a in first1:
        for b in first2:
            edges.append((a, b))

    next_id = c_base + 2 * m
    bubbles = []

    def attach_bubble(bid: str, members, counts):
        nonlocal next_id
        w, cells, top, col = _bubble_layout(d)
        index = {}
        for cell in cells:
            index[cell] = next_id
            roles[next_id] = f"bub:{bid}:{cell[0]}:{cell[1]}"
            next_id += 1
        for i, (r1, c1) in enumerate(cells):
            for (r2, c2) in cells[i + 1 :]:
                if r1 == r2 or c1 == c2:
                    edges.append((index[(r1, c1)], index[(r2, c2)]))
        ports = [index[c] for c in top] + [index[c] for c in col]
        assert sum(counts) == len(ports) == d + 1
        assert len(counts) == len(members)
        pos = 0
        for member, cnt in zip(members, counts):
            for port in ports[pos : pos + cnt]:
                edges.append((member, port))
            pos += cnt
        bubbles.append(
            {
                "id": bid,
                "cells": {cell: index[cell] for cell in cells},
                "top_ports": [index[c] for c in top],
                "col_ports": [index[c] for c in col],
                "members": tuple(members),
                "counts": tuple(counts),
            }
        )

    fl = d // 4
    ce = q
    # inter-clause bubbles: S_j = (z_j, v_j, d_j, v_{j+1}, d_{j+1}); the
    # z_j are the pairwise distinct y vertices not used in a terminal
    # attachment, taken in global y-order: z_j = y_{j+1}
    for j in range(m - 1):
        zj = y_ids[j + 1]
        attach_bubble(
            f"s{j + 1}",
            (zj, vc[j], dc[j], vc[j + 1], dc[j + 1]),
            (1, fl, fl, ce, ce),
        )
    attach_bubble("term1", (vc[0], dc[0], y_ids[0]), (ce, ce, d + 1 - 2 * ce))
    attach_bubble("term2", (vc[m - 1], dc[m - 1], y_ids[nt - 1]), (fl, fl, d + 1 - 2 * fl))
    for i in range(nt - 2):
        attach_bubble(
            f"sp{i + 1}",
            (y_ids[i], y_ids[i + 1], y_ids[i + 2]),
            (1, d // 2, d // 2),
        )

    g = Graph(next_id, edges)
    meta = {
        "kind": "sd",
        "d": d,
        "t": t,
        "num_vars": nv,
        "num_clauses": m,
        "lit_pos": lit_pos,
        "lit_neg": lit_neg,
        "y_ids": y_ids,
        "vc": vc,
        "dc": dc,
        "bubbles": bubbles,
    }
    return ReductionMap(g, roles, meta)


def validate_sd_reduction(r: ReductionMap, d: int) -> tuple[bool, list[str]]:
    """Structural checks: every bubble neatly attached (ports have exactly
    one outside neighbor, interiors none, at most one member straddles the
    top row and the column), bubble interiors are exact rook-minus grids,
    and the degree observations (clause vertices have exactly d/2 bubble
    neighbors; y_i at least d/2+1, and at least d once i >= 3)."""
    g = r.graph
    issues = []
    meta = r.meta
    if meta.get("kind") != "sd":
        return False, ["not a diverse-subgraph reduction"]
    bubble_vertices = set()
    for b in meta["bubbles"]:
        bubble_vertices.update(b["cells"].values())
    for b in meta["bubbles"]:
        cells = b["cells"]
        own = set(cells.values())
        ports = set(b["top_ports"]) | set(b["col_ports"])
        by_vertex = {v: cell for cell, v in cells.items()}
        # internal structure: same row/column iff adjacent
        for cell, v in cells.items():
            for cell2, v2 in cells.items():
                if v < v2:
                    expect = cell[0] == cell2[0] or cell[1] == cell2[1]
                    if g.has_edge(v, v2) != expect:
                        issues.append(f"bubble {b['id']}: cells {cell} {cell2} wrong")
        for v in own:
            outside = [x for x in g.adj[v] if x not in own]
            if v in ports:
                if len(outside) != 1:
                    issues.append(
                        f"bubble {b['id']}: port {by_vertex[v]} has "
                        f"{len(outside)} outside neighbors, wanted 1"
                    )
            elif outside:
                issues.append(
                    f"bubble {b['id']}: interior {by_vertex[v]} touches outside"
                )
        straddlers = [
            s
            for s in b["members"]
            if set(g.adj[s]) & set(b["top_ports"]) and set(g.adj[s]) & set(b["col_ports"])
        ]
        if len(straddlers) > 1:
            issues.append(f"bubble {b['id']}: {len(straddlers)} members straddle")
    half = d // 2
    for j in range(meta["num_clauses"]):
        for v in (meta["vc"][j], meta["dc"][j]):
            k = sum(1 for x in g.adj[v] if x in bubble_vertices)
            if k != half:
                issues.append(f"{r.roles[v]} has {k} bubble neighbors, wanted {half}")
    for i, y in enumerate(meta["y_ids"], start=1):
        k = sum(1 for x in g.adj[y] if x in bubble_vertices)
        if k < half + 1:
            issues.append(f"y:{i} has {k} bubble neighbors, wanted >= {half + 1}")
        if i >= 3 and k < d:
            issues.append(f"y:{i} has {k} bubble neighbors, wanted >= {d}")
    return (not issues, issues)


def sd_witness_from_assignment(r: ReductionMap, phi: CnfFormula, assignment) -> DiverseSet:
    """Keep everything except the false literal vertex of each variable.

    The assignment must satisfy every clause; the returned set induces a
    (d+1)-diverse subgraph of the reduction graph.
    """
    meta = r.meta
    if meta.get("kind") != "sd":
        raise ValueError("not a diverse-subgraph reduction")
    missed = unsat_clauses(phi, assignment)
    if missed:
        raise ValueError(f"assignment leaves clauses {missed} unsatisfied")
    drop = {
        (meta["lit_neg"][i] if assignment[i - 1] else meta["lit_pos"][i])
        for i in range(1, phi.num_vars + 1)
    }
    keep = frozenset(range(r.graph.n)) - drop
    return DiverseSet(keep, meta["d"])


# ---------------------------------------------------------------------------
# Elimination-order reduction
# ---------------------------------------------------------------------------


def _check_sdd_shape(phi: CnfFormula) -> None:
    for j, c in enumerate(phi.clauses):
        if len(c) != 3:
            raise ValueError(f"clause {j} has size {len(c)}, need exactly 3")
        if len({abs(l) for l in c}) != 3:
            raise ValueError(f"clause {j} repeats a variable")
    for v in range(1, phi.num_vars + 1):
        occ = phi.occurrences(v)
        if occ not in (2, 3):
            raise ValueError(f"variable {v} occurs in {occ} clauses, need 2 or 3")


def build_sdd_reduction(phi: CnfFormula) -> ReductionMap:
    """The elimination-order reduction graph.

    Per variable, an independent set v_0 (representative of the negated
    literal), transition vertices t_1..t_{2p-1}, v_1 (representative of
    the positive literal); per clause a 5-clique c_top, c_l1, c_l2, c_l3,
    c_bot; a hub gamma adjacent to every c_bot; an isolated vertex iota.
    Transition neighborhoods walk from N(v_0) to N(v_1) one vertex at a
    time, first adding v_1's neighbors (clause literal vertices before
    c_top vertices), then removing v_0's (c_top vertices before literal
    vertices); within a kind, clause order decides.
    """
    _check_sdd_shape(phi)
    nv, m = phi.num_vars, len(phi.clauses)
    roles: dict[int, str] = {}
    edges: list[tuple[int, int]] = []

    var_block = {}
    next_id = 0
    for i in range(1, nv + 1):
        p = phi.occurrences(i)
        v0 = next_id
        ts = tuple(range(next_id + 1, next_id + 2 * p))
        v1 = next_id + 2 * p
        next_id += 2 * p + 1
        var_block[i] = {"v0": v0, "v1": v1, "ts": ts, "p": p}
        roles[v0] = f"var:{i}:rep0"
        roles[v1] = f"var:{i}:rep1"
        for k, tv in enumerate(ts, start=1):
            roles[tv] = f"var:{i}:t{k}"

    clause_block = {}
    for j in range(m):
        top = next_id
        lits = (next_id + 1, next_id + 2, next_id + 3)
        bot = next_id + 4
        next_id += 5
        clause_block[j] = {"top": top, "lits": lits, "bot": bot}
        roles[top] = f"cl:{j + 1}:top"
        for k, lv in enumerate(lits, start=1):
            roles[lv] = f"cl:{j + 1}:lit{k}"
        roles[bot] = f"cl:{j + 1}:bot"
        five = (top, *lits, bot)
        for a in range(5):
            for b in range(a + 1, 5):
                edges.append((five[a], five[b]))

    gamma = next_id
    iota = next_id + 1
    next_id += 2
    roles[gamma] = "gamma"
    roles[iota] = "iota"

    # rule 1: clause literal vertices and c_top to the representatives
    for j, clause in enumerate(phi.clauses):
        cb = clause_block[j]
        for k, lit in enumerate(clause):
            blk = var_block[abs(lit)]
            rep = blk["v1"] if lit > 0 else blk["v0"]
            edges.append((cb["lits"][k], rep))
            edges.append((cb["top"], rep))
    # rule 2
    for j in range(m):
        edges.append((clause_block[j]["bot"], gamma))

    g = Graph(next_id, edges)

    # rule 3: transition neighborhoods, derived from the graph built so far
    for i in range(1, nv + 1):
        blk = var_block[i]
        neg_clauses = [j for j, c in enumerate(phi.clauses) if -i in c]
        pos_clauses = [j for j, c in enumerate(phi.clauses) if i in c]
        a, b = len(neg_clauses), len(pos_clauses)
        blk["a"], blk["b"] = a, b
        xs = [clause_block[j]["top"] for j in neg_clauses]
        xs += [
            clause_block[j]["lits"][list(phi.clauses[j]).index(-i)]
            for j in neg_clauses
        ]
        ys = [
            clause_block[j]["lits"][list(phi.clauses[j]).index(i)]
            for j in pos_clauses
        ]
        ys += [clause_block[j]["top"] for j in pos_clauses]
        # Walk from N(v_0) to N(v_1), one vertex per transition: add the
        # y_i, then delete x_1..x_{2a-1}.  A variable with only one kind of
        # literal has 2p-1 transitions for a 2p-long difference, so the
        # last addition (or the first deletion) is absorbed by v_1 itself.
        hops = []
        cur = set(xs)
        if a == 0:
            for y in ys[:-1]:
                cur = cur | {y}
                hops.append(frozenset(cur))
        else:
            for y in ys:
                cur = cur | {y}
                hops.append(frozenset(cur))
            for x in xs[:-1]:
                cur = cur - {x}
                hops.append(frozenset(cur))
        assert len(hops) == 2 * blk["p"] - 1
        for tv, nb in zip(blk["ts"], hops):
            for w in sorted(nb):
                g.add_edge(tv, w)

    meta = {
        "kind": "sdd",
        "num_vars": nv,
        "num_clauses": m,
        "var_block": var_block,
        "clause_block": clause_block,
        "gamma": gamma,
        "iota": iota,
    }
    return ReductionMap(g, roles, meta)


def sdd_witness_from_assignment(
    r: ReductionMap, phi: CnfFormula, assignment, allowed_unsat_clause=None
) -> SddWitness:
    """Elimination order at d = 1 from an almost-satisfying assignment.

    Variable gadgets collapse along their 1-twin paths onto the surviving
    representative; satisfied clause gadgets fall in the order c_top,
    c_l2, c_l3, c_l1, c_bot (l1 being the first satisfied literal); then
    gamma, then the one unsatisfied gadget, then the degree-<=1 cleanup
    against iota.
    """
    meta = r.meta
    if meta.get("kind") != "sdd":
        raise ValueError("not an elimination-order reduction")
    missed = unsat_clauses(phi, assignment)
    if allowed_unsat_clause is not None:
        if any(j != allowed_unsat_clause for j in missed):
            raise ValueError(
                f"clauses {missed} unsatisfied, only {allowed_unsat_clause} allowed"
            )
    elif len(missed) > 1:
        raise ValueError(f"assignment leaves {len(missed)} clauses unsatisfied")
    unsat = missed[0] if missed else None

    iota = meta["iota"]
    steps: list[tuple[int, int]] = []
    for i in range(1, phi.num_vars + 1):
        blk = meta["var_block"][i]
        path = (blk["v0"], *blk["ts"], blk["v1"])
        if assignment[i - 1]:  # keep v0, eliminate from the v1 end
            for k in range(len(path) - 1, 0, -1):
                steps.append((path[k], path[k - 1]))
        else:  # keep v1
            for k in range(len(path) - 1):
                steps.append((path[k], path[k + 1]))
    for j, clause in enumerate(phi.clauses):
        if j == unsat:
            continue
        cb = meta["clause_block"][j]
        sat_pos = next(
            k for k, lit in enumerate(clause)
            if assignment[abs(lit) - 1] == (lit > 0)
        )
        l1 = cb["lits"][sat_pos]
        l2, l3 = (cb["lits"][k] for k in range(3) if k != sat_pos)
        steps.append((cb["top"], l2))
        steps.append((l2, l1))
        steps.append((l3, l1))
        steps.append((l1, cb["bot"]))
        steps.append((cb["bot"], iota))
    steps.append((meta["gamma"], iota))
    if unsat is not None:
        cb = meta["clause_block"][unsat]
        for lv in cb["lits"]:
            steps.append((lv, cb["bot"]))
        steps.append((cb["bot"], iota))
    # cleanup: surviving representatives, then the last c_top
    survivors = [
        (meta["var_block"][i]["v0"] if assignment[i - 1] else meta["var_block"][i]["v1"])
        for i in range(1, phi.num_vars + 1)
    ]
    for v in sorted(survivors):
        steps.append((v, iota))
    if unsat is not None:
        steps.append((meta["clause_block"][unsat]["top"], iota))
    w = SddWitness(1, tuple(steps))
    if not check_witness(r.graph, w):
        raise AssertionError("constructed elimination order failed verification")
    return w


def extract_assignment(r: ReductionMap, order: SddWitness):
    """Assignment read off an elimination order.

    Per variable, the last gadget vertex to go (or the survivor) decides:
    x is true iff that vertex's original neighborhood contains N(v_0).
    Returns (assignment, number of clauses it leaves unsatisfied); the
    count is at most 1 for any valid order.
    """
    meta = r.meta
    if meta.get("kind") != "sdd":
        raise ValueError("not an elimination-order reduction")
    if order.d > 1 or not check_witness(r.graph, order):
        raise ValueError("order is not a valid d=1 elimination sequence")
    position = {e: k for k, (e, _) in enumerate(order.steps)}
    g = r.graph
    assignment = []
    for i in range(1, meta["num_vars"] + 1):
        blk = meta["var_block"][i]
        gadget = (blk["v0"], *blk["ts"], blk["v1"])
        last = max(gadget, key=lambda v: position.get(v, len(order.steps)))
        assignment.append(g.adj[last] >= g.adj[blk["v0"]])
    unsat = sum(
        1
        for j in meta["clause_block"]
        if not _clause_satisfied_by_blocks(r, meta, j, assignment)
    )
    return assignment, unsat


def _clause_satisfied_by_blocks(r, meta, j, assignment) -> bool:
    cb = meta["clause_block"][j]
    g = r.graph
    # literal k of clause j is satisfied iff its representative survives on
    # the truthful side; recover the literal's sign from the wiring
    for lv in cb["lits"]:
        rep = next(
            x
            for x in g.adj[lv]
            if r.roles[x].startswith("var:") and r.roles[x].endswith(("rep0", "rep1"))
        )
        var = int(r.roles[rep].split(":")[1])
        positive = r.roles[rep].endswith("rep1")
        if assignment[var - 1] == positive:
            return True
    return False
