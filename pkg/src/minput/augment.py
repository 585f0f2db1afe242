"""Cost minimisation by augmenting along shortest flow-graph paths.

Every s -> t path in the flow graph of a matching encodes a change of
matching that lowers its cost by exactly one; cycles encode cost-neutral
changes.  The driver below repeatedly extracts a maximal set of
vertex-disjoint shortest s -> t paths and applies them all, mirroring
the phase structure of Hopcroft-Karp; when no path remains the matching
cost is minimum over allowed matchings.  The s -> t distance increases
strictly between rounds, which bounds the number of rounds by
``6 * sqrt(n)``.

Slack families stay implicit throughout (see flowgraph): inside this
module each family is a single token node with a path capacity, and
tokens re-expand to distinct materialised slack ids in emitted paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Collection

from .errors import IterationBoundExceeded
from .flowgraph import FlowGraph, build_flow_graph
from .graph import SccInfo, SparseDigraph
from .matching import Matching, classify

PathSet = list[list[int]]


@dataclass
class IterationStats:
    """One augmentation round: s -> t distance (None when t was
    unreachable), paths applied, matching cost afterwards, and nodes
    plus edges touched."""

    dist: int | None
    paths: int
    cost: int
    work: int


@dataclass
class Diagnostics:
    iterations: int = 0
    per_iteration: list[IterationStats] = field(default_factory=list)

    def distances(self) -> list[int]:
        return [it.dist for it in self.per_iteration if it.dist is not None]

    def total_work(self) -> int:
        return sum(it.work for it in self.per_iteration)


class LayeredDag:
    """Single-use DAG of edges lying on shortest s -> t paths.

    ``dist`` covers the internal node space: flow-graph ids below
    ``aux_base`` plus one token per slack family.  ``useful`` marks
    nodes on at least one shortest s -> t path; ``indeg`` counts useful
    in-edges per useful node and is consumed by ``extract_paths``.
    """

    __slots__ = ("fg", "size", "dist", "dist_t", "useful", "indeg", "work")

    def __init__(self, fg: FlowGraph, size: int, dist: list[int], dist_t: int,
                 useful: bytearray, indeg: list[int], work: int):
        self.fg = fg
        self.size = size
        self.dist = dist
        self.dist_t = dist_t
        self.useful = useful
        self.indeg = indeg
        self.work = work


def _in_candidates(fg: FlowGraph, x: int) -> list[int]:
    """In-neighbours of ``x`` in the internal (token) node space."""
    aux_base = fg.aux_base
    if x >= aux_base:
        return fg.fam_members[x - aux_base]
    if x == fg.t_id:
        cands = list(fg.t_in_direct)
        cands.extend(range(aux_base, aux_base + fg.n_families))
        return cands
    return fg.in_neighbors(x)


def _run_bfs(fg: FlowGraph) -> tuple[LayeredDag | None, int]:
    aux_base = fg.aux_base
    size = aux_base + fg.n_families
    s_id, t_id = fg.s_id, fg.t_id
    adj = fg.adj
    fam_of = fg.family_of_node
    dist = [-1] * size
    dist[s_id] = 0
    frontier = [s_id]
    work = 0
    d = 0
    while frontier and dist[t_id] < 0:
        d += 1
        nxt: list[int] = []
        for x in frontier:
            work += 1
            if x >= aux_base:
                # slack family token: its only edge leads to t
                if dist[t_id] < 0:
                    dist[t_id] = d
                continue
            nbrs = adj[x]
            work += len(nbrs)
            for w in nbrs:
                if dist[w] < 0:
                    dist[w] = d
                    if w != t_id:
                        nxt.append(w)
            f = fam_of[x]
            if f >= 0:
                token = aux_base + f
                if dist[token] < 0:
                    dist[token] = d
                    nxt.append(token)
        frontier = nxt
    if dist[t_id] < 0:
        return None, work

    # Backward sweep from t over level edges marks the nodes that can
    # still reach t along a shortest path and counts their useful
    # in-edges.  Candidates at the right level are reachable from s by
    # construction, hence useful themselves.
    useful = bytearray(size)
    indeg = [0] * size
    useful[t_id] = 1
    stack = [t_id]
    while stack:
        x = stack.pop()
        dx = dist[x]
        cands = _in_candidates(fg, x)
        work += len(cands) + 1
        count = 0
        for u in cands:
            if dist[u] == dx - 1:
                count += 1
                if not useful[u]:
                    useful[u] = 1
                    if u != s_id:
                        stack.append(u)
        indeg[x] = count
    return LayeredDag(fg, size, dist, dist[t_id], useful, indeg, work), work


def layered_bfs(fg: FlowGraph) -> LayeredDag | None:
    """Layered DAG of shortest s -> t paths, or None when t is unreachable."""
    dag, _ = _run_bfs(fg)
    return dag


def extract_paths(dag: LayeredDag) -> PathSet:
    """Maximal set of vertex-disjoint shortest s -> t paths.

    Paths are traced backwards from t, always picking the lowest-id
    live in-neighbour; used vertices die and every node whose useful
    in-degree drains to zero dies with them, so the loop stops exactly
    when no shortest path survives.  Slack nodes of one family are
    interchangeable: up to capacity many paths may pass through a
    family, each claiming a fresh materialised slack id.  Consumes the
    DAG.
    """
    fg = dag.fg
    aux_base = fg.aux_base
    s_id, t_id = fg.s_id, fg.t_id
    dist = dag.dist
    useful = dag.useful
    indeg = dag.indeg
    alive = bytearray(b"\x01") * dag.size
    work = 0

    direct = [x for x in fg.t_in_direct if useful[x]]
    fams = [f for f in range(fg.n_families) if useful[aux_base + f]]
    fam_live = [indeg[aux_base + f] for f in range(fg.n_families)]
    fam_used = [0] * fg.n_families
    member_ptr = [0] * fg.n_families
    dptr = 0
    fptr = 0
    paths: PathSet = []

    while True:
        while dptr < len(direct) and not alive[direct[dptr]]:
            dptr += 1
        use_f = -1
        if dptr < len(direct):
            cur = direct[dptr]
            rev = [t_id, cur]
        else:
            while fptr < len(fams) and (
                fam_live[fams[fptr]] <= 0 or fam_used[fams[fptr]] >= fg.fam_cap[fams[fptr]]
            ):
                fptr += 1
            if fptr == len(fams):
                break
            use_f = fams[fptr]
            slack = aux_base + fg.slack_offset[use_f] + fam_used[use_f]
            fam_used[use_f] += 1
            members = fg.fam_members[use_f]
            p = member_ptr[use_f]
            while not (useful[members[p]] and alive[members[p]]):
                p += 1
                work += 1
            member_ptr[use_f] = p
            cur = members[p]
            rev = [t_id, slack, cur]
        while cur != s_id:
            cands = _in_candidates(fg, cur)
            work += len(cands)
            level = dist[cur] - 1
            best = -1
            for u in cands:
                if dist[u] == level and useful[u] and alive[u] and (best < 0 or u < best):
                    best = u
            cur = best
            rev.append(cur)
        rev.reverse()
        paths.append(rev)

        # kill interior vertices, then cascade useful in-degree drains
        queue: list[int] = []
        for x in rev[1:-1]:
            if x < aux_base:
                alive[x] = 0
                queue.append(x)
        while queue:
            x = queue.pop()
            work += 1
            dx1 = dist[x] + 1
            nbrs = fg.adj[x]
            work += len(nbrs)
            for w in nbrs:
                if w != t_id and dist[w] == dx1 and useful[w] and alive[w]:
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        alive[w] = 0
                        queue.append(w)
            f = fg.family_of_node[x]
            if f >= 0 and dist[aux_base + f] == dx1 and useful[aux_base + f]:
                fam_live[f] -= 1
    dag.work += work
    return paths


def augment_on_paths(m: Matching, paths: PathSet) -> Matching:
    """Apply augmenting paths (or cycles) to the matching in place.

    Each destination-to-source edge undoes the matched pair it
    reversed, each source-to-destination edge becomes matched; all
    other edges (super source, gateways, slack nodes, free-vertex
    swaps inside a component) carry no matching change.
    """
    n = m.n
    for path in paths:
        removals: list[tuple[int, int]] = []
        additions: list[tuple[int, int]] = []
        for a, b in zip(path, path[1:]):
            if a < n and n <= b < 2 * n:
                additions.append((a, b - n))
            elif n <= a < 2 * n and b < n:
                removals.append((b, a - n))
        for u, v in removals:
            m.remove(u, v)
        for u, v in additions:
            m.add(u, v)
    return m


def minimize(
    g: SparseDigraph,
    scc: SccInfo,
    forbidden: Collection[int],
    m0: Matching,
    *,
    check: bool = False,
) -> tuple[Matching, Diagnostics]:
    """Drive an allowed matching to minimum cost.

    Returns the optimal matching (``m0`` is left untouched) and
    per-round diagnostics.  With ``check=True`` every round re-validates
    the matching, its allowedness, the exact cost drop, the strict
    growth of the s -> t distance and the conservation laws (matched
    sources stay matched, source components never lose their last
    unmatched member, components at zero or one unmatched members stay
    that way).

    Rounds are capped at ``6 * sqrt(n)``; exceeding the cap means a bug
    in this package, not an unsolvable instance, and raises
    IterationBoundExceeded.
    """
    diag = Diagnostics()
    n = g.n
    if n == 0:
        return m0.copy(), diag
    forb = frozenset(forbidden)
    cap = int(6 * math.sqrt(n))
    m = m0.copy()
    prev_dist = 0
    while True:
        diag.iterations += 1
        if diag.iterations > cap:
            raise IterationBoundExceeded(
                f"augmentation still running after {cap} rounds on n={n}"
            )
        cls = classify(scc, m)
        cur_cost = (n - m.size) + len(cls.x_comps)
        fg = build_flow_graph(g, scc, m, forb, cls)
        dag, bfs_work = _run_bfs(fg)
        if dag is None:
            diag.per_iteration.append(
                IterationStats(None, 0, cur_cost, fg.build_work + bfs_work)
            )
            break
        if check:
            assert dag.dist_t >= 3, "flow graph distances start at 3"
            assert dag.dist_t > prev_dist, "s->t distance must increase strictly"
        paths = extract_paths(dag)
        pre_mate_src = list(m.mate_of_src) if check else None
        augment_on_paths(m, paths)
        new_cost = cur_cost - len(paths)
        diag.per_iteration.append(
            IterationStats(dag.dist_t, len(paths), new_cost, fg.build_work + dag.work)
        )
        if check:
            m.validate(g)
            assert m.is_allowed(forb), "augmentation lost the forbidden cover"
            post = classify(scc, m)
            real_cost = (n - m.size) + len(post.x_comps)
            assert real_cost == new_cost, "each path must lower the cost by one"
            for u in range(n):
                if pre_mate_src[u] >= 0:
                    assert m.mate_of_src[u] >= 0, (
                        f"source copy of {u} lost its outgoing matched edge"
                    )
            for c in range(scc.n_comps):
                if not scc.is_source[c]:
                    continue
                if cls.comp_unmatched[c] >= 1:
                    assert post.comp_unmatched[c] >= 1, (
                        f"source component {c} lost its last unmatched member"
                    )
                if cls.comp_unmatched[c] <= 1:
                    assert post.comp_unmatched[c] <= 1, (
                        f"component {c} went above one unmatched member"
                    )
        prev_dist = dag.dist_t
    return m, diag
