"""Matchings on the bipartite splitting of a digraph.

The splitting of ``G`` doubles every vertex ``u`` into a source copy
``u_src`` and a destination copy ``u_dst`` and turns each edge
``(u, v)`` into ``(u_src, v_dst)``.  A matching of the splitting pulls
back to a set of edges of ``G`` in which no two edges share a source and
no two share a destination; we store matchings directly in that pulled
back form, as a pair of mate arrays indexed by vertex.

A vertex counts as *unmatched* when its destination copy is not covered.
Given a forbidden vertex set F, a matching is *allowed* when every
unmatched vertex lies outside F.  The cost of a matching is the number
of unmatched vertices plus the number of source SCCs whose members are
all matched; minimising this cost over allowed matchings is what the
rest of the package is about.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterator

from .errors import IndexOutOfRange
from .graph import SccInfo, SparseDigraph


class Splitting:
    """Read-only bipartite view of a digraph's doubled vertex set."""

    __slots__ = ("graph",)

    def __init__(self, graph: SparseDigraph):
        self.graph = graph

    @property
    def n(self) -> int:
        return self.graph.n

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield pairs ``(u, v)`` standing for ``u_src -> v_dst``."""
        return self.graph.edges()

    def src_name(self, u: int, labels: list[str] | None = None) -> str:
        return f"{labels[u] if labels else u}.src"

    def dst_name(self, v: int, labels: list[str] | None = None) -> str:
        return f"{labels[v] if labels else v}.dst"


def split(g: SparseDigraph) -> Splitting:
    return Splitting(g)


class Matching:
    """Mutable matching on a splitting, stored as twin mate arrays.

    ``mate_of_src[u]`` is the destination vertex matched through
    ``u_src`` (-1 when free) and ``mate_of_dst[v]`` the source vertex
    matched through ``v_dst``.  Single-owner: callers that need a
    snapshot must ``copy()``.
    """

    __slots__ = ("n", "mate_of_src", "mate_of_dst", "size")

    def __init__(self, n: int):
        self.n = n
        self.mate_of_src = [-1] * n
        self.mate_of_dst = [-1] * n
        self.size = 0

    @classmethod
    def from_edges(cls, n: int, pairs: Collection[tuple[int, int]]) -> "Matching":
        m = cls(n)
        for u, v in pairs:
            m.add(u, v)
        return m

    def add(self, u: int, v: int) -> None:
        if self.mate_of_src[u] >= 0 or self.mate_of_dst[v] >= 0:
            raise ValueError(f"cannot add ({u}, {v}): an endpoint is already matched")
        self.mate_of_src[u] = v
        self.mate_of_dst[v] = u
        self.size += 1

    def remove(self, u: int, v: int) -> None:
        if self.mate_of_src[u] != v:
            raise ValueError(f"cannot remove ({u}, {v}): not in the matching")
        self.mate_of_src[u] = -1
        self.mate_of_dst[v] = -1
        self.size -= 1

    def edges(self) -> list[tuple[int, int]]:
        """Matched pairs as edges of G, ascending by source."""
        return [(u, v) for u, v in enumerate(self.mate_of_src) if v >= 0]

    def unmatched(self) -> list[int]:
        """Vertices whose destination copy is free, ascending."""
        return [v for v, u in enumerate(self.mate_of_dst) if u < 0]

    def is_allowed(self, forbidden: Collection[int]) -> bool:
        return all(self.mate_of_dst[v] >= 0 for v in forbidden)

    def copy(self) -> "Matching":
        dup = Matching.__new__(Matching)
        dup.n = self.n
        dup.mate_of_src = list(self.mate_of_src)
        dup.mate_of_dst = list(self.mate_of_dst)
        dup.size = self.size
        return dup

    def validate(self, g: SparseDigraph) -> None:
        """Raise ValueError unless this is a consistent matching on g's splitting."""
        if self.n != g.n:
            raise ValueError("matching and graph sizes differ")
        count = 0
        for u, v in enumerate(self.mate_of_src):
            if v < 0:
                continue
            count += 1
            if self.mate_of_dst[v] != u:
                raise ValueError(f"mate arrays disagree on ({u}, {v})")
            if v not in g.out_adj[u]:
                raise ValueError(f"matched pair ({u}, {v}) is not an edge")
        for v, u in enumerate(self.mate_of_dst):
            if u >= 0 and self.mate_of_src[u] != v:
                raise ValueError(f"mate arrays disagree on ({u}, {v})")
        if count != self.size:
            raise ValueError("stored size is stale")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n == other.n and self.mate_of_src == other.mate_of_src

    def __repr__(self) -> str:
        return f"Matching(n={self.n}, edges={self.edges()!r})"


def hopcroft_karp(
    n_left: int, n_right: int, adj: list[list[int]]
) -> tuple[list[int], list[int]]:
    """Maximum matching in a bipartite graph, O(E sqrt(V)).

    Parameters
    ----------
    n_left, n_right : int
        Side sizes; left vertices are ``0 .. n_left-1``.
    adj : list[list[int]]
        Right neighbours of each left vertex.

    Returns
    -------
    (mate_left, mate_right)
        Arrays with the matched partner per vertex, -1 where free.

    The result is deterministic: breadth-first layers grow from free
    left vertices in ascending order and the augmenting search scans
    adjacency lists in the order given.
    """
    mate_left = [-1] * n_left
    mate_right = [-1] * n_right
    inf = n_left + n_right + 1
    dist = [inf] * n_left
    queue: deque[int] = deque()
    while True:
        queue.clear()
        for u in range(n_left):
            if mate_left[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        frontier = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= frontier:
                continue
            for v in adj[u]:
                w = mate_right[v]
                if w < 0:
                    if frontier == inf:
                        frontier = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if frontier == inf:
            return mate_left, mate_right
        cursor = [0] * n_left
        for start in range(n_left):
            if mate_left[start] >= 0:
                continue
            stack = [start]
            via: list[int] = []
            while stack:
                u = stack[-1]
                moved = False
                while cursor[u] < len(adj[u]):
                    v = adj[u][cursor[u]]
                    cursor[u] += 1
                    w = mate_right[v]
                    if w < 0:
                        # free destination: augment along the stack
                        via.append(v)
                        for uu, vv in zip(stack, via):
                            mate_left[uu] = vv
                            mate_right[vv] = uu
                            dist[uu] = inf
                        stack.clear()
                        moved = True
                        break
                    if dist[w] == dist[u] + 1:
                        via.append(v)
                        stack.append(w)
                        moved = True
                        break
                if not moved:
                    dist[u] = inf
                    stack.pop()
                    if via:
                        via.pop()


def find_allowed_matching(g: SparseDigraph, forbidden: Collection[int]) -> Matching | None:
    """Maximal matching whose unmatched vertices all avoid ``forbidden``.

    First covers every forbidden destination via maximum matching on the
    subgraph of the splitting spanned by forbidden destination copies
    and their source-side neighbours.  If some forbidden vertex cannot
    be covered there is no allowed matching at all and the result is
    None.  Otherwise the cover is extended greedily, scanning edges in
    ascending (source, destination) order, never unmatching a forbidden
    destination.
    """
    n = g.n
    f_list = sorted(set(forbidden))
    if f_list and not (0 <= f_list[0] and f_list[-1] < n):
        raise IndexOutOfRange(f"forbidden vertex outside [0, {n})")
    match = Matching(n)
    if f_list:
        srcs = sorted({u for f in f_list for u in g.in_adj[f]})
        src_index = {u: i for i, u in enumerate(srcs)}
        adj: list[list[int]] = [[] for _ in srcs]
        for fi, f in enumerate(f_list):
            for u in g.in_adj[f]:
                adj[src_index[u]].append(fi)
        _, mate_right = hopcroft_karp(len(srcs), len(f_list), adj)
        if any(side < 0 for side in mate_right):
            return None
        for fi, f in enumerate(f_list):
            match.add(srcs[mate_right[fi]], f)
    mate_src = match.mate_of_src
    mate_dst = match.mate_of_dst
    for u in range(n):
        if mate_src[u] >= 0:
            continue
        for v in g.out_adj[u]:
            if mate_dst[v] < 0:
                match.add(u, v)
                break
    return match


@dataclass
class MatchClass:
    """Classification of SCCs and unmatched vertices for one matching.

    Source components split by their number of unmatched members: none
    (``x_comps``), exactly one (``y_comps``, with the free vertex kept
    side by side in ``y_free``), or two and more.  ``z_comps`` collects
    the rest: those source components plus every non-source component.
    ``u_prime`` lists the unmatched vertices outside one-free source
    components; they are the unmatched vertices no in-component swap
    could relocate for free.
    """

    x_comps: list[int]
    y_comps: list[int]
    y_free: list[int]
    z_comps: list[int]
    u_prime: list[int]
    comp_unmatched: list[int]


def classify(scc: SccInfo, m: Matching) -> MatchClass:
    ncomp = scc.n_comps
    mate_dst = m.mate_of_dst
    comp_unmatched = [0] * ncomp
    for v, cid in enumerate(scc.comp_id):
        if mate_dst[v] < 0:
            comp_unmatched[cid] += 1
    x_comps: list[int] = []
    y_comps: list[int] = []
    y_free: list[int] = []
    z_comps: list[int] = []
    one_free = bytearray(ncomp)
    for c in range(ncomp):
        if scc.is_source[c]:
            k = comp_unmatched[c]
            if k == 0:
                x_comps.append(c)
            elif k == 1:
                y_comps.append(c)
                one_free[c] = 1
                y_free.append(next(v for v in scc.comps[c] if mate_dst[v] < 0))
            else:
                z_comps.append(c)
        else:
            z_comps.append(c)
    u_prime = [
        v for v in range(m.n) if mate_dst[v] < 0 and not one_free[scc.comp_id[v]]
    ]
    return MatchClass(x_comps, y_comps, y_free, z_comps, u_prime, comp_unmatched)


def cost(scc: SccInfo, m: Matching) -> int:
    """Unmatched vertex count plus fully matched source component count."""
    unmatched_in = [0] * scc.n_comps
    for v, u in enumerate(m.mate_of_dst):
        if u < 0:
            unmatched_in[scc.comp_id[v]] += 1
    full = sum(1 for c in scc.source_ids if unmatched_in[c] == 0)
    return (m.n - m.size) + full
