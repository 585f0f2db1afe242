"""Sparse directed graphs over dense integer ids, with SCC machinery.

The influence graph of a linear system ``xdot = A x`` has one vertex per
state variable and an edge ``i -> j`` whenever entry ``A[j][i]`` is
nonzero, i.e. whenever variable ``i`` appears in the equation for
variable ``j``.  Note the transposition: matrix entries are (row, col)
pairs while edges run from the influencing column to the influenced row.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import IndexOutOfRange


class SparseDigraph:
    """Immutable directed graph on vertices ``0 .. n-1``.

    Parallel edges are collapsed; self loops are kept.  Adjacency is
    stored both ways (``out_adj`` and ``in_adj``) as sorted lists, which
    makes every traversal in the package deterministic.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Directed edges ``(u, v)`` meaning ``u -> v``.
    """

    __slots__ = ("n", "m", "out_adj", "in_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise IndexOutOfRange(f"vertex count must be nonnegative, got {n}")
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside vertex range [0, {n})")
            out_adj[u].append(v)
        m = 0
        for u in range(n):
            nbrs = sorted(set(out_adj[u]))
            out_adj[u] = nbrs
            m += len(nbrs)
            for v in nbrs:
                in_adj[v].append(u)
        # in_adj ends up sorted because sources are visited in ascending order
        self.n = n
        self.m = m
        self.out_adj = out_adj
        self.in_adj = in_adj

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges in ascending (source, destination) order."""
        for u in range(self.n):
            for v in self.out_adj[u]:
                yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.out_adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseDigraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __repr__(self) -> str:
        return f"SparseDigraph(n={self.n}, m={self.m})"


def build_graph(n: int, nonzero_entries: Iterable[tuple[int, int]]) -> SparseDigraph:
    """Build the influence graph from the nonzero pattern of ``A``.

    Each entry is a 0-based ``(row, col)`` position; entry ``(j, i)``
    contributes the edge ``i -> j``.
    """
    return SparseDigraph(n, ((c, r) for r, c in nonzero_entries))


def isolated_vertices(g: SparseDigraph) -> list[int]:
    """Vertices with no incident edges at all (a self loop counts as incident)."""
    return [v for v in range(g.n) if not g.out_adj[v] and not g.in_adj[v]]


def induced_subgraph(g: SparseDigraph, keep: list[int]) -> tuple[SparseDigraph, list[int]]:
    """Induced subgraph on ``keep``, plus the new-id -> old-id table.

    ``keep`` must be sorted and duplicate-free; new ids follow its order.
    """
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for u in keep
        for v in g.out_adj[u]
        if v in remap
    ]
    return SparseDigraph(len(keep), edges), list(keep)


@dataclass
class SccInfo:
    """Strongly connected components of a digraph.

    Attributes
    ----------
    comp_id : list[int]
        Component index per vertex.
    comps : list[list[int]]
        Members of each component, sorted ascending.
    is_source : list[bool]
        True for components with no incoming edge from another component.
    source_ids : list[int]
        Indices of source components, ascending.
    """

    comp_id: list[int]
    comps: list[list[int]]
    is_source: list[bool]
    source_ids: list[int]

    @property
    def n_comps(self) -> int:
        return len(self.comps)


def scc_decompose(g: SparseDigraph) -> SccInfo:
    """Tarjan's algorithm, iterative so deep graphs cannot overflow the stack."""
    n = g.n
    out = g.out_adj
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    comp_id = [-1] * n
    comps: list[list[int]] = []
    tarjan_stack: list[int] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                tarjan_stack.append(v)
                on_stack[v] = 1
            descended = False
            nbrs = out[v]
            while ptr < len(nbrs):
                w = nbrs[ptr]
                ptr += 1
                if index[w] < 0:
                    work[-1] = (v, ptr)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                members = []
                while True:
                    w = tarjan_stack.pop()
                    on_stack[w] = 0
                    comp_id[w] = len(comps)
                    members.append(w)
                    if w == v:
                        break
                members.sort()
                comps.append(members)
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    is_source = [True] * len(comps)
    for u in range(n):
        cu = comp_id[u]
        for v in out[u]:
            cv = comp_id[v]
            if cv != cu:
                is_source[cv] = False
    source_ids = [c for c, flag in enumerate(is_source) if flag]
    return SccInfo(comp_id, comps, is_source, source_ids)


def reachable_from(g: SparseDigraph, seeds: Iterable[int]) -> set[int]:
    """All vertices reachable from ``seeds`` (seeds included)."""
    seen = bytearray(g.n)
    queue: deque[int] = deque()
    for s in seeds:
        if not (0 <= s < g.n):
            raise IndexOutOfRange(f"seed vertex {s} outside [0, {g.n})")
        if not seen[s]:
            seen[s] = 1
            queue.append(s)
    out = g.out_adj
    while queue:
        u = queue.popleft()
        for v in out[u]:
            if not seen[v]:
                seen[v] = 1
                queue.append(v)
    return {v for v in range(g.n) if seen[v]}
