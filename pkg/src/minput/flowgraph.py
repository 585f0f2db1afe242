"""Auxiliary flow graph whose s -> t paths are cost-reducing augmentations.

Construction, for a matching M on the splitting of G:

* core nodes are the splitting's source and destination copies; every
  unmatched edge keeps its ``u_src -> v_dst`` direction while every
  matched edge is reversed to ``v_dst -> u_src``;
* a super source ``s`` feeds every source copy with no outgoing matched
  edge;
* for each source SCC with exactly one unmatched member, that member's
  destination copy gains edges to the destination copies of the other
  non-forbidden members (swapping the free vertex inside the component
  is cost neutral);
* for each fully matched source SCC ``X_i`` a gateway node sits between
  ``s`` and the non-forbidden destination copies of ``X_i`` (the
  gateway caps path flow into ``X_i`` at one, since freeing one member
  of ``X_i`` already pays for the component);
* unmatched destination copies outside one-free source components reach
  ``t``: directly when their SCC is not a source, otherwise through a
  family of ``k - 1`` interchangeable slack nodes shared by the ``k``
  unmatched members of their SCC (the component must keep at least one
  unmatched member, so only ``k - 1`` paths may drain it).

Slack families are complete bipartite and would cost Theta(k^2) edges
if materialised, so the family is stored once and expanded lazily; all
traversals stay O(n + m).  Public accessors (``out_neighbors``,
``explicit_edges``, ``dump``) present the fully materialised view.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Collection

from .graph import SccInfo, SparseDigraph
from .matching import Matching, MatchClass, classify


class FlowGraph:
    """Flow graph for one (graph, SCC, matching) triple.

    Node ids: source copy of vertex ``u`` is ``u``; destination copy of
    ``v`` is ``n + v``; ``s`` is ``2n``, ``t`` is ``2n + 1``; gateways
    occupy ``2n + 2 .. 2n + 1 + r``; materialised slack nodes follow
    from ``aux_base = 2n + 2 + r`` onwards, grouped by family.
    """

    def __init__(
        self,
        g: SparseDigraph,
        scc: SccInfo,
        m: Matching,
        forbidden: Collection[int],
        cls: MatchClass | None = None,
    ):
        if cls is None:
            cls = classify(scc, m)
        n = g.n
        forb = frozenset(forbidden)
        mate_src = m.mate_of_src
        mate_dst = m.mate_of_dst
        r = len(cls.x_comps)
        s_id = 2 * n
        t_id = 2 * n + 1
        aux_base = 2 * n + 2 + r
        work = 0

        adj: list[list[int]] = [[] for _ in range(aux_base)]
        for u in range(n):
            adj[u] = [n + v for v in g.out_adj[u] if v != mate_src[u]]
            work += len(g.out_adj[u]) + 1
        for v in range(n):
            w = mate_dst[v]
            if w >= 0:
                adj[n + v] = [w]
            work += 1

        y_in_node = [-1] * aux_base
        for c, yfree in zip(cls.y_comps, cls.y_free):
            targets = [n + v for v in scc.comps[c] if v != yfree and v not in forb]
            adj[n + yfree] = targets
            for x in targets:
                y_in_node[x] = n + yfree
            work += len(scc.comps[c])

        gate_in_node = [-1] * aux_base
        for i, c in enumerate(cls.x_comps):
            targets = [n + v for v in scc.comps[c] if v not in forb]
            adj[s_id + 2 + i] = targets
            for x in targets:
                gate_in_node[x] = s_id + 2 + i
            work += len(scc.comps[c])

        family_of_node = [-1] * aux_base
        fam_comp: list[int] = []
        fam_members: list[list[int]] = []
        fam_cap: list[int] = []
        for c in scc.source_ids:
            if cls.comp_unmatched[c] < 2:
                continue
            members = [n + v for v in scc.comps[c] if mate_dst[v] < 0]
            f = len(fam_comp)
            for x in members:
                family_of_node[x] = f
            fam_comp.append(c)
            fam_members.append(members)
            fam_cap.append(len(members) - 1)
            work += len(scc.comps[c])

        t_in_direct: list[int] = []
        for v in cls.u_prime:
            if not scc.is_source[scc.comp_id[v]]:
                adj[n + v].append(t_id)
                t_in_direct.append(n + v)
        work += len(cls.u_prime)

        adj[s_id] = [u for u in range(n) if mate_src[u] < 0]
        adj[s_id].extend(range(s_id + 2, aux_base))
        work += n + r

        slack_offset = [0]
        for cap in fam_cap:
            slack_offset.append(slack_offset[-1] + cap)

        self.graph = g
        self.scc = scc
        self.matching = m
        self.cls = cls
        self.forbidden = forb
        self.n = n
        self.r = r
        self.s_id = s_id
        self.t_id = t_id
        self.aux_base = aux_base
        self.adj = adj
        self.family_of_node = family_of_node
        self.fam_comp = fam_comp
        self.fam_members = fam_members
        self.fam_cap = fam_cap
        self.n_families = len(fam_comp)
        self.slack_offset = slack_offset
        self.t_in_direct = t_in_direct
        self.y_in_node = y_in_node
        self.gate_in_node = gate_in_node
        self.build_work = work

    def node_count(self) -> int:
        """Total nodes in the materialised view; at most 3n + 2."""
        return self.aux_base + self.slack_offset[-1]

    def slack_ids(self, f: int) -> range:
        base = self.aux_base + self.slack_offset[f]
        return range(base, base + self.fam_cap[f])

    def _slack_family(self, x: int) -> tuple[int, int]:
        """(family, slot) of a materialised slack node id."""
        rel = x - self.aux_base
        f = bisect_right(self.slack_offset, rel) - 1
        return f, rel - self.slack_offset[f]

    def out_neighbors(self, x: int) -> list[int]:
        """Neighbours of ``x`` in the materialised view."""
        if x >= self.aux_base:
            return [self.t_id]
        nbrs = list(self.adj[x])
        f = self.family_of_node[x]
        if f >= 0:
            nbrs.extend(self.slack_ids(f))
        return nbrs

    def in_neighbors(self, x: int) -> list[int]:
        if x >= self.aux_base:
            f, _ = self._slack_family(x)
            return list(self.fam_members[f])
        if x == self.t_id:
            res = list(self.t_in_direct)
            for f in range(self.n_families):
                res.extend(self.slack_ids(f))
            return res
        if x == self.s_id:
            return []
        if x >= self.s_id + 2:  # gateway
            return [self.s_id]
        n = self.n
        if x >= n:  # destination copy
            v = x - n
            matched_to = self.matching.mate_of_dst[v]
            res = [u for u in self.graph.in_adj[v] if u != matched_to]
            if self.y_in_node[x] >= 0:
                res.append(self.y_in_node[x])
            if self.gate_in_node[x] >= 0:
                res.append(self.gate_in_node[x])
            return res
        v = self.matching.mate_of_src[x]
        return [self.s_id] if v < 0 else [n + v]

    def explicit_edges(self) -> list[tuple[int, int]]:
        """Every edge of the materialised view, slack families expanded."""
        edges = []
        for x in range(self.aux_base):
            for y in self.out_neighbors(x):
                edges.append((x, y))
        for x in range(self.aux_base, self.node_count()):
            edges.append((x, self.t_id))
        return edges

    def node_name(self, x: int, labels: list[str] | None = None) -> str:
        n = self.n
        if x < n:
            return f"{labels[x] if labels else x}.src"
        if x < 2 * n:
            v = x - n
            return f"{labels[v] if labels else v}.dst"
        if x == self.s_id:
            return "s"
        if x == self.t_id:
            return "t"
        if x < self.aux_base:
            return f"gate{x - self.s_id - 1}"
        f, j = self._slack_family(x)
        return f"slack{f + 1}.{j + 1}"

    def node_names(self, labels: list[str] | None = None) -> list[str]:
        return [self.node_name(x, labels) for x in range(self.node_count())]

    def dump(self, labels: list[str] | None = None) -> str:
        """Edge list of the materialised view, one ``a -> b`` line, sorted."""
        lines = sorted(
            f"{self.node_name(x, labels)} -> {self.node_name(y, labels)}"
            for x, y in self.explicit_edges()
        )
        return "\n".join(lines)


def build_flow_graph(
    g: SparseDigraph,
    scc: SccInfo,
    m: Matching,
    forbidden: Collection[int],
    cls: MatchClass | None = None,
) -> FlowGraph:
    return FlowGraph(g, scc, m, forbidden, cls)
