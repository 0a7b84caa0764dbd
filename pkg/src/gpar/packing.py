"""Maximum number of vertex-disjoint cycles of length >= 2 in a multigraph.

A pair of parallel edges is a 2-cycle; loops never count. Exact
branch-and-bound: the lowest usable vertex is either left out or placed on an
induced cycle through it (any packed cycle can be shrunk to an induced one on
a subset of its vertices, so nothing is lost).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .errors import SearchBudgetExceeded
from .multigraph import Multigraph

DEFAULT_NODE_BUDGET = 10**7


def default_budget() -> int:
    return int(os.environ.get("GPAR_NODE_BUDGET", DEFAULT_NODE_BUDGET))


@dataclass(frozen=True)
class Packing:
    M: int
    cycles: tuple[tuple[int, ...], ...]  # edge ids per cycle
    vertex_cycles: tuple[tuple[int, ...], ...]  # vertex sequence per cycle
    nodes: int = 0

    def to_dict(self) -> dict:
        return {"M": self.M, "cycles": [list(c) for c in self.cycles]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _adjacency(G: Multigraph) -> list[dict[int, list[int]]]:
    """adj[x][y] = sorted edge ids joining x and y (no loops)."""
    adj: list[dict[int, list[int]]] = [dict() for _ in range(G.vertex_count)]
    for e, (a, b) in enumerate(G.edges):
        if a == b:
            continue
        adj[a].setdefault(b, []).append(e)
        adj[b].setdefault(a, []).append(e)
    return adj


def _core(adj, usable: int) -> int:
    """Strip vertices that cannot lie on a cycle inside ``usable`` (2-core)."""
    changed = True
    while changed:
        changed = False
        x_bits = usable
        while x_bits:
            low = x_bits & -x_bits
            x = low.bit_length() - 1
            x_bits ^= low
            deg = 0
            for y, es in adj[x].items():
                if usable >> y & 1:
                    deg += len(es)
                    if deg >= 2:
                        break
            if deg < 2:
                usable &= ~low
                changed = True
    return usable


def _induced_cycles_through(adj, v: int, usable: int):
    """Induced cycles (vertex lists starting at v) inside ``usable``, shortest first."""
    out = []
    for y, es in adj[v].items():
        if usable >> y & 1 and len(es) >= 2 and y > v:
            out.append([v, y])
    # simple-graph induced cycles of length >= 3: paths v=p0..pt with no chords,
    # no parallel pairs, closing back to v
    nbrs = [y for y in sorted(adj[v]) if usable >> y & 1 and len(adj[v][y]) == 1]

    def extend(path: list[int], inpath: int):
        last = path[-1]
        for z in sorted(adj[last]):
            if not usable >> z & 1 or inpath >> z & 1:
                continue
            if len(adj[last][z]) > 1:
                continue
            # z must not touch interior path vertices (other than last); v only allowed
            # as the closing neighbour
            bad = False
            for w in path[1:-1]:
                if z in adj[w]:
                    bad = True
                    break
            if bad:
                continue
            if z in adj[v]:
                if len(adj[v][z]) == 1 and len(path) >= 2 and z > path[1]:
                    out.append(path + [z])
                continue
            extend(path + [z], inpath | (1 << z))

    for y in nbrs:
        extend([v, y], (1 << v) | (1 << y))
    out.sort(key=lambda c: (len(c), c))
    return out


def max_disjoint_cycles(G: Multigraph, node_budget: int | None = None) -> Packing:
    """Exact M(G) with a certificate of pairwise vertex-disjoint cycles."""
    if node_budget is None:
        node_budget = default_budget()
    adj = _adjacency(G)
    best_count = -1
    best: list[list[int]] = []
    nodes = 0

    def search(usable: int, chosen: list[list[int]]):
        nonlocal best_count, best, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded("cycle packing", nodes, lower=max(best_count, 0))
        usable = _core(adj, usable)
        k = len(chosen)
        if k > best_count:
            best_count, best = k, [c[:] for c in chosen]
        if not usable:
            return
        # two vertices per cycle at best
        if k + usable.bit_count() // 2 <= best_count:
            return
        v = (usable & -usable).bit_length() - 1
        for cyc in _induced_cycles_through(adj, v, usable):
            mask = 0
            for x in cyc:
                mask |= 1 << x
            chosen.append(cyc)
            search(usable & ~mask, chosen)
            chosen.pop()
        search(usable & ~(1 << v), chosen)

    search((1 << G.vertex_count) - 1, [])
    edge_cycles = tuple(_cycle_edges(adj, c) for c in best)
    return Packing(best_count, edge_cycles, tuple(tuple(c) for c in best), nodes)


def _cycle_edges(adj, cyc: list[int]) -> tuple[int, ...]:
    if len(cyc) == 2:
        a, b = cyc
        return tuple(adj[a][b][:2])
    return tuple(adj[a][b][0] for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def verify_packing(G: Multigraph, packing: Packing) -> bool:
    """Independent check: each entry is a cycle of length >= 2, all vertex-disjoint."""
    seen: set[int] = set()
    for es in packing.cycles:
        if len(es) < 2 or len(set(es)) != len(es):
            return False
        deg: dict[int, int] = {}
        for e in es:
            a, b = G.edges[e]
            if a == b:
                return False
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(c != 2 for c in deg.values()) or len(deg) != len(es):
            return False
        # connected
        verts = set(deg)
        start = next(iter(verts))
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for e in es:
                a, b = G.edges[e]
                if x in (a, b):
                    y = b if a == x else a
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
        if comp != verts or verts & seen:
            return False
        seen |= verts
    return len(packing.cycles) == packing.M
