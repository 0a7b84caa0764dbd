"""The copy hypergraph: one vertex per copy, one hyperedge per host edge.

Hyperedge j holds the indices of the copies that contain host edge j. The
rank-at-most-2 case is exposed as an ordinary multigraph (size-1 hyperedges
become loops, size-2 hyperedges become edges).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .census import CopySet, dead_edges
from .errors import NoCopies, ReductionRequired, InputError
from .multigraph import Multigraph, delete_edges


class RankTooHigh(NamedTuple):
    """Returned by ``as_multigraph`` when some hyperedge has 3 or more vertices."""

    rank: int


@dataclass(frozen=True)
class CopyHypergraph:
    l: int  # noqa: E741
    hyperedges: tuple[tuple[int, ...], ...]
    psi: CopySet | None = field(default=None, compare=False, repr=False)
    host: Multigraph | None = field(default=None, compare=False, repr=False)
    masks: tuple[int, ...] = field(init=False, compare=False, repr=False)
    incidence: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        hyper = tuple(tuple(sorted(set(F))) for F in self.hyperedges)
        for j, F in enumerate(hyper):
            if not F:
                raise InputError(f"hyperedge {j} is empty")
            if F[0] < 0 or F[-1] >= self.l:
                raise InputError(f"hyperedge {j} has a vertex outside 0..{self.l - 1}")
        object.__setattr__(self, "hyperedges", hyper)
        object.__setattr__(self, "masks", tuple(sum(1 << x for x in F) for F in hyper))
        inc: list[list[int]] = [[] for _ in range(self.l)]
        for j, F in enumerate(hyper):
            for x in F:
                inc[x].append(j)
        object.__setattr__(self, "incidence", tuple(tuple(s) for s in inc))

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def edges_at(self, x: int) -> tuple[int, ...]:
        """Hyperedges containing vertex x (the host edges of copy x)."""
        return self.incidence[x]

    def to_dict(self) -> dict:
        return {"l": self.l, "hyperedges": [list(F) for F in self.hyperedges]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "CopyHypergraph":
        return cls(data["l"], tuple(tuple(F) for F in data["hyperedges"]))

    @classmethod
    def from_sets(cls, l: int, hyperedges: Sequence[Sequence[int]]) -> "CopyHypergraph":  # noqa: E741
        return cls(l, tuple(tuple(F) for F in hyperedges))


def build(G: Multigraph, psi: CopySet) -> CopyHypergraph:
    """Construct the copy hypergraph; every host edge must lie in some copy."""
    if len(psi) == 0:
        raise NoCopies(G.edge_count)
    if psi.host_edge_count != G.edge_count:
        raise InputError("copy set was built for a different host")
    dead = dead_edges(G, psi)
    if dead:
        raise ReductionRequired(dead)
    hyper: list[list[int]] = [[] for _ in range(G.edge_count)]
    for c in psi:
        for e in c.edge_ids:
            hyper[e].append(c.index)
    return CopyHypergraph(len(psi), tuple(tuple(F) for F in hyper), psi, G)


def rank_and_overlap(H: CopyHypergraph) -> tuple[int, int]:
    """Largest hyperedge size and largest intersection of two distinct hyperedges."""
    r = max(len(F) for F in H.hyperedges)
    s = 0
    masks = H.masks
    for i in range(len(masks)):
        a = masks[i]
        for j in range(i + 1, len(masks)):
            c = (a & masks[j]).bit_count()
            if c > s:
                s = c
    return r, s


def as_multigraph(H: CopyHypergraph) -> Multigraph | RankTooHigh:
    """Rank <= 2 hypergraph as a multigraph on the copies, hyperedge j -> edge j."""
    r = max(len(F) for F in H.hyperedges)
    if r > 2:
        return RankTooHigh(r)
    edges = tuple((F[0], F[-1]) for F in H.hyperedges)
    labels = None
    if H.psi is not None:
        labels = tuple(c.label for c in H.psi)
    return Multigraph(H.l, edges, labels)


@dataclass(frozen=True)
class CoreSplit:
    """Host with its copy-free edges removed.

    ``keep[j]`` is the original id of core edge j; ``dead`` are the removed ids.
    """

    graph: Multigraph
    psi: CopySet
    keep: tuple[int, ...]
    dead: frozenset[int]


def split_dead(G: Multigraph, psi: CopySet) -> CoreSplit:
    """Remove edges lying in no copy; Ar(G) = |dead| + Ar(core)."""
    dead = dead_edges(G, psi)
    core, id_map = delete_edges(G, dead)
    keep = tuple(sorted(id_map, key=id_map.get))
    return CoreSplit(core, psi.remap(id_map, core.edge_count), keep, dead)
