"""Undirected multigraph with dense, stable edge ids.

Loops and parallel edges are kept as given. Everything downstream (copies,
hyperedges, colorings) refers to edges by id, never by endpoint pair, since
parallel edges are only distinguishable that way.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    vertex_labels: tuple[str, ...] | None = None
    edge_labels: tuple[str, ...] | None = None
    _incidence: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        inc: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for eid, (a, b) in enumerate(edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise InputError(f"edge {eid} = ({a}, {b}) has an endpoint "
                                 f"outside 0..{self.vertex_count - 1}")
            inc[a].add(eid)
            inc[b].add(eid)
        if self.vertex_labels is not None:
            labels = tuple(self.vertex_labels)
            if len(labels) != self.vertex_count:
                raise InputError("one vertex label per vertex required")
            object.__setattr__(self, "vertex_labels", labels)
        if self.edge_labels is not None:
            labels = tuple(self.edge_labels)
            if len(labels) != len(edges):
                raise InputError("one edge label per edge required")
            object.__setattr__(self, "edge_labels", labels)
        object.__setattr__(self, "_incidence", tuple(frozenset(s) for s in inc))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_loop(self, eid: int) -> bool:
        a, b = self.edges[eid]
        return a == b

    def incident_edges(self, v: int) -> frozenset[int]:
        return incident_edges(self, v)

    def degree(self, v: int) -> int:
        """Number of incident edge ends (a loop counts twice)."""
        return sum(2 if self.is_loop(e) else 1 for e in incident_edges(self, v))

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def vertex_name(self, v: int) -> str:
        return self.vertex_labels[v] if self.vertex_labels else str(v)

    def edge_name(self, eid: int) -> str:
        if self.edge_labels:
            return self.edge_labels[eid]
        a, b = self.edges[eid]
        return f"{self.vertex_name(a)}{self.vertex_name(b)}"

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edges": [
                {"id": i, "a": a, "b": b, "label": self.edge_name(i)}
                for i, (a, b) in enumerate(self.edges)
            ],
            "vertex_labels": [self.vertex_name(v) for v in range(self.vertex_count)],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "Multigraph":
        records = sorted(data["edges"], key=lambda r: r["id"])
        if [r["id"] for r in records] != list(range(len(records))):
            raise InputError("edge ids must be exactly 0..m-1")
        labels = [r.get("label") for r in records]
        vlabels = data.get("vertex_labels")
        return cls(
            data["vertex_count"],
            tuple((r["a"], r["b"]) for r in records),
            tuple(vlabels) if vlabels else None,
            tuple(labels) if all(lab is not None for lab in labels) else None,
        )

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertex_count):
            lines.append(f'  {v} [label="{self.vertex_name(v)}"];')
        for i, (a, b) in enumerate(self.edges):
            lines.append(f'  {a} -- {b} [id={i}, label="{self.edge_name(i)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def incident_edges(G: Multigraph, v: int) -> frozenset[int]:
    """Edge ids with ``v`` as an endpoint; a loop at ``v`` appears once."""
    if not 0 <= v < G.vertex_count:
        raise InputError(f"vertex {v} out of range for {G.vertex_count} vertices")
    return G._incidence[v]


def delete_edges(G: Multigraph, drop: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Remove edges by id and re-densify the survivors.

    Returns the new graph and the map old id -> new id for surviving edges.
    """
    drop = set(drop)
    bad = [e for e in drop if not 0 <= e < G.edge_count]
    if bad:
        raise InputError(f"unknown edge id(s): {sorted(bad)}")
    keep = [e for e in range(G.edge_count) if e not in drop]
    id_map = {old: new for new, old in enumerate(keep)}
    labels = tuple(G.edge_labels[e] for e in keep) if G.edge_labels else None
    H = Multigraph(G.vertex_count, tuple(G.edges[e] for e in keep),
                   G.vertex_labels, labels)
    return H, id_map
