"""Copies of C_d in a host graph: exhaustive enumeration and hand-written catalogs.

A copy is identified by its edge-id set. ``enumerate_cycles`` finds every
d-cycle by rooted DFS; ``catalog_cycles`` writes down the explicit families
used for each (n, k, d) case, so the two can be checked against each other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, NoCatalog, UnsupportedLength
from .multigraph import Multigraph, incident_edges
from .petersen import PetersenParams, generate


@dataclass(frozen=True)
class Copy:
    index: int
    edge_ids: frozenset[int]
    label: str = "enum"

    def sorted_edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_ids))


@dataclass(frozen=True)
class CopySet:
    d: int
    copies: tuple[Copy, ...]
    host_edge_count: int

    def __post_init__(self):
        seen = set()
        for i, c in enumerate(self.copies):
            if c.index != i:
                raise InputError(f"copy indices must be dense, got {c.index} at {i}")
            if len(c.edge_ids) != self.d:
                raise InputError(f"copy {c.label} has {len(c.edge_ids)} edges, "
                                 f"expected {self.d}")
            if c.edge_ids in seen:
                raise InputError(f"duplicate copy {c.label}")
            if any(not 0 <= e < self.host_edge_count for e in c.edge_ids):
                raise InputError(f"copy {c.label} references an unknown edge")
            seen.add(c.edge_ids)

    def __len__(self) -> int:
        return len(self.copies)

    def __iter__(self):
        return iter(self.copies)

    def __getitem__(self, i: int) -> Copy:
        return self.copies[i]

    def edge_sets(self) -> set[frozenset[int]]:
        return {c.edge_ids for c in self.copies}

    def labels(self) -> list[str]:
        return [c.label for c in self.copies]

    @classmethod
    def build(cls, d: int, edge_sets: Iterable[Iterable[int]], host_edge_count: int,
              labels: Sequence[str] | None = None) -> "CopySet":
        sets = [frozenset(s) for s in edge_sets]
        if labels is None:
            labels = ["enum"] * len(sets)
        return cls(d, tuple(Copy(i, s, lab) for i, (s, lab) in enumerate(zip(sets, labels))),
                   host_edge_count)

    def remap(self, id_map: dict[int, int], host_edge_count: int) -> "CopySet":
        """Translate edge ids after ``delete_edges`` (copies must survive intact)."""
        out = []
        for c in self.copies:
            try:
                out.append(frozenset(id_map[e] for e in c.edge_ids))
            except KeyError as exc:
                raise InputError(f"copy {c.label} uses deleted edge {exc.args[0]}") from None
        return CopySet.build(self.d, out, host_edge_count, self.labels())

    def validate_against(self, G: Multigraph) -> None:
        """Check each copy is a single d-cycle of G."""
        for c in self.copies:
            if not _is_single_cycle(G, c.edge_ids):
                raise InputError(f"copy {c.label} is not a cycle of the host")

    def to_dict(self) -> dict:
        return {"d": self.d,
                "copies": [{"label": c.label, "edges": list(c.sorted_edges())}
                           for c in self.copies]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict, host_edge_count: int) -> "CopySet":
        return cls.build(data["d"], [c["edges"] for c in data["copies"]],
                         host_edge_count, [c["label"] for c in data["copies"]])


def _is_single_cycle(G: Multigraph, edge_ids: frozenset[int]) -> bool:
    deg: dict[int, int] = {}
    for e in edge_ids:
        a, b = G.edges[e]
        if a == b:
            return False
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if any(x != 2 for x in deg.values()) or len(deg) != len(edge_ids):
        return False
    # connected?
    start = next(iter(deg))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for e in G._incidence[x]:
            if e in edge_ids:
                y = G.other_end(e, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == len(deg)


def enumerate_cycles(G: Multigraph, d: int) -> CopySet:
    """Every cycle of length d in G, sorted by edge-id tuple.

    Each cycle is found from its smallest vertex; walks are tracked by edge id
    so parallel edges yield distinct cycles.
    """
    if d < 3:
        raise InputError(f"cycle length must be at least 3, got d={d}")
    found: set[tuple[int, ...]] = set()

    def dfs(root: int, x: int, depth: int, used_v: set[int], used_e: list[int]):
        for e in G._incidence[x]:
            y = G.other_end(e, x)
            if y == x or y < root:
                continue
            if y == root:
                if depth == d and e not in used_e:
                    found.add(tuple(sorted(used_e + [e])))
                continue
            if depth < d and y not in used_v:
                used_v.add(y)
                used_e.append(e)
                dfs(root, y, depth + 1, used_v, used_e)
                used_e.pop()
                used_v.discard(y)

    for root in range(G.vertex_count):
        dfs(root, root, 1, {root}, [])
    return CopySet.build(d, sorted(found), G.edge_count)


def dead_edges(G: Multigraph, psi: CopySet) -> frozenset[int]:
    """Host edges contained in no copy."""
    live = set().union(*psi.edge_sets()) if len(psi) else set()
    return frozenset(e for e in range(G.edge_count) if e not in live)


# ---------------------------------------------------------------------------
# hand-written catalogs
# ---------------------------------------------------------------------------

def _walk(p: PetersenParams, G: Multigraph, seq: str) -> frozenset[int]:
    """Edge ids along a closed walk written like ``"u0 u1 v1 v3 v0"``."""
    verts = []
    for tok in seq.split():
        side, idx = tok[0], int(tok[1:])
        verts.append(p.u(idx) if side == "u" else p.v(idx))
    out = []
    for a, b in zip(verts, verts[1:] + verts[:1]):
        shared = [e for e in incident_edges(G, a) if G.other_end(e, a) == b]
        if not shared:
            raise InputError(f"catalog walk {seq!r} uses a non-edge "
                             f"{G.vertex_name(a)}{G.vertex_name(b)}")
        out.append(shared[0])
    return frozenset(out)


def catalog_families(p: PetersenParams, d: int) -> list[tuple[str, list[str]]]:
    """The (family name, closed walks) lists of the hand-written catalog for (n, k, d)."""
    n, k = p.n, p.k

    def fam(name, template, count):
        return (name, [" ".join(template(i)) for i in range(count)])

    def one(name, tokens):
        return (name, [" ".join(tokens)])

    def U(i):
        return f"u{i % n}"

    def V(i):
        return f"v{i % n}"

    outer_rim = [U(i) for i in range(n)]

    if d == 5:
        if (n, k) == (3, 1):
            return [fam("G1", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 2), U(i + 2)], 3),
                    fam("G2", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 2), V(i)], 3)]
        if (n, k) == (5, 1):
            return [one("G1", outer_rim), one("G2", [V(i) for i in range(5)])]
        if (n, k) == (5, 2):
            return [fam("G1", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 3), V(i)], 5),
                    fam("G2", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i)], 5),
                    one("G3", outer_rim),
                    one("G4", [V(0), V(2), V(4), V(1), V(3)])]
        if (n, k) == (10, 2):
            return [fam("G1", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i)], 10),
                    one("G2", [V(0), V(2), V(4), V(6), V(8)]),
                    one("G3", [V(1), V(3), V(5), V(7), V(9)])]
        if k == 2 and n >= 6:
            return [fam("G", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i)], n)]
        if k >= 3 and (n == 5 * k or 2 * n == 5 * k):
            return [fam("G", lambda i: [V(i + j * k) for j in range(5)], n // 5)]
        if k >= 3 and n == 2 * k + 1:
            return [fam("G", lambda i: [U(i), U(i + 1), V(i + 1), V(i + (n + 1) // 2), V(i)], n)]
    elif d == 6:
        if k == 1:
            if n == 3:
                return [fam("G", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i + 1), V(i)], 3)]
            if n == 4:
                return [fam("G1", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 2), V(i + 3), V(i)], 4),
                        fam("G2", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i + 1), V(i)], 4),
                        fam("G3", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i + 3), V(i)], 4),
                        fam("G4", lambda i: [U(i), U(i + 1), U(i + 2), U(i + 3), V(i + 3), V(i)], 4)]
            if n == 6:
                return [fam("G1", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i + 1), V(i)], 6),
                        one("G2", outer_rim),
                        one("G3", [V(i) for i in range(6)])]
            return [fam("G", lambda i: [U(i), U(i + 1), U(i + 2), V(i + 2), V(i + 1), V(i)], n)]
        if k == 2:
            if n == 5:
                return [fam("G1", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 4), V(i + 2), V(i)], 5),
                        fam("G2", lambda i: [U(i), U(i + 1), U(i + 2), U(i + 3), V(i + 3), V(i)], 5)]
            if n == 6:
                return [fam("G1", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 3), V(i + 5), U(i + 5)], 6),
                        one("G2", outer_rim)]
            if n == 7:
                return [fam("G", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 3), V(i + 5), V(i)], 7)]
            if n == 12:
                return [fam("G", lambda i: [V(i + 2 * j) for j in range(6)], 2)]
        if k == 3:
            g1 = lambda i: [U(i), U(i + 1), U(i + 2), U(i + 3), V(i + 3), V(i)]  # noqa: E731
            if n == 8:
                return [fam("G1", g1, 8),
                        fam("G2", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 4), V(i + 7), U(i + 7)], 8),
                        fam("G3", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 6), V(i + 3), V(i)], 8)]
            if n == 10:
                return [fam("G1", g1, 10),
                        fam("G2", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 4), V(i + 7), V(i)], 10)]
            if n == 18:
                return [fam("G1", g1, 18),
                        fam("G2", lambda j: [V(j + 3 * t) for t in range(6)], 3)]
            if n >= 7:
                return [fam("G", g1, n)]
        if k >= 4:
            if n == 6 * k:
                return [fam("G", lambda i: [V(i + j * k) for j in range(6)], n // 6)]
            if 3 * k == n - 1:
                return [fam("G", lambda i: [U(i), U(i + 1), V(i + 1), V(i + 1 + k), V(i + 1 + 2 * k), V(i)], n)]
            if 3 * k == n + 1:
                return [fam("G", lambda i: [U(i), V(i), V(i + k), V(i + 2 * k), V(i + 1), U(i + 1)], n)]
            if 2 * k == n - 2:
                return [fam("G", lambda i: [U(i), U(i + 1), V(i + 1), V(i + n // 2), V(i + n - 1), U(i + n - 1)], n)]
    else:
        raise UnsupportedLength(f"only C5 and C6 are supported, got d={d}")
    raise NoCatalog(f"no hand-written catalog for P({n},{k}) and C{d}")


def catalog_cycles(p: PetersenParams, d: int) -> CopySet:
    """The explicit catalogued copy family for (n, k, d), labelled like ``G2[3]``."""
    G = generate(p)
    sets, labels = [], []
    for name, walks in catalog_families(p, d):
        for i, w in enumerate(walks):
            sets.append(_walk(p, G, w))
            labels.append(f"{name}[{i}]" if len(walks) > 1 else name)
    psi = CopySet.build(d, sets, G.edge_count, labels)
    psi.validate_against(G)
    return psi


def has_catalog(p: PetersenParams, d: int) -> bool:
    try:
        catalog_families(p, d)
    except NoCatalog:
        return False
    return True


def copies_for(p: PetersenParams, d: int, source: str = "enum") -> CopySet:
    """Copy family by enumeration (``"enum"``) or from the hand-written catalog."""
    if source == "catalog":
        return catalog_cycles(p, d)
    if source != "enum":
        raise InputError(f"unknown copy source {source!r}")
    if d not in (5, 6):
        raise UnsupportedLength(f"only C5 and C6 are supported, got d={d}")
    return enumerate_cycles(generate(p), d)
