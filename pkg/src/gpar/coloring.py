"""Edge colorings: explicit constructions, certificate-derived colorings,
rainbow checks and a brute-force Ar oracle for tiny hosts."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .census import Copy, CopySet, copies_for
from .cover import CoverCertificate, partitions_into
from .errors import InputError
from .hypergraph import build, split_dead
from .multigraph import Multigraph
from .packing import Packing
from .petersen import PetersenParams, generate


@dataclass(frozen=True)
class EdgeColoring:
    """assignment[e] is the color (1..colors) of edge e; every color is used."""

    assignment: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", a)
        if a and set(a) != set(range(1, max(a) + 1)):
            raise InputError("colors must be exactly 1..c with every color used")

    @property
    def colors(self) -> int:
        return max(self.assignment, default=0)

    def __len__(self) -> int:
        return len(self.assignment)

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]], edge_count: int) -> "EdgeColoring":
        """Color class i (in the given order) with color i+1."""
        a = [0] * edge_count
        for color, members in enumerate(classes, start=1):
            for e in members:
                if a[e]:
                    raise InputError(f"edge {e} appears in two classes")
                a[e] = color
        if 0 in a:
            raise InputError(f"edge {a.index(0)} is uncolored")
        return cls(tuple(a))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.colors)]
        for e, c in enumerate(self.assignment):
            out[c - 1].append(e)
        return out

    def renamed(self, perm: Sequence[int]) -> "EdgeColoring":
        """Apply a color permutation given as perm[old - 1] = new."""
        return EdgeColoring(tuple(perm[c - 1] for c in self.assignment))

    def to_dict(self) -> dict:
        return {"colors": self.colors, "assignment": list(self.assignment)}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeColoring":
        col = cls(tuple(data["assignment"]))
        if col.colors != data["colors"]:
            raise InputError("color count does not match the assignment")
        return col


def verify_no_rainbow(G: Multigraph, psi: CopySet, coloring: EdgeColoring) -> Copy | None:
    """None if every copy repeats a color, else the first rainbow copy."""
    if len(coloring) != G.edge_count:
        raise InputError(f"coloring covers {len(coloring)} edges, host has {G.edge_count}")
    a = coloring.assignment
    for c in psi:
        if len({a[e] for e in c.edge_ids}) == len(c.edge_ids):
            return c
    return None


def _with_fresh(special: dict[int, int], edge_count: int) -> EdgeColoring:
    """Keep the given colors and number every other edge in edge-id order."""
    nxt = max(special.values(), default=0) + 1
    a = []
    for e in range(edge_count):
        if e in special:
            a.append(special[e])
        else:
            a.append(nxt)
            nxt += 1
    return EdgeColoring(tuple(a))


# ---------------------------------------------------------------------------
# explicit constructions


def _star(p: PetersenParams, vertex: int) -> list[int]:
    """Edge ids at a vertex of P(n, k), vertex numbering u_i = i, v_i = n + i."""
    n, k = p.n, p.k
    if vertex < n:
        i = vertex
        return [p.outer(i), p.outer(i - 1), p.spoke(i)]
    i = vertex - n
    return [p.spoke(i), p.inner(i), p.inner(i - k)]


def _paint(groups: list[tuple[list[int], int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for edges, color in groups:
        for e in edges:
            out[e] = color
    return out


def _spokes(p):
    return _paint([([p.spoke(i) for i in range(p.n)], 1)])


def _c5_5_2(p):
    u0 = [e for e in _star(p, p.u(0)) if e != p.spoke(0)]
    return _paint([(u0, 1), (_star(p, p.v(2)), 2), (_star(p, p.v(3)), 3)])


def _c6_6_1(p):
    return _paint([(_star(p, p.u(0)), 1), (_star(p, p.v(3)), 2)])


def _c6_6_2(p):
    return _paint([(_star(p, p.u(0)), 1), (_star(p, p.u(3)), 2)])


def _c6_7_2(p):
    return _paint([(_star(p, p.v(3)), 1), (_star(p, p.v(4)), 2)])


def _c6_10_3(p):
    groups = [(_star(p, p.v(i)), i + 1) for i in range(3)]
    groups.append(([e for e in _star(p, p.u(5)) if e != p.spoke(5)], 4))
    groups.append(([e for e in _star(p, p.u(7)) if e != p.spoke(7)], 5))
    return _paint(groups)


def _c6_18_3(p):
    groups = [([p.outer(2 * i), p.outer(2 * i + 1)], i + 1) for i in range(9)]
    groups += [([p.inner(j), p.inner(j - 3)], j + 10) for j in range(3)]
    return _paint(groups)


def _c6_n_3(p):
    n = p.n
    groups = [([p.outer(2 * i), p.outer(2 * i + 1)], i + 1) for i in range(n // 2)]
    if n % 2:
        groups.append(([p.outer(n - 1)], n // 2))
    return _paint(groups)


def _c6_third(p):
    n, k = p.n, p.k

    def inner_step(i):  # v_{ik} v_{(i+1)k}
        return p.inner(i * k)

    if n % 2:
        groups = [([inner_step(0), inner_step(1), inner_step(2)], 1)]
        groups += [([inner_step(i)], -(-i // 2)) for i in range(3, n)]
    else:
        groups = [([inner_step(i)], i // 2 + 1) for i in range(n)]
    return _paint(groups)


@dataclass(frozen=True)
class Construction:
    d: int
    allowed: Callable[[int, int], bool]
    range_text: str
    colors: Callable[[int, int], int]
    special: Callable[[PetersenParams], dict[int, int]]


def _only(n0, k0):
    return lambda n, k: (n, k) == (n0, k0)


CONSTRUCTIONS: dict[str, Construction] = {
    "3.1": Construction(5, _only(3, 1), "(n, k) = (3, 1)", lambda n, k: 7, _spokes),
    "3.3": Construction(5, _only(5, 2), "(n, k) = (5, 2)", lambda n, k: 10, _c5_5_2),
    "3.9": Construction(6, _only(4, 1), "(n, k) = (4, 1)", lambda n, k: 9, _spokes),
    "3.10": Construction(6, _only(6, 1), "(n, k) = (6, 1)", lambda n, k: 14, _c6_6_1),
    "3.12": Construction(6, _only(5, 2), "(n, k) = (5, 2)", lambda n, k: 11, _spokes),
    "3.13": Construction(6, _only(6, 2), "(n, k) = (6, 2)", lambda n, k: 14, _c6_6_2),
    "3.14": Construction(6, _only(7, 2), "(n, k) = (7, 2)", lambda n, k: 17, _c6_7_2),
    "3.15": Construction(6, _only(8, 3), "(n, k) = (8, 3)", lambda n, k: 17, _spokes),
    "3.16": Construction(6, _only(10, 3), "(n, k) = (10, 3)", lambda n, k: 22, _c6_10_3),
    "3.17": Construction(6, _only(18, 3), "(n, k) = (18, 3)", lambda n, k: 42, _c6_18_3),
    "3.18": Construction(
        6, lambda n, k: k == 3 and n >= 7 and n not in (8, 10, 18),
        "k = 3, n >= 7, n not in {8, 10, 18}", lambda n, k: 5 * n // 2, _c6_n_3),
    "3.20": Construction(
        6, lambda n, k: k >= 4 and 3 * k in (n - 1, n + 1),
        "k >= 4 and k in {(n-1)/3, (n+1)/3}", lambda n, k: 5 * n // 2, _c6_third),
}


def construction(lemma_id: str, n: int, k: int) -> EdgeColoring:
    """The explicit lower-bound coloring registered under lemma_id for P(n, k)."""
    try:
        spec = CONSTRUCTIONS[str(lemma_id)]
    except KeyError:
        raise InputError(f"unknown construction {lemma_id!r}; "
                         f"known: {', '.join(CONSTRUCTIONS)}") from None
    if not spec.allowed(n, k):
        raise InputError(f"construction {lemma_id} needs {spec.range_text}, got ({n}, {k})")
    p = PetersenParams(n, k)
    return _with_fresh(spec.special(p), p.edge_count)


def check_construction(lemma_id: str, n: int, k: int) -> tuple[EdgeColoring, Copy | None]:
    """Build a construction and look for a rainbow copy in the full census."""
    col = construction(lemma_id, n, k)
    p = PetersenParams(n, k)
    d = CONSTRUCTIONS[str(lemma_id)].d
    return col, verify_no_rainbow(generate(p), copies_for(p, d), col)


# ---------------------------------------------------------------------------
# colorings from search certificates


def coloring_from_cover(G: Multigraph, psi: CopySet,
                        certificate: CoverCertificate | Packing) -> EdgeColoring:
    """Monochromatic partition classes, fresh colors elsewhere.

    Certificates refer to the core host (copy-free edges removed, ids
    re-densified); copy-free edges get their own colors.
    """
    split = split_dead(G, psi)
    m = split.graph.edge_count
    if isinstance(certificate, Packing):
        classes = _classes_from_packing(split, certificate)
    else:
        if not certificate.complete:
            raise InputError("certificate does not cover every copy")
        if certificate.partition.m != m:
            raise InputError(f"certificate has {certificate.partition.m} hyperedges, "
                             f"core host has {m} edges")
        classes = [list(c) for c in certificate.partition.classes]
    # core edge j is host edge keep[j]
    host_classes = [[split.keep[j] for j in c] for c in classes]
    host_classes += [[e] for e in sorted(split.dead)]
    host_classes.sort(key=min)
    return EdgeColoring.from_classes(host_classes, G.edge_count)


def _classes_from_packing(split, packing: Packing) -> list[list[int]]:
    """Each packed cycle becomes one class; every other copy joins two of its edges."""
    H = build(split.graph, split.psi)
    if max(len(F) for F in H.hyperedges) > 2:
        raise InputError("a packing certificate needs a rank <= 2 hypergraph")
    parent = list(range(H.m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    on_cycle: set[int] = set()
    for cyc in packing.cycles:
        for j in cyc:
            on_cycle.update(H.hyperedges[j])
        for a, b in zip(cyc, cyc[1:]):
            parent[find(a)] = find(b)
    for x in range(H.l):
        if x in on_cycle:
            continue
        E = H.edges_at(x)
        if len(E) < 2:
            raise InputError(f"copy {x} meets fewer than two edges")
        roots = {find(j) for j in E}
        if len(roots) == len(E):
            parent[find(E[0])] = find(E[1])
    groups: dict[int, list[int]] = {}
    for j in range(H.m):
        groups.setdefault(find(j), []).append(j)
    return list(groups.values())


# ---------------------------------------------------------------------------
# brute force


def brute_force_ar(G: Multigraph, psi: CopySet, max_m: int = 12) -> int:
    """Ar straight from the definition: try c = m, m-1, ... colors.

    Colorings are enumerated up to renaming, i.e. as set partitions of the
    edge ids into exactly c classes.
    """
    m = G.edge_count
    if m > max_m:
        raise InputError(f"brute force is limited to {max_m} edges, host has {m}")
    copies = [tuple(c.edge_ids) for c in psi]
    if not copies:
        return m
    for c in range(m, 0, -1):
        for parts in partitions_into(list(range(m)), c):
            a = [0] * m
            for color, block in enumerate(parts):
                for e in block:
                    a[e] = color
            if all(len({a[e] for e in cp}) < len(cp) for cp in copies):
                return c
    return 0
