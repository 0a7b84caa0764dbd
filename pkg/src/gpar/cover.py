"""Covering partitions of a copy hypergraph.

A partition of the hyperedges into classes "covers" a vertex x when some class
has at least two members containing x. The covered set of a class is its set
of such vertices. The minimum excess sum(|class| - 1) of a partition covering
every vertex equals |E| - Ar for the host, so this module is the exact solver
for hypergraphs of any rank.

Search outline (``min_excess_cover``):

* every vertex x gets a weight w(x) = 1 / e(x), where e(x) bounds the
  coverage-per-excess ratio |covered| / (|class| - 1) of any class covering x.
  Each class then pays at least the total weight it covers, so the weight of
  the uncovered vertices is an admissible lower bound on the remaining excess;
* a decision procedure asks "is there a cover of excess <= B?" and is run for
  increasing B starting at the root bound;
* it branches on an uncovered vertex and tries every complete class of unused
  hyperedges that covers it. Classes are grown connected from a pair through
  the vertex and every member must be needed for some newly covered vertex,
  which loses no optimum (drop an unneeded member, split a disconnected class).
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InputError, SearchBudgetExceeded
from .hypergraph import CopyHypergraph, rank_and_overlap

DEFAULT_NODE_BUDGET = 10**7


def default_budget() -> int:
    return int(os.environ.get("GPAR_NODE_BUDGET", DEFAULT_NODE_BUDGET))


def _mask_of(ids: Iterable[int]) -> int:
    out = 0
    for i in ids:
        out |= 1 << i
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _multiplicity(masks: Sequence[int], members: Iterable[int]) -> tuple[int, int, int]:
    """Vertex masks hit at least once, at least twice, at least three times."""
    once = twice = thrice = 0
    for j in members:
        f = masks[j]
        thrice |= twice & f
        twice |= once & f
        once |= f
    return once, twice, thrice


# ---------------------------------------------------------------------------
# partitions and certificates


@dataclass(frozen=True)
class ColorPartition:
    """A partition of hyperedge ids 0..m-1, classes in canonical order."""

    classes: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self):
        classes = [tuple(sorted(c)) for c in self.classes]
        if any(not c for c in classes):
            raise InputError("partition classes must be nonempty")
        flat = [j for c in classes for j in c]
        if sorted(flat) != list(range(self.m)):
            raise InputError("classes must be disjoint and cover every hyperedge id")
        classes.sort(key=lambda c: (-len(c), c))
        object.__setattr__(self, "classes", tuple(classes))

    @classmethod
    def from_groups(cls, groups: Iterable[Iterable[int]], m: int) -> "ColorPartition":
        """Given non-singleton groups, fill in every other hyperedge as a singleton."""
        groups = [tuple(g) for g in groups]
        seen = {j for g in groups for j in g}
        return cls(tuple(groups) + tuple((j,) for j in range(m) if j not in seen), m)

    @property
    def excess(self) -> int:
        return self.m - len(self.classes)

    def groups(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)


@dataclass(frozen=True)
class CoverCertificate:
    partition: ColorPartition
    covered: frozenset[int]
    complete: bool

    @classmethod
    def of(cls, H: CopyHypergraph, partition: ColorPartition) -> "CoverCertificate":
        covered: set[int] = set()
        for c in partition.classes:
            covered |= covered_set(H, c)
        return cls(partition, frozenset(covered), len(covered) == H.l)

    @property
    def h(self) -> int:
        return self.partition.excess

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "classes": [list(c) for c in self.partition.classes],
            "covered": sorted(self.covered),
            "complete": self.complete,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict, H: CopyHypergraph) -> "CoverCertificate":
        cert = cls.of(H, ColorPartition(tuple(tuple(c) for c in data["classes"]), H.m))
        if cert.h != data["h"] or sorted(cert.covered) != sorted(data["covered"]):
            raise InputError("certificate fields do not match its partition")
        return cert


# ---------------------------------------------------------------------------
# single-class quantities


def _check_ids(H: CopyHypergraph, cls: Iterable[int]) -> list[int]:
    ids = list(cls)
    if not ids:
        raise InputError("class must be nonempty")
    for j in ids:
        if not 0 <= j < H.m:
            raise InputError(f"hyperedge id {j} out of range 0..{H.m - 1}")
    if len(set(ids)) != len(ids):
        raise InputError("class lists a hyperedge twice")
    return ids


def covered_set(H: CopyHypergraph, cls: Iterable[int]) -> frozenset[int]:
    """Vertices lying in at least two members of the class."""
    ids = _check_ids(H, cls)
    _, twice, _ = _multiplicity(H.masks, ids)
    return frozenset(_bits(twice))


def is_barrier(H: CopyHypergraph, cls: Iterable[int]) -> bool:
    """True iff every covered vertex lies in exactly two members of the class."""
    ids = _check_ids(H, cls)
    if len(ids) < 2:
        raise InputError("a barrier needs at least two hyperedges")
    _, _, thrice = _multiplicity(H.masks, ids)
    return thrice == 0


def li_bound(class_size: int, r: int, s: int) -> int:
    """Upper bound on the covered-set size of a class with the given size."""
    if class_size < 1 or r < 1 or s < 0:
        raise InputError("need class_size >= 1, r >= 1, s >= 0")
    if class_size >= 3:
        return r * class_size // 2
    if class_size == 2:
        return s
    return 0


def lemma_2_3_applies(H: CopyHypergraph) -> bool:
    """Rank 3 and overlap 2 with l >= 7, m >= 4: no cover of excess <= 3 exists."""
    if H.l < 7 or H.m < 4:
        return False
    return rank_and_overlap(H) == (3, 2)


# ---------------------------------------------------------------------------
# vertex weights


def coverage_ratio_bounds(H: CopyHypergraph) -> list[Fraction]:
    """e(x) >= |covered(K)| / (|K| - 1) for every class K covering x.

    Pairs and triples through x are enumerated exactly; larger classes use the
    counting bound |covered| <= (sum of member sizes) / 2.
    """
    masks = H.masks
    sizes = [len(F) for F in H.hyperedges]
    r = max(sizes)
    out = []
    for x in range(H.l):
        E = H.incidence[x]
        if len(E) < 2:
            # x can never be covered; any positive finite value keeps w finite
            out.append(Fraction(1))
            continue
        best = Fraction(0)
        for f, g in combinations(E, 2):
            fg = masks[f] & masks[g]
            best = max(best, Fraction(fg.bit_count()))
            u = masks[f] | masks[g]
            for h in range(H.m):
                if h != f and h != g:
                    cov = fg | (masks[h] & u)
                    best = max(best, Fraction(cov.bit_count(), 2))
        top = sorted((sizes[f] for f in E), reverse=True)
        for c in range(4, H.m + 1):
            cap = min(H.l, (top[0] + top[1] + (c - 2) * r) // 2)
            best = max(best, Fraction(cap, c - 1))
        out.append(best)
    return out


# ---------------------------------------------------------------------------
# the search


@dataclass(frozen=True)
class CoverResult:
    """Outcome of ``min_excess_cover``.

    ``h_min`` is None when no covering partition has excess <= ``budget``;
    ``lower_bound`` is the root weight bound.
    """

    h_min: int | None
    certificate: CoverCertificate | None
    budget: int
    lower_bound: int
    nodes: int

    @property
    def exhausted(self) -> bool:
        return self.h_min is None


class _Search:
    def __init__(self, H: CopyHypergraph, node_budget: int):
        self.H = H
        self.masks = H.masks
        self.m = H.m
        ratios = coverage_ratio_bounds(H)
        weights = [1 / e for e in ratios]
        self.scale = math.lcm(*(w.denominator for w in weights)) if weights else 1
        self.w = [int(w * self.scale) for w in weights]
        self.node_budget = node_budget
        self.nodes = 0
        self.failed: dict[tuple[int, int], int] = {}
        self.order = sorted(range(H.l), key=lambda x: (-self.w[x], x))
        # hyperedges meeting a vertex set, for connected growth
        self.vertex_edges = [_mask_of(H.incidence[x]) for x in range(H.l)]
        self.all_edges = (1 << self.m) - 1

    def weight(self, mask: int) -> int:
        w = self.w
        total = 0
        while mask:
            low = mask & -mask
            total += w[low.bit_length() - 1]
            mask ^= low
        return total

    def root_bound(self) -> int:
        return -(-self.weight((1 << self.H.l) - 1) // self.scale)

    def _edges_meeting(self, vmask: int) -> int:
        out = 0
        ve = self.vertex_edges
        while vmask:
            low = vmask & -vmask
            out |= ve[low.bit_length() - 1]
            vmask ^= low
        return out

    def classes_covering(self, v: int, used: int, U: int, B: int, sigma: int
                         ) -> Iterator[tuple[int, int, int]]:
        """Yield (member mask, newly covered mask, excess) for admissible classes."""
        free = self.all_edges & ~used
        E = [f for f in self.H.incidence[v] if free >> f & 1]
        seen: set[int] = set()
        for f, g in combinations(E, 2):
            yield from self.classes_covering_from((1 << f) | (1 << g), used, U, B,
                                                  sigma, seen)

    def classes_covering_from(self, start: int, used: int, U: int, B: int,
                              sigma: int, seen: set[int] | None = None
                              ) -> Iterator[tuple[int, int, int]]:
        """Connected classes grown from ``start``, skipping masks in ``seen``."""
        masks, D = self.masks, self.scale
        free = self.all_edges & ~used
        if seen is None:
            seen = set()
        if start in seen:
            return
        seen.add(start)
        stack = [start]
        while stack:
            K = stack.pop()
            members = _bits(K)
            c = len(members)
            once, twice, thrice = _multiplicity(masks, members)
            newly = twice & U
            waste = (c - 1) * D - self.weight(newly)
            exactly2 = twice & ~thrice & U
            if waste <= sigma and all(masks[j] & exactly2 for j in members):
                yield K, newly, c - 1
            if c > B:
                continue
            # An added member costs D. A newly covered vertex already in
            # `once` needs one added member through it, any other needs
            # two, so credit each added member w(x) or w(x)/2 per vertex.
            # Waste then falls by at most the positive parts of
            # (credit - D) over the free hyperedges (doubled to stay integral).
            near = U & once & ~twice
            far = U & ~once
            best_single = -2 * D
            surplus = 0
            for j in _bits(free & ~K):
                f = masks[j]
                delta = 2 * self.weight(f & near) + self.weight(f & far) - 2 * D
                if delta > best_single:
                    best_single = delta
                if delta > 0:
                    surplus += delta
            if 2 * waste - max(best_single, surplus) > 2 * sigma:
                continue
            cand = self._edges_meeting(once) & free & ~K
            for j in _bits(cand):
                K2 = K | (1 << j)
                if K2 not in seen:
                    seen.add(K2)
                    stack.append(K2)

    def decide(self, used: int, U: int, B: int, path: list[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceeded("cover search", self.nodes)
        if not U:
            return True
        key = (used, U)
        if self.failed.get(key, -1) >= B:
            return False
        sigma = B * self.scale - self.weight(U)
        if sigma < 0:
            self.failed[key] = max(self.failed.get(key, -1), B)
            return False
        v = next(x for x in self.order if U >> x & 1)
        for K, newly, cost in self.classes_covering(v, used, U, B, sigma):
            path.append(K)
            if self.decide(used | K, U & ~newly, B - cost, path):
                return True
            path.pop()
        self.failed[key] = max(self.failed.get(key, -1), B)
        return False


    def classes_containing(self, f0: int, used: int, U: int, B: int, sigma: int
                           ) -> Iterator[tuple[int, int, int]]:
        """Admissible classes with f0 as a member (f0 must be essential)."""
        masks = self.masks
        free = self.all_edges & ~used
        for g in _bits(self._edges_meeting(masks[f0]) & free & ~(1 << f0)):
            for K, newly, cost in self.classes_covering_from(
                    (1 << f0) | (1 << g), used, U, B, sigma):
                yield K, newly, cost

    def decide_symmetric(self, orbit: list[int], U: int, B: int,
                         path: list[int]) -> bool:
        """Root split on a hyperedge orbit under a hypergraph automorphism group.

        In an optimal cover either some orbit member shares a class (map it to
        the representative by a group element) or the whole orbit is singletons.
        """
        sigma = B * self.scale - self.weight(U)
        if sigma < 0:
            return False
        f0 = orbit[0]
        for K, newly, cost in self.classes_containing(f0, 0, U, B, sigma):
            path.append(K)
            if self.decide(K, U & ~newly, B - cost, path):
                return True
            path.pop()
        return self.decide(_mask_of(orbit), U, B, path)


def greedy_cover(H: CopyHypergraph) -> ColorPartition | None:
    """A quick covering partition: join two hyperedges at each uncovered vertex.

    Each join costs one unit of excess, so the result has excess <= l. None
    when some vertex lies in fewer than two hyperedges.
    """
    parent = list(range(H.m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(H.l):
        E = H.incidence[x]
        if len(E) < 2:
            return None
        roots = {find(j) for j in E}
        if len(roots) == len(E):
            parent[find(E[0])] = find(E[1])
    groups: dict[int, list[int]] = {}
    for j in range(H.m):
        groups.setdefault(find(j), []).append(j)
    return ColorPartition(tuple(tuple(g) for g in groups.values()), H.m)


def hyperedge_orbits(H: CopyHypergraph, generator: Sequence[int]) -> list[list[int]]:
    """Orbits of the cyclic group generated by a hyperedge permutation.

    The permutation must be induced by a vertex permutation of H, otherwise
    InputError is raised.
    """
    perm = list(generator)
    if sorted(perm) != list(range(H.m)):
        raise InputError("symmetry must be a permutation of the hyperedge ids")
    incidence = {frozenset(E): x for x, E in enumerate(H.incidence)}
    vmap = []
    for x in range(H.l):
        image = frozenset(perm[j] for j in H.incidence[x])
        if image not in incidence:
            raise InputError("permutation is not an automorphism of the hypergraph")
        vmap.append(incidence[image])
    if sorted(vmap) != list(range(H.l)):
        raise InputError("permutation is not an automorphism of the hypergraph")
    seen = [False] * H.m
    orbits = []
    for j in range(H.m):
        if seen[j]:
            continue
        orbit = []
        while not seen[j]:
            seen[j] = True
            orbit.append(j)
            j = perm[j]
        orbits.append(sorted(orbit))
    return orbits


def min_excess_cover(H: CopyHypergraph, budget: int | None = None,
                     node_budget: int | None = None,
                     symmetry: Sequence[int] | None = None) -> CoverResult:
    """Least excess of a partition covering every vertex, with a certificate.

    Returns ``h_min=None`` when no covering partition has excess <= budget
    (default m - 1, the largest possible). Raises SearchBudgetExceeded when
    the node budget runs out, with the proven bracket attached.

    ``symmetry`` is an optional hyperedge permutation generating automorphisms
    of H (for Petersen hosts, the rotation); the root level then branches on
    one orbit instead of one vertex.
    """
    if budget is None:
        budget = H.m - 1
    if budget < 0:
        raise InputError("budget must be nonnegative")
    if node_budget is None:
        node_budget = default_budget()
    search = _Search(H, node_budget)
    full = (1 << H.l) - 1
    root = search.root_bound()
    if any(len(E) < 2 for E in H.incidence):
        return CoverResult(None, None, budget, root, 0)
    orbit = None
    if symmetry is not None:
        orbit = max(hyperedge_orbits(H, symmetry), key=lambda o: (len(o), -o[0]))
        if len(orbit) < 2:
            orbit = None
    B = max(root, 0)
    while B <= budget:
        path: list[int] = []
        try:
            if orbit is None:
                ok = search.decide(0, full, B, path)
            else:
                ok = search.decide_symmetric(orbit, full, B, path)
        except SearchBudgetExceeded as exc:
            greedy = greedy_cover(H)
            raise SearchBudgetExceeded("cover search", exc.nodes, lower=B,
                                       upper=greedy.excess if greedy else None) from None
        if ok:
            partition = ColorPartition.from_groups((_bits(K) for K in path), H.m)
            cert = CoverCertificate.of(H, partition)
            assert cert.complete and cert.h <= B
            return CoverResult(cert.h, cert, budget, root, search.nodes)
        B += 1
    return CoverResult(None, None, budget, root, search.nodes)


def is_member_P(H: CopyHypergraph, h: int, l: int | None = None,  # noqa: E741
                node_budget: int | None = None) -> bool:
    """True iff no partition of excess <= h covers every vertex."""
    if l is not None and l != H.l:
        raise InputError(f"l={l} does not match the hypergraph's {H.l} vertices")
    if not 0 <= h <= max(H.m - 1, 0):
        raise InputError(f"h must lie in 0..{H.m - 1}")
    return min_excess_cover(H, h, node_budget).exhausted


# ---------------------------------------------------------------------------
# tiny-instance oracle


def partitions_into(items: Sequence[int], blocks: int) -> Iterator[list[list[int]]]:
    """All set partitions of ``items`` into exactly ``blocks`` nonempty blocks."""
    n = len(items)
    if blocks < 1 or blocks > n:
        return
    current: list[list[int]] = []

    def rec(i: int):
        remaining = n - i
        if len(current) + remaining < blocks:
            return
        if i == n:
            if len(current) == blocks:
                yield [b[:] for b in current]
            return
        x = items[i]
        for b in current:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        if len(current) < blocks:
            current.append([x])
            yield from rec(i + 1)
            current.pop()

    yield from rec(0)


def naive_min_excess(H: CopyHypergraph, max_m: int = 12) -> int | None:
    """Enumerate (m - h)-partitions for h = 0, 1, ... and test coverage directly."""
    if H.m > max_m:
        raise InputError(f"oracle limited to m <= {max_m}, got m={H.m}")
    if any(len(E) < 2 for E in H.incidence):
        return None  # such a vertex is never in two members of one class
    full = (1 << H.l) - 1
    for h in range(H.m):
        for parts in partitions_into(list(range(H.m)), H.m - h):
            cov = 0
            for b in parts:
                cov |= _multiplicity(H.masks, b)[1]
            if cov == full:
                return h
    return None
