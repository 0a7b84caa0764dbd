"""Randomized invariants checked with hypothesis."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gpar.coloring import EdgeColoring, verify_no_rainbow
from gpar.census import enumerate_cycles
from gpar.cover import (ColorPartition, CoverCertificate, covered_set, is_barrier,
                        is_member_P, lemma_2_3_applies, li_bound, min_excess_cover,
                        naive_min_excess)
from gpar.hypergraph import CopyHypergraph, as_multigraph, rank_and_overlap
from gpar.multigraph import Multigraph
from gpar.packing import max_disjoint_cycles, verify_packing


@st.composite
def hypergraphs(draw, max_l=8, max_m=9, max_r=4, min_m=1):
    l = draw(st.integers(1, max_l))
    r = draw(st.integers(1, min(max_r, l)))
    m = draw(st.integers(min_m, max_m))
    edges = [draw(st.sets(st.integers(0, l - 1), min_size=1, max_size=r)) for _ in range(m)]
    return CopyHypergraph.from_sets(l, [sorted(e) for e in edges])


@st.composite
def multigraphs(draw, max_n=7, max_e=11):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          max_size=max_e))
    return Multigraph(n, tuple(edges))


@settings(max_examples=300, deadline=None)
@given(hypergraphs(max_l=10, max_m=12), st.data())
def test_class_coverage_bound(H, data):
    cls = data.draw(st.sets(st.integers(0, H.m - 1), min_size=1))
    r, s = rank_and_overlap(H)
    assert len(covered_set(H, cls)) <= li_bound(len(cls), r, s)


@st.composite
def even_rank_classes(draw):
    """A class of c >= 3 hyperedges of even size r; half the time each
    covered vertex is dealt to exactly two members (the tight case)."""
    r = draw(st.sampled_from([2, 4]))
    c = draw(st.integers(3, 5))
    if draw(st.booleans()):
        slots = [x for x in range(r * c // 2) for _ in range(2)]
        slots = draw(st.permutations(slots))
        members = [slots[i * r:(i + 1) * r] for i in range(c)]
        assume(all(len(set(f)) == r for f in members))
        l = r * c // 2
    else:
        l = draw(st.integers(r, r * c))
        members = [draw(st.lists(st.integers(0, l - 1), min_size=r, max_size=r, unique=True))
                   for _ in range(c)]
    return CopyHypergraph.from_sets(l, [sorted(f) for f in members])


@settings(max_examples=300, deadline=None)
@given(even_rank_classes())
def test_tight_even_rank_class_is_barrier(H):
    r, _ = rank_and_overlap(H)
    cls = list(range(H.m))
    if len(covered_set(H, cls)) == r * len(cls) // 2:
        assert is_barrier(H, cls)


@settings(max_examples=150, deadline=None)
@given(hypergraphs())
def test_search_matches_naive(H):
    res = min_excess_cover(H)
    assert res.h_min == naive_min_excess(H)
    if res.certificate:
        assert res.certificate.complete
        assert CoverCertificate.of(H, res.certificate.partition) == res.certificate


@settings(max_examples=150, deadline=None)
@given(hypergraphs(), st.data())
def test_merging_keeps_cover(H, data):
    res = min_excess_cover(H)
    assume(res.certificate is not None)
    classes = [list(c) for c in res.certificate.partition.classes]
    assume(len(classes) >= 2)
    i, j = data.draw(st.lists(st.integers(0, len(classes) - 1), min_size=2, max_size=2,
                              unique=True))
    merged = [c for t, c in enumerate(classes) if t not in (i, j)] + [classes[i] + classes[j]]
    cert = CoverCertificate.of(H, ColorPartition(tuple(map(tuple, merged)), H.m))
    assert cert.complete and cert.h == res.h_min + 1


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_l=8, max_m=12, max_r=2))
def test_route_agreement(H):
    mg = as_multigraph(H)
    assert isinstance(mg, Multigraph)
    res = min_excess_cover(H)
    if any(len(E) < 2 for E in H.incidence):
        assert res.exhausted
    else:
        assert res.h_min == H.l - max_disjoint_cycles(mg).M


@settings(max_examples=200, deadline=None)
@given(multigraphs(), st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_packing_monotone_and_valid(G, extra):
    P = max_disjoint_cycles(G)
    assert verify_packing(G, P)
    assert P.M <= G.vertex_count // 2
    a, b = extra[0] % G.vertex_count, extra[1] % G.vertex_count
    bigger = Multigraph(G.vertex_count, G.edges + ((a, b),))
    assert max_disjoint_cycles(bigger).M >= P.M


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_l=9, max_m=9, max_r=3))
def test_shortcut_agreement(H):
    if lemma_2_3_applies(H):
        assert is_member_P(H, 3, H.l)


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=6, max_e=9), st.integers(3, 5), st.data())
def test_color_renaming_keeps_verdict(G, d, data):
    psi = enumerate_cycles(G, d)
    assume(G.edge_count > 0)
    raw = data.draw(st.lists(st.integers(1, G.edge_count), min_size=G.edge_count,
                             max_size=G.edge_count))
    # compress to 1..c
    rank = {c: i + 1 for i, c in enumerate(sorted(set(raw)))}
    col = EdgeColoring(tuple(rank[c] for c in raw))
    perm = data.draw(st.permutations(list(range(1, col.colors + 1))))
    before = verify_no_rainbow(G, psi, col) is None
    assert (verify_no_rainbow(G, psi, col.renamed(perm)) is None) == before


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_l=10, max_m=12))
def test_hypergraph_json_round_trip(H):
    assert CopyHypergraph.from_dict(H.to_dict()) == H
