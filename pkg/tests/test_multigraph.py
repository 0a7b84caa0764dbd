import json

import pytest

from gpar.errors import InputError
from gpar.multigraph import Multigraph, delete_edges, incident_edges


def test_incidence_with_loop_and_parallel_edges():
    G = Multigraph(3, ((0, 1), (0, 1), (2, 2), (1, 2)))
    assert incident_edges(G, 0) == {0, 1}
    assert incident_edges(G, 2) == {2, 3}
    assert G.degree(2) == 3  # loop counts twice
    assert G.is_loop(2) and not G.is_loop(0)


def test_incident_edges_rejects_bad_vertex():
    G = Multigraph(2, ((0, 1),))
    with pytest.raises(InputError):
        incident_edges(G, 2)
    with pytest.raises(InputError):
        incident_edges(G, -1)


def test_bad_endpoint_rejected():
    with pytest.raises(InputError):
        Multigraph(2, ((0, 2),))


def test_delete_edges_redensifies():
    G = Multigraph(3, ((0, 1), (1, 2), (2, 0), (0, 1)), edge_labels=("a", "b", "c", "d"))
    H, id_map = delete_edges(G, [1])
    assert id_map == {0: 0, 2: 1, 3: 2}
    assert H.edges == ((0, 1), (2, 0), (0, 1))
    assert H.edge_labels == ("a", "c", "d")


def test_delete_unknown_edge():
    G = Multigraph(2, ((0, 1),))
    with pytest.raises(InputError):
        delete_edges(G, [5])


def test_json_round_trip():
    G = Multigraph(3, ((0, 1), (1, 1), (1, 2)), ("x", "y", "z"))
    data = json.loads(G.to_json())
    assert [e["id"] for e in data["edges"]] == [0, 1, 2]
    again = Multigraph.from_json(G.to_json())
    assert again.edges == G.edges and again.vertex_labels == G.vertex_labels
    assert again.to_json() == G.to_json()


def test_from_dict_requires_dense_ids():
    with pytest.raises(InputError):
        Multigraph.from_dict({"vertex_count": 2, "edges": [{"id": 1, "a": 0, "b": 1}]})


def test_dot_output_lists_every_edge():
    G = Multigraph(2, ((0, 1), (0, 1)))
    dot = G.to_dot()
    assert dot.startswith("graph G {") and dot.count("--") == 2
