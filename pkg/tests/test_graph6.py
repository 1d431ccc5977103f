import networkx as nx
import pytest

from implicit_graphs.errors import ParseError, UsageError
from implicit_graphs.graph6 import iter_graph6_lines, parse_graph6, read_graph6_file, write_graph6
from implicit_graphs.graphs import Graph, all_labeled_graphs, complete_graph, empty_graph, star_graph, is_isomorphic


def test_fixed_vectors():
    assert write_graph6(empty_graph(1)) == "@"
    assert write_graph6(complete_graph(3)) == "Bw"
    k3 = parse_graph6("Bw")
    assert k3.n == 3 and len(k3.edges) == 6
    assert write_graph6(parse_graph6("D?{")) == "D?{"
    assert is_isomorphic(parse_graph6("D?{"), star_graph(4))


def test_matches_networkx_encoding():
    for g in all_labeled_graphs(5):
        ng = nx.Graph()
        ng.add_nodes_from(range(g.n))
        ng.add_edges_from((u - 1, v - 1) for u, v in g.undirected_edges())
        expected = nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert write_graph6(g) == expected


def test_round_trip_all_graphs_up_to_six_vertices():
    for n in range(0, 7):
        for g in all_labeled_graphs(n):
            text = write_graph6(g)
            assert parse_graph6(text) == g
            assert write_graph6(parse_graph6(text)) == text


def test_digraph6_round_trip():
    for g in all_labeled_graphs(3, directed=True):
        text = write_graph6(g)
        assert text.startswith("&")
        assert parse_graph6(text) == g


@pytest.mark.parametrize("bad", ["B", "Bww", "Bx", "B\x7f", "", "&B"])
def test_malformed_input_names_offset(bad):
    with pytest.raises(ParseError) as info:
        parse_graph6(bad)
    assert "offset" in str(info.value)


def test_header_and_file_reading(tmp_path):
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)
    path = tmp_path / "g.g6"
    path.write_text("# comment\nBw\n\n@\n")
    assert read_graph6_file(path) == [complete_graph(3), empty_graph(1)]
    assert len(list(iter_graph6_lines(["Bw", "#x"]))) == 1


def test_write_limit():
    with pytest.raises(UsageError):
        write_graph6(empty_graph(63))
