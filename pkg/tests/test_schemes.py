import itertools
import random

import pytest

from helpers import graph_by_predicate, random_labeling, random_qf_formula
from implicit_graphs.errors import BudgetExceeded, UsageError
from implicit_graphs.graph6 import parse_graph6
from implicit_graphs.graphs import (Graph, all_labeled_graphs, complete_graph, cycle_graph, empty_graph,
                                    enumerate_graphs, induced_subgraph, path_graph, star_graph)
from implicit_graphs.logic import Formula, equivalent, evaluate, order_type, parse_formula
from implicit_graphs.schemes import (EQ, INTERVAL, BitScheme, LabelDecoder, LogicalScheme, extend_for_first,
                                     extend_for_second, get_decoder, graph_of_bitscheme, graph_of_labeling,
                                     interval_formula, k_interval_formula, lambda_foqf, log2ceil,
                                     member_bitscheme, member_logical, normalize_labeling, union_scheme)


def test_decoders_reject_unequal_lengths():
    with pytest.raises(UsageError):
        EQ("0", "01")
    with pytest.raises(UsageError):
        get_decoder("nope")
    assert log2ceil(1) == 0 and log2ceil(2) == 1 and log2ceil(5) == 3


def test_graph_of_labeling_examples():
    taut = LogicalScheme(parse_formula("x1 = x1"), 1)
    assert graph_of_labeling(taut, [(1,), (3,), (2,)]).same_edges(complete_graph(3))
    g = graph_of_labeling(interval_formula(), [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert g.is_symmetric()
    assert g.as_undirected().undirected_edges() == [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
    lt = LogicalScheme(parse_formula("x1 < x2"), 1)
    t = graph_of_labeling(lt, [(1,), (2,), (3,), (4,)])
    assert t.edges == {(u, v) for u in range(1, 5) for v in range(u + 1, 5)}
    with pytest.raises(UsageError):
        graph_of_labeling(lt, [(1,), (3,)])  # universe is [2]


def test_graph_of_bitscheme_examples():
    s = BitScheme(EQ, 1)
    assert graph_of_bitscheme(s, ["00", "01", "10"]).edges == frozenset()
    assert graph_of_bitscheme(s, ["00", "00", "00"]).same_edges(complete_graph(3))
    with pytest.raises(UsageError):
        graph_of_bitscheme(s, ["0", "00", "00"])


def test_bit_interval_decoder_reads_two_endpoints():
    rng = random.Random(1)
    for _ in range(50):
        n, q = rng.randint(1, 6), rng.randint(1, 4)
        labs = [tuple(sorted((rng.randrange(1 << q), rng.randrange(1 << q)))) for _ in range(n)]
        words = [format(a, f"0{q}b") + format(b, f"0{q}b") for a, b in labs]
        expect = graph_by_predicate(n, lambda u, v: not (labs[u][1] < labs[v][0] or labs[v][1] < labs[u][0]))
        got = graph_by_predicate(n, lambda u, v: INTERVAL.fn(words[u], words[v]))
        assert got == expect
        if n >= 2:
            lg = graph_of_labeling(interval_formula(), normalize_labeling([(a + 1, b + 1) for a, b in labs]))
            assert lg.edges == expect.edges


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bit_and_logical_interval_schemes_agree(n):
    for g in enumerate_graphs(n):
        logical = member_logical(interval_formula(), g)
        bits = member_bitscheme(BitScheme(INTERVAL, 4), g)
        assert (logical is None) == (bits is None)
        if bits is not None:
            assert graph_of_bitscheme(BitScheme(INTERVAL, 4), bits).same_edges(g)


def test_logical_interval_members_on_five_vertices_have_bit_witnesses():
    triangle_and_edge = Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (4, 5)])
    for g in (path_graph(5), complete_graph(5), empty_graph(5), star_graph(4), triangle_and_edge):
        assert member_logical(interval_formula(), g) is not None
        w = member_bitscheme(BitScheme(INTERVAL, 4), g)
        assert w is not None and graph_of_bitscheme(BitScheme(INTERVAL, 4), w).same_edges(g)


def test_member_bitscheme_examples():
    assert member_bitscheme(BitScheme(EQ, 1), complete_graph(2)) == ["0", "0"]
    assert member_bitscheme(BitScheme(EQ, 1), path_graph(3)) is None
    assert member_bitscheme(BitScheme(INTERVAL, 4), cycle_graph(4)) is None
    witness = member_bitscheme(BitScheme(INTERVAL, 4), path_graph(4))
    assert witness is not None
    assert graph_of_bitscheme(BitScheme(INTERVAL, 4), witness).same_edges(path_graph(4))


def test_member_bitscheme_budget_is_distinct_outcome():
    with pytest.raises(BudgetExceeded):
        member_bitscheme(BitScheme(INTERVAL, 4), cycle_graph(4), budget=100)


def test_equality_scheme_members_are_clique_unions():
    for g in enumerate_graphs(4):
        w = member_bitscheme(BitScheme(EQ, 1), g)
        transitive = all(not (g.has_edge(a, b) and g.has_edge(b, c)) or g.has_edge(a, c)
                         for a, b, c in itertools.permutations(g.vertices, 3))
        assert (w is not None) == transitive


def test_normalize_labeling():
    assert normalize_labeling([(10,), (700,), (10,)]) == [(1,), (2,), (1,)]
    assert normalize_labeling([(1, 2), (3, 4)]) == [(1, 2), (3, 4)]


def test_normalization_preserves_graphs():
    rng = random.Random(3)
    for _ in range(100):
        k, c, n = rng.randint(1, 2), rng.randint(1, 3), rng.randint(1, 6)
        phi = random_qf_formula(rng, k)
        scheme = LogicalScheme(phi, c)
        lab = random_labeling(rng, n, k, scheme.universe(n))
        norm = normalize_labeling(lab)
        assert max(x for t in norm for x in t) <= k * n
        assert graph_of_labeling(scheme, lab) == graph_of_labeling(scheme, norm)


def test_member_logical_examples():
    taut = LogicalScheme(parse_formula("x1 = x1"), 1)
    assert member_logical(taut, complete_graph(3)) is not None
    assert member_logical(interval_formula(), cycle_graph(4)) is None
    neq = LogicalScheme(parse_formula("x1 < x2 | x2 < x1"), 1)
    assert member_logical(neq, path_graph(3)) == [(1,), (2,), (1,)]
    assert member_logical(interval_formula(), empty_graph(1)) == [(1, 1)]


def test_member_logical_witnesses_are_valid():
    p4 = parse_graph6("Ch")
    w = member_logical(interval_formula(), p4)
    assert graph_of_labeling(interval_formula(), w).same_edges(p4)


def test_member_logical_with_arithmetic_uses_full_universe():
    scheme = LogicalScheme(parse_formula("x1 + x1 = x2 | x2 + x2 = x1"), 1)
    w = member_logical(scheme, path_graph(3))
    assert w is not None
    assert graph_of_labeling(scheme, w).same_edges(path_graph(3))
    assert member_logical(scheme, complete_graph(3)) is None


def test_k_interval_formula():
    assert equivalent(k_interval_formula(1).formula, interval_formula().formula)
    w = member_logical(k_interval_formula(2), cycle_graph(4))
    assert w is not None
    assert graph_of_labeling(k_interval_formula(2), w).same_edges(cycle_graph(4))
    assert member_logical(k_interval_formula(1), star_graph(3)) is not None
    with pytest.raises(UsageError):
        k_interval_formula(0)


def test_logical_membership_is_hereditary():
    rng = random.Random(8)
    checked = 0
    for _ in range(40):
        phi = random_qf_formula(rng, 1)
        scheme = LogicalScheme(phi, 2)
        n = rng.randint(2, 5)
        g = graph_of_labeling(scheme, random_labeling(rng, n, 1, n))
        w = member_logical(scheme, g)
        assert w is not None
        for size in range(1, n):
            for sub in itertools.combinations(range(1, n + 1), size):
                h = induced_subgraph(g, sub)
                restricted = [w[v - 1] for v in sub]
                assert graph_of_labeling(scheme, normalize_labeling(restricted)) == h
                checked += 1
    assert checked > 100


def test_union_scheme_shape_and_guard():
    phi, psi = parse_formula("x1 < x2"), parse_formula("x1 = x2")
    u = union_scheme(phi, psi)
    assert u.k == 2
    for a in itertools.product(range(1, 4), repeat=4):
        x1, g1, y1, g2 = a
        want = (x1 < y1) if g1 == g2 else (x1 == y1)
        assert evaluate(u, 3, a) == want
    with pytest.raises(UsageError):
        union_scheme(phi, parse_formula("x1 < x4"))


def test_union_of_formula_with_itself():
    phi = parse_formula("x1 < x2 | x2 < x1")
    assert equivalent(union_scheme(phi, phi), Formula(parse_formula("x1 < x3 | x3 < x1", k=2).body, 2))


def test_union_witness_extension():
    rng = random.Random(12)
    for _ in range(20):
        phi, psi = random_qf_formula(rng, 1), random_qf_formula(rng, 1)
        u = LogicalScheme(union_scheme(phi, psi), 2)
        for side, ext in ((phi, extend_for_first), (psi, extend_for_second)):
            scheme = LogicalScheme(side, 2)
            n = rng.randint(1, 5)
            lab = random_labeling(rng, n, 1, n)
            g = graph_of_labeling(scheme, lab)
            assert graph_of_labeling(u, ext(lab)) == g


def test_lambda_foqf_examples():
    for n in range(1, 6):
        assert lambda_foqf(complete_graph(n), 1)[0] == 1
        assert lambda_foqf(empty_graph(n), 1)[0] == 1
    assert lambda_foqf(path_graph(3), 1)[0] == 1
    assert lambda_foqf(cycle_graph(5), 1) is None
    with pytest.raises(BudgetExceeded):
        lambda_foqf(cycle_graph(7), 2)
