import random

import pytest

from helpers import interval_graph, random_interval_model
from implicit_graphs.errors import BudgetExceeded, UsageError
from implicit_graphs.graph6 import parse_graph6
from implicit_graphs.graphs import (Graph, all_labeled_graphs, cycle_graph, enumerate_graphs, family_fig1,
                                    path_graph, star_graph)
from implicit_graphs.schemes import (graph_of_labeling, graph_of_model, interval_formula, interval_number,
                                     k_interval_formula, k_interval_model, lambda_foqf, member_logical,
                                     model_labels)


def test_interval_number_examples():
    assert interval_number(parse_graph6("Ch"))[0] == 1
    assert interval_number(cycle_graph(4))[0] == 2
    assert interval_number(family_fig1(2))[0] == 2


def test_models_reproduce_the_graph():
    for g in [cycle_graph(4), cycle_graph(5), family_fig1(2), star_graph(4)]:
        k, model = interval_number(g)
        assert graph_of_model(model).same_edges(g)
        assert all(len(ivs) == k for ivs in model)
        top = max(b for ivs in model for _, b in ivs)
        assert top <= 2 * k * g.n


def test_model_labels_work_with_the_k_interval_formula():
    k, model = interval_number(cycle_graph(4))
    scheme = k_interval_formula(k)
    assert graph_of_labeling(scheme, model_labels(model)).same_edges(cycle_graph(4))


def test_interval_graphs_agree_with_generic_membership():
    # k = 1 sweep search against the generic labeling search, all graphs up to five vertices
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            sweep = k_interval_model(g, 1) is not None
            generic = member_logical(interval_formula(), g) is not None
            assert sweep == generic


def test_random_interval_models_are_recognised():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(1, 7)
        g = interval_graph(random_interval_model(rng, n))
        assert interval_number(g)[0] == 1


def test_cycles_need_two_intervals():
    for n in range(4, 8):
        assert interval_number(cycle_graph(n))[0] == 2


def test_limits_and_errors():
    with pytest.raises(BudgetExceeded):
        interval_number(path_graph(11))
    with pytest.raises(BudgetExceeded):
        interval_number(path_graph(3), kmax=4)
    with pytest.raises(UsageError):
        k_interval_model(Graph(2, frozenset({(1, 2)}), directed=True), 1)


def test_lambda_at_most_twice_interval_number():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            k_int = interval_number(g)[0]
            lam = lambda_foqf(g, min(2, 2 * k_int))
            assert lam is not None and lam[0] <= 2 * k_int
