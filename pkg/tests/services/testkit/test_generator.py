import math

import pytest
from hypothesis import given, settings, strategies as st

from src.services.exceptions import InfeasibleConfig
from src.services.independence import is_independent_matching
from src.services.testkit.generator import random_hyperforest, random_hypergraph
from src.services.testkit.oracles import enumerate_bases
from tests.factory.configs import GenConfigFactory


@pytest.mark.unit
def test_same_seed_same_instance():
    cfg = GenConfigFactory.build(seed=7)
    assert random_hypergraph(cfg) == random_hypergraph(cfg)
    assert random_hyperforest(cfg) == random_hyperforest(cfg)


@pytest.mark.unit
def test_shape():
    h = random_hypergraph(GenConfigFactory.build(seed=3, q=4, vertex_count=8, edge_count=20))
    assert h.q == 4
    assert h.vertex_count == 8
    assert h.edge_count == 20
    assert len(set(h.edge_sets)) == 20
    for edge in h.edge_sets:
        assert len(edge) == 4
        assert edge <= set(range(8))


@pytest.mark.unit
def test_all_subsets():
    h = random_hypergraph(GenConfigFactory.build(q=3, vertex_count=5, edge_count=10))
    assert len(set(h.edge_sets)) == math.comb(5, 3)


@pytest.mark.unit
def test_rejection_sampling_for_large_vertex_sets():
    h = random_hypergraph(GenConfigFactory.build(seed=11, q=3, vertex_count=200, edge_count=300))
    assert h.edge_count == 300
    assert len(set(h.edge_sets)) == 300


@pytest.mark.unit
def test_distinct_weights():
    h = random_hypergraph(GenConfigFactory.build(edge_count=10, distinct_weights=True, weight_range=(1.0, 4.0)))
    assert len(set(h.weights)) == 10
    assert min(h.weights) == 1.0
    assert max(h.weights) == 4.0


@pytest.mark.unit
def test_integer_weights():
    h = random_hypergraph(GenConfigFactory.build(edge_count=15, weight_range=(0.5, 3.5)))
    assert all(weight in (1.0, 2.0, 3.0) for weight in h.weights)


@pytest.mark.unit
def test_real_weights_when_no_integer_fits():
    h = random_hypergraph(GenConfigFactory.build(edge_count=10, weight_range=(0.25, 0.75)))
    assert all(0.25 <= weight <= 0.75 for weight in h.weights)


@pytest.mark.unit
def test_zero_edges():
    h = random_hypergraph(GenConfigFactory.build(edge_count=0))
    assert h.edge_count == 0
    assert random_hyperforest(GenConfigFactory.build(edge_count=0)).edge_count == 0


@pytest.mark.unit
@pytest.mark.parametrize(
    'overrides',
    [
        {'seed': -1},
        {'q': 1},
        {'vertex_count': 4, 'edge_count': 5},
        {'edge_count': -1},
        {'weight_range': (2.0, 1.0)},
        {'weight_range': (-1.0, 1.0)},
        {'weight_range': (0.0, math.inf)},
        {'weight_range': (1.0, 1.0), 'distinct_weights': True},
    ],
)
def test_infeasible_config(overrides):
    cfg = GenConfigFactory.build(**overrides)
    with pytest.raises(InfeasibleConfig):
        random_hypergraph(cfg)


@pytest.mark.unit
def test_single_distinct_weight_in_point_range():
    h = random_hypergraph(GenConfigFactory.build(edge_count=1, weight_range=(2.0, 2.0), distinct_weights=True))
    assert h.weights == (2.0,)


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), q=st.sampled_from([2, 3, 4]), data=st.data())
def test_hyperforest_is_a_basis(seed, q, data):
    vertex_count = data.draw(st.integers(q, 9))
    edge_count = data.draw(st.integers(0, min(8, math.comb(vertex_count, q))))
    cfg = GenConfigFactory.build(seed=seed, q=q, vertex_count=vertex_count, edge_count=edge_count)

    h = random_hypergraph(cfg)
    forest = random_hyperforest(cfg)

    assert is_independent_matching(forest, forest.edge_ids).independent
    assert set(forest.edges) <= set(h.edges)
    assert forest.edge_count == len(enumerate_bases(h)[0])
