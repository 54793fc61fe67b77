import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from src import variables
from src.services.exceptions import EdgeAlreadyInSubset, NotIndependent, SubsetTooLargeForExhaustiveOracle
from src.services.hypergraph import EdgeSubset, new_hypergraph
from src.services.independence import (
    ExtensionCase,
    extend_check_fast,
    is_hypertree,
    is_independent_definition,
    is_independent_matching,
    is_tight,
    phi,
    probe_extension,
)
from src.services.matching import IncrementalMatcher
from src.services.testkit.generator import random_hypergraph
from src.services.testkit.oracles import is_acyclic_q2
from src.utils.subsets import nonempty_subsets_by_size, to_mask
from tests.factory.configs import GenConfigFactory


@pytest.mark.unit
def test_phi(worked, triple_q4):
    assert phi(worked, [0]) == 1
    assert phi(worked, []) == 0
    assert phi(triple_q4, [0, 1, 2]) == 3


@pytest.mark.unit
def test_definition_oracle(worked, dependent_triple):
    assert is_independent_definition(worked, [0]).independent
    assert is_independent_definition(dependent_triple, [0, 1]).independent

    verdict = is_independent_definition(dependent_triple, [0, 1, 2])
    assert not verdict.independent
    assert verdict.witness_edges == (0, 1, 2)
    assert verdict.witness_removal is None


@pytest.mark.unit
def test_definition_oracle_minimum_witness():
    # Two duplicates violate already as a pair
    h = new_hypergraph(3, 4, [[0, 1, 2], [1, 2, 3], [0, 1, 2]], [1, 1, 1])
    assert is_independent_definition(h, [0, 1, 2]).witness_edges == (0, 2)


@pytest.mark.unit
def test_definition_oracle_cap(worked, monkeypatch):
    monkeypatch.setattr(variables, 'EXHAUSTIVE_ORACLE_MAX_SUBSET', 3)
    with pytest.raises(SubsetTooLargeForExhaustiveOracle):
        is_independent_definition(worked, [0, 1, 2, 3])


@pytest.mark.unit
def test_matching_oracle(worked):
    assert is_independent_matching(worked, [0, 1, 2]).independent
    assert is_independent_matching(worked, [0]).independent
    assert is_independent_matching(worked, []).independent

    verdict = is_independent_matching(worked, [0, 1, 2, 3])
    assert not verdict.independent
    assert verdict.witness_removal == (0, 1)
    assert verdict.witness_edges is None


@pytest.mark.unit
def test_extend_check_fast_cases(worked):
    x, y, z, u = range(4)
    assert extend_check_fast(worked, EdgeSubset.of(worked, [x]), y)
    assert extend_check_fast(worked, EdgeSubset.of(worked, [x, y]), z)
    assert not extend_check_fast(worked, EdgeSubset.of(worked, [x, y, z]), u)

    with pytest.raises(EdgeAlreadyInSubset):
        extend_check_fast(worked, EdgeSubset.of(worked, [x]), x)


@pytest.mark.unit
def test_probe_extension_trace(worked):
    x, y, z, u = range(4)
    new_vertex = probe_extension(worked, [x], worked.edge_masks[x], y)
    assert new_vertex.case == ExtensionCase.NEW_VERTEX
    assert new_vertex.matching_calls == 0

    accepted = probe_extension(worked, [x, y], to_mask(range(5)), z)
    assert accepted.case == ExtensionCase.MATCHING_ACCEPTED
    assert accepted.matching_calls == 1
    assert accepted.removal == (0, 1)

    rejected = probe_extension(worked, [x, y, z], to_mask(range(5)), u)
    assert rejected.case == ExtensionCase.MATCHING_REJECTED
    assert rejected.removal == (0, 3)

    strict = probe_extension(worked, [x, y, z], to_mask(range(5)), u, strict=True)
    assert not strict.accepted
    assert strict.matching_calls == 1


@pytest.mark.unit
def test_probe_extension_incremental(worked):
    matcher = IncrementalMatcher.of(worked, [0, 1, 2])
    result = probe_extension(worked, [0, 1, 2], to_mask(range(5)), 3, matcher=matcher)
    assert result.case == ExtensionCase.MATCHING_REJECTED
    assert matcher.members == [0, 1, 2]


@pytest.mark.unit
def test_debug_precondition(monkeypatch):
    monkeypatch.setattr(variables, 'DEBUG_VERIFY_PRECONDITIONS', True)
    h = new_hypergraph(3, 5, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 4]], [1, 1, 1, 1])
    with pytest.raises(NotIndependent):
        extend_check_fast(h, EdgeSubset.of(h, [0, 1, 2]), 3)


@pytest.mark.unit
def test_is_tight(worked, triple_q4):
    assert is_tight(worked, [3])
    assert is_tight(triple_q4, [0, 1, 2])
    assert not is_tight(worked, [0, 1])
    assert not is_tight(worked, [])


@pytest.mark.unit
def test_is_hypertree(worked, dependent_triple):
    assert is_hypertree(worked, [0, 1, 2])
    assert not is_hypertree(worked, [0, 1])
    assert not is_hypertree(dependent_triple, [0, 1, 2])


def small_instance(seed, q, data):
    vertex_count = data.draw(st.integers(q, 9))
    edge_count = data.draw(st.integers(1, min(7, math.comb(vertex_count, q))))
    return random_hypergraph(GenConfigFactory.build(seed=seed, q=q, vertex_count=vertex_count, edge_count=edge_count))


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), q=st.sampled_from([2, 3, 4]), data=st.data())
def test_oracles_agree(seed, q, data):
    h = small_instance(seed, q, data)
    for subset in nonempty_subsets_by_size(list(h.edge_ids)):
        assert is_independent_definition(h, subset).independent == is_independent_matching(h, subset).independent


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), q=st.sampled_from([2, 3, 4]), data=st.data())
def test_fast_check_is_sound(seed, q, data):
    h = small_instance(seed, q, data)
    for subset in nonempty_subsets_by_size(list(h.edge_ids)):
        if not is_independent_definition(h, subset).independent:
            continue
        w = EdgeSubset.of(h, subset)
        for a in set(h.edge_ids) - set(subset):
            expected = is_independent_matching(h, (*subset, a)).independent
            assert extend_check_fast(h, w, a) == expected
            assert extend_check_fast(h, w, a, strict=True) == expected


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), q=st.sampled_from([2, 3, 4]), data=st.data())
def test_matroid_axioms(seed, q, data):
    h = small_instance(seed, q, data)
    independent = [
        frozenset(subset) for subset in nonempty_subsets_by_size(list(h.edge_ids))
        if is_independent_definition(h, subset).independent
    ]
    known = set(independent)

    for subset in independent:
        for d in subset:
            smaller = subset - {d}
            assert not smaller or smaller in known

    for smaller, larger in combinations(independent + [frozenset()], 2):
        if len(smaller) > len(larger):
            smaller, larger = larger, smaller
        if len(larger) == len(smaller) + 1:
            assert any(smaller | {b} in known for b in larger - smaller)


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), data=st.data())
def test_two_uniform_independence_is_acyclicity(seed, data):
    h = small_instance(seed, 2, data)
    for subset in nonempty_subsets_by_size(list(h.edge_ids)):
        assert is_independent_definition(h, subset).independent == is_acyclic_q2(h, subset)


@pytest.mark.unit
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2 ** 32), q=st.sampled_from([2, 3, 4]), data=st.data())
def test_phi_is_submodular(seed, q, data):
    h = small_instance(seed, q, data)
    a = data.draw(st.sets(st.sampled_from(list(h.edge_ids)), min_size=1))
    b = data.draw(st.sets(st.sampled_from(list(h.edge_ids)), min_size=1))
    if a & b:
        assert phi(h, a) + phi(h, b) >= phi(h, a | b) + phi(h, a & b)
