import math
from time import perf_counter

import numpy as np
import pytest

from src.constants import BENCH_CSV_HEADER, WEIGHT_TOLERANCE
from src.main import main
from src.modules.bench.bench import bench_row
from src.modules.verify.verify import run_sweep, sweep_configs
from src.providers.instance.file import parse_instance, write_instance
from src.services.decomposition import components, components_bruteforce, hypergraph_components
from src.services.hypergraph import EdgeSubset, subset_weight
from src.services.independence import is_tight
from src.services.skeleton import optimal_skeleton
from src.services.testkit.generator import GenConfig, random_hyperforest, random_hypergraph
from src.services.testkit.oracles import enumerate_bases, kruskal_mst
from src.typings import ExitCode, Objective
from tests.factory import instances


def seeded_configs(seed: int, count: int, q_choices, max_vertices: int, max_edges: int, **kwargs) -> list[GenConfig]:
    rng = np.random.Generator(np.random.PCG64(seed))
    configs = []
    for index in range(count):
        q = q_choices[index % len(q_choices)]
        vertex_count = int(rng.integers(q, max_vertices, endpoint=True))
        edge_count = int(rng.integers(1, min(max_edges, math.comb(vertex_count, q)), endpoint=True))
        configs.append(GenConfig(
            seed=int(rng.integers(0, 2 ** 63)),
            q=q,
            vertex_count=vertex_count,
            edge_count=edge_count,
            **kwargs,
        ))
    return configs


@pytest.mark.e2e
def test_oracle_sweep():
    reports = run_sweep(sweep_configs(seed=2024, count=1000, q=None, max_vertices=9, max_edges=7))
    failures = [(report.index, report.cfg.seed, report.failures) for report in reports if not report.ok]
    assert failures == []


@pytest.mark.e2e
def test_greedy_optimality():
    for cfg in seeded_configs(7, 200, (2, 3, 4), 9, 8, weight_range=(0.0, 20.0)):
        h = random_hypergraph(cfg)
        bases = enumerate_bases(h)
        assert len({len(basis) for basis in bases}) == 1

        weights = [subset_weight(h, basis) for basis in bases]
        cheapest = optimal_skeleton(h)
        dearest = optimal_skeleton(h, Objective.MAXIMIZE)
        assert abs(cheapest.total_weight - min(weights)) <= WEIGHT_TOLERANCE
        assert abs(dearest.total_weight - max(weights)) <= WEIGHT_TOLERANCE


@pytest.mark.e2e
@pytest.mark.parametrize('distinct', [False, True])
def test_two_uniform_degeneracy(distinct):
    # Sparse draws give disconnected graphs, dense ones connected
    for cfg in seeded_configs(11, 100, (2,), 14, 30, distinct_weights=distinct):
        h = random_hypergraph(cfg)
        skeleton = optimal_skeleton(h)
        edges, weight = kruskal_mst(h)
        assert skeleton.total_weight == weight
        if distinct:
            assert skeleton.edges.members == edges


@pytest.mark.e2e
def test_hyperforest_decomposition():
    for cfg in seeded_configs(13, 300, (2, 3, 4), 12, 20):
        forest = random_hyperforest(cfg)
        assert forest.edge_count <= 12

        w = EdgeSubset.of(forest, forest.edge_ids)
        partition = components(forest, w)
        assert partition == components_bruteforce(forest, w)
        for part in partition.parts:
            assert is_tight(forest, part)
        for index, first in enumerate(partition.parts):
            for second in partition.parts[index + 1:]:
                assert not is_tight(forest, (*first, *second))

    triple = parse_instance(instances.TRIPLE_Q4)
    assert components(triple, EdgeSubset.of(triple, triple.edge_ids)).count == 1


@pytest.mark.e2e
def test_components_ignore_skeleton_choice():
    checked = 0
    for cfg in seeded_configs(17, 400, (2, 3, 4), 8, 7):
        h = random_hypergraph(cfg)
        bases = enumerate_bases(h)
        if len(bases) < 2:
            continue

        expected = hypergraph_components(h).induced_partition()
        for basis in bases:
            assert hypergraph_components(h, basis).induced_partition() == expected
        checked += 1

    assert checked >= 50


@pytest.mark.e2e
def test_worked_instance_pin(tmp_path, capsys):
    path = tmp_path / 'worked.hgr'
    path.write_text(instances.WORKED, encoding='utf-8')

    assert main(['span', str(path)]) == ExitCode.OK
    assert main(['components', str(path)]) == ExitCode.OK
    assert main(['check', str(path), '--edges', 'x,y,z,u']) == ExitCode.DEPENDENT

    out = capsys.readouterr().out.splitlines()
    assert out[:3] == ['edges: x y z', 'weight: 6', 'components: 1']
    assert '  links: u' in out

    # Removal witness lies inside the vertices of u (1, 4, 5)
    remove = next(line for line in out if line.startswith('remove:'))
    assert set(remove.split()[1:3]) <= {'1', '4', '5'}


@pytest.mark.e2e
def test_scaling_smoke(single_thread):
    rows = [bench_row(size, 3, seed=0, incremental=True) for size in (5000, 10000)]
    (_, vertices, edges, _, matching_calls, wall_ms), doubled = rows

    assert (vertices, edges) == (1000, 5000)
    assert wall_ms < 10_000
    assert doubled[5] < 10 * max(wall_ms, 1)
    for row in rows:
        assert row[4] <= row[2]
    assert matching_calls <= edges


@pytest.mark.e2e
def test_cli_contract(tmp_path, capsys):
    for cfg in seeded_configs(19, 50, (2, 3, 4), 30, 40, weight_range=(0.0, 1.0), distinct_weights=True):
        h = random_hypergraph(cfg)
        text = write_instance(h)
        assert write_instance(parse_instance(text)) == text

    assert main(['bench', '--sizes', '50']) == ExitCode.OK
    assert capsys.readouterr().out.splitlines()[0] == ','.join(BENCH_CSV_HEADER)

    missing = tmp_path / 'missing.hgr'
    assert main(['span', str(missing)]) == ExitCode.INPUT_ERROR
