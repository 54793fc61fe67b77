import argparse
import csv
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from src import variables
from src.constants import VERIFY_CSV_HEADER
from src.metrics.prometheus.basic import Status, VERIFY_INSTANCES
from src.metrics.prometheus.duration_meter import duration_meter
from src.modules.submodules.command_module import BaseCommand
from src.modules.verify.invariants import InstanceChecks
from src.services.exceptions import HyperspanError, InfeasibleConfig
from src.services.testkit.generator import GenConfig, random_hypergraph
from src.typings import Command, ExitCode


logger = logging.getLogger(__name__)

SWEEP_Q = (2, 3, 4)


@dataclass(frozen=True)
class InstanceReport:
    index: int
    cfg: GenConfig
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def sweep_configs(seed: int, count: int, q: int | None, max_vertices: int, max_edges: int) -> list[GenConfig]:
    """Instance configs drawn from one PCG64 stream. Without q, uniformities cycle through 2, 3, 4."""
    if seed < 0:
        raise InfeasibleConfig(f'Seed must be nonnegative, got {seed}.')
    if q is not None and q < 2:
        raise InfeasibleConfig(f'Uniformity q must be at least 2, got {q}.')
    if max_edges < 1:
        raise InfeasibleConfig(f'Sweep needs at least one edge per instance, got --max-edges {max_edges}.')
    oracle_cap = min(
        variables.ENUMERATE_BASES_MAX_EDGES,
        variables.BRUTEFORCE_COMPONENTS_MAX_EDGES,
        variables.EXHAUSTIVE_ORACLE_MAX_SUBSET,
    )
    if max_edges > oracle_cap:
        raise InfeasibleConfig(f'--max-edges {max_edges} exceeds the exhaustive oracle cap {oracle_cap}.')

    rng = np.random.Generator(np.random.PCG64(seed))
    configs = []
    for index in range(count):
        uniformity = q if q is not None else SWEEP_Q[index % len(SWEEP_Q)]
        vertex_count = int(rng.integers(uniformity, max(uniformity, max_vertices), endpoint=True))
        edge_count = int(rng.integers(1, min(max_edges, math.comb(vertex_count, uniformity)), endpoint=True))
        configs.append(GenConfig(
            seed=int(rng.integers(0, 2 ** 63)),
            q=uniformity,
            vertex_count=vertex_count,
            edge_count=edge_count,
            weight_range=(0.0, 5.0),
            distinct_weights=index % 2 == 1,
        ))
    return configs


def check_instance(index: int, cfg: GenConfig) -> InstanceReport:
    try:
        failures = InstanceChecks(random_hypergraph(cfg)).run()
    except HyperspanError as error:
        failures = [f'{type(error).__name__}: {error}']

    status = Status.FAILURE if failures else Status.SUCCESS
    VERIFY_INSTANCES.labels(status.value).inc()
    for failure in failures:
        logger.warning({'msg': 'Invariant failed.', 'instance': index, 'seed': cfg.seed, 'value': failure})
    return InstanceReport(index=index, cfg=cfg, failures=tuple(failures))


@duration_meter()
def run_sweep(configs: list[GenConfig]) -> list[InstanceReport]:
    if not configs:
        return []
    workers = max(1, min(variables.HYPERSPAN_THREADS, len(configs)))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        # map keeps instance order
        return list(executor.map(check_instance, range(len(configs)), configs))


class Verify(BaseCommand):
    """
    Oracle agreement sweep over seeded random instances.

    Exit code 0 when every instance passes every invariant.
    """
    name = Command.VERIFY
    help = 'cross-check the algorithms against exhaustive oracles'

    @staticmethod
    def configure(parser: argparse.ArgumentParser):
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--count', type=int, default=100)
        parser.add_argument('--q', type=int, default=None, help='uniformity, cycles through 2, 3, 4 by default')
        parser.add_argument('--max-vertices', type=int, default=9)
        parser.add_argument('--max-edges', type=int, default=7)
        parser.add_argument('--csv', action='store_true', help='print one CSV row per instance')

    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        configs = sweep_configs(args.seed, max(args.count, 0), args.q, args.max_vertices, args.max_edges)
        reports = run_sweep(configs)
        passed = sum(report.ok for report in reports)
        summary = f'{passed}/{len(reports)} ok'

        if args.csv:
            writer = csv.writer(sys.stdout, lineterminator='\n')
            writer.writerow(VERIFY_CSV_HEADER)
            for report in reports:
                cfg = report.cfg
                writer.writerow((
                    report.index, cfg.seed, cfg.q, cfg.vertex_count, cfg.edge_count,
                    int(report.ok), '; '.join(report.failures),
                ))
            print(summary, file=sys.stderr)
        else:
            for report in reports:
                for failure in report.failures:
                    print(f'instance {report.index} seed {report.cfg.seed}: {failure}')
            print(summary)

        logger.info({'msg': 'Verify sweep finished.', 'value': summary})
        return ExitCode.OK if passed == len(reports) else ExitCode.VERIFY_FAILED
