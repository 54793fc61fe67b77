import argparse
import csv
import logging
import math
import sys
from time import perf_counter

from src.constants import BENCH_CSV_HEADER, BENCH_EDGES_PER_VERTEX
from src.modules.submodules.command_module import BaseCommand
from src.services.exceptions import InfeasibleConfig
from src.services.skeleton import optimal_skeleton
from src.services.testkit.generator import GenConfig, random_hypergraph
from src.typings import Command, ExitCode
from src.utils.input import positive_integer_list


logger = logging.getLogger(__name__)


def bench_vertex_count(size: int, q: int) -> int:
    """size // 5 vertices, raised until C(n, q) holds `size` distinct edges."""
    if q < 2:
        raise InfeasibleConfig(f'Uniformity q must be at least 2, got {q}.')
    smallest = q
    while math.comb(smallest, q) < size:
        smallest += 1
    return max(size // BENCH_EDGES_PER_VERTEX, smallest)


def bench_row(size: int, q: int, seed: int, incremental: bool) -> tuple[int, int, int, int, int, int]:
    cfg = GenConfig(
        seed=seed,
        q=q,
        vertex_count=bench_vertex_count(size, q),
        edge_count=size,
        weight_range=(0.0, 1.0),
        distinct_weights=True,
    )
    h = random_hypergraph(cfg)

    start = perf_counter()
    skeleton = optimal_skeleton(h, incremental=incremental)
    wall_ms = round((perf_counter() - start) * 1000)

    logger.info({'msg': 'Bench row.', 'edges': size, 'wall_ms': wall_ms, 'matching_calls': skeleton.matching_calls})
    return q, cfg.vertex_count, size, len(skeleton.edges), skeleton.matching_calls, wall_ms


class Bench(BaseCommand):
    """Timing of the greedy skeleton on seeded instances of growing size, as CSV."""
    name = Command.BENCH
    help = 'skeleton timings as CSV'

    @staticmethod
    def configure(parser: argparse.ArgumentParser):
        parser.add_argument('--sizes', type=positive_integer_list, default=[1000, 2000, 5000], help='edge counts')
        parser.add_argument('--q', type=int, default=3)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument(
            '--no-incremental',
            dest='incremental',
            action='store_false',
            help='rebuild the König graph for every probe',
        )

    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        writer = csv.writer(sys.stdout, lineterminator='\n')
        writer.writerow(BENCH_CSV_HEADER)
        for size in args.sizes:
            writer.writerow(bench_row(size, args.q, args.seed, args.incremental))
            sys.stdout.flush()
        return ExitCode.OK
