import argparse
import logging

from src.modules.submodules.command_module import BaseCommand, format_weight, report_line
from src.providers.instance.file import read_instance
from src.services.decomposition import attach_components
from src.services.exceptions import InconsistentDecomposition
from src.services.skeleton import optimal_skeleton, skeleton_cardinality_bound
from src.typings import Command, ExitCode, Objective


logger = logging.getLogger(__name__)


class Span(BaseCommand):
    """
    Optimal skeleton of an instance.

    Prints the skeleton edges in input order, the total weight and the number of components.
    """
    name = Command.SPAN
    help = 'minimum (or maximum) weight skeleton'

    @staticmethod
    def configure(parser: argparse.ArgumentParser):
        parser.add_argument('instance', help='instance file')
        parser.add_argument('--max', action='store_true', help='maximize the total weight')
        parser.add_argument('--trace', action='store_true', help='print every greedy decision')
        parser.add_argument(
            '--strict-removals',
            action='store_true',
            help='test every q-1 subset of the candidate edge instead of one',
        )
        parser.add_argument(
            '--incremental',
            action='store_true',
            help='reuse one matching between probes instead of rebuilding it',
        )

    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        h = read_instance(args.instance)
        obj = Objective.MAXIMIZE if args.max else Objective.MINIMIZE

        skeleton = optimal_skeleton(h, obj, strict_removals=args.strict_removals, incremental=args.incremental)
        skeleton = attach_components(h, skeleton)
        if not skeleton_cardinality_bound(h, skeleton):
            raise InconsistentDecomposition(
                f'Skeleton has {len(skeleton.edges)} edges, components require a different count.'
            )

        print(report_line('edges', (h.label(d) for d in skeleton.edges)))
        print(report_line('weight', [format_weight(skeleton.total_weight)]))
        print(report_line('components', [skeleton.components.count]))

        if args.trace:
            for decision in skeleton.trace:
                print(report_line('decision', [
                    h.label(decision.edge),
                    decision.case.value,
                    f'matching_calls={decision.matching_calls}',
                ]))
            print(report_line('matching_calls', [skeleton.matching_calls]))

        return ExitCode.OK
