import argparse
import logging

from src import variables
from src.modules.submodules.command_module import BaseCommand, report_line, resolve_labels
from src.providers.instance.file import read_instance
from src.services.hypergraph import Hypergraph
from src.services.independence import ExtensionResult, is_independent_definition, probe_extension
from src.typings import Command, EdgeId, ExitCode
from src.utils.input import comma_list


logger = logging.getLogger(__name__)


def first_rejection(h: Hypergraph, edges: list[EdgeId]) -> tuple[EdgeId, ExtensionResult] | None:
    """Adds the edges in the given order; the first edge that breaks independence and its probe."""
    members: list[EdgeId] = []
    covered_mask = 0
    for a in edges:
        result = probe_extension(h, members, covered_mask, a)
        if not result.accepted:
            return a, result
        members.append(a)
        covered_mask |= h.edge_masks[a]
    return None


class Check(BaseCommand):
    """
    Independence of a list of edges.

    Exit code 0 when the edges form a hyperforest, 1 when they are dependent.
    """
    name = Command.CHECK
    help = 'is an edge set a hyperforest'

    @staticmethod
    def configure(parser: argparse.ArgumentParser):
        parser.add_argument('instance', help='instance file')
        parser.add_argument('--edges', type=comma_list, required=True, help='comma separated edge labels')

    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        h = read_instance(args.instance)
        edges = resolve_labels(h, args.edges)

        rejection = first_rejection(h, edges)
        if rejection is None:
            print('independent')
            return ExitCode.OK

        a, result = rejection
        print('dependent')
        removal = ' '.join(str(vertex + 1) for vertex in result.removal)
        print(f'remove: {removal} (edge {h.label(a)})')

        if len(edges) <= variables.EXHAUSTIVE_ORACLE_MAX_SUBSET:
            verdict = is_independent_definition(h, edges)
            print(report_line('subset', (h.label(d) for d in verdict.witness_edges)))

        logger.info({'msg': 'Dependent edge set.', 'edge': h.label(a), 'removal': result.removal})
        return ExitCode.DEPENDENT
