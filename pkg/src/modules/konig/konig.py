import argparse
import logging

from src.modules.konig.dot_export import export_konig_dot
from src.modules.submodules.command_module import BaseCommand, resolve_labels
from src.providers.instance.file import read_instance
from src.services.matching import build_konig
from src.typings import Command, ExitCode, VertexId
from src.utils.input import comma_list, positive_integer_list


logger = logging.getLogger(__name__)


class Konig(BaseCommand):
    name = Command.KONIG
    help = 'König representation as DOT'

    @staticmethod
    def configure(parser: argparse.ArgumentParser):
        parser.add_argument('instance', help='instance file')
        parser.add_argument('--edges', type=comma_list, default=None, help='comma separated edge labels, all by default')
        parser.add_argument('--remove', type=positive_integer_list, default=[], help='comma separated 1-based vertices')

    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        h = read_instance(args.instance)
        edges = h.edge_ids if args.edges is None else resolve_labels(h, args.edges)

        k = build_konig(h, edges).with_removed(VertexId(vertex - 1) for vertex in args.remove)
        print(export_konig_dot(h, k), end='')
        return ExitCode.OK
