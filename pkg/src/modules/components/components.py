import argparse
import logging

from src.modules.submodules.command_module import BaseCommand, report_line
from src.providers.instance.file import read_instance
from src.services.decomposition import hypergraph_components
from src.services.exceptions import InconsistentDecomposition
from src.services.independence import is_tight
from src.typings import Command, ExitCode


logger = logging.getLogger(__name__)


class Components(BaseCommand):
    name = Command.COMPONENTS
    help = 'connection components with their links'

    @staticmethod
    def configure(parser: argparse.ArgumentParser):
        parser.add_argument('instance', help='instance file')

    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        h = read_instance(args.instance)
        partition = hypergraph_components(h)

        for part in partition.parts:
            if not is_tight(h, part):
                raise InconsistentDecomposition(f'Part {[h.label(d) for d in part]} is not tight.')

        print(report_line('components', [partition.count]))
        for index, part in enumerate(partition.parts):
            print(f'component {index + 1}')
            print('  ' + report_line('skeleton', (h.label(d) for d in part)))
            print('  ' + report_line('links', (h.label(d) for d in partition.links_of(index))))
            print('  ' + report_line('vertices', [len(partition.vertex_covers[index])]))

        return ExitCode.OK
