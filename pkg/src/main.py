import argparse
import sys

from prometheus_client import start_http_server

from src import variables
from src.metrics.logging import logging
from src.metrics.prometheus.basic import ENV_VARIABLES_INFO
from src.modules.bench.bench import Bench
from src.modules.check.check import Check
from src.modules.components.components import Components
from src.modules.konig.konig import Konig
from src.modules.span.span import Span
from src.modules.submodules.command_module import BaseCommand
from src.modules.verify.verify import Verify
from src.typings import Command


logger = logging.getLogger()


COMMANDS: dict[Command, type[BaseCommand]] = {
    Command.SPAN: Span,
    Command.CHECK: Check,
    Command.COMPONENTS: Components,
    Command.KONIG: Konig,
    Command.VERIFY: Verify,
    Command.BENCH: Bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hyperspan',
        description='Optimal skeletons and connection components of q-uniform hypergraphs.',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    for command, command_class in COMMANDS.items():
        command_class.configure(subparsers.add_parser(command.value, help=command_class.help))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    errors = variables.check_variables()
    variables.raise_from_errors(errors)

    logger.info({
        'msg': 'Hyperspan startup.',
        'variables': {
            'command': args.command,
            'HYPERSPAN_THREADS': variables.HYPERSPAN_THREADS,
            'MAX_COMMAND_LIFETIME_IN_SECONDS': variables.MAX_COMMAND_LIFETIME_IN_SECONDS,
            'DEBUG_VERIFY_PRECONDITIONS': variables.DEBUG_VERIFY_PRECONDITIONS,
        },
    })
    ENV_VARIABLES_INFO.info({
        'HYPERSPAN_THREADS': str(variables.HYPERSPAN_THREADS),
        'EXHAUSTIVE_ORACLE_MAX_SUBSET': str(variables.EXHAUSTIVE_ORACLE_MAX_SUBSET),
        'BRUTEFORCE_COMPONENTS_MAX_EDGES': str(variables.BRUTEFORCE_COMPONENTS_MAX_EDGES),
        'ENUMERATE_BASES_MAX_EDGES': str(variables.ENUMERATE_BASES_MAX_EDGES),
        'MAX_COMMAND_LIFETIME_IN_SECONDS': str(variables.MAX_COMMAND_LIFETIME_IN_SECONDS),
    })

    if variables.PROMETHEUS_PORT:
        logger.info({'msg': f'Start http server with prometheus metrics on port {variables.PROMETHEUS_PORT}'})
        start_http_server(variables.PROMETHEUS_PORT)

    return COMMANDS[Command(args.command)]().run(args)


if __name__ == '__main__':
    sys.exit(main())
