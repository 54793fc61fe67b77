import argparse
import logging
import sys
from abc import ABC, abstractmethod
from typing import Iterable

from timeout_decorator import timeout, TimeoutError as DecoratorTimeoutError

from src import variables
from src.constants import WEIGHT_SIGNIFICANT_DIGITS
from src.providers.instance.exceptions import ParseError
from src.services.exceptions import HyperspanError
from src.services.hypergraph import Hypergraph
from src.typings import Command, EdgeId, ExitCode


logger = logging.getLogger(__name__)


class BaseCommand(ABC):
    """
    Base skeleton for commands.

    Goals:
    - Catch input and consistency errors, log them and report exit code 2.
    - Check a command doesn't run longer than MAX_COMMAND_LIFETIME_IN_SECONDS.
    """
    name: Command
    help: str = ''

    @staticmethod
    @abstractmethod
    def configure(parser: argparse.ArgumentParser):
        """Add the command's arguments to its subparser."""
        raise NotImplementedError('Command should implement this method.')  # pragma: no cover

    def run(self, args: argparse.Namespace) -> int:
        logger.info({'msg': 'Execute command.', 'value': self.name})

        try:
            code = timeout(variables.MAX_COMMAND_LIFETIME_IN_SECONDS)(self.execute_command)(args)
        except DecoratorTimeoutError as error:
            return self._fail('Command timed out.', error)
        except ParseError as error:
            return self._fail('Malformed instance file.', error)
        except HyperspanError as error:
            return self._fail(f'{type(error).__name__}.', error)
        except OSError as error:
            return self._fail('Cannot read input.', error)

        logger.info({'msg': 'Command finished.', 'command': self.name, 'value': int(code)})
        return int(code)

    @staticmethod
    def _fail(message: str, error: Exception) -> int:
        logger.error({'msg': message, 'error': str(error)})
        print(f'error: {error}', file=sys.stderr)
        return ExitCode.INPUT_ERROR

    @abstractmethod
    def execute_command(self, args: argparse.Namespace) -> ExitCode:
        """Implement command logic here. Reports go to stdout."""
        raise NotImplementedError('Command should implement this method.')  # pragma: no cover


def resolve_labels(h: Hypergraph, labels: list[str]) -> list[EdgeId]:
    return [h.edge_by_label(label) for label in labels]


def report_line(key: str, items: Iterable[object]) -> str:
    """'key: a b c', or just 'key:' when there are no items."""
    return ' '.join([f'{key}:', *(str(item) for item in items)])


def format_weight(weight: float) -> str:
    return format(weight, f'.{WEIGHT_SIGNIFICANT_DIGITS}g')
