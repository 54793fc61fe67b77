from enum import IntEnum, StrEnum
from typing import NewType


class Command(StrEnum):
    SPAN = 'span'
    CHECK = 'check'
    COMPONENTS = 'components'
    KONIG = 'konig'
    VERIFY = 'verify'
    BENCH = 'bench'


class ExitCode(IntEnum):
    OK = 0
    # Dependence for check, a failed sweep for verify
    DEPENDENT = 1
    VERIFY_FAILED = 1
    INPUT_ERROR = 2


class Objective(StrEnum):
    MINIMIZE = 'minimize'
    MAXIMIZE = 'maximize'


class MatchingMode(StrEnum):
    REBUILD = 'rebuild'
    INCREMENTAL = 'incremental'


VertexId = NewType('VertexId', int)
EdgeId = NewType('EdgeId', int)
