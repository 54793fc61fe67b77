from enum import Enum

from prometheus_client import Counter, Histogram, Info
from prometheus_client.utils import INF

from src.variables import PROMETHEUS_PREFIX


class Status(Enum):
    SUCCESS = 'success'
    FAILURE = 'failure'


ENV_VARIABLES_INFO = Info(
    'env_variables',
    'Env variables for the app',
    namespace=PROMETHEUS_PREFIX,
)

FUNCTIONS_DURATION = Histogram(
    'functions_duration',
    'Duration of skeleton, decomposition and verification tasks',
    ['name', 'status'],
    namespace=PROMETHEUS_PREFIX,
    buckets=(.001, .005, .01, .05, .1, .5, 1.0, 2.5, 5.0, 10.0, 30.0, 60.0, 300.0, INF),
)

MATCHING_CALLS = Counter(
    'matching_calls',
    'Complete matching tests run by the extension check',
    ['mode'],  # "rebuild" or "incremental"
    namespace=PROMETHEUS_PREFIX,
)

SKELETON_DECISIONS = Counter(
    'skeleton_decisions',
    'Greedy decisions by case',
    ['case'],  # "new-vertex", "matching-accepted" or "matching-rejected"
    namespace=PROMETHEUS_PREFIX,
)

VERIFY_INSTANCES = Counter(
    'verify_instances',
    'Generated instances checked by the verify sweep',
    ['status'],
    namespace=PROMETHEUS_PREFIX,
)
