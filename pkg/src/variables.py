import os

# - Parallelism -
# Caps the worker threads of the verify sweep
HYPERSPAN_THREADS = int(os.getenv('HYPERSPAN_THREADS', os.cpu_count() or 1))

# - Logging -
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()

# - Exhaustive oracles -
# Ground-truth oracles enumerate subsets, so they refuse inputs above these sizes
EXHAUSTIVE_ORACLE_MAX_SUBSET = int(os.getenv('EXHAUSTIVE_ORACLE_MAX_SUBSET', 20))
BRUTEFORCE_COMPONENTS_MAX_EDGES = int(os.getenv('BRUTEFORCE_COMPONENTS_MAX_EDGES', 15))
ENUMERATE_BASES_MAX_EDGES = int(os.getenv('ENUMERATE_BASES_MAX_EDGES', 18))

# Re-check independence preconditions that callers guarantee. Slow, meant for debugging.
DEBUG_VERIFY_PRECONDITIONS = os.getenv('DEBUG_VERIFY_PRECONDITIONS', 'False').lower() == 'true'

# - Commands -
# 0 disables the timeout
MAX_COMMAND_LIFETIME_IN_SECONDS = int(os.getenv('MAX_COMMAND_LIFETIME_IN_SECONDS', 0))

# - Metrics -
# 0 keeps metrics in-process only
PROMETHEUS_PORT = int(os.getenv('PROMETHEUS_PORT', 0))
PROMETHEUS_PREFIX = os.getenv('PROMETHEUS_PREFIX', 'hyperspan')


def check_variables() -> list[str]:
    errors = []
    if HYPERSPAN_THREADS < 1:
        errors.append('HYPERSPAN_THREADS')
    if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        errors.append('LOG_LEVEL')
    if EXHAUSTIVE_ORACLE_MAX_SUBSET < 1:
        errors.append('EXHAUSTIVE_ORACLE_MAX_SUBSET')
    if BRUTEFORCE_COMPONENTS_MAX_EDGES < 1:
        errors.append('BRUTEFORCE_COMPONENTS_MAX_EDGES')
    if ENUMERATE_BASES_MAX_EDGES < 1:
        errors.append('ENUMERATE_BASES_MAX_EDGES')
    if MAX_COMMAND_LIFETIME_IN_SECONDS < 0:
        errors.append('MAX_COMMAND_LIFETIME_IN_SECONDS')
    if not 0 <= PROMETHEUS_PORT < 2 ** 16:
        errors.append('PROMETHEUS_PORT')
    return errors


def raise_from_errors(errors):
    if errors:
        raise ValueError("The following variables have invalid values: " + ", ".join(errors))
