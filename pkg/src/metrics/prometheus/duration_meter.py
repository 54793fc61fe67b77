import logging
from functools import wraps
from time import perf_counter
from typing import Callable, ParamSpec, TypeVar

from src.metrics.prometheus.basic import FUNCTIONS_DURATION, Status

logger = logging.getLogger(__name__)


P = ParamSpec("P")
T = TypeVar("T")


def duration_meter():
    def decorator(func: Callable[P, T]) -> Callable[P, T]:
        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
            full_name = f"{func.__module__}.{func.__name__}"
            status = Status.FAILURE
            start = perf_counter()
            logger.debug({"msg": f"Function '{full_name}' started"})
            try:
                result = func(*args, **kwargs)
                status = Status.SUCCESS
                return result
            finally:
                duration = perf_counter() - start
                FUNCTIONS_DURATION.labels(name=full_name, status=status.value).observe(duration)
                logger.debug({"msg": f"Task '{full_name}' finished", "status": status.value, "duration (sec)": duration})

        return wrapper

    return decorator
