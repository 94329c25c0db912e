import functools
from typing import Callable, Any

from utils_ops.logs import Logger

logger = Logger("Retry")


def retry(retries: int = 1, exceptions: tuple[type[BaseException], ...] = (Exception,), on_retry: Callable[[int, BaseException], None] = None) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """
    Decorator to retry a function call.

    The wrapped function is called at most `retries + 1` times, without delay
    between attempts.

    Args:
        retries (int): Number of retries before giving up.
        exceptions (tuple): Exception types that trigger a retry. Anything else propagates at once.
        on_retry (Callable[[int, BaseException], None], optional): Called with the failed attempt
            number and its exception before the next attempt.

    Returns:
        Callable[..., Any]: A wrapper function that retries the decorated function.
    """
    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            attempt = 0
            while attempt <= retries:
                logger.log("debug", f"{func.__name__}: attempt {attempt} of {retries}")
                try:
                    return func(*args, **kwargs)
                except exceptions as e:
                    if attempt == retries:
                        logger.log("error", f"{func.__name__}: attempt {attempt} of {retries} failed.", e)
                        raise  # Raise the last exception after exhausting retries
                    if on_retry is not None:
                        on_retry(attempt, e)
                    attempt += 1
        return wrapper
    return decorator
