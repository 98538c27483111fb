import time
from concurrent.futures import ThreadPoolExecutor
from functools import wraps
from typing import Callable, Iterable, TypeVar

from config import settings_workers
from core.logger import get_logger

logger = get_logger('utils')

T = TypeVar('T')
R = TypeVar('R')

# Замер времени. Если результат - отчёт с полем timing, время пишется туда же.
# wraps обязателен: click берёт имя и help команды из обёрнутой функции

def timed(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        started = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = round(time.perf_counter() - started, 6)
        logger.info('%s: %.3f c', func.__name__, elapsed)
        if hasattr(result, 'timing'):
            result.timing = elapsed
        return result
    return wrapper

# Порядок результатов совпадает с порядком входа при любом числе потоков

def ordered_map(func: Callable[[T], R], items: Iterable[T]) -> list[R]:
    items = list(items)
    if settings_workers.WORKERS <= 1 or len(items) < 2:
        return list(map(func, items))
    with ThreadPoolExecutor(max_workers=settings_workers.WORKERS) as pool:
        return list(pool.map(func, items))
