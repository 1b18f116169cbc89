'''Work queue for independent simulation tasks.

Tasks are picklable callables applied to a list of items; results come back
in item order whatever the scheduling, and the caller owns every file
write.
'''

import multiprocessing
from typing import Any, Callable, Iterable, List, Optional
from simadc import logging


__all__ = ['WorkQueue']


logger = logging.getLogger(__name__)


class WorkQueue:
    def __init__(self, workers: int = 1) -> None:
        self._workers = max(1, int(workers))
        self._pool: Optional[multiprocessing.pool.Pool] = None

    @property
    def workers(self) -> int:
        return self._workers

    def __enter__(self) -> 'WorkQueue':
        if self._workers > 1:
            self._pool = multiprocessing.Pool(self._workers)
            logger.debug('Started pool of {} workers'.format(self._workers))
        return self

    def __exit__(self, *exc_info: Any) -> None:
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def map(
        self, func: Callable[[Any], Any], items: Iterable[Any]
    ) -> List[Any]:
        items = list(items)
        logger.debug('Running {} tasks'.format(len(items)))
        if self._pool is None:
            return [func(item) for item in items]
        return self._pool.map(func, items, chunksize=1)
