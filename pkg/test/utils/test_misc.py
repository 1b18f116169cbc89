import math
from threading import RLock
import pytest
from simadc.utils import format_float, with_lock


def test_with_lock():
    class Counter:
        def __init__(self):
            self.lock = RLock()
            self.value = 0

        @with_lock
        def increment(self):
            # Re-entrant: the lock is already held here
            with self.lock:
                self.value += 1
            return self.value

    counter = Counter()
    assert counter.increment() == 1
    assert counter.increment() == 2


@pytest.mark.parametrize(
    'value,expected',
    [
        (0.1, '0.1'),
        (1e-9, '1e-09'),
        (-0.0, '-0.0'),
        (3, '3.0'),
        (math.inf, 'inf'),
        (1 / 3, '0.3333333333333333'),
    ],
)
def test_format_float(value, expected):
    assert format_float(value) == expected
    assert float(format_float(value)) == float(value)
