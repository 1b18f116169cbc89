from simadc.experiments import WorkQueue


class Square:
    def __call__(self, x):
        return x * x


def test_inline():
    with WorkQueue() as queue:
        assert queue.workers == 1
        assert queue.map(Square(), range(5)) == [0, 1, 4, 9, 16]
        assert queue.map(Square(), []) == []


def test_pool_keeps_order():
    with WorkQueue(2) as queue:
        assert queue.workers == 2
        assert queue.map(Square(), range(20)) == [x * x for x in range(20)]
        assert queue.map(abs, [-3, 2, -1]) == [3, 2, 1]


def test_workers_floor():
    assert WorkQueue(0).workers == 1
    queue = WorkQueue(3)
    # Without entering, tasks run inline
    assert queue.map(Square(), [3]) == [9]
    queue.close()
