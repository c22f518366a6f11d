from bibazilevic import config, parallel


def _square(x: int) -> int:
    return x * x


def test_results_keep_the_item_order():
    assert parallel.parallel_map(_square, list(range(20)), max_number_of_parallel_tasks=4) == [x * x for x in range(20)]


def test_serial_evaluation(monkeypatch):
    monkeypatch.setattr(config, 'max_number_of_parallel_tasks', lambda: 1)
    assert parallel.parallel_map(lambda x: x + 1, [1, 2, 3]) == [2, 3, 4]


def test_no_items():
    assert parallel.parallel_map(_square, []) == []
