"""Evaluation of independent items in forked worker processes"""

import multiprocessing
import typing as t

from . import config

T = t.TypeVar('T')
R = t.TypeVar('R')


def parallel_map(function: t.Callable[[T], R], items: t.Sequence[T],
                 max_number_of_parallel_tasks: t.Optional[int] = None) -> t.List[R]:
    """
    Applies `function` to all items, results are in the order of `items`

    Uses forked processes, so `function` and the items must be
    picklable (module level functions, plain data). Falls back to serial evaluation for a single
    worker, a single item, or platforms without `fork`.

    Args:
        function: The function to apply
        items: The arguments, one call per item
        max_number_of_parallel_tasks: Defaults to `config.max_number_of_parallel_tasks()`
    """
    items = list(items)
    processes = min(max_number_of_parallel_tasks or config.max_number_of_parallel_tasks(), len(items))
    if processes <= 1 or 'fork' not in multiprocessing.get_all_start_methods():
        return [function(item) for item in items]

    multiprocessing_context = multiprocessing.get_context('fork')
    with multiprocessing_context.Pool(processes=processes) as pool:
        return pool.map(function, items)
