"""Configuration of bound evaluations, audits and verification runs"""

import functools
import multiprocessing
import typing

from . import events


def expansion_order() -> int:
    """The truncation order of the f built by the proof-expansion checks"""
    return 3


def max_number_of_parallel_tasks() -> int:
    """How many grid rows or audit entries are evaluated in parallel at maximum"""
    return multiprocessing.cpu_count()


def float_tolerance() -> float:
    """Relative tolerance of floating comparisons in audits and soundness sweeps"""
    return 1e-12


def optimum_gap_tolerance() -> float:
    """How far the searched maximum may stay below the formula bound"""
    return 1e-9


def default_seed() -> int:
    """The seed of random draws when none is given on the command line"""
    return 1


def audit_samples() -> int:
    """How many random parameter points are drawn per audited corollary"""
    return 1000


def verify_draws() -> int:
    """How many random rational inputs the `verify` suite checks"""
    return 100


def max_denominator() -> int:
    """The largest denominator of randomly drawn rationals"""
    return 12


def search_resolution() -> float:
    """Step width of the real grid of the extremal search"""
    return 0.25


def search_random_draws() -> int:
    """How many random complex tuples the extremal search evaluates"""
    return 10_000


def soundness_draws() -> int:
    """How many random admissible tuples a soundness sweep evaluates"""
    return 100_000


def output_decimals() -> int:
    """Decimals of floating numbers in human readable output"""
    return 6


def disable_colors() -> bool:
    """When true, log output contains no ANSI escape sequences"""
    return False


@functools.lru_cache(maxsize=None)
def event_handlers() -> typing.List[events.EventHandler]:
    """
    Additional handlers that are notified of every finding of a run

    Example:
        bibazilevic.config.event_handlers = lambda: [MyFindingArchive('/tmp/findings')]
    """
    return []


def fault_injection() -> bool:
    """
    Negative control for the verification suite.

    When true, the proof-expansion checks use -a2 instead of a2, so that `verify` has to fail.
    """
    return False
