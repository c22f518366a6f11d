"""Named checks that evaluate residuals at lists of inputs, and suites of such checks"""

import dataclasses
import re
import typing as t

from .logging import logger


class Node():
    """Base class for checks and check suites"""

    def __init__(self, id: str, description: str) -> None:
        if not re.match('^[a-z0-9_]+$', id):
            raise ValueError(f'Invalid id "{id}". Should only contain lowercase letters, numbers and "_".')
        self.id: str = id
        self.description: str = description
        self.parent: t.Optional['CheckSuite'] = None

    def path(self) -> t.List[str]:
        """The ids of all parents and of the node, from top to bottom"""
        return (self.parent.path() if self.parent else []) + [self.id]

    def __repr__(self):
        return f'<{self.__class__.__name__} "{self.id}">'


@dataclasses.dataclass(frozen=True)
class Failure:
    """An input at which a check has a nonzero residual or raised an exception"""
    check: str
    inputs: t.Dict[str, str]
    residuals: t.Dict[str, str]

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _stringify(values: dict) -> t.Dict[str, str]:
    return {name: str(value) for name, value in values.items()}


class Check(Node):
    """
    Evaluates a residual function at a list of inputs

    Args:
        id: The id of the check
        description: What the residuals measure
        function: Called with the keyword arguments of an input, returns a residual or a dict of named
                  residuals; every residual has to be exactly 0
        inputs: A list of keyword argument dicts, or a function that generates it when the check runs
    """
    def __init__(self, id: str, description: str, function: t.Callable[..., t.Any],
                 inputs: t.Union[t.Callable[[], t.List[dict]], t.List[dict]]) -> None:
        super().__init__(id, description)
        self.function = function
        self._inputs = inputs
        self.evaluated: int = 0
        self.failures: t.List[Failure] = []

    @property
    def inputs(self) -> t.List[dict]:
        if callable(self._inputs):
            self._inputs = list(self._inputs() or [])
        return self._inputs

    def evaluate(self, inputs: dict) -> t.Optional[Failure]:
        try:
            residuals = self.function(**inputs)
        except Exception as e:
            return Failure(self.id, _stringify(inputs), {'exception': repr(e)})
        if not isinstance(residuals, dict):
            residuals = {'residual': residuals}
        nonzero = {name: value for name, value in residuals.items() if value != 0}
        return Failure(self.id, _stringify(inputs), _stringify(nonzero)) if nonzero else None

    def run(self) -> bool:
        """
        Runs the check

        Returns:
            False when any input fails
        """
        self.evaluated, self.failures = 0, []
        for inputs in self.inputs:
            self.evaluated += 1
            failure = self.evaluate(inputs)
            if failure:
                self.failures.append(failure)
        logger.log(f'{" / ".join(self.path())}: {self.evaluated} inputs, {len(self.failures)} failures',
                   format=logger.Format.ITALICS, is_error=bool(self.failures))
        return not self.failures

    def to_dict(self) -> dict:
        return {'id': self.id, 'description': self.description,
                'evaluated': self.evaluated, 'failures': len(self.failures)}


class CheckSuite(Node):
    """A list of checks that all run, also when one of them fails"""

    def __init__(self, id: str, description: str, checks: t.Optional[t.List[Check]] = None) -> None:
        super().__init__(id, description)
        self.checks: t.List[Check] = []
        for check in checks or []:
            self.add(check)

    def add(self, check: Check) -> 'CheckSuite':
        if check.id in {existing.id for existing in self.checks}:
            raise ValueError(f'A check with id "{check.id}" already exists in {self}')
        check.parent = self
        self.checks.append(check)
        return self

    def run(self) -> bool:
        results = [check.run() for check in self.checks]
        return all(results)

    @property
    def failures(self) -> t.List[Failure]:
        return [failure for check in self.checks for failure in check.failures]
