"""The summary of a command line run that heads every JSON report"""

import collections
import datetime
import typing as t

from .. import events
from ..findings import Finding
from . import logger

EVALUATED = 'evaluated'
DEGENERATE = 'degenerate'
ERRORS = 'errors'


class RunReport(events.EventHandler):
    """
    Collects counts and findings of a run

    Args:
        command: The command echo, e.g. `grid --gamma 0:1:2 --zeta 0`
        version: The engine version
    """
    def __init__(self, command: str, version: str) -> None:
        self.command = command
        self.version = version
        self.counts: t.Dict[str, int] = collections.OrderedDict([(EVALUATED, 0), (DEGENERATE, 0), (ERRORS, 0)])
        self.findings: t.List[Finding] = []
        self.start_time = datetime.datetime.now()

    def count(self, outcome: str, n: int = 1):
        if outcome not in self.counts:
            raise ValueError(f'Unknown outcome "{outcome}", expected one of {", ".join(self.counts)}')
        self.counts[outcome] += n

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def handle_event(self, event: events.Event):
        if isinstance(event, Finding) and event.id not in {finding.id for finding in self.findings}:
            self.findings.append(event)

    def report_finding(self, finding: Finding):
        """Collects a finding and forwards it to the configured event handlers"""
        self.handle_event(finding)
        events.notify_configured_event_handlers(finding)

    def log_summary(self):
        logger.log(', '.join(f'{n} {outcome}' for outcome, n in self.counts.items()))
        for finding in self.findings:
            logger.log(f'finding {finding.id}: {finding.description}', format=logger.Format.ITALICS)
        logger.log(f'finished in {logger.format_time_difference(self.start_time, datetime.datetime.now())}',
                   format=logger.Format.ITALICS)

    def to_dict(self) -> dict:
        """Without times, so that reports are reproducible"""
        return {'command': self.command,
                'version': self.version,
                'counts': dict(self.counts),
                'findings': [finding.to_dict() for finding in self.findings]}
