import json

import pytest

from bibazilevic import config, events, findings
from bibazilevic.logging import run_report


class _CollectingHandler(events.EventHandler):
    def __init__(self):
        self.events = []

    def handle_event(self, event: events.Event):
        self.events.append(event)


def test_counts():
    report = run_report.RunReport('bounds', '1.0.0')
    report.count(run_report.EVALUATED, 3)
    report.count(run_report.DEGENERATE)
    assert report.total == 4
    with pytest.raises(ValueError):
        report.count('unknown')


def test_findings_are_deduplicated():
    report = run_report.RunReport('verify', '1.0.0')
    report.handle_event(findings.confirm('sum-relation-symbol'))
    report.handle_event(findings.confirm('sum-relation-symbol'))
    assert [finding.id for finding in report.findings] == ['sum-relation-symbol']


def test_findings_reach_configured_handlers(monkeypatch):
    handler = _CollectingHandler()
    monkeypatch.setattr(config, 'event_handlers', lambda: [handler])
    report = run_report.RunReport('audit', '1.0.0')
    report.report_finding(findings.audit_mismatch('Thm 3.1', 'a2', 1.0, 2.0, {'A': '1'}))
    assert [event.id for event in handler.events] == ['Thm 3.1 a2']


def test_report_is_json_serializable():
    report = run_report.RunReport('audit', '1.0.0')
    report.handle_event(findings.confirm('inverse-series-w4-term', witness={'a2': '1/2'}))
    data = json.loads(json.dumps(report.to_dict()))
    assert data['findings'][0]['id'] == 'inverse-series-w4-term'
    assert data['findings'][0]['witness'] == {'a2': '1/2'}
    assert set(data) == {'command', 'version', 'counts', 'findings'}


def test_finding_to_json():
    finding = findings.confirm('order-zeta-missing-z')
    assert json.loads(finding.to_json())['derived'] == '(1 + (1 - 2 zeta) z) / (1 - z)'


def test_log_summary_writes_to_stderr(capsys, monkeypatch):
    monkeypatch.setattr(config, 'disable_colors', lambda: True)
    report = run_report.RunReport('bounds', '1.0.0')
    report.count(run_report.EVALUATED)
    report.log_summary()
    captured = capsys.readouterr()
    assert captured.out == ''
    assert captured.err.startswith('1 evaluated, 0 degenerate, 0 errors\n')
