import contextlib
import logging
import time

from .config import DEFAULT_SEED
from .schemas import ReportModel
from .utils import canonical_json

logger = logging.getLogger(__name__)

REPORT_FORMATS = ('json', 'text')


class Report:
    """
    Claims checked by one command. A claim passes when its observed status equals
    the expected one; timings are kept only when asked for, so reports stay byte-identical.
    """

    def __init__(self, command, seed=DEFAULT_SEED, timing=False):
        self.command = command
        self.seed = seed
        self.verdicts = []
        self.timing = {} if timing else None

    def add(self, claim, status, expected=None, witness=None):
        passed = expected is None or status == expected
        self.verdicts.append({
            'claim': claim,
            'status': status,
            'expected': expected,
            'passed': passed,
            'witness': witness,
        })
        if not passed:
            logger.warning('Claim %s: expected %s, got %s', claim, expected, status)
        return passed

    def add_verdict(self, claim, verdict, expected=None):
        witness = None if verdict.witness is None else list(verdict.witness)
        return self.add(claim, verdict.status, expected, witness)

    @contextlib.contextmanager
    def step(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.timing is not None:
                self.timing[name] = int(round((time.perf_counter() - start) * 1000))

    @property
    def passed(self):
        return all(entry['passed'] for entry in self.verdicts)

    def to_params(self):
        params = {
            'kind': 'report',
            'command': self.command,
            'seed': self.seed,
            'passed': self.passed,
            'verdicts': list(self.verdicts),
        }
        if self.timing is not None:
            params['timing'] = dict(self.timing)
        return params

    def __str__(self):
        return "Report:\n--Command: {}\n--Claims: {}\n--Passed: {}\n".format(
            self.command,
            len(self.verdicts),
            self.passed)


def _text_line(entry):
    line = '{}: {}'.format(entry['claim'], entry['status'])
    if entry['expected'] is not None and not entry['passed']:
        line += ' (expected {})'.format(entry['expected'])
    if entry['witness'] is not None:
        line += ' witness={}'.format(canonical_json(entry['witness']))
    return line


def emit_report(report, report_format='json'):
    params = report.to_params()
    ReportModel.model_validate(params)
    if report_format == 'json':
        return (canonical_json(params) + '\n').encode('utf-8')
    if report_format == 'text':
        lines = [_text_line(entry) for entry in params['verdicts']]
        lines.append('passed: {}'.format(params['passed']))
        if 'timing' in params:
            lines.extend('time {}: {} ms'.format(name, ms) for name, ms in sorted(params['timing'].items()))
        return ('\n'.join(lines) + '\n').encode('utf-8')
    raise ValueError('Unsupported report format', report_format)
