import time
from dataclasses import dataclass, field

from django.conf import settings

from equilog.exceptions import BudgetExceeded, InputError


def _default_max_carrier():
    return settings.EQUILOG_MAX_CARRIER


def _default_time_budget():
    return settings.EQUILOG_TIME_BUDGET


@dataclass(frozen=True)
class SweepConfig:
    """Bounds for a brute-force sweep"""

    max_carrier: int = field(default_factory=_default_max_carrier)
    # Probe values for the matrices of competitor objects over infinite quantales
    value_grid: tuple = None
    time_budget: int = field(default_factory=_default_time_budget)  # seconds

    def __post_init__(self):
        if self.max_carrier < 1:
            raise InputError('max_carrier must be at least 1')

    def with_carrier(self, max_carrier):
        return SweepConfig(max_carrier, self.value_grid, self.time_budget)

    def clock(self, what):
        return Clock(what, self.time_budget)


class Clock:
    """Raises BudgetExceeded once a sweep runs past its budget"""

    def __init__(self, what, budget):
        self.what = what
        self.budget = budget
        self.started = time.monotonic()

    def tick(self):
        if time.monotonic() - self.started > self.budget:
            raise BudgetExceeded(self.what, self.budget)


@dataclass
class Verdict:
    """Outcome of an oracle check; a PASS only holds at the recorded bound"""

    subject: str
    passed: bool
    bound: int
    checked: int = 0
    certificate: dict = None

    @property
    def label(self):
        return f'PASS at bound {self.bound}' if self.passed else 'FAIL'

    def as_dict(self):
        data = {
            'subject': self.subject,
            'verdict': self.label,
            'passed': self.passed,
            'bound': self.bound,
            'checked': self.checked,
        }
        if self.certificate is not None:
            data['certificate'] = self.certificate
        return data
