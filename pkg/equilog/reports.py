from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One named law or axiom with its outcome"""

    name: str
    passed: bool
    witness: object = None
    detail: str = ''
    applicable: bool = True

    @property
    def status(self):
        if not self.applicable:
            return 'N/A'
        return 'PASS' if self.passed else 'FAIL'

    def as_dict(self):
        data = {'name': self.name, 'status': self.status, 'passed': self.passed}
        if not self.passed:
            data['witness'] = self.witness
        if self.detail:
            data['detail'] = self.detail
        return data


@dataclass
class Report:
    """Pass/fail record for a verification, with witnesses on failure"""

    subject: str
    checks: list = field(default_factory=list)
    bound: int = None

    def add(self, name, passed, witness=None, detail=''):
        self.checks.append(Check(name, bool(passed), witness, detail))
        return self

    def skip(self, name, detail):
        """Record a check that does not apply to this subject"""
        self.checks.append(Check(name, True, None, detail, applicable=False))
        return self

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def get(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def as_dict(self):
        data = {
            'subject': self.subject,
            'passed': self.passed,
            'checks': [check.as_dict() for check in self.checks],
        }
        if self.bound is not None:
            data['bound'] = self.bound
        return data
