class WorkbenchError(Exception):
    """Base class for workbench errors"""

    exit_code = 2


class InputError(WorkbenchError):
    """Malformed or inconsistent input to a construction"""


class UnsupportedBase(WorkbenchError):
    """The construction is not available over this base"""


class EnumerationBoundExceeded(WorkbenchError):
    """A search would enumerate more candidates than the configured bound"""

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f'{what}: {size} candidates exceed the enumeration bound {bound}')


class ConstructionRejected(WorkbenchError):
    """An oracle rejected a candidate construction"""

    exit_code = 1

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class BudgetExceeded(WorkbenchError):
    """A sweep ran past its time budget"""

    def __init__(self, what, budget):
        self.budget = budget
        super().__init__(f'{what}: time budget of {budget}s exceeded')
