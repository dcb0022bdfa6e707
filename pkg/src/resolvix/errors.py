"""Error taxonomy shared by all workbench modules.

Every error that corresponds to a truncation limit (rather than a bad
input) derives from WindowExceeded so callers can widen the window and
retry uniformly.
"""


class ResolvixError(Exception):
    """Base class for all workbench errors."""


class WindowExceeded(ResolvixError):
    """The answer cannot be certified within the configured window."""


class NotComparable(ResolvixError):
    pass


class Comparable(ResolvixError):
    pass


class CycleError(ResolvixError):
    """The input relation violates antisymmetry (a cycle exists)."""


class MaximalElement(ResolvixError):
    """An operation requiring strict successors hit a maximal element."""


class FillFailure(ResolvixError):
    """A required fill certificate does not exist at this window.

    Carries ``target`` (member name) and ``point`` (the uncovered ground
    point) when known.
    """

    def __init__(self, message, target=None, point=None):
        super().__init__(message)
        self.target = target
        self.point = point


class Unresolvable(ResolvixError):
    pass


class ScheduleExhausted(ResolvixError):
    def __init__(self, message, pending=()):
        super().__init__(message)
        self.pending = tuple(pending)


class NoCertificate(ResolvixError):
    pass


class ChainTooShort(ResolvixError):
    pass


class NotUnionClosed(ResolvixError):
    pass


class RequirementUnmeetable(ResolvixError):
    def __init__(self, message, requirement=None):
        super().__init__(message)
        self.requirement = requirement


class TooSmall(ResolvixError):
    pass


class NotWeaklySeparated(ResolvixError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InductionStuck(ResolvixError):
    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NotTwins(ResolvixError):
    def __init__(self, message, clause=None):
        super().__init__(message)
        self.clause = clause


class AlreadyPresent(ResolvixError):
    pass


class BadIndex(ResolvixError):
    pass


class AlreadyDefined(ResolvixError):
    pass


class GUndefined(ResolvixError):
    pass


class BudgetExhausted(ResolvixError):
    def __init__(self, message, pending=()):
        super().__init__(message)
        self.pending = tuple(pending)


class ValidationError(ResolvixError):
    """An operation produced or received a condition violating its axioms."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class FormatError(ResolvixError):
    """A text-format file failed to parse."""
