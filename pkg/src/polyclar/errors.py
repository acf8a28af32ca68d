"""Exception hierarchy shared by every polyclar module."""


class PolyclarError(Exception):
    """Base class for all library errors."""


class InputError(PolyclarError):
    """Malformed or unusable input (maps to CLI exit status 2)."""


class EmptyInput(InputError):
    pass


class Disconnected(InputError):
    pass


class BadCharacter(InputError):
    pass


class NotSimple(PolyclarError):
    """The outer boundary walk visits some vertex twice."""


class TooLarge(PolyclarError):
    """A size guard refused an exhaustive computation."""


class TooWide(PolyclarError):
    """The profile DP was asked to sweep a profile wider than allowed."""


class NoPerfectMatching(PolyclarError):
    pass


class MismatchedGraphs(PolyclarError):
    pass


class NotSubset(PolyclarError):
    pass


class Infeasible(PolyclarError):
    pass


class OutOfRange(InputError):
    pass


class DanglingReference(PolyclarError):
    pass


class TheoremViolation(PolyclarError):
    """Two independently computed quantities that must agree did not."""
