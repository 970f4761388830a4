"""Exception hierarchy shared by the package."""


class BandpathError(Exception):
    """Base class; ``exit_code`` is what the CLI returns."""
    exit_code = 1


class ParseError(BandpathError, ValueError):
    exit_code = 2


class MalformedPd(ParseError):
    pass


class InconsistentArcs(MalformedPd):
    pass


class OpenStrand(MalformedPd):
    pass


class MalformedName(ParseError):
    pass


class BadComponentIndex(BandpathError, IndexError):
    pass


class SameComponent(BandpathError, ValueError):
    pass


class BadArc(BandpathError, ValueError):
    pass


class TooLarge(BandpathError):
    pass


class NonConvergentUnknotting(BandpathError):
    pass


class UnknownName(BandpathError, KeyError):
    exit_code = 3

    def __str__(self):
        return Exception.__str__(self)


class AtlasError(BandpathError):
    pass


class ConventionViolation(AtlasError):
    pass


class ParityViolation(BandpathError):
    pass


class NoPathWithin(BandpathError):
    pass


class SearchBudgetExceeded(BandpathError):
    pass


class MalformedAtlas(AtlasError):
    exit_code = 2
