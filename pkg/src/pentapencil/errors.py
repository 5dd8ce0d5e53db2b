"""Exception hierarchy.

Every domain failure derives from :class:`PentapencilError`, which is a
``ValueError`` so callers that only care about bad input can catch that.
"""


class PentapencilError(ValueError):
    pass


# exact_core
class NormalizationError(PentapencilError):
    pass


class LengthError(PentapencilError):
    pass


class DegenerateInput(PentapencilError):
    pass


class DegenerateConfiguration(PentapencilError):
    pass


class DegenerateCurve(PentapencilError):
    pass


# pentagram
class OutOfDomain(PentapencilError):
    pass


class DegenerateOrbit(PentapencilError):
    pass


class NotRealizable(PentapencilError):
    pass


class RealizationError(PentapencilError):
    pass


class ProjectionAtInfinity(PentapencilError):
    pass


# poncelet
class DegeneratePencilBase(PentapencilError):
    pass


class NonGenericPencil(PentapencilError):
    pass


class DegenerateConic(PentapencilError):
    pass


class FlagError(PentapencilError):
    pass


# diophantus
class DegenerateIntersection(PentapencilError):
    pass


class CoincidenceFailure(PentapencilError):
    pass


class BadBasePoint(PentapencilError):
    pass


class DegenerateCubic(PentapencilError):
    pass


class IndeterminacyPoint(PentapencilError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


# delpezzo
class SizeError(PentapencilError):
    pass
