"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`SchottkyError`; input-shaped errors also derive from ``ValueError``.
"""


class SchottkyError(Exception):
    pass


# Moebius arithmetic
class NonOrientable(SchottkyError, ValueError):
    """Determinant not positive: orientation reversing or singular."""


class NotHyperbolic(SchottkyError, ValueError):
    pass


class MarginalTrace(SchottkyError, ValueError):
    """Trace too close to 2 to decide (strict mode only)."""


# boundary geometry
class SharedEndpoint(SchottkyError, ValueError):
    pass


class DegenerateArc(SchottkyError, ValueError):
    pass


class DegenerateAxis(SchottkyError, ValueError):
    pass


class NonPositiveLength(SchottkyError, ValueError):
    pass


class InfinityFixed(SchottkyError, ValueError):
    pass


class PoleOnCircle(SchottkyError, ValueError):
    pass


class ImageThroughInfinity(PoleOnCircle):
    pass


class VerticalAxis(SchottkyError, ValueError):
    pass


# systems and words
class InfinityInside(SchottkyError, ValueError):
    pass


class NotReduced(SchottkyError, ValueError):
    pass


class BadIndex(SchottkyError, IndexError):
    pass


class NotCertified(SchottkyError):
    def __init__(self, violation=None):
        self.violation = violation
        super().__init__(f"system is not certified: {violation}")


class InvalidSurface(SchottkyError, ValueError):
    pass


class ParityError(SchottkyError):
    pass


class EmptySystem(SchottkyError, ValueError):
    pass


# two-generator criteria
class WrongCase(SchottkyError, ValueError):
    pass


class DegeneratePair(SchottkyError, ValueError):
    pass


class TestElementNotHyperbolic(SchottkyError):
    __test__ = False  # keep pytest from collecting this class

    def __init__(self, kind):
        self.kind = kind
        super().__init__(f"B^-1 A is {kind}; the pair is not Schottky")


class ConstructionFailed(SchottkyError):
    def __init__(self, violation=None):
        self.violation = violation
        super().__init__(f"assembled circles failed verification: {violation}")


# constructions / search
class AutoGrowthExhausted(SchottkyError):
    pass


class NotSchottky(SchottkyError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class IdentityGenerator(SchottkyError, ValueError):
    pass


class NonHyperbolicGenerator(SchottkyError, ValueError):
    pass
