"""Exception types shared across the package."""


class SkewBraceError(Exception):
    """Base class for all errors raised by this package."""


class GroupError(SkewBraceError, ValueError):
    """A table or map fails a group axiom.  ``witness`` holds the first offender."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLatinSquare(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class SizeLimitExceeded(SkewBraceError):
    pass


class UnknownGenerator(SkewBraceError, KeyError):
    pass


class NotUnimodular(SkewBraceError, ValueError):
    pass


class CarrierMismatch(SkewBraceError, ValueError):
    pass


class NotRegular(SkewBraceError, ValueError):
    pass


class ProjectionNotBijective(NotRegular):
    pass


class NotABrace(SkewBraceError, ValueError):
    pass


class NotAutomorphism(SkewBraceError, ValueError):
    pass


class NotHomomorphism(SkewBraceError, ValueError):
    pass


class NotLambdaHomomorphic(SkewBraceError, ValueError):
    pass


class ImageNotFinite(SkewBraceError):
    pass


class UndecidableKernel(SkewBraceError):
    pass


class NotValidPhi(SkewBraceError, ValueError):
    pass


class NotLogPreserving(SkewBraceError, ValueError):
    def __init__(self, message, generator=None):
        super().__init__(message)
        self.generator = generator


class BadRank(SkewBraceError, ValueError):
    pass


class UnsupportedFamily(SkewBraceError, ValueError):
    pass


class NotIndexTwo(SkewBraceError, ValueError):
    pass


class NotAbelian(SkewBraceError, ValueError):
    pass


class CapMismatch(SkewBraceError, ValueError):
    pass
