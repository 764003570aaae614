"""Exception hierarchy shared by all swl modules."""


class SwlError(Exception):
    """Base class for all domain errors raised by this package."""


class SpecFormatError(SwlError):
    """Malformed surface spec document."""


class DuplicateDartError(SpecFormatError):
    """A dart occurs more than once in the rotation line."""


class UnknownSymbolError(SpecFormatError):
    """A token in the rotation or holed line is not a known dart/index."""


class MissingSectionError(SpecFormatError):
    """A required section of the spec document is absent."""


class ValidationError(SwlError):
    """Spec parses but does not describe an admissible surface."""


class UnknownFaceError(SwlError):
    """Face id out of range for this complex."""


class WordSyntaxError(SwlError):
    """Word string cannot be parsed over the complex generators."""


class SearchSizeError(SwlError):
    """Generating-set search asked for more than the resource guard allows."""


class VertexCapError(SwlError):
    """Universal-cover construction exceeded its vertex cap."""


class CoverError(SwlError):
    """Inconsistent identification while developing the universal cover."""


class InsufficientDataError(SwlError):
    """Not enough data points for a fit."""
