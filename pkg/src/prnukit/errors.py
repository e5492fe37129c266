"""Exception hierarchy.

Input problems (bad files, bad dimensions, bad arguments) and compute
problems (degenerate statistics, malformed intermediate state) live on
separate branches so the CLI can map them to distinct exit codes.
"""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class InputError(ToolkitError):
    """Invalid input: files, formats, dimensions, or arguments."""


class ComputeError(ToolkitError):
    """A computation cannot proceed or produced a degenerate result."""


# -- decoding / containers ---------------------------------------------------

class UnsupportedFormatError(InputError):
    """File is not an 8-bit PNG or binary PGM."""


class CorruptImageError(InputError):
    """File matched a known format but failed to decode."""


class TooSmallError(InputError):
    """Plane smaller than the 8x8 minimum."""


class TargetLargerThanSourceError(InputError):
    """Crop window exceeds the source plane."""


# -- wavelet pipeline --------------------------------------------------------

class TooManyLevelsError(InputError):
    """Requested decomposition depth exceeds what the plane supports."""


class MalformedPyramidError(ComputeError):
    """Wavelet pyramid bands are structurally inconsistent."""


class NonPositiveSigmaError(InputError):
    """Noise floor sigma must be strictly positive."""


# -- estimation / correlation ------------------------------------------------

class EmptyInputError(InputError):
    """An operation received an empty collection."""


class LengthMismatchError(InputError):
    """Paired vectors or lists differ in length."""


class DimensionMismatchError(InputError):
    """Planes or patterns that must share dimensions do not."""


class DegenerateEnergyError(ComputeError):
    """All off-peak correlation energy is zero; the statistic is undefined."""


# -- fingerprint files -------------------------------------------------------

class BadMagicError(InputError):
    """Fingerprint file does not start with the expected magic bytes."""


class VersionMismatchError(InputError):
    """Fingerprint file version is not supported."""


class TruncatedFileError(InputError):
    """Fingerprint file ends before the declared payload."""


# -- experiment --------------------------------------------------------------

class ManifestError(InputError):
    """Dataset manifest is missing fields or violates its invariants."""
