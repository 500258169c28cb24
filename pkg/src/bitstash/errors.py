"""Exception types shared across the toolkit."""


class BitstashError(Exception):
    """Base class for every error raised by this package."""


class MalformedHeader(BitstashError):
    """Image file header is structurally invalid or truncated."""


class UnsupportedFormat(BitstashError):
    """File is recognizable but uses a variant this toolkit rejects."""


class TruncatedPixelData(BitstashError):
    """Declared dimensions need more pixel bytes than the file provides."""


class PositionOutOfRange(BitstashError):
    """Linear bit position falls outside the addressable range."""


class CoverTooSmall(BitstashError):
    """Cover image has fewer channel slots than the metadata trailer needs."""


class NameTooLong(BitstashError):
    """Payload file name exceeds the 4096-byte protocol cap."""


class CapacityExceeded(BitstashError):
    """Payload does not fit in the layers the caller allowed.

    Carries the arithmetic so callers can report exactly how far off
    the payload was.
    """

    def __init__(self, message, required_bits=None, available_bits=None,
                 layers_needed=None):
        super().__init__(message)
        self.required_bits = required_bits
        self.available_bits = available_bits
        self.layers_needed = layers_needed


class NotAStegoImage(BitstashError):
    """Trailer magic/version mismatch: the expected outcome on innocent images."""


class CorruptHeader(BitstashError):
    """Trailer parsed but declares sizes the image cannot hold."""


class DimensionMismatch(BitstashError):
    """Two images that must share dimensions do not."""


class InvalidLayer(BitstashError):
    """Bit layer outside 1..8."""


class InvalidChannel(BitstashError):
    """Channel selector is not one of R, G, B, all."""


class UnsafeName(BitstashError):
    """Embedded file name cannot be written safely (path separators etc.)."""
