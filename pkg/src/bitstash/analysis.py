"""Bit-plane inspection: render one layer as a viewable image, count bits.

Plane images use 0/255 (not 0/1) so ordinary viewers show the pattern.
Selecting a single channel replicates that channel's bit across the
pixel (a monochrome rendering); ``all`` maps each channel independently,
which is the form that reconstructs the original when the eight planes
are recombined with their layer weights.
"""

from . import kernels
from .errors import InvalidChannel, InvalidLayer
from .image import RasterImage

_CHANNEL_INDEX = {"r": 0, "g": 1, "b": 2, "all": 3}


def extract_bitplane(image: RasterImage, layer: int,
                     channel: str = "all") -> RasterImage:
    """Image of the same size showing ``layer``'s bits as 0/255."""
    if not isinstance(layer, int) or not 1 <= layer <= 8:
        raise InvalidLayer(f"layer must be an integer in 1..8, got {layer!r}")
    try:
        sel = _CHANNEL_INDEX[str(channel).lower()]
    except KeyError:
        raise InvalidChannel(
            f"channel must be one of R, G, B, all; got {channel!r}") from None
    out = bytearray(image.slot_count)
    kernels.extract_plane(image.channels, layer, sel, out)
    return RasterImage(image.width, image.height, bytes(out))


def layer_stats(image: RasterImage) -> dict[int, int]:
    """Count of 1-bits in each layer, keyed 1 (MSB) through 8 (LSB)."""
    counts = kernels.layer_counts(image.channels)
    return {layer: counts[layer - 1] for layer in range(1, 9)}
