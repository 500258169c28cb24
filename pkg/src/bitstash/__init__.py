"""bitstash: hide arbitrary files inside uncompressed raster images.

Files are written bit by bit into the color channels, filling the
least significant bit layer of every channel first and climbing to
more significant layers only when the payload demands it, so image
distortion stays as small as the payload allows. BMP and binary PPM
are supported bit-exactly; recovery is lossless.
"""

from . import errors
from .analysis import extract_bitplane, layer_stats
from .bitplane import (BitAddress, TraversalPlan, bit_address, bits_to_bytes,
                       bytes_to_bits, capacity_per_layer, read_bits,
                       write_bits)
from .bmp import parse_bmp, write_bmp
from .image import RasterImage
from .imagefile import (decode_image, detect_format, encode_image,
                        format_for_path, load_image, save_image)
from .kernels import BACKEND as KERNEL_BACKEND
from .metrics import QualityReport, compare
from .ppm import parse_ppm, write_ppm
from .stego import (CapacityReport, Payload, StegoHeader, capacity, embed,
                    extract, layers_used)

__version__ = "0.1.0"

__all__ = [
    "BitAddress",
    "CapacityReport",
    "KERNEL_BACKEND",
    "Payload",
    "QualityReport",
    "RasterImage",
    "StegoHeader",
    "TraversalPlan",
    "bit_address",
    "bits_to_bytes",
    "bytes_to_bits",
    "capacity",
    "capacity_per_layer",
    "compare",
    "decode_image",
    "detect_format",
    "embed",
    "encode_image",
    "errors",
    "extract",
    "extract_bitplane",
    "format_for_path",
    "layer_stats",
    "layers_used",
    "load_image",
    "parse_bmp",
    "parse_ppm",
    "read_bits",
    "save_image",
    "write_bits",
    "write_bmp",
    "write_ppm",
]
