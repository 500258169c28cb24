"""Bit-exact codec for 24-bit uncompressed Windows BMP files.

Supported subset: "BM" file header + 40-byte BITMAPINFOHEADER, 24 bits
per pixel, BI_RGB (no compression), positive height (bottom-up rows).
Everything else is rejected loudly. Files with a non-canonical pixel
data offset (a gap after the headers) parse fine; serialization always
emits the canonical 54-byte-header form, so ``write(parse(f))`` is
byte-identical only for canonical files.
"""

import struct

from .errors import MalformedHeader, TruncatedPixelData, UnsupportedFormat
from .image import RasterImage

FILE_HEADER_SIZE = 14
INFO_HEADER_SIZE = 40
PIXEL_OFFSET = FILE_HEADER_SIZE + INFO_HEADER_SIZE

_FILE_HEADER = struct.Struct("<2sIHHI")     # magic, file size, reserved x2, pixel offset
_INFO_HEADER = struct.Struct("<IiiHHIIiiII")  # BITMAPINFOHEADER


def row_stride(width: int) -> int:
    """Bytes per stored pixel row: 3*width rounded up to a multiple of 4."""
    return (3 * width + 3) & ~3


def parse_bmp(data: bytes) -> RasterImage:
    """Decode a 24-bit uncompressed bottom-up BMP into a RasterImage.

    Raises MalformedHeader on bad magic or truncated headers,
    UnsupportedFormat on any variant outside the supported subset, and
    TruncatedPixelData when the declared dimensions need more pixel
    bytes than the file holds.
    """
    if len(data) < FILE_HEADER_SIZE:
        raise MalformedHeader(f"file too short for BMP header: {len(data)} bytes")
    magic, _file_size, _res1, _res2, pixel_offset = _FILE_HEADER.unpack_from(data, 0)
    if magic != b"BM":
        raise MalformedHeader(f"bad BMP magic: {magic!r}")
    if len(data) < PIXEL_OFFSET:
        raise MalformedHeader(f"truncated info header: {len(data)} bytes")
    (header_size, width, height, _planes, bpp, compression,
     _image_size, _xppm, _yppm, _clr_used, _clr_important) = _INFO_HEADER.unpack_from(
        data, FILE_HEADER_SIZE)
    if header_size != INFO_HEADER_SIZE:
        raise UnsupportedFormat(f"unsupported DIB header size {header_size}, want 40")
    if bpp != 24:
        raise UnsupportedFormat(f"unsupported bits-per-pixel {bpp}, want 24")
    if compression != 0:
        raise UnsupportedFormat(f"unsupported compression {compression}, want 0 (BI_RGB)")
    if width <= 0:
        raise UnsupportedFormat(f"non-positive width {width}")
    if height <= 0:
        # negative height would mean top-down row order
        raise UnsupportedFormat(f"non-positive height {height} (top-down BMPs unsupported)")
    if pixel_offset < PIXEL_OFFSET:
        raise MalformedHeader(f"pixel data offset {pixel_offset} overlaps headers")

    stride = row_stride(width)
    needed = pixel_offset + stride * height
    if needed > len(data):
        raise TruncatedPixelData(
            f"{width}x{height} needs {needed} bytes, file has {len(data)}")

    row_bytes = 3 * width
    channels = bytearray(row_bytes * height)
    for y in range(height):
        # rows are stored bottom-up; per-pixel order in the file is B,G,R
        src = pixel_offset + (height - 1 - y) * stride
        row = data[src:src + row_bytes]
        dst = row_bytes * y
        channels[dst + 0:dst + row_bytes:3] = row[2::3]
        channels[dst + 1:dst + row_bytes:3] = row[1::3]
        channels[dst + 2:dst + row_bytes:3] = row[0::3]
    return RasterImage(width, height, bytes(channels))


def write_bmp(image: RasterImage) -> bytes:
    """Serialize to the canonical form: 54 header bytes, bottom-up rows,
    zero padding to 4-byte row multiples, optional header fields zeroed."""
    width, height = image.width, image.height
    stride = row_stride(width)
    file_size = PIXEL_OFFSET + stride * height

    out = bytearray(file_size)
    _FILE_HEADER.pack_into(out, 0, b"BM", file_size, 0, 0, PIXEL_OFFSET)
    _INFO_HEADER.pack_into(out, FILE_HEADER_SIZE,
                           INFO_HEADER_SIZE, width, height, 1, 24, 0, 0, 0, 0, 0, 0)

    row_bytes = 3 * width
    for y in range(height):
        src = row_bytes * y
        row = image.channels[src:src + row_bytes]
        dst = PIXEL_OFFSET + (height - 1 - y) * stride
        out[dst + 0:dst + row_bytes:3] = row[2::3]
        out[dst + 1:dst + row_bytes:3] = row[1::3]
        out[dst + 2:dst + row_bytes:3] = row[0::3]
        # padding bytes stay zero from the bytearray allocation
    return bytes(out)
