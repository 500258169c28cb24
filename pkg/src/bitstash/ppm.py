"""Binary PPM (P6) codec, the lossless "other picture type" next to BMP.

Only the P6 variant with maxval 255 is accepted. Header comments
(``#`` to end of line) are skipped wherever whitespace may appear.
PPM already stores R,G,B top-down, so pixel bytes copy through
unchanged. Output is canonical: ``P6\\n<w> <h>\\n255\\n`` + raw bytes.
"""

from .errors import MalformedHeader, TruncatedPixelData, UnsupportedFormat
from .image import RasterImage

_WHITESPACE = b" \t\n\r\x0b\x0c"
_DIGITS = b"0123456789"


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        if data[pos] in _WHITESPACE:
            pos += 1
        elif data[pos] == 0x23:  # '#'
            while pos < len(data) and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    return pos


def _read_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    start = pos
    while pos < len(data) and data[pos] in _DIGITS:
        pos += 1
    if pos == start:
        raise MalformedHeader(f"expected integer for {what} at byte {start}")
    return int(data[start:pos]), pos


def parse_ppm(data: bytes) -> RasterImage:
    """Decode a binary P6 PPM with maxval 255."""
    if data[:2] != b"P6":
        raise UnsupportedFormat(f"not a binary PPM (magic {data[:2]!r}, want b'P6')")
    if len(data) < 3 or (data[2] not in _WHITESPACE and data[2] != 0x23):
        raise MalformedHeader("missing whitespace after PPM magic")

    pos = 2
    fields = []
    for what in ("width", "height", "maxval"):
        pos = _skip_space_and_comments(data, pos)
        value, pos = _read_int(data, pos, what)
        fields.append(value)
    width, height, maxval = fields

    if maxval != 255:
        raise UnsupportedFormat(f"unsupported maxval {maxval}, want 255")
    if width <= 0 or height <= 0:
        raise UnsupportedFormat(f"non-positive dimensions {width}x{height}")

    # exactly one whitespace byte separates the header from pixel data
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise MalformedHeader("missing whitespace byte before pixel data")
    pos += 1

    needed = 3 * width * height
    pixels = data[pos:pos + needed]
    if len(pixels) < needed:
        raise TruncatedPixelData(
            f"{width}x{height} needs {needed} pixel bytes, file has {len(pixels)}")
    return RasterImage(width, height, pixels)


def write_ppm(image: RasterImage) -> bytes:
    """Serialize to canonical P6 output."""
    header = b"P6\n%d %d\n255\n" % (image.width, image.height)
    return header + image.channels
