"""Magic-byte format detection and path-level image I/O for the CLI."""

from pathlib import Path

from . import bmp, ppm
from .errors import UnsupportedFormat
from .image import RasterImage

BMP = "bmp"
PPM = "ppm"

_EXTENSIONS = {".bmp": BMP, ".ppm": PPM}


def detect_format(data: bytes) -> str:
    if data[:2] == b"BM":
        return BMP
    if data[:2] == b"P6":
        return PPM
    raise UnsupportedFormat(
        f"unrecognized image magic {data[:2]!r} (supported: BMP, binary PPM)")


def decode_image(data: bytes) -> tuple[RasterImage, str]:
    fmt = detect_format(data)
    if fmt == BMP:
        return bmp.parse_bmp(data), fmt
    return ppm.parse_ppm(data), fmt


def encode_image(image: RasterImage, fmt: str) -> bytes:
    if fmt == BMP:
        return bmp.write_bmp(image)
    if fmt == PPM:
        return ppm.write_ppm(image)
    raise UnsupportedFormat(f"unknown output format {fmt!r}")


def format_for_path(path) -> str:
    """Output format implied by a file extension (.bmp or .ppm)."""
    suffix = Path(path).suffix.lower()
    try:
        return _EXTENSIONS[suffix]
    except KeyError:
        raise UnsupportedFormat(
            f"cannot infer format from extension {suffix!r} "
            f"(use .bmp or .ppm)") from None


def load_image(path) -> tuple[RasterImage, str]:
    data = Path(path).read_bytes()
    return decode_image(data)


def save_image(path, image: RasterImage, fmt: str):
    Path(path).write_bytes(encode_image(image, fmt))
