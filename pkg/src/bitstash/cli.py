"""Command-line front end.

Subcommands: embed, extract, capacity, psnr, bitplane, convert. Reports
go to stdout as one ``key: value`` pair per line; errors go to stderr.

Exit codes:
  0  success
  1  I/O error (unreadable/unwritable files)
  2  payload does not fit (CapacityExceeded, CoverTooSmall, NameTooLong);
     argparse usage errors also exit 2
  3  codec error (malformed/unsupported/truncated image file)
  4  not a stego image (trailer magic mismatch)
  5  corrupt trailer (declared sizes cannot fit the image)
  6  unsafe embedded name (path separators, '.', '..', NUL, empty)
  7  image dimensions do not match
"""

import argparse
import math
import os
import sys
from pathlib import Path

from . import analysis, imagefile, metrics, stego
from .errors import (BitstashError, CapacityExceeded, CorruptHeader,
                     CoverTooSmall, DimensionMismatch, MalformedHeader,
                     NameTooLong, NotAStegoImage, TruncatedPixelData,
                     UnsafeName, UnsupportedFormat)

_EXIT_CODES = (
    (CapacityExceeded, 2),
    (CoverTooSmall, 2),
    (NameTooLong, 2),
    (MalformedHeader, 3),
    (UnsupportedFormat, 3),
    (TruncatedPixelData, 3),
    (NotAStegoImage, 4),
    (CorruptHeader, 5),
    (UnsafeName, 6),
    (DimensionMismatch, 7),
)


def _fail_code(exc) -> int:
    for exc_type, code in _EXIT_CODES:
        if isinstance(exc, exc_type):
            return code
    return 1


def _emit(key, value):
    print(f"{key}: {value}")


def _fmt_psnr(psnr_db) -> str:
    return "inf" if math.isinf(psnr_db) else f"{psnr_db:.4f}"


def _check_name(name: bytes):
    if not name:
        raise UnsafeName("embedded name is empty")
    if b"/" in name or b"\\" in name or b"\x00" in name:
        raise UnsafeName(f"name {name!r} contains a path separator or NUL")
    if name in (b".", b".."):
        raise UnsafeName(f"name {name!r} is a directory reference")


def _cmd_embed(args) -> int:
    cover, fmt = imagefile.load_image(args.cover)
    secret = Path(args.secret).read_bytes()
    name = os.fsencode(args.name) if args.name else os.fsencode(
        Path(args.secret).name)
    _check_name(name)

    payload = stego.Payload(name=name, data=secret)
    out = stego.embed(cover, payload, max_layers=args.max_layers)
    imagefile.save_image(args.out, out, fmt)

    report = stego.capacity(cover, max_layers=args.max_layers)
    quality = metrics.compare(cover, out)
    _emit("format", fmt)
    _emit("name", os.fsdecode(name))
    _emit("bytes embedded", len(name) + len(secret))
    _emit("layers used", stego.layers_used(cover, payload))
    _emit("capacity remaining",
          report.max_payload_plus_name_bytes - len(name) - len(secret))
    _emit("psnr db", _fmt_psnr(quality.psnr_db))
    _emit("output", args.out)
    return 0


def _cmd_extract(args) -> int:
    image, _fmt = imagefile.load_image(args.stego)
    payload = stego.extract(image)
    _check_name(payload.name)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    target = out_dir / os.fsdecode(payload.name)
    target.write_bytes(payload.data)

    _emit("name", os.fsdecode(payload.name))
    _emit("size", len(payload.data))
    _emit("output", str(target))
    return 0


def _cmd_capacity(args) -> int:
    image, _fmt = imagefile.load_image(args.image)
    report = stego.capacity(image, max_layers=args.max_layers)
    _emit("width", report.width)
    _emit("height", report.height)
    _emit("channel slots", report.total_slots)
    _emit("per layer bytes", report.per_layer_bytes)
    _emit("trailer bits", report.trailer_bits)
    _emit("max layers", report.max_layers)
    _emit("max payload plus name bytes", report.max_payload_plus_name_bytes)
    _emit("cover too small", "true" if report.cover_too_small else "false")
    return 0


def _cmd_psnr(args) -> int:
    image_a, _ = imagefile.load_image(args.image_a)
    image_b, _ = imagefile.load_image(args.image_b)
    quality = metrics.compare(image_a, image_b)
    _emit("mse", f"{quality.mse:.6f}")
    _emit("psnr db", _fmt_psnr(quality.psnr_db))
    _emit("max deviation", quality.max_deviation)
    return 0


def _cmd_bitplane(args) -> int:
    image, _ = imagefile.load_image(args.image)
    plane = analysis.extract_bitplane(image, args.layer, args.channel)
    imagefile.save_image(args.out, plane, imagefile.format_for_path(args.out))
    _emit("layer", args.layer)
    _emit("channel", args.channel)
    _emit("output", args.out)
    return 0


def _cmd_convert(args) -> int:
    image, in_fmt = imagefile.load_image(args.input)
    out_fmt = imagefile.format_for_path(args.out)
    imagefile.save_image(args.out, image, out_fmt)
    _emit("input format", in_fmt)
    _emit("output format", out_fmt)
    _emit("output", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitstash",
        description="Hide files inside the bit layers of BMP/PPM images.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a file inside a cover image")
    p.add_argument("cover", help="cover image (BMP or PPM)")
    p.add_argument("secret", help="file to hide")
    p.add_argument("out", help="stego image path (same format as the cover)")
    p.add_argument("--max-layers", type=int, choices=range(1, 9), default=8,
                   metavar="N", help="most layers the stream may occupy (1..8)")
    p.add_argument("--name", help="embedded name (default: secret's base name)")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("extract", help="recover the hidden file")
    p.add_argument("stego", help="stego image")
    p.add_argument("--out-dir", default=".", help="directory for the recovered file")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("capacity", help="report embedding capacity")
    p.add_argument("image")
    p.add_argument("--max-layers", type=int, choices=range(1, 9), default=8,
                   metavar="N")
    p.set_defaults(func=_cmd_capacity)

    p = sub.add_parser("psnr", help="compare two images")
    p.add_argument("image_a")
    p.add_argument("image_b")
    p.set_defaults(func=_cmd_psnr)

    p = sub.add_parser("bitplane", help="render one bit layer as an image")
    p.add_argument("image")
    p.add_argument("out", help="output image (.bmp or .ppm)")
    p.add_argument("--layer", type=int, choices=range(1, 9), required=True,
                   metavar="N", help="1 = most significant, 8 = least")
    p.add_argument("--channel", type=str.lower, default="all",
                   choices=["r", "g", "b", "all"])
    p.set_defaults(func=_cmd_bitplane)

    p = sub.add_parser("convert", help="convert between BMP and PPM")
    p.add_argument("input")
    p.add_argument("out", help="output image (.bmp or .ppm)")
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BitstashError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _fail_code(exc)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
