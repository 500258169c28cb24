"""PPM (P6) codec tests, including cross-codec equivalence with BMP."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bitstash.bmp import parse_bmp, write_bmp
from bitstash.errors import MalformedHeader, TruncatedPixelData, UnsupportedFormat
from bitstash.image import RasterImage
from bitstash.ppm import parse_ppm, write_ppm


def test_parse_minimal():
    img = parse_ppm(b"P6\n1 1\n255\n" + bytes([255, 0, 0]))
    assert img == RasterImage(1, 1, bytes([255, 0, 0]))


def test_parse_with_comment_lines():
    plain = parse_ppm(b"P6\n2 1\n255\n" + bytes(6))
    commented = parse_ppm(b"P6\n# a comment\n2 1\n# another\n255\n" + bytes(6))
    assert commented == plain


def test_parse_comment_between_digits_fields():
    img = parse_ppm(b"P6 2\n#c\n1 255\n" + bytes(range(6)))
    assert img == RasterImage(2, 1, bytes(range(6)))


def test_parse_crlf_and_mixed_whitespace():
    img = parse_ppm(b"P6\r\n1\t1  255\n" + bytes([1, 2, 3]))
    assert img == RasterImage(1, 1, bytes([1, 2, 3]))


def test_parse_trailing_bytes_tolerated():
    img = parse_ppm(b"P6\n1 1\n255\n" + bytes([9, 8, 7]) + b"\n")
    assert img.channels == bytes([9, 8, 7])


def test_parse_ascii_variant_rejected():
    with pytest.raises(UnsupportedFormat):
        parse_ppm(b"P3\n1 1\n255\n1 2 3\n")


def test_parse_bad_magic():
    with pytest.raises(UnsupportedFormat):
        parse_ppm(b"no image at all")


def test_parse_magic_fused_with_digit():
    with pytest.raises(MalformedHeader):
        parse_ppm(b"P61 1 255\n" + bytes(3))


def test_parse_maxval_rejected():
    with pytest.raises(UnsupportedFormat):
        parse_ppm(b"P6\n1 1\n65535\n" + bytes(6))


def test_parse_zero_dimension_rejected():
    with pytest.raises(UnsupportedFormat):
        parse_ppm(b"P6\n0 1\n255\n")


def test_parse_missing_header_field():
    with pytest.raises(MalformedHeader):
        parse_ppm(b"P6\n1 1\n")


def test_parse_non_numeric_field():
    with pytest.raises(MalformedHeader):
        parse_ppm(b"P6\nwide 1\n255\n" + bytes(3))


def test_parse_truncated_pixels():
    with pytest.raises(TruncatedPixelData):
        parse_ppm(b"P6\n2 2\n255\n" + bytes(11))


def test_write_canonical_header():
    out = write_ppm(RasterImage(2, 1, bytes([1, 2, 3, 4, 5, 6])))
    assert out == b"P6\n2 1\n255\n\x01\x02\x03\x04\x05\x06"


@settings(deadline=None)
@given(st.data())
def test_round_trip_identity(data):
    width = data.draw(st.integers(1, 64))
    height = data.draw(st.integers(1, 64))
    channels = data.draw(st.binary(min_size=3 * width * height,
                                   max_size=3 * width * height))
    img = RasterImage(width, height, channels)
    assert parse_ppm(write_ppm(img)) == img


@settings(deadline=None)
@given(st.data())
def test_cross_codec_equivalence(data):
    width = data.draw(st.integers(1, 16))
    height = data.draw(st.integers(1, 16))
    channels = data.draw(st.binary(min_size=3 * width * height,
                                   max_size=3 * width * height))
    img = RasterImage(width, height, channels)
    assert parse_bmp(write_bmp(img)) == parse_ppm(write_ppm(img)) == img
