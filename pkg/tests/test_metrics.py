import math
import random

import pytest

from bitstash.errors import DimensionMismatch
from bitstash.image import RasterImage
from bitstash.metrics import compare
from bitstash.stego import Payload, embed, layers_used

from conftest import random_image


def test_identical_images():
    image = random_image(random.Random(3), 9, 7)
    report = compare(image, image)
    assert report.mse == 0.0
    assert report.psnr_db == math.inf
    assert report.max_deviation == 0


def test_uniform_unit_deviation():
    a = RasterImage(4, 4, bytes([10]) * 48)
    b = RasterImage(4, 4, bytes([11]) * 48)
    report = compare(a, b)
    assert report.mse == 1.0
    assert report.psnr_db == pytest.approx(48.1308036086791, abs=1e-10)
    assert report.max_deviation == 1


def test_single_channel_deviation():
    a = RasterImage(1, 1, bytes([100, 100, 100]))
    b = RasterImage(1, 1, bytes([102, 100, 100]))
    report = compare(a, b)
    assert report.mse == pytest.approx(4 / 3)
    assert report.psnr_db == pytest.approx(46.8814162425961, abs=1e-10)
    assert report.max_deviation == 2


def test_compare_is_symmetric():
    rng = random.Random(17)
    a = random_image(rng, 6, 5)
    b = random_image(rng, 6, 5)
    assert compare(a, b) == compare(b, a)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compare(RasterImage(2, 3, bytes(18)), RasterImage(3, 2, bytes(18)))


def test_matches_direct_computation():
    rng = random.Random(8)
    a = random_image(rng, 12, 12)
    b = random_image(rng, 12, 12)
    report = compare(a, b)
    diffs = [(x - y) ** 2 for x, y in zip(a.channels, b.channels)]
    mse = sum(diffs) / len(diffs)
    assert report.mse == pytest.approx(mse)
    assert report.psnr_db == pytest.approx(10 * math.log10(255 ** 2 / mse))
    assert report.max_deviation == max(
        abs(x - y) for x, y in zip(a.channels, b.channels))


def test_single_layer_embed_meets_psnr_floor():
    rng = random.Random(4)
    for _ in range(10):
        cover = random_image(rng, 16, 16)
        payload = Payload(name=b"p", data=rng.randbytes(30))
        assert layers_used(cover, payload) == 1
        report = compare(cover, embed(cover, payload))
        assert report.max_deviation <= 1
        assert report.psnr_db >= 48.1308036086791 - 1e-9
