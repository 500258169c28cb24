"""Cover-vs-stego fidelity numbers: MSE, PSNR and the worst channel deviation.

Embedding k layers (counting from the LSB) bounds the deviation at
2**k - 1, so an LSB-only embed keeps PSNR at or above
20*log10(255) = 48.13 dB.
"""

import math
from dataclasses import dataclass

from . import kernels
from .errors import DimensionMismatch
from .image import RasterImage


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_db: float  # math.inf when the images are identical
    max_deviation: int


def compare(cover: RasterImage, stego: RasterImage) -> QualityReport:
    """Quality metrics over all channel bytes of two same-sized images."""
    if (cover.width, cover.height) != (stego.width, stego.height):
        raise DimensionMismatch(
            f"{cover.width}x{cover.height} vs {stego.width}x{stego.height}")
    sum_sq, max_dev = kernels.diff_stats(cover.channels, stego.channels)
    mse = sum_sq / cover.slot_count
    psnr = math.inf if mse == 0 else 10 * math.log10(255 * 255 / mse)
    return QualityReport(mse=mse, psnr_db=psnr, max_deviation=max_dev)
