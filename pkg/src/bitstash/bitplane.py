"""Bit-layer addressing and bulk bit I/O over raster images.

Layers are numbered by significance: layer 1 is the most significant
bit of a channel byte (weight 128), layer 8 the least significant
(weight 1), so writing layer n moves the byte by exactly 0 or
2**(8 - n). The linear traversal fills the whole LSB layer first and
climbs only when it runs out: positions start at layer 8 over
non-reserved slots in ascending order, then cover layers 7 down to 1
over ALL slots ascending. Bytes serialize most-significant-bit first
throughout the package.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import PositionOutOfRange
from .image import RasterImage


def capacity_per_layer(width: int, height: int) -> int:
    """Whole bytes one bit layer can store: floor(3*width*height / 8)."""
    if width < 1 or height < 1:
        raise ValueError(f"dimensions must be positive, got {width}x{height}")
    return (3 * width * height) // 8


@dataclass(frozen=True)
class BitAddress:
    """One embeddable bit: channel slot index + layer number (1..8)."""

    slot: int
    layer: int


class TraversalPlan:
    """The bijection from linear bit position to BitAddress for one geometry.

    ``reserved`` slots are skipped in the layer-8 pass only; upper
    layers always sweep every slot. Total positions:
    ``8 * total_slots - len(reserved)``.
    """

    def __init__(self, width: int, height: int, reserved: Iterable[int] = ()):
        if width < 1 or height < 1:
            raise ValueError(f"dimensions must be positive, got {width}x{height}")
        self.width = width
        self.height = height
        self.total_slots = 3 * width * height
        self.reserved = frozenset(reserved)
        for slot in self.reserved:
            if not 0 <= slot < self.total_slots:
                raise ValueError(
                    f"reserved slot {slot} outside 0..{self.total_slots - 1}")
        self._sorted_reserved = sorted(self.reserved)
        self.total_positions = 8 * self.total_slots - len(self.reserved)

    def reserved_mask(self) -> bytes:
        """Per-slot flag buffer in the form the kernels consume."""
        mask = bytearray(self.total_slots)
        for slot in self.reserved:
            mask[slot] = 1
        return bytes(mask)

    def bit_address(self, position: int) -> BitAddress:
        if not 0 <= position < self.total_positions:
            raise PositionOutOfRange(
                f"position {position} outside 0..{self.total_positions - 1}")
        layer8_count = self.total_slots - len(self.reserved)
        if position < layer8_count:
            slot = position
            for taken in self._sorted_reserved:
                if taken <= slot:
                    slot += 1
                else:
                    break
            return BitAddress(slot, 8)
        block, slot = divmod(position - layer8_count, self.total_slots)
        return BitAddress(slot, 7 - block)


def bit_address(position: int, width: int, height: int,
                reserved: Iterable[int] = ()) -> BitAddress:
    """Map a linear bit position to its (slot, layer) address."""
    return TraversalPlan(width, height, reserved).bit_address(position)


def _check_span(plan: TraversalPlan, start: int, count: int):
    if start < 0 or count < 0 or start + count > plan.total_positions:
        raise PositionOutOfRange(
            f"span [{start}, {start + count}) outside addressable range "
            f"0..{plan.total_positions}")


def write_bits(image: RasterImage, start: int, bits: Sequence[int],
               reserved: Iterable[int] = ()) -> RasterImage:
    """Return a copy of ``image`` with ``bits`` written from position ``start``.

    Each nonzero bit sets the addressed layer bit, zero clears it; no
    other bit of the image changes.
    """
    plan = TraversalPlan(image.width, image.height, reserved)
    bits = bytes(bits)
    _check_span(plan, start, len(bits))
    buf = bytearray(image.channels)
    kernels.write_bits(buf, start, bits, plan.reserved_mask())
    return RasterImage(image.width, image.height, bytes(buf))


def read_bits(image: RasterImage, start: int, count: int,
              reserved: Iterable[int] = ()) -> bytes:
    """Read ``count`` bits from position ``start``; one 0/1 byte per bit."""
    plan = TraversalPlan(image.width, image.height, reserved)
    _check_span(plan, start, count)
    out = bytearray(count)
    kernels.read_bits(image.channels, start, count, plan.reserved_mask(), out)
    return bytes(out)


def bytes_to_bits(data: bytes) -> bytes:
    """Unpack bytes into bits, most significant bit of each byte first."""
    out = bytearray(8 * len(data))
    i = 0
    for byte in data:
        for shift in range(7, -1, -1):
            out[i] = (byte >> shift) & 1
            i += 1
    return bytes(out)


def bits_to_bytes(bits: Sequence[int]) -> bytes:
    """Pack bits (nonzero = 1) into bytes, MSB-first; length must be a multiple of 8."""
    if len(bits) % 8:
        raise ValueError(f"bit count {len(bits)} is not a multiple of 8")
    out = bytearray(len(bits) // 8)
    for i, bit in enumerate(bits):
        if bit:
            out[i >> 3] |= 1 << (7 - (i & 7))
    return bytes(out)
