"""Embed/extract protocol: trailer in the bottom-right slots, name+data
stream climbing from the LSB layer.

Wire format (see FORMAT.md for the normative write-up):

  * trailer: 64 bits in layer 8 of the LAST 64 channel slots, ascending
    slot order: magic 0xA5 (8b), version 0x01 (8b), name length (u16),
    payload size (u32), each field MSB-first.
  * main stream: name bytes then data bytes, MSB-first per byte, at
    traversal positions 0.. with the 64 trailer slots reserved.

Layers beyond what the stream needs are never touched, so the maximum
channel deviation after embedding k layers is 2**k - 1.
"""

import struct
from dataclasses import dataclass

from . import bitplane
from .errors import (CapacityExceeded, CorruptHeader, CoverTooSmall,
                     NameTooLong, NotAStegoImage)
from .image import RasterImage

MAGIC = 0xA5
VERSION = 0x01
TRAILER_SLOTS = 64
TRAILER_BITS = 64
NAME_LENGTH_CAP = 4096

_TRAILER = struct.Struct(">BBHI")


@dataclass(frozen=True)
class StegoHeader:
    """The 64-bit metadata trailer."""

    name_length: int
    payload_size: int
    magic: int = MAGIC
    version: int = VERSION

    def pack(self) -> bytes:
        return _TRAILER.pack(self.magic, self.version,
                             self.name_length, self.payload_size)

    @classmethod
    def unpack(cls, raw: bytes) -> "StegoHeader":
        magic, version, name_length, payload_size = _TRAILER.unpack(raw)
        if magic != MAGIC or version != VERSION:
            raise NotAStegoImage(
                f"trailer magic/version {magic:#04x}/{version:#04x}, "
                f"want {MAGIC:#04x}/{VERSION:#04x}")
        return cls(name_length=name_length, payload_size=payload_size,
                   magic=magic, version=version)


@dataclass(frozen=True)
class Payload:
    """The hidden file: raw name bytes + content bytes."""

    name: bytes
    data: bytes

    def __post_init__(self):
        object.__setattr__(self, "name", bytes(self.name))
        object.__setattr__(self, "data", bytes(self.data))


@dataclass(frozen=True)
class CapacityReport:
    """Capacity accounting for one cover at one layer cap."""

    width: int
    height: int
    total_slots: int
    per_layer_bytes: int
    trailer_bits: int
    max_layers: int
    max_payload_plus_name_bytes: int
    cover_too_small: bool

    def layers_required(self, total_bytes: int) -> int:
        """Minimal layer count holding a name+data stream of ``total_bytes``."""
        if self.cover_too_small:
            raise CoverTooSmall(
                f"cover has {self.total_slots} slots, trailer needs {TRAILER_SLOTS}")
        required = 8 * total_bytes + TRAILER_BITS
        layers = max(1, -(-required // self.total_slots))  # ceil division
        if layers > 8:
            raise CapacityExceeded(
                f"{total_bytes} bytes need {layers} layers, only 8 exist",
                required_bits=8 * total_bytes,
                available_bits=8 * self.total_slots - TRAILER_BITS,
                layers_needed=layers)
        return layers


def capacity(cover: RasterImage, max_layers: int = 8) -> CapacityReport:
    """Capacity accounting for ``cover`` when at most ``max_layers`` may be used."""
    _check_max_layers(max_layers)
    n = cover.slot_count
    too_small = n < TRAILER_SLOTS
    usable_bits = 0 if too_small else max_layers * n - TRAILER_BITS
    return CapacityReport(
        width=cover.width,
        height=cover.height,
        total_slots=n,
        per_layer_bytes=bitplane.capacity_per_layer(cover.width, cover.height),
        trailer_bits=TRAILER_BITS,
        max_layers=max_layers,
        max_payload_plus_name_bytes=usable_bits // 8,
        cover_too_small=too_small,
    )


def layers_used(cover: RasterImage, payload: Payload) -> int:
    """Layers the main stream for ``payload`` occupies in ``cover`` (1..8)."""
    return capacity(cover).layers_required(len(payload.name) + len(payload.data))


def embed(cover: RasterImage, payload: Payload, max_layers: int = 8) -> RasterImage:
    """Hide ``payload`` in a copy of ``cover``; the cover is not mutated.

    Raises CoverTooSmall below 64 channel slots, NameTooLong above the
    4096-byte name cap, CapacityExceeded when the stream does not fit
    in ``max_layers`` layers.
    """
    _check_max_layers(max_layers)
    n = cover.slot_count
    if n < TRAILER_SLOTS:
        raise CoverTooSmall(
            f"cover has {n} channel slots, trailer needs {TRAILER_SLOTS}")
    if not payload.name:
        raise ValueError("payload name must not be empty")
    if len(payload.name) > NAME_LENGTH_CAP:
        raise NameTooLong(
            f"name is {len(payload.name)} bytes, cap is {NAME_LENGTH_CAP}")

    stream = payload.name + payload.data
    required_bits = 8 * len(stream)
    available_bits = max_layers * n - TRAILER_BITS
    if required_bits > available_bits:
        raise CapacityExceeded(
            f"payload needs {required_bits} bits, {available_bits} available "
            f"in {max_layers} layer(s) "
            f"(minimum {-(-(required_bits + TRAILER_BITS) // n)} layers)",
            required_bits=required_bits,
            available_bits=available_bits,
            layers_needed=-(-(required_bits + TRAILER_BITS) // n))

    trailer_slots = range(n - TRAILER_SLOTS, n)
    header = StegoHeader(name_length=len(payload.name), payload_size=len(payload.data))
    stego = bitplane.write_bits(cover, 0, bitplane.bytes_to_bits(stream),
                                reserved=trailer_slots)

    buf = bytearray(stego.channels)
    for i, bit in enumerate(bitplane.bytes_to_bits(header.pack())):
        slot = n - TRAILER_SLOTS + i
        buf[slot] = (buf[slot] & 0xFE) | bit
    return RasterImage(cover.width, cover.height, bytes(buf))


def extract(stego: RasterImage) -> Payload:
    """Recover the payload hidden by :func:`embed`.

    Raises NotAStegoImage on trailer magic/version mismatch (the normal
    outcome on innocent images) and CorruptHeader when the declared
    sizes cannot fit the image.
    """
    n = stego.slot_count
    if n < TRAILER_SLOTS:
        raise CoverTooSmall(
            f"image has {n} channel slots, trailer needs {TRAILER_SLOTS}")

    trailer_bits = bytes(
        stego.channels[slot] & 1 for slot in range(n - TRAILER_SLOTS, n))
    header = StegoHeader.unpack(bitplane.bits_to_bytes(trailer_bits))

    if not 1 <= header.name_length <= NAME_LENGTH_CAP:
        raise CorruptHeader(
            f"declared name length {header.name_length} outside "
            f"1..{NAME_LENGTH_CAP}")
    total_bits = 8 * (header.name_length + header.payload_size)
    if total_bits > 8 * n - TRAILER_BITS:
        raise CorruptHeader(
            f"declared stream of {total_bits} bits exceeds the "
            f"{8 * n - TRAILER_BITS} addressable bits")

    bits = bitplane.read_bits(stego, 0, total_bits,
                              reserved=range(n - TRAILER_SLOTS, n))
    stream = bitplane.bits_to_bytes(bits)
    return Payload(name=stream[:header.name_length],
                   data=stream[header.name_length:])


def _check_max_layers(max_layers: int):
    if not 1 <= max_layers <= 8:
        raise ValueError(f"max_layers must be within 1..8, got {max_layers}")
