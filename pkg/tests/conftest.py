"""Shared fixtures and brute-force reference helpers.

The ref_* functions re-derive the bit conventions directly from their
written definitions (layer weights, traversal order, MSB-first bytes)
without calling any package traversal code, so tests check the
implementation against an independent oracle.
"""

import pytest

from bitstash.image import RasterImage

import bitstash._kernels_py as kernels_py

try:
    import bitstash._kernels as kernels_cy
except ImportError:
    kernels_cy = None

KERNEL_IMPLS = [kernels_py] + ([kernels_cy] if kernels_cy is not None else [])


@pytest.fixture(params=KERNEL_IMPLS, ids=lambda mod: mod.BACKEND)
def kernel_impl(request):
    return request.param


def ref_bit(value, layer):
    # layer n holds the bit of weight 2**(8-n)
    return (value >> (8 - layer)) & 1


def ref_positions(n_slots, reserved=frozenset()):
    """Traversal order as (slot, layer) pairs: layer 8 over non-reserved
    slots ascending, then layers 7..1 over all slots ascending."""
    order = [(s, 8) for s in range(n_slots) if s not in reserved]
    for layer in range(7, 0, -1):
        order.extend((s, layer) for s in range(n_slots))
    return order


def ref_bits_of_bytes(data):
    return [(byte >> (7 - i)) & 1 for byte in data for i in range(8)]


def ref_bytes_of_bits(bits):
    assert len(bits) % 8 == 0
    out = []
    for i in range(0, len(bits), 8):
        value = 0
        for bit in bits[i:i + 8]:
            value = (value << 1) | (1 if bit else 0)
        out.append(value)
    return bytes(out)


def ref_read_stream(image, start, count, reserved=frozenset()):
    order = ref_positions(image.slot_count, reserved)
    return [ref_bit(image.channels[s], layer)
            for s, layer in order[start:start + count]]


def ref_changed_bits(before, after):
    """All (slot, layer) pairs whose bit differs between two images."""
    changed = set()
    for slot, (a, b) in enumerate(zip(before.channels, after.channels)):
        if a != b:
            for layer in range(1, 9):
                if ref_bit(a, layer) != ref_bit(b, layer):
                    changed.add((slot, layer))
    return changed


def random_image(rng, width, height):
    return RasterImage(width, height, rng.randbytes(3 * width * height))
