"""Pure-Python bit kernels; fallback when the compiled extension is absent.

The compiled module ``bitstash._kernels`` exposes the same five
functions with identical semantics. Callers validate all arguments;
kernels assume ranges are in bounds.

Shared conventions:
  * ``channels`` is one byte per channel slot, length n.
  * ``reserved_mask`` is length n, nonzero marking slots excluded from
    the LSB layer pass (upper layers always use every slot).
  * bit positions run layer 8 (LSB) over non-reserved slots ascending,
    then layers 7..1 over all slots ascending.
  * bit buffers hold one byte per bit; any nonzero byte writes a 1.
"""

BACKEND = "pure-python"


def write_bits(channels, start, bits, reserved_mask):
    """Set the addressed layer bits of ``channels`` in place."""
    n = len(channels)
    nbits = len(bits)
    if nbits == 0:
        return
    layer8 = n - sum(1 for f in reserved_mask if f)

    i = 0
    pos = start
    if pos < layer8:
        rank = 0
        for slot in range(n):
            if reserved_mask[slot]:
                continue
            if rank >= pos:
                if bits[i]:
                    channels[slot] |= 1
                else:
                    channels[slot] &= 0xFE
                i += 1
                if i == nbits:
                    return
            rank += 1
        pos = layer8

    block, slot = divmod(pos - layer8, n)
    while i < nbits:
        mask = 1 << (block + 1)  # layer 7 - block has weight 2**(block+1)
        clear = ~mask & 0xFF
        while slot < n and i < nbits:
            if bits[i]:
                channels[slot] |= mask
            else:
                channels[slot] &= clear
            i += 1
            slot += 1
        if slot == n:
            slot = 0
            block += 1


def read_bits(channels, start, count, reserved_mask, out):
    """Fill ``out[:count]`` with the addressed layer bits (0 or 1)."""
    n = len(channels)
    if count == 0:
        return
    layer8 = n - sum(1 for f in reserved_mask if f)

    i = 0
    pos = start
    if pos < layer8:
        rank = 0
        for slot in range(n):
            if reserved_mask[slot]:
                continue
            if rank >= pos:
                out[i] = channels[slot] & 1
                i += 1
                if i == count:
                    return
            rank += 1
        pos = layer8

    block, slot = divmod(pos - layer8, n)
    while i < count:
        shift = block + 1
        while slot < n and i < count:
            out[i] = (channels[slot] >> shift) & 1
            i += 1
            slot += 1
        if slot == n:
            slot = 0
            block += 1


def extract_plane(channels, layer, channel_sel, out):
    """Render one bit layer as 0/255 bytes into ``out``.

    ``channel_sel`` 0..2 picks R, G or B and replicates its bit across
    the whole pixel (monochrome); 3 maps every channel independently.
    """
    n = len(channels)
    shift = 8 - layer
    if channel_sel == 3:
        for i in range(n):
            out[i] = 255 if (channels[i] >> shift) & 1 else 0
    else:
        for base in range(0, n, 3):
            v = 255 if (channels[base + channel_sel] >> shift) & 1 else 0
            out[base] = v
            out[base + 1] = v
            out[base + 2] = v


def layer_counts(channels):
    """Count of 1-bits per layer; index 0 is layer 1 (MSB), 7 is layer 8."""
    counts = [0] * 8
    for v in channels:
        for b in range(8):
            counts[7 - b] += (v >> b) & 1
    return counts


def diff_stats(a, b):
    """(sum of squared differences, max absolute difference) over two buffers."""
    sum_sq = 0
    max_dev = 0
    for x, y in zip(a, b):
        d = x - y if x >= y else y - x
        sum_sq += d * d
        if d > max_dev:
            max_dev = d
    return sum_sq, max_dev
