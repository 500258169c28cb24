# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit kernels; semantics match ``bitstash._kernels_py`` exactly."""

BACKEND = "cython"


def write_bits(unsigned char[::1] channels, Py_ssize_t start,
               const unsigned char[::1] bits,
               const unsigned char[::1] reserved_mask):
    cdef Py_ssize_t n = channels.shape[0]
    cdef Py_ssize_t nbits = bits.shape[0]
    cdef Py_ssize_t i = 0, slot, rank, block
    cdef Py_ssize_t pos = start
    cdef Py_ssize_t layer8 = n
    cdef unsigned char mask, clear

    if nbits == 0:
        return
    for slot in range(n):
        if reserved_mask[slot]:
            layer8 -= 1

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

    block = (pos - layer8) // n
    slot = (pos - layer8) % n
    while i < nbits:
        mask = <unsigned char>(1 << (block + 1))
        clear = <unsigned char>(~mask)
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


def read_bits(const unsigned char[::1] channels, Py_ssize_t start,
              Py_ssize_t count, const unsigned char[::1] reserved_mask,
              unsigned char[::1] out):
    cdef Py_ssize_t n = channels.shape[0]
    cdef Py_ssize_t i = 0, slot, rank, block, shift
    cdef Py_ssize_t pos = start
    cdef Py_ssize_t layer8 = n

    if count == 0:
        return
    for slot in range(n):
        if reserved_mask[slot]:
            layer8 -= 1

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

    block = (pos - layer8) // n
    slot = (pos - layer8) % n
    while i < count:
        shift = block + 1
        while slot < n and i < count:
            out[i] = (channels[slot] >> shift) & 1
            i += 1
            slot += 1
        if slot == n:
            slot = 0
            block += 1


def extract_plane(const unsigned char[::1] channels, int layer,
                  int channel_sel, unsigned char[::1] out):
    cdef Py_ssize_t n = channels.shape[0]
    cdef Py_ssize_t i, base
    cdef int shift = 8 - layer
    cdef unsigned char v

    if channel_sel == 3:
        for i in range(n):
            out[i] = 255 if (channels[i] >> shift) & 1 else 0
    else:
        for base in range(0, n, 3):
            v = 255 if (channels[base + channel_sel] >> shift) & 1 else 0
            out[base] = v
            out[base + 1] = v
            out[base + 2] = v


def layer_counts(const unsigned char[::1] channels):
    cdef Py_ssize_t n = channels.shape[0]
    cdef Py_ssize_t i
    cdef int b
    cdef long long counts[8]
    for b in range(8):
        counts[b] = 0
    for i in range(n):
        for b in range(8):
            counts[7 - b] += (channels[i] >> b) & 1
    return [counts[b] for b in range(8)]


def diff_stats(const unsigned char[::1] a, const unsigned char[::1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    cdef long long sum_sq = 0
    cdef int d, max_dev = 0
    for i in range(n):
        d = a[i] - b[i]
        if d < 0:
            d = -d
        sum_sq += <long long>d * d
        if d > max_dev:
            max_dev = d
    return sum_sq, max_dev
