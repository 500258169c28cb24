"""Compare the compiled bit kernels against the pure-Python fallbacks.

Times each kernel on a 512x512 cover plus a full embed/extract round
trip through the public API. Run as ``python3 benchmarks/bench_kernels.py``.
"""

import importlib
import random
import time

from bitstash import kernels
from bitstash.image import RasterImage
from bitstash.stego import Payload, capacity, embed, extract

WIDTH = HEIGHT = 512
SLOTS = 3 * WIDTH * HEIGHT
STREAM_BITS = 4 * SLOTS - 64  # four layers' worth of payload


def load_backends():
    backends = [importlib.import_module("bitstash._kernels_py")]
    try:
        backends.append(importlib.import_module("bitstash._kernels"))
    except ImportError:
        print("compiled extension not built; timing pure python only")
    return backends


def best_of(repeats, fn):
    return min(timed(fn) for _ in range(repeats))


def timed(fn):
    started = time.perf_counter()
    fn()
    return time.perf_counter() - started


def bench_kernels(mod, channels, reserved_mask, bits):
    out_bits = bytearray(STREAM_BITS)
    plane = bytearray(SLOTS)
    rows = {}
    buf = bytearray(channels)
    rows["write_bits"] = best_of(
        3, lambda: mod.write_bits(buf, 0, bits, reserved_mask))
    rows["read_bits"] = best_of(
        3, lambda: mod.read_bits(buf, 0, STREAM_BITS, reserved_mask, out_bits))
    rows["extract_plane"] = best_of(
        3, lambda: mod.extract_plane(buf, 8, 3, plane))
    rows["layer_counts"] = best_of(3, lambda: mod.layer_counts(buf))
    rows["diff_stats"] = best_of(3, lambda: mod.diff_stats(buf, channels))
    return rows


def main():
    rng = random.Random(7)
    channels = rng.randbytes(SLOTS)
    bits = bytes(rng.getrandbits(1) for _ in range(STREAM_BITS))
    reserved_mask = bytes(
        1 if s >= SLOTS - 64 else 0 for s in range(SLOTS))

    results = {mod.BACKEND: bench_kernels(mod, channels, reserved_mask, bits)
               for mod in load_backends()}

    names = list(next(iter(results.values())))
    header = f"{'kernel':<16}" + "".join(f"{b:>16}" for b in results)
    print(header)
    print("-" * len(header))
    for name in names:
        row = f"{name:<16}"
        for backend in results:
            row += f"{results[backend][name] * 1000:>13.2f} ms"
        print(row)
    if len(results) == 2:
        pure, fast = (results["pure-python"], results["cython"])
        print("\nspeedup (pure / cython):")
        for name in names:
            print(f"  {name:<16}{pure[name] / fast[name]:>8.1f}x")

    cover = RasterImage(WIDTH, HEIGHT, channels)
    limit = capacity(cover).max_payload_plus_name_bytes
    payload = Payload(name=b"bench.bin", data=rng.randbytes(limit // 2))
    stego = embed(cover, payload)
    assert extract(stego) == payload
    embed_s = best_of(3, lambda: embed(cover, payload))
    extract_s = best_of(3, lambda: extract(stego))
    print(f"\nend-to-end with active backend ({kernels.BACKEND}), "
          f"{WIDTH}x{HEIGHT} cover, {limit // 2} byte payload:")
    print(f"  embed  {embed_s * 1000:9.2f} ms")
    print(f"  extract{extract_s * 1000:9.2f} ms")


if __name__ == "__main__":
    main()
