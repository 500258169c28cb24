"""Selects the compiled bit kernels when available, pure Python otherwise.

Set ``BITSTASH_PURE=1`` in the environment to force the fallback (used
by the benchmark and to debug kernel discrepancies).
"""

import os

if os.environ.get("BITSTASH_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # compiled extension
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
write_bits = _impl.write_bits
read_bits = _impl.read_bits
extract_plane = _impl.extract_plane
layer_counts = _impl.layer_counts
diff_stats = _impl.diff_stats
