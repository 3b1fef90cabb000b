"""Exact cyclic convolution kernels via Kronecker substitution.

A vector of nonnegative integer counts is packed into one big integer with
fixed-width buckets; a single integer multiplication then performs the
whole convolution with no rounding anywhere. The bucket width is chosen so
no coefficient can carry into its neighbour.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

try:
    import gmpy2

    _HAS_GMPY2 = True
except ImportError:  # pragma: no cover
    _HAS_GMPY2 = False


def _bigmul(a: int, b: int) -> int:
    if _HAS_GMPY2 and (a.bit_length() > 8192 or b.bit_length() > 8192):
        return int(gmpy2.mpz(a) * gmpy2.mpz(b))
    return a * b


def cyclic_counts_01(abits: np.ndarray, bbits: np.ndarray, n: int) -> np.ndarray:
    """Cyclic convolution counts of two 0/1 vectors of length n.

    Counts are bounded by n, so 64-bit buckets cannot carry for any
    modulus this package targets. Returns a uint64 array of length n.
    """
    if not (abits.any() and bbits.any()):
        return np.zeros(n, dtype=np.uint64)
    abuf = np.zeros(n, dtype="<u8")
    abuf[abits] = 1
    bbuf = np.zeros(n, dtype="<u8")
    bbuf[bbits] = 1
    a = int.from_bytes(abuf.tobytes(), "little")
    b = int.from_bytes(bbuf.tobytes(), "little")
    raw = _bigmul(a, b).to_bytes(2 * n * 8, "little")
    linear = np.frombuffer(raw, dtype="<u8").copy()
    counts = linear[:n]
    counts[: n - 1] += linear[n : 2 * n - 1]
    return counts


def cyclic_convolve_exact(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Exact cyclic convolution of two length-n vectors of nonnegative ints.

    Entries may be arbitrarily large; the bucket width adapts to the
    worst-case coefficient n * max(a) * max(b).
    """
    if len(a) != n or len(b) != n:
        raise ValueError("vectors must have length n")
    maxa = max(a, default=0)
    maxb = max(b, default=0)
    if maxa < 0 or maxb < 0 or min(a, default=0) < 0 or min(b, default=0) < 0:
        raise ValueError("entries must be nonnegative")
    if maxa == 0 or maxb == 0:
        return [0] * n
    width_bytes = ((n * maxa * maxb).bit_length() + 8) // 8
    packed_a = _pack(a, width_bytes)
    packed_b = _pack(b, width_bytes)
    raw = _bigmul(packed_a, packed_b).to_bytes(2 * n * width_bytes, "little")
    out = [0] * n
    for i in range(2 * n - 1):
        v = int.from_bytes(raw[i * width_bytes : (i + 1) * width_bytes], "little")
        if v:
            out[i % n] += v
    return out


def cyclic_power_exact(a: Sequence[int], j: int, n: int) -> list[int]:
    """J-fold cyclic self-convolution by binary exponentiation, exact."""
    if j < 1:
        raise ValueError("exponent must be >= 1")
    base = list(a)
    result: list[int] | None = None
    while j:
        if j & 1:
            result = base if result is None else cyclic_convolve_exact(result, base, n)
        j >>= 1
        if j:
            base = cyclic_convolve_exact(base, base, n)
    assert result is not None
    return result


def _pack(values: Sequence[int], width_bytes: int) -> int:
    buf = bytearray(len(values) * width_bytes)
    for i, v in enumerate(values):
        if v:
            chunk = v.to_bytes((v.bit_length() + 7) // 8, "little")
            buf[i * width_bytes : i * width_bytes + len(chunk)] = chunk
    return int.from_bytes(bytes(buf), "little")
