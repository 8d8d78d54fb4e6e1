"""Element sets as Python integer bitmasks.

Sets of ring elements show up by the thousand during lattice enumeration,
so they are stored as arbitrary-precision integers: bit i set means element
i is in the set. Intersection, union and subset tests become single integer
operations.
"""

from __future__ import annotations

import numpy as np


def from_indices(indices) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def from_mask(mask: np.ndarray) -> int:
    # packbits packs most-significant-bit first within each byte, so flip
    # each 8-block before packing and read the result little-endian.
    padded = np.zeros((mask.size + 7) // 8 * 8, dtype=bool)
    padded[: mask.size] = mask
    chunks = padded.reshape(-1, 8)[:, ::-1]
    return int.from_bytes(np.packbits(chunks).tobytes(), "little")


def to_indices(bits: int) -> np.ndarray:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return np.asarray(out, dtype=np.int64)


def to_mask(bits: int, size: int) -> np.ndarray:
    raw = bits.to_bytes((size + 7) // 8, "little")
    arr = np.frombuffer(raw, dtype=np.uint8)
    expanded = np.unpackbits(arr).reshape(-1, 8)[:, ::-1].ravel()
    return expanded[:size].astype(bool)


def popcount(bits: int) -> int:
    return bits.bit_count()


def issubset(a: int, b: int) -> bool:
    return a & ~b == 0
