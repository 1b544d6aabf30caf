"""Dense boolean-array helpers shared by the set algorithms."""
from __future__ import annotations

import numpy as np


def suffix_any(a: np.ndarray, axis: int) -> np.ndarray:
    """out[..., k, ...] = any(a[..., k:, ...]) along `axis`."""
    flipped = np.flip(a, axis=axis)
    return np.flip(np.logical_or.accumulate(flipped, axis=axis), axis=axis)


def strict_suffix_any(a: np.ndarray, axis: int) -> np.ndarray:
    """out[..., k, ...] = any(a[..., k+1:, ...]) along `axis`."""
    s = suffix_any(a, axis)
    out = np.zeros_like(s)
    src = [slice(None)] * a.ndim
    dst = [slice(None)] * a.ndim
    src[axis] = slice(1, None)
    dst[axis] = slice(0, -1)
    out[tuple(dst)] = s[tuple(src)]
    return out


def along(v: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    """Reshape a 1-d vector so it broadcasts along `axis` of an ndim array."""
    shape = [1] * ndim
    shape[axis] = v.shape[0]
    return v.reshape(shape)


def box_slices(lo, hi) -> tuple:
    return tuple(slice(l, h + 1) for l, h in zip(lo, hi))
