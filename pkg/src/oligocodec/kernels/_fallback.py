"""NumPy implementations of the hot kernels.

Selected when the compiled extension is unavailable (or forced via
``OLIGOCODEC_PURE=1``). Must stay numerically identical to
``_native.pyx``: same per-element arithmetic, no reordering.
"""

from __future__ import annotations

import numpy as np

# CDF 9/7 lifting constants (Daubechies-Sweldens factorization).
ALPHA = -1.58613434205992
BETA = -0.05298011857296
GAMMA = 0.88291107553093
DELTA = 0.44350685204397
SCALE = 1.14960439886024
INV_SCALE = 1.0 / SCALE


def _lift(a: np.ndarray, coef: float, parity: int) -> None:
    # One lifting step along axis 1, whole-sample symmetric boundaries.
    n = a.shape[1]
    tgt = np.arange(parity, n, 2)
    left = tgt - 1
    right = tgt + 1
    left[left < 0] = 1
    right[right >= n] = 2 * (n - 1) - right[right >= n]
    a[:, tgt] += coef * (a[:, left] + a[:, right])


def analyze_rows(a: np.ndarray) -> None:
    """One-level 9/7 analysis of every row, in place, packed [low | high]."""
    n = a.shape[1]
    if n < 2:
        raise ValueError("row length must be >= 2")
    _lift(a, ALPHA, 1)
    _lift(a, BETA, 0)
    _lift(a, GAMMA, 1)
    _lift(a, DELTA, 0)
    a[:, 0::2] *= SCALE
    a[:, 1::2] *= INV_SCALE
    low = a[:, 0::2].copy()
    high = a[:, 1::2].copy()
    a[:, : low.shape[1]] = low
    a[:, low.shape[1] :] = high


def synthesize_rows(a: np.ndarray) -> None:
    """Inverse of :func:`analyze_rows`: rows packed [low | high] -> samples."""
    n = a.shape[1]
    if n < 2:
        raise ValueError("row length must be >= 2")
    n_low = (n + 1) // 2
    x = np.empty_like(a)
    x[:, 0::2] = a[:, :n_low]
    x[:, 1::2] = a[:, n_low:]
    x[:, 0::2] *= INV_SCALE
    x[:, 1::2] *= SCALE
    _lift(x, -DELTA, 0)
    _lift(x, -GAMMA, 1)
    _lift(x, -BETA, 0)
    _lift(x, -ALPHA, 1)
    a[:] = x


def apply_read_edits(
    codes: np.ndarray,
    ins_mask: np.ndarray,
    del_mask: np.ndarray,
    sub_mask: np.ndarray,
    ins_base: np.ndarray,
    sub_shift: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Apply per-base channel edits to a batch of equal-length reads.

    ``codes`` is (n_reads, read_len) with bases coded 0..3. Per position:
    an inserted base is emitted first, then the original base unless
    deleted, substituted as ``(code + shift) & 3`` when flagged. Returns
    the concatenated edited reads plus per-read lengths.
    """
    n, length = codes.shape
    ins = ins_mask.astype(bool)
    kept = ~del_mask.astype(bool)
    slots = np.full((n, length, 2), 255, np.uint8)
    np.copyto(slots[:, :, 0], ins_base, where=ins)
    final = np.where(sub_mask.astype(bool), (codes + sub_shift) & 3, codes)
    np.copyto(slots[:, :, 1], final, where=kept)
    flat = slots.reshape(n, 2 * length)
    keep = flat != 255
    lengths = keep.sum(axis=1).astype(np.int64)
    return flat[keep], lengths
