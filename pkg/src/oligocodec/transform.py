"""Multi-level CDF 9/7 wavelet transform of a grayscale plane.

Images are 2-D float64 arrays (row-major). The transform itself is linear;
any level shift is the caller's business. Subband orientations follow the
top-left packing: first letter is the horizontal filter, second the
vertical one, so HL is the top-right (horizontally high-pass) quadrant.
Odd lengths split ceil/floor with the low band taking the extra sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels


class DimensionTooSmallError(ValueError):
    """A decomposition level would produce an empty subband."""


class GeometryMismatchError(ValueError):
    """Subband shapes are inconsistent with the declared geometry."""


@dataclass
class Subband:
    level: int
    orientation: str  # LL / HL / LH / HH
    coeffs: np.ndarray


@dataclass
class SubbandSet:
    """All subbands of one decomposition, deepest LL first."""

    levels: int
    height: int
    width: int
    subbands: list[Subband]

    def band(self, level: int, orientation: str) -> Subband:
        for sb in self.subbands:
            if sb.level == level and sb.orientation == orientation:
                return sb
        raise KeyError((level, orientation))


def _level_splits(height: int, width: int, levels: int) -> list[tuple[int, int]]:
    # (rows, cols) entering each level, level 1 first
    if levels < 1:
        raise ValueError("levels must be >= 1")
    dims = []
    h, w = height, width
    for level in range(1, levels + 1):
        if h < 2 or w < 2:
            raise DimensionTooSmallError(
                f"level {level} of {levels} needs at least 2x2, got {h}x{w}"
            )
        dims.append((h, w))
        h, w = (h + 1) // 2, (w + 1) // 2
    return dims


def subband_geometry(
    height: int, width: int, levels: int
) -> list[tuple[int, str, int, int]]:
    """Canonical (level, orientation, rows, cols) order used everywhere.

    Deepest LL first, then HL/LH/HH from the deepest level up to level 1.
    """
    dims = _level_splits(height, width, levels)
    out = []
    h, w = dims[-1]
    h_lo, w_lo = (h + 1) // 2, (w + 1) // 2
    out.append((levels, "LL", h_lo, w_lo))
    for level in range(levels, 0, -1):
        h, w = dims[level - 1]
        h_lo, h_hi = (h + 1) // 2, h // 2
        w_lo, w_hi = (w + 1) // 2, w // 2
        out.append((level, "HL", h_lo, w_hi))
        out.append((level, "LH", h_hi, w_lo))
        out.append((level, "HH", h_hi, w_hi))
    return out


def _analyze_level(region: np.ndarray) -> None:
    # rows then columns; kernels need C-contiguous input
    buf = np.ascontiguousarray(region)
    kernels.analyze_rows(buf)
    buf_t = np.ascontiguousarray(buf.T)
    kernels.analyze_rows(buf_t)
    region[:] = buf_t.T


def _synthesize_level(region: np.ndarray) -> None:
    buf_t = np.ascontiguousarray(region.T)
    kernels.synthesize_rows(buf_t)
    buf = np.ascontiguousarray(buf_t.T)
    kernels.synthesize_rows(buf)
    region[:] = buf


def forward_dwt(image: np.ndarray, levels: int = 3) -> SubbandSet:
    """Decompose a 2-D array into 3*levels + 1 subbands."""
    a = np.array(image, dtype=np.float64, order="C")
    if a.ndim != 2:
        raise ValueError("expected a 2-D array")
    height, width = a.shape
    dims = _level_splits(height, width, levels)
    for h, w in dims:
        _analyze_level(a[:h, :w])
    subbands = []
    for level, orientation, rows, cols in subband_geometry(height, width, levels):
        h, w = dims[level - 1]
        h_lo, w_lo = (h + 1) // 2, (w + 1) // 2
        if orientation == "LL":
            block = a[:h_lo, :w_lo]
        elif orientation == "HL":
            block = a[:h_lo, w_lo:w]
        elif orientation == "LH":
            block = a[h_lo:h, :w_lo]
        else:
            block = a[h_lo:h, w_lo:w]
        assert block.shape == (rows, cols)
        subbands.append(Subband(level, orientation, block.copy()))
    return SubbandSet(levels, height, width, subbands)


def inverse_dwt(sset: SubbandSet) -> np.ndarray:
    """Reassemble subbands and invert the decomposition."""
    geometry = subband_geometry(sset.height, sset.width, sset.levels)
    by_key = {(sb.level, sb.orientation): sb for sb in sset.subbands}
    if len(sset.subbands) != len(geometry):
        raise GeometryMismatchError(
            f"expected {len(geometry)} subbands, got {len(sset.subbands)}"
        )
    a = np.zeros((sset.height, sset.width), dtype=np.float64)
    dims = _level_splits(sset.height, sset.width, sset.levels)
    for level, orientation, rows, cols in geometry:
        sb = by_key.get((level, orientation))
        if sb is None:
            raise GeometryMismatchError(f"missing subband {(level, orientation)}")
        if sb.coeffs.shape != (rows, cols):
            raise GeometryMismatchError(
                f"subband {(level, orientation)}: expected {(rows, cols)}, "
                f"got {sb.coeffs.shape}"
            )
        h, w = dims[level - 1]
        h_lo, w_lo = (h + 1) // 2, (w + 1) // 2
        if orientation == "LL":
            a[:h_lo, :w_lo] = sb.coeffs
        elif orientation == "HL":
            a[:h_lo, w_lo:w] = sb.coeffs
        elif orientation == "LH":
            a[h_lo:h, :w_lo] = sb.coeffs
        else:
            a[h_lo:h, w_lo:w] = sb.coeffs
    for h, w in reversed(dims):
        _synthesize_level(a[:h, :w])
    return a


def _axis_weights(n: int, levels: int) -> dict[tuple[int, str], float]:
    # Mean squared L2 norm of the 1-D synthesis basis vectors, per level
    # and band, computed by inverse-transforming batched unit impulses.
    sizes = [n]
    for _ in range(levels):
        sizes.append((sizes[-1] + 1) // 2)
    out = {}
    for level in range(1, levels + 1):
        seg = sizes[level]
        for band, offset in (("low", 0), ("high", seg)):
            count = seg if band == "low" else sizes[level - 1] - seg
            basis = np.zeros((count, n), dtype=np.float64)
            basis[np.arange(count), offset + np.arange(count)] = 1.0
            for back in range(level, 0, -1):
                span = sizes[back - 1]
                block = np.ascontiguousarray(basis[:, :span])
                kernels.synthesize_rows(block)
                basis[:, :span] = block
            out[(level, band)] = float(np.mean(np.sum(basis * basis, axis=1)))
    return out


@lru_cache(maxsize=32)
def _weights_cached(levels: int, height: int, width: int):
    vert = _axis_weights(height, levels)
    horz = _axis_weights(width, levels)
    items = []
    for level, orientation, _, _ in subband_geometry(height, width, levels):
        hband = "high" if orientation[0] == "H" else "low"
        vband = "high" if orientation[1] == "H" else "low"
        items.append(
            ((level, orientation), vert[(level, vband)] * horz[(level, hband)])
        )
    return tuple(items)


def subband_weights(
    levels: int, height: int, width: int
) -> dict[tuple[int, str], float]:
    """Per-subband distortion weights for this geometry.

    weight(b) is the mean squared L2 norm of b's synthesis basis
    functions, so weighted coefficient-domain SSE approximates
    image-domain SSE. The 2-D transform is separable, hence each weight
    is the product of the two 1-D chain weights.
    """
    _level_splits(height, width, levels)
    return dict(_weights_cached(levels, height, width))
