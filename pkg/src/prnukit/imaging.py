"""Pixel containers, decoding, and geometric plane operations.

Grayscale images travel through the toolkit as 2-D float64 planes on the
nominal [0, 255] scale; decoded color images are (H, W, 3) uint8 arrays
that must pass through :func:`to_luminance` before any fingerprint work.
File input is limited to 8-bit PNG and binary PGM (P5).
"""

from __future__ import annotations

import io

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import (
    CorruptImageError,
    TargetLargerThanSourceError,
    TooSmallError,
    UnsupportedFormatError,
)
from .validation import MIN_PLANE_DIM, check_plane

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"

# BT.601 luma weights; they sum to 1 so Y stays inside [0, 255].
_LUMA_R, _LUMA_G, _LUMA_B = 0.299, 0.587, 0.114


def load_image(path) -> np.ndarray:
    """Decode an image file.

    Returns a 2-D float64 plane for grayscale input (PGM, gray PNG) and an
    (H, W, 3) uint8 array for color PNG. Pixel values are preserved exactly
    as decoded.

    Raises FileNotFoundError, UnsupportedFormatError, CorruptImageError,
    or TooSmallError (either dimension below 8).
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] == b"P5":
        return _decode_pgm(data, path)
    if data[:8] == _PNG_MAGIC:
        return _decode_png(data, path)
    if data[:2] in (b"P1", b"P2", b"P3", b"P4", b"P6"):
        raise UnsupportedFormatError(
            f"{path}: only binary P5 PGM is supported among netpbm formats")
    raise UnsupportedFormatError(f"{path}: not a PNG or binary PGM file")


def _decode_pgm(data: bytes, path) -> np.ndarray:
    pos = 2
    fields = []
    # header fields: width, height, maxval; '#' comments allowed between them
    while len(fields) < 3:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise CorruptImageError(f"{path}: unterminated PGM header")
        try:
            fields.append(int(data[start:pos]))
        except ValueError:
            raise CorruptImageError(f"{path}: malformed PGM header") from None
    width, height, maxval = fields
    if width <= 0 or height <= 0:
        raise CorruptImageError(f"{path}: non-positive PGM dimensions")
    if maxval > 255:
        raise UnsupportedFormatError(f"{path}: {maxval} exceeds 8-bit PGM range")
    if maxval <= 0:
        raise CorruptImageError(f"{path}: invalid PGM maxval {maxval}")
    pos += 1  # single whitespace byte after maxval
    raster = data[pos:pos + width * height]
    if len(raster) < width * height:
        raise CorruptImageError(f"{path}: PGM raster truncated")
    if width < MIN_PLANE_DIM or height < MIN_PLANE_DIM:
        raise TooSmallError(f"{path}: {width}x{height} is below the 8x8 minimum")
    plane = np.frombuffer(raster, dtype=np.uint8).astype(np.float64)
    return plane.reshape(height, width)


def _decode_png(data: bytes, path) -> np.ndarray:
    try:
        with Image.open(io.BytesIO(data)) as im:
            im.load()
            mode = im.mode
            if mode == "L":
                arr = np.asarray(im, dtype=np.uint8)
            elif mode == "RGB":
                arr = np.asarray(im, dtype=np.uint8)
            else:
                raise UnsupportedFormatError(
                    f"{path}: PNG mode {mode!r} not supported "
                    "(8-bit gray or RGB only)")
    except UnidentifiedImageError:
        raise CorruptImageError(f"{path}: PNG decode failed") from None
    except (OSError, SyntaxError) as exc:
        raise CorruptImageError(f"{path}: PNG decode failed ({exc})") from None
    h, w = arr.shape[:2]
    if w < MIN_PLANE_DIM or h < MIN_PLANE_DIM:
        raise TooSmallError(f"{path}: {w}x{h} is below the 8x8 minimum")
    if arr.ndim == 2:
        return arr.astype(np.float64)
    return arr


def save_pgm(plane: np.ndarray, path) -> None:
    """Write a plane as binary 8-bit PGM.

    Values are rounded to the nearest integer and clipped to [0, 255];
    output bytes are fully determined by the input values.
    """
    p = check_plane(plane, "plane")
    h, w = p.shape
    raster = np.clip(np.rint(p), 0, 255).astype(np.uint8)
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(raster.tobytes())


def to_luminance(img: np.ndarray) -> np.ndarray:
    """Convert a decoded (H, W, 3) RGB image to a BT.601 luminance plane."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise UnsupportedFormatError(
            f"expected an (H, W, 3) RGB array, got shape {arr.shape}")
    rgb = arr.astype(np.float64)
    y = _LUMA_R * rgb[:, :, 0] + _LUMA_G * rgb[:, :, 1] + _LUMA_B * rgb[:, :, 2]
    return check_plane(y, "luminance")


def normalize_plane(plane: np.ndarray, mode: str = "clamp") -> np.ndarray:
    """Map a plane into integral [0, 255].

    ``clamp`` clips each value then rounds; ``rescale`` sends min -> 0 and
    max -> 255 affinely then rounds, with constant input mapping to 128.
    """
    p = check_plane(plane, "plane")
    if mode == "clamp":
        return np.rint(np.clip(p, 0.0, 255.0))
    if mode == "rescale":
        lo, hi = p.min(), p.max()
        if hi == lo:
            return np.full_like(p, 128.0)
        return np.rint((p - lo) * (255.0 / (hi - lo)))
    raise ValueError(f"unknown normalize mode {mode!r}")


def crop_center(plane: np.ndarray, width: int, height: int) -> np.ndarray:
    """Extract a centered window.

    On odd margins the extra discarded row/column is taken from the
    top/left, so two parties cropping the same plane stay aligned.
    """
    p = check_plane(plane, "plane")
    src_h, src_w = p.shape
    if width < MIN_PLANE_DIM or height < MIN_PLANE_DIM:
        raise TooSmallError(f"crop target {width}x{height} is below the 8x8 minimum")
    if width > src_w or height > src_h:
        raise TargetLargerThanSourceError(
            f"cannot crop {width}x{height} from {src_w}x{src_h}")
    top = (src_h - height + 1) // 2
    left = (src_w - width + 1) // 2
    return p[top:top + height, left:left + width].copy()


def resize_bilinear(plane: np.ndarray, width: int, height: int) -> np.ndarray:
    """Resize with bilinear interpolation (half-pixel centers, edge clamp).

    Resizing to the source dimensions is an exact identity; downscaling a
    block-constant plane by the block factor yields the block values.
    """
    p = check_plane(plane, "plane")
    src_h, src_w = p.shape
    if width < MIN_PLANE_DIM or height < MIN_PLANE_DIM:
        raise TooSmallError(f"resize target {width}x{height} is below the 8x8 minimum")

    def axis_coords(n_dst, n_src):
        c = (np.arange(n_dst) + 0.5) * (n_src / n_dst) - 0.5
        c = np.clip(c, 0.0, n_src - 1.0)
        i0 = np.floor(c).astype(np.intp)
        i1 = np.minimum(i0 + 1, n_src - 1)
        return i0, i1, c - i0

    y0, y1, fy = axis_coords(height, src_h)
    x0, x1, fx = axis_coords(width, src_w)
    fy = fy[:, None]
    fx = fx[None, :]
    top = p[np.ix_(y0, x0)] * (1 - fx) + p[np.ix_(y0, x1)] * fx
    bot = p[np.ix_(y1, x0)] * (1 - fx) + p[np.ix_(y1, x1)] * fx
    return top * (1 - fy) + bot * fy
