"""Input validation helpers.

A luminance plane is a plain 2-D float64 array on the nominal [0, 255]
scale. These helpers enforce the container invariants (dimensionality,
minimum size, finiteness) at API boundaries so the numeric code can
assume clean input, in the spirit of scikit-learn's ``check_array``.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, EmptyInputError, TooSmallError

#: Smallest accepted plane edge, in pixels.
MIN_PLANE_DIM = 8


def check_plane(arr, name: str = "plane") -> np.ndarray:
    """Validate *arr* as a luminance plane and return it as float64.

    Rejects anything that is not 2-D, smaller than 8x8, or non-finite.
    """
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim != 2:
        raise DimensionMismatchError(
            f"{name} must be a 2-D array, got shape {a.shape}")
    h, w = a.shape
    if h < MIN_PLANE_DIM or w < MIN_PLANE_DIM:
        raise TooSmallError(
            f"{name} is {w}x{h}; minimum is {MIN_PLANE_DIM}x{MIN_PLANE_DIM}")
    if not np.isfinite(a).all():
        raise ValueError(f"{name} contains NaN or Inf values")
    return a


def check_same_shape(a: np.ndarray, b: np.ndarray,
                     name_a: str = "first", name_b: str = "second") -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(
            f"{name_a} has shape {a.shape} but {name_b} has shape {b.shape}")


def check_vector(arr, name: str = "vector") -> np.ndarray:
    """Validate *arr* as a nonempty 1-D float64 vector."""
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim != 1:
        raise DimensionMismatchError(
            f"{name} must be 1-D, got shape {a.shape}")
    if a.size == 0:
        raise EmptyInputError(f"{name} is empty")
    return a


def check_plane_stack(X, name: str = "X") -> np.ndarray:
    """Coerce a sequence of equal-size planes (or an (n, H, W) array) to 3-D.

    Every plane is validated individually; shapes must agree.
    """
    if isinstance(X, np.ndarray) and X.ndim == 3:
        planes = [check_plane(X[i], f"{name}[{i}]") for i in range(X.shape[0])]
    else:
        planes = [check_plane(p, f"{name}[{i}]") for i, p in enumerate(X)]
    if not planes:
        raise EmptyInputError(f"{name} contains no planes")
    shape = planes[0].shape
    for i, p in enumerate(planes[1:], start=1):
        if p.shape != shape:
            raise DimensionMismatchError(
                f"{name}[{i}] has shape {p.shape}, expected {shape}")
    return np.stack(planes, axis=0)
