from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray


def freeze_array(values: ArrayLike, dtype: Any, name: str) -> NDArray[Any]:
    """
    Copy values into a contiguous, read-only array of the given dtype.

    Args:
        values: Array-like input
        dtype: Target numpy dtype
        name: Field name used in error messages

    Returns:
        Read-only array

    Raises:
        ValueError: If values contain NaN or infinity
    """
    array = np.array(values, dtype=dtype, copy=True)
    if not np.all(np.isfinite(array)):
        raise ValueError(f"{name} must be finite")
    array.setflags(write=False)
    return array
