"""Small input-validation helpers shared by the estimator and the explainers."""

from __future__ import annotations

import numpy as np

from .errors import DataFormatError


def check_matrix(X, n_features: int | None = None, name: str = "X") -> np.ndarray:
    """Coerce ``X`` to a finite 2-D float64 array, optionally checking width."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DataFormatError(f"{name} must be 2-dimensional, got ndim={X.ndim}")
    if not np.isfinite(X).all():
        raise DataFormatError(f"{name} contains non-finite values")
    if n_features is not None and X.shape[1] != n_features:
        raise DataFormatError(
            f"{name} has {X.shape[1]} features, expected {n_features}"
        )
    return X


def check_instance(x, n_features: int, name: str = "instance") -> np.ndarray:
    """Coerce a single row to a finite 1-D float64 array of length ``n_features``."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise DataFormatError(f"{name} must be 1-dimensional, got ndim={x.ndim}")
    if x.shape[0] != n_features:
        raise DataFormatError(
            f"{name} has {x.shape[0]} values, expected {n_features}"
        )
    if not np.isfinite(x).all():
        raise DataFormatError(f"{name} contains non-finite values")
    return x


def check_labels(y, n_rows: int | None = None) -> np.ndarray:
    """Coerce labels to a 1-D int64 array with values in {0, 1}."""
    y = np.asarray(y)
    if y.ndim != 1:
        raise DataFormatError(f"labels must be 1-dimensional, got ndim={y.ndim}")
    as_float = y.astype(np.float64)
    if not np.isin(as_float, (0.0, 1.0)).all():
        bad = np.unique(as_float[~np.isin(as_float, (0.0, 1.0))])
        raise DataFormatError(f"labels must be 0 or 1, found {bad[:5].tolist()}")
    if n_rows is not None and y.shape[0] != n_rows:
        raise DataFormatError(f"got {y.shape[0]} labels for {n_rows} rows")
    return as_float.astype(np.int64)


def check_seed(seed, name: str = "seed") -> int:
    """Validate a 64-bit unsigned integer seed."""
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise DataFormatError(f"{name} must be an integer, got {type(seed).__name__}")
    if not 0 <= int(seed) < 2**64:
        raise DataFormatError(f"{name} must fit in an unsigned 64-bit integer")
    return int(seed)
