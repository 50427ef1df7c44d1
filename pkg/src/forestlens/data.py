"""Tabular dataset loading, summary statistics, and train/test splitting.

The on-disk format is a plain comma-separated file: one header row, ``.``
as the decimal point, no quoting. Labels are binary (0/1) and live in a
named column; everything else must parse as a finite float.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DataFormatError, InputOutputError
from .validation import check_labels, check_matrix, check_seed


@dataclass(frozen=True)
class TabularDataset:
    """A feature matrix with binary labels and named columns.

    Arrays are marked read-only after construction so datasets can be
    shared freely between threads and explainers.
    """

    feature_names: tuple[str, ...]
    X: np.ndarray  # (n_rows, n_features) float64
    y: np.ndarray  # (n_rows,) int64 in {0, 1}

    def __post_init__(self):
        names = tuple(str(n) for n in self.feature_names)
        if len(names) == 0:
            raise DataFormatError("dataset needs at least one feature")
        if len(set(names)) != len(names):
            raise DataFormatError("feature names must be unique")
        if any(not n for n in names):
            raise DataFormatError("feature names must be non-empty")
        X = check_matrix(self.X, n_features=len(names))
        y = check_labels(self.y, n_rows=X.shape[0])
        X.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)

    @property
    def n_rows(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]

    def feature_index(self, name: str) -> int:
        try:
            return self.feature_names.index(name)
        except ValueError:
            raise DataFormatError(f"unknown feature {name!r}") from None

    def column(self, name: str) -> np.ndarray:
        return self.X[:, self.feature_index(name)]

    def take(self, indices: np.ndarray) -> "TabularDataset":
        """Row subset in the given order (copies, so the result is independent)."""
        idx = np.asarray(indices, dtype=np.int64)
        return TabularDataset(self.feature_names, self.X[idx].copy(), self.y[idx].copy())


@dataclass(frozen=True)
class FeatureStats:
    """Per-feature location and spread summaries used for grids and sampling."""

    feature_names: tuple[str, ...]
    mean: np.ndarray
    std: np.ndarray
    min: np.ndarray
    q1: np.ndarray
    median: np.ndarray
    q3: np.ndarray
    max: np.ndarray

    def for_feature(self, name: str) -> dict[str, float]:
        i = self.feature_names.index(name)
        return {
            "mean": float(self.mean[i]),
            "std": float(self.std[i]),
            "min": float(self.min[i]),
            "q1": float(self.q1[i]),
            "median": float(self.median[i]),
            "q3": float(self.q3[i]),
            "max": float(self.max[i]),
        }

    def to_dict(self) -> dict[str, dict[str, float]]:
        """JSON-ready mapping of feature name to its summary fields."""
        return {name: self.for_feature(name) for name in self.feature_names}


@dataclass(frozen=True)
class SplitSpec:
    """How to carve a dataset into train and test partitions."""

    test_fraction: float = 0.30
    seed: int = 42
    stratified: bool = True

    def __post_init__(self):
        if not 0.0 < self.test_fraction < 1.0:
            raise DataFormatError(
                f"test_fraction must be in (0, 1), got {self.test_fraction}"
            )
        check_seed(self.seed)


def load_csv(path: str | Path, label_column: str) -> TabularDataset:
    """Read a comma-separated file into a dataset.

    The label column is removed from the feature matrix; row order is
    preserved. Parse failures report the 1-based file row and the column
    name so bad cells can be located directly.
    """
    path = Path(path)
    if not path.is_file():
        raise InputOutputError(f"data file not found: {path}")
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError(f"{path}: file is empty, expected a header row") from None
        header = [h.strip() for h in header]
        if any(not h for h in header):
            raise DataFormatError(f"{path}: header contains an empty column name")
        if len(set(header)) != len(header):
            dupes = sorted({h for h in header if header.count(h) > 1})
            raise DataFormatError(f"{path}: duplicate header columns {dupes}")
        if label_column not in header:
            raise DataFormatError(f"{path}: label column {label_column!r} not in header")
        label_idx = header.index(label_column)
        feature_names = tuple(h for i, h in enumerate(header) if i != label_idx)

        rows: list[list[float]] = []
        labels: list[int] = []
        for row_no, record in enumerate(reader, start=2):
            if len(record) != len(header):
                raise DataFormatError(
                    f"{path}: row {row_no} has {len(record)} cells, expected {len(header)}"
                )
            values = []
            for col_idx, cell in enumerate(record):
                try:
                    value = float(cell)
                except ValueError:
                    raise DataFormatError(
                        f"{path}: row {row_no}, column {header[col_idx]!r}: "
                        f"cannot parse {cell.strip()!r} as a number"
                    ) from None
                if not np.isfinite(value):
                    raise DataFormatError(
                        f"{path}: row {row_no}, column {header[col_idx]!r}: "
                        f"non-finite value {cell.strip()!r}"
                    )
                values.append(value)
            label = values.pop(label_idx)
            if label not in (0.0, 1.0):
                raise DataFormatError(
                    f"{path}: row {row_no}, column {label_column!r}: "
                    f"label must be 0 or 1, got {label!r:.6}"
                )
            rows.append(values)
            labels.append(int(label))

    if not rows:
        raise DataFormatError(f"{path}: no data rows after the header")
    return TabularDataset(feature_names, np.array(rows), np.array(labels))


def compute_stats(dataset: TabularDataset) -> FeatureStats:
    """Column summaries with quartiles by linear interpolation between order statistics."""
    if dataset.n_rows < 1:
        raise DataFormatError("cannot compute stats of an empty dataset")
    X = dataset.X
    q = np.quantile(X, [0.0, 0.25, 0.5, 0.75, 1.0], axis=0, method="linear")
    return FeatureStats(
        feature_names=dataset.feature_names,
        mean=X.mean(axis=0),
        std=X.std(axis=0),
        min=q[0],
        q1=q[1],
        median=q[2],
        q3=q[3],
        max=q[4],
    )


def _stratified_test_counts(y: np.ndarray, n_test: int) -> dict[int, int]:
    # Largest-remainder apportionment: per-class share of the test set,
    # within one row of exact proportionality, summing to n_test.
    n = y.shape[0]
    classes = [0, 1]
    sizes = {c: int((y == c).sum()) for c in classes}
    quotas = {c: n_test * sizes[c] / n for c in classes}
    counts = {c: int(np.floor(quotas[c])) for c in classes}
    leftover = n_test - sum(counts.values())
    by_remainder = sorted(classes, key=lambda c: (-(quotas[c] - counts[c]), c))
    for c in by_remainder[:leftover]:
        counts[c] += 1
    # Keep each class visible in both partitions when there is room for it;
    # each repair moves a single row, so counts stay within 1 of the quota.
    for c in classes:
        d = 1 - c
        if sizes[c] >= 2 and counts[c] == sizes[c] and n - n_test >= 2 and counts[d] < sizes[d]:
            counts[c] -= 1
            counts[d] += 1
        if sizes[c] >= 1 and counts[c] == 0 and n_test >= 2 and counts[d] >= 2:
            counts[c] += 1
            counts[d] -= 1
    return counts


def split(dataset: TabularDataset, spec: SplitSpec) -> tuple[TabularDataset, TabularDataset]:
    """Partition rows into (train, test), deterministically for a fixed seed.

    The test partition holds ``round(n_rows * test_fraction)`` rows. With
    ``stratified=True`` the class balance of the test set matches the full
    dataset to within one row per class. Both partitions keep rows in their
    original order.
    """
    n = dataset.n_rows
    if n < 2:
        raise DataFormatError("need at least 2 rows to split")
    n_test = int(round(n * spec.test_fraction))
    if n_test == 0 or n_test == n:
        raise DataFormatError(
            f"test_fraction={spec.test_fraction} leaves an empty partition for n={n}"
        )
    rng = np.random.default_rng(spec.seed)
    if spec.stratified:
        counts = _stratified_test_counts(dataset.y, n_test)
        test_idx_parts = []
        for c, c_test in counts.items():
            members = np.flatnonzero(dataset.y == c)
            picked = rng.permutation(members.shape[0])[:c_test]
            test_idx_parts.append(members[picked])
        test_idx = np.sort(np.concatenate(test_idx_parts))
    else:
        test_idx = np.sort(rng.permutation(n)[:n_test])
    mask = np.zeros(n, dtype=bool)
    mask[test_idx] = True
    train_idx = np.flatnonzero(~mask)
    return dataset.take(train_idx), dataset.take(test_idx)


def subsample(dataset: TabularDataset, max_rows: int, seed: int) -> TabularDataset:
    """Seeded row subsample (original order kept); no-op when already small enough."""
    if max_rows < 1:
        raise DataFormatError(f"max_rows must be positive, got {max_rows}")
    if dataset.n_rows <= max_rows:
        return dataset
    rng = np.random.default_rng(check_seed(seed))
    idx = np.sort(rng.permutation(dataset.n_rows)[:max_rows])
    return dataset.take(idx)
