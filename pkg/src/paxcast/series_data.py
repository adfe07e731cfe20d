"""Loading, validation, scaling, and windowing of monthly count series.

A series is a chronologically ordered sequence of strictly positive monthly
observations. The windowing transform turns it into supervised samples: each
input is ``w`` consecutive values and the target is the value immediately
after them. All functions here are pure; nothing mutates its arguments.
"""
from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DataError

_PERIOD_RE = re.compile(r"^(\d{4})-(0[1-9]|1[0-2])$")

CSV_HEADER = ("period", "passengers")


def parse_period(label: str) -> tuple[int, int]:
    """Parse a ``YYYY-MM`` label into ``(year, month)``.

    Raises DataError for anything that is not a zero-padded calendar month.
    """
    m = _PERIOD_RE.match(label)
    if m is None:
        raise DataError(f"invalid period label {label!r}: expected YYYY-MM")
    return int(m.group(1)), int(m.group(2))


def _month_ordinal(label: str) -> int:
    year, month = parse_period(label)
    return year * 12 + (month - 1)


@dataclass(frozen=True)
class TimeSeries:
    """Monthly observations with strictly increasing, gap-free period labels.

    Values must all be positive (percentage errors downstream divide by the
    actuals). Labels and values always have equal length.
    """

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", values)
        if len(self.labels) != values.shape[0]:
            raise DataError(
                f"labels ({len(self.labels)}) and values ({values.shape[0]}) differ in length"
            )
        if values.shape[0] == 0:
            raise DataError("series is empty")
        if not np.all(np.isfinite(values)):
            raise DataError("series contains non-finite values")
        if np.any(values <= 0):
            idx = int(np.argmax(values <= 0))
            raise DataError(
                f"series value at {self.labels[idx]!r} is {values[idx]}; all values must be > 0"
            )
        ordinals = [_month_ordinal(label) for label in self.labels]
        for k in range(1, len(ordinals)):
            if ordinals[k] - ordinals[k - 1] != 1:
                raise DataError(
                    f"labels {self.labels[k - 1]!r} and {self.labels[k]!r} are not "
                    "consecutive months"
                )

    def __len__(self) -> int:
        return int(self.values.shape[0])


@dataclass(frozen=True)
class WindowedDataset:
    """Supervised samples: ``inputs[k]`` is a window, ``targets[k]`` the next value.

    ``target_indices[k]`` is the index of ``targets[k]`` in the source series,
    which is what split selection keys on.
    """

    inputs: np.ndarray
    targets: np.ndarray
    target_indices: np.ndarray

    def __post_init__(self):
        if not (len(self.inputs) == len(self.targets) == len(self.target_indices)):
            raise ValueError("inputs, targets, and target_indices must have equal length")

    def __len__(self) -> int:
        return int(self.inputs.shape[0])


@dataclass(frozen=True)
class ScalerParams:
    """Min-max parameters mapping the fitted range onto [0, 1]."""

    min: float
    max: float

    def __post_init__(self):
        if not (np.isfinite(self.min) and np.isfinite(self.max)):
            raise DataError("scaler bounds must be finite")
        if self.max <= self.min:
            raise DataError(f"scaler requires max > min, got min={self.min} max={self.max}")


def load_csv(path) -> TimeSeries:
    """Load a ``period,passengers`` CSV into a validated TimeSeries.

    The file must be UTF-8 with a header row; periods are YYYY-MM and
    passenger counts positive numbers. Errors name the offending row
    (1-based, header is row 1).
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"data file not found: {path}")
    labels: list[str] = []
    values: list[float] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: file is empty") from None
        if tuple(cell.strip() for cell in header) != CSV_HEADER:
            raise DataError(
                f"{path}: row 1: expected header 'period,passengers', got {','.join(header)!r}"
            )
        for row_no, row in enumerate(reader, start=2):
            if len(row) != 2:
                raise DataError(f"{path}: row {row_no}: expected 2 columns, got {len(row)}")
            label = row[0].strip()
            raw_value = row[1].strip()
            try:
                parse_period(label)
            except DataError as exc:
                raise DataError(f"{path}: row {row_no}: {exc}") from None
            try:
                value = float(raw_value)
            except ValueError:
                raise DataError(
                    f"{path}: row {row_no}: passenger count {raw_value!r} is not numeric"
                ) from None
            if not np.isfinite(value) or value <= 0:
                raise DataError(
                    f"{path}: row {row_no}: passenger count must be a positive number, got {raw_value}"
                )
            labels.append(label)
            values.append(value)
    if not labels:
        raise DataError(f"{path}: no data rows")
    try:
        return TimeSeries(labels=tuple(labels), values=np.array(values, dtype=np.float64))
    except DataError as exc:
        raise DataError(f"{path}: {exc}") from None


def window_values(values: np.ndarray, w: int) -> WindowedDataset:
    """Window a raw value array: sample k is (values[k:k+w], values[k+w])."""
    values = np.asarray(values, dtype=np.float64)
    if w < 1:
        raise ValueError(f"window size must be >= 1, got {w}")
    n = values.shape[0]
    if n <= w:
        raise DataError(f"series of length {n} is too short for window size {w} (need > w points)")
    count = n - w
    inputs = np.empty((count, w), dtype=np.float64)
    for k in range(count):
        inputs[k] = values[k : k + w]
    targets = values[w:].copy()
    target_indices = np.arange(w, n, dtype=np.int64)
    return WindowedDataset(inputs=inputs, targets=targets, target_indices=target_indices)


def make_windows(series: TimeSeries, w: int) -> WindowedDataset:
    """Convert a series into exactly ``len(series) - w`` supervised samples."""
    return window_values(series.values, w)


def fit_scaler(values: np.ndarray) -> ScalerParams:
    """Fit min-max parameters on the given values (callers pass train data only)."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise DataError("cannot fit a scaler on an empty vector")
    lo = float(np.min(values))
    hi = float(np.max(values))
    if hi <= lo:
        raise DataError(f"cannot fit a scaler on a constant vector (all values = {lo})")
    return ScalerParams(min=lo, max=hi)


def transform(params: ScalerParams, values: np.ndarray) -> np.ndarray:
    """Map values through x -> (x - min) / (max - min).

    Values outside the fitted range map outside [0, 1]; that is expected for
    test data under an expanding-train protocol.
    """
    values = np.asarray(values, dtype=np.float64)
    return (values - params.min) / (params.max - params.min)


def inverse_transform(params: ScalerParams, values: np.ndarray) -> np.ndarray:
    """Exact inverse of :func:`transform`: y -> y * (max - min) + min."""
    values = np.asarray(values, dtype=np.float64)
    return values * (params.max - params.min) + params.min


def synthetic_monthly_series(
    n: int = 84,
    start: str = "2016-01",
    base: float = 100_000.0,
    trend: float = 300.0,
    amplitude: float = 22_000.0,
    noise: float = 0.05,
    seed: int = 7,
) -> TimeSeries:
    """Generate a seeded seasonal series: sinusoid + linear trend + relative noise.

    ``noise`` is the standard deviation of the multiplicative Gaussian noise
    relative to the deterministic level (0.05 means 5%).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    t = np.arange(n, dtype=np.float64)
    level = base + trend * t + amplitude * np.sin(2.0 * np.pi * t / 12.0)
    values = level * (1.0 + noise * rng.standard_normal(n))
    if np.any(values <= 0):
        raise ValueError("synthetic parameters produced non-positive values")
    year, month = parse_period(start)
    labels = []
    for _ in range(n):
        labels.append(f"{year:04d}-{month:02d}")
        month += 1
        if month > 12:
            month = 1
            year += 1
    return TimeSeries(labels=tuple(labels), values=values)
