"""Render energy-error panels from experiment CSV series.

Input is the harness CSV contract: a header row starting with `t` followed
by signed error columns (`err_H`, `err_I`, `err_I1`, ..., `err_Imu_<label>`,
`err_Hstar`, `err_Istar_<label>`).  A figure holds one panel of the plain
energy errors and, when any `err_Hstar` / `err_Istar_*` column is requested,
a second row with the modified energies underneath.  Rendering only reads
the CSV files; repeated renders of the same spec produce images with
identical pixel dimensions and identical data extents.
"""

import csv
import os
from dataclasses import dataclass
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class PlotkitError(Exception):
    """Base class for plotkit failures."""


class MissingColumnError(PlotkitError, ValueError):
    def __init__(self, column, path):
        self.column = column
        self.path = path
        super().__init__(f"column {column!r} not present in {path}")


class EmptyCsvError(PlotkitError, ValueError):
    def __init__(self, path):
        self.path = path
        super().__init__(f"{path} contains no data rows")


MODIFIED_PREFIXES = ("err_Hstar", "err_Istar")

FIGWIDTH = 11.0
PANEL_HEIGHT = 3.2
DPI = 110


def is_modified_column(name: str) -> bool:
    return name.startswith(MODIFIED_PREFIXES)


@dataclass(frozen=True)
class Series:
    label: str
    path: str
    columns: tuple
    data: np.ndarray          # shape (rows, len(columns))

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise MissingColumnError(name, self.path)
        return self.data[:, self.columns.index(name)]


def read_series(path: str, label: Optional[str] = None) -> Series:
    """Parse one CSV file; the label defaults to the file stem."""
    with open(path, "r", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    rows = [r for r in rows if r]
    if not rows:
        raise EmptyCsvError(path)
    header = tuple(rows[0])
    if len(rows) < 2:
        raise EmptyCsvError(path)
    data = np.array([[float(v) for v in r] for r in rows[1:]], dtype=float)
    if label is None:
        label = os.path.splitext(os.path.basename(path))[0]
    return Series(label=label, path=path, columns=header, data=data)


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: CSV inputs (with labels), columns, output path, axes."""

    csv_paths: tuple          # of (path, label-or-None) pairs
    columns: tuple
    out_path: str
    ylim: Optional[tuple] = None
    log: bool = False
    title: Optional[str] = None


@dataclass(frozen=True)
class RenderInfo:
    """What was drawn, for callers that verify stability."""

    path: str
    panel_rows: int
    curves: int
    width_px: int
    height_px: int
    extents: tuple            # ((xmin, xmax, ymin, ymax), ...) per panel


def render(spec: PlotSpec) -> RenderInfo:
    """Draw the spec to its output path and return the layout facts."""
    series = [read_series(path, label) for path, label in spec.csv_paths]
    for s in series:
        if "t" not in s.columns:
            raise MissingColumnError("t", s.path)
        for col in spec.columns:
            if col not in s.columns:
                raise MissingColumnError(col, s.path)

    plain = [c for c in spec.columns if not is_modified_column(c)]
    modified = [c for c in spec.columns if is_modified_column(c)]
    groups = [g for g in (plain, modified) if g]
    if not groups:
        raise PlotkitError("no columns requested")

    nrows = len(groups)
    fig, axes = plt.subplots(nrows, 1, figsize=(FIGWIDTH, PANEL_HEIGHT * nrows),
                             sharex=True, squeeze=False)
    curves = 0
    for ax, cols in zip(axes[:, 0], groups):
        for s in series:
            t = s.column("t")
            for col in cols:
                label = col if len(series) == 1 else f"{s.label} {col}"
                ax.plot(t, s.column(col), lw=0.8, label=label)
                curves += 1
        ax.grid(alpha=0.25)
        ax.legend(loc="upper left", fontsize=8, ncol=2)
        if spec.ylim is not None:
            ax.set_ylim(*spec.ylim)
        if spec.log:
            ax.set_yscale("symlog", linthresh=1e-12)
    axes[-1, 0].set_xlabel("t")
    if spec.title:
        axes[0, 0].set_title(spec.title)
    if nrows == 2:
        axes[0, 0].set_ylabel("energy errors")
        axes[1, 0].set_ylabel("modified energy errors")

    fig.savefig(spec.out_path, dpi=DPI)
    extents = tuple(tuple(ax.get_xlim()) + tuple(ax.get_ylim()) for ax in axes[:, 0])
    plt.close(fig)
    return RenderInfo(path=spec.out_path, panel_rows=nrows, curves=curves,
                      width_px=round(FIGWIDTH * DPI),
                      height_px=round(PANEL_HEIGHT * nrows * DPI),
                      extents=extents)
