"""Energy-error panel plots from ERKN experiment CSV series."""

from .render import (EmptyCsvError, MissingColumnError, PlotkitError,
                     PlotSpec, RenderInfo, Series, is_modified_column,
                     read_series, render)

__version__ = "0.1.0"

__all__ = [
    "EmptyCsvError", "MissingColumnError", "PlotkitError", "PlotSpec",
    "RenderInfo", "Series", "is_modified_column", "read_series", "render",
]
