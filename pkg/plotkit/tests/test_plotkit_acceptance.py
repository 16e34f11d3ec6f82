"""Acceptance: render the three desk-scale figure sets from real CSV output.

The CSVs come from the integrator package's command line (the only
interface plotkit consumes): one desk-scale run per scheme.
"""

import subprocess
import sys

import pytest
from PIL import Image

from plotkit import PlotSpec, render

CONFIG = """scheme_name = {scheme}
epsilon_inv = 70
h = 0.01
t_end = 1000
sample_every = 100
lambda = 1, 1.4142135623730951, 2
output_path = {out}
"""


@pytest.fixture(scope="module")
def desk_csvs(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("csv")
    paths = {}
    for scheme in ("ERKN1", "ERKN2", "ERKN3", "ERKN4"):
        out = tmp / f"{scheme.lower()}.csv"
        cfg = tmp / f"{scheme.lower()}.cfg"
        cfg.write_text(CONFIG.format(scheme=scheme, out=out))
        proc = subprocess.run([sys.executable, "-m", "erkn", "longrun", str(cfg)],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        paths[scheme] = out
    return paths


def _stable(spec):
    first = render(spec)
    with Image.open(spec.out_path) as im:
        size1 = im.size
    second = render(spec)
    with Image.open(spec.out_path) as im:
        size2 = im.size
    assert size1 == size2 and first.extents == second.extents
    return first


def test_figure_set_erkn1_and_erkn3_panel(desk_csvs, tmp_path):
    spec = PlotSpec(
        csv_paths=((str(desk_csvs["ERKN1"]), "ERKN1"), (str(desk_csvs["ERKN3"]), "ERKN3")),
        columns=("err_H", "err_I", "err_I2"),
        out_path=str(tmp_path / "fig_erkn1_erkn3.png"),
        title="energy errors, drifting vs conserved",
    )
    info = _stable(spec)
    assert info.panel_rows == 1
    assert info.curves == 6          # 3 columns x 2 schemes
    print(f"\nACCEPTANCE plotkit fig1: PASS ({info.curves} curves, "
          f"{info.width_px}x{info.height_px})")


@pytest.mark.parametrize("scheme", ["ERKN2", "ERKN4"])
def test_figure_set_two_row_modified(desk_csvs, tmp_path, scheme):
    spec = PlotSpec(
        csv_paths=((str(desk_csvs[scheme]), scheme),),
        columns=("err_H", "err_I", "err_I2",
                 "err_Hstar", "err_Istar_I1+I3", "err_Istar_I2"),
        out_path=str(tmp_path / f"fig_{scheme.lower()}.png"),
        title=f"{scheme}: energies (top) and modified energies (bottom)",
    )
    info = _stable(spec)
    assert info.panel_rows == 2
    assert info.curves == 6
    print(f"\nACCEPTANCE plotkit {scheme} two-row: PASS ({info.curves} curves, "
          f"{info.width_px}x{info.height_px})")
