"""Secondary acceptance: render all four figures from real xxring CSV output.

The data is produced through the primary's external interface (its CLI), not
by importing its internals.
"""

import subprocess
import sys

import pytest

from plotgen.render import figure_spec, render_figure

EXPECTED_SERIES = {1: 6, 2: 6, 3: 6, 4: 4}


@pytest.fixture(scope="module")
def figure_csvs(tmp_path_factory):
    workdir = tmp_path_factory.mktemp("figures")
    paths = {}
    for fid in (1, 2, 3, 4):
        out = workdir / f"fig{fid}.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "xxring.cli", "figure", str(fid), "--out", str(out)],
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            pytest.skip(f"xxring CLI unavailable: {proc.stderr.strip()}")
        paths[fid] = out
    return paths


def test_renders_all_four_figures(figure_csvs, tmp_path):
    for fid, csv_path in figure_csvs.items():
        out = tmp_path / f"fig{fid}.png"
        series = render_figure(figure_spec(fid, csv_path, out))
        assert out.exists() and out.stat().st_size > 0
        assert len(series) == EXPECTED_SERIES[fid]
        print(f"ACCEPTANCE 11/fig{fid}: PASS - {len(series)} series rendered")


def test_dotted_j_positive_in_figures_3_and_4(figure_csvs, tmp_path):
    for fid in (3, 4):
        series = render_figure(figure_spec(fid, figure_csvs[fid], tmp_path / f"f{fid}.png"))
        for s in series:
            assert s.linestyle == (":" if s.j_sign > 0 else "-")


def test_figure_values_are_concurrences(figure_csvs, tmp_path):
    for fid, csv_path in figure_csvs.items():
        for s in render_figure(figure_spec(fid, csv_path, tmp_path / f"g{fid}.png")):
            assert all(0.0 <= y <= 1.0 for y in s.y)
            assert len(s.x) == 200
