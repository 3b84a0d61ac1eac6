import numpy as np
import pandas as pd
import pytest

from linespace.congruences import (
    EllipsoidParams,
    TorusParams,
    ellipsoid_section,
    point_sphere_section,
    reconstruct,
    torus_section,
)
from linespace.core import EuclideanPoint
from linespace.utils.export import CSV_COLUMNS, csv_text, results_to_frame, write_csv, write_obj
from linespace.utils.grids import GRID_DISK, GRID_TWO_CHART, GridSpec


@pytest.fixture
def torus_frame():
    """Torus samples on a disk grid; the first radius is the branch point."""
    grid = GridSpec(GRID_DISK, radial_count=3, angular_count=4, max_modulus=1.0)
    section = torus_section(TorusParams(3.0, 1.0))
    return results_to_frame(reconstruct(section, grid.samples()))


def test_frame_columns_and_types(torus_frame):
    """The frame has the CSV columns with integer chart and skipped flags."""
    assert list(torus_frame.columns) == CSV_COLUMNS
    assert torus_frame["chart"].dtype.kind == "i"
    assert torus_frame["skipped"].dtype.kind == "i"


def test_skipped_rows_at_branch_points(torus_frame):
    """Pole samples keep their coordinates and leave the numeric columns empty."""
    skipped = torus_frame[torus_frame["skipped"] == 1]
    assert len(skipped) == 4
    assert (skipped["xi_re"] == 0.0).all()
    assert skipped[["eta_re", "eta_im", "r", "x", "y", "t"]].isna().all().all()
    assert torus_frame.loc[torus_frame["skipped"] == 0, "x"].notna().all()


def test_point_sphere_rows_are_constant():
    """Every row of a point sphere is the point itself."""
    grid = GridSpec(GRID_DISK, radial_count=4, angular_count=4, max_modulus=1.0)
    section = point_sphere_section(EuclideanPoint(0j, 1.0))
    df = results_to_frame(reconstruct(section, grid.samples()))
    assert len(df) == 16
    assert np.allclose(df[["x", "y", "t"]].to_numpy(), [0.0, 0.0, 1.0], atol=1e-12)


def test_write_csv_header_and_precision(tmp_path):
    """The CSV has one header line and reads back bit for bit."""
    grid = GridSpec(GRID_TWO_CHART, radial_count=2, angular_count=3, max_modulus=1.0)
    df = results_to_frame(reconstruct(ellipsoid_section(EllipsoidParams(1, 4, 9)), grid.samples()))
    csv_path = write_csv(df, tmp_path / "out" / "ellipsoid.csv")

    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "xi_re,xi_im,chart,eta_re,eta_im,r,x,y,t,skipped"
    assert len(lines) == 1 + len(grid)

    # 17 significant digits read back bit-for-bit
    back = pd.read_csv(csv_path, float_precision="round_trip")
    assert np.array_equal(back["t"].to_numpy(), df["t"].to_numpy())
    assert (back["chart"].to_numpy() == df["chart"].to_numpy()).all()


def test_csv_is_deterministic(torus_frame, tmp_path):
    """Writing the same frame twice gives the same bytes."""
    first = write_csv(torus_frame, tmp_path / "a.csv").read_bytes()
    second = write_csv(torus_frame, tmp_path / "b.csv").read_bytes()
    assert first == second
    assert first.decode("utf-8") == csv_text(torus_frame)


def test_skipped_rows_are_empty_in_csv(torus_frame):
    """A skipped row keeps its sample and leaves the rest empty."""
    row = csv_text(torus_frame).splitlines()[1]
    assert row == "0,0,1,,,,,,,1"


def test_obj_matches_csv_rows(torus_frame, tmp_path):
    """The OBJ has one vertex per kept CSV row."""
    obj_path = write_obj(torus_frame, tmp_path / "torus.obj")
    lines = obj_path.read_text(encoding="utf-8").splitlines()
    kept = torus_frame[torus_frame["skipped"] == 0]

    assert len(lines) == len(kept)
    assert all(line.startswith("v ") for line in lines)
    vertices = np.array([[float(v) for v in line.split()[1:]] for line in lines])
    assert np.array_equal(vertices, kept[["x", "y", "t"]].to_numpy())
