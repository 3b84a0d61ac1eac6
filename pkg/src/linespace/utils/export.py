"""CSV and OBJ export of reconstructed point clouds."""

from pathlib import Path
from typing import List, Union

import numpy as np
import pandas as pd

from linespace.congruences import SampleResult
from linespace.utils.config import FLOAT_FORMAT

CSV_COLUMNS = ["xi_re", "xi_im", "chart", "eta_re", "eta_im", "r", "x", "y", "t", "skipped"]


def _result_row(result: SampleResult) -> dict:
    row = {
        "xi_re": result.sample.w.real,
        "xi_im": result.sample.w.imag,
        "chart": result.sample.chart,
        "eta_re": np.nan,
        "eta_im": np.nan,
        "r": np.nan,
        "x": np.nan,
        "y": np.nan,
        "t": np.nan,
        "skipped": 0 if result.ok else 1,
    }
    if result.ok:
        x, y, t = result.point.as_xyz()
        row.update(
            {
                "eta_re": result.eta.real,
                "eta_im": result.eta.imag,
                "r": result.r,
                "x": x,
                "y": y,
                "t": t,
            }
        )
    return row


def results_to_frame(results: List[SampleResult]) -> pd.DataFrame:
    """
    Tabulate reconstruction results, one row per sample in sample order.

    Samples rejected by the section (poles of the torus) keep their coordinates and chart,
    have empty numeric columns and ``skipped`` = 1.
    """
    df = pd.DataFrame([_result_row(result) for result in results], columns=CSV_COLUMNS)
    df["chart"] = df["chart"].astype(int)
    df["skipped"] = df["skipped"].astype(int)
    return df


def csv_text(df: pd.DataFrame) -> str:
    """The sample table as CSV text with 17 significant digits."""
    return df.to_csv(
        index=False, columns=CSV_COLUMNS, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n"
    )


def write_csv(df: pd.DataFrame, csv_path: Union[str, Path]) -> Path:
    """Write the sample table to ``csv_path``, creating parent directories."""
    csv_path = Path(csv_path)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    with open(csv_path, "w", encoding="utf-8", newline="") as f:
        f.write(csv_text(df))
    return csv_path


def write_obj(df: pd.DataFrame, obj_path: Union[str, Path]) -> Path:
    """Write the reconstructed points as an OBJ point cloud (``v x y t`` lines, no faces)."""
    obj_path = Path(obj_path)
    obj_path.parent.mkdir(parents=True, exist_ok=True)

    points = df.loc[df["skipped"] == 0, ["x", "y", "t"]]
    with open(obj_path, "w", encoding="utf-8") as f:
        for x, y, t in points.itertuples(index=False):
            f.write(f"v {FLOAT_FORMAT % x} {FLOAT_FORMAT % y} {FLOAT_FORMAT % t}\n")
    return obj_path
