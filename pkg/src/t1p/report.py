"""CSV and PNG reports for corpus and scaling runs."""

from __future__ import annotations

import csv
import math
import statistics
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIELDS = ("name", "n", "m", "decision", "count", "expected", "status", "seconds", "reason")


def write_csv(rows: Iterable[dict], path: str | Path, fields: Sequence[str] = FIELDS) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(fields), extrasaction="ignore")
        w.writeheader()
        for row in rows:
            w.writerow(row)


def loglog_slope(ns: Sequence[float], secs: Sequence[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(max(s, 1e-9)) for s in secs]
    return statistics.linear_regression(xs, ys).slope


def plot_runtime(rows: Sequence[dict], path: str | Path, title: str = "recognition runtime") -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    groups: dict[str, list[dict]] = {}
    for r in rows:
        groups.setdefault(str(r.get("decision", "")), []).append(r)
    for label, rs in sorted(groups.items()):
        ax.scatter([r["n"] for r in rs], [max(float(r["seconds"]), 1e-6) for r in rs],
                   s=14, label=label or "?")
    ns = sorted({r["n"] for r in rows})
    if len(ns) > 1 and min(ns) > 0:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel("n (vertices)")
    ax.set_ylabel("seconds")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
