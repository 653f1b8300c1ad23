#!/usr/bin/env python3
"""Render agent paths, center path and dispersion against rho^2 for run artifacts.

usage: plot_trajectories.py RUN_DIR [RUN_DIR ...] -o OUT_DIR
"""
import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def load(run):
    traj = np.genfromtxt(run / "trajectory.csv", delimiter=",", names=True)
    center = np.genfromtxt(run / "center.csv", delimiter=",", names=True)
    series = np.genfromtxt(run / "series.csv", delimiter=",", names=True)
    return traj, center, series


def plot(run, out_dir):
    traj, center, series = load(run)
    if "x1" not in traj.dtype.names:
        raise SystemExit(f"{run}: only planar runs can be drawn")

    fig, (paths, disp) = plt.subplots(1, 2, figsize=(11, 4.6))
    for agent in np.unique(traj["agent"]).astype(int):
        rows = traj[traj["agent"] == agent]
        line, = paths.plot(rows["x0"], rows["x1"], lw=0.8)
        paths.plot(rows["x0"][0], rows["x1"][0], "o", ms=3, color=line.get_color())
        paths.plot(rows["x0"][-1], rows["x1"][-1], "s", ms=4, color=line.get_color())
    paths.plot(center["c0"], center["c1"], "k-", lw=1.6, label="swarm center")
    paths.plot(center["c0"][0], center["c1"][0], "k*", ms=9)
    paths.set_aspect("equal", adjustable="datalim")
    paths.set_xlabel("x")
    paths.set_ylabel("y")
    paths.set_title(f"{run.name}: agent paths (o start, s end)")
    paths.legend(loc="best", fontsize=8)

    disp.semilogy(series["t"], series["dispersion"], label=r"$\sum_i \|x_i - \bar x\|^2$")
    disp.semilogy(series["t"], series["rho_sq"], "r--", label=r"$\rho^2$")
    disp.set_xlabel("t [s]")
    disp.set_title("dispersion vs. cohesion bound")
    disp.legend(loc="best", fontsize=8)

    fig.tight_layout()
    out = out_dir / f"{run.name}.png"
    fig.savefig(out, dpi=110)
    plt.close(fig)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("runs", nargs="+", type=Path)
    ap.add_argument("-o", "--out", type=Path, default=Path("docs"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for run in args.runs:
        print(plot(run, args.out))


if __name__ == "__main__":
    main()
