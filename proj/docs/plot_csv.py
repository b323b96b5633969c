#!/usr/bin/env python3
"""Plot a twotemp CSV: first column on x, every numeric column on y.

Long-format files (a model_tag column) get one line per tag.

    twotemp reproduce fig-attenuation-n2 --out att.csv
    python3 docs/plot_csv.py att.csv --y atten_factor --logx -o att.png
"""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("--x", help="x column (default: first)")
    ap.add_argument("--y", action="append", help="y column, repeatable (default: all numeric)")
    ap.add_argument("--group", default="model_tag", help="column that splits curves")
    ap.add_argument("--logx", action="store_true")
    ap.add_argument("-o", "--output", default="plot.png")
    a = ap.parse_args()

    df = pd.read_csv(a.csv, comment="#")
    x = a.x or df.columns[0]
    ys = a.y or [c for c in df.select_dtypes("number").columns if c != x]
    groups = df.groupby(a.group) if a.group in df.columns else [("", df)]

    fig, ax = plt.subplots()
    for tag, g in groups:
        for y in ys:
            label = f"{tag} {y}".strip() if len(ys) > 1 else str(tag or y)
            ax.plot(g[x], g[y], label=label)
    if a.logx:
        ax.set_xscale("log")
    ax.set_xlabel(x)
    ax.legend()
    fig.tight_layout()
    fig.savefig(a.output, dpi=150)


if __name__ == "__main__":
    main()
