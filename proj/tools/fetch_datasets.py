#!/usr/bin/env python3
"""Rebuild data/wisconsin.csv and data/cleveland.csv.

Both files come out of Python wheels on PyPI, because the UCI mirror is not
always reachable:

  wisconsin.csv  keel-ds 0.2.5, keel_ds/data/balanced/raw/wisconsin.dat
                 (KEEL copy of Breast Cancer Wisconsin, 683 complete rows)
  cleveland.csv  Orange3 3.39.0, Orange/datasets/heart_disease.tab
                 (Cleveland heart disease, 303 rows, '?' marks missing)

Usage: fetch_datasets.py [--wheels DIR] [--out DIR]
If DIR already holds the wheels, nothing is downloaded.
"""

import argparse
import pathlib
import subprocess
import sys
import zipfile

WISCONSIN_COLUMNS = [
    "clump_thickness", "cell_size_uniformity", "cell_shape_uniformity",
    "marginal_adhesion", "epithelial_cell_size", "bare_nuclei",
    "bland_chromatin", "normal_nucleoli", "mitoses", "class",
]


def wheel(dirpath, prefix, requirement):
    found = sorted(dirpath.glob(prefix + "*.whl"))
    if not found:
        subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps",
                        "-d", str(dirpath), requirement], check=True)
        found = sorted(dirpath.glob(prefix + "*.whl"))
    return found[0]


def wisconsin(whl, out):
    with zipfile.ZipFile(whl) as z:
        text = z.read("keel_ds/data/balanced/raw/wisconsin.dat").decode()
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("@")]
    with open(out, "w", newline="\n") as f:
        f.write(",".join(WISCONSIN_COLUMNS) + "\n")
        for r in rows:
            f.write(",".join(c.strip() for c in r.split(",")) + "\n")
    return len(rows)


def cleveland(whl, out):
    with zipfile.ZipFile(whl) as z:
        text = z.read("Orange/datasets/heart_disease.tab").decode()
    lines = text.splitlines()
    header = [c.strip().replace(" ", "_").replace(">", "gt") for c in lines[0].split("\t")]
    n = 0
    with open(out, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for ln in lines[3:]:
            if not ln.strip():
                continue
            cells = [c.strip() or "?" for c in ln.split("\t")]
            f.write(",".join(c.replace(",", ";") for c in cells) + "\n")
            n += 1
    return n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wheels", default="/tmp/rsar-wheels")
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    wdir = pathlib.Path(args.wheels)
    wdir.mkdir(parents=True, exist_ok=True)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n = wisconsin(wheel(wdir, "keel_ds-", "keel-ds==0.2.5"), out / "wisconsin.csv")
    print(f"wisconsin.csv: {n} rows")
    n = cleveland(wheel(wdir, "orange3-", "orange3==3.39.0"), out / "cleveland.csv")
    print(f"cleveland.csv: {n} rows")


if __name__ == "__main__":
    main()
