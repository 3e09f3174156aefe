"""File formats: CSV (header row, '.' decimal, '\\n' line ends), plain-text
PGM (P2), and JSON with stable key order. All writers are deterministic so
identical inputs give byte-identical files."""

from __future__ import annotations

import json

import numpy as np


def _fmt(v) -> str:
    return format(float(v), ".17g")


def write_state_csv(state, path) -> None:
    """Columns x, y, re, im over the closed grid."""
    xs, ys = state.xs, state.ys
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y,re,im\n")
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                v = state.values[i, j]
                fh.write(f"{_fmt(x)},{_fmt(y)},{_fmt(v.real)},{_fmt(v.imag)}\n")


def write_density_csv(dmap, path) -> None:
    """Columns x, y, density."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y,density\n")
        for i, x in enumerate(dmap.xs):
            for j, y in enumerate(dmap.ys):
                fh.write(f"{_fmt(x)},{_fmt(y)},{_fmt(dmap.density[i, j])}\n")


def write_pgm(dmap, path) -> None:
    """8-bit plain PGM (P2), row-major with y decreasing down the image,
    values scaled to 0..255 by the grid maximum."""
    d = np.asarray(dmap.density, dtype=float)
    peak = d.max()
    scaled = np.zeros_like(d, dtype=int) if peak == 0 else np.rint(d / peak * 255).astype(int)
    width = d.shape[0]
    height = d.shape[1]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"P2\n{width} {height}\n255\n")
        for j in range(height - 1, -1, -1):
            fh.write(" ".join(str(int(scaled[i, j])) for i in range(width)))
            fh.write("\n")


def write_trace_csv(times, positions, path) -> None:
    """Columns t, x, y for an orbit trace."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t,x,y\n")
        for t, (x, y) in zip(times, positions):
            fh.write(f"{_fmt(t)},{_fmt(x)},{_fmt(y)}\n")


def write_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
