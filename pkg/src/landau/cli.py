"""Command-line front end.

Subcommands: spectrum, density, group, verify, orbit, coherent. Physical
parameters come from flags or from a key=value config file (--config), with
flags taking precedence. Every command writes its outputs plus a run
manifest (<command>_manifest.json) listing them; outputs themselves are
deterministic, so identical flags give byte-identical files.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, maggroup
from .config import parse_config_text, torus_config_from_mapping
from .plane import (
    ClassicalOrbit,
    CoherentLabel,
    classical_orbit_trace,
    coherent_expectations,
    evolve_coherent,
)
from .serialize import write_density_csv, write_json, write_pgm, write_trace_csv
from .spectral import build_hamiltonian, low_spectrum
from .torus import TorusLabel, density_map, torus_coherent, torus_eigenstate
from .verify import run_verification

CONFIG_KEYS = ("mass", "charge", "lx", "ly", "nphi", "theta_x", "theta_y")


def _add_config_flags(parser):
    parser.add_argument("--mass", type=float, default=None)
    parser.add_argument("--charge", type=float, default=None)
    parser.add_argument("--lx", type=float, default=None)
    parser.add_argument("--ly", type=float, default=None)
    parser.add_argument("--nphi", type=int, default=None)
    parser.add_argument("--theta-x", dest="theta_x", type=float, default=None)
    parser.add_argument("--theta-y", dest="theta_y", type=float, default=None)
    parser.add_argument("--config", type=str, default=None, help="key=value config file")
    parser.add_argument("--out-dir", dest="out_dir", type=str, default=".")


def _merge_config(args, parser) -> dict:
    """Defaults < config file < explicit flags; nphi is mandatory."""
    values = {"mass": 1.0, "charge": 1.0, "lx": 1.0, "ly": 1.0, "theta_x": 0.0, "theta_y": 0.0}
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
            values.update(parse_config_text(text))
        except (OSError, ValueError) as exc:
            parser.error(f"bad config file: {exc}")
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if "nphi" not in values or values["nphi"] is None:
        parser.error("--nphi is required (flag or config file)")
    return values


def _manifest(command, values, outputs, started, out_dir, seed=None, extra=None):
    payload = {
        "command": command,
        "config": {k: values.get(k) for k in CONFIG_KEYS if k in values},
        "seed": seed,
        "version": __version__,
        "outputs": sorted(str(Path(p).name) for p in outputs),
        "wall_time_s": time.perf_counter() - started,
    }
    if extra:
        payload.update(extra)
    path = Path(out_dir) / f"{command}_manifest.json"
    write_json(payload, path)
    return path


def _parse_complex(text: str, parser, flag: str) -> complex:
    try:
        return complex(text)
    except ValueError:
        parser.error(f"{flag} expects a complex literal like 0.5+0.3j, got {text!r}")


def cmd_spectrum(args, parser) -> int:
    started = time.perf_counter()
    values = _merge_config(args, parser)
    cfg = torus_config_from_mapping(values)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = args.grid
    ham = build_hamiltonian(cfg, grid, grid)
    report = low_spectrum(ham, args.levels * cfg.n_phi)
    payload = report.as_dict()
    payload.pop("wall_time_s")  # timing lives in the manifest; outputs stay byte-stable
    payload["grid"] = grid
    payload["analytic_levels"] = [cfg.omega * (n + 0.5) for n in range(args.levels)]
    path = out_dir / "spectrum.json"
    write_json(payload, path)
    _manifest("spectrum", values, [path], started, out_dir, extra={"grid": grid, "levels": args.levels})
    for c in report.clusters:
        print(
            f"cluster mean={c.mean:.8g} multiplicity={c.multiplicity} "
            f"target={c.target:.8g} rel_dev={c.relative_deviation:+.2e}"
        )
    return 0


def cmd_density(args, parser) -> int:
    started = time.perf_counter()
    values = _merge_config(args, parser)
    cfg = torus_config_from_mapping(values)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = -(-args.grid // cfg.n_phi) * cfg.n_phi

    eigen_selector = args.n is not None or args.l is not None
    coherent_selector = args.lam is not None or args.lam_prime is not None
    if eigen_selector and coherent_selector:
        parser.error("choose either an eigenstate (--n/--l) or a coherent state (--lam/--lam-prime)")
    if eigen_selector:
        state = torus_eigenstate(
            cfg, TorusLabel(args.n or 0, args.l or 0, args.basis), nx=grid, ny=grid
        )
        selector = {"kind": "eigenstate", "n": args.n or 0, "l": args.l or 0, "basis": args.basis}
    elif coherent_selector:
        lam = _parse_complex(args.lam or "0", parser, "--lam")
        lam_prime = _parse_complex(args.lam_prime or "0", parser, "--lam-prime")
        state = torus_coherent(cfg, CoherentLabel(lam, lam_prime), nx=grid, ny=grid)
        selector = {
            "kind": "coherent",
            "lam": [lam.real, lam.imag],
            "lam_prime": [lam_prime.real, lam_prime.imag],
        }
    else:
        parser.error("no state selected: pass --n/--l or --lam/--lam-prime")
        return 2

    dmap = density_map(state)
    csv_path = out_dir / "density.csv"
    pgm_path = out_dir / "density.pgm"
    argmax_path = out_dir / "argmax.json"
    write_density_csv(dmap, csv_path)
    write_pgm(dmap, pgm_path)
    integral = float(dmap.density[:-1, :-1].sum() * state.hx * state.hy)
    write_json(
        {
            "argmax_x": dmap.argmax_x,
            "argmax_y": dmap.argmax_y,
            "grid": [state.nx + 1, state.ny + 1],
            "integral": integral,
            "selector": selector,
        },
        argmax_path,
    )
    _manifest(
        "density", values, [csv_path, pgm_path, argmax_path], started, out_dir,
        extra={"grid": grid},
    )
    print(f"density argmax at ({dmap.argmax_x:.6g}, {dmap.argmax_y:.6g}), integral {integral:.12g}")
    return 0


def cmd_group(args, parser) -> int:
    started = time.perf_counter()
    if args.nphi is None:
        parser.error("--nphi is required")
    n = args.nphi
    if n > 12:
        parser.error(f"--nphi {n} too large for a full table dump (limit 12)")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    els = maggroup.elements(n)
    index = {g: i for i, g in enumerate(els)}
    table = [[index[maggroup.multiply(g, h)] for h in els] for g in els]
    classes = sorted(
        {maggroup.conjugacy_class(g) for g in els},
        key=lambda cl: min(index[g] for g in cl),
    )
    rep = maggroup.clock_and_shift(n)

    def mat_to_list(m):
        return [[[float(v.real), float(v.imag)] for v in row] for row in m]

    payload = {
        "n_phi": n,
        "order": len(els),
        "elements": [[g.nx, g.ny, g.m] for g in els],
        "multiplication_table": table,
        "conjugacy_classes": [sorted(index[g] for g in cl) for cl in classes],
        "center": sorted(index[g] for g in maggroup.center(n)),
        "tx": mat_to_list(rep.tx),
        "ty": mat_to_list(rep.ty),
        "weyl_deviation": maggroup.weyl_deviation(rep),
    }
    path = out_dir / "group.json"
    write_json(payload, path)
    _manifest("group", {"nphi": n}, [path], started, out_dir)
    print(
        f"group of order {len(els)}: {len(classes)} conjugacy classes, "
        f"center size {n}, weyl deviation {payload['weyl_deviation']:.2e}"
    )
    return 0


def cmd_verify(args, parser) -> int:
    started = time.perf_counter()
    values = _merge_config(args, parser)
    cfg = torus_config_from_mapping(values)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    checks, ok = run_verification(cfg, nphi_override=args.nphi_override, seed=args.seed)
    payload = {
        "all_passed": bool(ok),
        "checks": [c.as_dict() for c in checks],
        "nphi_override": args.nphi_override,
    }
    path = out_dir / "verify.json"
    write_json(payload, path)
    _manifest("verify", values, [path], started, out_dir, seed=args.seed)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: residual {c.residual:.3e} (tol {c.tolerance:.1e})")
    print("verification:", "all passed" if ok else "FAILURES above")
    return 0 if ok else 1


def cmd_orbit(args, parser) -> int:
    started = time.perf_counter()
    values = _merge_config(args, parser)
    cfg = torus_config_from_mapping(values)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    orbit = ClassicalOrbit(
        center_x=args.center_x,
        center_y=args.center_y,
        radius=args.radius,
        phase0=args.phase0,
        omega=cfg.omega,
    )
    period = 2.0 * math.pi / cfg.omega
    times = np.linspace(0.0, args.periods * period, args.periods * args.samples + 1)
    wrapped = classical_orbit_trace(orbit, times, wrap=(cfg.lx, cfg.ly))
    free = classical_orbit_trace(orbit, times)
    closure = float(np.max(np.abs(free[-1] - free[0]))) if args.periods >= 1 else float("nan")
    wraps = bool(np.any(np.abs(np.diff(wrapped, axis=0)) > orbit.radius * cfg.omega * period / args.samples * 4 + 1e-12))
    csv_path = out_dir / "orbit.csv"
    write_trace_csv(times, wrapped, csv_path)
    info_path = out_dir / "orbit.json"
    write_json(
        {
            "closure_residual": closure,
            "closes": closure < 1.0e-9,
            "crosses_boundary": wraps,
            "period": period,
            "radius": args.radius,
        },
        info_path,
    )
    _manifest("orbit", values, [csv_path, info_path], started, out_dir)
    print(f"orbit closure residual {closure:.2e}; crosses boundary: {wraps}")
    return 0


def cmd_coherent(args, parser) -> int:
    started = time.perf_counter()
    values = _merge_config(args, parser)
    cfg = torus_config_from_mapping(values)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    lam = _parse_complex(args.lam, parser, "--lam")
    lam_prime = _parse_complex(args.lam_prime, parser, "--lam-prime")
    label = CoherentLabel(lam, lam_prime)
    period = 2.0 * math.pi / cfg.omega
    times = np.linspace(0.0, args.periods * period, args.periods * args.samples + 1)
    path = out_dir / "coherent.csv"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t,x,y,energy,delta_x,delta_y,delta_energy\n")
        for t in times:
            ex = coherent_expectations(cfg, evolve_coherent(cfg, label, float(t)))
            x = ex.center_x + ex.rel_x
            y = ex.center_y + ex.rel_y
            dx = math.hypot(ex.spread_center_x, ex.spread_rel_x)
            dy = math.hypot(ex.spread_center_y, ex.spread_rel_y)
            fh.write(
                f"{t:.17g},{x:.17g},{y:.17g},{ex.energy:.17g},"
                f"{dx:.17g},{dy:.17g},{ex.spread_energy:.17g}\n"
            )
    _manifest("coherent", values, [path], started, out_dir)
    print(f"wrote {args.periods * args.samples + 1} steps over {args.periods} period(s)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="landau",
        description="Charged particle in a uniform magnetic field on plane and torus",
    )
    parser.add_argument("--version", action="version", version=f"landau {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="discrete-Hamiltonian Landau spectrum and degeneracy")
    _add_config_flags(p)
    p.add_argument("--grid", type=int, default=96)
    p.add_argument("--levels", type=int, default=3)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("density", help="probability density of a torus state")
    _add_config_flags(p)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--basis", choices=("ly", "lx"), default="ly")
    p.add_argument("--lam", type=str, default=None)
    p.add_argument("--lam-prime", dest="lam_prime", type=str, default=None)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("group", help="magnetic translation group tables and representation")
    p.add_argument("--nphi", type=int, default=None)
    p.add_argument("--out-dir", dest="out_dir", type=str, default=".")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("verify", help="run all module invariants")
    _add_config_flags(p)
    p.add_argument("--nphi-override", dest="nphi_override", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="classical cyclotron orbit trace on the torus")
    _add_config_flags(p)
    p.add_argument("--center-x", dest="center_x", type=float, default=0.0)
    p.add_argument("--center-y", dest="center_y", type=float, default=0.0)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--phase0", type=float, default=0.0)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--samples", type=int, default=256)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("coherent", help="coherent-state expectation time series")
    _add_config_flags(p)
    p.add_argument("--lam", type=str, required=True)
    p.add_argument("--lam-prime", dest="lam_prime", type=str, required=True)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--samples", type=int, default=64)
    p.set_defaults(func=cmd_coherent)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
