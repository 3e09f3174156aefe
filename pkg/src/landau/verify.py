"""Invariant suite behind the `verify` command: one measured residual per
module-level property, with the tolerance it is held to. Residuals are
reported as numbers, not just booleans, so regressions show up as drift."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import maggroup, spectral
from .config import TorusConfig
from .finitediff import interior
from .gauge import (
    cocycle_defect,
    flux_consistency_defect,
    polyakov_phase_x,
    polyakov_phase_y,
    standard_transition_functions,
)
from .plane import (
    CoherentLabel,
    FockLabel,
    apply_operator_plane,
    coherent_amplitude,
    ladder_apply,
    sample_plane,
)
from .torus import (
    TorusLabel,
    apply_tx,
    apply_ty,
    coherent_translation_series,
    default_grid,
    eigenvalue_residual,
    expectation,
    projector_distance,
    torus_coherent,
    torus_eigenstate,
    torus_inner,
    translation_expectation,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": bool(self.passed),
        }


def _fock_commutator_residual(rng) -> float:
    labels = [FockLabel(int(n), int(m)) for n, m in rng.integers(0, 6, size=(20, 2))]
    coeffs = {}
    for lab in labels:
        coeffs[lab] = complex(rng.normal(), rng.normal())

    def comm(p, q, state):
        ab = ladder_apply(p, ladder_apply(q, state))
        ba = ladder_apply(q, ladder_apply(p, state))
        return {k: ab.get(k, 0.0) - ba.get(k, 0.0) for k in set(ab) | set(ba)}

    worst = 0.0
    for p, q, expected in (("a", "adag", 1.0), ("b", "bdag", 1.0), ("a", "b", 0.0), ("a", "bdag", 0.0)):
        c = comm(p, q, coeffs)
        diff = {k: c.get(k, 0.0) - expected * coeffs.get(k, 0.0) for k in set(c) | set(coeffs)}
        worst = max(worst, max((abs(v) for v in diff.values()), default=0.0))
    return worst


def _heisenberg_residual(cfg) -> float:
    mw = cfg.mass_omega
    h = math.sqrt(2.5e-4 / mw)
    half = 9.0 / math.sqrt(mw)
    m = int(math.ceil(half / h))
    xs = h * np.arange(-m, m + 1)
    ys = h * np.arange(-m, m + 1)
    amp = coherent_amplitude(cfg, CoherentLabel(0.3 + 0.2j, -0.1 + 0.4j))
    values = sample_plane(amp, xs, ys)

    def op(name, g):
        return apply_operator_plane(name, g, xs, ys, cfg)

    comm = op("Rx", op("Ry", values)) - op("Ry", op("Rx", values))
    margin = 6
    w = interior(comm, margin)
    fw = interior(values, margin)
    val = np.vdot(fw, w) / np.vdot(fw, fw)
    return float(abs(val - 1j / mw))


def run_verification(cfg: TorusConfig, nphi_override: float | None = None, seed: int = 0):
    """All module invariants at the given config. Returns (checks, all_pass).

    nphi_override (possibly non-integer) recomputes the flux-consistency
    check with that flux instead of cfg.n_phi, which demonstrates how a
    non-quantized flux breaks the boundary-condition consistency.
    """
    rng = np.random.default_rng(seed)
    checks: list[Check] = []
    e = cfg.charge

    # flux quantization and boundary-shift consistency
    checks.append(
        Check(
            "flux_quantization_integer",
            abs(e * cfg.b_field * cfg.lx * cfg.ly / TWO_PI - cfg.n_phi),
            1.0e-12,
        )
    )
    flux = cfg.n_phi if nphi_override is None else nphi_override
    b_used = TWO_PI * flux / (e * cfg.lx * cfg.ly)
    checks.append(
        Check(
            "boundary_shift_consistency",
            flux_consistency_defect(e, b_used, cfg.lx, cfg.ly),
            1.0e-12,
        )
    )

    # cocycle condition, constant in (x, y)
    tf = standard_transition_functions(cfg)
    target = TWO_PI * cfg.n_phi / e
    pts = rng.uniform(-2.0, 2.0, size=(10, 2))
    cdef = max(abs(cocycle_defect(tf, cfg, x, y) - target) for x, y in pts)
    checks.append(Check("cocycle_defect_constant", cdef, 1.0e-9 * max(1.0, target)))

    # Polyakov phases periodic under elementary steps
    ys = rng.uniform(0.0, cfg.ly, size=8)
    xs = rng.uniform(0.0, cfg.lx, size=8)
    p = max(
        np.max(np.abs(polyakov_phase_x(cfg, ys + cfg.ay) - polyakov_phase_x(cfg, ys))),
        np.max(np.abs(polyakov_phase_y(cfg, xs + cfg.ax) - polyakov_phase_y(cfg, xs))),
    )
    checks.append(Check("polyakov_step_periodicity", float(p), 1.0e-12))

    # group axioms and representation
    n = cfg.n_phi
    els = maggroup.elements(min(n, 4)) if n > 1 else maggroup.elements(2)
    nn = els[0].n_phi
    worst = 0.0
    for _ in range(200):
        g, h, k = (els[rng.integers(len(els))] for _ in range(3))
        lhs = maggroup.multiply(maggroup.multiply(g, h), k)
        rhs = maggroup.multiply(g, maggroup.multiply(h, k))
        worst = max(worst, 0.0 if lhs == rhs else 1.0)
    for g in els:
        ok = maggroup.multiply(g, maggroup.inverse(g)) == maggroup.identity(nn)
        worst = max(worst, 0.0 if ok else 1.0)
    worst = max(worst, 0.0 if maggroup.center(nn) == maggroup.center_brute_force(nn) else 1.0)
    checks.append(Check("group_axioms", worst, 0.5))

    rep = maggroup.clock_and_shift(max(n, 2))
    checks.append(Check("weyl_matrix_relation", maggroup.weyl_deviation(rep), 1.0e-14))
    hom = 0.0
    for _ in range(100):
        g, h = (els[rng.integers(len(els))] for _ in range(2))
        rep_n = maggroup.clock_and_shift(nn)
        lhs = maggroup.represent(rep_n, maggroup.multiply(g, h))
        rhs = maggroup.represent(rep_n, g) @ maggroup.represent(rep_n, h)
        hom = max(hom, float(np.max(np.abs(lhs - rhs))))
    checks.append(Check("representation_homomorphism", hom, 1.0e-12))

    # torus states: boundary condition, orthonormality, translation actions
    nx, ny = default_grid(cfg)
    states = {
        (lev, l): torus_eigenstate(cfg, TorusLabel(lev, l), nx=nx, ny=ny)
        for lev in range(3)
        for l in range(n)
    }
    checks.append(
        Check(
            "torus_boundary_residual",
            max(s.boundary_residual() for s in states.values()),
            1.0e-8,
        )
    )
    gram_dev = 0.0
    for lev in range(3):
        for l1 in range(n):
            for l2 in range(n):
                ov = torus_inner(states[(lev, l1)], states[(lev, l2)])
                gram_dev = max(gram_dev, abs(ov - (1.0 if l1 == l2 else 0.0)))
    checks.append(Check("degenerate_basis_orthonormality", gram_dev, 1.0e-8))

    st = states[(1, 0)]
    checks.append(
        Check(
            "hamiltonian_eigen_residual",
            eigenvalue_residual("H", st, cfg.omega * 1.5),
            1.0e-3,
        )
    )

    s0 = states[(0, 0)]
    weyl_states = apply_ty(apply_tx(s0)).values - np.exp(TWO_PI * 1j / n) * apply_tx(apply_ty(s0)).values
    checks.append(
        Check(
            "weyl_relation_on_states",
            float(np.max(np.abs(weyl_states)) / np.max(np.abs(s0.values))),
            1.0e-10,
        )
    )
    ladder = abs(abs(torus_inner(states[(0, 1 % n)], apply_tx(s0))) - 1.0)
    ty_eig = abs(torus_inner(s0, apply_ty(s0)) - 1.0)
    checks.append(Check("tx_ladder_overlap", ladder, 1.0e-8))
    checks.append(Check("ty_eigenvalue", ty_eig, 1.0e-8))

    # the two degeneracy bases span the same subspace
    set_ly = [states[(0, l)] for l in range(n)]
    set_lx = [torus_eigenstate(cfg, TorusLabel(0, l, "lx"), nx=nx, ny=ny) for l in range(n)]
    checks.append(Check("basis_projector_distance", projector_distance(set_ly, set_lx), 1.0e-8))

    # coherent states on the torus
    lab = CoherentLabel(0.35 + 0.2j, 0.3 - 0.4j)
    coh = torus_coherent(cfg, lab, nx=nx, ny=ny)
    checks.append(Check("coherent_boundary_residual", coh.boundary_residual(), 1.0e-8))
    e_target = cfg.omega * (abs(lab.lam) ** 2 + 0.5)
    checks.append(
        Check(
            "coherent_energy_expectation",
            abs(expectation("H", coh) - e_target) / e_target,
            1.0e-3,
        )
    )
    series = coherent_translation_series(cfg, lab, lx=1)
    quad = translation_expectation(coh, "x", 1)
    checks.append(Check("translation_expectation_series", abs(series - quad), 1.0e-8))

    # ladder algebra on Fock maps and plane-state operator identities
    checks.append(Check("fock_commutators", _fock_commutator_residual(rng), 1.0e-12))
    checks.append(Check("heisenberg_center_commutator", _heisenberg_residual(cfg), 1.0e-6))

    # discrete spectrum: multiplicities n_phi, means near omega*(n+1/2)
    grid = max(48, 16 * n)
    grid = -(-grid // n) * n
    ham = spectral.build_hamiltonian(cfg, grid, grid)
    report = spectral.low_spectrum(ham, 2 * n)
    dev = 0.0
    for cluster in report.clusters:
        if cluster.multiplicity != n:
            dev = 1.0
        dev = max(dev, abs(cluster.relative_deviation))
    checks.append(Check("spectrum_clusters", dev, 0.05))

    return checks, all(c.passed for c in checks)
