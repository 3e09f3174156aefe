"""Analytic torus eigenstates and coherent states via truncated lattice sums,
grid-level magnetic translation operators, and the degeneracy / overlap
machinery built on them.

All states are carried as SampledState grids over the closed fundamental
domain [0, Lx] x [0, Ly] including both boundary lines, so the twisted
boundary condition can be checked rather than imposed. Grid dimensions are
multiples of n_phi in both directions, which makes the elementary steps
(a_x, a_y) exact grid shifts: apply_tx / apply_ty involve no interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TorusConfig
from .finitediff import apply_fd_operator
from .gauge import boundary_residual, x_boundary_twist, y_boundary_twist
from .oscillator import OscillatorBasis, hermite_eigenfunction
from .plane import CoherentLabel, _coherent_raw, coherent_center

TWO_PI = 2.0 * math.pi


class TruncationError(ValueError):
    """A requested lattice-sum cutoff cannot meet the tail tolerance."""


@dataclass(frozen=True)
class TorusLabel:
    """Torus eigenstate |n l> in either the Ty-diagonal basis ('ly') or the
    Tx-diagonal basis ('lx'); the energy depends only on n and the index l
    matters mod n_phi."""

    n: int
    l: int
    basis: str = "ly"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"level must be >= 0, got {self.n}")
        if self.basis not in ("ly", "lx"):
            raise ValueError(f"basis must be 'ly' or 'lx', got {self.basis!r}")


@dataclass(frozen=True)
class LatticeSumPolicy:
    """Truncation for the image sums: keep terms whose Gaussian factor at the
    domain exceeds `tolerance` relative to the peak; `cutoff` optionally caps
    the summation index and raises if the tail would then exceed tolerance."""

    cutoff: int | None = None
    tolerance: float = 1.0e-16

    def reach(self, decay: float) -> float:
        """Distance d with amplitude exp(-decay * d^2) = tolerance."""
        return math.sqrt(math.log(1.0 / self.tolerance) / decay)

    def indices(self, c0: float, step: float, lo: float, hi: float, width: float) -> range:
        """Integer k with Gaussian center c0 + k*step inside [lo-width, hi+width]."""
        a = (lo - width - c0) / step
        b = (hi + width - c0) / step
        if step < 0:
            a, b = b, a
        kmin, kmax = math.ceil(a), math.floor(b)
        if self.cutoff is not None and (kmin < -self.cutoff or kmax > self.cutoff):
            raise TruncationError(
                f"cutoff {self.cutoff} leaves tail above tolerance "
                f"{self.tolerance} (need indices [{kmin}, {kmax}])"
            )
        return range(kmin, kmax + 1)


class SampledState:
    """Complex amplitudes on the closed grid of the fundamental domain.

    values[ix, iy] with ix = 0..nx, iy = 0..ny covering x = ix*Lx/nx,
    y = iy*Ly/ny. Immutable once built; the duplicated boundary lines are
    excluded from inner products.
    """

    def __init__(self, config: TorusConfig, values: np.ndarray):
        values = np.asarray(values, dtype=complex)
        if values.ndim != 2:
            raise ValueError("values must be 2-d")
        nx, ny = values.shape[0] - 1, values.shape[1] - 1
        if nx % config.n_phi or ny % config.n_phi:
            raise ValueError(
                f"grid {nx}x{ny} not commensurate with n_phi={config.n_phi}"
            )
        values.setflags(write=False)
        self.config = config
        self.values = values

    @property
    def nx(self) -> int:
        return self.values.shape[0] - 1

    @property
    def ny(self) -> int:
        return self.values.shape[1] - 1

    @property
    def hx(self) -> float:
        return self.config.lx / self.nx

    @property
    def hy(self) -> float:
        return self.config.ly / self.ny

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(0.0, self.config.lx, self.nx + 1)

    @property
    def ys(self) -> np.ndarray:
        return np.linspace(0.0, self.config.ly, self.ny + 1)

    @property
    def core(self) -> np.ndarray:
        """Half-open grid without the duplicated boundary lines."""
        return self.values[:-1, :-1]

    def boundary_residual(self) -> float:
        return boundary_residual(self)


def default_grid(cfg: TorusConfig, budget: float = 1.0e-3) -> tuple[int, int]:
    """Grid dimensions: multiples of n_phi with spacing h satisfying
    h^2 * M*w <= budget (the finite-difference accuracy rule)."""
    h = math.sqrt(budget / cfg.mass_omega)

    def round_up(n_target):
        n = max(n_target, 8 * cfg.n_phi, 32)
        return -(-n // cfg.n_phi) * cfg.n_phi

    return round_up(math.ceil(cfg.lx / h)), round_up(math.ceil(cfg.ly / h))


def grid_axes(cfg: TorusConfig, nx: int, ny: int):
    xs = np.linspace(0.0, cfg.lx, nx + 1)
    ys = np.linspace(0.0, cfg.ly, ny + 1)
    return xs, ys


def sample_on_torus(cfg: TorusConfig, func, nx=None, ny=None, normalize=False) -> SampledState:
    """Sample an arbitrary amplitude callable on the closed grid. No boundary
    condition is imposed; use gauge.boundary_residual to test it."""
    if nx is None or ny is None:
        dx, dy = default_grid(cfg)
        nx = nx or dx
        ny = ny or dy
    xs, ys = grid_axes(cfg, nx, ny)
    values = np.asarray(func(xs[:, None], ys[None, :]), dtype=complex)
    state = SampledState(cfg, values)
    return normalized(state) if normalize else state


def torus_inner(a: SampledState, b: SampledState) -> complex:
    """Trapezoid inner product <a|b> over the fundamental domain (the
    duplicated boundary lines are excluded, i.e. periodic trapezoid)."""
    if a.values.shape != b.values.shape:
        raise ValueError(f"grid mismatch: {a.values.shape} vs {b.values.shape}")
    return complex(np.vdot(a.core, b.core) * a.hx * a.hy)


def torus_norm(a: SampledState) -> float:
    return math.sqrt(max(torus_inner(a, a).real, 0.0))


def normalized(state: SampledState) -> SampledState:
    n = torus_norm(state)
    if n == 0.0:
        raise ValueError("cannot normalize the zero state")
    return SampledState(state.config, state.values / n)


# ---------------------------------------------------------------------------
# analytic state construction


def torus_eigenstate(
    cfg: TorusConfig,
    label: TorusLabel,
    policy: LatticeSumPolicy | None = None,
    nx: int | None = None,
    ny: int | None = None,
) -> SampledState:
    """Simultaneous eigenstate of H (energy omega*(n+1/2)) and of Ty
    (basis 'ly', eigenvalue exp(2 pi i l / n_phi)) or Tx (basis 'lx').

    In the 'ly' basis the amplitude is the image sum over k of

        psi_n(x + (n_phi k + l + theta_y/2pi) Lx/n_phi)
        * exp(2 pi i y (n_phi k + l + theta_y/2pi) / Ly - i theta_x k)

    and the 'lx' basis is the analogous sum along y with the extra gauge
    factor exp(-2 pi i n_phi x y / (Lx Ly)). The overall constant is made
    positive real by unit normalization; term phases stay as written.
    """
    policy = policy or LatticeSumPolicy()
    if nx is None or ny is None:
        dx, dy = default_grid(cfg)
        nx = nx or dx
        ny = ny or dy
    xs, ys = grid_axes(cfg, nx, ny)
    basis = OscillatorBasis(cfg.mass_omega, max_level=max(label.n, 1))
    # oscillator amplitude ~ exp(-M w u^2 / 2) beyond the turning point
    width = math.sqrt(2.0 * label.n + 1.0) / math.sqrt(cfg.mass_omega) + policy.reach(
        cfg.mass_omega / 2.0
    )
    values = np.zeros((nx + 1, ny + 1), dtype=complex)

    if label.basis == "ly":
        # Gaussian centers in x at -(l + theta_y/2pi) a_x - k Lx
        c0 = -(label.l + cfg.theta_y / TWO_PI) * cfg.ax
        for k in policy.indices(c0, -cfg.lx, 0.0, cfg.lx, width):
            kval = cfg.n_phi * k + label.l + cfg.theta_y / TWO_PI
            profile = hermite_eigenfunction(basis, label.n, xs + kval * cfg.ax)
            wave = np.exp(TWO_PI * 1j * ys * kval / cfg.ly - 1j * cfg.theta_x * k)
            values += profile[:, None] * wave[None, :]
    else:
        # Gaussian centers in y at (l + theta_x/2pi) a_y + k Ly
        c0 = (label.l + cfg.theta_x / TWO_PI) * cfg.ay
        cross = np.exp(-TWO_PI * 1j * cfg.n_phi * xs[:, None] * ys[None, :] / (cfg.lx * cfg.ly))
        for k in policy.indices(c0, cfg.ly, 0.0, cfg.ly, width):
            qval = cfg.n_phi * k + label.l + cfg.theta_x / TWO_PI
            profile = hermite_eigenfunction(basis, label.n, ys - qval * cfg.ay)
            wave = np.exp(TWO_PI * 1j * xs * qval / cfg.lx + 1j * cfg.theta_y * k)
            values += wave[:, None] * profile[None, :] * cross

    return normalized(SampledState(cfg, values))


def torus_coherent(
    cfg: TorusConfig,
    c: CoherentLabel,
    policy: LatticeSumPolicy | None = None,
    nx: int | None = None,
    ny: int | None = None,
) -> SampledState:
    """Torus coherent state: the image sum over full-period magnetic
    translations of the infinite-volume coherent amplitude f,

        sum_{kx, ky} exp(2 pi i n_phi kx y / Ly - i kx theta_x - i ky theta_y)
                     f(x + kx Lx, y + ky Ly),

    normalized on the grid (the normalization constant is not assumed)."""
    policy = policy or LatticeSumPolicy()
    if nx is None or ny is None:
        dx, dy = default_grid(cfg)
        nx = nx or dx
        ny = ny or dy
    xs, ys = grid_axes(cfg, nx, ny)
    raw = _coherent_raw(cfg, c)
    s2 = math.sqrt(2.0 / cfg.mass_omega)
    cx = s2 * (c.lam + c.lam_prime).real
    cy = s2 * (c.lam_prime.imag - c.lam.imag)
    # coherent amplitude ~ exp(-M w d^2 / 4) around the packet center
    width = policy.reach(cfg.mass_omega / 4.0)

    values = np.zeros((nx + 1, ny + 1), dtype=complex)
    x2 = xs[:, None]
    y2 = ys[None, :]
    for kx in policy.indices(cx, -cfg.lx, 0.0, cfg.lx, width):
        for ky in policy.indices(cy, -cfg.ly, 0.0, cfg.ly, width):
            phase = np.exp(
                TWO_PI * 1j * cfg.n_phi * kx * y2 / cfg.ly
                - 1j * (kx * cfg.theta_x + ky * cfg.theta_y)
            )
            values += phase * raw(x2 + kx * cfg.lx, y2 + ky * cfg.ly)

    return normalized(SampledState(cfg, values))


# ---------------------------------------------------------------------------
# grid translation operators


def _close_grid(core: np.ndarray, cfg: TorusConfig, ys_core: np.ndarray) -> np.ndarray:
    """Attach the x = Lx and y = Ly boundary lines via the twist relation."""
    nx, ny = core.shape
    full = np.empty((nx + 1, ny + 1), dtype=complex)
    full[:nx, :ny] = core
    full[nx, :ny] = x_boundary_twist(cfg, ys_core) * core[0, :]
    ty = y_boundary_twist(cfg)
    full[:nx, ny] = ty * core[:, 0]
    full[nx, ny] = x_boundary_twist(cfg, np.array(0.0)) * ty * core[0, 0]
    return full


def apply_tx(state: SampledState) -> SampledState:
    """Elementary magnetic translation along x:

    (Tx Psi)(x, y) = exp(2 pi i y / Ly - i theta_x / n_phi) Psi(x + a_x, y),

    with the x-wrap supplied by the boundary twist. Implemented as an exact
    roll of the half-open core (a permutation times unit phases), so it is
    unitary on the grid inner product for any input; the duplicated boundary
    lines of the result are rebuilt from the twist relation."""
    cfg = state.config
    core = np.array(state.values[:-1, :-1])
    nx = state.nx
    s = nx // cfg.n_phi
    ys_core = state.ys[:-1]
    shifted = np.roll(core, -s, axis=0)
    if s > 0:
        shifted[nx - s :, :] *= x_boundary_twist(cfg, ys_core)[None, :]
    gauge = np.exp(TWO_PI * 1j * ys_core / cfg.ly - 1j * cfg.theta_x / cfg.n_phi)
    return SampledState(cfg, _close_grid(gauge[None, :] * shifted, cfg, ys_core))


def apply_ty(state: SampledState) -> SampledState:
    """Elementary magnetic translation along y:

    (Ty Psi)(x, y) = exp(-i theta_y / n_phi) Psi(x, y + a_y),

    an exact roll of the core with the y-twist on the wrapped block."""
    cfg = state.config
    core = np.array(state.values[:-1, :-1])
    ny = state.ny
    s = ny // cfg.n_phi
    ys_core = state.ys[:-1]
    shifted = np.roll(core, -s, axis=1)
    if s > 0:
        shifted[:, ny - s :] *= y_boundary_twist(cfg)
    out = np.exp(-1j * cfg.theta_y / cfg.n_phi) * shifted
    return SampledState(cfg, _close_grid(out, cfg, ys_core))


def apply_translation_power(state: SampledState, direction: str, power: int) -> SampledState:
    if power < 0:
        raise ValueError(f"power must be >= 0, got {power}")
    op = apply_tx if direction == "x" else apply_ty if direction == "y" else None
    if op is None:
        raise ValueError(f"direction must be 'x' or 'y', got {direction!r}")
    for _ in range(power):
        state = op(state)
    return state


# ---------------------------------------------------------------------------
# finite-difference operators on torus states


def apply_operator(op: str, state: SampledState) -> SampledState:
    """Apply a magnetic operator (H, L, Px, Py, Rx, Ry, a, adag, b, bdag) by
    4th-order finite differences.

    Derivative stencils reaching across the domain edges use the twisted
    periodic extension, which is exact for boundary-compliant states. For
    operators that do not commute with the full-period magnetic translations
    (L, Px, Py, Rx, Ry, b, bdag) the cells within 2 of an edge inherit the
    extension mismatch on second applications; compare on an interior margin
    in that case. The closed boundary lines of the result are rebuilt from
    the twist relation.
    """
    cfg = state.config
    core = state.values[:-1, :-1]
    xs = state.xs[:-1]
    ys = state.ys[:-1]
    out = apply_fd_operator(
        op,
        core,
        xs,
        ys,
        cfg,
        twist_x=x_boundary_twist(cfg, ys),
        twist_y=y_boundary_twist(cfg),
    )
    return SampledState(cfg, _close_grid(out, cfg, ys))


def expectation(op: str, state: SampledState) -> complex:
    """Quadrature expectation <Psi|O Psi> (state assumed unit-normalized)."""
    return torus_inner(state, apply_operator(op, state))


def eigenvalue_residual(op: str, state: SampledState, value: complex, margin: int = 0) -> float:
    """Relative L2 residual |(O - value) Psi| / |Psi| over the core grid,
    optionally trimmed by `margin` cells per edge."""
    applied = apply_operator(op, state).core
    base = state.core
    if margin:
        applied = applied[margin:-margin, margin:-margin]
        base = base[margin:-margin, margin:-margin]
    num = np.linalg.norm(applied - value * base)
    den = np.linalg.norm(base)
    return float(num / den)


def translation_expectation(state: SampledState, direction: str, power: int) -> complex:
    """<Psi| T_direction^power |Psi> by grid quadrature."""
    return torus_inner(state, apply_translation_power(state, direction, power))


# ---------------------------------------------------------------------------
# closed-form overlap series for torus coherent states


def _coherent_overlap_term(cfg: TorusConfig, c: CoherentLabel, lx: int, ly: int) -> complex:
    """<lam lam'| Tx^lx Ty^ly |lam lam'> in the infinite volume (closed form
    from the Gaussian overlap integral):

        exp[-(pi^2/Mw)(lx^2/Ly^2 + ly^2/Lx^2)] * exp[-i pi lx ly / n_phi]
        * exp[ i (2 pi <R_y>/Ly - theta_x/n_phi) lx]
        * exp[-i (2 pi <R_x>/Lx + theta_y/n_phi) ly]
    """
    mw = cfg.mass_omega
    rx, ry = coherent_center(cfg, c)
    gauss = math.exp(-(math.pi**2 / mw) * (lx**2 / cfg.ly**2 + ly**2 / cfg.lx**2))
    phase = (
        -math.pi * lx * ly / cfg.n_phi
        + (TWO_PI * ry / cfg.ly - cfg.theta_x / cfg.n_phi) * lx
        - (TWO_PI * rx / cfg.lx + cfg.theta_y / cfg.n_phi) * ly
    )
    return gauss * complex(math.cos(phase), math.sin(phase))


def _series_reach(cfg: TorusConfig) -> int:
    # image index m where the Gaussian factor drops below ~1e-22
    mw = cfg.mass_omega
    need = math.sqrt(50.0 * mw) * max(cfg.lx, cfg.ly) / (math.pi * cfg.n_phi)
    return max(3, math.ceil(need) + 2)


def coherent_translation_series(cfg: TorusConfig, c: CoherentLabel, lx: int = 0, ly: int = 0) -> complex:
    """Normalized closed-form expectation <Tx^lx Ty^ly> in the torus coherent
    state, as the image-sum ratio

        sum_m C(n_phi mx + lx, n_phi my + ly) / sum_m C(n_phi mx, n_phi my).

    This is the independent analytic route that the grid quadrature of
    translation_expectation is checked against."""
    mm = _series_reach(cfg)
    num = 0.0 + 0.0j
    den = 0.0 + 0.0j
    n = cfg.n_phi
    for mx in range(-mm, mm + 1):
        for my in range(-mm, mm + 1):
            num += _coherent_overlap_term(cfg, c, n * mx + lx, n * my + ly)
            den += _coherent_overlap_term(cfg, c, n * mx, n * my)
    return complex(num / den)


def coherent_prefactor(cfg: TorusConfig, c: CoherentLabel, l: int, direction: str) -> complex:
    """Lattice-sum prefactor B_l: the translation expectation with the
    center-and-angle phase stripped off,

        <Tx^l> = B_l exp[ i (2 pi <R_y>/Ly - theta_x/n_phi) l]
        <Ty^l> = B_l exp[-i (2 pi <R_x>/Lx + theta_y/n_phi) l].
    """
    rx, ry = coherent_center(cfg, c)
    if direction == "x":
        full = coherent_translation_series(cfg, c, lx=l)
        phase = (TWO_PI * ry / cfg.ly - cfg.theta_x / cfg.n_phi) * l
    elif direction == "y":
        full = coherent_translation_series(cfg, c, ly=l)
        phase = -(TWO_PI * rx / cfg.lx + cfg.theta_y / cfg.n_phi) * l
    else:
        raise ValueError(f"direction must be 'x' or 'y', got {direction!r}")
    return full * complex(math.cos(phase), -math.sin(phase))


# ---------------------------------------------------------------------------
# subspace comparison, densities, spectral evolution


def projector_distance(set_a, set_b, tol: float = 1.0e-6) -> float:
    """Operator norm of P_A - P_B for the projectors onto the spans of two
    orthonormal families of SampledStates (grid inner products)."""

    def stack(states):
        cols = []
        for s in states:
            cols.append(s.core.ravel() * math.sqrt(s.hx * s.hy))
        return np.array(cols).T

    va = stack(set_a)
    vb = stack(set_b)
    for name, v in (("A", va), ("B", vb)):
        gram = v.conj().T @ v
        if np.max(np.abs(gram - np.eye(v.shape[1]))) > tol:
            raise ValueError(f"input set {name} is not orthonormal within {tol}")
    w = np.hstack([va, vb])
    q, _ = np.linalg.qr(w)
    ma = q.conj().T @ va
    mb = q.conj().T @ vb
    diff = ma @ ma.conj().T - mb @ mb.conj().T
    eigs = np.linalg.eigvalsh(diff)
    return float(np.max(np.abs(eigs)))


@dataclass(frozen=True)
class DensityMap:
    xs: np.ndarray
    ys: np.ndarray
    density: np.ndarray
    argmax_x: float
    argmax_y: float


def density_map(state: SampledState) -> DensityMap:
    """|Psi|^2 normalized to unit torus integral, plus the argmax location."""
    d = np.abs(state.values) ** 2
    total = d[:-1, :-1].sum() * state.hx * state.hy
    d = d / total
    ix, iy = np.unravel_index(np.argmax(d[:-1, :-1]), d[:-1, :-1].shape)
    return DensityMap(
        xs=state.xs,
        ys=state.ys,
        density=d,
        argmax_x=float(state.xs[ix]),
        argmax_y=float(state.ys[iy]),
    )


def eigenbasis_coefficients(state: SampledState, n_max: int) -> dict:
    """Coefficients <n l | Psi> for n <= n_max, all l, in the 'ly' basis."""
    cfg = state.config
    coeffs = {}
    for n in range(n_max + 1):
        for l in range(cfg.n_phi):
            basis_state = torus_eigenstate(
                cfg, TorusLabel(n, l), nx=state.nx, ny=state.ny
            )
            coeffs[(n, l)] = (torus_inner(basis_state, state), basis_state)
    return coeffs


def evolve_by_spectrum(state: SampledState, t: float, n_max: int) -> SampledState:
    """Time evolution through the eigenbasis expansion: each |n l> component
    picks up exp(-i omega (n + 1/2) t). Accurate when the state's weight
    above n_max is negligible."""
    cfg = state.config
    out = np.zeros_like(state.values)
    for (n, _l), (amp, basis_state) in eigenbasis_coefficients(state, n_max).items():
        out = out + amp * np.exp(-1j * cfg.omega * (n + 0.5) * t) * basis_state.values
    return SampledState(cfg, out)
