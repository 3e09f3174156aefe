"""Physical configurations in natural units (hbar = c = 1).

Two settings: the infinite plane, where the magnetic field B is a free
parameter, and a rectangular torus, where flux quantization fixes
B = 2*pi*n_phi / (e*Lx*Ly) once the number of flux quanta n_phi is chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class InfiniteConfig:
    """Charged particle of mass `mass` and charge magnitude `charge` in a
    uniform field `b_field` filling the whole plane."""

    mass: float
    charge: float
    b_field: float

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.charge <= 0:
            raise ValueError(f"charge must be positive, got {self.charge}")
        if self.b_field <= 0:
            raise ValueError(f"b_field must be positive, got {self.b_field}")

    @property
    def omega(self) -> float:
        return self.charge * self.b_field / self.mass

    @property
    def mass_omega(self) -> float:
        # M*omega = e*B, the inverse square of the magnetic length
        return self.charge * self.b_field


@dataclass(frozen=True)
class TorusConfig:
    """Torus of periods (lx, ly) threaded by n_phi flux quanta.

    theta_x, theta_y are the self-adjoint extension angles entering the
    twisted boundary condition; only their values mod 2*pi matter, so they
    are normalized into [0, 2*pi) on construction.
    """

    mass: float
    charge: float
    lx: float
    ly: float
    n_phi: int
    theta_x: float = 0.0
    theta_y: float = 0.0

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.charge <= 0:
            raise ValueError(f"charge must be positive, got {self.charge}")
        if self.lx <= 0 or self.ly <= 0:
            raise ValueError(f"periods must be positive, got {self.lx}, {self.ly}")
        if int(self.n_phi) != self.n_phi or self.n_phi < 1:
            raise ValueError(f"n_phi must be a positive integer, got {self.n_phi}")
        object.__setattr__(self, "n_phi", int(self.n_phi))
        object.__setattr__(self, "theta_x", self.theta_x % TWO_PI)
        object.__setattr__(self, "theta_y", self.theta_y % TWO_PI)

    @property
    def b_field(self) -> float:
        return TWO_PI * self.n_phi / (self.charge * self.lx * self.ly)

    @property
    def omega(self) -> float:
        return self.charge * self.b_field / self.mass

    @property
    def mass_omega(self) -> float:
        return self.charge * self.b_field

    @property
    def ax(self) -> float:
        return self.lx / self.n_phi

    @property
    def ay(self) -> float:
        return self.ly / self.n_phi


def cyclotron_frequency(cfg) -> float:
    """Orbital angular frequency e*B/M, independent of the orbit radius."""
    return cfg.charge * cfg.b_field / cfg.mass


def elementary_steps(cfg: TorusConfig) -> tuple[float, float]:
    """Elementary translation steps (a_x, a_y) = (Lx, Ly)/n_phi.

    These are the smallest shifts under which the holonomy phases around
    the torus cycles are invariant.
    """
    return cfg.ax, cfg.ay


_TORUS_KEYS = {
    "mass": float,
    "charge": float,
    "lx": float,
    "ly": float,
    "nphi": int,
    "theta_x": float,
    "theta_y": float,
}


def parse_config_text(text: str) -> dict:
    """Parse plain key=value lines into a dict of typed config values.

    Blank lines and lines starting with '#' are ignored. Unknown keys raise.
    """
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        if key == "n_phi":
            key = "nphi"
        if key not in _TORUS_KEYS:
            raise ValueError(f"line {lineno}: unknown config key {key!r}")
        out[key] = _TORUS_KEYS[key](value.strip())
    return out


def torus_config_from_mapping(values: dict) -> TorusConfig:
    return TorusConfig(
        mass=values.get("mass", 1.0),
        charge=values.get("charge", 1.0),
        lx=values.get("lx", 1.0),
        ly=values.get("ly", 1.0),
        n_phi=values.get("nphi", 1),
        theta_x=values.get("theta_x", 0.0),
        theta_y=values.get("theta_y", 0.0),
    )


def torus_config_from_file(path) -> TorusConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return torus_config_from_mapping(parse_config_text(fh.read()))
