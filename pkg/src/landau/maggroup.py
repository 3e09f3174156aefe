"""The discrete magnetic translation group as exact integer arithmetic, plus
its n_phi-dimensional clock-and-shift unitary representation.

Elements g(n_x, n_y, m) = exp(2 pi i m / n_phi) Ty^{n_y} Tx^{n_x} multiply as

    g(nx, ny, m) g(nx', ny', m') = g(nx + nx', ny + ny', m + m' - nx ny')

with everything mod n_phi. Group arithmetic never touches floating point;
matrices appear only in the representation checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GroupElement:
    nx: int
    ny: int
    m: int
    n_phi: int

    def __post_init__(self):
        if self.n_phi < 1:
            raise ValueError(f"n_phi must be >= 1, got {self.n_phi}")
        object.__setattr__(self, "nx", self.nx % self.n_phi)
        object.__setattr__(self, "ny", self.ny % self.n_phi)
        object.__setattr__(self, "m", self.m % self.n_phi)

    def __repr__(self):
        return f"g({self.nx},{self.ny},{self.m})"


def identity(n_phi: int) -> GroupElement:
    return GroupElement(0, 0, 0, n_phi)


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.n_phi != h.n_phi:
        raise ValueError(f"modulus mismatch: {g.n_phi} vs {h.n_phi}")
    return GroupElement(g.nx + h.nx, g.ny + h.ny, g.m + h.m - g.nx * h.ny, g.n_phi)


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-g.nx, -g.ny, -g.m - g.nx * g.ny, g.n_phi)


def elements(n_phi: int):
    """All n_phi^3 group elements."""
    return [
        GroupElement(nx, ny, m, n_phi)
        for nx, ny, m in itertools.product(range(n_phi), repeat=3)
    ]


def conjugacy_class(g: GroupElement) -> frozenset:
    """{g(nx, ny, m + nx*ny' - nx'*ny)} over all (nx', ny').

    Central elements g(0, 0, m) are conjugate only to themselves.
    """
    n = g.n_phi
    return frozenset(
        GroupElement(g.nx, g.ny, g.m + g.nx * nyp - nxp * g.ny, n)
        for nxp in range(n)
        for nyp in range(n)
    )


def center(n_phi: int) -> frozenset:
    """The center {g(0, 0, m)}, a cyclic subgroup of order n_phi."""
    return frozenset(GroupElement(0, 0, m, n_phi) for m in range(n_phi))


def center_brute_force(n_phi: int) -> frozenset:
    """Center by commuting every element against every element."""
    els = elements(n_phi)
    return frozenset(
        g for g in els if all(multiply(g, h) == multiply(h, g) for h in els)
    )


def quotient_by_center_table(n_phi: int) -> dict:
    """Multiplication table of G / Z(n_phi) by coset enumeration.

    Cosets are labeled by (nx, ny); the table maps pairs of coset labels to
    the product coset label. The group is a central extension, not a direct
    or semidirect product, so the abelian quotient structure is established
    here structurally rather than assumed.
    """
    table = {}
    for nx, ny, nxp, nyp in itertools.product(range(n_phi), repeat=4):
        g = GroupElement(nx, ny, 0, n_phi)
        h = GroupElement(nxp, nyp, 0, n_phi)
        prod = multiply(g, h)
        key = ((nx, ny), (nxp, nyp))
        table[key] = (prod.nx, prod.ny)
    return table


# ---------------------------------------------------------------------------
# clock-and-shift representation


@dataclass(frozen=True)
class UnitaryRep:
    """n_phi x n_phi matrices for the generators: tx is the cyclic shift
    (basis vector e_l -> e_{l+1}), ty the clock matrix diag(exp(2 pi i l / n))."""

    n_phi: int
    tx: np.ndarray
    ty: np.ndarray


def clock_and_shift(n_phi: int) -> UnitaryRep:
    n = n_phi
    tx = np.zeros((n, n), dtype=complex)
    for l in range(n):
        tx[(l + 1) % n, l] = 1.0
    ty = np.diag(np.exp(2j * np.pi * np.arange(n) / n))
    return UnitaryRep(n_phi=n, tx=tx, ty=ty)


def represent(rep: UnitaryRep, g: GroupElement) -> np.ndarray:
    """Matrix exp(2 pi i m / n_phi) Ty^{n_y} Tx^{n_x} for g(n_x, n_y, m)."""
    if rep.n_phi != g.n_phi:
        raise ValueError(f"modulus mismatch: rep {rep.n_phi} vs element {g.n_phi}")
    phase = np.exp(2j * np.pi * g.m / g.n_phi)
    return phase * (
        np.linalg.matrix_power(rep.ty, g.ny) @ np.linalg.matrix_power(rep.tx, g.nx)
    )


def weyl_deviation(rep: UnitaryRep) -> float:
    """max |Ty Tx - exp(2 pi i / n_phi) Tx Ty|: zero for a true representation."""
    lhs = rep.ty @ rep.tx
    rhs = np.exp(2j * np.pi / rep.n_phi) * rep.tx @ rep.ty
    return float(np.max(np.abs(lhs - rhs)))


def commutant_dimension(rep: UnitaryRep, tol: float = 1.0e-10) -> int:
    """Dimension of {X : [X, Tx] = [X, Ty] = 0}; 1 means irreducible.

    Solved numerically: vectorize X and stack the two commutator constraints
    into one linear system, then count near-zero singular values.
    """
    n = rep.n_phi
    eye = np.eye(n)
    rows = [
        np.kron(eye, rep.tx) - np.kron(rep.tx.T, eye),
        np.kron(eye, rep.ty) - np.kron(rep.ty.T, eye),
    ]
    system = np.vstack(rows)
    sv = np.linalg.svd(system, compute_uv=False)
    return int(np.sum(sv < tol * max(1.0, sv[0])))
