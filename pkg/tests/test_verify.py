import pytest

from landau import TorusConfig
from landau.verify import run_verification


def test_all_invariants_pass_at_two_flux_quanta():
    cfg = TorusConfig(1.0, 1.0, lx=1.0, ly=1.0, n_phi=2, theta_x=0.6, theta_y=1.2)
    checks, ok = run_verification(cfg)
    failing = [c.name for c in checks if not c.passed]
    assert ok, failing
    names = {c.name for c in checks}
    for expected in (
        "flux_quantization_integer",
        "boundary_shift_consistency",
        "cocycle_defect_constant",
        "weyl_matrix_relation",
        "torus_boundary_residual",
        "basis_projector_distance",
        "spectrum_clusters",
        "fock_commutators",
        "heisenberg_center_commutator",
    ):
        assert expected in names


def test_non_integer_flux_fails_only_consistency():
    cfg = TorusConfig(1.0, 1.0, lx=1.0, ly=1.0, n_phi=2, theta_x=0.6, theta_y=1.2)
    checks, ok = run_verification(cfg, nphi_override=2.5)
    assert not ok
    failing = [c.name for c in checks if not c.passed]
    assert failing == ["boundary_shift_consistency"]


def test_checks_serialize():
    cfg = TorusConfig(1.0, 1.0, lx=1.0, ly=1.0, n_phi=1)
    checks, ok = run_verification(cfg)
    assert ok
    payload = checks[0].as_dict()
    assert set(payload) == {"name", "residual", "tolerance", "passed"}
    assert isinstance(payload["residual"], float)
