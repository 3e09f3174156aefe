"""Quantum mechanics of a charged particle in a uniform magnetic field, in
the infinite plane and on a flux-quantized torus: Landau levels, the
Runge-Lenz / magnetic-translation symmetry structure, coherent states, and a
finite-difference spectral cross-check."""

__version__ = "0.1.0"

from .config import (
    InfiniteConfig,
    TorusConfig,
    cyclotron_frequency,
    elementary_steps,
    torus_config_from_file,
    torus_config_from_mapping,
)
from .gauge import (
    TransitionFunctions,
    boundary_residual,
    cocycle_defect,
    flux_consistency_defect,
    polyakov_phase_x,
    polyakov_phase_y,
    standard_transition_functions,
)
from .maggroup import (
    GroupElement,
    UnitaryRep,
    center,
    clock_and_shift,
    conjugacy_class,
    elements,
    identity,
    inverse,
    multiply,
    represent,
    weyl_deviation,
)
from .oscillator import (
    OscillatorBasis,
    hermite_eigenfunction,
    hermite_functions,
    oscillator_grid,
    quadrature_inner_product,
)
from .plane import (
    ClassicalOrbit,
    CoherentLabel,
    FockLabel,
    classical_orbit_trace,
    coherent_amplitude,
    coherent_center,
    coherent_expectations,
    eigenstate_px,
    eigenstate_py,
    evolve_coherent,
    fock_energy_and_angular_momentum,
    ladder_apply,
    landau_energy,
    sample_plane,
    semiclassical_energy,
    semiclassical_radius,
)
from .spectral import (
    DiscreteHamiltonian,
    SpectrumReport,
    build_hamiltonian,
    cluster_eigenvalues,
    free_twisted_spectrum,
    low_spectrum,
    lowest_eigenpairs,
)
from .torus import (
    DensityMap,
    LatticeSumPolicy,
    SampledState,
    TorusLabel,
    apply_operator,
    apply_translation_power,
    apply_tx,
    apply_ty,
    coherent_prefactor,
    coherent_translation_series,
    default_grid,
    density_map,
    eigenvalue_residual,
    evolve_by_spectrum,
    expectation,
    normalized,
    projector_distance,
    sample_on_torus,
    torus_coherent,
    torus_eigenstate,
    torus_inner,
    translation_expectation,
)
