"""Deformed Jaynes-Cummings / anti-Jaynes-Cummings simulator.

Thin Python layer over the C++ core: Hamiltonian builders, closed-form and
numeric spectra, the similarity/metric machinery, discrete-symmetry checks,
time evolution, and the consistency-audit report.
"""

from ._core import (  # noqa: F401
    Branch,
    DeltaSeries,
    DiagConvention,
    FGPair,
    FactorialReading,
    Fig1Row,
    FrequencySet,
    InitialState,
    Method,
    MetricBundle,
    ModelParams,
    RunConfig,
    SeriesPoint,
    SpectralPropagator,
    SpectralReport,
    SpectralRow,
    SymmetryReport,
    TimeSeries,
    __version__,
    alpha_beta,
    annihilation_operator,
    audit_symmetries,
    branch_n_min,
    branch_theta,
    build_ajc,
    build_hermitian_printed,
    build_jc,
    build_kappa,
    build_rho,
    coherent_required_nmax,
    coherent_state,
    creation_operator,
    default_fig1_levels,
    default_xi_grid,
    deformation_gap,
    delta_series,
    diagonal_expectation,
    eigvec_closed_H,
    eigvec_closed_h,
    energy_deformed,
    energy_undeformed,
    eta_inner,
    evolve_closed,
    expectation_equiv,
    fg_amplitudes,
    fig1_data,
    hermiticity_residual,
    hermitize,
    initial_state_vector,
    jz_diagonal,
    jz_operator,
    linear_grid,
    lz_diagonal,
    lz_operator,
    number_operator,
    numeric_vs_closed,
    parse_config_file,
    parse_config_text,
    printed_series_point,
    quantum_number_map,
    quasi_residual,
    revival_time,
    run_audit_json,
    run_config_from_json,
    run_config_to_json,
    run_delta,
    simulate,
    sz_diagonal,
    sz_operator,
    zitter_frequencies,
)
