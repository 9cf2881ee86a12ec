// Python bindings for the deformed JC/AJC simulator core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kjc/audit.hpp"
#include "kjc/config.hpp"
#include "kjc/dynamics.hpp"
#include "kjc/fock.hpp"
#include "kjc/metric.hpp"
#include "kjc/models.hpp"
#include "kjc/numerics.hpp"
#include "kjc/spectra.hpp"
#include "kjc/symmetry.hpp"

namespace py = pybind11;
using namespace kjc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deformed Jaynes-Cummings / anti-Jaynes-Cummings simulator core";
    m.attr("__version__") = "0.1.0";

    py::enum_<Branch>(m, "Branch")
        .value("jc", Branch::Plus, "excitation-conserving coupling")
        .value("ajc", Branch::Minus, "counter-rotating coupling");

    py::enum_<DiagConvention>(m, "DiagConvention")
        .value("consistent", DiagConvention::SpectrumConsistent)
        .value("printed", DiagConvention::AsPrinted);

    py::enum_<Method>(m, "Method")
        .value("numeric", Method::Numeric)
        .value("closed", Method::Closed)
        .value("series", Method::PrintedSeries);

    py::enum_<FactorialReading>(m, "FactorialReading")
        .value("n_fact", FactorialReading::NFact)
        .value("n_plus_one_fact", FactorialReading::NPlusOneFact);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("mass", &ModelParams::mass)
        .def_readwrite("c", &ModelParams::c)
        .def_readwrite("hbar", &ModelParams::hbar)
        .def_readwrite("omega", &ModelParams::omega)
        .def_readwrite("epsilon", &ModelParams::epsilon)
        .def_readwrite("s", &ModelParams::s)
        .def_readwrite("branch", &ModelParams::branch)
        .def_readwrite("convention", &ModelParams::convention)
        .def("validate", &ModelParams::validate)
        .def("mc2", &ModelParams::mc2)
        .def("xi", &ModelParams::xi)
        .def("coupling_g", &ModelParams::coupling_g)
        .def("detuning", &ModelParams::detuning)
        .def("delta_eps", &ModelParams::delta_eps)
        .def("mu_plus", &ModelParams::mu_plus)
        .def("mu_minus", &ModelParams::mu_minus)
        .def("identity_coefficient", &ModelParams::identity_coefficient)
        .def("epsilon_kappa", &ModelParams::epsilon_kappa)
        .def("kappa", &ModelParams::kappa)
        .def("with_epsilon", &ModelParams::with_epsilon)
        .def("with_s", &ModelParams::with_s)
        .def("__eq__",
             [](const ModelParams& a, const ModelParams& b) { return a == b; })
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(omega=" + std::to_string(p.omega) +
                   ", epsilon=" + std::to_string(p.epsilon) + ", branch=" +
                   to_string(p.branch) + ", s=" + std::to_string(p.s) + ")";
        });

    // Fock-space building blocks.
    m.def("annihilation_operator", &annihilation_operator, py::arg("n_max"));
    m.def("creation_operator", &creation_operator, py::arg("n_max"));
    m.def("number_operator", &number_operator, py::arg("n_max"));
    m.def("coherent_state", &coherent_state, py::arg("alpha"), py::arg("n_max"),
          py::arg("tail_tol") = 1e-12);
    m.def("coherent_required_nmax", &coherent_required_nmax, py::arg("alpha"),
          py::arg("tail_tol") = 1e-12);
    m.def("hermiticity_residual", &hermiticity_residual, py::arg("matrix"));

    // Hamiltonians.
    m.def("build_jc", &build_jc, py::arg("params"), py::arg("n_max"));
    m.def("build_ajc", &build_ajc, py::arg("params"), py::arg("n_max"));
    m.def("build_kappa", &build_kappa, py::arg("params"), py::arg("n_max"));
    m.def("build_hermitian_printed", &build_hermitian_printed, py::arg("params"),
          py::arg("n_max"));

    // Closed-form spectra.
    m.def("branch_theta", &branch_theta, py::arg("branch"));
    m.def("branch_n_min", &branch_n_min, py::arg("branch"));
    m.def("energy_undeformed", &energy_undeformed, py::arg("n"), py::arg("sign"),
          py::arg("params"));
    m.def("energy_deformed", &energy_deformed, py::arg("n"), py::arg("sign"),
          py::arg("params"));
    m.def("deformation_gap", &deformation_gap, py::arg("n"), py::arg("params"));
    m.def("quantum_number_map", &quantum_number_map, py::arg("n"), py::arg("l"),
          py::arg("s"));
    m.def(
        "alpha_beta",
        [](int n, const ModelParams& p) {
            const AlphaBeta ab = alpha_beta(n, p);
            return std::make_pair(ab.alpha, ab.beta);
        },
        py::arg("n"), py::arg("params"));
    m.def("eigvec_closed_H", &eigvec_closed_H, py::arg("n"), py::arg("sign"),
          py::arg("params"), py::arg("n_max"));
    m.def("eigvec_closed_h", &eigvec_closed_h, py::arg("n"), py::arg("sign"),
          py::arg("params"), py::arg("n_max"));

    py::class_<SpectralRow>(m, "SpectralRow")
        .def_readonly("n", &SpectralRow::n)
        .def_readonly("sign", &SpectralRow::sign)
        .def_readonly("e_closed", &SpectralRow::e_closed)
        .def_readonly("e_numeric", &SpectralRow::e_numeric)
        .def_readonly("abs_err", &SpectralRow::abs_err);
    py::class_<SpectralReport>(m, "SpectralReport")
        .def_readonly("rows", &SpectralReport::rows)
        .def_readonly("excluded", &SpectralReport::excluded)
        .def_readonly("max_abs_err", &SpectralReport::max_abs_err)
        .def_readonly("max_imag", &SpectralReport::max_imag)
        .def_readonly("n_max", &SpectralReport::n_max)
        .def_readonly("margin", &SpectralReport::margin);
    m.def("numeric_vs_closed", &numeric_vs_closed, py::arg("h"), py::arg("params"),
          py::arg("margin"));

    py::class_<Fig1Row>(m, "Fig1Row")
        .def_readonly("n", &Fig1Row::n)
        .def_readonly("xi", &Fig1Row::xi)
        .def_readonly("e_plus", &Fig1Row::e_plus)
        .def_readonly("e_plus_deformed", &Fig1Row::e_plus_deformed)
        .def_readonly("e_minus", &Fig1Row::e_minus)
        .def_readonly("e_minus_deformed", &Fig1Row::e_minus_deformed)
        .def_readonly("gap", &Fig1Row::gap);
    m.def("fig1_data", &fig1_data, py::arg("params"), py::arg("levels"),
          py::arg("xi_grid"));
    m.def("default_xi_grid", &default_xi_grid);
    m.def("default_fig1_levels", &default_fig1_levels, py::arg("branch"));

    // Metric machinery.
    py::class_<MetricBundle>(m, "MetricBundle")
        .def_readonly("rho", &MetricBundle::rho)
        .def_readonly("rho_inv", &MetricBundle::rho_inv)
        .def_readonly("eta", &MetricBundle::eta)
        .def_readonly("min_eta_eigenvalue", &MetricBundle::min_eta_eigenvalue);
    m.def("build_rho", &build_rho, py::arg("params"), py::arg("n_max"));
    m.def("hermitize", &hermitize, py::arg("h"), py::arg("bundle"));
    m.def("quasi_residual", &quasi_residual, py::arg("h"), py::arg("bundle"),
          py::arg("margin"));
    m.def("eta_inner", &eta_inner, py::arg("u"), py::arg("v"), py::arg("bundle"));
    m.def("expectation_equiv", &expectation_equiv, py::arg("h"), py::arg("bundle"),
          py::arg("phi"));

    // Discrete symmetries.
    py::class_<SymmetryReport>(m, "SymmetryReport")
        .def_readonly("pt_invariant", &SymmetryReport::pt_invariant)
        .def_readonly("p_sigma_z_invariant", &SymmetryReport::p_sigma_z_invariant)
        .def_readonly("t_sigma_x_flips_chirality",
                      &SymmetryReport::t_sigma_x_flips_chirality)
        .def_readonly("literal_p_sigma_z_invariant",
                      &SymmetryReport::literal_p_sigma_z_invariant)
        .def_readonly("literal_t_sigma_x_flips_chirality",
                      &SymmetryReport::literal_t_sigma_x_flips_chirality)
        .def_readonly("h_terms", &SymmetryReport::h_terms)
        .def_readonly("pt_terms", &SymmetryReport::pt_terms)
        .def_readonly("p_sigma_z_terms", &SymmetryReport::p_sigma_z_terms)
        .def_readonly("t_sigma_x_terms", &SymmetryReport::t_sigma_x_terms)
        .def_readonly("note", &SymmetryReport::note);
    m.def("audit_symmetries", &audit_symmetries, py::arg("params"));

    // Dynamics.
    m.def("sz_diagonal", &sz_diagonal, py::arg("params"), py::arg("n_max"));
    m.def("lz_diagonal", &lz_diagonal, py::arg("params"), py::arg("n_max"));
    m.def("jz_diagonal", &jz_diagonal, py::arg("params"), py::arg("n_max"));
    m.def("sz_operator", &sz_operator, py::arg("params"), py::arg("n_max"));
    m.def("lz_operator", &lz_operator, py::arg("params"), py::arg("n_max"));
    m.def("jz_operator", &jz_operator, py::arg("params"), py::arg("n_max"));
    m.def("diagonal_expectation", &diagonal_expectation, py::arg("diag"),
          py::arg("psi"));

    py::class_<FrequencySet>(m, "FrequencySet")
        .def_readonly("omega_n", &FrequencySet::omega_n)
        .def_readonly("phi_eps_n", &FrequencySet::phi_eps_n)
        .def_readonly("omega_eps_plus", &FrequencySet::omega_eps_plus)
        .def_readonly("omega_eps_minus", &FrequencySet::omega_eps_minus)
        .def_readonly("beat_phi", &FrequencySet::beat_phi);
    m.def("zitter_frequencies", &zitter_frequencies, py::arg("n"), py::arg("params"));

    py::class_<FGPair>(m, "FGPair")
        .def_readonly("f", &FGPair::f)
        .def_readonly("g", &FGPair::g);
    m.def("fg_amplitudes", &fg_amplitudes, py::arg("n"), py::arg("t"),
          py::arg("params"));
    m.def("evolve_closed", &evolve_closed, py::arg("n"), py::arg("t"),
          py::arg("params"), py::arg("n_max"));

    py::class_<SpectralPropagator>(m, "SpectralPropagator")
        .def(py::init<const Matrix&, double, double>(), py::arg("h"), py::arg("hbar"),
             py::arg("herm_tol") = 1e-8)
        .def("coefficients", &SpectralPropagator::coefficients, py::arg("psi0"))
        .def("state_from", &SpectralPropagator::state_from, py::arg("coeffs"),
             py::arg("t"))
        .def("evolve", &SpectralPropagator::evolve, py::arg("psi0"), py::arg("t"))
        .def("eigenvalues", &SpectralPropagator::eigenvalues,
             py::return_value_policy::copy)
        .def("eigenvectors", &SpectralPropagator::eigenvectors,
             py::return_value_policy::copy);

    py::class_<InitialState> initial_state(m, "InitialState");
    py::enum_<InitialState::Kind>(initial_state, "Kind")
        .value("fock", InitialState::Kind::Fock)
        .value("coherent", InitialState::Kind::Coherent);
    initial_state.def(py::init<>())
        .def_readwrite("kind", &InitialState::kind)
        .def_readwrite("n", &InitialState::n)
        .def_readwrite("mean", &InitialState::mean)
        .def_static(
            "fock",
            [](int n) {
                InitialState s;
                s.kind = InitialState::Kind::Fock;
                s.n = n;
                return s;
            },
            py::arg("n"))
        .def_static(
            "coherent",
            [](double mean) {
                InitialState s;
                s.kind = InitialState::Kind::Coherent;
                s.mean = mean;
                return s;
            },
            py::arg("mean"));
    m.def("initial_state_vector", &initial_state_vector, py::arg("initial"),
          py::arg("n_max"));

    py::class_<TimeSeries>(m, "TimeSeries")
        .def_readonly("t", &TimeSeries::t)
        .def_readonly("sz", &TimeSeries::sz)
        .def_readonly("lz", &TimeSeries::lz)
        .def_readonly("jz", &TimeSeries::jz)
        .def_readonly("clipped_satellites", &TimeSeries::clipped_satellites);
    py::class_<DeltaSeries>(m, "DeltaSeries")
        .def_readonly("eps_run", &DeltaSeries::eps_run)
        .def_readonly("zero_run", &DeltaSeries::zero_run)
        .def_readonly("delta", &DeltaSeries::delta);
    py::class_<SeriesPoint>(m, "SeriesPoint")
        .def_readonly("sz", &SeriesPoint::sz)
        .def_readonly("lz", &SeriesPoint::lz)
        .def_readonly("jz", &SeriesPoint::jz);

    m.def("linear_grid", &linear_grid, py::arg("t_max"), py::arg("points"));
    m.def("revival_time", &revival_time, py::arg("params"), py::arg("mean"));
    m.def("simulate", &simulate, py::arg("params"), py::arg("initial"),
          py::arg("tgrid"), py::arg("method"), py::arg("n_max"),
          py::arg("reading") = FactorialReading::NFact);
    m.def("delta_series", &delta_series, py::arg("eps_run"), py::arg("zero_run"));
    m.def("run_delta", &run_delta, py::arg("params"), py::arg("initial"),
          py::arg("tgrid"), py::arg("method"), py::arg("n_max"));
    m.def("printed_series_point", &printed_series_point, py::arg("params"),
          py::arg("mean"), py::arg("t"), py::arg("reading"));

    // Configs and the adjudication report.
    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("params", &RunConfig::params)
        .def_readwrite("n_max", &RunConfig::n_max)
        .def_readwrite("margin", &RunConfig::margin)
        .def_readwrite("initial", &RunConfig::initial)
        .def_readwrite("t_max", &RunConfig::t_max)
        .def_readwrite("points", &RunConfig::points)
        .def_readwrite("method", &RunConfig::method)
        .def_readwrite("reading", &RunConfig::reading)
        .def_readwrite("out_dir", &RunConfig::out_dir)
        .def_readwrite("seed", &RunConfig::seed)
        .def("validate", &RunConfig::validate)
        .def("time_grid", &RunConfig::time_grid)
        .def("__eq__", [](const RunConfig& a, const RunConfig& b) { return a == b; });
    m.def("parse_config_text", &parse_config_text, py::arg("text"));
    m.def("parse_config_file", &parse_config_file, py::arg("path"));
    m.def("run_config_to_json", &run_config_to_json, py::arg("config"));
    m.def("run_config_from_json", &run_config_from_json, py::arg("json_text"));
    m.def(
        "run_audit_json",
        [](const RunConfig& cfg) { return audit_to_json(run_audit(cfg)); },
        py::arg("config"),
        "Run the full adjudication suite and return the JSON report.");
}
