#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "kjc/audit.hpp"
#include "kjc/config.hpp"
#include "kjc/dynamics.hpp"

using namespace kjc;

namespace {

const char* kSampleConfig = R"(# sample run
[model]
mass = 1.0
c = 1.0
hbar = 1.0
omega = 0.5        ; xi = 0.5
epsilon = 1e-3
s = -1
branch = ajc
convention = printed

[run]
n_max = 48
margin = 8
initial = fock
fock_n = 3
mean_n = 16
t_max = 12.5
points = 41
method = closed
series_reading = n+1
seed = 99

[output]
out_dir = scratch
)";

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("kjc-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("config text parses every section") {
    const RunConfig cfg = parse_config_text(kSampleConfig);
    CHECK(cfg.params.omega == 0.5);
    CHECK(cfg.params.epsilon == 1e-3);
    CHECK(cfg.params.s == -1);
    CHECK(cfg.params.branch == Branch::Minus);
    CHECK(cfg.params.convention == DiagConvention::AsPrinted);
    CHECK(cfg.n_max == 48);
    CHECK(cfg.margin == 8);
    CHECK(cfg.initial.kind == InitialState::Kind::Fock);
    CHECK(cfg.initial.n == 3);
    CHECK(cfg.initial.mean == 16.0);
    CHECK(cfg.t_max == 12.5);
    CHECK(cfg.points == 41);
    CHECK(cfg.method == Method::Closed);
    CHECK(cfg.reading == FactorialReading::NPlusOneFact);
    CHECK(cfg.seed == 99);
    CHECK(cfg.out_dir == "scratch");
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config parse errors carry line numbers") {
    auto message_of = [](const std::string& text) {
        try {
            parse_config_text(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of("[model]\nmass = abc\n").find("line 2") != std::string::npos);
    CHECK(message_of("mass = 1\n").find("line 1") != std::string::npos);
    CHECK(message_of("[model]\nnonsense = 1\n").find("unknown key") != std::string::npos);
    CHECK(message_of("[weird]\n").find("unknown section") != std::string::npos);
    CHECK(message_of("[model]\nmass\n").find("key = value") != std::string::npos);
    CHECK(message_of("[run]\nn_max = 10.5\n").find("integer") != std::string::npos);
    CHECK(message_of("[model]\nbranch = sideways\n").find("branch") != std::string::npos);
    // Comments and blank lines are fine.
    CHECK_NOTHROW(parse_config_text("# only a comment\n\n; and another\n"));
}

TEST_CASE("config json round-trips to an equal value") {
    const RunConfig cfg = parse_config_text(kSampleConfig);
    const std::string json = run_config_to_json(cfg);
    const RunConfig back = run_config_from_json(json);
    CHECK(back == cfg);
    // Defaults round-trip too.
    const RunConfig def;
    CHECK(run_config_from_json(run_config_to_json(def)) == def);
    CHECK_THROWS_AS(run_config_from_json("{\"bogus\": 1}"), std::invalid_argument);
    CHECK_THROWS_AS(run_config_from_json("not json at all"), std::exception);
}

TEST_CASE("config file loading matches text parsing") {
    TempDir tmp;
    const std::string path = tmp.file("run.cfg");
    write_text_file(path, kSampleConfig);
    const RunConfig a = parse_config_file(path);
    const RunConfig b = parse_config_text(kSampleConfig);
    CHECK(a == b);
    CHECK(read_text_file(path) == kSampleConfig);
    CHECK_THROWS_AS(parse_config_file(tmp.file("missing.cfg")), std::runtime_error);
}

TEST_CASE("config validation rejects inconsistent runs") {
    RunConfig cfg;
    cfg.n_max = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.margin = cfg.n_max;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.initial.kind = InitialState::Kind::Fock;
    cfg.initial.n = cfg.n_max + 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.points = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.t_max = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.initial.mean = -2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("string converters round-trip their vocabularies") {
    for (const std::string s : {"numeric", "closed", "series"})
        CHECK(to_string(method_from_string(s)) == s);
    for (const std::string s : {"n", "n+1"})
        CHECK(to_string(reading_from_string(s)) == s);
    CHECK(branch_from_string("jc") == Branch::Plus);
    CHECK(branch_from_string("ajc") == Branch::Minus);
    CHECK(convention_from_string("consistent") == DiagConvention::SpectrumConsistent);
    CHECK(convention_from_string("printed") == DiagConvention::AsPrinted);
    CHECK(initial_kind_from_string("fock") == InitialState::Kind::Fock);
    CHECK(initial_kind_from_string("coherent") == InitialState::Kind::Coherent);
    CHECK_THROWS_AS(method_from_string("magic"), std::invalid_argument);
    CHECK_THROWS_AS(reading_from_string("n+2"), std::invalid_argument);
}

TEST_CASE("auto time horizon covers three revivals or three Rabi periods") {
    RunConfig coh; // default: coherent, mean 25, xi = 1
    coh.points = 11;
    const auto grid = coh.time_grid();
    REQUIRE(grid.size() == 11);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() ==
          doctest::Approx(3.0 * revival_time(coh.params, coh.initial.mean)).epsilon(1e-12));

    RunConfig fock;
    fock.initial.kind = InitialState::Kind::Fock;
    fock.initial.n = 0;
    fock.points = 7;
    const auto fgrid = fock.time_grid();
    CHECK(fgrid.back() ==
          doctest::Approx(3.0 * 2.0 * M_PI / std::sqrt(5.0)).epsilon(1e-12));

    RunConfig manual;
    manual.t_max = 2.0;
    manual.points = 3;
    CHECK(manual.time_grid().back() == doctest::Approx(2.0));
}

TEST_CASE("scientific formatting is fixed-width and bit-faithful") {
    CHECK(format_sci(1.0) == "1.0000000000000000e+00");
    CHECK(format_sci(-0.5) == "-5.0000000000000000e-01");
    const double pi = M_PI;
    CHECK(std::stod(format_sci(pi)) == pi);
    CHECK(std::stod(format_sci(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_sci(0.0) == "0.0000000000000000e+00");
}

TEST_CASE("csv writer emits headers and rejects ragged rows") {
    TempDir tmp;
    const std::string path = tmp.file("table.csv");
    write_csv_file(path, {"a", "b"}, {{"1", "2"}, {"3", "4"}});
    CHECK(read_text_file(path) == "a,b\n1,2\n3,4\n");
    CHECK_THROWS_AS(write_csv_file(path, {"a", "b"}, {{"1"}}), std::runtime_error);
}

TEST_CASE("adjudication report is self-consistent on a mid-size basket") {
    RunConfig cfg;
    cfg.n_max = 80;
    cfg.margin = 10;
    cfg.points = 200;
    const AuditReport rep = run_audit(cfg);

    CHECK(rep.identity.verdict == "consistent");
    CHECK(rep.identity.rel_err_vs_consistent < 1e-2);
    CHECK(rep.identity.c_consistent ==
          doctest::Approx(-2.0 * cfg.params.epsilon).epsilon(1e-12)); // mc^2 = xi = 1
    CHECK(rep.identity.c_printed_hamiltonian == -rep.identity.c_consistent);
    CHECK(std::abs(rep.identity.c_fit - rep.identity.c_consistent) <
          1e-2 * std::abs(rep.identity.c_consistent));

    CHECK(rep.commutator.overlap >= 0.999);
    CHECK(std::abs(rep.commutator.measured_coefficient -
                   rep.commutator.derived_coefficient) <
          0.05 * std::abs(rep.commutator.derived_coefficient));

    REQUIRE(rep.series.size() == 2);
    for (const auto& s : rep.series) {
        CHECK(std::isfinite(s.max_dev_sz));
        CHECK(s.max_dev_sz < 0.05);  // the spin series itself tracks the numeric run
        CHECK(s.max_dev_jz > 1e-4);  // the suppressed correction cannot
    }

    CHECK(rep.patterns.sigma_z ==
          doctest::Approx(rep.patterns.sigma_z_expected).epsilon(1e-4));
    CHECK(std::abs(rep.patterns.cross_coupling - rep.patterns.cross_derived) <
          0.05 * std::abs(rep.patterns.cross_derived));
    CHECK(std::abs(rep.patterns.cross_coupling - rep.patterns.cross_printed) >
          0.5 * std::abs(rep.patterns.cross_printed));
    CHECK(rep.patterns.unexplained_residual < 1e-3);

    CHECK(rep.eigenstates.min_fidelity >= 1.0 - 1e-6);
    CHECK(rep.expectation_equiv_max_rel < 1e-10);

    const std::string json = audit_to_json(rep);
    CHECK(json.find("identity_coefficient") != std::string::npos);
    CHECK(json.find("jz_commutator") != std::string::npos);
    CHECK(json.find("series_vs_numeric") != std::string::npos);
}
