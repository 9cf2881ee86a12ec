#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kjc/dynamics.hpp"
#include "kjc/params.hpp"

namespace kjc {

// One fully-specified run: physics parameters plus basis size, edge margin,
// initial state, time grid, evolution method and output destination. Parsed
// from an INI-style file ([model]/[run]/[output] sections, key = value lines,
// unknown keys rejected) and round-trippable through JSON metadata.
struct RunConfig {
    ModelParams params;
    int n_max = 100;
    int margin = 10;
    InitialState initial{InitialState::Kind::Coherent, 0, 25.0};
    double t_max = 0.0; // 0 = auto: 3 revival times (coherent) or 3 Rabi periods (Fock)
    int points = 3000;
    Method method = Method::Numeric;
    FactorialReading reading = FactorialReading::NFact;
    std::string out_dir = "out";
    std::uint64_t seed = 20240915;

    bool operator==(const RunConfig&) const = default;

    void validate() const;
    std::vector<double> time_grid() const; // resolves the auto t_max
};

Branch branch_from_string(const std::string& s);
DiagConvention convention_from_string(const std::string& s);
Method method_from_string(const std::string& s);
std::string to_string(Method m);
FactorialReading reading_from_string(const std::string& s);
std::string to_string(FactorialReading r);
std::string to_string(InitialState::Kind k);
InitialState::Kind initial_kind_from_string(const std::string& s);

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// JSON metadata (two-space indent, sorted keys); parses back to an equal
// RunConfig.
std::string run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const std::string& json_text);

// Fixed 17-significant-digit scientific notation, for bit-stable CSV diffs.
std::string format_sci(double v);

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace kjc
