#include "kjc/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kjc {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + what);
}

double parse_double(const std::string& v, int lineno) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        bad_line(lineno, "expected a number, got '" + v + "'");
    }
    if (pos != v.size())
        bad_line(lineno, "trailing characters in number '" + v + "'");
    return out;
}

long long parse_int(const std::string& v, int lineno) {
    std::size_t pos = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &pos);
    } catch (const std::exception&) {
        bad_line(lineno, "expected an integer, got '" + v + "'");
    }
    if (pos != v.size())
        bad_line(lineno, "trailing characters in integer '" + v + "'");
    return out;
}

json config_to_json_object(const RunConfig& cfg) {
    json j;
    j["model"]["mass"] = cfg.params.mass;
    j["model"]["c"] = cfg.params.c;
    j["model"]["hbar"] = cfg.params.hbar;
    j["model"]["omega"] = cfg.params.omega;
    j["model"]["epsilon"] = cfg.params.epsilon;
    j["model"]["s"] = cfg.params.s;
    j["model"]["branch"] = to_string(cfg.params.branch);
    j["model"]["convention"] = to_string(cfg.params.convention);
    j["run"]["n_max"] = cfg.n_max;
    j["run"]["margin"] = cfg.margin;
    j["run"]["initial"] = to_string(cfg.initial.kind);
    j["run"]["fock_n"] = cfg.initial.n;
    j["run"]["mean_n"] = cfg.initial.mean;
    j["run"]["t_max"] = cfg.t_max;
    j["run"]["points"] = cfg.points;
    j["run"]["method"] = to_string(cfg.method);
    j["run"]["series_reading"] = to_string(cfg.reading);
    j["run"]["seed"] = cfg.seed;
    j["output"]["out_dir"] = cfg.out_dir;
    return j;
}

} // namespace

void RunConfig::validate() const {
    params.validate();
    if (n_max < 4)
        throw std::invalid_argument("config: n_max must be >= 4");
    if (margin < 0 || margin >= n_max)
        throw std::invalid_argument("config: margin must be in [0, n_max)");
    if (initial.kind == InitialState::Kind::Fock && (initial.n < 0 || initial.n > n_max))
        throw std::invalid_argument("config: fock_n must be in [0, n_max]");
    if (initial.kind == InitialState::Kind::Coherent && initial.mean < 0.0)
        throw std::invalid_argument("config: mean_n must be >= 0");
    if (t_max < 0.0)
        throw std::invalid_argument("config: t_max must be >= 0 (0 = auto)");
    if (points < 2)
        throw std::invalid_argument("config: points must be >= 2");
}

std::vector<double> RunConfig::time_grid() const {
    double horizon = t_max;
    if (horizon == 0.0) {
        if (initial.kind == InitialState::Kind::Coherent) {
            horizon = 3.0 * revival_time(params, initial.mean);
        } else {
            const double w = zitter_frequencies(initial.n, params).omega_n;
            horizon = 3.0 * (2.0 * M_PI / w);
        }
    }
    return linear_grid(horizon, points);
}

Branch branch_from_string(const std::string& s) {
    if (s == "jc")
        return Branch::Plus;
    if (s == "ajc")
        return Branch::Minus;
    throw std::invalid_argument("branch must be 'jc' or 'ajc', got '" + s + "'");
}

DiagConvention convention_from_string(const std::string& s) {
    if (s == "consistent")
        return DiagConvention::SpectrumConsistent;
    if (s == "printed")
        return DiagConvention::AsPrinted;
    throw std::invalid_argument("convention must be 'consistent' or 'printed', got '" + s + "'");
}

Method method_from_string(const std::string& s) {
    if (s == "numeric")
        return Method::Numeric;
    if (s == "closed")
        return Method::Closed;
    if (s == "series")
        return Method::PrintedSeries;
    throw std::invalid_argument("method must be 'numeric', 'closed' or 'series', got '" + s + "'");
}

std::string to_string(Method m) {
    switch (m) {
    case Method::Numeric:
        return "numeric";
    case Method::Closed:
        return "closed";
    case Method::PrintedSeries:
        return "series";
    }
    throw std::logic_error("unknown method");
}

FactorialReading reading_from_string(const std::string& s) {
    if (s == "n")
        return FactorialReading::NFact;
    if (s == "n+1")
        return FactorialReading::NPlusOneFact;
    throw std::invalid_argument("series_reading must be 'n' or 'n+1', got '" + s + "'");
}

std::string to_string(FactorialReading r) {
    return r == FactorialReading::NFact ? "n" : "n+1";
}

std::string to_string(InitialState::Kind k) {
    return k == InitialState::Kind::Fock ? "fock" : "coherent";
}

InitialState::Kind initial_kind_from_string(const std::string& s) {
    if (s == "fock")
        return InitialState::Kind::Fock;
    if (s == "coherent")
        return InitialState::Kind::Coherent;
    throw std::invalid_argument("initial must be 'fock' or 'coherent', got '" + s + "'");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                bad_line(lineno, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "model" && section != "run" && section != "output")
                bad_line(lineno, "unknown section '" + section + "'");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            bad_line(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            bad_line(lineno, "key '" + key + "' outside any section");
        if (key.empty() || value.empty())
            bad_line(lineno, "empty key or value");

        try {
            if (section == "model") {
                if (key == "mass")
                    cfg.params.mass = parse_double(value, lineno);
                else if (key == "c")
                    cfg.params.c = parse_double(value, lineno);
                else if (key == "hbar")
                    cfg.params.hbar = parse_double(value, lineno);
                else if (key == "omega")
                    cfg.params.omega = parse_double(value, lineno);
                else if (key == "epsilon")
                    cfg.params.epsilon = parse_double(value, lineno);
                else if (key == "s")
                    cfg.params.s = static_cast<int>(parse_int(value, lineno));
                else if (key == "branch")
                    cfg.params.branch = branch_from_string(value);
                else if (key == "convention")
                    cfg.params.convention = convention_from_string(value);
                else
                    bad_line(lineno, "unknown key '" + key + "' in [model]");
            } else if (section == "run") {
                if (key == "n_max")
                    cfg.n_max = static_cast<int>(parse_int(value, lineno));
                else if (key == "margin")
                    cfg.margin = static_cast<int>(parse_int(value, lineno));
                else if (key == "initial")
                    cfg.initial.kind = initial_kind_from_string(value);
                else if (key == "fock_n")
                    cfg.initial.n = static_cast<int>(parse_int(value, lineno));
                else if (key == "mean_n")
                    cfg.initial.mean = parse_double(value, lineno);
                else if (key == "t_max")
                    cfg.t_max = parse_double(value, lineno);
                else if (key == "points")
                    cfg.points = static_cast<int>(parse_int(value, lineno));
                else if (key == "method")
                    cfg.method = method_from_string(value);
                else if (key == "series_reading")
                    cfg.reading = reading_from_string(value);
                else if (key == "seed")
                    cfg.seed = static_cast<std::uint64_t>(parse_int(value, lineno));
                else
                    bad_line(lineno, "unknown key '" + key + "' in [run]");
            } else { // output
                if (key == "out_dir")
                    cfg.out_dir = value;
                else
                    bad_line(lineno, "unknown key '" + key + "' in [output]");
            }
        } catch (const std::invalid_argument& e) {
            const std::string msg = e.what();
            if (msg.rfind("config line", 0) == 0)
                throw;
            bad_line(lineno, msg);
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    return parse_config_text(read_text_file(path));
}

std::string run_config_to_json(const RunConfig& cfg) {
    return config_to_json_object(cfg).dump(2) + "\n";
}

RunConfig run_config_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    RunConfig cfg;
    auto expect_object = [](const json& node, const char* name) -> const json& {
        if (!node.is_object())
            throw std::invalid_argument(std::string("config json: '") + name +
                                        "' must be an object");
        return node;
    };
    for (const auto& [section, body] : j.items()) {
        if (section == "model") {
            for (const auto& [key, val] : expect_object(body, "model").items()) {
                if (key == "mass")
                    cfg.params.mass = val.get<double>();
                else if (key == "c")
                    cfg.params.c = val.get<double>();
                else if (key == "hbar")
                    cfg.params.hbar = val.get<double>();
                else if (key == "omega")
                    cfg.params.omega = val.get<double>();
                else if (key == "epsilon")
                    cfg.params.epsilon = val.get<double>();
                else if (key == "s")
                    cfg.params.s = val.get<int>();
                else if (key == "branch")
                    cfg.params.branch = branch_from_string(val.get<std::string>());
                else if (key == "convention")
                    cfg.params.convention = convention_from_string(val.get<std::string>());
                else
                    throw std::invalid_argument("config json: unknown model key '" + key + "'");
            }
        } else if (section == "run") {
            for (const auto& [key, val] : expect_object(body, "run").items()) {
                if (key == "n_max")
                    cfg.n_max = val.get<int>();
                else if (key == "margin")
                    cfg.margin = val.get<int>();
                else if (key == "initial")
                    cfg.initial.kind = initial_kind_from_string(val.get<std::string>());
                else if (key == "fock_n")
                    cfg.initial.n = val.get<int>();
                else if (key == "mean_n")
                    cfg.initial.mean = val.get<double>();
                else if (key == "t_max")
                    cfg.t_max = val.get<double>();
                else if (key == "points")
                    cfg.points = val.get<int>();
                else if (key == "method")
                    cfg.method = method_from_string(val.get<std::string>());
                else if (key == "series_reading")
                    cfg.reading = reading_from_string(val.get<std::string>());
                else if (key == "seed")
                    cfg.seed = val.get<std::uint64_t>();
                else
                    throw std::invalid_argument("config json: unknown run key '" + key + "'");
            }
        } else if (section == "output") {
            for (const auto& [key, val] : expect_object(body, "output").items()) {
                if (key == "out_dir")
                    cfg.out_dir = val.get<std::string>();
                else
                    throw std::invalid_argument("config json: unknown output key '" + key + "'");
            }
        } else {
            throw std::invalid_argument("config json: unknown section '" + section + "'");
        }
    }
    cfg.validate();
    return cfg;
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return std::string(buf);
}

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::runtime_error("csv row width mismatch in " + path);
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace kjc
