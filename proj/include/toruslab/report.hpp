#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toruslab/parallel.hpp"

// Experiment configuration and machine-readable reporting. The config format
// is flat key = value text (comma lists, # comments); reports are versioned
// JSON documents that embed the flat config so a run can be reproduced from
// its own output.

namespace toruslab {

struct ExperimentConfig {
    std::string suite;
    std::uint64_t seed = 1;
    std::vector<long long> N_list;
    std::vector<double> T_list;
    std::vector<double> p_list;
    double t_max = 1000.0;
    std::string out;
    std::map<std::string, double> tol;
    int workers = 0;  // 0: use TORUSLAB_WORKERS or hardware default

    double tolerance(const std::string& name, double fallback) const {
        auto it = tol.find(name);
        return it == tol.end() ? fallback : it->second;
    }

    int effective_workers() const { return workers >= 1 ? workers : worker_count(); }

    void validate() const {
        static const char* suites[] = {"kernel-sweep", "minima", "pall-verify",
                                       "omega",        "strichartz", "refocus"};
        bool ok = false;
        for (const char* s : suites) ok = ok || suite == s;
        if (!ok) throw std::invalid_argument("config: unknown suite '" + suite + "'");
        if (N_list.empty()) throw std::invalid_argument("config: N list must not be empty");
        for (long long n : N_list)
            if (n < 2) throw std::invalid_argument("config: N values must be >= 2");
        for (double T : T_list)
            if (!(T > 0)) throw std::invalid_argument("config: T values must be positive");
        for (double p : p_list)
            if (!(p >= 1)) throw std::invalid_argument("config: p values must be >= 1");
        if (!(t_max > 0)) throw std::invalid_argument("config: t-max must be positive");
    }

    std::map<std::string, std::string> to_flat() const;
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
}

}  // namespace detail

/// Assign one key = value pair onto the config. Throws on unknown keys or
/// malformed values; `where` prefixes error messages (e.g. "line 3").
inline void config_set(ExperimentConfig& cfg, const std::string& key, const std::string& value,
                       const std::string& where = "") {
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument((where.empty() ? "config: " : "config (" + where + "): ") + msg);
    };
    try {
        if (key == "suite") cfg.suite = value;
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "n") {
            cfg.N_list.clear();
            for (const auto& tok : detail::split_list(value)) cfg.N_list.push_back(std::stoll(detail::trim(tok)));
        } else if (key == "t") {
            cfg.T_list.clear();
            for (const auto& tok : detail::split_list(value)) cfg.T_list.push_back(std::stod(detail::trim(tok)));
        } else if (key == "p") {
            cfg.p_list.clear();
            for (const auto& tok : detail::split_list(value)) cfg.p_list.push_back(std::stod(detail::trim(tok)));
        } else if (key == "t-max") cfg.t_max = std::stod(value);
        else if (key == "out") cfg.out = value;
        else if (key == "workers") cfg.workers = std::stoi(value);
        else if (key.rfind("tol.", 0) == 0) cfg.tol[key.substr(4)] = std::stod(value);
        else fail("unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        fail("cannot parse value '" + value + "' for key '" + key + "'");
    }
}

/// Parse the flat key = value config text; errors carry 1-based line numbers.
inline ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = detail::trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config (line " + std::to_string(lineno) + "): expected key = value");
        config_set(cfg, detail::trim(stripped.substr(0, eq)), detail::trim(stripped.substr(eq + 1)),
                   "line " + std::to_string(lineno));
    }
    return cfg;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::map<std::string, std::string> ExperimentConfig::to_flat() const {
    std::map<std::string, std::string> m;
    m["suite"] = suite;
    m["seed"] = std::to_string(seed);
    std::string ns;
    for (std::size_t i = 0; i < N_list.size(); ++i) ns += (i ? "," : "") + std::to_string(N_list[i]);
    m["n"] = ns;
    std::string ts;
    for (std::size_t i = 0; i < T_list.size(); ++i) ts += (i ? "," : "") + format_double(T_list[i]);
    if (!T_list.empty()) m["t"] = ts;
    std::string ps;
    for (std::size_t i = 0; i < p_list.size(); ++i) ps += (i ? "," : "") + format_double(p_list[i]);
    if (!p_list.empty()) m["p"] = ps;
    m["t-max"] = format_double(t_max);
    if (!out.empty()) m["out"] = out;
    if (workers >= 1) m["workers"] = std::to_string(workers);
    for (const auto& [k, v] : tol) m["tol." + k] = format_double(v);
    return m;
}

/// Rebuild a config from the flat map embedded in a JSON report.
inline ExperimentConfig config_from_flat(const std::map<std::string, std::string>& flat) {
    ExperimentConfig cfg;
    for (const auto& [k, v] : flat) config_set(cfg, k, v);
    return cfg;
}

struct Violation {
    std::string what;
    std::uint64_t seed = 0;
    double N = 0, t = 0, p = 0, T = 0;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::string csv;
    std::map<std::string, double> fitted_exponents;
    std::map<std::string, double> max_ratios;
    std::vector<Violation> violations;
    std::string summary;  // one-line human summary

    bool pass() const { return violations.empty(); }

    nlohmann::json to_json(const ExperimentConfig& cfg) const {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["suite"] = suite;
        j["seed"] = seed;
        j["fitted_exponents"] = fitted_exponents;
        j["max_ratios"] = max_ratios;
        j["violations"] = nlohmann::json::array();
        for (const auto& v : violations) {
            nlohmann::json vj;
            vj["what"] = v.what;
            vj["seed"] = v.seed;
            vj["N"] = v.N;
            vj["t"] = v.t;
            vj["p"] = v.p;
            vj["T"] = v.T;
            j["violations"].push_back(vj);
        }
        j["config"] = cfg.to_flat();
        j["summary"] = summary;
        return j;
    }
};

}  // namespace toruslab
