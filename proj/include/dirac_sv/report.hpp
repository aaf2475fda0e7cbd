#pragma once

// Check records, run configuration and the suite runner used by the
// `verify` command-line tool.

#include "dirac_sv/random.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dirac_sv {

struct CheckReport {
    std::string suite;
    std::string name;
    std::string anchor;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool informational = false;
    double wall_time_ms = 0.0;
    std::string notes;
};

struct RunConfig {
    std::vector<std::string> suites{"all"};
    int grid = 0;          // 0: per-suite defaults (64 in 1+1D, 16 in 3+1D)
    double spacing = 0.0;  // 0: per-suite defaults (0.1 in 1+1D, 0.4 in 3+1D)
    std::uint64_t seed = 7;
    std::map<std::string, double> tolerances;
    std::string format = "text";
    std::string dump_dir;
    bool timing = false;  // include wall times in the output
};

const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);
/// "all" expanded, duplicates removed, canonical order.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

class SuiteContext {
public:
    SuiteContext(std::string suite, const RunConfig& config);

    Rng& rng() { return rng_; }
    const RunConfig& config() const { return config_; }
    const std::string& suite() const { return suite_; }

    int grid_2d() const { return config_.grid > 0 ? config_.grid : 64; }
    double spacing_2d() const { return config_.spacing > 0.0 ? config_.spacing : 0.1; }
    int grid_4d() const { return config_.grid > 0 ? config_.grid : 16; }
    double spacing_4d() const { return config_.spacing > 0.0 ? config_.spacing : 0.4; }

    /// Override from --tol "<check>=<v>" or "<suite>.<check>=<v>".
    double tolerance(const std::string& check, double fallback) const;

    /// residual <= tolerance decides pass; NaN fails.
    CheckReport& check(const std::string& name, const std::string& anchor, double residual, double tolerance,
                       std::string notes = {});
    /// Report-only value that never affects the exit status.
    CheckReport& info(const std::string& name, const std::string& anchor, double value, std::string notes = {});

    /// Path inside --dump-fields, or nullopt when dumping is off.
    std::optional<std::filesystem::path> dump_path(const std::string& file) const;

    std::vector<CheckReport> take() { return std::move(reports_); }

private:
    double elapsed_ms();

    std::string suite_;
    const RunConfig& config_;
    Rng rng_;
    std::vector<CheckReport> reports_;
    std::chrono::steady_clock::time_point last_;
};

void run_clifford_suite(SuiteContext& ctx);
void run_lorentz_suite(SuiteContext& ctx);
void run_dirac2d_suite(SuiteContext& ctx);
void run_dirac4d_suite(SuiteContext& ctx);
void run_particle_suite(SuiteContext& ctx);

std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& config);
/// Runs the resolved suites concurrently and concatenates their reports in
/// canonical suite order.
std::vector<CheckReport> run_all(const RunConfig& config);

struct Summary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int informational = 0;
};
Summary summarize(const std::vector<CheckReport>& reports);

std::string format_json(const RunConfig& config, const std::vector<CheckReport>& reports);
std::string format_text(const RunConfig& config, const std::vector<CheckReport>& reports);

}  // namespace dirac_sv
