// verify: run the verification suites and print a report.
//
//   verify --suite dirac2d --seed 7 --format json
//   verify --config run.ini --tol chain_dirac_n_form=1e-9

#include "dirac_sv/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr int kUsageError = 2;

bool parse_tolerance(const std::string& item, std::map<std::string, double>& out)
{
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    try {
        std::size_t used = 0;
        const double v = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1 || !(v >= 0.0)) return false;
        out[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv)
{
    dirac_sv::RunConfig config;
    std::vector<std::string> tolerances;

    CLI::App app{"Numerical checks of the spinor <-> scalar-vector changes of variables for the free Dirac equation"};
    app.set_config("--config", "", "line-oriented 'key = value' file; command-line flags take precedence");
    app.add_option("--suite", config.suites, "clifford | lorentz | dirac2d | dirac4d | particle | all")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--grid", config.grid, "points per axis (default: 64 in 1+1D, 16 in 3+1D)");
    app.add_option("--spacing", config.spacing, "grid spacing (default: 0.1 in 1+1D, 0.4 in 3+1D)");
    app.add_option("--seed", config.seed, "random seed")->capture_default_str();
    app.add_option("--tol", tolerances, "tolerance override <check>=<value> or <suite>.<check>=<value>");
    app.add_option("--format", config.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--dump-fields", config.dump_dir, "directory for sampled fields and trajectories");
    app.add_flag("--timing", config.timing, "include per-check wall times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    for (const auto& s : config.suites) {
        if (!dirac_sv::is_known_suite(s)) {
            fmt::print(stderr, "unknown suite '{}' (expected clifford, lorentz, dirac2d, dirac4d, particle or all)\n", s);
            return kUsageError;
        }
    }
    if (config.grid != 0 && config.grid < 8) {
        fmt::print(stderr, "--grid must be at least 8\n");
        return kUsageError;
    }
    if (config.spacing < 0.0 || (app.count("--spacing") > 0 && config.spacing == 0.0)) {
        fmt::print(stderr, "--spacing must be positive\n");
        return kUsageError;
    }
    for (const auto& t : tolerances) {
        if (!parse_tolerance(t, config.tolerances)) {
            fmt::print(stderr, "malformed --tol '{}' (expected name=value with value >= 0)\n", t);
            return kUsageError;
        }
    }

    const auto reports = dirac_sv::run_all(config);
    const std::string out =
        config.format == "json" ? dirac_sv::format_json(config, reports) : dirac_sv::format_text(config, reports);
    std::fwrite(out.data(), 1, out.size(), stdout);
    return dirac_sv::summarize(reports).failed == 0 ? 0 : 1;
}
