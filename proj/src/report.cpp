#include "dirac_sv/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace dirac_sv {

namespace {

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite)
{
    // FNV-1a of the suite name, mixed into the user seed
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : suite) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return seed ^ (h * 0x9E3779B97F4A7C15ULL);
}

std::string sci(double v)
{
    if (!std::isfinite(v)) return "null";
    return fmt::format("{:.5e}", v);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string status(const CheckReport& r)
{
    if (r.informational) return "INFO";
    return r.passed ? "PASS" : "FAIL";
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"clifford", "lorentz", "dirac2d", "dirac4d", "particle"};
    return names;
}

bool is_known_suite(const std::string& name)
{
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested)
{
    std::vector<std::string> out;
    for (const auto& name : suite_names()) {
        const bool wanted = std::any_of(requested.begin(), requested.end(),
                                        [&](const std::string& r) { return r == name || r == "all"; });
        if (wanted) out.push_back(name);
    }
    for (const auto& r : requested)
        if (!is_known_suite(r)) throw std::invalid_argument("unknown suite: " + r);
    return out;
}

SuiteContext::SuiteContext(std::string suite, const RunConfig& config)
    : suite_(std::move(suite)), config_(config), rng_(suite_seed(config.seed, suite_)),
      last_(std::chrono::steady_clock::now())
{
}

double SuiteContext::tolerance(const std::string& check, double fallback) const
{
    if (auto it = config_.tolerances.find(suite_ + "." + check); it != config_.tolerances.end()) return it->second;
    if (auto it = config_.tolerances.find(check); it != config_.tolerances.end()) return it->second;
    return fallback;
}

double SuiteContext::elapsed_ms()
{
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
}

CheckReport& SuiteContext::check(const std::string& name, const std::string& anchor, double residual,
                                 double tolerance, std::string notes)
{
    CheckReport r;
    r.suite = suite_;
    r.name = name;
    r.anchor = anchor;
    r.residual = residual;
    r.tolerance = this->tolerance(name, tolerance);
    r.passed = residual <= r.tolerance;
    r.wall_time_ms = elapsed_ms();
    r.notes = std::move(notes);
    reports_.push_back(std::move(r));
    return reports_.back();
}

CheckReport& SuiteContext::info(const std::string& name, const std::string& anchor, double value, std::string notes)
{
    CheckReport r;
    r.suite = suite_;
    r.name = name;
    r.anchor = anchor;
    r.residual = value;
    r.tolerance = 0.0;
    r.passed = true;
    r.informational = true;
    r.wall_time_ms = elapsed_ms();
    r.notes = std::move(notes);
    reports_.push_back(std::move(r));
    return reports_.back();
}

std::optional<std::filesystem::path> SuiteContext::dump_path(const std::string& file) const
{
    if (config_.dump_dir.empty()) return std::nullopt;
    std::filesystem::create_directories(config_.dump_dir);
    return std::filesystem::path(config_.dump_dir) / file;
}

std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& config)
{
    SuiteContext ctx(name, config);
    try {
        if (name == "clifford") run_clifford_suite(ctx);
        else if (name == "lorentz") run_lorentz_suite(ctx);
        else if (name == "dirac2d") run_dirac2d_suite(ctx);
        else if (name == "dirac4d") run_dirac4d_suite(ctx);
        else if (name == "particle") run_particle_suite(ctx);
        else throw std::invalid_argument("unknown suite: " + name);
    } catch (const std::exception& e) {
        ctx.check("suite_aborted", "runner", std::nan(""), 0.0, e.what());
    }
    return ctx.take();
}

std::vector<CheckReport> run_all(const RunConfig& config)
{
    const std::vector<std::string> suites = resolve_suites(config.suites);
    std::vector<std::future<std::vector<CheckReport>>> jobs;
    jobs.reserve(suites.size());
    for (const auto& s : suites) jobs.push_back(std::async(std::launch::async, run_suite, s, std::cref(config)));
    std::vector<CheckReport> out;
    for (auto& job : jobs) {
        auto part = job.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Summary summarize(const std::vector<CheckReport>& reports)
{
    Summary s;
    for (const auto& r : reports) {
        ++s.total;
        if (r.informational) ++s.informational;
        else if (r.passed) ++s.passed;
        else ++s.failed;
    }
    return s;
}

std::string format_json(const RunConfig& config, const std::vector<CheckReport>& reports)
{
    std::string out = "{\n  \"run_config\": {\n    \"suites\": [";
    const auto suites = resolve_suites(config.suites);
    for (std::size_t i = 0; i < suites.size(); ++i) out += (i ? ", " : "") + quoted(suites[i]);
    out += "],\n";
    out += fmt::format("    \"grid\": {},\n", config.grid);
    out += fmt::format("    \"spacing\": {},\n", sci(config.spacing));
    out += fmt::format("    \"seed\": {},\n", config.seed);
    out += "    \"tolerances\": {";
    bool first = true;
    for (const auto& [k, v] : config.tolerances) {
        out += fmt::format("{}{}: {}", first ? "" : ", ", quoted(k), sci(v));
        first = false;
    }
    out += "},\n";
    out += fmt::format("    \"format\": {}\n  }},\n  \"checks\": [\n", quoted(config.format));
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out += "    {";
        out += fmt::format("\"suite\": {}, \"name\": {}, \"anchor\": {}, ", quoted(r.suite), quoted(r.name),
                           quoted(r.anchor));
        out += fmt::format("\"residual\": {}, \"tolerance\": {}, ", sci(r.residual), sci(r.tolerance));
        out += fmt::format("\"passed\": {}, \"informational\": {}, ", r.passed, r.informational);
        if (config.timing) out += fmt::format("\"wall_time_ms\": {:.3f}, ", r.wall_time_ms);
        out += fmt::format("\"notes\": {}}}{}\n", quoted(r.notes), i + 1 < reports.size() ? "," : "");
    }
    const Summary s = summarize(reports);
    out += fmt::format("  ],\n  \"summary\": {{\"total\": {}, \"passed\": {}, \"failed\": {}, \"informational\": {}}}\n}}\n",
                       s.total, s.passed, s.failed, s.informational);
    return out;
}

std::string format_text(const RunConfig& config, const std::vector<CheckReport>& reports)
{
    std::size_t wsuite = 5, wname = 5, wanchor = 6;
    for (const auto& r : reports) {
        wsuite = std::max(wsuite, r.suite.size());
        wname = std::max(wname, r.name.size());
        wanchor = std::max(wanchor, r.anchor.size());
    }
    std::string out = fmt::format("{:<6}{:<{}}  {:<{}}  {:>12}  {:>12}  {:<{}}  {}\n", "", "suite", wsuite, "check",
                                  wname, "residual", "tolerance", "anchor", wanchor, "notes");
    for (const auto& r : reports) {
        std::string notes = r.notes;
        if (config.timing) notes += fmt::format("{}[{:.1f} ms]", notes.empty() ? "" : " ", r.wall_time_ms);
        out += fmt::format("{:<6}{:<{}}  {:<{}}  {:>12}  {:>12}  {:<{}}  {}\n", status(r), r.suite, wsuite, r.name,
                           wname, sci(r.residual), r.informational ? "-" : sci(r.tolerance), r.anchor, wanchor, notes);
    }
    const Summary s = summarize(reports);
    out += fmt::format("\n{} checks: {} passed, {} failed, {} informational\n", s.total, s.passed, s.failed,
                       s.informational);
    return out;
}

}  // namespace dirac_sv
