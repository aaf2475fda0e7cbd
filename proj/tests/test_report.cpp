#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_sv/report.hpp"

#include <json.hpp>

#include <cmath>
#include <limits>

using namespace dirac_sv;
using nlohmann::json;

namespace {

RunConfig config_for(std::vector<std::string> suites)
{
    RunConfig c;
    c.suites = std::move(suites);
    c.format = "json";
    return c;
}

}  // namespace

TEST_CASE("suite names")
{
    CHECK(suite_names().size() == 5);
    CHECK(is_known_suite("all"));
    CHECK(is_known_suite("dirac4d"));
    CHECK_FALSE(is_known_suite("dirac3d"));
    const auto all = resolve_suites({"particle", "all", "clifford"});
    CHECK(all == suite_names());
    CHECK(resolve_suites({"lorentz", "clifford", "lorentz"}) == std::vector<std::string>{"clifford", "lorentz"});
    CHECK_THROWS_AS(resolve_suites({"bogus"}), std::invalid_argument);
}

TEST_CASE("JSON layout")
{
    const RunConfig c = config_for({"clifford", "lorentz"});
    const auto reports = run_all(c);
    const json doc = json::parse(format_json(c, reports));
    REQUIRE(doc.contains("run_config"));
    REQUIRE(doc.contains("checks"));
    REQUIRE(doc.contains("summary"));
    CHECK(doc["run_config"]["seed"] == 7);
    CHECK(doc["run_config"]["suites"] == json::array({"clifford", "lorentz"}));
    const auto& checks = doc["checks"];
    CHECK(checks.size() == reports.size());
    int info = 0, passed = 0;
    for (const auto& r : checks) {
        for (const char* key : {"suite", "name", "anchor", "residual", "tolerance", "passed", "informational", "notes"})
            CHECK(r.contains(key));
        CHECK_FALSE(r.contains("wall_time_ms"));
        CHECK(!r["anchor"].get<std::string>().empty());
        if (r["informational"].get<bool>()) {
            ++info;
        } else {
            CHECK(r["passed"].get<bool>() == (r["residual"].get<double>() <= r["tolerance"].get<double>()));
            passed += r["passed"].get<bool>() ? 1 : 0;
        }
    }
    CHECK(doc["summary"]["total"] == checks.size());
    CHECK(doc["summary"]["informational"] == info);
    CHECK(doc["summary"]["passed"] == passed);
    CHECK(checks.front()["suite"] == "clifford");
    CHECK(checks.back()["suite"] == "lorentz");
}

TEST_CASE("reports are deterministic for a fixed seed")
{
    const RunConfig c = config_for({"clifford", "lorentz", "dirac2d"});
    CHECK(format_json(c, run_all(c)) == format_json(c, run_all(c)));
    RunConfig other = c;
    other.seed = 8;
    CHECK(format_json(c, run_all(c)) != format_json(other, run_all(other)));
}

TEST_CASE("tolerance overrides")
{
    RunConfig c = config_for({"clifford"});
    c.tolerances["clifford.mat_exp_inverse"] = 0.0;
    c.tolerances["sigma_sandwich_identity"] = 1.0;
    const auto reports = run_suite("clifford", c);
    bool seen_a = false, seen_b = false;
    for (const auto& r : reports) {
        if (r.name == "mat_exp_inverse") {
            seen_a = true;
            CHECK(r.tolerance == 0.0);
            CHECK_FALSE(r.passed);
        }
        if (r.name == "sigma_sandwich_identity") {
            seen_b = true;
            CHECK(r.tolerance == 1.0);
        }
    }
    CHECK(seen_a);
    CHECK(seen_b);
    CHECK(summarize(reports).failed == 1);
}

TEST_CASE("non-finite residuals")
{
    RunConfig c = config_for({"clifford"});
    SuiteContext ctx("clifford", c);
    ctx.check("nan_residual", "anchor", std::numeric_limits<double>::quiet_NaN(), 1.0);
    ctx.check("inf_residual", "anchor", std::numeric_limits<double>::infinity(), 1.0);
    ctx.info("info_value", "anchor", 3.0, "quote \" and newline \n");
    const auto reports = ctx.take();
    CHECK_FALSE(reports[0].passed);
    CHECK_FALSE(reports[1].passed);
    const json doc = json::parse(format_json(c, reports));
    CHECK(doc["checks"][0]["residual"].is_null());
    CHECK(doc["checks"][1]["residual"].is_null());
    CHECK(doc["checks"][2]["notes"] == "quote \" and newline \n");
    const Summary s = summarize(reports);
    CHECK(s.total == 3);
    CHECK(s.failed == 2);
    CHECK(s.informational == 1);
    CHECK(format_text(c, reports).find("FAIL") != std::string::npos);
}

TEST_CASE("text format includes the anchors")
{
    const RunConfig c = config_for({"clifford"});
    const auto reports = run_suite("clifford", c);
    const std::string text = format_text(c, reports);
    for (const auto& r : reports) CHECK(text.find(r.anchor) != std::string::npos);
}
