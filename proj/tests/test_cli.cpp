#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / ("verify_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Result run(const std::string& args)
{
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = std::string("\"") + VERIFY_EXE + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

}  // namespace

TEST_CASE("exit codes")
{
    CHECK(run("--suite clifford").code == 0);
    CHECK(run("--help").code == 0);
    CHECK(run("--suite bogus").code == 2);
    CHECK(run("--suite clifford,bogus").code == 2);
    CHECK(run("--grid 4").code == 2);
    CHECK(run("--spacing 0").code == 2);
    CHECK(run("--spacing -1").code == 2);
    CHECK(run("--format xml").code == 2);
    CHECK(run("--tol nonsense").code == 2);
    CHECK(run("--tol x=abc").code == 2);
    CHECK(run("--no-such-flag").code == 2);
    CHECK(run("--suite clifford --tol clifford.mat_exp_inverse=0").code == 1);
    // informational checks never fail a run
    CHECK(run("--suite clifford --tol sigma4d_product_rule_plus_eps=0").code == 0);
}

TEST_CASE("JSON output")
{
    const Result r = run("--suite clifford,lorentz --seed 3 --format json");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["run_config"]["seed"] == 3);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["checks"].size() == doc["summary"]["total"]);
    CHECK(run("--suite clifford,lorentz --seed 3 --format json").out == r.out);

    const Result timed = run("--suite clifford --format json --timing");
    CHECK(nlohmann::json::parse(timed.out)["checks"][0].contains("wall_time_ms"));
}

TEST_CASE("config file with flag precedence")
{
    const fs::path cfg = scratch() / "run.ini";
    {
        std::ofstream f(cfg);
        f << "suite = clifford\nformat = json\nseed = 11\n";
    }
    const Result a = run("--config \"" + cfg.string() + "\"");
    REQUIRE(a.code == 0);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["run_config"]["seed"] == 11);
    CHECK(doc["run_config"]["suites"] == nlohmann::json::array({"clifford"}));

    const Result b = run("--config \"" + cfg.string() + "\" --seed 12");
    CHECK(nlohmann::json::parse(b.out)["run_config"]["seed"] == 12);
    CHECK(run("--config \"" + (scratch() / "missing.ini").string() + "\"").code == 2);
}

TEST_CASE("field dumps")
{
    const fs::path dir = scratch() / "dumps";
    const Result r = run("--suite dirac2d --dump-fields \"" + dir.string() + "\"");
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "dirac2d_kg_wave.txt"));
    CHECK(fs::exists(dir / "dirac2d_lhat_psi.txt"));
    std::ifstream in(dir / "dirac2d_lhat_psi.txt");
    std::string line;
    std::getline(in, line);
    std::istringstream fields(line);
    int count = 0;
    std::string tok;
    while (fields >> tok) ++count;
    CHECK(count == 6);  // i0 i1 re im re im
    fs::remove_all(scratch());
}
