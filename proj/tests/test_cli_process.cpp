// End-to-end checks of the command-line tool as a child process: subcommand
// wiring, file outputs, and the exit-code contract (0 ok, 1 usage/config,
// 2 numerical failure).

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return TIMOBEAM_CLI_PATH; }

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "timobeam_cli_stdout.txt";
    const std::string cmd =
        "\"" + std::string(cli_path()) + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("timobeam_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("cli: run with a config file plus overriding tokens") {
    const fs::path dir = scratch("run");
    const fs::path cfg = dir / "run.cfg";
    std::ofstream(cfg) << "damping=undamped\nL=2\nNx=12\nT=10\n# comment\n";

    const RunResult r = run_cli("run --config \"" + cfg.string() + "\" T=5 --out \"" +
                                (dir / "out").string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "out" / "trace.csv"));

    // T=5 must have overridden the file's T=10: count the levels.
    std::ifstream in(dir / "out" / "trace.csv");
    std::string line;
    long rows = -1;  // header
    while (std::getline(in, line)) ++rows;
    const double dt = 0.2 * (2.0 / 13.0);
    CHECK(rows == std::lround(5.0 / dt) + 1);
}

TEST_CASE("cli: fit reads a trace produced by run") {
    const fs::path dir = scratch("fit");
    REQUIRE(run_cli("run --preset fig6 --out \"" + dir.string() + "\"").exit_code == 0);
    const RunResult r =
        run_cli("fit \"" + (dir / "trace.csv").string() + "\" --window-fraction 0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("selected: polynomial") != std::string::npos);
}

TEST_CASE("cli: sweep emits the refinement table") {
    const fs::path dir = scratch("sweep");
    const RunResult r =
        run_cli("sweep --preset data --levels 3 --out \"" + dir.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(dir / "sweep.csv"));
    CHECK(r.output.find("max_identity_residual") != std::string::npos);
}

TEST_CASE("cli: preset subcommand lists and prints") {
    const RunResult list = run_cli("preset");
    CHECK(list.exit_code == 0);
    for (const char* name : {"fig1", "fig3", "fig4", "fig6", "fig8", "data"})
        CHECK(list.output.find(name) != std::string::npos);

    const RunResult show = run_cli("preset fig3");
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("damping=undamped") != std::string::npos);
    CHECK(show.output.find("Nx=50") != std::string::npos);
}

TEST_CASE("cli: exit codes follow the contract") {
    SUBCASE("unknown key is a usage error") {
        const RunResult r = run_cli("run wibble=3 --out /tmp/timobeam_cli_err");
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("wibble") != std::string::npos);
    }
    SUBCASE("CFL violation is a usage error naming c") {
        const RunResult r = run_cli("run c=0.9 --out /tmp/timobeam_cli_err");
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("c:") != std::string::npos);
    }
    SUBCASE("single sweep level is a usage error") {
        CHECK(run_cli("sweep --levels 1 --out /tmp/timobeam_cli_err").exit_code == 1);
    }
    SUBCASE("a blow-up inside the guard exits 2 and names the step") {
        const RunResult r = run_cli(
            "run c=0.45 L=1 Nx=30 T=20 damping=undamped ic=cos_sin --out /tmp/timobeam_cli_err");
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("step") != std::string::npos);
    }
    SUBCASE("unknown preset is a usage error") {
        CHECK(run_cli("preset fig99").exit_code == 1);
    }
}
