#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef MINIMORPH_CLI
#error "MINIMORPH_CLI must point at the CLI executable"
#endif

#ifdef _WIN32
#error "the CLI tests assume a POSIX shell"
#endif
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
    const std::string cmd = std::string(MINIMORPH_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const char* name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("variety command emits the determinant") {
    const fs::path dir = fresh_dir("mm_cli_variety");
    CHECK(run_cli("--out " + dir.string() + " variety 3 4 +") == 0);
    const std::string json = slurp(dir / "variety.json");
    CHECK(json.find("\"240*i\"") != std::string::npos);
    CHECK(json.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("variety rejects degenerate parameters with exit 2") {
    const fs::path dir = fresh_dir("mm_cli_variety_bad");
    CHECK(run_cli("--out " + dir.string() + " variety 1 i") == 2);
}

TEST_CASE("verify without an exact form fails fast in exact mode") {
    const fs::path dir = fresh_dir("mm_cli_verify_exact");
    CHECK(run_cli("--out " + dir.string() + " verify phi-odd:d=3,n=2 --exact") == 2);
}

TEST_CASE("verify runs numerically on request") {
    const fs::path dir = fresh_dir("mm_cli_verify_num");
    CHECK(run_cli("--out " + dir.string() + " verify hopf-dual --numeric") == 0);
    const std::string json = slurp(dir / "verify-hopf-dual.json");
    CHECK(json.find("\"numeric\"") != std::string::npos);
}

TEST_CASE("unknown catalog entries exit 2") {
    const fs::path dir = fresh_dir("mm_cli_unknown");
    CHECK(run_cli("--out " + dir.string() + " verify no-such-map") == 2);
}

TEST_CASE("trace validates alpha") {
    const fs::path dir = fresh_dir("mm_cli_trace_bad");
    CHECK(run_cli("--out " + dir.string() + " trace s4-quadric --alpha 0") == 2);
}

TEST_CASE("trace writes report and artifacts") {
    const fs::path dir = fresh_dir("mm_cli_trace");
    CHECK(run_cli("--out " + dir.string() + " trace s4-quadric --alpha 5i --grid 9x9") == 0);
    CHECK(fs::exists(dir / "trace-s4-quadric.json"));
    CHECK(fs::exists(dir / "s4-quadric-patch.ply"));
    CHECK(fs::exists(dir / "s4-quadric-patch.csv"));
    CHECK(fs::exists(dir / "s4-quadric-patch.json"));
}

TEST_CASE("reruns with one seed are byte-identical") {
    const fs::path dir = fresh_dir("mm_cli_repro");
    const std::string cmd = "--out " + dir.string() + " --seed 7 verify linear-c3";
    CHECK(run_cli(cmd) == 0);
    const std::string first = slurp(dir / "verify-linear-c3.json");
    CHECK(run_cli(cmd) == 0);
    const std::string second = slurp(dir / "verify-linear-c3.json");
    CHECK(first == second);
    CHECK(first.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("verify --list prints the catalog") {
    const fs::path dir = fresh_dir("mm_cli_list");
    CHECK(run_cli("--out " + dir.string() + " verify --list") == 0);
}

TEST_CASE("a failing check exits 1") {
    // An unattainable curvature tolerance makes the minimality check fail;
    // the run itself still completes and writes its report.
    const fs::path dir = fresh_dir("mm_cli_exit1");
    CHECK(run_cli("--out " + dir.string() +
                  " trace s4-quadric --alpha 5i --grid 5x5 --curvature-tol 1e-15") == 1);
    CHECK(fs::exists(dir / "trace-s4-quadric.json"));
}
