#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MAJCODES_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "majcodes_cli_tests";
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: help and version succeed") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--version").exit_code == 0);
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("build").exit_code == 2);          // missing --code
    CHECK(run("convert c1 --to nowhere").exit_code == 2);
}

TEST_CASE("cli: convert emits the printed forms") {
    const RunResult r = run("convert c1 c4 c5 c8 c9 c12 c13 c16 --to pauli");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"result\": \"+1 YYYYYYYY\"") != std::string::npos);
    const RunResult g = run("convert ZZZZZZZZ --to majorana");
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("c16") != std::string::npos);
}

TEST_CASE("cli: identical invocations produce byte-identical reports") {
    const std::string args = "build --code hastings --l 4 -o " +
                             (scratch_dir() / "det").string();
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const RunResult inv1 = run("invariants 3 -5 7 11 -13 17 19 -23");
    const RunResult inv2 = run("invariants 3 -5 7 11 -13 17 19 -23");
    CHECK(inv1.output == inv2.output);
}

TEST_CASE("cli: build writes the code spec, report and basis files") {
    const fs::path out = scratch_dir() / "files";
    fs::remove_all(out);
    const RunResult r =
        run("build --code glued --emit-basis -o " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out / "glued.code"));
    CHECK(fs::exists(out / "glued_report.json"));
    CHECK(fs::exists(out / "glued_basis_0.state"));
    CHECK(fs::exists(out / "glued_basis_7.state"));
    CHECK(slurp(out / "glued_basis_0.state") == "+1 |01010101>\n+1 |10101010>\n");
    // The emitted code spec is checkable and valid.
    const RunResult check = run("check " + (out / "glued.code").string());
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("cli: check distinguishes failure kinds by exit code") {
    const fs::path bad = scratch_dir() / "bad.code";
    write(bad, "modes: 2\n+1 c1 c2\n+1 c2 c3\n");
    CHECK(run("check " + bad.string()).exit_code == 1);
    const fs::path broken = scratch_dir() / "broken.code";
    write(broken, "modes: 2\nc1 cQ\n");
    const RunResult r = run("check " + broken.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
    CHECK(run("check " + (scratch_dir() / "missing.code").string()).exit_code == 2);
}

TEST_CASE("cli: check honours the max-weight budget") {
    const fs::path spec = scratch_dir() / "s2.code";
    write(spec,
          "modes: 8\n"
          "+1 c1 c2 c3 c4\n+1 c5 c6 c7 c8\n+1 c9 c10 c11 c12\n+1 c13 c14 c15 c16\n"
          "+1 c1 c4 c5 c8 c9 c12 c13 c16\n+1 c3 c4 c7 c8 c11 c12 c15 c16\n");
    const RunResult bounded = run("check " + spec.string() + " --max-weight 3");
    CHECK(bounded.exit_code == 0);
    CHECK(bounded.output.find("\"display\": \">3\"") != std::string::npos);
    const RunResult exact = run("check " + spec.string() + " --max-weight 4");
    CHECK(exact.output.find("\"display\": \"4\"") != std::string::npos);
}

TEST_CASE("cli: embed writes the output state file") {
    const fs::path psi = scratch_dir() / "psi.txt";
    write(psi, "0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n0\n1\n");
    const fs::path out = scratch_dir() / "psi.fock";
    const RunResult r =
        run("embed " + psi.string() + " --occupancy 0000 -o " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(out) == "+1 |10101010>\n");
    // single/double aliases resolve against the file length
    const RunResult alias = run("embed " + psi.string() + " --occupancy double -o " +
                                (scratch_dir() / "psi2.fock").string());
    CHECK(alias.exit_code == 0);
    CHECK(slurp(scratch_dir() / "psi2.fock") == "+1 |00000000>\n");
}

TEST_CASE("cli: invariants with and without decimals") {
    const RunResult r = run("invariants 1 0 0 0 0 0 0 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pi_2\": \"60\"") != std::string::npos);
    CHECK(r.output.find("decimals") == std::string::npos);
    const RunResult d = run("invariants 1 0 0 0 0 0 0 0 --decimals");
    CHECK(d.output.find("\"pi_2\": \"60.000000000000\"") != std::string::npos);
    CHECK(run("invariants 1 2 3").exit_code == 2);
}

TEST_CASE("cli: jobs flag leaves reports unchanged") {
    const std::string base = "build --code hastings --l 4 -o " +
                             (scratch_dir() / "jobs").string();
    const RunResult a = run(base);
    const RunResult b = run(base + " -j 4");
    // The echoed command omits the thread count; the content must agree.
    CHECK(a.output == b.output);
}

TEST_CASE("cli: report directory honours the environment override") {
    const fs::path env_dir = scratch_dir() / "env_out";
    fs::remove_all(env_dir);
    const std::string cmd = "MAJCODES_REPORT_DIR=" + env_dir.string() + " " +
                            std::string(MAJCODES_CLI_PATH) +
                            " build --code single-occupancy --n 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
    }
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(fs::exists(env_dir / "single-occupancy_n2.code"));
    CHECK(fs::exists(env_dir / "single-occupancy_n2_report.json"));
}
