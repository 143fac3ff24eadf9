// majcodes command-line front end. Talks to the library exclusively through
// the C API in majcodes.h; all exact algebra lives behind that boundary.

#include <majcodes.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct StringDeleter {
    void operator()(char* s) const { mjc_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(mjc_status st) {
    switch (st) {
        case MJC_OK: return 0;
        case MJC_CHECK_FAILED: return 1;
        case MJC_PARSE_ERROR:
        case MJC_INVALID_ARGUMENT: return 2;
        default: return 3;
    }
}

int report_failure(mjc_status st, const std::string& context) {
    std::cerr << "majcodes: " << context << ": " << mjc_status_name(st) << ": "
              << mjc_last_error() << "\n";
    return exit_code_for(st);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

fs::path default_out_dir() {
    if (const char* env = std::getenv("MAJCODES_REPORT_DIR"); env && *env) return fs::path(env);
    return fs::path(".");
}

struct BuildArgs {
    std::string code;
    int l = 0;
    int n = 0;
    std::string occupancy;
    std::string out_dir;
    bool emit_basis = false;
    int max_weight = 0;
    int jobs = 1;
};

std::string build_echo(const BuildArgs& a) {
    std::string cmd = "build --code " + a.code;
    if (a.l) cmd += " --l " + std::to_string(a.l);
    if (a.n) cmd += " --n " + std::to_string(a.n);
    if (!a.occupancy.empty()) cmd += " --occupancy " + a.occupancy;
    if (a.max_weight) cmd += " --max-weight " + std::to_string(a.max_weight);
    return cmd;
}

std::string file_prefix(const BuildArgs& a) {
    std::string p = a.code;
    if (a.l) p += "_l" + std::to_string(a.l);
    if (a.n) p += "_n" + std::to_string(a.n);
    if (!a.occupancy.empty()) p += "_" + a.occupancy;
    return p;
}

int run_build(const BuildArgs& args) {
    mjc_build_options opts{};
    opts.l = args.l;
    opts.n = args.n;
    opts.occupancy = args.occupancy.empty() ? nullptr : args.occupancy.c_str();

    mjc_code* code = nullptr;
    mjc_status st = mjc_code_build(args.code.c_str(), &opts, &code);
    if (st != MJC_OK) return report_failure(st, "build");
    std::unique_ptr<mjc_code, decltype(&mjc_code_free)> guard(code, mjc_code_free);

    char* json = nullptr;
    st = mjc_code_report(code, args.max_weight, args.jobs, build_echo(args).c_str(), &json);
    ApiString json_guard(json);
    if (!json) return report_failure(st, "build report");
    std::cout << json;

    const fs::path out = args.out_dir.empty() ? default_out_dir() : fs::path(args.out_dir);
    fs::create_directories(out);
    const std::string prefix = file_prefix(args);
    write_file(out / (prefix + "_report.json"), json);

    if (std::string(mjc_code_kind(code)) == "majorana") {
        char* spec = nullptr;
        const mjc_status sp = mjc_code_spec_text(code, &spec);
        ApiString spec_guard(spec);
        if (sp != MJC_OK) return report_failure(sp, "emit code spec");
        write_file(out / (prefix + ".code"), spec);
    }
    if (args.emit_basis) {
        const int count = mjc_code_basis_count(code);
        for (int i = 0; i < count; ++i) {
            char* state = nullptr;
            const mjc_status bs = mjc_code_basis_vector(code, i, &state);
            ApiString state_guard(state);
            if (bs != MJC_OK) return report_failure(bs, "emit basis");
            write_file(out / (prefix + "_basis_" + std::to_string(i) + ".state"), state);
        }
    }
    return exit_code_for(st);
}

int run_check(const std::string& path, int max_weight, int jobs) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "majcodes: check: " << e.what() << "\n";
        return 2;
    }
    mjc_code* code = nullptr;
    mjc_status st = mjc_code_parse(text.c_str(), &code);
    if (st != MJC_OK) return report_failure(st, "parse '" + path + "'");
    std::unique_ptr<mjc_code, decltype(&mjc_code_free)> guard(code, mjc_code_free);

    std::string echo = "check --max-weight " + std::to_string(max_weight ? max_weight : 4);
    char* json = nullptr;
    st = mjc_code_report(code, max_weight, jobs, echo.c_str(), &json);
    ApiString json_guard(json);
    if (!json) return report_failure(st, "check report");
    std::cout << json;
    return exit_code_for(st);
}

int run_convert(const std::vector<std::string>& operator_tokens, const std::string& target,
                int modes) {
    std::string op;
    for (const std::string& t : operator_tokens) {
        if (!op.empty()) op += " ";
        op += t;
    }
    const std::string echo = "convert \"" + op + "\" --to " + target;
    char* json = nullptr;
    const mjc_status st = mjc_convert_report(op.c_str(), target.c_str(), modes, echo.c_str(), &json);
    ApiString json_guard(json);
    if (st != MJC_OK) return report_failure(st, "convert");
    std::cout << json;
    return 0;
}

int run_embed(const std::string& path, std::string occupancy, int n, std::string out_path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "majcodes: embed: " << e.what() << "\n";
        return 2;
    }
    // Count amplitude lines to resolve single/double aliases.
    if (occupancy == "single" || occupancy == "double" || occupancy == "s" || occupancy == "d") {
        std::size_t lines = 0;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos != std::string::npos && line[pos] != '#') ++lines;
        }
        std::size_t qubits = 0;
        while ((std::size_t(1) << qubits) < lines) ++qubits;
        occupancy.assign(qubits, occupancy[0] == 's' ? '0' : '1');
    }
    if (n > 0 && occupancy.size() != static_cast<std::size_t>(n)) {
        std::cerr << "majcodes: embed: occupancy label length != --n\n";
        return 2;
    }
    const std::string echo = "embed --occupancy " + occupancy;
    char* json = nullptr;
    mjc_status st = mjc_embed_report(text.c_str(), occupancy.c_str(), echo.c_str(), &json);
    ApiString json_guard(json);
    if (st != MJC_OK) return report_failure(st, "embed");
    std::cout << json;

    char* state = nullptr;
    st = mjc_embed_state(text.c_str(), occupancy.c_str(), &state);
    ApiString state_guard(state);
    if (st != MJC_OK) return report_failure(st, "embed");
    if (out_path.empty()) out_path = path + ".fock";
    try {
        write_file(out_path, state);
    } catch (const std::exception& e) {
        std::cerr << "majcodes: embed: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_invariants(const std::vector<std::string>& amps, bool decimals) {
    std::string text;
    for (const std::string& a : amps) {
        if (!text.empty()) text += " ";
        text += a;
    }
    const std::string echo = "invariants " + text + (decimals ? " --decimals" : "");
    char* json = nullptr;
    const mjc_status st =
        mjc_invariants_report(text.c_str(), decimals ? 1 : 0, echo.c_str(), &json);
    ApiString json_guard(json);
    if (st != MJC_OK) return report_failure(st, "invariants");
    std::cout << json;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"majcodes: exact Majorana stabilizer codes, occupancy embeddings and E8 invariants"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mjc_version()));

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "build a named code and verify it");
    build->add_option("--code", build_args.code,
                      "four-qubit | single-occupancy | four-qubit-embedded | hastings | glued")
        ->required();
    build->add_option("--l", build_args.l, "hastings: 2^l Majorana modes (l >= 3)");
    build->add_option("--n", build_args.n, "single-occupancy: qubit count");
    build->add_option("--occupancy", build_args.occupancy,
                      "four-qubit-embedded: single | double");
    build->add_option("-o,--out", build_args.out_dir,
                      "output directory (default: $MAJCODES_REPORT_DIR or .)");
    build->add_flag("--emit-basis", build_args.emit_basis, "write codespace basis state files");
    build->add_option("--max-weight", build_args.max_weight, "distance search budget (default 4)");
    build->add_option("-j,--jobs", build_args.jobs, "threads for the distance search");

    std::string check_file;
    int check_max_weight = 0;
    int check_jobs = 1;
    CLI::App* check = app.add_subcommand("check", "validate a code-spec file and report");
    check->add_option("codefile", check_file, "code-spec file")->required();
    check->add_option("--max-weight", check_max_weight, "distance search budget (default 4)");
    check->add_option("-j,--jobs", check_jobs, "threads for the distance search");

    std::vector<std::string> convert_op;
    std::string convert_target;
    int convert_modes = 0;
    CLI::App* convert = app.add_subcommand("convert", "convert operators between forms");
    convert->add_option("operator", convert_op, "operator text, e.g. \"c1 c4\" or \"XYXYXYXY\"")
        ->required()
        ->expected(-1);
    convert->add_option("--to", convert_target, "pauli | majorana")->required();
    convert->add_option("--modes", convert_modes, "fermionic mode count (default: inferred)");

    std::string embed_file, embed_occupancy = "single", embed_out;
    int embed_n = 0;
    CLI::App* embed = app.add_subcommand("embed", "embed a qubit state into Fock space");
    embed->add_option("statefile", embed_file, "qubit-state file: 2^n amplitude lines")
        ->required();
    embed->add_option("--occupancy", embed_occupancy,
                      "occupancy label bits, or single | double (default single)");
    embed->add_option("--n", embed_n, "expected qubit count (cross-check)");
    embed->add_option("-o,--out", embed_out, "output state file (default: <statefile>.fock)");

    std::vector<std::string> inv_amps;
    bool inv_decimals = false;
    CLI::App* inv = app.add_subcommand("invariants", "evaluate the eight E8 invariants");
    inv->add_option("amplitudes", inv_amps, "eight exact amplitudes")->required()->expected(8);
    inv->add_flag("--decimals", inv_decimals, "include truncated decimal renderings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (check->parsed()) return run_check(check_file, check_max_weight, check_jobs);
        if (convert->parsed()) return run_convert(convert_op, convert_target, convert_modes);
        if (embed->parsed()) return run_embed(embed_file, embed_occupancy, embed_n, embed_out);
        if (inv->parsed()) return run_invariants(inv_amps, inv_decimals);
    } catch (const std::exception& e) {
        std::cerr << "majcodes: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
