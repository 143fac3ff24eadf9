#include "majcodes.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>

#include "report.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mjc_status fail(mjc_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

// A built or parsed code. The four-qubit code is qubit-level and carries no
// Majorana generator set.
struct CodeHandle {
    bool qubit_level = false;
    std::string command_hint;
    // Majorana-level payload:
    std::size_t modes = 0;
    std::vector<mjc::MajoranaOperator> generators;
    mjc::ValidationResult validation;
    std::optional<mjc::NamedCode> named;
};

CodeHandle* as_handle(mjc_code* c) { return reinterpret_cast<CodeHandle*>(c); }
const CodeHandle* as_handle(const mjc_code* c) { return reinterpret_cast<const CodeHandle*>(c); }

template <typename F>
mjc_status guarded(F&& fn) {
    try {
        return fn();
    } catch (const mjc::ParseError& e) {
        return fail(MJC_PARSE_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(MJC_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(MJC_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(MJC_INTERNAL_ERROR, e.what());
    }
}

constexpr int kDefaultMaxWeight = 4;

mjc::QubitState parse_amplitude_lines(const char* amplitude_lines) {
    std::istringstream in(amplitude_lines);
    std::string line;
    std::vector<mjc::Scalar> amps;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
            sv.remove_prefix(1);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
            sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        try {
            amps.push_back(mjc::Scalar::parse(sv));
        } catch (const mjc::ParseError& e) {
            throw mjc::ParseError(e.what(), lineno);
        }
    }
    if (amps.empty()) throw mjc::ParseError("no amplitudes found");
    std::size_t n = 0;
    while ((std::size_t(1) << n) < amps.size()) ++n;
    if ((std::size_t(1) << n) != amps.size())
        throw mjc::ParseError("amplitude count " + std::to_string(amps.size()) +
                              " is not a power of two");
    mjc::QubitState psi(n);
    psi.amps = std::move(amps);
    return psi;
}

}  // namespace

extern "C" {

const char* mjc_version(void) { return "1.0.0"; }

const char* mjc_status_name(mjc_status status) {
    switch (status) {
        case MJC_OK: return "ok";
        case MJC_CHECK_FAILED: return "check-failed";
        case MJC_PARSE_ERROR: return "parse-error";
        case MJC_INVALID_ARGUMENT: return "invalid-argument";
        default: return "internal-error";
    }
}

const char* mjc_last_error(void) { return g_last_error.c_str(); }

void mjc_string_free(char* s) { std::free(s); }

mjc_status mjc_code_build(const char* name, const mjc_build_options* options,
                          mjc_code** out_code) {
    if (!name || !out_code) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_code = nullptr;
    return guarded([&]() {
        auto handle = std::make_unique<CodeHandle>();
        const std::string n = name;
        if (n == "four-qubit") {
            handle->qubit_level = true;
            handle->command_hint = n;
        } else if (n == "single-occupancy") {
            const int qn = options ? options->n : 0;
            if (qn < 1) return fail(MJC_INVALID_ARGUMENT, "single-occupancy needs n >= 1");
            handle->named = mjc::single_occupancy_code(static_cast<std::size_t>(qn));
        } else if (n == "four-qubit-embedded") {
            const std::string occ = options && options->occupancy ? options->occupancy : "";
            if (occ != "single" && occ != "double")
                return fail(MJC_INVALID_ARGUMENT,
                            "four-qubit-embedded needs occupancy 'single' or 'double'");
            handle->named = mjc::embedded_four_qubit_code(
                occ == "single" ? mjc::Occupancy::Single : mjc::Occupancy::Double);
        } else if (n == "hastings") {
            const int l = options ? options->l : 0;
            if (l < 3) return fail(MJC_INVALID_ARGUMENT, "hastings needs l >= 3");
            handle->named = mjc::hastings_code(static_cast<std::size_t>(l));
        } else if (n == "glued") {
            handle->named = mjc::glued_code();
        } else {
            return fail(MJC_INVALID_ARGUMENT, "unknown code name '" + n + "'");
        }
        if (handle->named) {
            handle->modes = handle->named->code.modes();
            handle->generators = handle->named->code.generators();
            handle->validation = mjc::validate(handle->modes, handle->generators);
        }
        *out_code = reinterpret_cast<mjc_code*>(handle.release());
        return MJC_OK;
    });
}

mjc_status mjc_code_parse(const char* spec_text, mjc_code** out_code) {
    if (!spec_text || !out_code) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_code = nullptr;
    return guarded([&]() {
        const mjc::CodeSpecFile spec = mjc::parse_code_spec(spec_text);
        auto handle = std::make_unique<CodeHandle>();
        handle->modes = spec.modes;
        handle->generators = spec.generators;
        handle->validation = mjc::validate(spec.modes, spec.generators);
        *out_code = reinterpret_cast<mjc_code*>(handle.release());
        return MJC_OK;
    });
}

void mjc_code_free(mjc_code* code) { delete as_handle(code); }

const char* mjc_code_kind(const mjc_code* code) {
    const CodeHandle* h = as_handle(code);
    return h && h->qubit_level ? "qubit" : "majorana";
}

int mjc_code_majorana_modes(const mjc_code* code) {
    const CodeHandle* h = as_handle(code);
    if (!h || h->qubit_level) return 0;
    return static_cast<int>(2 * h->modes);
}

int mjc_code_generator_count(const mjc_code* code) {
    const CodeHandle* h = as_handle(code);
    if (!h) return 0;
    if (h->qubit_level) return 2;
    return static_cast<int>(h->generators.size());
}

int mjc_code_is_valid(const mjc_code* code) {
    const CodeHandle* h = as_handle(code);
    if (!h) return 0;
    return h->qubit_level || h->validation.valid() ? 1 : 0;
}

int mjc_code_logical_qubits(const mjc_code* code) {
    const CodeHandle* h = as_handle(code);
    if (!h) return -1;
    if (h->qubit_level) return 2;
    if (!h->validation.valid()) return -1;
    return static_cast<int>(h->validation.code->logical_qubits());
}

int mjc_code_basis_count(const mjc_code* code) {
    const CodeHandle* h = as_handle(code);
    if (!h) return 0;
    if (h->qubit_level) return 4;
    if (h->named && !h->named->basis.empty()) return static_cast<int>(h->named->basis.size());
    if (h->validation.valid() && h->modes <= 16)
        return static_cast<int>(std::size_t(1) << h->validation.code->logical_qubits());
    return 0;
}

mjc_status mjc_code_report(const mjc_code* code, int max_weight, int jobs,
                           const char* command_echo, char** out_json) {
    const CodeHandle* h = as_handle(code);
    if (!h || !out_json) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_json = nullptr;
    return guarded([&]() {
        const std::size_t w = max_weight > 0 ? static_cast<std::size_t>(max_weight)
                                             : static_cast<std::size_t>(kDefaultMaxWeight);
        const unsigned j = jobs > 1 ? static_cast<unsigned>(jobs) : 1u;
        const std::string cmd = command_echo ? command_echo : "";
        mjc::ReportResult rep;
        if (h->qubit_level) {
            rep = mjc::four_qubit_report(cmd);
        } else if (h->named) {
            rep = mjc::named_code_report(*h->named, w, j, cmd);
        } else {
            mjc::CodeSpecFile spec{h->modes, h->generators};
            rep = mjc::check_report(spec, w, j, cmd,
                                    mjc::emit_code_spec("", h->modes, h->generators));
        }
        *out_json = dup_string(rep.json);
        if (!*out_json) return fail(MJC_INTERNAL_ERROR, "allocation failed");
        return rep.checks_passed ? MJC_OK : fail(MJC_CHECK_FAILED, "report contains failed checks");
    });
}

mjc_status mjc_code_spec_text(const mjc_code* code, char** out_text) {
    const CodeHandle* h = as_handle(code);
    if (!h || !out_text) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_text = nullptr;
    return guarded([&]() {
        if (h->qubit_level)
            return fail(MJC_INVALID_ARGUMENT, "the four-qubit code is qubit-level; no Majorana spec");
        std::string title;
        if (h->named) {
            title = h->named->name;
            if (!h->named->display.empty()) title += " " + h->named->display;
        }
        *out_text = dup_string(mjc::emit_code_spec(title, h->modes, h->generators));
        return *out_text ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

mjc_status mjc_code_basis_vector(const mjc_code* code, int index, char** out_text) {
    const CodeHandle* h = as_handle(code);
    if (!h || !out_text) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_text = nullptr;
    return guarded([&]() {
        const std::size_t idx = index >= 0 ? static_cast<std::size_t>(index) : std::size_t(-1);
        if (h->qubit_level) {
            const mjc::FourQubitCode fq = mjc::four_qubit_code();
            if (idx >= fq.basis.size()) return fail(MJC_INVALID_ARGUMENT, "basis index out of range");
            *out_text = dup_string(mjc::to_state_text(fq.basis[idx]));
            return *out_text ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
        }
        const std::vector<mjc::FockVector>* basis = nullptr;
        if (h->named && !h->named->basis.empty()) {
            basis = &h->named->basis;
        } else if (h->validation.valid()) {
            basis = &h->validation.code->codespace();
        } else {
            return fail(MJC_INVALID_ARGUMENT, "code is invalid; no codespace");
        }
        if (idx >= basis->size()) return fail(MJC_INVALID_ARGUMENT, "basis index out of range");
        *out_text = dup_string(mjc::to_state_text((*basis)[idx]));
        return *out_text ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

mjc_status mjc_operator_convert(const char* operator_text, const char* target, int modes,
                                char** out_text) {
    if (!operator_text || !target || !out_text) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_text = nullptr;
    return guarded([&]() {
        const std::string t = target;
        std::string result;
        const std::size_t m = modes > 0 ? static_cast<std::size_t>(modes) : 0;
        if (t == "pauli") {
            result = mjc::majorana_to_pauli(mjc::MajoranaOperator::parse(operator_text, m)).str();
        } else if (t == "majorana") {
            const mjc::PauliOperator p = mjc::PauliOperator::parse(operator_text);
            if (m && p.qubits() != m)
                return fail(MJC_INVALID_ARGUMENT, "Pauli string length disagrees with modes");
            result = mjc::pauli_to_majorana(p).str();
        } else {
            return fail(MJC_INVALID_ARGUMENT, "target must be 'pauli' or 'majorana'");
        }
        *out_text = dup_string(result);
        return *out_text ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

mjc_status mjc_convert_report(const char* operator_text, const char* target, int modes,
                              const char* command_echo, char** out_json) {
    if (!operator_text || !target || !out_json) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_json = nullptr;
    return guarded([&]() {
        const mjc::ReportResult rep =
            mjc::convert_report(operator_text, target,
                                modes > 0 ? static_cast<std::size_t>(modes) : 0,
                                command_echo ? command_echo : "");
        *out_json = dup_string(rep.json);
        return *out_json ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

mjc_status mjc_embed_state(const char* amplitude_lines, const char* occupancy_bits,
                           char** out_state_text) {
    if (!amplitude_lines || !occupancy_bits || !out_state_text)
        return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_state_text = nullptr;
    return guarded([&]() {
        const mjc::QubitState psi = parse_amplitude_lines(amplitude_lines);
        const mjc::OccupancyLabel alpha = mjc::occupancy_from_string(occupancy_bits);
        if (alpha.size() != psi.n)
            return fail(MJC_INVALID_ARGUMENT, "occupancy label length " +
                                                  std::to_string(alpha.size()) +
                                                  " != qubit count " + std::to_string(psi.n));
        *out_state_text = dup_string(mjc::to_state_text(mjc::embed_mixed(psi, alpha)));
        return *out_state_text ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

mjc_status mjc_embed_report(const char* amplitude_lines, const char* occupancy_bits,
                            const char* command_echo, char** out_json) {
    if (!amplitude_lines || !occupancy_bits || !out_json)
        return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_json = nullptr;
    return guarded([&]() {
        const mjc::QubitState psi = parse_amplitude_lines(amplitude_lines);
        const mjc::OccupancyLabel alpha = mjc::occupancy_from_string(occupancy_bits);
        if (alpha.size() != psi.n)
            return fail(MJC_INVALID_ARGUMENT, "occupancy label length mismatch");
        const mjc::ReportResult rep =
            mjc::embed_report(psi, alpha, command_echo ? command_echo : "", amplitude_lines);
        *out_json = dup_string(rep.json);
        return *out_json ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

mjc_status mjc_invariants_report(const char* amplitudes_text, int include_decimals,
                                 const char* command_echo, char** out_json) {
    if (!amplitudes_text || !out_json) return fail(MJC_INVALID_ARGUMENT, "null argument");
    *out_json = nullptr;
    return guarded([&]() {
        std::istringstream in(amplitudes_text);
        std::string tok;
        std::vector<mjc::Scalar> vals;
        while (in >> tok) vals.push_back(mjc::Scalar::parse(tok));
        if (vals.size() != 8)
            return fail(MJC_INVALID_ARGUMENT,
                        "expected 8 amplitudes, got " + std::to_string(vals.size()));
        mjc::e8::Amplitudes amps;
        std::copy(vals.begin(), vals.end(), amps.begin());
        const mjc::ReportResult rep =
            mjc::invariants_report(amps, include_decimals != 0, command_echo ? command_echo : "");
        *out_json = dup_string(rep.json);
        return *out_json ? MJC_OK : fail(MJC_INTERNAL_ERROR, "allocation failed");
    });
}

}  // extern "C"
