#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mjc {

using json = nlohmann::ordered_json;

namespace {

std::string digest(std::string_view text) { return "fnv1a:" + hex64(fnv1a64(text)); }

json distance_json(const DistanceResult& d, std::size_t max_weight) {
    json out;
    switch (d.kind) {
        case DistanceResult::Kind::Exact: {
            out["exact"] = true;
            out["value"] = d.value;
            out["display"] = std::to_string(d.value);
            std::string w = "+1";
            for (std::size_t mu : d.witness) w += " c" + std::to_string(mu);
            out["witness"] = w;
            break;
        }
        case DistanceResult::Kind::GreaterThan:
            out["exact"] = false;
            out["value"] = nullptr;
            out["display"] = ">" + std::to_string(max_weight);
            out["witness"] = nullptr;
            break;
        default:
            out["exact"] = true;
            out["value"] = nullptr;
            out["display"] = "none (k = 0)";
            out["witness"] = nullptr;
            break;
    }
    out["max_weight"] = max_weight;
    return out;
}

json violations_json(const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const Violation& v : vs) arr.push_back({{"kind", v.kind}, {"detail", v.detail}});
    return arr;
}

json syndrome_table_json(const StabilizerCode& code) {
    json arr = json::array();
    for (std::size_t mu = 1; mu <= code.majorana_modes(); ++mu)
        arr.push_back(code.syndrome(MajoranaOperator::single(code.modes(), mu)).str());
    return arr;
}

json state_lines(const FockVector& v) {
    json arr = json::array();
    std::istringstream in(to_state_text(v));
    std::string line;
    while (std::getline(in, line)) arr.push_back(line);
    return arr;
}

}  // namespace

CodeSpecFile parse_code_spec(std::string_view text) {
    CodeSpecFile spec;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_modes = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
            sv.remove_prefix(1);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
            sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        if (!have_modes) {
            if (sv.substr(0, 6) != "modes:")
                throw ParseError("expected header 'modes: M'", lineno);
            try {
                spec.modes = std::stoul(std::string(sv.substr(6)));
            } catch (const std::exception&) {
                throw ParseError("malformed mode count", lineno);
            }
            if (spec.modes == 0 || spec.modes > kMaxModes)
                throw ParseError("mode count must be in 1..62", lineno);
            have_modes = true;
            continue;
        }
        try {
            // Pauli syntax iff the last token is made of letters.
            const std::size_t last_space = sv.find_last_of(" \t");
            const std::string_view tail =
                last_space == std::string_view::npos ? sv : sv.substr(last_space + 1);
            const bool pauli = tail.find_first_not_of("IXYZ") == std::string_view::npos;
            if (pauli) {
                PauliOperator p = PauliOperator::parse(sv);
                if (p.qubits() != spec.modes)
                    throw ParseError("Pauli string has " + std::to_string(p.qubits()) +
                                     " letters, expected " + std::to_string(spec.modes));
                spec.generators.push_back(pauli_to_majorana(p));
            } else {
                spec.generators.push_back(MajoranaOperator::parse(sv, spec.modes));
            }
        } catch (const ParseError& e) {
            throw ParseError(e.line() ? e.what() : std::string(e.what()), lineno);
        }
    }
    if (!have_modes) throw ParseError("missing 'modes: M' header", lineno ? lineno : 1);
    return spec;
}

std::string emit_code_spec(std::string_view title, std::size_t modes,
                           const std::vector<MajoranaOperator>& generators) {
    std::ostringstream out;
    if (!title.empty()) out << "# " << title << "\n";
    out << "modes: " << modes << "\n";
    for (const MajoranaOperator& g : generators) out << g.str() << "\n";
    return out.str();
}

namespace {

json base_report(std::string_view command, std::string_view input_text) {
    json rep;
    rep["command"] = std::string(command);
    rep["input_digest"] = digest(input_text);
    return rep;
}

// Shared body for generators + validity + parameters.
void fill_code_body(json& rep, const ValidationResult& val,
                    const std::vector<MajoranaOperator>& gens, std::size_t max_weight,
                    unsigned jobs, bool& passed) {
    rep["majorana_modes"] = 2 * val.modes;
    rep["num_generators"] = gens.size();
    rep["valid"] = val.valid();
    if (!val.valid()) passed = false;
    json gen_arr = json::array();
    json gen_pauli = json::array();
    for (const MajoranaOperator& g : gens) {
        gen_arr.push_back(g.str());
        gen_pauli.push_back(majorana_to_pauli(g).str());
    }
    rep["generators"] = gen_arr;
    rep["generators_pauli"] = gen_pauli;
    if (val.valid()) {
        const StabilizerCode& code = *val.code;
        rep["k"] = code.logical_qubits();
        rep["distance"] = distance_json(code.distance(max_weight, jobs), max_weight);
        rep["syndrome_table"] = syndrome_table_json(code);
    } else {
        rep["k"] = nullptr;
        rep["distance"] = nullptr;
        rep["syndrome_table"] = nullptr;
    }
    rep["violations"] = violations_json(val.violations);
}

}  // namespace

ReportResult check_report(const CodeSpecFile& spec, std::size_t max_weight, unsigned jobs,
                          std::string_view command, std::string_view input_text) {
    ReportResult res;
    json rep = base_report(command, input_text);
    ValidationResult val = validate(spec.modes, spec.generators);
    fill_code_body(rep, val, spec.generators, max_weight, jobs, res.checks_passed);
    res.json = rep.dump(2) + "\n";
    return res;
}

ReportResult named_code_report(const NamedCode& nc, std::size_t max_weight, unsigned jobs,
                               std::string_view command) {
    ReportResult res;
    json rep = base_report(command, nc.name + "/" + nc.display);
    rep["code"] = nc.name;
    if (!nc.display.empty()) rep["parameters_display"] = nc.display;
    ValidationResult val = validate(nc.code.modes(), nc.code.generators());
    fill_code_body(rep, val, nc.code.generators(), max_weight, jobs, res.checks_passed);

    if (!nc.basis.empty() && val.valid()) {
        const StabilizerCode& code = *val.code;
        json basis = json::array();
        bool stabilized = true;
        for (std::size_t i = 0; i < nc.basis.size(); ++i) {
            json b;
            b["label"] = i < nc.basis_labels.size() ? nc.basis_labels[i] : std::to_string(i);
            b["state"] = state_lines(nc.basis[i]);
            basis.push_back(b);
            for (const MajoranaOperator& g : code.generators())
                if (apply_majorana(g, nc.basis[i]) != nc.basis[i]) stabilized = false;
        }
        rep["basis"] = basis;
        rep["basis_stabilized"] = stabilized;
        if (!stabilized) res.checks_passed = false;
        const bool span_ok = same_span(code.codespace(), nc.basis);
        rep["projector_span_matches_basis"] = span_ok;
        if (!span_ok) res.checks_passed = false;

        if (!nc.logicals.empty()) {
            json dict = json::array();
            for (const LogicalEntry& e : nc.logicals) {
                const LogicalCheck chk = code.verify_logical(e.op, e.expected, nc.basis);
                json j;
                j["label"] = e.label;
                j["operator"] = e.op.str();
                j["pauli"] = majorana_to_pauli(e.op).str();
                j["commutes_with_stabilizer"] = chk.commutes;
                j["outside_stabilizer_span"] = chk.outside_span;
                j["action_matches"] = chk.action_matches;
                if (!chk.deviations.empty()) j["deviations"] = chk.deviations;
                if (!chk.ok()) res.checks_passed = false;
                dict.push_back(j);
            }
            rep["logical_dictionary"] = dict;
        }
    }

    if (nc.name == "hastings" || nc.name == "glued") {
        if (val.valid()) {
            // Single-mode errors against the binary pattern: bit j of (mu-1)
            // must equal the syndrome bit of matrix generator j.
            const StabilizerCode& code = *val.code;
            const std::size_t l = code.generators().size() - 1;
            bool match = true;
            std::vector<std::string> seen;
            for (std::size_t mu = 1; mu <= code.majorana_modes(); ++mu) {
                const Syndrome s = code.syndrome(MajoranaOperator::single(code.modes(), mu));
                std::string head;
                for (std::size_t j = 1; j <= l; ++j) head += s.bits.get(j) ? '1' : '0';
                for (std::size_t j = 1; j <= l; ++j)
                    if (((mu - 1) >> (j - 1) & 1) != (head[j - 1] == '1')) match = false;
                seen.push_back(head);
            }
            std::sort(seen.begin(), seen.end());
            const bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
            rep["syndrome_matches_mu_minus_1"] = match;
            rep["single_mode_syndromes_distinct"] = distinct;
            if (!match || !distinct) res.checks_passed = false;
        }
    }

    if (nc.name == "glued" && !nc.basis.empty()) {
        const e8::CartanCheck cc = e8::cartan_commutativity_check(nc.basis);
        json j;
        j["ok"] = cc.ok;
        j["checked_elements"] = cc.checked;
        j["nonzero"] = cc.nonzero;
        rep["cartan_commutativity"] = j;
        if (!cc.ok) res.checks_passed = false;
    }

    if (!nc.recorded_signs.empty()) {
        json signs = json::object();
        for (const auto& [k, v] : nc.recorded_signs) signs[k] = v;
        rep["recorded_signs"] = signs;
    }

    res.json = rep.dump(2) + "\n";
    return res;
}

ReportResult four_qubit_report(std::string_view command) {
    ReportResult res;
    json rep = base_report(command, "four-qubit");
    rep["code"] = "four-qubit";
    rep["parameters_display"] = "[[4,2,2]]";
    rep["kind"] = "qubit";
    const FourQubitCode code = four_qubit_code();
    json stab = json::array();
    for (const PauliOperator& p : code.stabilizers) stab.push_back(p.str());
    rep["stabilizers"] = stab;
    json basis = json::array();
    static const char* kLabels[4] = {"00", "01", "10", "11"};
    bool stabilized = true;
    for (std::size_t i = 0; i < code.basis.size(); ++i) {
        json b;
        b["label"] = kLabels[i];
        b["state"] = state_lines(code.basis[i]);
        basis.push_back(b);
        for (const PauliOperator& p : code.stabilizers)
            if (apply_pauli(p, code.basis[i]) != code.basis[i]) stabilized = false;
    }
    rep["basis"] = basis;
    rep["basis_stabilized"] = stabilized;
    if (!stabilized) res.checks_passed = false;

    json logicals = json::array();
    for (const auto& [label, op] : code.logicals) {
        json j;
        j["label"] = label;
        j["operator"] = op.str();
        // Encoded action: X-type flips the matching label bit, Z-type signs it.
        bool action_ok = true;
        for (std::size_t a = 0; a < 4; ++a) {
            std::size_t target = a;
            Scalar scalar = Scalar::one();
            for (std::size_t q = 0; q < 2; ++q) {
                const char c = label[q];
                const std::size_t mask = q == 0 ? 2 : 1;
                if (c == 'X')
                    target ^= mask;
                else if (c == 'Z' && (a & mask))
                    scalar = -scalar;
            }
            if (apply_pauli(op, code.basis[a]) != scalar * code.basis[target]) action_ok = false;
        }
        j["action_matches"] = action_ok;
        if (!action_ok) res.checks_passed = false;
        logicals.push_back(j);
    }
    rep["logical_dictionary"] = logicals;

    const MerminReport mer = mermin_square_check();
    json m;
    m["grid_labels"] = mer.grid_labels;
    json grid = json::array();
    for (const auto& row : mer.grid) {
        json r = json::array();
        for (const PauliOperator& p : row) r.push_back(p.str());
        grid.push_back(r);
    }
    m["grid"] = grid;
    m["all_weight_two"] = mer.all_weight_two;
    m["rows_commute"] = mer.rows_commute;
    m["columns_commute"] = mer.columns_commute;
    json rp = json::array(), cp = json::array();
    for (const PauliOperator& p : mer.row_products) rp.push_back(p.str());
    for (const PauliOperator& p : mer.column_products) cp.push_back(p.str());
    m["row_products"] = rp;
    m["column_products"] = cp;
    m["row_products_fix_codespace"] = mer.row_products_fix_codespace;
    m["column_products_minus_identity"] = mer.column_products_minus_identity;
    if (!mer.failures.empty()) m["failures"] = mer.failures;
    rep["mermin_square"] = m;
    if (!mer.ok()) res.checks_passed = false;

    res.json = rep.dump(2) + "\n";
    return res;
}

ReportResult invariants_report(const e8::Amplitudes& amps, bool decimals,
                               std::string_view command) {
    ReportResult res;
    std::string input;
    for (const Scalar& a : amps) input += a.str() + " ";
    json rep = base_report(command, input);
    json in_arr = json::array();
    for (const Scalar& a : amps) in_arr.push_back(a.str());
    rep["amplitudes"] = in_arr;
    const std::array<Scalar, 8> vals = e8::evaluate_invariants(amps);
    json inv = json::object();
    for (std::size_t k = 0; k < 8; ++k)
        inv["pi_" + std::to_string(e8::kInvariantDegrees[k])] = vals[k].str();
    rep["invariants"] = inv;
    if (decimals) {
        json dec = json::object();
        for (std::size_t k = 0; k < 8; ++k) {
            const Scalar& v = vals[k];
            std::string s = decimal_str(v.re, 12);
            if (v.im != 0) s += " + " + decimal_str(v.im, 12) + "*i";
            dec["pi_" + std::to_string(e8::kInvariantDegrees[k])] = s;
        }
        rep["decimals"] = dec;
    }
    res.json = rep.dump(2) + "\n";
    return res;
}

ReportResult convert_report(std::string_view operator_text, std::string_view target,
                            std::size_t modes, std::string_view command) {
    ReportResult res;
    json rep = base_report(command, operator_text);
    rep["input"] = std::string(operator_text);
    rep["target"] = std::string(target);
    std::string result;
    if (target == "pauli") {
        const MajoranaOperator op = MajoranaOperator::parse(operator_text, modes);
        result = majorana_to_pauli(op).str();
    } else if (target == "majorana") {
        const PauliOperator op = PauliOperator::parse(operator_text);
        if (modes && op.qubits() != modes)
            throw ParseError("Pauli string length disagrees with --modes");
        result = pauli_to_majorana(op).str();
    } else {
        throw std::invalid_argument("convert target must be 'pauli' or 'majorana'");
    }
    rep["result"] = result;
    res.json = rep.dump(2) + "\n";
    return res;
}

ReportResult embed_report(const QubitState& psi, const OccupancyLabel& alpha,
                          std::string_view command, std::string_view input_text) {
    ReportResult res;
    json rep = base_report(command, input_text);
    rep["qubits"] = psi.n;
    rep["occupancy"] = occupancy_str(alpha);
    std::size_t parity = 0;
    for (int b : alpha) parity += static_cast<std::size_t>(b);
    rep["occupancy_parity"] = parity % 2 ? "odd" : "even";
    const FockVector state = embed_mixed(psi, alpha);
    rep["modes"] = state.modes();
    rep["terms"] = state.term_count();
    rep["chirality_sector"] = chirality_sector_name(chirality_sector(state));
    rep["state"] = state_lines(state);
    res.json = rep.dump(2) + "\n";
    return res;
}

}  // namespace mjc
