#pragma once

#include <string>
#include <string_view>

#include "codes.hpp"
#include "e8.hpp"

namespace mjc {

// Code-spec file: header line "modes: M", then one generator per line in
// either Majorana ("+1 c1 c2 c3 c4") or Pauli ("-1 ZZIIIIII") syntax.
// Blank lines and '#' comments are allowed. Parse errors carry line numbers.
struct CodeSpecFile {
    std::size_t modes = 0;
    std::vector<MajoranaOperator> generators;
};

CodeSpecFile parse_code_spec(std::string_view text);
std::string emit_code_spec(std::string_view title, std::size_t modes,
                           const std::vector<MajoranaOperator>& generators);

struct ReportResult {
    std::string json;
    bool checks_passed = true;
};

// Verification report for a user-supplied generator set.
ReportResult check_report(const CodeSpecFile& spec, std::size_t max_weight, unsigned jobs,
                          std::string_view command, std::string_view input_text);

// Full verification report for a named construction.
ReportResult named_code_report(const NamedCode& nc, std::size_t max_weight, unsigned jobs,
                               std::string_view command);

// The qubit-level four-qubit code with its observable-square check.
ReportResult four_qubit_report(std::string_view command);

ReportResult invariants_report(const e8::Amplitudes& amps, bool decimals,
                               std::string_view command);

ReportResult convert_report(std::string_view operator_text, std::string_view target,
                            std::size_t modes, std::string_view command);

ReportResult embed_report(const QubitState& psi, const OccupancyLabel& alpha,
                          std::string_view command, std::string_view input_text);

}  // namespace mjc
