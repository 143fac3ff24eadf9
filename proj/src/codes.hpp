#pragma once

#include <array>

#include "embed.hpp"
#include "stab.hpp"

namespace mjc {

// ---------------------------------------------------------------------------
// The four-qubit [[4,2,2]] code at the qubit level (no fermionic embedding).
// Basis kets live in the 4-qubit space under the occupation<->bitstring
// identification, so FockVector doubles as the qubit-state container.
// ---------------------------------------------------------------------------

struct FourQubitCode {
    std::vector<PauliOperator> stabilizers;  // XXXX, ZZZZ
    std::vector<FockVector> basis;           // encoded |00>, |01>, |10>, |11>
    // Representatives of the encoded two-qubit Paulis: "IX" -> XIXI etc.
    std::vector<std::pair<std::string, PauliOperator>> logicals;
};

FourQubitCode four_qubit_code();
QubitState four_qubit_basis_qubit_state(std::size_t alpha);  // alpha = 0..3

// a|00> + b|01> + c|10> + d|11> in the encoded basis.
FockVector four_qubit_state(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

// The 3x3 grid of two-qubit Pauli observables realized by weight-two
// four-qubit representatives acting on the code subspace. Every row and
// column is mutually commuting; row products act as +1 on the code subspace
// while each column product is exactly minus the identity operator.
struct MerminReport {
    std::vector<std::vector<std::string>> grid_labels;        // encoded two-qubit labels
    std::vector<std::vector<PauliOperator>> grid;             // representatives
    bool all_weight_two = false;
    bool rows_commute = false;
    bool columns_commute = false;
    std::vector<PauliOperator> row_products;
    std::vector<PauliOperator> column_products;
    bool row_products_fix_codespace = false;
    bool column_products_minus_identity = false;
    std::vector<std::string> failures;
    bool ok() const {
        return all_weight_two && rows_commute && columns_commute && row_products_fix_codespace &&
               column_products_minus_identity;
    }
};

MerminReport mermin_square_check();

// ---------------------------------------------------------------------------
// Named Majorana codes.
// ---------------------------------------------------------------------------

enum class Occupancy { Single, Double };

struct LogicalEntry {
    std::string label;  // e.g. "XII"
    MajoranaOperator op;
    SignedPermutation expected;  // action on the canonical basis below
};

struct NamedCode {
    std::string name;
    std::string display;  // e.g. "[16,3,4]"
    StabilizerCode code;
    std::vector<FockVector> basis;         // construction-route basis (may be empty)
    std::vector<std::string> basis_labels;
    std::vector<LogicalEntry> logicals;
    std::vector<std::pair<std::string, std::string>> recorded_signs;
};

// Pair stabilizers g_1..g_n on 4n Majorana modes; the n-qubit single
// occupancy subspace is the joint +1 eigenspace.
NamedCode single_occupancy_code(std::size_t n);

// The four-qubit code embedded into 16 Majorana modes: generators g_1..g_4
// plus the embedded XXXX and ZZZZ. The single-occupancy variant carries the
// two-term basis vectors E_0..E_3; the double-occupancy variant carries their
// intertwiner images.
NamedCode embedded_four_qubit_code(Occupancy occ);

// Generators of the 2^l-mode family: G_j has support where bit j of (mu-1)
// is set (row 1 = least significant bit), plus the chirality operator.
std::vector<MajoranaOperator> hastings_generators(std::size_t l);

// l = 4 gives the [16,3,4] code with the glued three-qubit basis and logical
// dictionary; other l >= 3 build the generators and leave parameters to be
// computed, claiming nothing.
NamedCode hastings_code(std::size_t l);

// Glue a single-occupancy block and a double-occupancy block into one vector
// of the three-qubit code subspace (n = 4 context).
FockVector glue(const std::array<Scalar, 4>& single_block,
                const std::array<Scalar, 4>& double_block);

// The [16,3,4] code presented through the glueing construction: basis
// {E_a, Omega E_a} with three-qubit labels (first bit = occupancy block).
NamedCode glued_code();

}  // namespace mjc
