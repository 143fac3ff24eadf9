#pragma once

#include <vector>

#include "fock.hpp"

namespace mjc {

// Dense n-qubit state; amps[b] is the amplitude of the computational basis
// string whose bits read b MSB-first (amps[0] = psi_{00..0}).
struct QubitState {
    std::size_t n = 0;
    std::vector<Scalar> amps;

    QubitState() = default;
    explicit QubitState(std::size_t qubits) : n(qubits), amps(std::size_t(1) << qubits) {}
    static QubitState basis(std::size_t qubits, std::size_t index);
    Scalar& amp(std::size_t index) { return amps.at(index); }
    const Scalar& amp(std::size_t index) const { return amps.at(index); }
};

// Occupancy label alpha (one bit per embedded qubit): 00..0 is the single
// occupancy subspace, 11..1 the double occupancy one.
using OccupancyLabel = std::vector<int>;

OccupancyLabel occupancy_from_string(std::string_view bits);
std::string occupancy_str(const OccupancyLabel& alpha);

// Single occupancy: qubit bit 1 occupies mode 2j-1 ("10" on the pair), bit 0
// occupies mode 2j ("01"). Creation operators act in ascending mode order, so
// every embedded basis string carries amplitude +1.
FockVector embed_single(const QubitState& psi);

// Double occupancy: qubit bit 0 fills the pair ("11"), bit 1 leaves it empty.
FockVector embed_double(const QubitState& psi);

// The intertwiner c_1 c_5 ... c_{4n-3} carrying the single occupancy
// subspace onto the double occupancy one.
MajoranaOperator intertwiner(std::size_t n);

// Partial intertwiner for a mixed occupancy label: product of c_{4j-3} over
// the set bits of alpha.
MajoranaOperator mixed_intertwiner(const OccupancyLabel& alpha);

// The uniform sign picked up when the intertwiner transports an embedded
// single-occupancy basis ket to the matching double-occupancy ket:
// Omega |b-single> = sign * |b-double> for every b. Equals (-1)^{n(n-1)/2}.
int intertwiner_transport_sign(std::size_t n);

// Embeds psi and then applies the partial intertwiner of alpha.
FockVector embed_mixed(const QubitState& psi, const OccupancyLabel& alpha);

// The 2^n signed basis kets of K^(alpha), indexed by qubit string.
std::vector<FockVector> mixed_subspace_basis(const OccupancyLabel& alpha);

enum class PauliFamily { SingleOcc, DoubleOcc, Shared };
enum class PauliAxis { X, Y, Z };

// Weight-two embedded Pauli representatives on Majorana cluster j:
//   single occupancy:  x: +i c_{4j-3} c_{4j}   y: +i c_{4j-2} c_{4j}   z: +i c_{4j-1} c_{4j}
//   double occupancy:  conjugates of the above by c_{4j-3}
//   shared:            x: -i c_{4j-2} c_{4j-1} y: +i c_{4j-2} c_{4j}   z: +i c_{4j-1} c_{4j}
// The shared family acts as the same Pauli matrix on both embeddings.
MajoranaOperator embedded_pauli(PauliFamily family, PauliAxis axis, std::size_t j, std::size_t n);

// Pair stabilizers g_j = c_{4j-3} c_{4j-2} c_{4j-1} c_{4j}.
MajoranaOperator pair_stabilizer(std::size_t j, std::size_t n);

}  // namespace mjc
