#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "common.hpp"

namespace mjc {

// Fixed-length GF(2) vector, packed into 64-bit words. The public index
// origin is 1 throughout: Majorana mode coordinates run 1..2M.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}
    static BitVec from_indices(std::size_t length, std::span<const std::size_t> indices);
    static BitVec from_indices(std::size_t length, std::initializer_list<std::size_t> indices);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;          // 1-based
    void set(std::size_t i, bool v = true);  // 1-based
    void flip(std::size_t i);
    std::size_t count() const;  // Hamming weight
    bool any() const;
    std::size_t lowest_set() const;  // 1-based first set index; 0 if none

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    BitVec operator&(const BitVec& o) const;
    std::size_t intersection_count(const BitVec& o) const;

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }
    // Lexicographic on index order (index 1 most significant).
    friend bool operator<(const BitVec& a, const BitVec& b);

    std::vector<std::size_t> indices() const;  // ascending, 1-based
    std::string str() const;                   // e.g. "0101"

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// <A,B> = |A||B| + |A∩B| mod 2 on supports. Value 0 means the corresponding
// Majorana operators commute, 1 means they anticommute.
int symplectic_form(const BitVec& a, const BitVec& b);

class GF2Matrix {
  public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
    explicit GF2Matrix(std::vector<BitVec> rows);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }
    const BitVec& row(std::size_t r) const { return rows_.at(r - 1); }  // 1-based
    BitVec& row(std::size_t r) { return rows_.at(r - 1); }
    bool get(std::size_t r, std::size_t c) const { return rows_.at(r - 1).get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_.at(r - 1).set(c, v); }
    void append_row(BitVec row);

    std::size_t rank() const;
    BitVec column(std::size_t c) const;
    GF2Matrix transposed() const;
    friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

GF2Matrix matmul(const GF2Matrix& a, const GF2Matrix& b);
BitVec matvec(const GF2Matrix& a, const BitVec& v);

// Incremental row-echelon accumulator with fixed leftmost-pivot order.
// Tracks, for every stored row, its expression as a combination of the
// rows fed to add(); reductions and witnesses are therefore deterministic.
class Echelon {
  public:
    explicit Echelon(std::size_t cols, std::size_t combo_capacity = 0);

    // Returns true if the row increased the rank. Either way the row counts
    // toward combination indices.
    bool add(const BitVec& row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t rows_fed() const { return fed_; }
    // Valid immediately after add() returned false: the dependency showing
    // how the rejected row combines from earlier rows (including itself).
    const BitVec& last_zero_combo() const { return last_zero_combo_; }

    // Reduces v against the stored rows. Returns {residual, combination};
    // residual empty (all zero) iff v is in the span, in which case the
    // combination (over fed rows, 1-based) reproduces v.
    std::pair<BitVec, BitVec> reduce(const BitVec& v) const;
    bool contains(const BitVec& v) const;

  private:
    std::size_t cols_;
    std::size_t cap_;
    std::size_t fed_ = 0;
    std::vector<std::size_t> pivots_;  // pivot column of each stored row
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;
    BitVec last_zero_combo_;
};

struct SpanWitness {
    bool in_span = false;
    // 1-based indices of the rows of m whose sum is v (valid iff in_span).
    std::vector<std::size_t> combination;
};

SpanWitness in_span(const BitVec& v, const GF2Matrix& m);

// Dependencies among the rows of m: a basis (over GF(2)) of all combination
// vectors lambda with sum_j lambda_j * row_j = 0.
std::vector<BitVec> row_dependencies(const GF2Matrix& m);

// Basis of {v : m v = 0}, deterministic (free columns in ascending order).
std::vector<BitVec> kernel_basis(const GF2Matrix& m);

// The symplectic Gram matrix J with J_{uv} = 1 - delta_{uv} on 2M coords.
GF2Matrix symplectic_gram(std::size_t modes);

// Basis-change pair (A, B) between the Majorana coordinates e_u and the
// symplectic basis f (f_{2I-1} = e_{2I-1}+e_{2I}, f_{2I} = sum_{K<=2I-1} e_K),
// with A B = identity. Column u of A encodes the Jordan-Wigner Pauli string
// of c_u in (z, x) coordinate pairs.
std::pair<GF2Matrix, GF2Matrix> basis_change_matrices(std::size_t modes);

}  // namespace mjc
