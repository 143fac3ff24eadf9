#include "gf2.hpp"

#include <algorithm>
#include <bit>

namespace mjc {

BitVec BitVec::from_indices(std::size_t length, std::span<const std::size_t> indices) {
    BitVec v(length);
    for (std::size_t i : indices) v.set(i);
    return v;
}

BitVec BitVec::from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
    return from_indices(length, std::span<const std::size_t>(indices.begin(), indices.size()));
}

bool BitVec::get(std::size_t i) const {
    if (i == 0 || i > len_) throw std::out_of_range("BitVec index " + std::to_string(i));
    return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1;
}

void BitVec::set(std::size_t i, bool v) {
    if (i == 0 || i > len_) throw std::out_of_range("BitVec index " + std::to_string(i));
    const std::uint64_t mask = std::uint64_t(1) << ((i - 1) % 64);
    if (v)
        words_[(i - 1) / 64] |= mask;
    else
        words_[(i - 1) / 64] &= ~mask;
}

void BitVec::flip(std::size_t i) { set(i, !get(i)); }

std::size_t BitVec::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::lowest_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k])) + 1;
    return 0;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
}

BitVec BitVec::operator&(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
    BitVec r(len_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
}

std::size_t BitVec::intersection_count(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
        n += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return n;
}

bool operator<(const BitVec& a, const BitVec& b) {
    // String order on "0101..." renderings: a leading 0 sorts before a leading 1.
    const std::size_t n = std::min(a.len_, b.len_);
    for (std::size_t i = 1; i <= n; ++i) {
        const bool x = a.get(i), y = b.get(i);
        if (x != y) return y;
    }
    return a.len_ < b.len_;
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 1; i <= len_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::string BitVec::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 1; i <= len_; ++i)
        if (get(i)) s[i - 1] = '1';
    return s;
}

int symplectic_form(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("symplectic_form: length mismatch");
    return static_cast<int>((a.count() * b.count() + a.intersection_count(b)) % 2);
}

GF2Matrix::GF2Matrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_[0].size();
        for (const BitVec& r : rows_)
            if (r.size() != cols_) throw std::invalid_argument("GF2Matrix: ragged rows");
    }
}

void GF2Matrix::append_row(BitVec row) {
    if (rows_.empty())
        cols_ = row.size();
    else if (row.size() != cols_)
        throw std::invalid_argument("GF2Matrix: row length mismatch");
    rows_.push_back(std::move(row));
}

std::size_t GF2Matrix::rank() const {
    Echelon e(cols_);
    for (const BitVec& r : rows_) e.add(r);
    return e.rank();
}

BitVec GF2Matrix::column(std::size_t c) const {
    BitVec v(rows_.size());
    for (std::size_t r = 1; r <= rows_.size(); ++r)
        if (get(r, c)) v.set(r);
    return v;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_.size());
    for (std::size_t r = 1; r <= rows_.size(); ++r)
        for (std::size_t c = 1; c <= cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

GF2Matrix matmul(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.col_count() != b.row_count()) throw std::invalid_argument("matmul: shape mismatch");
    GF2Matrix out(a.row_count(), b.col_count());
    for (std::size_t r = 1; r <= a.row_count(); ++r)
        for (std::size_t k = 1; k <= a.col_count(); ++k)
            if (a.get(r, k)) out.row(r) ^= b.row(k);
    return out;
}

BitVec matvec(const GF2Matrix& a, const BitVec& v) {
    if (a.col_count() != v.size()) throw std::invalid_argument("matvec: shape mismatch");
    BitVec out(a.row_count());
    for (std::size_t r = 1; r <= a.row_count(); ++r)
        if (a.row(r).intersection_count(v) % 2) out.set(r);
    return out;
}

Echelon::Echelon(std::size_t cols, std::size_t combo_capacity)
    : cols_(cols), cap_(std::max<std::size_t>(combo_capacity, 1)), last_zero_combo_(cap_) {}

bool Echelon::add(const BitVec& row) {
    if (row.size() != cols_) throw std::invalid_argument("Echelon: row length mismatch");
    if (fed_ >= cap_) {
        // Grow the combination space; existing combos are re-padded.
        cap_ = std::max(cap_ * 2, fed_ + 1);
        auto pad = [&](BitVec& c) {
            BitVec bigger(cap_);
            for (std::size_t i : c.indices()) bigger.set(i);
            c = bigger;
        };
        for (BitVec& c : combos_) pad(c);
        pad(last_zero_combo_);
    }
    BitVec r = row;
    BitVec combo(cap_);
    combo.set(fed_ + 1);
    ++fed_;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (r.get(pivots_[k])) {
            r ^= rows_[k];
            combo ^= combos_[k];
        }
    }
    if (!r.any()) {
        last_zero_combo_ = combo;
        return false;
    }
    const std::size_t pivot = r.lowest_set();
    // Keep reduced echelon form: clear the new pivot column everywhere else.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k].get(pivot)) {
            rows_[k] ^= r;
            combos_[k] ^= combo;
        }
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
    return true;
}

std::pair<BitVec, BitVec> Echelon::reduce(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Echelon: vector length mismatch");
    BitVec r = v;
    BitVec combo(cap_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (r.get(pivots_[k])) {
            r ^= rows_[k];
            combo ^= combos_[k];
        }
    }
    return {std::move(r), std::move(combo)};
}

bool Echelon::contains(const BitVec& v) const { return !reduce(v).first.any(); }

SpanWitness in_span(const BitVec& v, const GF2Matrix& m) {
    if (m.row_count() > 0 && m.col_count() != v.size())
        throw std::invalid_argument("in_span: length mismatch");
    Echelon e(v.size(), m.row_count());
    for (std::size_t r = 1; r <= m.row_count(); ++r) e.add(m.row(r));
    auto [residual, combo] = e.reduce(v);
    SpanWitness w;
    w.in_span = !residual.any();
    if (w.in_span) w.combination = combo.indices();
    return w;
}

std::vector<BitVec> row_dependencies(const GF2Matrix& m) {
    Echelon e(m.col_count() ? m.col_count() : 1, m.row_count());
    std::vector<BitVec> deps;
    for (std::size_t r = 1; r <= m.row_count(); ++r) {
        if (!e.add(m.row(r))) deps.push_back(e.last_zero_combo());
    }
    return deps;
}

std::vector<BitVec> kernel_basis(const GF2Matrix& m) {
    const std::size_t n = m.col_count();
    std::vector<BitVec> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 1; r <= m.row_count(); ++r) {
        BitVec v = m.row(r);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (v.get(pivots[k])) v ^= rows[k];
        if (!v.any()) continue;
        const std::size_t p = v.lowest_set();
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k].get(p)) rows[k] ^= v;
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), p);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    }
    std::vector<BitVec> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 1; c <= n; ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        // Free column c: kernel vector with v_c = 1, pivot entries filled in.
        BitVec v(n);
        v.set(c);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k].get(c)) v.set(pivots[k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

GF2Matrix symplectic_gram(std::size_t modes) {
    const std::size_t n = 2 * modes;
    GF2Matrix j(n, n);
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t c = 1; c <= n; ++c)
            if (r != c) j.set(r, c);
    return j;
}

std::pair<GF2Matrix, GF2Matrix> basis_change_matrices(std::size_t modes) {
    if (modes == 0) throw std::invalid_argument("basis_change_matrices: modes must be >= 1");
    const std::size_t n = 2 * modes;
    GF2Matrix b(n, n);
    for (std::size_t i = 1; i <= modes; ++i) {
        // Column 2I-1 holds f_{2I-1} = e_{2I-1} + e_{2I}.
        b.set(2 * i - 1, 2 * i - 1);
        b.set(2 * i, 2 * i - 1);
        // Column 2I holds f_{2I} = e_1 + ... + e_{2I-1}.
        for (std::size_t k = 1; k <= 2 * i - 1; ++k) b.set(k, 2 * i);
    }
    // Invert B by eliminating [B | I]; B is square and invertible by construction.
    std::vector<BitVec> work;
    work.reserve(n);
    for (std::size_t r = 1; r <= n; ++r) {
        BitVec v(2 * n);
        for (std::size_t c = 1; c <= n; ++c)
            if (b.get(r, c)) v.set(c);
        v.set(n + r);
        work.push_back(std::move(v));
    }
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col - 1; r < n; ++r)
            if (work[r].get(col)) {
                pivot = r;
                break;
            }
        if (pivot == n) throw std::logic_error("basis_change_matrices: B is singular");
        std::swap(work[col - 1], work[pivot]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != col - 1 && work[r].get(col)) work[r] ^= work[col - 1];
    }
    GF2Matrix a(n, n);
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t c = 1; c <= n; ++c)
            if (work[r - 1].get(n + c)) a.set(r, c);
    return {a, b};
}

}  // namespace mjc
