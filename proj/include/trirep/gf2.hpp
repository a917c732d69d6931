#pragma once

// Dense bit-packed linear algebra over GF(2).

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trirep/error.hpp"

namespace trirep {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + word_bits - 1) / word_bits, 0) {}

  /// Parses a string of '0'/'1' characters, most significant coordinate first.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        fail(Errc::format, "bit string contains '" + std::string(1, bits[i]) + "'");
      }
    }
    return v;
  }

  static BitVector unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
  }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::span<const word_type> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  BitVector& operator^=(const BitVector& other) {
    require(other.length_ == length_, Errc::contract, "xor of bit vectors with different lengths");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  std::size_t popcount() const noexcept {
    std::size_t total = 0;
    for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    for (word_type w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// Support inclusion: every coordinate set here is also set in `other`.
  bool is_subset_of(const BitVector& other) const {
    require(other.length_ == length_, Errc::contract, "support comparison of different lengths");
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  /// Parity of the coordinatewise AND.
  bool dot(const BitVector& other) const {
    require(other.length_ == length_, Errc::contract, "dot product of different lengths");
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
  }

  std::optional<std::size_t> first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols) {
    BitMatrix m(0, cols);
    for (const auto& r : rows) m.push_row(r);
    return m;
  }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }

  const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  BitVector& row(std::size_t r) noexcept { return rows_[r]; }
  std::span<const BitVector> row_span() const noexcept { return rows_; }

  void push_row(BitVector r) {
    require(r.size() == cols_, Errc::contract, "row length does not match matrix width");
    rows_.push_back(std::move(r));
  }

  BitVector column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
    return v;
  }

  /// M·v over GF(2).
  BitVector multiply(const BitVector& v) const {
    require(v.size() == cols_, Errc::contract, "matrix-vector product with mismatched length");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(v));
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RowReduction {
  BitMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot for each column is the lowest-index
/// unresolved row carrying a 1 there, so results are reproducible.
inline RowReduction row_reduce(BitMatrix m) {
  RowReduction out;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) std::swap(m.row(pivot), m.row(next_row));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next_row && m.get(r, c)) m.row(r) ^= m.row(next_row);
    }
    out.pivots.push_back(c);
    ++next_row;
  }
  out.rank = next_row;
  out.rref = std::move(m);
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return row_reduce(m).rank; }

/// Null-space basis, one vector per free column in ascending column order.
inline std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  const RowReduction red = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  basis.reserve(m.cols() - red.rank);
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t r = 0; r < red.rank; ++r) {
      if (red.rref.get(r, free)) v.set(red.pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incremental span over GF(2) that remembers how each reduced row was built
/// from the original generators, so membership queries also return coordinates.
class SpanCoordinates {
 public:
  SpanCoordinates(std::span<const BitVector> basis, std::size_t length) : length_(length), count_(basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      require(basis[i].size() == length_, Errc::contract, "basis vectors have different lengths");
      BitVector v = basis[i];
      BitVector combo = BitVector::unit(count_, i);
      reduce(v, combo);
      const auto lead = v.first_set();
      require(lead.has_value(), Errc::contract, "basis vectors are linearly dependent");
      rows_.push_back({*lead, std::move(v), std::move(combo)});
    }
  }

  std::size_t dimension() const noexcept { return count_; }

  std::optional<BitVector> coordinates(const BitVector& target) const {
    require(target.size() == length_, Errc::contract, "vector length does not match the basis");
    BitVector v = target;
    BitVector combo(count_);
    reduce(v, combo);
    if (v.any()) return std::nullopt;
    return combo;
  }

 private:
  struct Row {
    std::size_t lead;
    BitVector vec;
    BitVector combo;
  };

  void reduce(BitVector& v, BitVector& combo) const {
    for (const Row& r : rows_) {
      if (v.test(r.lead)) {
        v ^= r.vec;
        combo ^= r.combo;
      }
    }
  }

  std::size_t length_;
  std::size_t count_;
  std::vector<Row> rows_;
};

/// Coefficients c with XOR_i c_i·basis_i == v, or nullopt when v is outside the span.
inline std::optional<BitVector> coordinates_in_span(std::span<const BitVector> basis, const BitVector& v) {
  return SpanCoordinates(basis, v.size()).coordinates(v);
}

}  // namespace trirep
