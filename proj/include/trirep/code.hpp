#pragma once

// Binary linear codes given by an explicit (basis-dependent) generator list.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trirep/enumerator.hpp"
#include "trirep/error.hpp"
#include "trirep/gf2.hpp"

namespace trirep {

/// Exhaustive routines refuse codes of larger dimension.
inline constexpr std::size_t kMaxEnumerationDim = 20;

class BinaryCode {
 public:
  BinaryCode() = default;

  /// The basis is kept exactly as given; it must be linearly independent.
  BinaryCode(std::size_t length, std::vector<BitVector> basis) : length_(length), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
      require(b.size() == length_, Errc::contract,
              "basis vector of length " + std::to_string(b.size()) + " in a code of length " + std::to_string(length_));
    }
    require(rank(BitMatrix::from_rows(basis_, length_)) == basis_.size(), Errc::contract,
            "basis vectors are linearly dependent");
  }

  static BinaryCode zero(std::size_t length) { return BinaryCode(length, {}); }

  static BinaryCode from_strings(const std::vector<std::string>& rows) {
    require(!rows.empty(), Errc::contract, "from_strings needs at least one row; use zero(n)");
    std::vector<BitVector> basis;
    for (const auto& r : rows) basis.push_back(BitVector::from_string(r));
    return BinaryCode(rows.front().size(), std::move(basis));
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }

  std::optional<BitVector> coordinates(const BitVector& c) const {
    require(c.size() == length_, Errc::contract, "word length does not match the code");
    return coordinates_in_span(basis_, c);
  }

  bool contains(const BitVector& c) const { return coordinates(c).has_value(); }

  /// All 2^d codewords; word k is the XOR of the basis vectors selected by the bits of k.
  std::vector<BitVector> enumerate_codewords(std::size_t max_dim = kMaxEnumerationDim) const {
    require(dimension() <= max_dim, Errc::size_guard,
            "code dimension " + std::to_string(dimension()) + " exceeds enumeration guard " + std::to_string(max_dim));
    const std::size_t count = std::size_t{1} << dimension();
    std::vector<BitVector> words(count, BitVector(length_));
    for (std::size_t k = 1; k < count; ++k) {
      words[k] = words[k & (k - 1)] ^ basis_[static_cast<std::size_t>(std::countr_zero(k))];
    }
    return words;
  }

  WeightEnumerator weight_enumerator(std::size_t max_dim = kMaxEnumerationDim) const {
    WeightEnumerator w;
    for (const auto& c : enumerate_codewords(max_dim)) w.add_term(c.popcount());
    return w;
  }

  /// Number of basis vectors in the unique expansion of c.
  std::size_t degree(const BitVector& c) const {
    const auto coeffs = coordinates(c);
    require(coeffs.has_value(), Errc::membership, "word " + c.to_string() + " is not a codeword");
    return coeffs->popcount();
  }

  /// No other nonzero codeword has support strictly inside supp(c).
  /// The zero word is reported minimal (vacuously); minimality is only
  /// meaningful for nonzero words.
  bool is_minimal(const BitVector& c, std::size_t max_dim = kMaxEnumerationDim) const {
    require(contains(c), Errc::membership, "word " + c.to_string() + " is not a codeword");
    if (c.none()) return true;
    for (const auto& other : enumerate_codewords(max_dim)) {
      if (other.any() && other != c && other.is_subset_of(c)) return false;
    }
    return true;
  }

  /// Deletes the coordinates in `removed` (0-based). The punctured basis
  /// vectors are kept when they stay independent; otherwise the new basis is
  /// the nonzero part of the RREF of the images.
  BinaryCode puncture(const std::set<std::size_t>& removed) const {
    for (std::size_t s : removed) {
      require(s < length_, Errc::contract, "puncture index " + std::to_string(s) + " out of range");
    }
    const std::size_t new_length = length_ - removed.size();
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < length_; ++j) {
      if (!removed.contains(j)) keep.push_back(j);
    }
    BitMatrix images(0, new_length);
    for (const auto& b : basis_) {
      BitVector v(new_length);
      for (std::size_t k = 0; k < keep.size(); ++k) v.set(k, b.test(keep[k]));
      images.push_row(std::move(v));
    }
    if (rank(images) == images.rows()) {
      std::vector<BitVector> kept;
      for (std::size_t r = 0; r < images.rows(); ++r) kept.push_back(images.row(r));
      return BinaryCode(new_length, std::move(kept));
    }
    const RowReduction red = row_reduce(std::move(images));
    std::vector<BitVector> basis;
    for (std::size_t r = 0; r < red.rank; ++r) basis.push_back(red.rref.row(r));
    return BinaryCode(new_length, std::move(basis));
  }

  /// The code {(c|c)}: length 2n, every weight doubled.
  BinaryCode doubled() const {
    std::vector<BitVector> basis;
    for (const auto& b : basis_) {
      BitVector v(2 * length_);
      for (std::size_t j = 0; j < length_; ++j) {
        v.set(j, b.test(j));
        v.set(j + length_, b.test(j));
      }
      basis.push_back(std::move(v));
    }
    return BinaryCode(2 * length_, std::move(basis));
  }

  /// Even-weight generators span an even code, so checking the basis suffices.
  bool is_even() const {
    return std::all_of(basis_.begin(), basis_.end(), [](const BitVector& b) { return b.popcount() % 2 == 0; });
  }

  /// Code file: '#' comments, a line "n d", then d rows of n characters in {0,1}.
  static BinaryCode parse(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(first, last - first + 1));
    }
    require(!lines.empty(), Errc::format, "code file has no header line 'n d'");
    std::istringstream header(lines.front());
    long long n = -1, d = -1;
    std::string extra;
    if (!(header >> n >> d) || (header >> extra) || n < 1 || d < 0) {
      fail(Errc::format, "code header must be 'n d' with n >= 1, d >= 0");
    }
    require(lines.size() == static_cast<std::size_t>(d) + 1, Errc::format,
            "code header declares " + std::to_string(d) + " rows, file has " + std::to_string(lines.size() - 1));
    std::vector<BitVector> basis;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      require(lines[i].size() == static_cast<std::size_t>(n), Errc::format,
              "basis row " + std::to_string(i) + " has length " + std::to_string(lines[i].size()) + ", expected " +
                  std::to_string(n));
      basis.push_back(BitVector::from_string(lines[i]));
    }
    try {
      return BinaryCode(static_cast<std::size_t>(n), std::move(basis));
    } catch (const Error& e) {
      fail(Errc::format, std::string("invalid basis: ") + e.what());
    }
  }

  std::string to_text() const {
    std::ostringstream os;
    os << length_ << ' ' << dimension() << '\n';
    for (const auto& b : basis_) os << b.to_string() << '\n';
    return os.str();
  }

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<BitVector> basis_;
};

}  // namespace trirep
