#pragma once

// Sparse univariate generating polynomials with exponent = weight.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trirep/error.hpp"

namespace trirep {

template <class Coeff = std::uint64_t>
class BasicWeightEnumerator {
 public:
  using coefficient_type = Coeff;
  using exponent_type = std::size_t;
  using term_map = std::map<exponent_type, Coeff>;

  BasicWeightEnumerator() = default;
  BasicWeightEnumerator(std::initializer_list<std::pair<const exponent_type, Coeff>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  const term_map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  Coeff coefficient(exponent_type weight) const {
    auto it = terms_.find(weight);
    return it == terms_.end() ? Coeff{0} : it->second;
  }

  exponent_type max_exponent() const {
    require(!terms_.empty(), Errc::contract, "max_exponent of an empty enumerator");
    return terms_.rbegin()->first;
  }

  /// Sum of all coefficients, i.e. the number of enumerated objects.
  Coeff total() const {
    Coeff sum{0};
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  BasicWeightEnumerator& add_term(exponent_type weight, Coeff count = Coeff{1}) {
    if (count == Coeff{0}) return *this;
    terms_[weight] += count;
    return *this;
  }

  BasicWeightEnumerator& operator+=(const BasicWeightEnumerator& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  friend BasicWeightEnumerator operator+(BasicWeightEnumerator a, const BasicWeightEnumerator& b) { return a += b; }

  /// Each term x^i becomes x^(i mod modulus).
  BasicWeightEnumerator fold_mod(exponent_type modulus) const {
    require(modulus >= 1, Errc::contract, "fold modulus must be positive");
    BasicWeightEnumerator out;
    for (const auto& [e, c] : terms_) out.add_term(e % modulus, c);
    return out;
  }

  /// Inverse of the substitution x -> x^2.
  BasicWeightEnumerator halve_exponents() const {
    BasicWeightEnumerator out;
    for (const auto& [e, c] : terms_) {
      require(e % 2 == 0, Errc::contract, "odd exponent " + std::to_string(e) + ": not a polynomial in x^2");
      out.add_term(e / 2, c);
    }
    return out;
  }

  /// The substitution x -> x^2.
  BasicWeightEnumerator double_exponents() const {
    BasicWeightEnumerator out;
    for (const auto& [e, c] : terms_) out.add_term(2 * e, c);
    return out;
  }

  /// Multiplication by x^offset.
  BasicWeightEnumerator shifted(exponent_type offset) const {
    BasicWeightEnumerator out;
    for (const auto& [e, c] : terms_) out.add_term(e + offset, c);
    return out;
  }

  /// Terms with lo <= exponent <= hi.
  BasicWeightEnumerator window(exponent_type lo, exponent_type hi) const {
    BasicWeightEnumerator out;
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it) out.add_term(it->first, it->second);
    return out;
  }

  friend bool operator==(const BasicWeightEnumerator&, const BasicWeightEnumerator&) = default;

  /// "exponent coefficient" lines, ascending exponents.
  std::string to_text() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

  void write(std::ostream& os) const {
    for (const auto& [e, c] : terms_) os << e << ' ' << c << '\n';
  }

  static BasicWeightEnumerator parse(std::istream& in) {
    BasicWeightEnumerator out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      exponent_type e{};
      Coeff c{};
      if (!(ls >> e)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        fail(Errc::format, "enumerator line " + std::to_string(lineno) + ": expected 'exponent coefficient'");
      }
      std::string rest;
      if (!(ls >> c) || (ls >> rest)) {
        fail(Errc::format, "enumerator line " + std::to_string(lineno) + ": expected 'exponent coefficient'");
      }
      out.add_term(e, c);
    }
    return out;
  }

  static BasicWeightEnumerator parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
  }

 private:
  term_map terms_;
};

using WeightEnumerator = BasicWeightEnumerator<>;

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const BasicWeightEnumerator<Coeff>& w) {
  os << '{';
  bool first = true;
  for (const auto& [e, c] : w.terms()) {
    os << (first ? "" : ", ") << e << ':' << c;
    first = false;
  }
  return os << '}';
}

struct WeightAndDegree {
  std::size_t weight;
  std::size_t degree;
};

/// Extended enumerators W^k, one per degree 0..max_degree.
template <class Coeff = std::uint64_t>
std::vector<BasicWeightEnumerator<Coeff>> split_by_degree(const std::vector<WeightAndDegree>& items, std::size_t max_degree) {
  std::vector<BasicWeightEnumerator<Coeff>> out(max_degree + 1);
  for (const auto& item : items) {
    require(item.degree <= max_degree, Errc::contract,
            "degree " + std::to_string(item.degree) + " exceeds " + std::to_string(max_degree));
    out[item.degree].add_term(item.weight);
  }
  return out;
}

}  // namespace trirep
