#pragma once

// Triangular representation of a binary code: one sphere-with-tunnels cycle
// per basis vector, sharing the coordinate triangles B_1..B_n. The cycle-space
// weight enumerator of the balanced representation folds back to the code's.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trirep/code.hpp"
#include "trirep/complex.hpp"
#include "trirep/enumerator.hpp"
#include "trirep/error.hpp"
#include "trirep/gadgets.hpp"
#include "trirep/gf2.hpp"

namespace trirep {

/// Smallest even m with m >= n and m >= 4.
inline std::size_t sphere_size_for(std::size_t n) {
  const std::size_t m = std::max<std::size_t>(n, 4);
  return m % 2 == 0 ? m : m + 1;
}

/// Smallest even number strictly greater than n.
inline std::size_t next_even_above(std::size_t n) { return n % 2 == 0 ? n + 2 : n + 1; }

struct Representation {
  BinaryCode code;
  std::size_t sphere_faces = 0;  // m
  TriangularConfiguration config;
  /// Triangle index of B_j for every coordinate j used by some basis vector.
  std::vector<std::optional<std::size_t>> slots;
  /// Triangle indices of each basis vector's cycle, ascending.
  std::vector<std::vector<std::size_t>> blocks;
  /// Per block, the triangles derived from the sphere (subdivision candidates).
  std::vector<std::vector<std::size_t>> sphere_region;
  /// Set once the blocks all have the same excess.
  std::optional<std::size_t> exponent;

  std::size_t length() const noexcept { return code.length(); }
  std::size_t dimension() const noexcept { return code.dimension(); }

  /// |block_i| - w(b_i).
  std::size_t excess(std::size_t i) const { return blocks.at(i).size() - code.basis().at(i).popcount(); }

  BitVector block_indicator(std::size_t i) const {
    BitVector v(config.triangle_count());
    for (std::size_t t : blocks.at(i)) v.set(t);
    return v;
  }

  std::vector<BitVector> block_indicators() const {
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) out.push_back(block_indicator(i));
    return out;
  }
};

namespace detail {

struct BlockParts {
  std::vector<Triangle> slots;   // B_j for j in supp(b), ascending j
  std::vector<Triangle> sphere;  // remainder of S^m
  std::vector<Triangle> band;    // tunnel faces
};

/// Joins S_j to B_j for every j in supp(b), then drops the joined sphere faces.
inline BlockParts build_block(const BitVector& b, const std::vector<Triangle>& coordinate_triangles, std::size_t m,
                              VertexAllocator& alloc) {
  BlockParts out;
  const LabeledGadget s = sphere(m, alloc);
  const auto support = b.support();
  std::set<std::size_t> joined(support.begin(), support.end());
  for (std::size_t j : support) {
    const Triangle& slot = coordinate_triangles.at(j);
    const Triangle& face = s.config.triangle(j);
    out.slots.push_back(slot);
    append(out.band, tunnel_band(face.v, slot.v).all());
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!joined.contains(j)) out.sphere.push_back(s.config.triangle(j));
  }
  return out;
}

inline void check_sphere_size(std::size_t n, std::size_t m) {
  require(m % 2 == 0 && m >= 4 && m >= n, Errc::contract,
          "sphere size " + std::to_string(m) + " must be even, >= 4 and >= " + std::to_string(n));
}

}  // namespace detail

/// The cycle representing one nonzero vector b of length n, with sphere size m.
/// Ports "B<j>" (1-based) name the coordinate triangles that remain.
inline LabeledGadget represent_basis_vector(const BitVector& b, std::size_t m) {
  const std::size_t n = b.size();
  require(b.any(), Errc::contract, "cannot represent the zero vector");
  detail::check_sphere_size(n, m);
  VertexAllocator alloc;
  std::vector<Triangle> coords;
  for (std::size_t j = 0; j < n; ++j) coords.push_back(Triangle::make(alloc.fresh_triple()));
  const auto parts = detail::build_block(b, coords, m, alloc);
  std::vector<Triangle> ts = parts.slots;
  detail::append(ts, parts.sphere);
  detail::append(ts, parts.band);
  LabeledGadget g{TriangularConfiguration::from_triangles(ts), {}, {}};
  for (std::size_t j : b.support()) g.ports["B" + std::to_string(j + 1)] = g.config.require_index(coords[j]);
  return g;
}

/// Union of the basis-vector cycles. Triangle order: used coordinate
/// triangles (ascending j), then each block's sphere remainder and band.
/// The code must be even; general codes go through BinaryCode::doubled().
inline Representation represent_code(const BinaryCode& code, std::optional<std::size_t> sphere_faces = {}) {
  require(code.is_even(), Errc::contract, "represent_code needs an even code; double it first");
  const std::size_t n = code.length();
  const std::size_t m = sphere_faces.value_or(sphere_size_for(n));
  detail::check_sphere_size(n, m);

  VertexAllocator alloc;
  std::vector<bool> used(n, false);
  for (const auto& b : code.basis()) {
    for (std::size_t j : b.support()) used[j] = true;
  }
  std::vector<Triangle> coords(n);
  std::vector<Triangle> ts;
  for (std::size_t j = 0; j < n; ++j) {
    if (!used[j]) continue;
    coords[j] = Triangle::make(alloc.fresh_triple());
    ts.push_back(coords[j]);
  }

  std::vector<detail::BlockParts> parts;
  for (const auto& b : code.basis()) {
    parts.push_back(detail::build_block(b, coords, m, alloc));
    detail::append(ts, parts.back().sphere);
    detail::append(ts, parts.back().band);
  }

  Representation rep;
  rep.code = code;
  rep.sphere_faces = m;
  rep.config = TriangularConfiguration::from_triangles(ts);
  rep.slots.assign(n, std::nullopt);
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) rep.slots[j] = rep.config.require_index(coords[j]);
  }
  for (const auto& p : parts) {
    std::vector<Triangle> all = p.slots;
    detail::append(all, p.sphere);
    detail::append(all, p.band);
    rep.blocks.push_back(detail::indices_in(rep.config, all));
    rep.sphere_region.push_back(detail::indices_in(rep.config, p.sphere));
  }
  return rep;
}

/// Subdivides sphere-region triangles (lexicographically smallest first)
/// until every block has excess e = max(next even above n, all excesses).
inline Representation balance(Representation rep) {
  const std::size_t n = rep.length();
  std::size_t e = next_even_above(n);
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) e = std::max(e, rep.excess(i));
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    require((e - rep.excess(i)) % 2 == 0, Errc::contract,
            "block " + std::to_string(i) + " has excess parity different from the target " + std::to_string(e) +
                " (odd-weight basis vector?)");
  }
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    while (rep.excess(i) < e) {
      auto& region = rep.sphere_region[i];
      const auto target = *std::min_element(region.begin(), region.end(), [&](std::size_t a, std::size_t b) {
        return rep.config.triangle(a) < rep.config.triangle(b);
      });
      const Subdivision sub = subdivide(rep.config, rep.config.triangle(target));
      rep.config = sub.config;
      for (std::size_t k = 1; k < 3; ++k) {
        rep.blocks[i].push_back(sub.pieces[k]);
        region.push_back(sub.pieces[k]);
      }
    }
    std::sort(rep.blocks[i].begin(), rep.blocks[i].end());
    std::sort(rep.sphere_region[i].begin(), rep.sphere_region[i].end());
  }
  rep.exponent = e;
  return rep;
}

/// f(c): the incidence vector of the symmetric difference of the blocks
/// selected by c's expansion in the basis.
inline BitVector map_f(const Representation& rep, const BitVector& c) {
  const auto coeffs = rep.code.coordinates(c);
  require(coeffs.has_value(), Errc::membership, "word " + c.to_string() + " is not a codeword");
  BitVector out(rep.config.triangle_count());
  for (std::size_t i : coeffs->support()) out ^= rep.block_indicator(i);
  return out;
}

/// Degree of a kernel vector with respect to the transported basis {f(b_i)}.
inline std::size_t kernel_degree(const Representation& rep, const BitVector& cycle) {
  const auto coeffs = coordinates_in_span(rep.block_indicators(), cycle);
  require(coeffs.has_value(), Errc::membership, "vector is not in the span of the block cycles");
  return coeffs->popcount();
}

struct BijectionReport {
  bool image_is_kernel = false;  // {f(c)} equals the full cycle space
  bool sizes_match = false;      // |ker| == |C|
  bool injective = false;
  bool minimal_preserved = false;
  std::string counterexample;

  bool ok() const noexcept { return image_is_kernel && sizes_match && injective && minimal_preserved; }
};

inline BijectionReport verify_bijection(const Representation& rep, std::size_t max_dim = kMaxEnumerationDim) {
  BijectionReport report;
  const auto words = rep.code.enumerate_codewords(max_dim);
  const auto cycles = enumerate_cycles(rep.config, max_dim);

  std::vector<BitVector> images;
  images.reserve(words.size());
  for (const auto& c : words) images.push_back(map_f(rep, c));

  report.sizes_match = cycles.size() == words.size();
  if (!report.sizes_match) {
    report.counterexample = "kernel has " + std::to_string(cycles.size()) + " vectors, code has " + std::to_string(words.size());
  }

  const std::set<BitVector> image_set(images.begin(), images.end());
  report.injective = image_set.size() == images.size();
  if (!report.injective && report.counterexample.empty()) report.counterexample = "two codewords share an image under f";

  const std::set<BitVector> kernel_set(cycles.begin(), cycles.end());
  report.image_is_kernel = image_set == kernel_set;
  if (!report.image_is_kernel && report.counterexample.empty()) {
    for (const auto& img : images) {
      if (!kernel_set.contains(img)) {
        report.counterexample = "f-image " + img.to_string() + " is not a cycle";
        break;
      }
    }
    if (report.counterexample.empty()) report.counterexample = "some cycle is not an f-image";
  }

  report.minimal_preserved = true;
  for (std::size_t k = 0; k < words.size() && report.minimal_preserved; ++k) {
    if (words[k].none() || !rep.code.is_minimal(words[k], max_dim)) continue;
    for (const auto& u : cycles) {
      if (u.any() && u != images[k] && u.is_subset_of(images[k])) {
        report.minimal_preserved = false;
        if (report.counterexample.empty()) {
          report.counterexample = "minimal codeword " + words[k].to_string() + " maps to a non-minimal cycle";
        }
        break;
      }
    }
  }
  return report;
}

struct Recovery {
  WeightEnumerator folded;
  /// W^k_ker: the terms with exponent in [k·e, k·e + n].
  std::vector<WeightEnumerator> degree_blocks;
};

/// Folds the cycle-space enumerator modulo e and exposes its degree windows.
inline Recovery recover_weight_enumerator(const WeightEnumerator& kernel_enum, std::size_t e, std::size_t n, std::size_t d) {
  require(e > n, Errc::contract, "exponent e=" + std::to_string(e) + " must exceed the length n=" + std::to_string(n));
  Recovery out;
  if (!kernel_enum.empty()) {
    require(kernel_enum.max_exponent() <= d * e + n, Errc::contract,
            "exponent " + std::to_string(kernel_enum.max_exponent()) + " exceeds d*e+n=" + std::to_string(d * e + n) +
                " (unbalanced representation?)");
  }
  for (const auto& [exponent, count] : kernel_enum.terms()) {
    const std::size_t k = exponent / e;
    require(exponent - k * e <= n, Errc::contract,
            "exponent " + std::to_string(exponent) + " lies outside every degree window (unbalanced representation?)");
  }
  for (std::size_t k = 0; k <= d; ++k) out.degree_blocks.push_back(kernel_enum.window(k * e, k * e + n));
  out.folded = kernel_enum.fold_mod(e);
  return out;
}

struct PipelineResult {
  Representation representation;  // of the code itself, or of its doubling
  bool doubled = false;
  WeightEnumerator kernel_enumerator;
  WeightEnumerator weight_enumerator;
};

/// Even codes: represent, balance, enumerate cycles, fold. Other codes are
/// doubled first and the x -> x^2 substitution is undone at the end.
inline PipelineResult pipeline(const BinaryCode& code, std::size_t max_dim = kMaxEnumerationDim) {
  require(code.dimension() <= max_dim, Errc::size_guard,
          "code dimension " + std::to_string(code.dimension()) + " exceeds guard " + std::to_string(max_dim));
  PipelineResult out;
  out.doubled = !code.is_even();
  const BinaryCode even = out.doubled ? code.doubled() : code;
  out.representation = balance(represent_code(even));
  out.kernel_enumerator = weight_enumerator_cycles(out.representation.config, max_dim);
  const auto rec = recover_weight_enumerator(out.kernel_enumerator, *out.representation.exponent, even.length(),
                                             even.dimension());
  out.weight_enumerator = out.doubled ? rec.folded.halve_exponents() : rec.folded;
  return out;
}

/// Sidecar "key value" metadata for a representation.
inline void write_meta(std::ostream& os, const Representation& rep, bool doubled) {
  os << "n " << rep.length() << '\n';
  os << "d " << rep.dimension() << '\n';
  os << "m " << rep.sphere_faces << '\n';
  if (rep.exponent) os << "e " << *rep.exponent << '\n';
  os << "doubled " << (doubled ? 1 : 0) << '\n';
  for (std::size_t j = 0; j < rep.slots.size(); ++j) {
    if (rep.slots[j]) os << "slot " << j << ' ' << *rep.slots[j] << '\n';
  }
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    os << "block " << i;
    for (std::size_t t : rep.blocks[i]) os << ' ' << t;
    os << '\n';
  }
}

}  // namespace trirep
