#pragma once

// Triangular configurations: pure 2-dimensional simplicial complexes stored as
// an ordered triangle list together with its downward closure.

#include <algorithm>
#include <bit>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "trirep/enumerator.hpp"
#include "trirep/error.hpp"
#include "trirep/gf2.hpp"

namespace trirep {

using Vertex = std::uint32_t;

struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  static Edge make(Vertex a, Vertex b) {
    require(a != b, Errc::contract, "edge with a repeated vertex");
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Triangle {
  std::array<Vertex, 3> v{};

  static Triangle make(Vertex a, Vertex b, Vertex c) {
    require(a != b && b != c && a != c, Errc::contract,
            "degenerate triangle {" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}");
    Triangle t{{a, b, c}};
    std::sort(t.v.begin(), t.v.end());
    return t;
  }
  static Triangle make(const std::array<Vertex, 3>& abc) { return make(abc[0], abc[1], abc[2]); }

  std::array<Edge, 3> edges() const { return {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[1], v[2]}}; }

  bool shares_vertex_with(const Triangle& o) const {
    for (Vertex a : v) {
      if (std::find(o.v.begin(), o.v.end(), a) != o.v.end()) return true;
    }
    return false;
  }

  std::string to_string() const {
    return "{" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "}";
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Hands out globally fresh vertex ids so that separately built pieces are
/// disjoint unless glued on purpose.
class VertexAllocator {
 public:
  explicit VertexAllocator(Vertex first = 0) : next_(first) {}

  Vertex fresh() { return next_++; }
  std::array<Vertex, 3> fresh_triple() { return {fresh(), fresh(), fresh()}; }
  Vertex peek() const noexcept { return next_; }

 private:
  Vertex next_;
};

class TriangularConfiguration {
 public:
  TriangularConfiguration() = default;

  /// Rejects duplicate triangles; list order becomes the column order of the incidence matrix.
  static TriangularConfiguration from_triangles(std::span<const Triangle> triangles) {
    TriangularConfiguration c;
    c.triangles_.assign(triangles.begin(), triangles.end());
    c.build();
    return c;
  }

  static TriangularConfiguration from_triples(std::span<const std::array<Vertex, 3>> triples) {
    std::vector<Triangle> ts;
    ts.reserve(triples.size());
    for (const auto& t : triples) ts.push_back(Triangle::make(t));
    return from_triangles(ts);
  }

  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }

  std::size_t triangle_count() const noexcept { return triangles_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return triangles_.empty(); }

  const Triangle& triangle(std::size_t i) const { return triangles_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> index_of(const Triangle& t) const {
    auto it = triangle_index_.find(t);
    if (it == triangle_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> index_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }
  bool contains(const Triangle& t) const { return triangle_index_.contains(t); }
  bool contains(const Edge& e) const { return index_of(e).has_value(); }

  std::size_t require_index(const Triangle& t) const {
    const auto i = index_of(t);
    require(i.has_value(), Errc::contract, "triangle " + t.to_string() + " is not in the configuration");
    return *i;
  }

  /// Edge indices of triangle i.
  const std::array<std::size_t, 3>& triangle_edges(std::size_t i) const { return triangle_edges_.at(i); }
  /// Triangle indices incident with edge i, ascending.
  const std::vector<std::size_t>& edge_triangles(std::size_t i) const { return edge_triangles_.at(i); }

  /// One past the largest vertex id in use.
  Vertex vertex_bound() const noexcept { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  /// Rows are edges (lexicographic), columns are triangles (list order).
  BitMatrix incidence_matrix() const {
    BitMatrix m(edge_count(), triangle_count());
    for (std::size_t t = 0; t < triangle_count(); ++t) {
      for (std::size_t e : triangle_edges_[t]) m.set(e, t);
    }
    return m;
  }

  /// Triangles selected by `bits` (a vector indexed by this configuration's triangles).
  TriangularConfiguration select(const BitVector& bits) const {
    require(bits.size() == triangle_count(), Errc::contract, "selection length does not match the triangle count");
    std::vector<Triangle> ts;
    for (std::size_t i : bits.support()) ts.push_back(triangles_[i]);
    return from_triangles(ts);
  }

  /// Incidence vector of `sub` with respect to this host.
  BitVector indicator(const TriangularConfiguration& sub) const {
    BitVector out(triangle_count());
    for (const auto& t : sub.triangles()) out.set(require_index(t));
    return out;
  }

  friend bool operator==(const TriangularConfiguration& a, const TriangularConfiguration& b) {
    return a.triangles_ == b.triangles_;
  }

 private:
  void build() {
    std::set<Edge> edge_set;
    std::set<Vertex> vertex_set;
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
      const Triangle& t = triangles_[i];
      require(t.v[0] < t.v[1] && t.v[1] < t.v[2], Errc::contract, "triangle " + t.to_string() + " is not normalized");
      require(triangle_index_.emplace(t, i).second, Errc::contract, "duplicate triangle " + t.to_string());
      for (const auto& e : t.edges()) edge_set.insert(e);
      vertex_set.insert(t.v.begin(), t.v.end());
    }
    edges_.assign(edge_set.begin(), edge_set.end());
    vertices_.assign(vertex_set.begin(), vertex_set.end());
    triangle_edges_.resize(triangles_.size());
    edge_triangles_.assign(edges_.size(), {});
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
      const auto es = triangles_[i].edges();
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t e = *index_of(es[k]);
        triangle_edges_[i][k] = e;
        edge_triangles_[e].push_back(i);
      }
    }
  }

  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  std::map<Triangle, std::size_t> triangle_index_;
  std::vector<std::array<std::size_t, 3>> triangle_edges_;
  std::vector<std::vector<std::size_t>> edge_triangles_;
};

/// Triangles of a followed by those of b not already present.
inline TriangularConfiguration unite(const TriangularConfiguration& a, const TriangularConfiguration& b) {
  std::vector<Triangle> ts(a.triangles().begin(), a.triangles().end());
  for (const auto& t : b.triangles()) {
    if (!a.contains(t)) ts.push_back(t);
  }
  return TriangularConfiguration::from_triangles(ts);
}

inline TriangularConfiguration intersection(const TriangularConfiguration& a, const TriangularConfiguration& b) {
  std::vector<Triangle> ts;
  for (const auto& t : a.triangles()) {
    if (b.contains(t)) ts.push_back(t);
  }
  return TriangularConfiguration::from_triangles(ts);
}

/// Triangles of a not in b. Edges and vertices that lie in no remaining
/// triangle disappear with them, since only the closure is stored.
inline TriangularConfiguration difference(const TriangularConfiguration& a, const TriangularConfiguration& b) {
  std::vector<Triangle> ts;
  for (const auto& t : a.triangles()) {
    if (!b.contains(t)) ts.push_back(t);
  }
  return TriangularConfiguration::from_triangles(ts);
}

inline TriangularConfiguration symmetric_difference(const TriangularConfiguration& a, const TriangularConfiguration& b) {
  return difference(unite(a, b), intersection(a, b));
}

inline bool is_cycle(const TriangularConfiguration& host, const BitVector& selection) {
  require(selection.size() == host.triangle_count(), Errc::contract, "selection length does not match the triangle count");
  std::vector<unsigned char> parity(host.edge_count(), 0);
  for (std::size_t t : selection.support()) {
    for (std::size_t e : host.triangle_edges(t)) parity[e] ^= 1;
  }
  return std::all_of(parity.begin(), parity.end(), [](unsigned char p) { return p == 0; });
}

/// Kernel basis of the incidence matrix, as triangle selections.
inline std::vector<BitVector> cycle_space(const TriangularConfiguration& host) {
  return kernel_basis(host.incidence_matrix());
}

/// Every cycle, in binary-counter order over the kernel basis.
inline std::vector<BitVector> enumerate_cycles(const TriangularConfiguration& host, std::size_t max_dim = 20) {
  const auto basis = cycle_space(host);
  require(basis.size() <= max_dim, Errc::size_guard,
          "cycle space dimension " + std::to_string(basis.size()) + " exceeds guard " + std::to_string(max_dim));
  const std::size_t count = std::size_t{1} << basis.size();
  std::vector<BitVector> cycles(count, BitVector(host.triangle_count()));
  for (std::size_t k = 1; k < count; ++k) {
    cycles[k] = cycles[k & (k - 1)] ^ basis[static_cast<std::size_t>(std::countr_zero(k))];
  }
  return cycles;
}

inline WeightEnumerator weight_enumerator_cycles(const TriangularConfiguration& host, std::size_t max_dim = 20) {
  WeightEnumerator w;
  for (const auto& c : enumerate_cycles(host, max_dim)) w.add_term(c.popcount());
  return w;
}

struct Subdivision {
  TriangularConfiguration config;
  Vertex center;
  /// Indices of the three replacement triangles; the first reuses the old index.
  std::array<std::size_t, 3> pieces;
};

/// Replaces t={a,b,c} by {a,b,v}, {b,c,v}, {a,c,v} around a fresh vertex v.
/// {a,b,v} takes t's position; the other two are appended.
inline Subdivision subdivide(const TriangularConfiguration& host, const Triangle& t, std::optional<Vertex> center = {}) {
  const std::size_t at = host.require_index(t);
  const Vertex v = center.value_or(host.vertex_bound());
  require(std::find(host.vertices().begin(), host.vertices().end(), v) == host.vertices().end(), Errc::contract,
          "subdivision vertex " + std::to_string(v) + " is already in use");
  const auto [a, b, c] = t.v;
  std::vector<Triangle> ts(host.triangles().begin(), host.triangles().end());
  ts[at] = Triangle::make(a, b, v);
  ts.push_back(Triangle::make(b, c, v));
  ts.push_back(Triangle::make(a, c, v));
  return {TriangularConfiguration::from_triangles(ts), v, {at, ts.size() - 2, ts.size() - 1}};
}

/// A configuration with an optional 0/1 weight per triangle.
struct WeightedConfiguration {
  TriangularConfiguration config;
  std::vector<unsigned char> weights;  // empty, or one entry per triangle
};

/// Complex file: '#' comments, one triangle "v1 v2 v3" per line, optional "w=0|1".
inline WeightedConfiguration parse_complex(std::istream& in) {
  std::vector<Triangle> ts;
  std::vector<unsigned char> weights;
  bool any_weight = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    const std::string where = "complex line " + std::to_string(lineno);
    require(fields.size() == 3 || fields.size() == 4, Errc::format, where + ": expected 'v1 v2 v3 [w=0|1]'");
    std::array<Vertex, 3> vs{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& f = fields[k];
      require(!f.empty() && f.find_first_not_of("0123456789") == std::string::npos && f.size() <= 9, Errc::format,
              where + ": vertex '" + f + "' is not a nonnegative integer");
      vs[k] = static_cast<Vertex>(std::stoul(f));
    }
    unsigned char w = 0;
    if (fields.size() == 4) {
      require(fields[3] == "w=0" || fields[3] == "w=1", Errc::format, where + ": weight must be w=0 or w=1");
      w = fields[3] == "w=1" ? 1 : 0;
      any_weight = true;
    }
    try {
      ts.push_back(Triangle::make(vs));
    } catch (const Error& e) {
      fail(Errc::format, where + ": " + e.what());
    }
    weights.push_back(w);
  }
  WeightedConfiguration out;
  try {
    out.config = TriangularConfiguration::from_triangles(ts);
  } catch (const Error& e) {
    fail(Errc::format, e.what());
  }
  if (any_weight) out.weights = std::move(weights);
  return out;
}

inline void write_complex(std::ostream& os, const TriangularConfiguration& config,
                          std::span<const unsigned char> weights = {}) {
  require(weights.empty() || weights.size() == config.triangle_count(), Errc::contract,
          "weight list does not match the triangle count");
  for (std::size_t i = 0; i < config.triangle_count(); ++i) {
    const auto& t = config.triangle(i);
    os << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2];
    if (!weights.empty()) os << " w=" << static_cast<int>(weights[i]);
    os << '\n';
  }
}

}  // namespace trirep
