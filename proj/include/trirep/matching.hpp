#pragma once

// Triangle matchings, exhaustive perfect-matching search, and the reduction
// from cycles of a configuration to perfect matchings of a gadget assembly.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trirep/complex.hpp"
#include "trirep/enumerator.hpp"
#include "trirep/error.hpp"
#include "trirep/gadgets.hpp"
#include "trirep/gf2.hpp"

namespace trirep {

inline constexpr std::size_t kMaxMatchingTriangles = 10000;

/// Triangle indices of a host configuration, ascending.
struct Matching {
  std::vector<std::size_t> chosen;

  bool contains(std::size_t t) const { return std::binary_search(chosen.begin(), chosen.end(), t); }
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// No two chosen triangles share an edge.
inline bool is_matching(const TriangularConfiguration& host, const Matching& m) {
  std::vector<unsigned char> used(host.edge_count(), 0);
  for (std::size_t t : m.chosen) {
    require(t < host.triangle_count(), Errc::contract, "matching refers to a triangle outside the host");
    for (std::size_t e : host.triangle_edges(t)) {
      if (used[e]++) return false;
    }
  }
  return true;
}

/// Edge indices covered by no chosen triangle.
inline std::vector<std::size_t> defect(const TriangularConfiguration& host, const Matching& m) {
  std::vector<unsigned char> covered(host.edge_count(), 0);
  for (std::size_t t : m.chosen) {
    for (std::size_t e : host.triangle_edges(t)) covered[e] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < host.edge_count(); ++e) {
    if (!covered[e]) out.push_back(e);
  }
  return out;
}

inline bool is_perfect_matching(const TriangularConfiguration& host, const Matching& m) {
  return is_matching(host, m) && defect(host, m).empty();
}

namespace detail {

/// Backtracking over the uncovered edge with the fewest available covers.
/// Ties go to the edge constrained most recently (keeps the search local to
/// the gadget being resolved), then to the lower edge index.
class PerfectMatchingSearch {
 public:
  explicit PerfectMatchingSearch(const TriangularConfiguration& host)
      : host_(host),
        covered_(host.edge_count(), 0),
        available_(host.edge_count(), 0),
        stamp_(host.edge_count(), 0),
        blocked_(host.triangle_count(), 0) {
    for (std::size_t e = 0; e < host.edge_count(); ++e) available_[e] = host.edge_triangles(e).size();
  }

  void run(const std::function<void(const Matching&)>& visit) {
    visit_ = &visit;
    uncovered_ = host_.edge_count();
    search();
  }

 private:
  void search() {
    if (uncovered_ == 0) {
      Matching m{chosen_};
      std::sort(m.chosen.begin(), m.chosen.end());
      (*visit_)(m);
      return;
    }
    std::size_t best = host_.edge_count();
    for (std::size_t e = 0; e < host_.edge_count(); ++e) {
      if (covered_[e]) continue;
      if (best == host_.edge_count() || available_[e] < available_[best] ||
          (available_[e] == available_[best] && stamp_[e] > stamp_[best])) {
        best = e;
        if (available_[e] == 0) return;
      }
    }
    for (std::size_t t : host_.edge_triangles(best)) {
      if (blocked_[t] != 0) continue;
      take(t);
      search();
      undo(t);
    }
  }

  void take(std::size_t t) {
    chosen_.push_back(t);
    for (std::size_t e : host_.triangle_edges(t)) {
      covered_[e] = 1;
      --uncovered_;
      for (std::size_t u : host_.edge_triangles(e)) {
        if (blocked_[u]++ == 0) {
          for (std::size_t f : host_.triangle_edges(u)) {
            --available_[f];
            stamp_[f] = ++clock_;
          }
        }
      }
    }
  }

  void undo(std::size_t t) {
    for (std::size_t e : host_.triangle_edges(t)) {
      for (std::size_t u : host_.edge_triangles(e)) {
        if (--blocked_[u] == 0) {
          for (std::size_t f : host_.triangle_edges(u)) ++available_[f];
        }
      }
      covered_[e] = 0;
      ++uncovered_;
    }
    chosen_.pop_back();
  }

  const TriangularConfiguration& host_;
  std::vector<unsigned char> covered_;
  std::vector<std::size_t> available_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::size_t> blocked_;
  std::vector<std::size_t> chosen_;
  std::size_t uncovered_ = 0;
  std::uint64_t clock_ = 0;
  const std::function<void(const Matching&)>* visit_ = nullptr;
};

}  // namespace detail

inline void for_each_perfect_matching(const TriangularConfiguration& host, const std::function<void(const Matching&)>& visit,
                                      std::size_t max_triangles = kMaxMatchingTriangles) {
  require(host.triangle_count() <= max_triangles, Errc::size_guard,
          "configuration has " + std::to_string(host.triangle_count()) + " triangles, search guard is " +
              std::to_string(max_triangles));
  detail::PerfectMatchingSearch(host).run(visit);
}

/// All perfect matchings, sorted by chosen set.
inline std::vector<Matching> enumerate_perfect_matchings(const TriangularConfiguration& host,
                                                         std::size_t max_triangles = kMaxMatchingTriangles) {
  std::vector<Matching> out;
  for_each_perfect_matching(host, [&](const Matching& m) { out.push_back(m); }, max_triangles);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t matching_weight(const Matching& m, std::span<const unsigned char> weights) {
  std::size_t w = 0;
  for (std::size_t t : m.chosen) w += weights.empty() ? 0 : weights[t];
  return w;
}

/// P(x) = sum over perfect matchings of x^(total weight).
inline WeightEnumerator pm_weight_enumerator(const TriangularConfiguration& host, std::span<const unsigned char> weights,
                                             std::size_t max_triangles = kMaxMatchingTriangles) {
  require(weights.empty() || weights.size() == host.triangle_count(), Errc::contract,
          "weight list does not match the triangle count");
  WeightEnumerator p;
  for_each_perfect_matching(host, [&](const Matching& m) { p.add_term(matching_weight(m, weights)); }, max_triangles);
  return p;
}

// ---------------------------------------------------------------------------
// Reduction

/// An empty triangle of the assembly: its three edges exist, its face does not.
struct PortRecord {
  Triple vertices;
  std::optional<std::size_t> source_triangle;  // set for external ports t_e
  std::size_t source_edge = 0;                 // chain owning the port
  bool internal = false;                       // a chain's own t'_i
};

struct TriangleGadgetRecord {
  std::size_t source_triangle = 0;
  std::array<std::size_t, 3> ports{};  // port ids, one per edge of the source triangle
  std::size_t begin = 0, end = 0;      // triangle index range in the assembly
  std::vector<std::size_t> on;         // t in C: covers its ports
  std::vector<std::size_t> off;        // t not in C
  std::size_t weight_triangle = 0;
};

struct LinkRecord {
  std::size_t from = 0, to = 0;  // port ids
  std::size_t begin = 0, end = 0;
  std::vector<std::size_t> on;
  std::vector<std::size_t> off;
};

struct EdgeGadgetRecord {
  std::size_t source_edge = 0;
  std::vector<std::size_t> incident;  // source triangles containing the edge, ascending
  std::vector<std::size_t> ports;     // external port ids, parallel to `incident`
  std::vector<std::size_t> internal;  // internal port ids t'_1..t'_n
  std::size_t begin = 0, end = 0;
  std::vector<LinkRecord> links;      // order as in chain_parts
};

struct MatchingInstance {
  TriangularConfiguration source;
  TriangularConfiguration config;
  std::vector<unsigned char> weights;
  std::vector<PortRecord> ports;
  std::vector<TriangleGadgetRecord> triangle_gadgets;  // indexed by source triangle
  std::vector<EdgeGadgetRecord> edge_gadgets;          // indexed by source edge
};

/// Builds the assembly: one matching triangle per source triangle, wired to
/// three empty port triangles (one per edge), and one chain per source edge
/// over the ports of its incident triangles. Weight 1 marks one face of each
/// matching triangle's `on` state; every other face has weight 0.
inline MatchingInstance reduce(const TriangularConfiguration& source) {
  for (std::size_t e = 0; e < source.edge_count(); ++e) {
    require(!source.edge_triangles(e).empty(), Errc::contract, "every edge must lie in some triangle");
  }
  MatchingInstance inst;
  inst.source = source;
  VertexAllocator alloc;

  std::vector<Triangle> ts;
  struct PendingLink {
    std::size_t from, to;
    PortGadget gadget;
  };
  std::vector<PortGadget> tri_parts;
  std::vector<std::vector<PendingLink>> edge_parts(source.edge_count());
  std::vector<std::vector<std::size_t>> edge_ports(source.edge_count());

  inst.triangle_gadgets.resize(source.triangle_count());
  for (std::size_t t = 0; t < source.triangle_count(); ++t) {
    auto& rec = inst.triangle_gadgets[t];
    rec.source_triangle = t;
    std::vector<Triple> port_vertices;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t e = source.triangle_edges(t)[k];
      const Triple pv = alloc.fresh_triple();
      rec.ports[k] = inst.ports.size();
      edge_ports[e].push_back(inst.ports.size());
      inst.ports.push_back({pv, t, e, false});
      port_vertices.push_back(pv);
    }
    tri_parts.push_back(pyramid_with_tunnels(port_vertices, alloc));
    rec.begin = ts.size();
    detail::append(ts, tri_parts.back().without_ports());
    rec.end = ts.size();
  }

  inst.edge_gadgets.resize(source.edge_count());
  for (std::size_t e = 0; e < source.edge_count(); ++e) {
    auto& rec = inst.edge_gadgets[e];
    rec.source_edge = e;
    rec.incident = source.edge_triangles(e);
    rec.ports = edge_ports[e];
    std::vector<Triple> port_vertices;
    for (std::size_t p : rec.ports) port_vertices.push_back(inst.ports[p].vertices);
    const ChainParts parts = chain_parts(port_vertices, alloc);
    for (const auto& iv : parts.internal) {
      rec.internal.push_back(inst.ports.size());
      inst.ports.push_back({iv, std::nullopt, e, true});
    }
    rec.begin = ts.size();
    const std::size_t n = parts.arity;
    for (const auto& link : parts.links) {
      const auto port_id = [&](std::size_t id) { return id < n ? rec.ports[id] : rec.internal[id - n]; };
      edge_parts[e].push_back({port_id(link.from), port_id(link.to), link.gadget});
      detail::append(ts, link.gadget.without_ports());
    }
    rec.end = ts.size();
  }

  inst.config = TriangularConfiguration::from_triangles(ts);
  inst.weights.assign(inst.config.triangle_count(), 0);
  for (std::size_t t = 0; t < source.triangle_count(); ++t) {
    auto& rec = inst.triangle_gadgets[t];
    rec.on = detail::indices_in(inst.config, tri_parts[t].covering);
    rec.off = detail::indices_in(inst.config, tri_parts[t].idle);
    rec.weight_triangle = inst.config.require_index(tri_parts[t].weight_face);
    inst.weights[rec.weight_triangle] = 1;
  }
  for (std::size_t e = 0; e < source.edge_count(); ++e) {
    auto& rec = inst.edge_gadgets[e];
    std::size_t cursor = rec.begin;
    for (const auto& pl : edge_parts[e]) {
      LinkRecord link;
      link.from = pl.from;
      link.to = pl.to;
      link.begin = cursor;
      cursor += pl.gadget.without_ports().size();
      link.end = cursor;
      link.on = detail::indices_in(inst.config, pl.gadget.covering);
      link.off = detail::indices_in(inst.config, pl.gadget.idle);
      rec.links.push_back(std::move(link));
    }
  }
  return inst;
}

/// The unique perfect matching M_C of the assembly for a cycle C of the source.
inline Matching matching_for_cycle(const MatchingInstance& inst, const BitVector& cycle) {
  require(cycle.size() == inst.source.triangle_count(), Errc::contract, "cycle length does not match the source");
  Matching m;
  for (const auto& rec : inst.triangle_gadgets) {
    const auto& part = cycle.test(rec.source_triangle) ? rec.on : rec.off;
    m.chosen.insert(m.chosen.end(), part.begin(), part.end());
  }
  for (const auto& rec : inst.edge_gadgets) {
    std::vector<bool> taken;
    for (std::size_t t : rec.incident) taken.push_back(cycle.test(t));
    const auto states = chain_link_states(taken);
    if (!states) {
      const Edge& e = inst.source.edge(rec.source_edge);
      fail(Errc::contract, "not a cycle: edge {" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "} lies in an odd number of selected triangles");
    }
    for (std::size_t k = 0; k < rec.links.size(); ++k) {
      const auto& part = (*states)[k] ? rec.links[k].on : rec.links[k].off;
      m.chosen.insert(m.chosen.end(), part.begin(), part.end());
    }
  }
  std::sort(m.chosen.begin(), m.chosen.end());
  return m;
}

/// Reads each matching triangle's state back into a source selection.
inline BitVector cycle_for_matching(const MatchingInstance& inst, const Matching& m) {
  BitVector out(inst.source.triangle_count());
  const auto all_in = [&](const std::vector<std::size_t>& part) {
    return std::all_of(part.begin(), part.end(), [&](std::size_t t) { return m.contains(t); });
  };
  for (const auto& rec : inst.triangle_gadgets) {
    const bool on = all_in(rec.on);
    const bool off = all_in(rec.off);
    require(on != off, Errc::contract,
            "matching triangle for source triangle " + std::to_string(rec.source_triangle) + " is in no canonical state");
    out.set(rec.source_triangle, on);
  }
  return out;
}

/// Registry: ports, then per source triangle and per source edge the gadget
/// triangle ranges [begin, end) and their state lists.
inline void write_registry(std::ostream& os, const MatchingInstance& inst) {
  const auto list = [&](const char* key, const std::vector<std::size_t>& xs) {
    os << ' ' << key;
    for (std::size_t x : xs) os << ' ' << x;
  };
  os << "source_triangles " << inst.source.triangle_count() << '\n';
  os << "source_edges " << inst.source.edge_count() << '\n';
  os << "triangles " << inst.config.triangle_count() << '\n';
  for (std::size_t p = 0; p < inst.ports.size(); ++p) {
    const auto& port = inst.ports[p];
    os << "port " << p << ' ' << port.vertices[0] << ' ' << port.vertices[1] << ' ' << port.vertices[2] << ' '
       << (port.internal ? "internal" : "external") << " edge " << port.source_edge;
    if (port.source_triangle) os << " triangle " << *port.source_triangle;
    os << '\n';
  }
  for (const auto& rec : inst.triangle_gadgets) {
    const Triangle& t = inst.source.triangle(rec.source_triangle);
    os << "tri " << rec.source_triangle << " verts " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << " range "
       << rec.begin << ' ' << rec.end << " ports " << rec.ports[0] << ' ' << rec.ports[1] << ' ' << rec.ports[2]
       << " weight " << rec.weight_triangle;
    list("on", rec.on);
    list("off", rec.off);
    os << '\n';
  }
  for (const auto& rec : inst.edge_gadgets) {
    const Edge& e = inst.source.edge(rec.source_edge);
    os << "edge " << rec.source_edge << " verts " << e.lo << ' ' << e.hi << " range " << rec.begin << ' ' << rec.end;
    list("ports", rec.ports);
    list("internal", rec.internal);
    os << '\n';
    for (const auto& l : rec.links) {
      os << "link " << rec.source_edge << ' ' << l.from << ' ' << l.to << " range " << l.begin << ' ' << l.end;
      list("on", l.on);
      list("off", l.off);
      os << '\n';
    }
  }
}

}  // namespace trirep
