#pragma once

// Building blocks: disjoint triangles, spheres, tunnels, and the
// perfect-matching gadgets (pyramid, closed tunnel, matching edge, matching
// triangle, chain).
//
// Every octahedron here is described by two antipodal faces X = (x0,x1,x2)
// and Y = (y0,y1,y2) with x_i opposite y_i. Its other six faces form the
// tunnel band: three faces sharing an edge with X and three sharing an edge
// with Y. A perfect matching of the octahedron is one of its two face-colour
// classes, {X} + Y-side band or {Y} + X-side band.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trirep/complex.hpp"
#include "trirep/error.hpp"

namespace trirep {

using Triple = std::array<Vertex, 3>;

/// A configuration with named triangles and named perfect matchings.
struct LabeledGadget {
  TriangularConfiguration config;
  std::map<std::string, std::size_t> ports;
  std::map<std::string, std::vector<std::size_t>> canonical_matchings;

  std::size_t port(const std::string& name) const {
    auto it = ports.find(name);
    require(it != ports.end(), Errc::contract, "gadget has no port '" + name + "'");
    return it->second;
  }
  const Triangle& port_triangle(const std::string& name) const { return config.triangle(port(name)); }
};

namespace detail {

inline std::vector<std::size_t> indices_in(const TriangularConfiguration& host, const std::vector<Triangle>& ts) {
  std::vector<std::size_t> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(host.require_index(t));
  std::sort(out.begin(), out.end());
  return out;
}

inline void append(std::vector<Triangle>& dst, const std::vector<Triangle>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace detail

struct TunnelBand {
  std::array<Triangle, 3> near_first;   // each shares an edge with the first end
  std::array<Triangle, 3> near_second;  // each shares an edge with the second end

  std::vector<Triangle> all() const {
    return {near_first[0], near_first[1], near_first[2], near_second[0], near_second[1], near_second[2]};
  }
};

/// The six side faces of the octahedron spanned by two vertex-disjoint
/// triangles; the ends are paired positionally (x_i opposite y_i).
inline TunnelBand tunnel_band(const Triple& x, const Triple& y) {
  return TunnelBand{
      {Triangle::make(x[0], x[1], y[2]), Triangle::make(x[0], x[2], y[1]), Triangle::make(x[1], x[2], y[0])},
      {Triangle::make(y[1], y[2], x[0]), Triangle::make(y[0], y[2], x[1]), Triangle::make(y[0], y[1], x[2])},
  };
}

inline LabeledGadget disjoint_triangles(std::size_t n, VertexAllocator& alloc) {
  std::vector<Triangle> ts;
  for (std::size_t j = 0; j < n; ++j) ts.push_back(Triangle::make(alloc.fresh_triple()));
  LabeledGadget g{TriangularConfiguration::from_triangles(ts), {}, {}};
  for (std::size_t j = 0; j < n; ++j) g.ports["B" + std::to_string(j + 1)] = j;
  return g;
}

inline LabeledGadget disjoint_triangles(std::size_t n) {
  VertexAllocator alloc;
  return disjoint_triangles(n, alloc);
}

/// Triangulated 2-sphere with m faces: the tetrahedron for m = 4, otherwise
/// the bipyramid over an (m/2)-gon (top fan first, then bottom fan).
inline LabeledGadget sphere(std::size_t m, VertexAllocator& alloc) {
  require(m >= 4 && m % 2 == 0, Errc::contract, "sphere needs an even face count >= 4, got " + std::to_string(m));
  std::vector<Triangle> ts;
  if (m == 4) {
    const Vertex a = alloc.fresh(), b = alloc.fresh(), c = alloc.fresh(), d = alloc.fresh();
    ts = {Triangle::make(a, b, c), Triangle::make(a, b, d), Triangle::make(a, c, d), Triangle::make(b, c, d)};
  } else {
    const std::size_t k = m / 2;
    std::vector<Vertex> ring(k);
    for (auto& v : ring) v = alloc.fresh();
    const Vertex top = alloc.fresh(), bottom = alloc.fresh();
    for (Vertex apex : {top, bottom}) {
      for (std::size_t i = 0; i < k; ++i) ts.push_back(Triangle::make(apex, ring[i], ring[(i + 1) % k]));
    }
  }
  LabeledGadget g{TriangularConfiguration::from_triangles(ts), {}, {}};
  for (std::size_t j = 0; j < m; ++j) g.ports["S" + std::to_string(j + 1)] = j;
  return g;
}

inline LabeledGadget sphere(std::size_t m) {
  VertexAllocator alloc;
  return sphere(m, alloc);
}

/// Glues a tunnel band between two vertex-disjoint triangles of `host`.
/// No vertices are added; t1 and t2 stay in the result.
inline TriangularConfiguration join(const TriangularConfiguration& host, const Triangle& t1, const Triangle& t2) {
  require(host.contains(t1) && host.contains(t2), Errc::contract, "join: both triangles must belong to the configuration");
  require(!t1.shares_vertex_with(t2), Errc::contract, "join: triangles " + t1.to_string() + " and " + t2.to_string() + " are not disjoint");
  const auto band = tunnel_band(t1.v, t2.v);
  return unite(host, TriangularConfiguration::from_triangles(band.all()));
}

/// Octahedron with antipodal ending triangles t1, t2. Faces are listed
/// t1, s1..s3 (neighbours of t1), s4..s6 (neighbours of t2), t2.
inline LabeledGadget closed_tunnel(const Triple& first, const Triple& second) {
  const auto band = tunnel_band(first, second);
  const Triangle t1 = Triangle::make(first), t2 = Triangle::make(second);
  std::vector<Triangle> ts{t1};
  for (const auto& s : band.near_first) ts.push_back(s);
  for (const auto& s : band.near_second) ts.push_back(s);
  ts.push_back(t2);
  LabeledGadget g{TriangularConfiguration::from_triangles(ts), {{"t1", 0}, {"t2", 7}}, {}};
  for (std::size_t s = 1; s <= 6; ++s) g.ports["s" + std::to_string(s)] = s;
  g.canonical_matchings["N_t1"] = {0, 4, 5, 6};
  g.canonical_matchings["N_t2"] = {1, 2, 3, 7};
  return g;
}

inline LabeledGadget closed_tunnel() {
  VertexAllocator alloc;
  const Triple a = alloc.fresh_triple();
  const Triple b = alloc.fresh_triple();
  return closed_tunnel(a, b);
}

/// Octahedron on v with opposite pairs (v0,v3), (v1,v4), (v2,v5). Faces t1..t8
/// alternate between the two colour classes {t1,t3,t5,t7} and {t2,t4,t6,t8};
/// t(2k) is the antipode of t(2k-1).
inline std::array<Triple, 8> pyramid_faces(const std::array<Vertex, 6>& v) {
  return {{
      {v[0], v[1], v[2]}, {v[3], v[4], v[5]},  // t1, t2
      {v[0], v[4], v[5]}, {v[3], v[1], v[2]},  // t3, t4
      {v[3], v[1], v[5]}, {v[0], v[4], v[2]},  // t5, t6
      {v[3], v[4], v[2]}, {v[0], v[1], v[5]},  // t7, t8
  }};
}

inline LabeledGadget pyramid(VertexAllocator& alloc) {
  std::array<Vertex, 6> v{};
  for (auto& x : v) x = alloc.fresh();
  const auto faces = pyramid_faces(v);
  std::vector<Triangle> ts;
  for (const auto& f : faces) ts.push_back(Triangle::make(f));
  LabeledGadget g{TriangularConfiguration::from_triangles(ts), {}, {}};
  for (std::size_t i = 0; i < 8; ++i) g.ports["t" + std::to_string(i + 1)] = i;
  g.canonical_matchings["odd"] = {0, 2, 4, 6};
  g.canonical_matchings["even"] = {1, 3, 5, 7};
  return g;
}

inline LabeledGadget pyramid() {
  VertexAllocator alloc;
  return pyramid(alloc);
}

/// A pyramid with closed tunnels glued onto faces t1, t3 (and t5), combined by
/// symmetric difference so each glued face cancels out. The far ending
/// triangles of the tunnels are the ports.
///
/// Two perfect matchings exist once the port faces are present:
///   ports_in:  the port faces, the pyramid-side band faces, and the remaining
///              odd pyramid faces;
///   ports_out: the even pyramid faces t2,t4,t6,t8 and the port-side band faces.
/// With empty ports (faces removed) `covering` = ports_out covers every port
/// edge, `idle` = ports_in minus the ports covers none of them.
struct PortGadget {
  std::vector<Triangle> triangles;  // including port faces
  std::vector<Triangle> port_faces;
  std::vector<Triangle> covering;
  std::vector<Triangle> idle;
  Triangle weight_face;  // pyramid t2, the smallest-index pyramid face of `covering`

  std::vector<Triangle> without_ports() const {
    std::vector<Triangle> out;
    for (const auto& t : triangles) {
      if (std::find(port_faces.begin(), port_faces.end(), t) == port_faces.end()) out.push_back(t);
    }
    return out;
  }
};

inline PortGadget pyramid_with_tunnels(const std::vector<Triple>& ports, VertexAllocator& alloc) {
  require(ports.size() == 2 || ports.size() == 3, Errc::contract, "pyramid gadgets take two or three ports");
  std::array<Vertex, 6> v{};
  for (auto& x : v) x = alloc.fresh();
  const auto faces = pyramid_faces(v);
  const std::array<std::size_t, 3> glued{0, 2, 4};  // t1, t3, t5

  std::vector<Triangle> pyr;
  for (const auto& f : faces) pyr.push_back(Triangle::make(f));
  TriangularConfiguration acc = TriangularConfiguration::from_triangles(pyr);

  PortGadget g;
  for (std::size_t k = 0; k < ports.size(); ++k) {
    const LabeledGadget tunnel = closed_tunnel(faces[glued[k]], ports[k]);
    acc = symmetric_difference(acc, tunnel.config);
    const auto band = tunnel_band(faces[glued[k]], ports[k]);
    g.port_faces.push_back(Triangle::make(ports[k]));
    for (const auto& s : band.near_second) g.covering.push_back(s);
    for (const auto& s : band.near_first) g.idle.push_back(s);
  }
  for (std::size_t i : {1, 3, 5, 7}) g.covering.push_back(pyr[i]);
  for (std::size_t i = 2 * ports.size(); i < 8; i += 2) g.idle.push_back(pyr[i]);
  g.weight_face = pyr[1];
  g.triangles.assign(acc.triangles().begin(), acc.triangles().end());
  return g;
}

namespace detail {

inline LabeledGadget label_port_gadget(const PortGadget& pg, const std::vector<std::string>& names) {
  LabeledGadget g{TriangularConfiguration::from_triangles(pg.triangles), {}, {}};
  for (std::size_t k = 0; k < names.size(); ++k) g.ports[names[k]] = g.config.require_index(pg.port_faces[k]);
  std::vector<Triangle> with_ports = pg.idle;
  append(with_ports, pg.port_faces);
  g.canonical_matchings["N1"] = indices_in(g.config, with_ports);
  g.canonical_matchings["N0"] = indices_in(g.config, pg.covering);
  return g;
}

}  // namespace detail

/// E_pq: exactly two perfect matchings, N1 containing both p and q and N0 containing neither.
inline LabeledGadget matching_edge(VertexAllocator& alloc) {
  const Triple p = alloc.fresh_triple();
  const Triple q = alloc.fresh_triple();
  return detail::label_port_gadget(pyramid_with_tunnels({p, q}, alloc), {"p", "q"});
}

inline LabeledGadget matching_edge() {
  VertexAllocator alloc;
  return matching_edge(alloc);
}

/// T_pqr: exactly two perfect matchings, N1 containing p, q, r and N0 none of them.
inline LabeledGadget matching_triangle(VertexAllocator& alloc) {
  const Triple p = alloc.fresh_triple();
  const Triple q = alloc.fresh_triple();
  const Triple r = alloc.fresh_triple();
  return detail::label_port_gadget(pyramid_with_tunnels({p, q, r}, alloc), {"p", "q", "r"});
}

inline LabeledGadget matching_triangle() {
  VertexAllocator alloc;
  return matching_triangle(alloc);
}

/// One matching edge inside a chain. Endpoint indices below n are the
/// external ports t_1..t_n; n + i is the internal empty triangle t'_{i+1}.
struct ChainLink {
  std::size_t from;
  std::size_t to;
  PortGadget gadget;
};

/// The chain gadget C_{t1..tn} with every port face removed: matching edges
/// t_i-t'_i, t_i-t'_{i-1} and t'_i-t'_{i+1} over fresh internal triangles t'_i.
struct ChainParts {
  std::size_t arity = 0;
  std::vector<Triple> internal;
  std::vector<ChainLink> links;

  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    for (const auto& l : links) detail::append(out, l.gadget.without_ports());
    return out;
  }
};

inline ChainParts chain_parts(const std::vector<Triple>& ports, VertexAllocator& alloc) {
  const std::size_t n = ports.size();
  require(n >= 1, Errc::contract, "chain needs at least one port");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      require(!Triangle::make(ports[i]).shares_vertex_with(Triangle::make(ports[j])), Errc::contract,
              "chain ports " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not disjoint");
    }
  }
  ChainParts c;
  c.arity = n;
  for (std::size_t i = 0; i < n; ++i) c.internal.push_back(alloc.fresh_triple());
  auto endpoint = [&](std::size_t id) { return id < n ? ports[id] : c.internal[id - n]; };
  auto add = [&](std::size_t a, std::size_t b) {
    c.links.push_back({a, b, pyramid_with_tunnels({endpoint(a), endpoint(b)}, alloc)});
  };
  for (std::size_t i = 0; i < n; ++i) add(i, n + i);
  for (std::size_t i = 1; i < n; ++i) add(i, n + i - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) add(n + i, n + i + 1);
  return c;
}

/// Which links of a chain are active when the external ports flagged in
/// `taken` are covered from outside. The internal triangles and the remaining
/// ports are then matched by the links; a solution exists iff the number of
/// taken ports is even, and it is unique.
inline std::optional<std::vector<bool>> chain_link_states(const std::vector<bool>& taken) {
  const std::size_t n = taken.size();
  require(n >= 1, Errc::contract, "chain needs at least one port");
  std::vector<bool> on(3 * n - 2, false);
  const auto direct = [](std::size_t i) { return i; };                     // t_i-t'_i
  const auto back = [n](std::size_t i) { return n + i - 1; };              // t_i-t'_{i-1}, i >= 1
  const auto spine = [n](std::size_t i) { return 2 * n - 1 + i - 1; };     // t'_{i-1}-t'_i, i >= 1
  bool pending = false;  // t'_{i-1} still unmatched
  for (std::size_t i = 0; i < n; ++i) {
    if (!pending && !taken[i]) {
      on[direct(i)] = true;
    } else if (!pending && taken[i]) {
      pending = true;
    } else if (pending && !taken[i]) {
      on[back(i)] = true;
    } else {
      on[spine(i)] = true;
      pending = false;
    }
  }
  if (pending) return std::nullopt;
  return on;
}

/// Standalone chain, with the external port faces t1..tn present. The
/// canonical matchings are the 2^(n-1) matchings named by their port set,
/// e.g. "I={}" or "I={1,3}".
inline LabeledGadget chain(std::size_t n, VertexAllocator& alloc) {
  std::vector<Triple> ports;
  for (std::size_t i = 0; i < n; ++i) ports.push_back(alloc.fresh_triple());
  const ChainParts parts = chain_parts(ports, alloc);
  std::vector<Triangle> ts = parts.triangles();
  for (const auto& p : ports) ts.push_back(Triangle::make(p));
  LabeledGadget g{TriangularConfiguration::from_triangles(ts), {}, {}};
  for (std::size_t i = 0; i < n; ++i) g.ports["t" + std::to_string(i + 1)] = g.config.require_index(Triangle::make(ports[i]));

  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> taken(n);
    std::string name = "I={";
    std::vector<Triangle> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      taken[i] = ((mask >> i) & 1U) != 0;
      if (taken[i]) {
        name += (chosen.empty() ? "" : ",") + std::to_string(i + 1);
        chosen.push_back(Triangle::make(ports[i]));
      }
    }
    name += "}";
    const auto states = chain_link_states(taken);
    if (!states) continue;
    for (std::size_t k = 0; k < parts.links.size(); ++k) {
      detail::append(chosen, (*states)[k] ? parts.links[k].gadget.covering : parts.links[k].gadget.idle);
    }
    g.canonical_matchings[name] = detail::indices_in(g.config, chosen);
  }
  return g;
}

inline LabeledGadget chain(std::size_t n) {
  VertexAllocator alloc;
  return chain(n, alloc);
}

}  // namespace trirep
