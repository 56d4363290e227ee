#pragma once

#include "seaweed/core.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seaweed {

inline constexpr std::size_t default_meander_bound = std::size_t(1) << 26;

using Arc = std::pair<std::size_t, std::size_t>;

// Vertices 1..m; arc arrays are involutions, x maps to itself when no arc.
struct Meander {
  Algebra type = Algebra::A;
  std::size_t n = 0;
  std::size_t top_total = 0;
  std::size_t bottom_total = 0;
  std::size_t vertex_count = 0;
  std::vector<std::size_t> top_arc;
  std::vector<std::size_t> bottom_arc;
  std::optional<std::array<Arc, 2>> crossed;
  Side crossed_side = Side::bottom;
  std::string origin;

  bool symmetric() const { return type != Algebra::A; }
  std::size_t sigma(std::size_t x) const { return vertex_count + 1 - x; }

  std::vector<Arc> arcs(Side side) const {
    const auto& arc = side == Side::top ? top_arc : bottom_arc;
    std::vector<Arc> out;
    for (std::size_t x = 1; x <= vertex_count; ++x)
      if (arc[x] > x) out.emplace_back(x, arc[x]);
    return out;
  }
};

enum class Kind { cycle, segment };

struct Component {
  Kind kind = Kind::segment;
  std::vector<std::size_t> vertices;
  bool invariant = false;
};

struct ComponentReport {
  std::vector<Component> components;
  std::size_t cycles = 0;
  std::size_t segments = 0;
  std::size_t invariant_segments = 0;
  std::vector<std::size_t> component_of_vertex;

  std::size_t noninvariant_segments() const { return segments - invariant_segments; }
};

namespace detail {

// theta_a(x) = 2(a_1 + ... + a_{i-1}) + a_i - x + 1 written into arc[offset + x].
inline void theta_into(const std::vector<std::size_t>& blocks, std::vector<std::size_t>& arc) {
  std::size_t start = 0;
  for (std::size_t a : blocks) {
    for (std::size_t x = start + 1; x <= start + a; ++x) arc[x] = 2 * start + a - x + 1;
    start += a;
  }
}

template <Integer Int>
std::vector<std::size_t> machine_blocks(const Composition<Int>& c, std::size_t bound) {
  std::vector<std::size_t> out;
  out.reserve(c.size());
  for (const auto& b : c.blocks()) out.push_back(to_size(b, bound));
  return out;
}

// (a_1, ..., a_k, 2(n - |a|), a_k, ..., a_1) without zero blocks.
inline std::vector<std::size_t> doubled(const std::vector<std::size_t>& a, std::size_t n) {
  std::size_t total = 0;
  for (auto x : a) total += x;
  std::vector<std::size_t> out(a);
  if (n > total) out.push_back(2 * (n - total));
  out.insert(out.end(), a.rbegin(), a.rend());
  return out;
}

inline Meander from_blocks(Algebra type, std::size_t n, const std::vector<std::size_t>& lower,
                           const std::vector<std::size_t>& upper, std::size_t m) {
  Meander g;
  g.type = type;
  g.n = n;
  g.vertex_count = m;
  g.bottom_arc.assign(m + 1, 0);
  g.top_arc.assign(m + 1, 0);
  theta_into(lower, g.bottom_arc);
  theta_into(upper, g.top_arc);
  return g;
}

template <Integer Int>
void check_vertices(const Int& vertices, std::size_t bound) {
  if (vertices > Int(static_cast<long long>(std::min<std::size_t>(bound, 1ULL << 62))))
    throw BoundError("meander needs " + to_string(vertices) + " vertices, bound is " + std::to_string(bound));
}

template <Integer Int>
void check_type(const SeaweedSpec<Int>& spec, std::initializer_list<Algebra> allowed, const char* what) {
  for (auto t : allowed)
    if (spec.type == t) return;
  throw SpecError(std::string(what) + ": unsupported algebra type " + letter(spec.type));
}

}  // namespace detail

template <Integer Int>
Meander build_A(const SeaweedSpec<Int>& spec, std::size_t bound = default_meander_bound) {
  detail::check_type(spec, {Algebra::A}, "build_A");
  detail::check_vertices(spec.n, bound);
  std::size_t n = to_size(spec.n, bound);
  auto g = detail::from_blocks(Algebra::A, n, detail::machine_blocks(spec.top, bound),
                               detail::machine_blocks(spec.bottom, bound), n);
  g.top_total = g.bottom_total = n;
  g.origin = format_spec(spec);
  return g;
}

template <Integer Int>
Meander build_BC(const SeaweedSpec<Int>& spec, std::size_t bound = default_meander_bound) {
  detail::check_type(spec, {Algebra::B, Algebra::C, Algebra::D}, "build_BC");
  detail::check_vertices(Int(2 * spec.n), bound);
  std::size_t n = to_size(spec.n);
  auto a = detail::machine_blocks(spec.top, bound);
  auto b = detail::machine_blocks(spec.bottom, bound);
  auto g = detail::from_blocks(spec.type, n, detail::doubled(a, n), detail::doubled(b, n), 2 * n);
  g.top_total = to_size(spec.top.total());
  g.bottom_total = to_size(spec.bottom.total());
  g.origin = format_spec(spec);
  return g;
}

template <Integer Int>
Meander build_D(const SeaweedSpec<Int>& spec, std::size_t bound = default_meander_bound) {
  detail::check_type(spec, {Algebra::D}, "build_D");
  XiMembership xi = xi_membership(spec);
  if (!xi.in_xi) return build_BC(spec, bound);
  if (xi.full_side == Side::bottom) {
    SeaweedSpec<Int> swapped{spec.type, spec.n, spec.bottom, spec.top};
    Meander g = build_D(swapped, bound);
    std::swap(g.top_arc, g.bottom_arc);
    std::swap(g.top_total, g.bottom_total);
    g.crossed_side = Side::top;
    g.origin = format_spec(spec);
    return g;
  }
  std::vector<Int> widened = spec.bottom.blocks();
  widened.back() += 1;
  SeaweedSpec<Int> host{Algebra::D, spec.n, spec.top, Composition<Int>(widened)};
  Meander g = build_BC(host, bound);
  const std::size_t n = g.n;
  const std::size_t A = to_size(spec.top.prefix(spec.top.size() - 1));
  const std::size_t ak = to_size(spec.top.back());
  auto& arc = g.bottom_arc;
  arc[A + 1] = n + 1;
  arc[n + 1] = A + 1;
  arc[n] = n + ak;
  arc[n + ak] = n;
  g.crossed = std::array<Arc, 2>{Arc{A + 1, n + 1}, Arc{n, n + ak}};
  g.crossed_side = Side::bottom;
  g.bottom_total = to_size(spec.bottom.total());
  g.origin = format_spec(spec);
  return g;
}

template <Integer Int>
Meander build(const SeaweedSpec<Int>& spec, std::size_t bound = default_meander_bound) {
  switch (spec.type) {
    case Algebra::A: return build_A(spec, bound);
    case Algebra::D: return build_D(spec, bound);
    default: return build_BC(spec, bound);
  }
}

inline ComponentReport components(const Meander& g) {
  const std::size_t m = g.vertex_count;
  ComponentReport report;
  report.component_of_vertex.assign(m + 1, 0);
  std::vector<bool> seen(m + 1, false);
  auto has_top = [&](std::size_t x) { return g.top_arc[x] != x; };
  auto has_bottom = [&](std::size_t x) { return g.bottom_arc[x] != x; };

  auto walk = [&](std::size_t start, bool first_top, Component& c) {
    std::size_t x = start;
    bool use_top = first_top;
    while (true) {
      seen[x] = true;
      c.vertices.push_back(x);
      std::size_t y = use_top ? g.top_arc[x] : g.bottom_arc[x];
      if (y == x || y == start) return;
      x = y;
      use_top = !use_top;
    }
  };

  // Segments first, starting from endpoints, then the remaining cycles.
  for (std::size_t v = 1; v <= m; ++v) {
    if (seen[v]) continue;
    if (has_top(v) && has_bottom(v)) continue;
    Component c;
    c.kind = Kind::segment;
    walk(v, has_top(v), c);
    report.components.push_back(std::move(c));
  }
  for (std::size_t v = 1; v <= m; ++v) {
    if (seen[v]) continue;
    Component c;
    c.kind = Kind::cycle;
    walk(v, true, c);
    report.components.push_back(std::move(c));
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t id = 0; id < report.components.size(); ++id) {
    const auto& vs = report.components[id].vertices;
    order.emplace_back(*std::min_element(vs.begin(), vs.end()), id);
  }
  std::sort(order.begin(), order.end());
  std::vector<Component> sorted;
  sorted.reserve(order.size());
  for (const auto& [low, id] : order) sorted.push_back(std::move(report.components[id]));
  report.components = std::move(sorted);
  for (std::size_t id = 0; id < report.components.size(); ++id)
    for (auto x : report.components[id].vertices) report.component_of_vertex[x] = id;
  for (auto& c : report.components) {
    if (c.kind == Kind::cycle) {
      ++report.cycles;
      continue;
    }
    ++report.segments;
    if (g.symmetric()) {
      std::size_t id = report.component_of_vertex[c.vertices.front()];
      c.invariant = report.component_of_vertex[g.sigma(c.vertices.front())] == id;
#ifndef NDEBUG
      for (auto x : c.vertices)
        if ((report.component_of_vertex[g.sigma(x)] == id) != c.invariant)
          throw std::logic_error("inconsistent sigma invariance");
#endif
      if (c.invariant) ++report.invariant_segments;
    }
  }
  return report;
}

// 2 cycles + segments.
inline std::size_t index_A(const ComponentReport& r) { return 2 * r.cycles + r.segments; }

// cycles + non-invariant segments / 2.
inline std::size_t index_BC(const ComponentReport& r) {
  if (r.noninvariant_segments() % 2 != 0) throw std::logic_error("odd number of non-invariant segments");
  return r.cycles + r.noninvariant_segments() / 2;
}

// Whether the arc {n, n+1} exists and belongs to a segment.
inline bool central_arc_in_segment(const Meander& g, const ComponentReport& r) {
  const std::size_t n = g.n;
  if (g.top_arc[n] != n + 1 && g.bottom_arc[n] != n + 1) return false;
  return r.components[r.component_of_vertex[n]].kind == Kind::segment;
}

inline int epsilon_D(const Meander& g, const ComponentReport& r) {
  if (g.crossed) {
    const auto& arcs = *g.crossed;
    std::size_t id = r.component_of_vertex[arcs[0].first];
    bool same_cycle = r.components[id].kind == Kind::cycle && r.component_of_vertex[arcs[1].first] == id;
    return same_cycle ? -1 : 0;
  }
  std::size_t hi = std::max(g.top_total, g.bottom_total);
  std::size_t lo = std::min(g.top_total, g.bottom_total);
  if ((hi - lo) % 2 == 0) return 0;
  if (hi == g.n && central_arc_in_segment(g, r)) return 1;
  return -1;
}

inline long long index_D(const Meander& g, const ComponentReport& r) {
  return static_cast<long long>(index_BC(r)) + epsilon_D(g, r);
}

// Index read off the meander for any type.
inline long long meander_index(const Meander& g) {
  auto r = components(g);
  switch (g.type) {
    case Algebra::A: return static_cast<long long>(index_A(r));
    case Algebra::D: return index_D(g, r);
    default: return static_cast<long long>(index_BC(r));
  }
}

template <Integer Int>
long long meander_index(const SeaweedSpec<Int>& spec, std::size_t bound = default_meander_bound) {
  return meander_index(build(spec, bound));
}

// Type-A index, minus 2 when vertex n lies in a cycle.
inline long long psi_A(const Meander& g) {
  auto r = components(g);
  long long chi = static_cast<long long>(index_A(r));
  return r.components[r.component_of_vertex[g.vertex_count]].kind == Kind::cycle ? chi - 2 : chi;
}

template <Integer Int>
long long psi_A(const SeaweedSpec<Int>& spec, std::size_t bound = default_meander_bound) {
  return psi_A(build_A(spec, bound));
}

}  // namespace seaweed
