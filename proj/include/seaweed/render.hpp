#pragma once

#include "seaweed/meander.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace seaweed {

enum class Format { ascii, svg };

inline Format parse_format(const std::string& text) {
  if (text == "ascii") return Format::ascii;
  if (text == "svg") return Format::svg;
  throw ParseError("unknown format '" + text + "'");
}

inline constexpr std::size_t default_render_bound = 10000;

// SEAWEED_MAX_RENDER overrides the default bound.
inline std::size_t render_bound() {
  if (const char* env = std::getenv("SEAWEED_MAX_RENDER")) {
    try {
      return to_size(from_string<long long>(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("bad SEAWEED_MAX_RENDER value '") + env + "'");
    }
  }
  return default_render_bound;
}

namespace detail {

struct LeveledArc {
  Arc arc;
  std::size_t level = 1;
  bool crossed = false;
};

inline bool is_crossed(const Meander& g, Side side, const Arc& a) {
  if (!g.crossed || g.crossed_side != side) return false;
  return (*g.crossed)[0] == a || (*g.crossed)[1] == a;
}

// Nesting depth: one more than the deepest arc strictly inside.
inline std::vector<LeveledArc> leveled(const Meander& g, Side side) {
  std::vector<LeveledArc> out;
  for (const auto& a : g.arcs(side)) out.push_back({a, 1, is_crossed(g, side, a)});
  std::sort(out.begin(), out.end(), [](const LeveledArc& x, const LeveledArc& y) {
    return x.arc.second - x.arc.first < y.arc.second - y.arc.first;
  });
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out[j].arc.first > out[i].arc.first && out[j].arc.second < out[i].arc.second)
        out[i].level = std::max(out[i].level, out[j].level + 1);
  std::sort(out.begin(), out.end(), [](const LeveledArc& x, const LeveledArc& y) { return x.arc < y.arc; });
  return out;
}

inline std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

inline std::string number(double v) {
  char buf[32];
  if (v == static_cast<long long>(v))
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  else
    std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace detail

inline void check_render_bound(const Meander& g, std::size_t bound) {
  if (g.vertex_count > bound)
    throw BoundError("meander has " + std::to_string(g.vertex_count) + " vertices, rendering bound is " +
                     std::to_string(bound) + " (set SEAWEED_MAX_RENDER to raise it)");
}

// Vertices '.', arcs as '+--+' with '|' legs; crossed arcs use '='.
inline std::string render_ascii(const Meander& g, std::size_t bound = default_render_bound) {
  check_render_bound(g, bound);
  const std::size_t m = g.vertex_count;
  const std::size_t width = m == 0 ? 0 : 2 * m - 1;
  auto col = [](std::size_t x) { return 2 * (x - 1); };

  auto draw = [&](Side side) {
    auto arcs = detail::leveled(g, side);
    std::size_t depth = 0;
    for (const auto& a : arcs) depth = std::max(depth, a.level);
    std::vector<std::string> rows(depth, std::string(width, ' '));
    for (const auto& a : arcs) {
      auto& row = rows[a.level - 1];
      for (std::size_t c = col(a.arc.first) + 1; c < col(a.arc.second); ++c)
        if (row[c] == ' ') row[c] = a.crossed ? '=' : '-';
      row[col(a.arc.first)] = '+';
      row[col(a.arc.second)] = '+';
      for (std::size_t l = 0; l + 1 < a.level; ++l) {
        rows[l][col(a.arc.first)] = '|';
        rows[l][col(a.arc.second)] = '|';
      }
    }
    return rows;
  };

  std::string line(width, ' ');
  for (std::size_t x = 1; x <= m; ++x) line[col(x)] = '.';
  if (g.symmetric() && m >= 2) line[col(m / 2) + 1] = ':';

  std::string out;
  auto upper = draw(Side::top);
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out += detail::rtrim(*it) + "\n";
  out += detail::rtrim(line) + "\n";
  for (const auto& row : draw(Side::bottom)) out += detail::rtrim(row) + "\n";
  return out;
}

inline std::string render_svg(const Meander& g, double unit = 24, std::size_t bound = default_render_bound) {
  check_render_bound(g, bound);
  using detail::number;
  const std::size_t m = g.vertex_count;
  auto reach = [&](Side side) {
    double r = 0;
    for (const auto& a : g.arcs(side)) r = std::max(r, (a.second - a.first) * unit / 2);
    return r;
  };
  const double up = reach(Side::top);
  const double down = reach(Side::bottom);
  const double width = (m + 1) * unit;
  const double height = up + down + 2 * unit;
  const double y0 = unit + up;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + number(width) + "\" height=\"" +
         number(height) + "\" viewBox=\"0 0 " + number(width) + " " + number(height) + "\">\n";
  out += "<title>" + g.origin + "</title>\n";
  if (g.symmetric()) {
    double x = (m + 1) * unit / 2;
    out += "<line class=\"axis\" x1=\"" + number(x) + "\" y1=\"0\" x2=\"" + number(x) + "\" y2=\"" + number(height) +
           "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  for (Side side : {Side::top, Side::bottom}) {
    for (const auto& a : detail::leveled(g, side)) {
      double x1 = a.arc.first * unit;
      double x2 = a.arc.second * unit;
      double r = (x2 - x1) / 2;
      std::string cls = std::string("arc ") + side_name(side) + (a.crossed ? " crossed" : "");
      out += "<path class=\"" + cls + "\" data-from=\"" + std::to_string(a.arc.first) + "\" data-to=\"" +
             std::to_string(a.arc.second) + "\" d=\"M " + number(x1) + " " + number(y0) + " A " + number(r) + " " +
             number(r) + " 0 0 " + (side == Side::top ? "1" : "0") + " " + number(x2) + " " + number(y0) +
             "\" fill=\"none\" stroke=\"" + (a.crossed ? "crimson" : "black") + "\"/>\n";
    }
  }
  for (std::size_t x = 1; x <= m; ++x)
    out += "<circle class=\"vertex\" data-v=\"" + std::to_string(x) + "\" cx=\"" + number(x * unit) + "\" cy=\"" +
           number(y0) + "\" r=\"3\"/>\n";
  out += "</svg>\n";
  return out;
}

inline std::string render(const Meander& g, Format format, std::size_t bound = default_render_bound) {
  return format == Format::svg ? render_svg(g, 24, bound) : render_ascii(g, bound);
}

}  // namespace seaweed
