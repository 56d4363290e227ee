#include "seaweed/render.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <regex>

using namespace seaweed;

namespace {

Meander graph(const char* text) { return build(parse_spec<long long>(text)); }

// (class, from, to) for every arc path.
std::vector<std::tuple<std::string, std::size_t, std::size_t>> svg_arcs(const std::string& svg) {
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
  std::regex path(R"re(<path class="arc ([a-z ]+)" data-from="(\d+)" data-to="(\d+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator(); ++it)
    out.emplace_back((*it)[1], std::stoul((*it)[2]), std::stoul((*it)[3]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ascii single vertex") { CHECK(render_ascii(graph("A:1:1|1")) == ".\n"); }

TEST_CASE("ascii sp(2)") { CHECK(render_ascii(graph("C:1:-|-")) == "+-+\n.:.\n+-+\n"); }

TEST_CASE("ascii type A figure") {
  const std::string expected =
      "+-------+\n"
      "| +---+ | +-+ +-+\n"
      ". . . . . . . . .\n"
      "+-+ | +-+ | +---+\n"
      "    +-----+\n";
  CHECK(render_ascii(graph("A:9:2,4,3|5,2,2")) == expected);
}

TEST_CASE("ascii marks crossed arcs") {
  auto text = render_ascii(graph("D:10:1,6,3|3,2,4"));
  CHECK(text.find('=') != std::string::npos);
  CHECK(render_ascii(graph("D:8:2,5|1,4")).find('=') == std::string::npos);
}

TEST_CASE("svg arcs of the symplectic figure") {
  auto svg = render_svg(graph("C:5:2,3|3,1"));
  using T = std::tuple<std::string, std::size_t, std::size_t>;
  std::vector<T> expected{{"bottom", 1, 2}, {"bottom", 3, 5}, {"bottom", 6, 8}, {"bottom", 9, 10},
                          {"top", 1, 3},    {"top", 5, 6},    {"top", 8, 10}};
  CHECK(svg_arcs(svg) == expected);
  CHECK(svg.find("class=\"axis\"") != std::string::npos);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg crossed arcs") {
  auto arcs = svg_arcs(render_svg(graph("D:10:1,6,3|3,2,4")));
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> crossed;
  for (const auto& a : arcs)
    if (std::get<0>(a) == "bottom crossed") crossed.push_back(a);
  REQUIRE(crossed.size() == 2);
  CHECK(std::get<1>(crossed[0]) == 8);
  CHECK(std::get<2>(crossed[0]) == 11);
  CHECK(std::get<1>(crossed[1]) == 10);
  CHECK(std::get<2>(crossed[1]) == 13);
}

TEST_CASE("type A has no axis") { CHECK(render_svg(graph("A:3:1,2|3")).find("axis") == std::string::npos); }

TEST_CASE("rendering is deterministic") {
  for (const char* s : {"A:9:2,4,3|5,2,2", "C:5:2,3|3,1", "D:10:1,6,3|3,2,4", "D:5:4|5"}) {
    CHECK(render_svg(graph(s)) == render_svg(graph(s)));
    CHECK(render_ascii(graph(s)) == render_ascii(graph(s)));
  }
}

TEST_CASE("render bound") {
  Meander g = graph("C:50:1|1");
  CHECK_THROWS_AS(render(g, Format::svg, 99), BoundError);
  CHECK_NOTHROW(render(g, Format::svg, 100));
  CHECK(parse_format("svg") == Format::svg);
  CHECK_THROWS(parse_format("png"));
  ::setenv("SEAWEED_MAX_RENDER", "7", 1);
  CHECK(render_bound() == 7);
  ::setenv("SEAWEED_MAX_RENDER", "lots", 1);
  CHECK_THROWS(render_bound());
  ::unsetenv("SEAWEED_MAX_RENDER");
  CHECK(render_bound() == default_render_bound);
}
