#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/reduction.hpp"

#include <catch_amalgamated.hpp>

using namespace seaweed;

namespace {

using L = long long;

SeaweedSpec<L> spec(const char* text) { return parse_spec<L>(text); }

}  // namespace

TEST_CASE("dimensions") {
  CHECK(oracle_dim(spec("A:2:1,1|2")) == 3);
  CHECK(oracle_dim(spec("C:1:-|-")) == 3);
  for (L n = 1; n <= 4; ++n) {
    CHECK(oracle_dim(make_spec<L>(Algebra::A, n, {n}, {n})) == static_cast<std::size_t>(n * n));
    CHECK(oracle_dim(make_spec<L>(Algebra::D, n, Composition<L>(), Composition<L>())) == static_cast<std::size_t>(n * (2 * n - 1)));
    CHECK(oracle_dim(make_spec<L>(Algebra::C, n, Composition<L>(), Composition<L>())) == static_cast<std::size_t>(n * (2 * n + 1)));
    CHECK(oracle_dim(make_spec<L>(Algebra::B, n, Composition<L>(), Composition<L>())) == static_cast<std::size_t>(n * (2 * n + 1)));
  }
}

TEST_CASE("dimension of the type A figure") {
  // Positions (p, q) allowed by both staircases: block(p) <= block(q) for the top flag, >= for the bottom one.
  const std::vector<int> top{0, 0, 1, 1, 1, 1, 2, 2, 2}, bottom{0, 0, 0, 0, 0, 1, 1, 2, 2};
  std::size_t count = 0;
  for (int p = 0; p < 9; ++p)
    for (int q = 0; q < 9; ++q) count += top[p] <= top[q] && bottom[p] >= bottom[q];
  CHECK(oracle_dim(spec("A:9:2,4,3|5,2,2")) == count);
}

TEST_CASE("basis satisfies the form") {
  for (const char* text : {"B:2:1|2", "C:3:1,2|2", "D:3:3|2", "D:3:2|3"}) {
    auto g = realize(spec(text));
    const std::size_t m = g.m;
    for (const auto& x : g.basis) {
      std::vector<L> X(m * m, 0);
      for (const auto& e : x) X[e.row * m + e.col] = e.value;
      const bool symplectic = text[0] == 'C';
      auto J = [&](std::size_t i, std::size_t j) -> L {
        if (i + j != m - 1) return 0;
        return symplectic && i >= m / 2 ? -1 : 1;
      };
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          L v = 0;
          for (std::size_t k = 0; k < m; ++k) v += X[k * m + i] * J(k, j) + J(i, k) * X[k * m + j];
          CHECK(v == 0);
        }
    }
  }
}

TEST_CASE("small indices") {
  CHECK(oracle_index(spec("C:1:-|-")).index == 1);
  CHECK(oracle_index(spec("A:2:1,1|2")).index == 1);
  CHECK(oracle_index(spec("C:2:2|1")).index == 0);
  CHECK(oracle_index(spec("D:2:2|1")).index == 0);
  auto r = oracle_index(spec("A:9:2,4,3|5,2,2"));
  CHECK(r.index == 3);
  CHECK(r.trials == 3);
  CHECK(r.prime == oracle_prime);
  for (auto rank : r.ranks) {
    CHECK(rank % 2 == 0);
    CHECK(rank <= r.dim);
  }
}

TEST_CASE("exact mode") {
  for (const char* text : {"C:3:1,2|2", "D:4:4|3", "D:3:3|-", "A:4:1,3|2,2"}) {
    auto modp = oracle_index(spec(text));
    auto exact = oracle_index(spec(text), 2, 5, 0);
    CHECK(exact.prime == 0);
    CHECK(modp.index == exact.index);
  }
}

TEST_CASE("D (n | n-1) pins the flag convention") {
  for (L n = 1; n <= 5; ++n)
    for (const auto& s : enumerate_specs<L>(Algebra::C, static_cast<int>(n))) {
      if (!s.bottom.empty()) continue;
      L expected = n - s.top.total();
      for (auto a : s.top.blocks()) expected += a / 2;
      CHECK(oracle_index(s).index == expected);
    }
}

TEST_CASE("oracle agrees with the meander") {
  const int max_n[] = {6, 3, 4, 4};
  for (Algebra t : {Algebra::A, Algebra::B, Algebra::C, Algebra::D})
    for (int n = 1; n <= max_n[static_cast<int>(t)]; ++n)
      for (const auto& s : enumerate_specs<L>(t, n)) {
        INFO(format_spec(s));
        CHECK(oracle_index(s, 3, 0, oracle_prime, RealizeOptions{24, n <= 3}).index == meander_index(s));
      }
}

TEST_CASE("more trials never lower the rank") {
  auto s = spec("D:5:2,3|4");
  auto few = oracle_index(s, 1, 7);
  auto many = oracle_index(s, 4, 7);
  CHECK(many.ranks.front() == few.ranks.front());
  CHECK(many.index <= few.index);
}

TEST_CASE("swap invariance") {
  for (const char* text : {"C:4:1,3|2,1", "D:4:3,1|2", "B:3:2|1,1"}) {
    auto s = spec(text);
    auto t = make_spec(s.type, s.n, s.bottom, s.top);
    CHECK(oracle_index(s).index == oracle_index(t).index);
  }
}

TEST_CASE("oracle errors") {
  CHECK_THROWS_AS(realize(spec("C:13:-|-")), BoundError);
  CHECK_NOTHROW(realize(spec("C:13:-|-"), RealizeOptions{26, false}));
  CHECK_THROWS(oracle_index(spec("C:1:-|-"), 0));
  CHECK_THROWS(oracle_index(spec("C:1:-|-"), 1, 0, 7));
}
